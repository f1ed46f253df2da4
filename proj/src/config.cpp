#include "qrank/config.hpp"

#include <cstdlib>
#include <string>

#include "qrank/error.hpp"

namespace qrank {

namespace {

unsigned long read_positive(const char* name, unsigned long fallback) {
  const char* raw = std::getenv(name);
  if (!raw || !*raw) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(raw, &used);
    if (used != std::string(raw).size() || v == 0) throw std::invalid_argument(name);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, std::string(name) + " must be a positive integer, got '" + raw + "'");
  }
}

}  // namespace

EngineConfig EngineConfig::from_env() {
  EngineConfig c;
  c.max_degree = static_cast<int>(read_positive("QRANK_MAX_DEGREE", static_cast<unsigned long>(c.max_degree)));
  c.max_prime = read_positive("QRANK_MAX_PRIME", c.max_prime);
  return c;
}

}  // namespace qrank
