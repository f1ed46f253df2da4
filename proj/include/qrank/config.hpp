#pragma once

namespace qrank {

struct EngineConfig {
  /// Largest degree of any P(x^n) the engine will build.
  int max_degree = 256;
  /// Largest prime examined by the hereditary-irreducibility search.
  unsigned long max_prime = 10000;

  /// Reads QRANK_MAX_DEGREE and QRANK_MAX_PRIME, keeping defaults for unset
  /// variables.
  static EngineConfig from_env();
};

}  // namespace qrank
