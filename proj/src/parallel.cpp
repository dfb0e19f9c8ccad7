#include "omega_zeta/parallel.hpp"

#include <cstdlib>
#include <string>

#include "omega_zeta/errors.hpp"

namespace omega_zeta {

int resolve_threads(std::optional<int> requested) {
  if (requested) {
    if (*requested < 1) throw DomainError("thread count must be >= 1");
    return *requested;
  }
  if (const char* env = std::getenv("OMEGA_ZETA_THREADS")) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("OMEGA_ZETA_THREADS must be a positive integer, got '") + env +
                      "'");
  }
  return 1;
}

}  // namespace omega_zeta
