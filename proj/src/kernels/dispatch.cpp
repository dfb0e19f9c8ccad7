#include <cstdlib>
#include <string_view>

#include "omega_zeta/kernels.hpp"

namespace omega_zeta::kernels {

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if defined(OMEGA_ZETA_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa chosen = [] {
    const char* env = std::getenv("OMEGA_ZETA_KERNELS");
    if (env != nullptr && std::string_view(env) == "scalar") return Isa::Scalar;
    return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  }();
  return chosen;
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

ComplexValue reciprocal_factor_product(ComplexValue w, double shift, int power, long first,
                                       long last) {
  if (active_isa() == Isa::Avx2) return avx2::reciprocal_factor_product(w, shift, power, first, last);
  return scalar::reciprocal_factor_product(w, shift, power, first, last);
}

double inverse_power_sum(double shift, int power, long first, long last) {
  if (active_isa() == Isa::Avx2) return avx2::inverse_power_sum(shift, power, first, last);
  return scalar::inverse_power_sum(shift, power, first, last);
}

}  // namespace omega_zeta::kernels
