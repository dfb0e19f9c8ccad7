#pragma once

// Data-parallel inner loops shared by the product and tail-sum routes.
//
// Every kernel has a scalar reference in kernels::scalar and, on x86-64, an
// AVX2/FMA variant in kernels::avx2. The unqualified entry points dispatch to
// the variant chosen once per process by active_isa(). The variants differ
// only in rounding order; tests/test_kernels.cpp pins their equivalence.

#include <string_view>

#include "omega_zeta/complex_special.hpp"

namespace omega_zeta::kernels {

enum class Isa { Scalar, Avx2 };

// True when the variant is compiled in and the CPU supports it.
bool isa_available(Isa isa);

// Chosen on first use: AVX2 when available, unless the environment variable
// OMEGA_ZETA_KERNELS is set to "scalar".
Isa active_isa();

std::string_view isa_name(Isa isa);

// prod_{k=first}^{last} 1 / (1 - w (shift + k)^{-power}); 1 when first > last.
ComplexValue reciprocal_factor_product(ComplexValue w, double shift, int power, long first,
                                       long last);

// sum_{k=first}^{last} (shift + k)^{-power}; 0 when first > last.
double inverse_power_sum(double shift, int power, long first, long last);

namespace scalar {
ComplexValue reciprocal_factor_product(ComplexValue w, double shift, int power, long first,
                                       long last);
double inverse_power_sum(double shift, int power, long first, long last);
}  // namespace scalar

namespace avx2 {
ComplexValue reciprocal_factor_product(ComplexValue w, double shift, int power, long first,
                                       long last);
double inverse_power_sum(double shift, int power, long first, long last);
}  // namespace avx2

}  // namespace omega_zeta::kernels
