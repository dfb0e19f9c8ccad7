#include "omega_zeta/kernels.hpp"

namespace omega_zeta::kernels::scalar {

ComplexValue reciprocal_factor_product(ComplexValue w, double shift, int power, long first,
                                       long last) {
  // Accumulate prod (1 - w / p_k) and invert once.
  double acc_re = 1.0;
  double acc_im = 0.0;
  for (long k = first; k <= last; ++k) {
    const double inv = 1.0 / ipow(shift + static_cast<double>(k), power);
    const double f_re = 1.0 - w.real() * inv;
    const double f_im = -w.imag() * inv;
    const double re = acc_re * f_re - acc_im * f_im;
    const double im = acc_re * f_im + acc_im * f_re;
    acc_re = re;
    acc_im = im;
  }
  return 1.0 / ComplexValue(acc_re, acc_im);
}

double inverse_power_sum(double shift, int power, long first, long last) {
  double sum = 0.0;
  for (long k = first; k <= last; ++k) {
    sum += 1.0 / ipow(shift + static_cast<double>(k), power);
  }
  return sum;
}

}  // namespace omega_zeta::kernels::scalar
