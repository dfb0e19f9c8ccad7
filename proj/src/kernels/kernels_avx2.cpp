#include "omega_zeta/kernels.hpp"

#if defined(OMEGA_ZETA_HAVE_AVX2)
#include <immintrin.h>
#endif

namespace omega_zeta::kernels::avx2 {

#if defined(OMEGA_ZETA_HAVE_AVX2)

namespace {

__m256d ipow4(__m256d base, int exponent) {
  __m256d result = _mm256_set1_pd(1.0);
  while (exponent > 0) {
    if (exponent & 1) result = _mm256_mul_pd(result, base);
    base = _mm256_mul_pd(base, base);
    exponent >>= 1;
  }
  return result;
}

}  // namespace

ComplexValue reciprocal_factor_product(ComplexValue w, double shift, int power, long first,
                                       long last) {
  // Four interleaved partial products (lane l takes k = first + l mod 4),
  // combined in lane order, then the scalar remainder.
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d four = _mm256_set1_pd(4.0);
  const __m256d w_re = _mm256_set1_pd(w.real());
  const __m256d w_im = _mm256_set1_pd(w.imag());
  __m256d base = _mm256_add_pd(_mm256_set1_pd(shift + static_cast<double>(first)),
                               _mm256_setr_pd(0.0, 1.0, 2.0, 3.0));
  __m256d acc_re = one;
  __m256d acc_im = _mm256_setzero_pd();

  long k = first;
  for (; k + 3 <= last; k += 4) {
    const __m256d inv = _mm256_div_pd(one, ipow4(base, power));
    const __m256d f_re = _mm256_fnmadd_pd(w_re, inv, one);
    const __m256d f_im = _mm256_sub_pd(_mm256_setzero_pd(), _mm256_mul_pd(w_im, inv));
    const __m256d re = _mm256_fmsub_pd(acc_re, f_re, _mm256_mul_pd(acc_im, f_im));
    const __m256d im = _mm256_fmadd_pd(acc_re, f_im, _mm256_mul_pd(acc_im, f_re));
    acc_re = re;
    acc_im = im;
    base = _mm256_add_pd(base, four);
  }

  alignas(32) double lanes_re[4];
  alignas(32) double lanes_im[4];
  _mm256_store_pd(lanes_re, acc_re);
  _mm256_store_pd(lanes_im, acc_im);
  ComplexValue acc(lanes_re[0], lanes_im[0]);
  for (int l = 1; l < 4; ++l) acc *= ComplexValue(lanes_re[l], lanes_im[l]);
  for (; k <= last; ++k) {
    const double inv = 1.0 / ipow(shift + static_cast<double>(k), power);
    acc *= ComplexValue(1.0 - w.real() * inv, -w.imag() * inv);
  }
  return 1.0 / acc;
}

double inverse_power_sum(double shift, int power, long first, long last) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d base = _mm256_add_pd(_mm256_set1_pd(shift + static_cast<double>(first)),
                               _mm256_setr_pd(0.0, 1.0, 2.0, 3.0));
  __m256d acc = _mm256_setzero_pd();
  long k = first;
  for (; k + 3 <= last; k += 4) {
    acc = _mm256_add_pd(acc, _mm256_div_pd(one, ipow4(base, power)));
    base = _mm256_add_pd(base, four);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = ((lanes[0] + lanes[1]) + lanes[2]) + lanes[3];
  for (; k <= last; ++k) sum += 1.0 / ipow(shift + static_cast<double>(k), power);
  return sum;
}

#else

ComplexValue reciprocal_factor_product(ComplexValue w, double shift, int power, long first,
                                       long last) {
  return scalar::reciprocal_factor_product(w, shift, power, first, last);
}

double inverse_power_sum(double shift, int power, long first, long last) {
  return scalar::inverse_power_sum(shift, power, first, last);
}

#endif

}  // namespace omega_zeta::kernels::avx2
