#include "hcube/kernels.hpp"

#include <cmath>

namespace hcube::kern {
namespace {

double dot_ref(const double* w, const double* v, std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) acc += w[i] * v[i];
  return acc;
}

double dot_abs_ref(const double* w, const double* v, std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) acc += w[i] * std::fabs(v[i]);
  return acc;
}

double dot_sq_ref(const double* w, const double* v, std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) acc += w[i] * v[i] * v[i];
  return acc;
}

double dot_sqrt_ref(const double* w, const double* v, std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) acc += w[i] * std::sqrt(v[i]);
  return acc;
}

double sum_ref(const double* w, std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i) acc += w[i];
  return acc;
}

double masked_sum_ref(const double* w, const std::uint64_t* bits,
                      std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i)
    if ((bits[i >> 6] >> (i & 63)) & 1u) acc += w[i];
  return acc;
}

void mix_pass_ref(double* v, std::size_t len, std::size_t stride,
                  const double c[4]) {
  for (std::size_t base = 0; base < len; base += 2 * stride) {
    double* lo = v + base;
    double* hi = v + base + stride;
    for (std::size_t i = 0; i < stride; ++i) {
      double a = lo[i], b = hi[i];
      lo[i] = c[0] * a + c[1] * b;
      hi[i] = c[2] * a + c[3] * b;
    }
  }
}

}  // namespace

const Dispatch& scalar() {
  static const Dispatch d{"scalar",   dot_ref,        dot_abs_ref,
                          dot_sq_ref, dot_sqrt_ref,   sum_ref,
                          masked_sum_ref, mix_pass_ref};
  return d;
}

}  // namespace hcube::kern
