#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Low-level reduction and mixing kernels over dense 2^n tables.
// A scalar reference implementation always exists; wider variants are
// selected at runtime from CPU features and must agree with the scalar
// one up to roundoff (see tests/test_kernels.cpp).
namespace hcube::kern {

struct Dispatch {
  const char* name;
  // sum_i w[i]*v[i]
  double (*dot)(const double* w, const double* v, std::size_t len);
  // sum_i w[i]*|v[i]|
  double (*dot_abs)(const double* w, const double* v, std::size_t len);
  // sum_i w[i]*v[i]^2
  double (*dot_sq)(const double* w, const double* v, std::size_t len);
  // sum_i w[i]*sqrt(v[i]), v[i] >= 0
  double (*dot_sqrt)(const double* w, const double* v, std::size_t len);
  // sum_i w[i]
  double (*sum)(const double* w, std::size_t len);
  // sum over i with bit i of `bits` set of w[i]
  double (*masked_sum)(const double* w, const std::uint64_t* bits,
                       std::size_t len);
  // one butterfly pass: for every pair (lo, hi) at distance `stride`,
  //   lo' = c[0]*lo + c[1]*hi,  hi' = c[2]*lo + c[3]*hi
  void (*mix_pass)(double* v, std::size_t len, std::size_t stride,
                   const double c[4]);
};

const Dispatch& scalar();
const Dispatch& active();
bool set_active(std::string_view name);
std::vector<std::string> available();

}  // namespace hcube::kern
