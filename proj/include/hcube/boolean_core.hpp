#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hcube {

inline constexpr int kMaxDim = 24;

// Product measure on {-1,1}^n giving mass p to +1 in each coordinate.
struct BiasedMeasure {
  double p;
  double q;  // 1 - p
  double K;  // 1/(4pq), the log-Sobolev scale factor
  explicit BiasedMeasure(double bias);
  static BiasedMeasure uniform() { return BiasedMeasure(0.5); }
};

// f : {-1,1}^n -> {-1,1} as a packed truth table. Point x is the n-bit
// index whose bit j holds coordinate j (bit set means +1); a set table
// bit means f(x) = +1.
class BooleanFunction {
 public:
  explicit BooleanFunction(int n);
  static BooleanFunction from_table_bits(int n, std::uint64_t table);
  // Text form "n:<dim> hex:<table>", hex LSB first (bit 0 = point 0).
  static BooleanFunction parse(std::string_view text);
  std::string to_text() const;

  int n() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  bool bit(std::size_t x) const {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void set_bit(std::size_t x, bool plus);
  int value(std::size_t x) const { return bit(x) ? 1 : -1; }
  std::size_t ones_count() const;

  const std::uint64_t* words() const { return words_.data(); }
  std::size_t word_count() const { return words_.size(); }

  BooleanFunction negated() const;
  // perm[j] = coordinate of the input point feeding coordinate j of the
  // output point, i.e. g(x) = f(x with bits permuted by perm).
  BooleanFunction permuted(const std::vector<int>& perm) const;

  bool operator==(const BooleanFunction&) const = default;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// Dense real-valued g : {-1,1}^n -> R, same point encoding.
class RealFunction {
 public:
  explicit RealFunction(int n, double fill = 0.0);
  static RealFunction from_boolean(const BooleanFunction& f);

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  double* data() { return values_.data(); }
  const double* data() const { return values_.data(); }
  double& operator[](std::size_t x) { return values_[x]; }
  double operator[](std::size_t x) const { return values_[x]; }

 private:
  int n_;
  std::vector<double> values_;
};

// Dense table of point masses w[x] = p^{ones(x)} q^{n-ones(x)}.
class WeightTable {
 public:
  WeightTable(int n, const BiasedMeasure& m);
  int n() const { return n_; }
  std::size_t size() const { return w_.size(); }
  const double* data() const { return w_.data(); }
  double operator[](std::size_t x) const { return w_[x]; }

 private:
  int n_;
  std::vector<double> w_;
};

double point_weight(std::size_t x, const BiasedMeasure& m, int n);

struct PointStats {
  int sensitivity;       // # coordinates whose flip changes f(x)
  double gradient_norm;  // |grad f|(x) = sqrt(sensitivity)
  int boundary_count;    // h value: sensitivity if f(x) = +1, else 0
};

PointStats point_stats(const BooleanFunction& f, std::size_t x);

// s_f(x) for every point, as doubles (kernel-friendly).
std::vector<double> sensitivity_table(const BooleanFunction& f);

struct Statistics {
  double mean;         // E f
  double variance;     // E f^2 - (E f)^2
  double l1_centered;  // E |f - E f|
  double a;            // mu(f = 1)
};

Statistics statistics(const BooleanFunction& f, const BiasedMeasure& m);

struct Moments {
  double mean;
  double variance;
  double l1_centered;
};

Moments moments(const RealFunction& g, const BiasedMeasure& m);

struct Influences {
  std::vector<double> inf;  // Inf_j(f) = E|f - E_{x_j} f|
  double total;             // sum_j Inf_j
  double W;                 // sum_j Inf_j^2
};

Influences influences(const BooleanFunction& f, const BiasedMeasure& m);
Influences influences(const RealFunction& g, const BiasedMeasure& m);

struct BoundaryProfile {
  double e_grad;        // E |grad f|
  double e_sqrt_h;      // E sqrt(h_f),  h_f = sensitivity restricted to f=1
  double e_sqrt_h_neg;  // E sqrt(h_{-f})
};

// h_f(x) = s_f(x) if f(x) = 1 else 0, so h_f + h_{-f} = |grad f|^2.
BoundaryProfile boundary_profile(const BooleanFunction& f,
                                 const BiasedMeasure& m);

}  // namespace hcube
