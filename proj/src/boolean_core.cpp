#include "hcube/boolean_core.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "hcube/bits.hpp"
#include "hcube/kernels.hpp"

namespace hcube {

BiasedMeasure::BiasedMeasure(double bias) : p(bias), q(1.0 - bias) {
  if (!(bias > 0.0) || !(bias < 1.0))
    throw std::invalid_argument("bias must lie in (0,1)");
  K = 1.0 / (4.0 * p * q);
}

static void check_dim(int n) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
}

BooleanFunction::BooleanFunction(int n) : n_(n) {
  check_dim(n);
  words_.assign((size() + 63) >> 6, 0);
}

BooleanFunction BooleanFunction::from_table_bits(int n, std::uint64_t table) {
  check_dim(n);
  if (n > 6) throw std::invalid_argument("table literal limited to n <= 6");
  if (n < 6 && (table >> (std::size_t{1} << n)) != 0)
    throw std::invalid_argument("table bits beyond 2^n");
  BooleanFunction f(n);
  f.words_[0] = table;
  return f;
}

void BooleanFunction::set_bit(std::size_t x, bool plus) {
  std::uint64_t mask = std::uint64_t{1} << (x & 63);
  if (plus)
    words_[x >> 6] |= mask;
  else
    words_[x >> 6] &= ~mask;
}

std::size_t BooleanFunction::ones_count() const {
  std::size_t c = 0;
  for (auto w : words_) c += bits::popcount(w);
  return c;
}

BooleanFunction BooleanFunction::negated() const {
  BooleanFunction g(n_);
  for (std::size_t w = 0; w < words_.size(); ++w) g.words_[w] = ~words_[w];
  if (n_ < 6) g.words_[0] &= (std::uint64_t{1} << size()) - 1;
  return g;
}

BooleanFunction BooleanFunction::permuted(const std::vector<int>& perm) const {
  if (perm.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> seen(n_, false);
  for (int j : perm) {
    if (j < 0 || j >= n_ || seen[j])
      throw std::invalid_argument("not a permutation");
    seen[j] = true;
  }
  BooleanFunction g(n_);
  for (std::size_t y = 0; y < size(); ++y) {
    std::size_t x = 0;
    for (int j = 0; j < n_; ++j)
      if ((y >> j) & 1u) x |= std::size_t{1} << perm[j];
    g.set_bit(y, bit(x));
  }
  return g;
}

std::string BooleanFunction::to_text() const {
  std::size_t digits = (size() + 3) >> 2;
  std::string hex(digits, '0');
  static const char* kHex = "0123456789abcdef";
  for (std::size_t d = 0; d < digits; ++d) {
    unsigned nib = (words_[(4 * d) >> 6] >> ((4 * d) & 63)) & 0xf;
    hex[digits - 1 - d] = kHex[nib];
  }
  return "n:" + std::to_string(n_) + " hex:" + hex;
}

BooleanFunction BooleanFunction::parse(std::string_view text) {
  auto fail = [] { throw std::invalid_argument("expected \"n:<dim> hex:<table>\""); };
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto expect = [&](std::string_view tok) {
    if (text.substr(i, tok.size()) != tok) fail();
    i += tok.size();
  };
  skip_ws();
  expect("n:");
  int n = 0;
  std::size_t start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    n = n * 10 + (text[i++] - '0');
  if (i == start) fail();
  check_dim(n);
  skip_ws();
  expect("hex:");
  start = i;
  while (i < text.size() && std::isxdigit(static_cast<unsigned char>(text[i]))) ++i;
  std::string_view hex = text.substr(start, i - start);
  skip_ws();
  if (hex.empty() || i != text.size()) fail();

  BooleanFunction f(n);
  std::size_t max_digits = (f.size() + 3) >> 2;
  if (hex.size() > max_digits) throw std::invalid_argument("hex too long for dimension");
  for (std::size_t d = 0; d < hex.size(); ++d) {
    char ch = hex[hex.size() - 1 - d];
    unsigned nib = ch <= '9' ? ch - '0' : (std::tolower(ch) - 'a' + 10);
    f.words_[(4 * d) >> 6] |= std::uint64_t{nib} << ((4 * d) & 63);
  }
  if (n < 6 && (f.words_[0] >> f.size()) != 0)
    throw std::invalid_argument("table bits beyond 2^n");
  return f;
}

RealFunction::RealFunction(int n, double fill) : n_(n) {
  check_dim(n);
  values_.assign(std::size_t{1} << n, fill);
}

RealFunction RealFunction::from_boolean(const BooleanFunction& f) {
  RealFunction g(f.n());
  for (std::size_t x = 0; x < g.size(); ++x) g[x] = f.bit(x) ? 1.0 : -1.0;
  return g;
}

WeightTable::WeightTable(int n, const BiasedMeasure& m) : n_(n) {
  check_dim(n);
  double wpow[kMaxDim + 1];
  wpow[0] = std::pow(m.q, n);
  for (int k = 1; k <= n; ++k) wpow[k] = wpow[k - 1] * (m.p / m.q);
  w_.resize(std::size_t{1} << n);
  for (std::size_t x = 0; x < w_.size(); ++x)
    w_[x] = wpow[bits::popcount(x)];
}

double point_weight(std::size_t x, const BiasedMeasure& m, int n) {
  check_dim(n);
  if (x >> n) throw std::invalid_argument("point out of range");
  int k = bits::popcount(x);
  return std::pow(m.p, k) * std::pow(m.q, n - k);
}

PointStats point_stats(const BooleanFunction& f, std::size_t x) {
  if (x >> f.n()) throw std::invalid_argument("point out of range");
  int s = 0;
  for (int j = 0; j < f.n(); ++j)
    s += f.bit(x) != f.bit(x ^ (std::size_t{1} << j));
  return {s, std::sqrt(static_cast<double>(s)), f.bit(x) ? s : 0};
}

std::vector<double> sensitivity_table(const BooleanFunction& f) {
  std::vector<double> s(f.size(), 0.0);
  std::vector<std::uint64_t> d(f.word_count());
  for (int j = 0; j < f.n(); ++j) {
    bits::coord_diff(f.words(), d.data(), j, d.size());
    for (std::size_t w = 0; w < d.size(); ++w) {
      std::uint64_t bitsw = d[w];
      while (bitsw) {
        int b = std::countr_zero(bitsw);
        s[(w << 6) | b] += 1.0;
        bitsw &= bitsw - 1;
      }
    }
  }
  return s;
}

Statistics statistics(const BooleanFunction& f, const BiasedMeasure& m) {
  WeightTable w(f.n(), m);
  const auto& k = kern::active();
  double a = k.masked_sum(w.data(), f.words(), f.size());
  // constants get exact stats; the weight sum alone can round to 1 - ulp
  std::size_t ones = f.ones_count();
  if (ones == 0) a = 0.0;
  if (ones == f.size()) a = 1.0;
  double mean = 2.0 * a - 1.0;
  double var = 4.0 * a * (1.0 - a);
  double l1 = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x)
    l1 += w[x] * std::fabs(f.value(x) - mean);
  return {mean, var, l1, a};
}

Moments moments(const RealFunction& g, const BiasedMeasure& m) {
  WeightTable w(g.n(), m);
  const auto& k = kern::active();
  double mean = k.dot(w.data(), g.data(), g.size());
  double second = k.dot_sq(w.data(), g.data(), g.size());
  double var = second - mean * mean;
  if (var < 0.0) var = 0.0;
  RealFunction c = g;
  for (std::size_t x = 0; x < c.size(); ++x) c[x] -= mean;
  double l1 = k.dot_abs(w.data(), c.data(), c.size());
  return {mean, var, l1};
}

Influences influences(const BooleanFunction& f, const BiasedMeasure& m) {
  WeightTable w(f.n(), m);
  const auto& k = kern::active();
  Influences out;
  out.inf.resize(f.n());
  out.total = 0.0;
  out.W = 0.0;
  std::vector<std::uint64_t> d(f.word_count()), hi(d.size()), lo(d.size());
  for (int j = 0; j < f.n(); ++j) {
    bits::coord_diff(f.words(), d.data(), j, d.size());
    for (std::size_t wd = 0; wd < d.size(); ++wd) {
      std::uint64_t cm = bits::coord_mask_word(j, wd);
      hi[wd] = d[wd] & cm;
      lo[wd] = d[wd] & ~cm;
    }
    double v = 2.0 * m.q * k.masked_sum(w.data(), hi.data(), f.size()) +
               2.0 * m.p * k.masked_sum(w.data(), lo.data(), f.size());
    out.inf[j] = v;
    out.total += v;
    out.W += v * v;
  }
  return out;
}

Influences influences(const RealFunction& g, const BiasedMeasure& m) {
  WeightTable w(g.n(), m);
  Influences out;
  out.inf.resize(g.n());
  out.total = 0.0;
  out.W = 0.0;
  for (int j = 0; j < g.n(); ++j) {
    const std::size_t stride = std::size_t{1} << j;
    double acc = 0.0;
    for (std::size_t base = 0; base < g.size(); base += 2 * stride) {
      for (std::size_t i = 0; i < stride; ++i) {
        std::size_t xl = base + i, xh = base + stride + i;
        double mean_j = m.q * g[xl] + m.p * g[xh];
        acc += w[xl] * std::fabs(g[xl] - mean_j) +
               w[xh] * std::fabs(g[xh] - mean_j);
      }
    }
    out.inf[j] = acc;
    out.total += acc;
    out.W += acc * acc;
  }
  return out;
}

BoundaryProfile boundary_profile(const BooleanFunction& f,
                                 const BiasedMeasure& m) {
  WeightTable w(f.n(), m);
  const auto& k = kern::active();
  std::vector<double> s = sensitivity_table(f);
  std::vector<double> h(f.size()), hneg(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    h[x] = f.bit(x) ? s[x] : 0.0;
    hneg[x] = s[x] - h[x];
  }
  return {k.dot_sqrt(w.data(), s.data(), f.size()),
          k.dot_sqrt(w.data(), h.data(), f.size()),
          k.dot_sqrt(w.data(), hneg.data(), f.size())};
}

}  // namespace hcube
