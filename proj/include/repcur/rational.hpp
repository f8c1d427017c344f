#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace repcur {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; values built from strings go through
/// parse_rational, which canonicalizes.
using Rat = mpq_class;

/// n/d in lowest terms. The two-argument mpq_class constructor does not
/// reduce, so Rat(2, 4) != Rat(1, 2); use this instead.
inline Rat make_rat(long n, long d) {
  if (d == 0) throw std::invalid_argument("zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline std::string format_rational(const Rat& q) { return q.get_str(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Parses "3", "-7", "3/2", "+1/4". Anything else (including a zero
/// denominator) throws std::invalid_argument naming the token.
inline Rat parse_rational(std::string_view tok) {
  auto fail = [&] {
    throw std::invalid_argument("malformed rational: '" + std::string(tok) +
                                "'");
  };
  std::string_view s = tok;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) fail();
  std::string num, den;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    if (s[0] == '-') num.push_back('-');
    i = 1;
  }
  size_t digits = 0;
  for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i) {
    num.push_back(s[i]);
    ++digits;
  }
  if (digits == 0) fail();
  if (i < s.size()) {
    if (s[i] != '/') fail();
    ++i;
    for (; i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])); ++i)
      den.push_back(s[i]);
    if (den.empty() || i != s.size()) fail();
  }
  Rat q;
  q.get_num() = mpz_class(num);
  q.get_den() = den.empty() ? mpz_class(1) : mpz_class(den);
  if (q.get_den() == 0) fail();
  q.canonicalize();
  return q;
}

/// Comma-separated rationals: "0,1,3/2".
inline std::vector<Rat> parse_rational_list(std::string_view text) {
  std::vector<Rat> out;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline bool pairwise_distinct(std::span<const Rat> xs) {
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) return false;
  return true;
}

/// Dense univariate polynomial over Q in the variable t, coefficients stored
/// lowest degree first with no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rat& c) { return Poly({c}); }
  static Poly monomial(size_t degree, const Rat& c = 1) {
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
  }
  /// The polynomial t - a.
  static Poly linear_root(const Rat& a) { return Poly({-a, Rat(1)}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(size_t m) const { return m < c_.size() ? c_[m] : Rat(0); }

  /// Number of nonzero coefficients.
  size_t monomial_count() const {
    return static_cast<size_t>(
        std::count_if(c_.begin(), c_.end(), [](const Rat& q) { return sgn(q) != 0; }));
  }

  Rat operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  friend Poly operator*(const Rat& s, const Poly& p) {
    std::vector<Rat> v(p.c_);
    for (auto& q : v) q *= s;
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Coefficient list in the same syntax parse_poly accepts ("1,0,-1").
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += format_rational(c_[i]);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Coefficients lowest degree first, comma separated.
inline Poly parse_poly(std::string_view text) {
  return Poly(parse_rational_list(text));
}

/// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
inline Poly lagrange_interpolate(std::span<const Rat> xs,
                                 std::span<const Rat> ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("interpolation: size mismatch");
  if (!pairwise_distinct(xs))
    throw std::invalid_argument("interpolation: repeated nodes");
  Poly out;
  for (size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly::linear_root(xs[j]);
      basis = Rat(1 / (xs[i] - xs[j])) * basis;
    }
    out = out + ys[i] * basis;
  }
  return out;
}

}  // namespace repcur
