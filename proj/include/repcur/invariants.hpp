#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repcur/currents.hpp"
#include "repcur/lie_algebra.hpp"
#include "repcur/rational.hpp"

namespace repcur {

/// Bijection of {1, ..., k}.
class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] = sigma(i), one-based.
  explicit Permutation(const std::vector<size_t>& images) : img_(images.size()) {
    std::vector<bool> seen(images.size(), false);
    for (size_t i = 0; i < images.size(); ++i) {
      size_t v = images[i];
      if (v < 1 || v > images.size() || seen[v - 1])
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(images.size()));
      seen[v - 1] = true;
      img_[i] = v - 1;
    }
  }

  static Permutation identity(size_t k) {
    std::vector<size_t> v(k);
    std::iota(v.begin(), v.end(), size_t{1});
    return Permutation(v);
  }
  /// The cycle (1 2 ... k).
  static Permutation cycle(size_t k) {
    std::vector<size_t> v(k);
    for (size_t i = 0; i < k; ++i) v[i] = (i + 1) % k + 1;
    return Permutation(v);
  }
  static Permutation transposition(size_t k, size_t r, size_t s) {
    if (r < 1 || s < 1 || r > k || s > k || r == s)
      throw std::invalid_argument("transposition (" + std::to_string(r) + "," +
                                  std::to_string(s) + ") out of range for k=" + std::to_string(k));
    auto p = identity(k);
    std::swap(p.img_[r - 1], p.img_[s - 1]);
    return p;
  }
  static std::vector<Permutation> all(size_t k) {
    std::vector<size_t> v(k);
    std::iota(v.begin(), v.end(), size_t{1});
    std::vector<Permutation> out;
    do out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  size_t size() const { return img_.size(); }
  /// sigma(i), one-based.
  size_t operator()(size_t i) const { return img_.at(i - 1) + 1; }
  /// Zero-based image.
  size_t at0(size_t i) const { return img_[i]; }

  Permutation inverse() const {
    std::vector<size_t> v(size());
    for (size_t i = 0; i < size(); ++i) v[img_[i]] = i + 1;
    return Permutation(v);
  }
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<size_t> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = a.img_[b.img_[i]] + 1;
    return Permutation(v);
  }
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Cycle notation without fixed points; "()" for the identity.
  std::string str() const {
    std::string s;
    std::vector<bool> done(size(), false);
    for (size_t i = 0; i < size(); ++i) {
      if (done[i] || img_[i] == i) continue;
      s += '(';
      size_t j = i;
      bool first = true;
      while (!done[j]) {
        done[j] = true;
        if (!first) s += ' ';
        s += std::to_string(j + 1);
        first = false;
        j = img_[j];
      }
      s += ')';
    }
    return s.empty() ? "()" : s;
  }

 private:
  std::vector<size_t> img_;
};

/// Parses cycle notation "(1 2)(3)" (letters separated by spaces or commas)
/// as a permutation of 1..k.
inline Permutation parse_cycles(std::string_view text, size_t k) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed permutation '" + std::string(text) + "': " + why);
  };
  std::vector<size_t> img(k);
  std::iota(img.begin(), img.end(), size_t{1});
  std::vector<bool> used(k + 1, false);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail("empty");
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<size_t> cyc;
    while (true) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i == text.size()) fail("unclosed cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("unexpected character");
      size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<size_t>(text[i++] - '0');
      if (v < 1 || v > k) fail("letter " + std::to_string(v) + " outside 1.." + std::to_string(k));
      if (used[v]) fail("letter " + std::to_string(v) + " repeated");
      used[v] = true;
      cyc.push_back(v);
    }
    for (size_t j = 0; j < cyc.size(); ++j) img[cyc[j] - 1] = cyc[(j + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(img);
}

/// Place permutation on V^{(x)k}, V = Q^n: the factor in position i moves to
/// position sigma(i), so place(sigma) * place(tau) = place(sigma * tau).
inline Mat place_permutation_matrix(const Permutation& sigma, size_t n) {
  const size_t k = sigma.size();
  size_t dim = 1;
  for (size_t i = 0; i < k; ++i) dim *= n;
  Mat m(dim, dim);
  std::vector<size_t> digits(k), moved(k);
  for (size_t col = 0; col < dim; ++col) {
    size_t c = col;
    for (size_t i = k; i-- > 0;) {
      digits[i] = c % n;
      c /= n;
    }
    for (size_t i = 0; i < k; ++i) moved[sigma.at0(i)] = digits[i];
    size_t row = 0;
    for (size_t i = 0; i < k; ++i) row = row * n + moved[i];
    m(row, col) = 1;
  }
  return m;
}

/// Omega = sum_i e_i (x) e^i for the trace-form dual basis.
inline InvariantTensor casimir_tensor(const LieAlgebraSpec& g) {
  InvariantTensor t(2);
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = 0; j < g.dim(); ++j)
      if (sgn(g.gram_inverse(i, j)) != 0) t.add(g.gram_inverse(i, j), {i, j});
  return t;
}

namespace detail {
/// Calls f(tuple) for every tuple in {0..base-1}^len.
template <class F>
void for_each_tuple(size_t len, size_t base, F&& f) {
  std::vector<size_t> t(len, 0);
  while (true) {
    f(t);
    size_t j = len;
    while (j > 0) {
      --j;
      if (++t[j] < base) break;
      t[j] = 0;
      if (j == 0) return;
    }
    if (len == 0) return;
  }
}
}  // namespace detail

/// theta_sigma = sum over i_1..i_k of E_{i_1, i_sigma(1)} (x) ... (x)
/// E_{i_k, i_sigma(k)}, in gl(n) basis indices.
inline InvariantTensor theta_sigma_gl(const Permutation& sigma, size_t n) {
  const size_t k = sigma.size();
  InvariantTensor t(k);
  std::vector<size_t> idx(k);
  detail::for_each_tuple(k, n, [&](const std::vector<size_t>& i) {
    for (size_t j = 0; j < k; ++j) idx[j] = i[j] * n + i[sigma.at0(j)];
    t.add(1, idx);
  });
  return t;
}

/// theta for the cycle (1 2 ... k): sum E_{i_1,i_2} (x) E_{i_2,i_3} (x) ... (x) E_{i_k,i_1}.
inline InvariantTensor theta_cycle_gl(size_t k, size_t n) {
  if (k < 1) throw std::invalid_argument("theta_cycle_gl: k must be at least 1");
  return theta_sigma_gl(Permutation::cycle(k), n);
}

namespace detail {

using SparseCoords = std::vector<std::pair<size_t, Rat>>;

inline SparseCoords sparse(const Vec& v) {
  SparseCoords out;
  for (size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.push_back({i, v[i]});
  return out;
}

/// Adds coeff * (f_1 (x) ... (x) f_k) to t, each f_j given in basis coordinates.
inline void add_product(InvariantTensor& t, const Rat& coeff,
                        const std::vector<const SparseCoords*>& factors) {
  const size_t k = factors.size();
  for (const auto* f : factors)
    if (f->empty()) return;
  std::vector<size_t> choice(k, 0), idx(k);
  while (true) {
    Rat c = coeff;
    for (size_t j = 0; j < k; ++j) {
      const auto& [b, v] = (*factors[j])[choice[j]];
      idx[j] = b;
      c *= v;
    }
    t.add(c, idx);
    size_t j = 0;
    while (j < k && ++choice[j] == factors[j]->size()) choice[j++] = 0;
    if (j == k) return;
  }
}

/// Shared enumeration for the sp/so constructions: labels at positions 2j-1
/// are free, positions 2j are tied to them, and slot m of the tensor carries
/// label sigma(m). `pair_factor(a, b)` gives the coordinates of the matrix
/// built from the two labels of a factor, `tie(a)` the tied label and its
/// sign.
template <class Tie, class Factor>
InvariantTensor paired_invariant(const Permutation& sigma, size_t label_count, const Rat& scale,
                                 Tie&& tie, Factor&& pair_factor) {
  if (sigma.size() % 2 != 0)
    throw std::invalid_argument("paired invariant needs a permutation of an even number of letters");
  const size_t k = sigma.size() / 2;
  InvariantTensor t(k);
  std::map<std::pair<size_t, size_t>, SparseCoords> cache;
  auto coords = [&](size_t a, size_t b) -> const SparseCoords& {
    auto it = cache.find({a, b});
    if (it == cache.end()) it = cache.emplace(std::make_pair(a, b), pair_factor(a, b)).first;
    return it->second;
  };
  std::vector<size_t> labels(2 * k);
  std::vector<const SparseCoords*> factors(k);
  for_each_tuple(k, label_count, [&](const std::vector<size_t>& free) {
    int sign = 1;
    for (size_t j = 0; j < k; ++j) {
      labels[2 * j] = free[j];
      auto [tied, s] = tie(free[j]);
      labels[2 * j + 1] = tied;
      sign *= s;
    }
    for (size_t j = 0; j < k; ++j)
      factors[j] = &coords(labels[sigma.at0(2 * j)], labels[sigma.at0(2 * j + 1)]);
    add_product(t, scale * sign, factors);
  });
  return t;
}

}  // namespace detail

/// gamma(Theta_sigma) for sp(2n), sigma a permutation of 2k letters. The tied
/// label is e_{i_{2j}} = s(i_{2j-1}) e_{2n+1-i_{2j-1}}; each factor
/// s(a) E_{b,a'} + s(b) E_{a,b'} must lie in sp(2n), else std::logic_error.
inline InvariantTensor theta_sigma_sp(const Permutation& sigma, const LieAlgebraSpec& g) {
  if (g.family != Family::SP) throw std::invalid_argument("theta_sigma_sp needs sp(2n)");
  const size_t N = 2 * g.n;
  auto s = [&](size_t a) { return a < g.n ? 1 : -1; };
  auto prime = [N](size_t a) { return N - 1 - a; };
  auto tie = [&](size_t a) { return std::make_pair(prime(a), s(a)); };
  auto factor = [&](size_t a, size_t b) {
    Mat m(N, N);
    m(b, prime(a)) += s(a);
    m(a, prime(b)) += s(b);
    if (!g.contains(m))
      throw std::logic_error("symmetrized factor for labels (" + std::to_string(a + 1) + "," +
                             std::to_string(b + 1) + ") is outside " + g.name());
    return detail::sparse(g.coordinates(m));
  };
  return detail::paired_invariant(sigma, N, Rat(1, 2), tie, factor);
}

/// delta(Psi_sigma) for so(n), sigma a permutation of 2k letters, with tied
/// labels i_{2j} = i_{2j-1} and factors E_ab - E_ba.
inline InvariantTensor psi_sigma_so(const Permutation& sigma, const LieAlgebraSpec& g) {
  if (g.family != Family::SO) throw std::invalid_argument("psi_sigma_so needs so(n)");
  auto tie = [](size_t a) { return std::make_pair(a, 1); };
  auto factor = [&](size_t a, size_t b) {
    detail::SparseCoords c;
    if (a < b) c.push_back({g.so_index(a, b), Rat(1)});
    else if (a > b) c.push_back({g.so_index(b, a), Rat(-1)});
    return c;
  };
  return detail::paired_invariant(sigma, g.n, Rat(-1, 2), tie, factor);
}

/// One permutation of 2k letters per perfect matching of the 2k tensor
/// slots: the j-th matched pair (a < b) receives the labels 2j-1, 2j.
/// Theta_sigma and Psi_sigma depend on sigma only through this matching, up
/// to sign.
inline std::vector<Permutation> matching_representatives(size_t k) {
  std::vector<Permutation> out;
  std::vector<size_t> img(2 * k, 0);
  std::vector<bool> used(2 * k, false);
  auto rec = [&](auto&& self, size_t pair) -> void {
    if (pair == k) {
      out.emplace_back(img);
      return;
    }
    size_t a = 0;
    while (used[a]) ++a;
    used[a] = true;
    for (size_t b = a + 1; b < 2 * k; ++b) {
      if (used[b]) continue;
      used[b] = true;
      img[a] = 2 * pair + 1;
      img[b] = 2 * pair + 2;
      self(self, pair + 1);
      used[b] = false;
    }
    used[a] = false;
  };
  rec(rec, 0);
  return out;
}

/// (P_tau, Q_tau) for tau = (r, s): P_tau = (t - p_r + 1) prod_{d != r}
/// (t - p_d)/(p_r - p_d), and Q_tau the same with s. P_tau(p_d) = [d == r].
inline std::pair<Poly, Poly> schur_weyl_polys(size_t r, size_t s, std::span<const Rat> points) {
  const size_t k = points.size();
  if (!(1 <= r && r < s && s <= k))
    throw std::invalid_argument("schur_weyl_polys: need 1 <= r < s <= k");
  if (!pairwise_distinct(points)) throw std::invalid_argument("points must be pairwise distinct");
  auto make = [&](size_t r1) {
    const Rat& pr = points[r1 - 1];
    Poly p({Rat(1) - pr, Rat(1)});
    for (size_t d = 0; d < k; ++d) {
      if (d == r1 - 1) continue;
      p = Rat(1 / (pr - points[d])) * (p * Poly::linear_root(points[d]));
    }
    return p;
  };
  return {make(r), make(s)};
}

struct NamedInvariant {
  std::string label;
  InvariantTensor tensor;
};

/// The spanning families by tensor degree 0..max_degree: theta_sigma over
/// all of S_k for gl, and gamma(Theta_sigma) / delta(Psi_sigma) over one sigma
/// per perfect matching for sp / so. Zero tensors are dropped.
inline std::vector<NamedInvariant> invariant_generators(const LieAlgebraSpec& g,
                                                        size_t max_degree) {
  std::vector<NamedInvariant> out;
  for (size_t k = 0; k <= max_degree; ++k) {
    switch (g.family) {
      case Family::GL:
        for (const auto& s : Permutation::all(k))
          out.push_back({"theta_sigma" + s.str() + "/k=" + std::to_string(k),
                         theta_sigma_gl(s, g.n)});
        break;
      case Family::SP:
        for (const auto& s : matching_representatives(k))
          out.push_back({"gamma_Theta_sigma" + s.str() + "/k=" + std::to_string(k),
                         theta_sigma_sp(s, g)});
        break;
      case Family::SO:
        for (const auto& s : matching_representatives(k))
          out.push_back({"delta_Psi_sigma" + s.str() + "/k=" + std::to_string(k),
                         psi_sigma_so(s, g)});
        break;
    }
    std::erase_if(out, [](const NamedInvariant& t) { return t.tensor.is_zero(); });
  }
  return out;
}

}  // namespace repcur
