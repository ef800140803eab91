#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "superweyl/errors.hpp"
#include "superweyl/linalg.hpp"
#include "superweyl/scalar.hpp"

namespace superweyl {

/// Sparse coordinate vector: basis index -> coefficient, zeros never stored.
class LieVector {
 public:
  using Terms = std::map<int, Scalar>;

  LieVector() = default;
  static LieVector unit(int index, const Scalar& c = Scalar(1)) {
    LieVector v;
    v.add(index, c);
    return v;
  }
  static LieVector from_dense(const ScalarVector& dense) {
    LieVector v;
    for (std::size_t k = 0; k < dense.size(); ++k) v.add(static_cast<int>(k), dense[k]);
    return v;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar operator[](int index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Scalar() : it->second;
  }
  ScalarVector dense(std::size_t n) const {
    ScalarVector out(n);
    for (const auto& [k, c] : terms_) out[static_cast<std::size_t>(k)] = c;
    return out;
  }

  void add(int index, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_scaled(const LieVector& o, const Scalar& k) {
    if (k.is_zero()) return;
    for (const auto& [i, c] : o.terms_) add(i, c * k);
  }

  LieVector operator-() const {
    LieVector out = *this;
    for (auto& [i, c] : out.terms_) c = -c;
    return out;
  }
  LieVector& operator+=(const LieVector& o) {
    add_scaled(o, Scalar(1));
    return *this;
  }
  LieVector& operator-=(const LieVector& o) {
    add_scaled(o, Scalar(-1));
    return *this;
  }
  LieVector& operator*=(const Scalar& k) {
    if (k.is_zero()) terms_.clear();
    for (auto& [i, c] : terms_) c *= k;
    return *this;
  }
  friend LieVector operator+(LieVector a, const LieVector& b) { return a += b; }
  friend LieVector operator-(LieVector a, const LieVector& b) { return a -= b; }
  friend LieVector operator*(LieVector a, const Scalar& k) { return a *= k; }
  friend LieVector operator*(const Scalar& k, LieVector a) { return a *= k; }

  friend bool operator==(const LieVector& x, const LieVector& y) {
    if (x.terms_.size() != y.terms_.size()) return false;
    for (const auto& [i, c] : x.terms_) {
      if (y[i] != c) return false;
    }
    return true;
  }

  LieVector map_coefficients(const auto& f) const {
    LieVector out;
    for (const auto& [i, c] : terms_) out.add(i, f(c));
    return out;
  }

 private:
  Terms terms_;
};

/// `-4*H1`, `H1 + (1/2)*H2 - C`; `0` for the zero vector.
inline std::string format_combination(const LieVector& v, const std::function<std::string(int)>& name) {
  std::string out;
  for (const auto& [i, c] : v.terms()) {
    std::string coeff = c.to_string();
    bool negative = false;
    if (coeff.front() == '-' && coeff.find_first_of("+-", 1) == std::string::npos && coeff.find('(') == std::string::npos) {
      negative = true;
      coeff = coeff.substr(1);
    }
    std::string term;
    if (coeff == "1") term = name(i);
    else if (coeff.find_first_of("+-/ ") == std::string::npos) term = coeff + "*" + name(i);
    else term = "(" + coeff + ")*" + name(i);
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

struct BasisElement {
  std::string name;
  int parity = 0;
  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite-dimensional Lie superalgebra given by structure constants.
class SuperLieAlgebra {
 public:
  using Structure = std::map<std::pair<int, int>, LieVector>;

  SuperLieAlgebra() = default;
  explicit SuperLieAlgebra(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
    for (const auto& b : basis_) {
      if (b.parity != 0 && b.parity != 1) throw AlgebraError("basis parity must be 0 or 1");
    }
  }

  std::size_t dim() const { return basis_.size(); }
  std::size_t even_dim() const {
    return static_cast<std::size_t>(std::count_if(basis_.begin(), basis_.end(), [](const auto& b) { return b.parity == 0; }));
  }
  std::size_t odd_dim() const { return dim() - even_dim(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& name(int i) const { return basis_.at(static_cast<std::size_t>(i)).name; }
  int parity(int i) const { return basis_.at(static_cast<std::size_t>(i)).parity; }
  const Structure& structure() const { return structure_; }

  int index_of(std::string_view name) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (basis_[k].name == name) return static_cast<int>(k);
    }
    throw UnknownGenerator("unknown basis element '" + std::string(name) + "'");
  }
  bool contains(std::string_view name) const {
    return std::any_of(basis_.begin(), basis_.end(), [&](const auto& b) { return b.name == name; });
  }

  /// Parity of a vector; -1 when mixed, 0 for zero.
  int parity(const LieVector& v) const {
    int p = -2;
    for (const auto& [i, c] : v.terms()) {
      if (p == -2) p = parity(i);
      else if (p != parity(i)) return -1;
    }
    return p == -2 ? 0 : p;
  }

  /// Sets [b_i, b_j] = v and [b_j, b_i] = -(-1)^{p_i p_j} v.
  void set_bracket(int i, int j, const LieVector& v) {
    check_index(i);
    check_index(j);
    const int p = (parity(i) + parity(j)) % 2;
    for (const auto& [k, c] : v.terms()) {
      check_index(k);
      if (parity(k) != p) {
        throw MixedParity("[" + name(i) + ", " + name(j) + "] has a component " + name(k) + " of the wrong parity");
      }
    }
    const bool symmetric = parity(i) == 1 && parity(j) == 1;
    if (i == j && !symmetric && !v.is_zero()) throw AlgebraError("self-bracket of an even element must vanish");
    store({i, j}, v);
    if (i != j) store({j, i}, symmetric ? v : -v);
  }
  void set_bracket(std::string_view x, std::string_view y, const LieVector& v) { set_bracket(index_of(x), index_of(y), v); }

  const LieVector& bracket(int i, int j) const {
    static const LieVector zero;
    auto it = structure_.find({i, j});
    return it == structure_.end() ? zero : it->second;
  }
  LieVector bracket(const LieVector& x, const LieVector& y) const {
    LieVector out;
    for (const auto& [i, a] : x.terms()) {
      for (const auto& [j, b] : y.terms()) out.add_scaled(bracket(i, j), a * b);
    }
    return out;
  }

  LieVector element(std::string_view name, const Scalar& c = Scalar(1)) const { return LieVector::unit(index_of(name), c); }

  std::string format(const LieVector& v) const {
    return format_combination(v, [this](int i) { return name(i); });
  }

  SuperLieAlgebra map_coefficients(const auto& f) const {
    SuperLieAlgebra out(basis_);
    for (const auto& [key, v] : structure_) out.store(key, v.map_coefficients(f));
    return out;
  }
  SuperLieAlgebra substitute(const Assignment& at) const {
    return map_coefficients([&](const Scalar& c) { return superweyl::substitute(c, at); });
  }
  SuperLieAlgebra substitute(Param p, const Scalar& value) const {
    return map_coefficients([&](const Scalar& c) { return c.substitute(p, value); });
  }
  /// Structure constants replaced by their limits at p = value.
  SuperLieAlgebra limit(Param p, const GaussianRational& value) const {
    return map_coefficients([&](const Scalar& c) { return limit_at(c, p, value); });
  }

  friend bool operator==(const SuperLieAlgebra& x, const SuperLieAlgebra& y) {
    if (x.basis_ != y.basis_) return false;
    for (const auto& [key, v] : x.structure_) {
      if (!(y.bracket(key.first, key.second) == v)) return false;
    }
    for (const auto& [key, v] : y.structure_) {
      if (!(x.bracket(key.first, key.second) == v)) return false;
    }
    return true;
  }

 private:
  void check_index(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= basis_.size()) throw IndexOutOfRange("basis index " + std::to_string(i));
  }
  void store(std::pair<int, int> key, const LieVector& v) {
    if (v.is_zero()) structure_.erase(key);
    else structure_[key] = v;
  }

  std::vector<BasisElement> basis_;
  Structure structure_;
};

inline int sign_of(int exponent) { return exponent % 2 ? -1 : 1; }

/// J(x,y,z) = [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]] on basis elements.
inline LieVector jacobiator(const SuperLieAlgebra& L, int x, int y, int z) {
  const LieVector ex = LieVector::unit(x);
  const LieVector ey = LieVector::unit(y);
  const LieVector ez = LieVector::unit(z);
  LieVector out = L.bracket(ex, L.bracket(y, z));
  out -= L.bracket(L.bracket(x, y), ez);
  out.add_scaled(L.bracket(ey, L.bracket(x, z)), Scalar(-sign_of(L.parity(x) * L.parity(y))));
  return out;
}

using Triple = std::tuple<int, int, int>;

/// Nonzero jacobiator values over all basis triples.
inline std::map<Triple, LieVector> jacobiator(const SuperLieAlgebra& L) {
  std::map<Triple, LieVector> out;
  const int n = static_cast<int>(L.dim());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        LieVector j = jacobiator(L, x, y, z);
        if (!j.is_zero()) out.emplace(Triple{x, y, z}, std::move(j));
      }
    }
  }
  return out;
}

inline bool is_lie_superalgebra(const SuperLieAlgebra& L) { return jacobiator(L).empty(); }

/// New basis b'_k = r^{p_k} sum_j rows[k][j] b_j, where only r^2 = odd_square is
/// known. Each row must be parity-homogeneous with the parity of new_basis[k].
inline SuperLieAlgebra change_basis(const SuperLieAlgebra& L, const std::vector<BasisElement>& new_basis,
                                    const ScalarMatrix& rows, const Scalar& odd_square = Scalar(1)) {
  const std::size_t n = L.dim();
  if (new_basis.size() != n || rows.size() != n) throw AlgebraError("change_basis: dimension mismatch");
  std::vector<LieVector> vecs;
  for (std::size_t k = 0; k < n; ++k) {
    LieVector v = LieVector::from_dense(rows[k]);
    if (!v.is_zero() && L.parity(v) != new_basis[k].parity) throw MixedParity("change_basis: row " + new_basis[k].name);
    vecs.push_back(std::move(v));
  }
  const ScalarMatrix inv = inverse(rows);  // b_l = sum_k inv[l][k] r^{-p_k} b'_k
  SuperLieAlgebra out(new_basis);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      LieVector w = L.bracket(vecs[i], vecs[j]);
      if (w.is_zero()) continue;
      LieVector coords;
      for (const auto& [l, c] : w.terms()) {
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& m = inv[static_cast<std::size_t>(l)][k];
          if (!m.is_zero()) coords.add(static_cast<int>(k), c * m);
        }
      }
      if (new_basis[i].parity == 1 && new_basis[j].parity == 1) coords *= odd_square;
      out.set_bracket(static_cast<int>(i), static_cast<int>(j), coords);
    }
  }
  return out;
}

/// Span of the given basis elements is closed under the bracket.
inline bool is_subalgebra(const SuperLieAlgebra& L, const std::vector<int>& span) {
  std::vector<bool> in(L.dim(), false);
  for (int i : span) in[static_cast<std::size_t>(i)] = true;
  for (int i : span) {
    for (int j : span) {
      for (const auto& [k, c] : L.bracket(i, j).terms()) {
        if (!in[static_cast<std::size_t>(k)]) return false;
      }
    }
  }
  return true;
}

inline bool is_ideal(const SuperLieAlgebra& L, const std::vector<int>& span) {
  std::vector<bool> in(L.dim(), false);
  for (int i : span) in[static_cast<std::size_t>(i)] = true;
  for (int i : span) {
    for (int j = 0; j < static_cast<int>(L.dim()); ++j) {
      for (const auto& [k, c] : L.bracket(i, j).terms()) {
        if (!in[static_cast<std::size_t>(k)]) return false;
      }
    }
  }
  return true;
}

/// Restriction to a subalgebra spanned by basis elements (closure is checked).
inline SuperLieAlgebra restrict_to(const SuperLieAlgebra& L, const std::vector<int>& span) {
  if (!is_subalgebra(L, span)) throw AlgebraError("span is not closed under the bracket");
  std::vector<BasisElement> basis;
  std::map<int, int> position;
  for (int i : span) {
    position[i] = static_cast<int>(basis.size());
    basis.push_back(L.basis()[static_cast<std::size_t>(i)]);
  }
  SuperLieAlgebra out(basis);
  for (int i : span) {
    for (int j : span) {
      LieVector v;
      for (const auto& [k, c] : L.bracket(i, j).terms()) v.add(position.at(k), c);
      out.set_bracket(position[i], position[j], v);
    }
  }
  return out;
}

/// Quotient by an ideal spanned by basis elements; the complement keeps its names.
inline SuperLieAlgebra quotient(const SuperLieAlgebra& L, const std::vector<int>& ideal) {
  if (!is_ideal(L, ideal)) throw AlgebraError("span is not an ideal");
  std::vector<bool> in(L.dim(), false);
  for (int i : ideal) in[static_cast<std::size_t>(i)] = true;
  std::vector<BasisElement> basis;
  std::map<int, int> position;
  for (int i = 0; i < static_cast<int>(L.dim()); ++i) {
    if (in[static_cast<std::size_t>(i)]) continue;
    position[i] = static_cast<int>(basis.size());
    basis.push_back(L.basis()[static_cast<std::size_t>(i)]);
  }
  SuperLieAlgebra out(basis);
  for (const auto& [i, pi] : position) {
    for (const auto& [j, pj] : position) {
      if (pj < pi) continue;
      LieVector v;
      for (const auto& [k, c] : L.bracket(i, j).terms()) {
        if (!in[static_cast<std::size_t>(k)]) v.add(position.at(k), c);
      }
      out.set_bracket(pi, pj, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphism checks with an odd dressing factor r, of which only r^2 is known.

struct HomomorphismFailure {
  int x;
  int y;
  std::string lhs;
  std::string rhs;
};

struct HomomorphismResult {
  std::size_t pairs_checked = 0;
  std::vector<HomomorphismFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks f([b_i, b_j]) = [f(b_i), f(b_j)] for all basis pairs, where
/// f(b_i) = r^{p_i} images[i]. T needs +, scalar *, and the given bracket/equality.
template <class T, class Bracket, class Equal, class Show>
HomomorphismResult verify_homomorphism(const SuperLieAlgebra& src, const std::vector<T>& images, const T& zero,
                                       const Scalar& odd_square, Bracket bracket, Equal equal, Show show,
                                       std::size_t max_failures = 20) {
  if (images.size() != src.dim()) throw AlgebraError("verify_homomorphism: image count mismatch");
  HomomorphismResult result;
  const int n = static_cast<int>(src.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      T lhs = bracket(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
      if (src.parity(i) == 1 && src.parity(j) == 1) lhs = lhs * odd_square;
      T rhs = zero;
      for (const auto& [k, c] : src.bracket(i, j).terms()) rhs = rhs + images[static_cast<std::size_t>(k)] * c;
      ++result.pairs_checked;
      if (!equal(lhs, rhs) && result.failures.size() < max_failures) {
        result.failures.push_back({i, j, show(lhs), show(rhs)});
      }
    }
  }
  return result;
}

/// Homomorphism check between two structure-constant algebras.
inline HomomorphismResult verify_lie_map(const SuperLieAlgebra& src, const SuperLieAlgebra& dst,
                                         const std::vector<LieVector>& images, const Scalar& odd_square = Scalar(1)) {
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i].is_zero() && dst.parity(images[i]) != src.parity(static_cast<int>(i))) {
      throw MixedParity("image of " + src.name(static_cast<int>(i)) + " has the wrong parity");
    }
  }
  return verify_homomorphism(
      src, images, LieVector(), odd_square, [&](const LieVector& a, const LieVector& b) { return dst.bracket(a, b); },
      [](const LieVector& a, const LieVector& b) { return a == b; },
      [&](const LieVector& v) { return dst.format(v); });
}

/// Images are linearly independent (rank = dim).
inline bool is_bijective(const SuperLieAlgebra& src, const SuperLieAlgebra& dst, const std::vector<LieVector>& images) {
  if (src.dim() != dst.dim()) return false;
  ScalarMatrix m;
  for (const auto& v : images) m.push_back(v.dense(dst.dim()));
  return rank(m) == dst.dim();
}

// ---------------------------------------------------------------------------
// Cochains with values in a space of central elements.

/// Even 2-cochain: omega(b_i, b_j) as a combination of the named central elements.
class Cochain2 {
 public:
  Cochain2(const SuperLieAlgebra& L, std::vector<std::string> centers) : L_(&L), centers_(std::move(centers)) {}

  const std::vector<std::string>& centers() const { return centers_; }
  const SuperLieAlgebra& algebra() const { return *L_; }
  const std::map<std::pair<int, int>, LieVector>& values() const { return values_; }

  int center_index(std::string_view name) const {
    for (std::size_t k = 0; k < centers_.size(); ++k) {
      if (centers_[k] == name) return static_cast<int>(k);
    }
    throw UnknownGenerator("unknown central element '" + std::string(name) + "'");
  }

  /// Sets omega(x, y) and omega(y, x) = -(-1)^{|x||y|} omega(x, y).
  void set(int i, int j, const LieVector& v) {
    if (!v.is_zero() && (L_->parity(i) + L_->parity(j)) % 2 != 0) throw MixedParity("cochain value on a mixed pair");
    const bool symmetric = L_->parity(i) == 1 && L_->parity(j) == 1;
    if (i == j && !symmetric && !v.is_zero()) throw AlgebraError("cochain must vanish on (x, x) for even x");
    store({i, j}, v);
    if (i != j) store({j, i}, symmetric ? v : -v);
  }
  void set(std::string_view x, std::string_view y, std::string_view center, const Scalar& c = Scalar(1)) {
    set(L_->index_of(x), L_->index_of(y), LieVector::unit(center_index(center), c));
  }

  const LieVector& operator()(int i, int j) const {
    static const LieVector zero;
    auto it = values_.find({i, j});
    return it == values_.end() ? zero : it->second;
  }
  LieVector operator()(const LieVector& x, const LieVector& y) const {
    LieVector out;
    for (const auto& [i, a] : x.terms()) {
      for (const auto& [j, b] : y.terms()) out.add_scaled((*this)(i, j), a * b);
    }
    return out;
  }

 private:
  void store(std::pair<int, int> key, const LieVector& v) {
    if (v.is_zero()) values_.erase(key);
    else values_[key] = v;
  }

  const SuperLieAlgebra* L_;
  std::vector<std::string> centers_;
  std::map<std::pair<int, int>, LieVector> values_;
};

/// d omega(x,y,z) = -omega([x,y],z) + (-1)^{|y||z|} omega([x,z],y) - (-1)^{|x|(|y|+|z|)} omega([y,z],x).
/// For (even, odd, odd) this is -omega([x,y],z) - omega([x,z],y) - omega([y,z],x).
inline LieVector cochain_differential(const Cochain2& omega, int x, int y, int z) {
  const SuperLieAlgebra& L = omega.algebra();
  const int px = L.parity(x), py = L.parity(y), pz = L.parity(z);
  LieVector out = -omega(L.bracket(x, y), LieVector::unit(z));
  out.add_scaled(omega(L.bracket(x, z), LieVector::unit(y)), Scalar(sign_of(py * pz)));
  out.add_scaled(omega(L.bracket(y, z), LieVector::unit(x)), Scalar(-sign_of(px * (py + pz))));
  return out;
}

/// Nonzero values of d omega over all basis triples.
inline std::map<Triple, LieVector> cochain_differential(const Cochain2& omega) {
  std::map<Triple, LieVector> out;
  const int n = static_cast<int>(omega.algebra().dim());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        LieVector v = cochain_differential(omega, x, y, z);
        if (!v.is_zero()) out.emplace(Triple{x, y, z}, std::move(v));
      }
    }
  }
  return out;
}

inline bool is_cocycle(const Cochain2& omega) { return cochain_differential(omega).empty(); }

/// d of a 1-cochain: (d omega)(x, y) = -omega([x, y]).
inline Cochain2 cochain_differential_1(const SuperLieAlgebra& L, const std::vector<LieVector>& omega,
                                       std::vector<std::string> centers) {
  Cochain2 out(L, std::move(centers));
  const int n = static_cast<int>(L.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      LieVector v;
      for (const auto& [k, c] : L.bracket(i, j).terms()) v.add_scaled(omega.at(static_cast<std::size_t>(k)), -c);
      // An odd-valued 1-cochain would produce mixed values; callers pass even ones.
      if (!v.is_zero()) out.set(i, j, v);
    }
  }
  return out;
}

/// L (+) Span(centers) with [x, y]' = [x, y] + f(x, y); the centers are even and central.
inline SuperLieAlgebra central_extension(const SuperLieAlgebra& L, const Cochain2& f) {
  if (&f.algebra() != &L && !(f.algebra() == L)) throw AlgebraError("cochain belongs to another algebra");
  if (!is_cocycle(f)) throw NotACocycle("the cochain is not closed");
  std::vector<BasisElement> basis = L.basis();
  const int offset = static_cast<int>(basis.size());
  for (const auto& c : f.centers()) basis.push_back({c, 0});
  SuperLieAlgebra out(basis);
  const int n = static_cast<int>(L.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      LieVector v = L.bracket(i, j);
      for (const auto& [k, c] : f(i, j).terms()) v.add(offset + k, c);
      out.set_bracket(i, j, v);
    }
  }
  return out;
}

}  // namespace superweyl
