#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "glb/errors.hpp"
#include "glb/multi_index.hpp"
#include "glb/rational.hpp"

namespace glb {

struct VectorKind;
struct CovectorKind;

template <class Kind>
struct DualKindOf;
template <>
struct DualKindOf<VectorKind> {
  using type = CovectorKind;
};
template <>
struct DualKindOf<CovectorKind> {
  using type = VectorKind;
};

/// Homogeneous element of the exterior algebra over an n-dimensional basis
/// (Kind = VectorKind) or over its dual basis (Kind = CovectorKind).
///
/// Terms are kept in canonical form: strictly increasing multi-indices, no
/// zero coefficients. The empty term map is the zero element of its grade; a
/// grade above the ambient dimension admits only that zero element.
template <class Kind>
class Exterior {
 public:
  using Terms = std::map<MultiIndex, Rational>;
  using Dual = Exterior<typename DualKindOf<Kind>::type>;

  Exterior() = default;
  Exterior(std::size_t dim, std::size_t grade) : dim_(dim), grade_(grade) { check_shape(); }
  Exterior(std::size_t dim, std::size_t grade, Terms terms) : dim_(dim), grade_(grade) {
    check_shape();
    for (auto& [index, coeff] : terms) add_term(index, coeff);
  }

  static Exterior scalar(std::size_t dim, const Rational& value) {
    Exterior out(dim, 0);
    out.add_term(MultiIndex{}, value);
    return out;
  }
  static Exterior basis(std::size_t dim, std::size_t i) {
    Exterior out(dim, 1);
    out.add_term(MultiIndex::single(i), Rational(1));
    return out;
  }
  /// Coefficient times e_{i1}∧…∧e_{ik} for an unsorted index sequence.
  static Exterior monomial(std::size_t dim, std::span<const std::size_t> seq, const Rational& coeff = Rational(1)) {
    Exterior out(dim, seq.size());
    if (auto sorted = MultiIndex::from_sequence(seq)) {
      out.add_term(sorted->first, sorted->second > 0 ? coeff : -coeff);
    }
    return out;
  }
  static Exterior monomial(std::size_t dim, std::initializer_list<std::size_t> seq, const Rational& coeff = Rational(1)) {
    const std::vector<std::size_t> v(seq);
    return monomial(dim, std::span<const std::size_t>(v), coeff);
  }
  /// Grade-1 element from a coordinate vector.
  static Exterior from_coordinates(std::span<const Rational> coords) {
    Exterior out(coords.size(), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) out.add_term(MultiIndex::single(i), coords[i]);
    return out;
  }

  std::size_t dim() const { return dim_; }
  std::size_t grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(MultiIndex index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Coefficient of e_i for a grade-1 element.
  Rational component(std::size_t i) const { return coefficient(MultiIndex::single(i)); }
  std::vector<Rational> coordinates() const {
    require_grade(1, "coordinates");
    std::vector<Rational> out(dim_);
    for (const auto& [index, coeff] : terms_) out[index.indices().front()] = coeff;
    return out;
  }

  Exterior& operator+=(const Exterior& rhs) {
    require_same_shape(rhs, "addition");
    for (const auto& [index, coeff] : rhs.terms_) add_term(index, coeff);
    return *this;
  }
  Exterior& operator-=(const Exterior& rhs) {
    require_same_shape(rhs, "subtraction");
    for (const auto& [index, coeff] : rhs.terms_) add_term(index, -coeff);
    return *this;
  }
  Exterior& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [index, coeff] : terms_) coeff *= s;
    return *this;
  }
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
  friend Exterior operator*(const Rational& s, Exterior a) { return a *= s; }
  friend Exterior operator*(Exterior a, const Rational& s) { return a *= s; }
  Exterior operator-() const { return Rational(-1) * *this; }

  friend bool operator==(const Exterior& a, const Exterior& b) {
    return a.dim_ == b.dim_ && a.grade_ == b.grade_ && a.terms_ == b.terms_;
  }

  /// Adds coeff·e_index; index must have this element's grade.
  void add_term(MultiIndex index, const Rational& coeff) {
    if (index.grade() != grade_) throw DimensionMismatch("term grade differs from element grade");
    if (index.span_end() > dim_) throw DimensionMismatch("term index exceeds ambient dimension");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void require_grade(std::size_t k, const char* what) const {
    if (grade_ != k) {
      throw DimensionMismatch(std::string(what) + ": expected grade " + std::to_string(k) + ", got " +
                              std::to_string(grade_));
    }
  }
  void require_dim(std::size_t n, const char* what) const {
    if (dim_ != n) {
      throw DimensionMismatch(std::string(what) + ": ambient dimension " + std::to_string(dim_) + " != " +
                              std::to_string(n));
    }
  }

 private:
  void check_shape() const {
    if (dim_ > kMaxDim) throw DimensionMismatch("ambient dimension exceeds 64");
  }
  void require_same_shape(const Exterior& rhs, const char* what) const {
    if (dim_ != rhs.dim_ || grade_ != rhs.grade_) {
      throw DimensionMismatch(std::string(what) + " of elements with different dimension or grade");
    }
  }

  std::size_t dim_ = 0;
  std::size_t grade_ = 0;
  Terms terms_;
};

using Multivector = Exterior<VectorKind>;
using Form = Exterior<CovectorKind>;

template <class Kind>
Exterior<Kind> wedge(const Exterior<Kind>& a, const Exterior<Kind>& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of elements with different ambient dimension");
  Exterior<Kind> out(a.dim(), a.grade() + b.grade());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      const int s = merge_sign(ia, ib);
      if (s == 0) continue;
      Rational c = ca * cb;
      out.add_term(MultiIndex::from_bits(ia.bits() | ib.bits()), s > 0 ? c : -c);
    }
  }
  return out;
}

/// k-fold wedge power; power 0 is the unit scalar.
template <class Kind>
Exterior<Kind> wedge_power(const Exterior<Kind>& a, std::size_t k) {
  Exterior<Kind> out = Exterior<Kind>::scalar(a.dim(), Rational(1));
  for (std::size_t i = 0; i < k; ++i) {
    out = wedge(out, a);
    if (out.is_zero()) break;
  }
  return out;
}

/// Interior product by a grade-1 element of the dual kind:
/// i(φ)(x1∧…∧xk) = Σ_j (−1)^{j+1} φ(x_j) x1∧…x̂_j…∧xk.
/// Contraction of a grade-0 element is zero of grade 0.
template <class Kind>
Exterior<Kind> contract_unchecked(const typename Exterior<Kind>::Dual& phi, const Exterior<Kind>& p) {
  if (phi.dim() != p.dim()) throw DimensionMismatch("contraction of elements with different ambient dimension");
  phi.require_grade(1, "contraction operand");
  if (p.grade() == 0) return Exterior<Kind>(p.dim(), 0);
  Exterior<Kind> out(p.dim(), p.grade() - 1);
  for (const auto& [index, coeff] : p.terms()) {
    std::uint64_t rest = index.bits();
    std::size_t position = 0;
    while (rest != 0) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      rest &= rest - 1;
      const Rational value = phi.component(i);
      if (!value.is_zero()) {
        Rational c = coeff * value;
        out.add_term(index.without(i), position % 2 == 0 ? c : -c);
      }
      ++position;
    }
  }
  return out;
}

template <class Kind>
Exterior<Kind> contract(const typename Exterior<Kind>::Dual& phi, const Exterior<Kind>& p) {
  if (p.grade() == 0) throw DimensionMismatch("contraction of a grade-0 element");
  return contract_unchecked(phi, p);
}

inline Multivector contract(const Form& phi, const Multivector& p) { return contract<VectorKind>(phi, p); }
inline Form contract(const Multivector& x, const Form& omega) { return contract<CovectorKind>(x, omega); }

/// Full pairing ⟨ω, P⟩ between a form and a multivector of equal grade.
inline Rational pair(const Form& omega, const Multivector& p) {
  if (omega.dim() != p.dim()) throw DimensionMismatch("pairing of elements with different ambient dimension");
  if (omega.grade() != p.grade()) throw DimensionMismatch("pairing of elements with different grades");
  Rational sum(0);
  const auto& small = omega.terms().size() <= p.terms().size() ? omega.terms() : p.terms();
  for (const auto& [index, coeff] : small) {
    const Rational a = omega.coefficient(index);
    const Rational b = p.coefficient(index);
    if (!a.is_zero() && !b.is_zero()) sum += a * b;
  }
  return sum;
}

/// P(α, β) for a 2-vector P.
inline Rational evaluate(const Multivector& p, const Form& alpha, const Form& beta) {
  return pair(wedge(alpha, beta), p);
}
inline Rational evaluate(const Form& omega, const Multivector& x, const Multivector& y) {
  return pair(omega, wedge(x, y));
}
/// φ(X) for grade-1 elements.
inline Rational evaluate(const Form& phi, const Multivector& x) { return pair(phi, x); }

template <class To, class From>
Exterior<To> reinterpret(const Exterior<From>& a) {
  return Exterior<To>(a.dim(), a.grade(), typename Exterior<To>::Terms(a.terms().begin(), a.terms().end()));
}

}  // namespace glb
