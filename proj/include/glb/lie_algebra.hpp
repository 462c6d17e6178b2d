#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glb/exterior.hpp"
#include "glb/matrix.hpp"

namespace glb {

/// Finite-dimensional Lie algebra given by rational structure constants on a
/// labeled basis. Only [e_i, e_j] for i < j is stored; antisymmetry is implied.
class LieAlgebra {
 public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, Multivector>;

  LieAlgebra() = default;
  /// Entries with i >= j are rejected; values must be grade-1 of dimension n.
  LieAlgebra(std::string name, std::vector<std::string> labels, Table brackets);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Table& table() const { return table_; }

  /// [e_i, e_j] for any i, j.
  Multivector bracket_basis(std::size_t i, std::size_t j) const;
  /// c^k_{ij}, the e_k-coefficient of [e_i, e_j].
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim() + j) * dim() + k];
  }
  bool is_abelian() const { return table_.empty(); }

  std::optional<std::size_t> index_of(const std::string& label) const;

  LieAlgebra renamed(std::string name) const;
  LieAlgebra relabeled(std::vector<std::string> labels) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  Table table_;
  std::vector<Rational> constants_;  // dense c^k_{ij}, both orders
};

LieAlgebra abelian(std::size_t n);
std::vector<std::string> default_labels(std::size_t n, std::size_t first = 1);

struct JacobiViolation {
  std::size_t i, j, k;
  Multivector residual;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct ValidationReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

ValidationReport validate(const LieAlgebra& g);

Multivector bracket(const LieAlgebra& g, const Multivector& x, const Multivector& y);

/// Matrix of ad(x) with column j = [x, e_j].
Matrix ad_matrix(const LieAlgebra& g, const Multivector& x);

/// Subspace of ℚⁿ stored as a reduced row echelon basis (one row per vector).
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<std::vector<Rational>> vectors() const;
  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  template <class Kind>
  std::vector<Exterior<Kind>> elements() const {
    std::vector<Exterior<Kind>> out;
    for (const auto& v : vectors()) out.push_back(Exterior<Kind>::from_coordinates(v));
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

Subspace center(const LieAlgebra& g);
Subspace derived_algebra(const LieAlgebra& g);
/// {φ : φ(v) = 0 for all v in s}, as a subspace of the dual coordinates.
Subspace annihilator(const Subspace& s);
/// φ ∈ g* with φ([e_i, e_j]) = 0 for all i < j.
Subspace one_cocycles(const LieAlgebra& g);
bool is_one_cocycle(const LieAlgebra& g, const Form& phi);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

bool is_derivation(const LieAlgebra& g, const Matrix& psi);
/// Basis of the derivation space, each as an n×n matrix.
std::vector<Matrix> derivations(const LieAlgebra& g);

/// K(x, y) = trace(ad x ∘ ad y) in the basis.
Matrix killing_form(const LieAlgebra& g);

struct CompactnessCertificate {
  bool compact = false;
  Subspace center;
  Subspace derived;
  bool direct_sum = false;         // g = Z(g) ⊕ [g,g]
  Matrix derived_gram;             // Killing form on the derived basis
  Inertia derived_inertia;         // definiteness witness
  std::string reason;
};

CompactnessCertificate is_compact(const LieAlgebra& g);

/// Positive-definite ad-invariant symmetric form: −K on [g,g] plus identity on
/// the RREF basis of Z(g). Throws PreconditionFailed if g is not compact.
Matrix invariant_scalar_product(const LieAlgebra& g);

LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h);
/// h ⊕ ℝ with [(X,λ),(Y,μ)] = ([X,Y], −Ω(X,Y)); Ω must be a closed 2-form.
LieAlgebra central_extension(const LieAlgebra& h, const Form& omega);
/// h ⊕ ℝ with [(X,λ),(Y,μ)] = ([X,Y] + λΨ(Y) − μΨ(X), 0); Ψ a derivation.
LieAlgebra semidirect_by_derivation(const LieAlgebra& h, const Matrix& psi);

/// Same algebra in the basis given by the columns of `basis` (old coordinates).
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis, std::vector<std::string> labels);

/// Structure constants induced on a subspace, in the basis given by `vectors`.
/// Throws VerificationFailed naming a pair whose bracket leaves the span.
LieAlgebra induced_subalgebra(const LieAlgebra& g, const std::vector<std::vector<Rational>>& vectors,
                              std::vector<std::string> labels);

/// Coordinates of v in the (independent) vectors, or nullopt if v is outside their span.
std::optional<std::vector<Rational>> coordinates_in(const std::vector<std::vector<Rational>>& vectors,
                                                    const std::vector<Rational>& v);

}  // namespace glb
