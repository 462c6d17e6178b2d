#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glb/lie_algebra.hpp"
#include "glb/schouten.hpp"

namespace glb {

struct JacobiPair {
  LieAlgebra algebra;
  Multivector r;   // grade 2
  Multivector x0;  // grade 1
};

struct JacobiReport {
  bool ok = false;
  Multivector rr_residual;  // [r,r] − 2X₀∧r
  Multivector x0_residual;  // [X₀,r]
};

JacobiReport check_jacobi(const JacobiPair& jp);

/// Antisymmetric matrix A with A(i,j) = coefficient of e_i∧e_j for i<j.
template <class Kind>
Matrix bivector_matrix(const Exterior<Kind>& a) {
  a.require_grade(2, "bivector");
  Matrix m(a.dim(), a.dim());
  for (const auto& [index, coeff] : a.terms()) {
    const auto ij = index.indices();
    m(ij[0], ij[1]) = coeff;
    m(ij[1], ij[0]) = -coeff;
  }
  return m;
}

template <class Kind>
Exterior<Kind> bivector_from_matrix(const Matrix& m) {
  const std::size_t n = m.rows();
  Exterior<Kind> out(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      out.add_term(MultiIndex::from_bits((std::uint64_t{1} << i) | (std::uint64_t{1} << j)), m(i, j));
  return out;
}

/// Matrix of ♯_r : g* → g; column i is ♯_r(e^i), with β(♯_r α) = r(α,β).
Matrix sharp(const Multivector& r);

/// dim(♯_r(g*) + ⟨X₀⟩).
std::size_t jacobi_rank(const JacobiPair& jp);

struct CharacteristicSubalgebra {
  std::vector<std::vector<Rational>> basis;  // vectors of g spanning h
  LieAlgebra h;                              // induced structure on that basis
  Multivector r;                             // r in Λ²h
  Multivector x0;                            // X₀ in h
  bool contact = false;                      // odd dimension; else l.c.s. (or zero)
};

/// h = ♯_r(g*) + ⟨X₀⟩ with (r, X₀) restricted to it; jp must be Jacobi. The basis is the RREF
/// basis of ♯_r(g*), followed by X₀ if it is independent of it.
CharacteristicSubalgebra characteristic_subalgebra(const JacobiPair& jp);

struct ContactStructure {
  LieAlgebra algebra;
  Form eta;
};

struct LcsStructure {
  LieAlgebra algebra;
  Form omega2;
  Form lee;
};

/// η∧(dη)^k ≠ 0 on a (2k+1)-dimensional algebra.
bool is_contact(const LieAlgebra& g, const Form& eta);
/// Matrix of ♭_η(X) = i(X)dη + η(X)η; column j is ♭_η(e_j).
Matrix flat_contact(const LieAlgebra& g, const Form& eta);
JacobiPair contact_to_jacobi(const ContactStructure& cs);
/// Requires full odd rank; the result is verified to map back to jp.
ContactStructure jacobi_to_contact(const JacobiPair& jp);

struct LcsReport {
  bool ok = false;
  bool even_dim = false;
  bool nondegenerate = false;
  bool lee_cocycle = false;
  Form residual;  // dΩ − ω∧Ω
};

LcsReport check_lcs(const LcsStructure& ls);
/// Matrix of ♭_Ω(X) = i(X)Ω; column j is ♭_Ω(e_j).
Matrix flat_lcs(const Form& omega2);
JacobiPair lcs_to_jacobi(const LcsStructure& ls);
/// Requires full even rank; the result is verified to map back to jp.
LcsStructure jacobi_to_lcs(const JacobiPair& jp);

/// (r_h + e₀∧X₀, X₀) on h ⊕ ℝe₀ for a contact-type pair on h.
JacobiPair lcs_from_contact_times_line(const JacobiPair& contact);

}  // namespace glb
