#pragma once

#include "glb/exterior.hpp"
#include "glb/lie_algebra.hpp"

namespace glb {

/// Schouten–Nijenhuis bracket on Λg, normalized so that [X, P] is the Lie
/// derivative along X and [P, Q] = (−1)^{kk'}[Q, P]. Grade-0 arguments give 0.
Multivector schouten(const LieAlgebra& g, const Multivector& p, const Multivector& q);

/// [P,Q]_{φ₀} = [P,Q] + (−1)^{k+1}(k−1) P∧i(φ₀)Q − (k'−1) i(φ₀)P∧Q.
/// Throws PreconditionFailed if φ₀ is not a 1-cocycle of g.
Multivector phi0_schouten(const LieAlgebra& g, const Form& phi0, const Multivector& p, const Multivector& q);
/// Same formula without the cocycle check, for residual reporting.
Multivector phi0_schouten_unchecked(const LieAlgebra& g, const Form& phi0, const Multivector& p,
                                    const Multivector& q);

/// Chevalley–Eilenberg differential of `source` acting on Λ(source*).
/// With source = g this is d on Λg*; with source = g* (an algebra on the
/// dual basis) it is d_* on Λg. On grade 1, (dη)(x,y) = −η([x,y]).
template <class Kind>
Exterior<Kind> ce_differential(const LieAlgebra& source, const Exterior<Kind>& w);

inline Form differential(const LieAlgebra& g, const Form& omega) { return ce_differential(g, omega); }
inline Multivector dual_differential(const LieAlgebra& g_star, const Multivector& p) {
  return ce_differential(g_star, p);
}

/// d_{φ₀}ω = dω + φ₀∧ω. Throws PreconditionFailed if φ₀ is not a cocycle.
Form twisted_differential(const LieAlgebra& g, const Form& phi0, const Form& omega);
/// d_{*X₀}P = d_*P + X₀∧P. Throws PreconditionFailed if X₀ is not a cocycle of g*.
Multivector twisted_dual_differential(const LieAlgebra& g_star, const Multivector& x0, const Multivector& p);

/// X ∈ g is a 1-cocycle of g*: [α,β]*(X) = 0 for all α, β.
bool is_dual_cocycle(const LieAlgebra& g_star, const Multivector& x);

/// ad_{(φ₀,c)}(X)(s) = [X,s] − (k−c)φ₀(X)s for s of grade k.
Multivector ad_rep(const LieAlgebra& g, const Form& phi0, const Rational& c, const Multivector& x,
                   const Multivector& s);

/// ad_{(φ₀,c)}(e_i)(s) = 0 for every basis vector e_i.
bool is_invariant(const LieAlgebra& g, const Form& phi0, const Rational& c, const Multivector& s);

void require_cocycle(const LieAlgebra& g, const Form& phi0, const char* what);

}  // namespace glb
