#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "glb/jacobi.hpp"
#include "glb/lie_algebra.hpp"
#include "glb/schouten.hpp"

namespace glb {

/// ((g, φ₀), (g*, X₀)). g_star is an algebra on the dual basis of g.
struct GeneralizedBialgebra {
  LieAlgebra g;
  LieAlgebra g_star;
  Form phi0;
  Multivector x0;
};

/// "e1" -> "e^1"; any other label gets a trailing '*'.
std::string dual_label(const std::string& label);
std::vector<std::string> dual_labels(const std::vector<std::string>& labels);

struct PairResidual {
  std::size_t i, j;
  Multivector residual;
};

struct IndexedResidual {
  std::size_t i;
  Multivector residual;
};

struct GlbReport {
  bool ok = false;
  bool g_jacobi = false;
  bool g_star_jacobi = false;
  bool phi0_cocycle = false;
  bool x0_cocycle = false;
  bool condalg1 = false;
  bool condalg2 = false;
  bool condalg3 = false;
  std::vector<PairResidual> condalg1_residuals;     // nonzero entries only
  Rational phi0_x0;                                 // φ₀(X₀)
  std::vector<IndexedResidual> condalg3_residuals;  // nonzero entries only
};

/// Throws DimensionMismatch when g and g* do not have matching shapes.
GlbReport check_glb(const GeneralizedBialgebra& b);

struct YbData {
  LieAlgebra g;
  Form phi0;
  Multivector r;
  Multivector x0;
};

struct YbReport {
  bool ok = false;
  bool rr_invariant = false;  // [r,r] − 2X₀∧r is ad_{(φ₀,1)}-invariant
  bool x0_r_zero = false;     // [X₀,r] = 0
  bool s_invariant = false;   // i(φ₀)r − X₀ is ad_{(φ₀,0)}-invariant
  Multivector rr_term;
  std::vector<IndexedResidual> rr_action;  // nonzero ad_{(φ₀,1)}(e_i)(rr_term)
  Multivector x0_r;
  Multivector s_term;
  std::vector<IndexedResidual> s_action;   // nonzero ad_{(φ₀,0)}(e_i)(s_term)
};

/// Throws PreconditionFailed if φ₀ is not a 1-cocycle.
YbReport check_yb_hypotheses(const YbData& y);

/// [α,β]* = coad_{♯rβ}α − coad_{♯rα}β + r(α,β)φ₀ + i(X₀)(α∧β), without checks.
LieAlgebra dual_bracket_coadjoint(const YbData& y);
/// [α,β]*(X) = −[X,r](α,β) + r(α,β)φ₀(X) + α(X₀)β(X) − β(X₀)α(X), without checks.
LieAlgebra dual_bracket_pointwise(const YbData& y);

/// Requires the hypotheses; verifies the Jacobi identity of the result and
/// agreement of the two formulas.
LieAlgebra build_dual_bracket(const YbData& y);
/// build_dual_bracket assembled with g, φ₀ and X₀, verified by check_glb.
GeneralizedBialgebra build_yb_glb(const YbData& y);

/// d_*r − ([r,r] − 2X₀∧r − i(φ₀)r∧r) with d_* taken from dual.
Multivector dual_r_residual(const YbData& y, const LieAlgebra& dual);

struct JacobiBuild {
  GeneralizedBialgebra glb;
  bool homomorphism = false;  // ♯_r[α,β]* = −[♯_rα, ♯_rβ] on all pairs
  bool isomorphism = false;   // −♯_r is invertible (full even rank)
};

/// Requires (r, X₀) Jacobi and i(φ₀)r = X₀.
JacobiBuild build_from_jacobi(const YbData& y);

struct CoboundarySolution {
  Multivector particular;
  std::vector<Multivector> homogeneous;
};

/// All r ∈ Λ²g with d_{*X₀}(e_i) = ad_{(φ₀,1)}(e_i)(r) for every i; nullopt if none.
std::optional<CoboundarySolution> solve_coboundary(const GeneralizedBialgebra& b);

/// ((abelian on g*, 0), (g, φ)) for a 1-cocycle φ of g.
GeneralizedBialgebra glb_from_cocycle(const LieAlgebra& g, const Form& phi);

/// Same bialgebra written in the basis given by the columns of `basis`.
GeneralizedBialgebra change_basis(const GeneralizedBialgebra& b, const Matrix& basis, std::vector<std::string> labels);

/// First kind: h abelian of even dimension, r nondegenerate on h, φ₀ ∈ h° ∖ {0}.
GeneralizedBialgebra build_first_kind(const LieAlgebra& g, const std::vector<Multivector>& h_basis,
                                      const Multivector& r, const Form& phi0);

/// Second kind: r = λe1∧e2, X₀ = λ¹e1 + λ²e2. Without φ₀, a 1-cocycle with
/// φ₀(e1) = λ²/λ and φ₀(e2) = −λ¹/λ is solved for.
GeneralizedBialgebra build_second_kind(const LieAlgebra& g, const Multivector& e1, const Multivector& e2,
                                       const Rational& lambda, const Rational& lambda1, const Rational& lambda2,
                                       std::optional<Form> phi0 = std::nullopt);

struct ThirdKindFrame {
  Multivector e1, e2, e3, e4;
};

/// (r, X₀) of the third kind with respect to a frame.
std::pair<Multivector, Multivector> third_kind_pair(const ThirdKindFrame& f, const Rational& l1, const Rational& l2,
                                                    const Rational& l3);

/// Third kind on an su(2)-frame e1,e2,e3 and e4 commuting with it. Without
/// φ₀, e4 must be central and φ₀ = ⟨·,e4⟩/⟨e4,e4⟩ for the invariant product.
GeneralizedBialgebra build_third_kind(const LieAlgebra& g, const ThirdKindFrame& frame, const Rational& l1,
                                      const Rational& l2, const Rational& l3, std::optional<Form> phi0 = std::nullopt);

struct Extraction {
  JacobiPair pair;
  CharacteristicSubalgebra characteristic;
};

/// r = −d_{*X₀}Y₀ for central Y₀ with φ₀(Y₀) = 1, verified against the bialgebra.
Extraction extract_jacobi(const GeneralizedBialgebra& b, const Multivector& y0);

/// Y₀ = Ȳ₀/φ₀(Ȳ₀) with φ₀ = ⟨·, Ȳ₀⟩ for the invariant scalar product.
Multivector default_y0(const GeneralizedBialgebra& b);

struct ThirdKindCertificate {
  Form lcs_omega2;                        // Ω on h
  Form lee;                               // ω on h
  Multivector y0;                         // in h, ω(Y₀) = 1, central
  Form eta_bar;                           // −i(Y₀)Ω on h
  std::vector<std::vector<Rational>> h_prime;  // ker ω, in h coordinates
  LieAlgebra h_prime_algebra;
  Form eta;                               // η̄ restricted to h'
  Multivector r_prime;                    // contact 2-vector on h', in h' coordinates
  Multivector mu_r_prime;                 // μ(r') = −X₀
  Multivector e4;                         // −Y₀ in g coordinates
};

struct SemidirectData {
  Form theta0;                            // θ₀ with θ₀(X₀) = 1
  Matrix adapted_basis;                   // columns: basis of ker θ₀, then X₀
  LieAlgebra h;
  LieAlgebra h_star;
  Matrix psi;                             // Ψ on h
};

enum class CompactKind { LieBialgebra, First, Second, Third, Phi0ZeroSemidirect };
std::string to_string(CompactKind kind);

struct Classification {
  CompactKind kind = CompactKind::LieBialgebra;
  std::optional<Extraction> extraction;
  std::optional<ThirdKindCertificate> third;
  std::optional<SemidirectData> semidirect;
};

/// Requires g compact and check_glb to pass.
Classification classify_compact(const GeneralizedBialgebra& b);

/// g = h ⊕ ℝ with [(α,λ),(β,μ)]* = ([α,β]_{h*} − λ(Ψ*−Id)β + μ(Ψ*−Id)α, 0),
/// φ₀ = 0, X₀ = (0,1).
GeneralizedBialgebra build_semidirect_glb(const LieAlgebra& h, const LieAlgebra& h_star, const Matrix& psi);

}  // namespace glb
