#include <gtest/gtest.h>

#include <numeric>

#include "generators.hpp"
#include "glb/bialgebra.hpp"
#include "glb/catalog.hpp"
#include "glb/jacobi.hpp"
#include "glb/schouten.hpp"
#include "oracles.hpp"

using glb::Form;
using glb::GeneralizedBialgebra;
using glb::LieAlgebra;
using glb::Matrix;
using glb::Multivector;
using glb::Rational;
using glb::YbData;

namespace {

Multivector e(std::size_t n, std::initializer_list<std::size_t> idx, Rational c = 1) {
  return Multivector::monomial(n, idx, c);
}
Form f(std::size_t n, std::initializer_list<std::size_t> idx, Rational c = 1) { return Form::monomial(n, idx, c); }

LieAlgebra trivial_dual(const LieAlgebra& g) {
  return LieAlgebra(g.name() + "*", glb::dual_labels(g.labels()), {});
}

/// [α,β]*(X) = −[X,r](α,β) + r(α,β)φ₀(X) + α(X₀)β(X) − β(X₀)α(X), evaluated with oracle routines.
Rational dual_bracket_value(const YbData& y, const oracle::Vec& a, const oracle::Vec& b, std::size_t x) {
  const std::size_t n = y.g.dim();
  const Multivector ex = Multivector::basis(n, x);
  const Rational xr = oracle::evaluate(oracle::lie_derivative(y.g, ex, y.r), {a, b});
  const Rational rab = oracle::evaluate(y.r, {a, b});
  const auto x0 = y.x0.coordinates();
  Rational ax0(0), bx0(0);
  for (std::size_t i = 0; i < n; ++i) ax0 += a[i] * x0[i], bx0 += b[i] * x0[i];
  return -xr + rab * y.phi0.component(x) + ax0 * b[x] - bx0 * a[x];
}

void expect_dual_matches_oracle(const YbData& y, const LieAlgebra& dual) {
  const std::size_t n = y.g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t x = 0; x < n; ++x) {
        EXPECT_EQ(dual.constant(i, j, x), dual_bracket_value(y, oracle::unit(n, i), oracle::unit(n, j), x))
            << y.g.name() << " pair " << i << "," << j << " component " << x;
      }
}

Matrix permutation(const std::vector<std::size_t>& p) {
  Matrix m(p.size(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = Rational(1);
  return m;
}

}  // namespace

TEST(Bialgebra, DualLabels) {
  EXPECT_EQ(glb::dual_label("e1"), "e^1");
  EXPECT_EQ(glb::dual_label("e12"), "e^12");
  EXPECT_EQ(glb::dual_label("z"), "z*");
  EXPECT_EQ(glb::dual_labels({"e1", "x"}), (std::vector<std::string>{"e^1", "x*"}));
}

TEST(Bialgebra, CheckGlbExamples) {
  const GeneralizedBialgebra b = glb::noncob4();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(b.g.bracket_basis(3, i), e(4, {i}));
  EXPECT_EQ(b.phi0, f(4, {3}));
  EXPECT_EQ(b.x0, e(4, {0}));
  EXPECT_TRUE(glb::check_glb(b).ok);

  const LieAlgebra a = glb::abelian(3);
  EXPECT_TRUE(glb::check_glb({a, trivial_dual(a), Form(3, 1), Multivector(3, 1)}).ok);

  GeneralizedBialgebra forced = b;
  forced.x0 = e(4, {3});
  const auto rep = glb::check_glb(forced);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.condalg2);
  EXPECT_EQ(rep.phi0_x0, Rational(1));

  GeneralizedBialgebra mismatched = b;
  mismatched.g_star = trivial_dual(glb::abelian(3));
  EXPECT_THROW(glb::check_glb(mismatched), glb::DimensionMismatch);
}

TEST(Bialgebra, YbHypothesesExamples) {
  const auto s3 = glb::check_yb_hypotheses(glb::solvable3_yb());
  EXPECT_TRUE(s3.ok && s3.rr_invariant && s3.x0_r_zero && s3.s_invariant);
  const YbData sd = glb::semidirect4_yb();
  EXPECT_TRUE(glb::check_yb_hypotheses(sd).ok);
  EXPECT_EQ(sd.r, e(4, {0, 1}) - e(4, {2, 3}, 2));
  EXPECT_EQ(glb::check_yb_hypotheses(sd).rr_term, e(4, {0, 1, 2}, 2));
  for (const auto& g : gen::catalog_algebras()) {
    gen::Rng rng;
    const YbData zero{g, rng.cocycle(g), Multivector(g.dim(), 2), Multivector(g.dim(), 1)};
    EXPECT_TRUE(glb::check_yb_hypotheses(zero).ok) << g.name();
  }
  EXPECT_THROW(glb::check_yb_hypotheses({glb::su2(), f(3, {0}), Multivector(3, 2), Multivector(3, 1)}),
               glb::PreconditionFailed);
}

TEST(Bialgebra, DualBracketExamples) {
  const YbData s3 = glb::solvable3_yb();
  const LieAlgebra d3 = glb::build_dual_bracket(s3);
  EXPECT_TRUE(d3.bracket_basis(0, 1).is_zero());
  EXPECT_EQ(d3.bracket_basis(0, 2), e(3, {2}, -1));
  EXPECT_EQ(d3.bracket_basis(1, 2), e(3, {2}));
  expect_dual_matches_oracle(s3, d3);

  const YbData h = glb::h11_yb(2);
  EXPECT_EQ(h.x0, e(3, {2}));
  EXPECT_TRUE(h.phi0.is_zero());
  const LieAlgebra dh = glb::build_dual_bracket(h);
  EXPECT_EQ(dh.bracket_basis(0, 2), e(3, {0}, -3));
  EXPECT_EQ(dh.bracket_basis(1, 2), e(3, {1}, -3));
  EXPECT_TRUE(dh.bracket_basis(0, 1).is_zero());
  expect_dual_matches_oracle(h, dh);

  const YbData sd = glb::semidirect4_yb();
  const LieAlgebra dsd = glb::build_dual_bracket(sd);
  ASSERT_EQ(dsd.table().size(), 1U);
  EXPECT_EQ(dsd.bracket_basis(2, 3), e(4, {3}));
  expect_dual_matches_oracle(sd, dsd);
  EXPECT_EQ(dsd.labels(), glb::dual_labels(sd.g.labels()));
}

TEST(Bialgebra, DualBracketRejectsFailedHypotheses) {
  const LieAlgebra su2 = glb::su2();
  // X₀ = e1 with r = 0 makes [X₀, r] = 0 but i(φ₀)r − X₀ = −e1 is not invariant.
  EXPECT_THROW(glb::build_dual_bracket({su2, Form(3, 1), Multivector(3, 2), e(3, {0})}), glb::PreconditionFailed);
}

TEST(Bialgebra, BuildFromJacobiFamilies) {
  for (auto l : {std::array<Rational, 3>{1, 0, 0}, {1, 2, -1}, {0, 0, Rational(2, 3)}}) {
    const auto u = glb::lcs_from_contact_times_line(glb::su2_contact_pair(l[0], l[1], l[2]));
    const auto built = glb::build_from_jacobi({u.algebra, f(4, {3}), u.r, u.x0});
    EXPECT_TRUE(glb::check_glb(built.glb).ok);
    EXPECT_TRUE(built.homomorphism);
    EXPECT_TRUE(built.isomorphism);
  }
  const auto gl = glb::lcs_from_contact_times_line(glb::sl2r_contact_pair(1, 0, 0));
  const auto gb = glb::build_from_jacobi({gl.algebra, f(4, {3}), gl.r, gl.x0});
  EXPECT_TRUE(glb::check_glb(gb.glb).ok);
  EXPECT_TRUE(gb.homomorphism);

  // Rank-3 su(2) pair padded into u(2): i(e⁴)r = 0 differs from X₀.
  const auto c = glb::su2_contact_pair(1, 0, 0);
  Multivector r(4, 2), x0(4, 1);
  for (const auto& [idx, v] : c.r.terms()) r.add_term(idx, v);
  for (const auto& [idx, v] : c.x0.terms()) x0.add_term(idx, v);
  EXPECT_THROW(glb::build_from_jacobi({glb::u2(), f(4, {3}), r, x0}), glb::PreconditionFailed);

  const auto semidirect = glb::semidirect4_yb();
  EXPECT_THROW(glb::build_from_jacobi(semidirect), glb::PreconditionFailed);
}

TEST(Bialgebra, HeisenbergContactGivesAbelianDual) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const LieAlgebra h = glb::heisenberg(n);
    const auto jp = glb::contact_to_jacobi({h, Form::basis(2 * n + 1, 2 * n)});
    const GeneralizedBialgebra b = glb::build_yb_glb({h, Form(2 * n + 1, 1), jp.r, jp.x0});
    EXPECT_TRUE(b.g_star.is_abelian());
    EXPECT_TRUE(glb::check_glb(b).ok);
  }
}

TEST(Bialgebra, DualRResidualVanishesOnBuilds) {
  for (const YbData& y : {glb::solvable3_yb(), glb::h11_yb(2, 1, -1), glb::semidirect4_yb()}) {
    const LieAlgebra dual = glb::build_dual_bracket(y);
    EXPECT_TRUE(glb::dual_r_residual(y, dual).is_zero()) << y.g.name();
    const LieAlgebra d = glb::dual_bracket_coadjoint(y);
    EXPECT_EQ(d.table(), glb::dual_bracket_pointwise(y).table());
  }
}

TEST(Bialgebra, SolveCoboundary) {
  EXPECT_FALSE(glb::solve_coboundary(glb::noncob4()));
  for (const YbData& y : {glb::solvable3_yb(), glb::h11_yb(2), glb::semidirect4_yb()}) {
    const GeneralizedBialgebra b = glb::build_yb_glb(y);
    const auto sol = glb::solve_coboundary(b);
    ASSERT_TRUE(sol) << y.g.name();
    std::vector<std::vector<Rational>> span;
    for (const auto& h : sol->homogeneous) {
      std::vector<Rational> v;
      for (std::size_t i = 0; i < y.g.dim(); ++i)
        for (std::size_t j = i + 1; j < y.g.dim(); ++j) v.push_back(h.coefficient(glb::MultiIndex::single(i).with(j)));
      span.push_back(v);
    }
    const Multivector diff = y.r - sol->particular;
    std::vector<Rational> dv;
    for (std::size_t i = 0; i < y.g.dim(); ++i)
      for (std::size_t j = i + 1; j < y.g.dim(); ++j) dv.push_back(diff.coefficient(glb::MultiIndex::single(i).with(j)));
    EXPECT_TRUE(glb::Subspace::span(dv.size(), span).contains(dv)) << y.g.name();
  }
}

TEST(Bialgebra, SolveCoboundaryCocycleRegression) {
  // Abelian base on h(1,1)*, dual h(1,1), X₀ = e¹: the solver finds no r.
  const GeneralizedBialgebra b = glb::glb_from_cocycle(glb::heisenberg(1), f(3, {0}));
  ASSERT_TRUE(glb::check_glb(b).ok);
  EXPECT_FALSE(glb::solve_coboundary(b));
}

TEST(Bialgebra, GlbFromCocycle) {
  const auto h = glb::glb_from_cocycle(glb::heisenberg(1), f(3, {0}));
  EXPECT_TRUE(glb::check_glb(h).ok);
  EXPECT_TRUE(h.g.is_abelian());
  EXPECT_TRUE(h.phi0.is_zero());
  EXPECT_EQ(h.g_star.table(), glb::heisenberg(1).table());
  EXPECT_EQ(h.x0, e(3, {0}));
  const auto t = glb::glb_from_cocycle(glb::abelian(2), Form(2, 1));
  EXPECT_TRUE(t.g.is_abelian() && t.g_star.is_abelian() && t.x0.is_zero());
  EXPECT_TRUE(glb::check_glb(glb::glb_from_cocycle(glb::solvable3(), f(3, {2}))).ok);
  EXPECT_THROW(glb::glb_from_cocycle(glb::solvable3(), f(3, {0})), glb::PreconditionFailed);
}

TEST(Bialgebra, KindBuilders) {
  const GeneralizedBialgebra third = glb::thirdkind_u2();
  EXPECT_TRUE(glb::check_glb(third).ok);
  EXPECT_EQ(third.x0, e(4, {0}, -1));
  EXPECT_EQ(third.phi0, f(4, {3}));

  const GeneralizedBialgebra second = glb::secondkind4();
  EXPECT_TRUE(glb::check_glb(second).ok);
  EXPECT_EQ(second.x0, e(4, {0}));

  const GeneralizedBialgebra first = glb::firstkind4();
  EXPECT_TRUE(glb::check_glb(first).ok);
  EXPECT_TRUE(first.x0.is_zero());
  EXPECT_EQ(first.phi0, f(4, {2}));

  const LieAlgebra u2 = glb::u2();
  EXPECT_THROW(glb::build_first_kind(u2, {e(4, {0}), e(4, {1})}, e(4, {0, 1}), f(4, {3})), glb::PreconditionFailed);
  EXPECT_THROW(glb::build_first_kind(glb::abelian(4), {e(4, {0}), e(4, {1})}, e(4, {0, 1}), f(4, {0})),
               glb::PreconditionFailed);
  EXPECT_THROW(glb::build_first_kind(glb::sl2r(), {e(3, {0}), e(3, {1})}, e(3, {0, 1}), Form(3, 1)),
               glb::PreconditionFailed);
  EXPECT_THROW(glb::build_second_kind(glb::abelian(4), e(4, {0}), e(4, {1}), 0, 1, 0), glb::PreconditionFailed);
  EXPECT_THROW(glb::build_second_kind(u2, e(4, {0}), e(4, {1}), 1, 1, 0), glb::PreconditionFailed);
  const glb::ThirdKindFrame frame{e(4, {0}), e(4, {1}), e(4, {2}), e(4, {3})};
  EXPECT_THROW(glb::build_third_kind(u2, frame, 0, 0, 0), glb::PreconditionFailed);
  const glb::ThirdKindFrame skew{e(4, {1}), e(4, {0}), e(4, {2}), e(4, {3})};
  EXPECT_THROW(glb::build_third_kind(u2, skew, 1, 0, 0), glb::PreconditionFailed);
}

TEST(Bialgebra, ExtractJacobi) {
  const GeneralizedBialgebra third = glb::thirdkind_u2();
  const auto ex = glb::extract_jacobi(third, e(4, {3}));
  EXPECT_EQ(ex.pair.r, e(4, {0, 3}) + e(4, {1, 2}));
  EXPECT_EQ(ex.pair.x0, e(4, {0}, -1));
  const auto expected = glb::third_kind_pair({e(4, {0}), e(4, {1}), e(4, {2}), e(4, {3})}, 1, 0, 0);
  EXPECT_EQ(ex.pair.r, expected.first);
  EXPECT_EQ(ex.pair.x0, expected.second);
  EXPECT_EQ(ex.characteristic.basis.size(), 4U);
  EXPECT_EQ(glb::default_y0(third), e(4, {3}));

  const GeneralizedBialgebra first = glb::firstkind4();
  const auto ef = glb::extract_jacobi(first, e(4, {2}) + e(4, {0}));
  EXPECT_TRUE(ef.pair.x0.is_zero());
  EXPECT_EQ(ef.pair.r, e(4, {0, 1}));

  EXPECT_THROW(glb::extract_jacobi(glb::glb_from_cocycle(glb::heisenberg(1), f(3, {0})), e(3, {0})),
               glb::PreconditionFailed);
  EXPECT_THROW(glb::extract_jacobi(third, e(4, {3}, 2)), glb::PreconditionFailed);
  EXPECT_THROW(glb::extract_jacobi(third, e(4, {0}) + e(4, {3})), glb::PreconditionFailed);
}

TEST(Bialgebra, ClassifyCatalog) {
  const auto third = glb::classify_compact(glb::thirdkind_u2());
  EXPECT_EQ(third.kind, glb::CompactKind::Third);
  ASSERT_TRUE(third.third);
  EXPECT_TRUE(glb::is_contact(third.third->h_prime_algebra, third.third->eta));
  EXPECT_EQ(glb::classify_compact(glb::firstkind4()).kind, glb::CompactKind::First);
  EXPECT_EQ(glb::classify_compact(glb::secondkind4()).kind, glb::CompactKind::Second);
  const LieAlgebra su2 = glb::su2();
  EXPECT_EQ(glb::classify_compact({su2, trivial_dual(su2), Form(3, 1), Multivector(3, 1)}).kind,
            glb::CompactKind::LieBialgebra);
  const auto sl = glb::sl2r();
  EXPECT_THROW(glb::classify_compact({sl, trivial_dual(sl), Form(3, 1), Multivector(3, 1)}), glb::PreconditionFailed);
  EXPECT_EQ(glb::to_string(glb::CompactKind::Phi0ZeroSemidirect), "phi0-zero-semidirect");
}

TEST(Bialgebra, SemidirectBuilder) {
  const LieAlgebra su2 = glb::su2();
  const Matrix ad1 = glb::ad_matrix(su2, e(3, {0}));
  const GeneralizedBialgebra b = glb::build_semidirect_glb(su2, trivial_dual(su2), ad1);
  EXPECT_TRUE(glb::check_glb(b).ok);
  EXPECT_TRUE(b.phi0.is_zero());
  EXPECT_EQ(b.x0, e(4, {3}));
  // [(α,λ),(β,μ)]* = (μ(coad_Z α − α) − λ(coad_Z β − β), 0) where Ψ(X) = [X,Z], so Z = −e1.
  // coad_Z α = −α∘ad_Z has matrix −ad_Zᵀ = ad1ᵀ.
  const Matrix coad = ad1.transpose() - Matrix::identity(3);
  for (std::size_t i = 0; i < 3; ++i) {
    Multivector expect(4, 1);
    for (std::size_t k = 0; k < 3; ++k) expect.add_term(glb::MultiIndex::single(k), coad(k, i));
    EXPECT_EQ(b.g_star.bracket_basis(i, 3), expect);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(b.g_star.bracket_basis(i, j).is_zero());
  }
  const auto cls = glb::classify_compact(b);
  EXPECT_EQ(cls.kind, glb::CompactKind::Phi0ZeroSemidirect);
  ASSERT_TRUE(cls.semidirect);
  EXPECT_EQ(cls.semidirect->h.table(), su2.table());
  EXPECT_EQ(cls.semidirect->psi, ad1);
  EXPECT_TRUE(cls.semidirect->h_star.is_abelian());

  const LieAlgebra a2 = glb::abelian(2);
  const auto ab = glb::build_semidirect_glb(a2, trivial_dual(a2), Matrix::identity(2));
  EXPECT_TRUE(glb::check_glb(ab).ok);
  EXPECT_TRUE(ab.g_star.is_abelian());

  const LieAlgebra h = glb::with_center(su2, 2);
  Matrix proj(5, 5);
  proj(3, 3) = proj(4, 4) = Rational(1);
  LieAlgebra::Table zt;
  zt[{3, 4}] = e(5, {3});
  const LieAlgebra hs("h*", glb::dual_labels(h.labels()), zt);
  const auto nz = glb::build_semidirect_glb(h, hs, proj);
  EXPECT_TRUE(glb::check_glb(nz).ok);
  const auto nzc = glb::classify_compact(nz);
  EXPECT_EQ(nzc.kind, glb::CompactKind::Phi0ZeroSemidirect);
  ASSERT_TRUE(nzc.semidirect);
  EXPECT_FALSE(nzc.semidirect->h_star.is_abelian());

  EXPECT_THROW(glb::build_semidirect_glb(su2, trivial_dual(su2), Matrix::identity(3)), glb::PreconditionFailed);
}

TEST(BialgebraProperty, ClassificationStableUnderPermutation) {
  gen::Rng rng;
  std::vector<GeneralizedBialgebra> inputs{glb::thirdkind_u2(), glb::firstkind4(), glb::secondkind4(),
                                           glb::build_semidirect_glb(glb::su2(), trivial_dual(glb::su2()),
                                                                     glb::ad_matrix(glb::su2(), e(3, {1})))};
  inputs.push_back(glb::build_third_kind(glb::u2(), {e(4, {0}), e(4, {1}), e(4, {2}), e(4, {3})}, 1, 2, -1));
  inputs.push_back(glb::build_second_kind(glb::u2(), e(4, {3}), e(4, {0}), 2, 0, 3));
  for (const auto& b : inputs) {
    const auto kind = glb::classify_compact(b).kind;
    const std::size_t n = b.g.dim();
    for (int t = 0; t < 6; ++t) {
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng.engine());
      const auto moved = glb::change_basis(b, permutation(p), glb::default_labels(n));
      ASSERT_TRUE(glb::check_glb(moved).ok);
      EXPECT_EQ(glb::classify_compact(moved).kind, kind) << b.g.name() << " -> " << glb::to_string(kind);
    }
  }
}

TEST(BialgebraProperty, DualBracketAgreesWithOracle) {
  gen::Rng rng;
  int accepted = 0;
  for (int t = 0; t < 3000 && accepted < 40; ++t) {
    const LieAlgebra g = gen::algebra(rng);
    const std::size_t n = g.dim();
    const YbData y{g, rng.cocycle(g), rng.vector(n, 2, 0.4), rng.chance(0.5) ? rng.vector(n, 1, 0.4) : Multivector(n, 1)};
    if (!glb::check_yb_hypotheses(y).ok) continue;
    ++accepted;
    const LieAlgebra dual = glb::build_dual_bracket(y);
    EXPECT_TRUE(glb::validate(dual).ok);
    expect_dual_matches_oracle(y, dual);
    const GeneralizedBialgebra b = glb::build_yb_glb(y);
    EXPECT_TRUE(glb::check_glb(b).ok);
    EXPECT_TRUE(glb::dual_r_residual(y, dual).is_zero());
    EXPECT_TRUE(glb::solve_coboundary(b).has_value());
  }
  EXPECT_GE(accepted, 20);
}

TEST(BialgebraProperty, BuildersRoundTripThroughExtraction) {
  gen::Rng rng;
  const LieAlgebra u2 = glb::u2();
  const glb::ThirdKindFrame frame{e(4, {0}), e(4, {1}), e(4, {2}), e(4, {3})};
  for (int t = 0; t < 15; ++t) {
    Rational l1 = rng.small_rational(), l2 = rng.small_rational(), l3 = rng.small_rational();
    if (l1.is_zero() && l2.is_zero() && l3.is_zero()) l1 = 1;
    const auto b = glb::build_third_kind(u2, frame, l1, l2, l3);
    const auto [r, x0] = glb::third_kind_pair(frame, l1, l2, l3);
    const auto ex = glb::extract_jacobi(b, glb::default_y0(b));
    EXPECT_EQ(ex.pair.r, r);
    EXPECT_EQ(ex.pair.x0, x0);
    EXPECT_EQ(glb::classify_compact(b).kind, glb::CompactKind::Third);
  }
  for (int t = 0; t < 15; ++t) {
    const Rational lambda = rng.nonzero_rational(), l1 = rng.small_rational(), l2 = rng.small_rational();
    if (l1.is_zero() && l2.is_zero()) continue;
    const auto b = glb::build_second_kind(glb::abelian(4), e(4, {0}), e(4, {1}), lambda, l1, l2);
    const auto ex = glb::extract_jacobi(b, glb::default_y0(b));
    EXPECT_EQ(ex.pair.r, lambda * e(4, {0, 1}));
    EXPECT_EQ(ex.pair.x0, l1 * e(4, {0}) + l2 * e(4, {1}));
    EXPECT_EQ(glb::classify_compact(b).kind, glb::CompactKind::Second);
  }
  for (int t = 0; t < 10; ++t) {
    const Rational c = rng.nonzero_rational();
    const Form phi0 = f(4, {2}) + rng.small_rational() * f(4, {3});
    const auto b = glb::build_first_kind(glb::abelian(4), {e(4, {0}), e(4, {1})}, c * e(4, {0, 1}), phi0);
    const auto ex = glb::extract_jacobi(b, glb::default_y0(b));
    EXPECT_EQ(ex.pair.r, c * e(4, {0, 1}));
    EXPECT_TRUE(ex.pair.x0.is_zero());
    EXPECT_EQ(glb::classify_compact(b).kind, glb::CompactKind::First);
  }
}
