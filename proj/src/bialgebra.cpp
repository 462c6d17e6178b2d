#include "glb/bialgebra.hpp"

#include <map>
#include <sstream>

namespace glb {

namespace {

std::string show(const Multivector& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, coeff] : m.terms()) {
    if (!first) os << " + ";
    first = false;
    os << coeff;
    for (const auto i : index.indices()) os << (i == index.indices().front() ? "*" : "^") << "e" << i + 1;
  }
  if (first) os << "0";
  return os.str();
}

void fail_if(const std::vector<std::string>& problems, const char* what) {
  if (problems.empty()) return;
  std::string msg = what;
  for (const auto& p : problems) msg += "\n  - " + p;
  throw PreconditionFailed(msg);
}

Multivector as_vector(const Form& f) { return reinterpret<VectorKind>(f); }

MultiIndex pair_index(std::size_t i, std::size_t j) {
  return MultiIndex::from_bits((std::uint64_t{1} << i) | (std::uint64_t{1} << j));
}

// (coad_X α)(Y) = −α([X,Y]).
Form coad(const LieAlgebra& g, const Multivector& x, const Form& alpha) {
  const std::size_t n = g.dim();
  Form out(n, 1);
  for (std::size_t k = 0; k < n; ++k)
    out.add_term(MultiIndex::single(k), -pair(alpha, bracket(g, x, Multivector::basis(n, k))));
  return out;
}

Multivector push_forward(const std::vector<std::vector<Rational>>& basis, const Multivector& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& [index, coeff] : v.terms()) {
    const auto& b = basis[index.indices().front()];
    for (std::size_t i = 0; i < n; ++i) out[i] += coeff * b[i];
  }
  return Multivector::from_coordinates(out);
}

}  // namespace

std::string dual_label(const std::string& label) {
  if (label.size() >= 2 && label[0] == 'e' && label.find_first_not_of("0123456789", 1) == std::string::npos) {
    return "e^" + label.substr(1);
  }
  return label + "*";
}

std::vector<std::string> dual_labels(const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(dual_label(l));
  return out;
}

GlbReport check_glb(const GeneralizedBialgebra& b) {
  const std::size_t n = b.g.dim();
  if (b.g_star.dim() != n) throw DimensionMismatch("g and g* have different dimensions");
  b.phi0.require_grade(1, "phi0");
  b.phi0.require_dim(n, "phi0");
  b.x0.require_grade(1, "x0");
  b.x0.require_dim(n, "x0");

  GlbReport rep;
  rep.g_jacobi = validate(b.g).ok;
  rep.g_star_jacobi = validate(b.g_star).ok;
  rep.phi0_cocycle = is_one_cocycle(b.g, b.phi0);
  rep.x0_cocycle = is_dual_cocycle(b.g_star, b.x0);

  std::vector<Multivector> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Multivector ei = Multivector::basis(n, i);
    d[i] = dual_differential(b.g_star, ei) + wedge(b.x0, ei);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Multivector xy = b.g.bracket_basis(i, j);
      const Multivector lhs = dual_differential(b.g_star, xy) + wedge(b.x0, xy);
      const Multivector rhs = phi0_schouten_unchecked(b.g, b.phi0, Multivector::basis(n, i), d[j]) -
                              phi0_schouten_unchecked(b.g, b.phi0, Multivector::basis(n, j), d[i]);
      Multivector res = lhs - rhs;
      if (!res.is_zero()) rep.condalg1_residuals.push_back({i, j, std::move(res)});
    }
  }
  rep.condalg1 = rep.condalg1_residuals.empty();
  rep.phi0_x0 = evaluate(b.phi0, b.x0);
  rep.condalg2 = rep.phi0_x0.is_zero();
  for (std::size_t i = 0; i < n; ++i) {
    const Multivector ei = Multivector::basis(n, i);
    Multivector res = contract_unchecked(b.phi0, dual_differential(b.g_star, ei)) + bracket(b.g, b.x0, ei);
    if (!res.is_zero()) rep.condalg3_residuals.push_back({i, std::move(res)});
  }
  rep.condalg3 = rep.condalg3_residuals.empty();
  rep.ok = rep.g_jacobi && rep.g_star_jacobi && rep.phi0_cocycle && rep.x0_cocycle && rep.condalg1 &&
           rep.condalg2 && rep.condalg3;
  return rep;
}

YbReport check_yb_hypotheses(const YbData& y) {
  const std::size_t n = y.g.dim();
  require_cocycle(y.g, y.phi0, "phi0");
  y.r.require_grade(2, "r");
  y.r.require_dim(n, "r");
  y.x0.require_grade(1, "x0");
  y.x0.require_dim(n, "x0");
  YbReport rep;
  rep.rr_term = schouten(y.g, y.r, y.r) - Rational(2) * wedge(y.x0, y.r);
  rep.x0_r = schouten(y.g, y.x0, y.r);
  rep.s_term = contract(y.phi0, y.r) - y.x0;
  for (std::size_t i = 0; i < n; ++i) {
    const Multivector ei = Multivector::basis(n, i);
    Multivector a = ad_rep(y.g, y.phi0, Rational(1), ei, rep.rr_term);
    if (!a.is_zero()) rep.rr_action.push_back({i, std::move(a)});
    Multivector s = ad_rep(y.g, y.phi0, Rational(0), ei, rep.s_term);
    if (!s.is_zero()) rep.s_action.push_back({i, std::move(s)});
  }
  rep.rr_invariant = rep.rr_action.empty();
  rep.x0_r_zero = rep.x0_r.is_zero();
  rep.s_invariant = rep.s_action.empty();
  rep.ok = rep.rr_invariant && rep.x0_r_zero && rep.s_invariant;
  return rep;
}

LieAlgebra dual_bracket_coadjoint(const YbData& y) {
  const std::size_t n = y.g.dim();
  const Matrix s = sharp(y.r);
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Form alpha = Form::basis(n, a);
      const Form beta = Form::basis(n, b);
      const Multivector sa = Multivector::from_coordinates(s.column(a));
      const Multivector sb = Multivector::from_coordinates(s.column(b));
      Form v = coad(y.g, sb, alpha) - coad(y.g, sa, beta) + evaluate(y.r, alpha, beta) * y.phi0 +
               y.x0.component(a) * beta - y.x0.component(b) * alpha;
      if (!v.is_zero()) table.emplace(std::make_pair(a, b), as_vector(v));
    }
  }
  return LieAlgebra(y.g.name() + "*", dual_labels(y.g.labels()), std::move(table));
}

LieAlgebra dual_bracket_pointwise(const YbData& y) {
  const std::size_t n = y.g.dim();
  std::vector<Multivector> xr(n);
  for (std::size_t k = 0; k < n; ++k) xr[k] = schouten(y.g, Multivector::basis(n, k), y.r);
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const Rational rab = y.r.coefficient(pair_index(a, b));
      Multivector v(n, 1);
      for (std::size_t k = 0; k < n; ++k) {
        Rational c = -xr[k].coefficient(pair_index(a, b)) + rab * y.phi0.component(k);
        if (k == b) c += y.x0.component(a);
        if (k == a) c -= y.x0.component(b);
        v.add_term(MultiIndex::single(k), c);
      }
      if (!v.is_zero()) table.emplace(std::make_pair(a, b), std::move(v));
    }
  }
  return LieAlgebra(y.g.name() + "*", dual_labels(y.g.labels()), std::move(table));
}

LieAlgebra build_dual_bracket(const YbData& y) {
  const YbReport rep = check_yb_hypotheses(y);
  std::vector<std::string> problems;
  if (!rep.rr_invariant) problems.push_back("[r,r] - 2 X0^r is not ad_(phi0,1)-invariant: " + show(rep.rr_term));
  if (!rep.x0_r_zero) problems.push_back("[X0,r] = " + show(rep.x0_r) + " is not zero");
  if (!rep.s_invariant) problems.push_back("i(phi0)r - X0 = " + show(rep.s_term) + " is not ad_(phi0,0)-invariant");
  fail_if(problems, "Yang-Baxter hypotheses fail:");
  LieAlgebra dual = dual_bracket_coadjoint(y);
  if (dual.table() != dual_bracket_pointwise(y).table()) {
    throw VerificationFailed("coadjoint and pointwise dual bracket formulas disagree");
  }
  const ValidationReport v = validate(dual);
  if (!v.ok) {
    throw VerificationFailed("dual bracket violates the Jacobi identity: " + show(v.violations.front().residual));
  }
  return dual;
}

GeneralizedBialgebra build_yb_glb(const YbData& y) {
  GeneralizedBialgebra b{y.g, build_dual_bracket(y), y.phi0, y.x0};
  const GlbReport rep = check_glb(b);
  if (!rep.ok) throw VerificationFailed("Yang-Baxter construction does not satisfy the bialgebra conditions");
  return b;
}

Multivector dual_r_residual(const YbData& y, const LieAlgebra& dual) {
  return dual_differential(dual, y.r) - (schouten(y.g, y.r, y.r) - Rational(2) * wedge(y.x0, y.r) -
                                         wedge(contract(y.phi0, y.r), y.r));
}

JacobiBuild build_from_jacobi(const YbData& y) {
  const std::size_t n = y.g.dim();
  std::vector<std::string> problems;
  if (!is_one_cocycle(y.g, y.phi0)) problems.push_back("phi0 is not a 1-cocycle");
  const JacobiReport jr = check_jacobi({y.g, y.r, y.x0});
  if (!jr.rr_residual.is_zero()) problems.push_back("[r,r] - 2 X0^r = " + show(jr.rr_residual));
  if (!jr.x0_residual.is_zero()) problems.push_back("[X0,r] = " + show(jr.x0_residual));
  const Multivector s = contract(y.phi0, y.r) - y.x0;
  if (!s.is_zero()) problems.push_back("i(phi0)r - X0 = " + show(s));
  fail_if(problems, "Jacobi construction preconditions fail:");

  JacobiBuild out;
  out.glb = build_yb_glb(y);
  const Matrix sh = sharp(y.r);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto lhs = sh.apply(out.glb.g_star.bracket_basis(a, b).coordinates());
      const Multivector rhs = -bracket(y.g, Multivector::from_coordinates(sh.column(a)),
                                        Multivector::from_coordinates(sh.column(b)));
      if (Multivector::from_coordinates(lhs) != rhs) {
        throw VerificationFailed("sharp map is not an anti-homomorphism on dual pair (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ")");
      }
    }
  out.homomorphism = true;
  out.isomorphism = rank(sh) == n;
  return out;
}

std::optional<CoboundarySolution> solve_coboundary(const GeneralizedBialgebra& b) {
  if (!check_glb(b).ok) throw PreconditionFailed("coboundary solver needs a valid generalized Lie bialgebra");
  const std::size_t n = b.g.dim();
  std::vector<MultiIndex> pairs;
  std::map<MultiIndex, std::size_t> where;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      where[pair_index(i, j)] = pairs.size();
      pairs.push_back(pair_index(i, j));
    }
  const std::size_t np = pairs.size();
  if (np == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      const Multivector ei = Multivector::basis(n, i);
      if (!(dual_differential(b.g_star, ei) + wedge(b.x0, ei)).is_zero()) return std::nullopt;
    }
    return CoboundarySolution{Multivector(n, 2), {}};
  }
  Matrix m(n * np, np);
  std::vector<Rational> rhs(n * np);
  for (std::size_t i = 0; i < n; ++i) {
    const Multivector ei = Multivector::basis(n, i);
    for (std::size_t p = 0; p < np; ++p) {
      const Multivector ep(n, 2, {{pairs[p], Rational(1)}});
      const Multivector image = ad_rep(b.g, b.phi0, Rational(1), ei, ep);
      for (const auto& [index, coeff] : image.terms()) m(i * np + where.at(index), p) = coeff;
    }
    const Multivector target = dual_differential(b.g_star, ei) + wedge(b.x0, ei);
    for (const auto& [index, coeff] : target.terms()) rhs[i * np + where.at(index)] = coeff;
  }
  const auto sol = solve(m, rhs);
  if (!sol) return std::nullopt;
  auto to_bivector = [&](const std::vector<Rational>& v) {
    Multivector r(n, 2);
    for (std::size_t p = 0; p < np; ++p) r.add_term(pairs[p], v[p]);
    return r;
  };
  CoboundarySolution out{to_bivector(sol->particular), {}};
  for (const auto& h : sol->homogeneous) out.homogeneous.push_back(to_bivector(h));
  return out;
}

GeneralizedBialgebra glb_from_cocycle(const LieAlgebra& g, const Form& phi) {
  require_cocycle(g, phi, "phi");
  const std::size_t n = g.dim();
  GeneralizedBialgebra b{LieAlgebra(g.name() + "*", dual_labels(g.labels()), {}), g, Form(n, 1), as_vector(phi)};
  if (!check_glb(b).ok) throw VerificationFailed("cocycle bialgebra fails the bialgebra conditions");
  return b;
}

GeneralizedBialgebra change_basis(const GeneralizedBialgebra& b, const Matrix& basis, std::vector<std::string> labels) {
  const auto pinv = inverse(basis);
  if (!pinv) throw PreconditionFailed("basis change matrix is singular");
  GeneralizedBialgebra out;
  out.g = change_basis(b.g, basis, labels);
  out.g_star = change_basis(b.g_star, pinv->transpose(), dual_labels(labels));
  out.phi0 = Form::from_coordinates(basis.transpose().apply(b.phi0.coordinates()));
  out.x0 = Multivector::from_coordinates(pinv->apply(b.x0.coordinates()));
  return out;
}

GeneralizedBialgebra build_first_kind(const LieAlgebra& g, const std::vector<Multivector>& h_basis,
                                      const Multivector& r, const Form& phi0) {
  const std::size_t n = g.dim();
  std::vector<std::string> problems;
  if (!is_compact(g).compact) problems.push_back("g is not compact");
  std::vector<std::vector<Rational>> vs;
  for (const auto& v : h_basis) vs.push_back(v.coordinates());
  const Subspace h = Subspace::span(n, vs);
  if (h.dim() != vs.size()) problems.push_back("h basis is linearly dependent");
  if (vs.empty() || vs.size() % 2 != 0) problems.push_back("h must have positive even dimension");
  for (std::size_t a = 0; a < h_basis.size(); ++a)
    for (std::size_t b = a + 1; b < h_basis.size(); ++b)
      if (!bracket(g, h_basis[a], h_basis[b]).is_zero()) problems.push_back("h is not abelian");
  const Matrix sh = sharp(r);
  std::vector<std::vector<Rational>> image;
  for (std::size_t i = 0; i < n; ++i) image.push_back(sh.column(i));
  if (!(Subspace::span(n, image) == h)) problems.push_back("r is not a nondegenerate 2-vector on h");
  if (!is_one_cocycle(g, phi0)) problems.push_back("phi0 is not a 1-cocycle");
  if (phi0.is_zero()) problems.push_back("phi0 is zero");
  for (const auto& v : h_basis)
    if (!evaluate(phi0, v).is_zero()) problems.push_back("phi0 does not annihilate h");
  fail_if(problems, "first kind hypotheses fail:");
  return build_from_jacobi({g, phi0, r, Multivector(n, 1)}).glb;
}

GeneralizedBialgebra build_second_kind(const LieAlgebra& g, const Multivector& e1, const Multivector& e2,
                                       const Rational& lambda, const Rational& lambda1, const Rational& lambda2,
                                       std::optional<Form> phi0) {
  const std::size_t n = g.dim();
  std::vector<std::string> problems;
  if (!is_compact(g).compact) problems.push_back("g is not compact");
  if (rank(Matrix::from_rows({e1.coordinates(), e2.coordinates()}, n)) != 2) problems.push_back("e1, e2 are dependent");
  if (!bracket(g, e1, e2).is_zero()) problems.push_back("[e1,e2] is not zero");
  if (lambda.is_zero()) problems.push_back("lambda is zero");
  if (lambda1.is_zero() && lambda2.is_zero()) problems.push_back("(lambda1, lambda2) is zero");
  fail_if(problems, "second kind hypotheses fail:");
  const Rational t1 = lambda2 / lambda;
  const Rational t2 = -lambda1 / lambda;
  if (!phi0) {
    const auto basis = one_cocycles(g).vectors();
    std::optional<LinearSolution> sol;
    if (!basis.empty()) {
      Matrix m(2, basis.size());
      for (std::size_t t = 0; t < basis.size(); ++t) {
        m(0, t) = evaluate(Form::from_coordinates(basis[t]), e1);
        m(1, t) = evaluate(Form::from_coordinates(basis[t]), e2);
      }
      sol = solve(m, {t1, t2});
    }
    if (!sol) fail_if({"no 1-cocycle takes the values lambda2/lambda, -lambda1/lambda on e1, e2"}, "second kind:");
    std::vector<Rational> c(n);
    for (std::size_t t = 0; t < basis.size(); ++t)
      for (std::size_t i = 0; i < n; ++i) c[i] += sol->particular[t] * basis[t][i];
    phi0 = Form::from_coordinates(c);
  } else {
    if (!is_one_cocycle(g, *phi0)) problems.push_back("phi0 is not a 1-cocycle");
    if (evaluate(*phi0, e1) != t1 || evaluate(*phi0, e2) != t2) problems.push_back("i(phi0)r differs from X0");
    fail_if(problems, "second kind hypotheses fail:");
  }
  const Multivector r = lambda * wedge(e1, e2);
  const Multivector x0 = lambda1 * e1 + lambda2 * e2;
  GeneralizedBialgebra b = build_from_jacobi({g, *phi0, r, x0}).glb;
  if (characteristic_subalgebra({g, r, x0}).basis.size() != 2) {
    throw VerificationFailed("second kind characteristic subalgebra is not 2-dimensional");
  }
  return b;
}

std::pair<Multivector, Multivector> third_kind_pair(const ThirdKindFrame& f, const Rational& l1, const Rational& l2,
                                                    const Rational& l3) {
  const Multivector r = l1 * (wedge(f.e2, f.e3) - wedge(f.e4, f.e1)) - l2 * (wedge(f.e1, f.e3) + wedge(f.e4, f.e2)) +
                        l3 * (wedge(f.e1, f.e2) - wedge(f.e4, f.e3));
  const Multivector x0 = -(l1 * f.e1 + l2 * f.e2 + l3 * f.e3);
  return {r, x0};
}

GeneralizedBialgebra build_third_kind(const LieAlgebra& g, const ThirdKindFrame& f, const Rational& l1,
                                      const Rational& l2, const Rational& l3, std::optional<Form> phi0) {
  const std::size_t n = g.dim();
  std::vector<std::string> problems;
  if (!is_compact(g).compact) problems.push_back("g is not compact");
  if (bracket(g, f.e1, f.e2) != f.e3) problems.push_back("[e1,e2] != e3");
  if (bracket(g, f.e1, f.e3) != -f.e2) problems.push_back("[e1,e3] != -e2");
  if (bracket(g, f.e2, f.e3) != f.e1) problems.push_back("[e2,e3] != e1");
  for (const auto* v : {&f.e1, &f.e2, &f.e3})
    if (!bracket(g, f.e4, *v).is_zero()) problems.push_back("e4 does not commute with the su(2) frame");
  if (rank(Matrix::from_rows({f.e1.coordinates(), f.e2.coordinates(), f.e3.coordinates(), f.e4.coordinates()}, n)) != 4)
    problems.push_back("frame vectors are dependent");
  if (l1.is_zero() && l2.is_zero() && l3.is_zero()) problems.push_back("(lambda1, lambda2, lambda3) is zero");
  if (!phi0 && problems.empty()) {
    if (!center(g).contains(f.e4.coordinates())) {
      problems.push_back("e4 is not central, so phi0 must be given");
    } else {
      const Matrix b = invariant_scalar_product(g);
      const auto be4 = b.apply(f.e4.coordinates());
      const Form bar = Form::from_coordinates(be4);
      phi0 = (Rational(1) / evaluate(bar, f.e4)) * bar;
    }
  }
  if (phi0) {
    if (!is_one_cocycle(g, *phi0)) problems.push_back("phi0 is not a 1-cocycle");
    if (evaluate(*phi0, f.e4) != Rational(1)) problems.push_back("phi0(e4) != 1");
  }
  fail_if(problems, "third kind hypotheses fail:");
  const auto [r, x0] = third_kind_pair(f, l1, l2, l3);
  GeneralizedBialgebra b = build_from_jacobi({g, *phi0, r, x0}).glb;
  if (characteristic_subalgebra({g, r, x0}).basis.size() != 4) {
    throw VerificationFailed("third kind characteristic subalgebra is not 4-dimensional");
  }
  return b;
}

Extraction extract_jacobi(const GeneralizedBialgebra& b, const Multivector& y0) {
  const std::size_t n = b.g.dim();
  std::vector<std::string> problems;
  if (!check_glb(b).ok) problems.push_back("input is not a generalized Lie bialgebra");
  y0.require_grade(1, "Y0");
  y0.require_dim(n, "Y0");
  if (!center(b.g).contains(y0.coordinates())) problems.push_back("Y0 is not central");
  if (evaluate(b.phi0, y0) != Rational(1)) problems.push_back("phi0(Y0) != 1");
  fail_if(problems, "extraction preconditions fail:");

  const Multivector r = -twisted_dual_differential(b.g_star, b.x0, y0);
  const Multivector s = contract(b.phi0, r) - b.x0;
  if (!s.is_zero()) throw VerificationFailed("i(phi0)r - X0 = " + show(s));
  Extraction out{{b.g, r, b.x0}, {}};
  const JacobiReport jr = check_jacobi(out.pair);
  if (!jr.ok) {
    throw VerificationFailed("extracted pair is not Jacobi: " + show(jr.rr_residual) + " ; " + show(jr.x0_residual));
  }
  if (dual_bracket_coadjoint({b.g, b.phi0, r, b.x0}).table() != b.g_star.table()) {
    throw VerificationFailed("dual bracket differs from the one rebuilt from the extracted pair");
  }
  out.characteristic = characteristic_subalgebra(out.pair);
  return out;
}

Multivector default_y0(const GeneralizedBialgebra& b) {
  if (b.phi0.is_zero()) throw PreconditionFailed("phi0 = 0, so no Y0 with phi0(Y0) = 1 exists");
  const Matrix form = invariant_scalar_product(b.g);
  const Multivector bar = Multivector::from_coordinates(inverse(form)->apply(b.phi0.coordinates()));
  return (Rational(1) / evaluate(b.phi0, bar)) * bar;
}

std::string to_string(CompactKind kind) {
  switch (kind) {
    case CompactKind::LieBialgebra:
      return "lie-bialgebra";
    case CompactKind::First:
      return "first";
    case CompactKind::Second:
      return "second";
    case CompactKind::Third:
      return "third";
    case CompactKind::Phi0ZeroSemidirect:
      return "phi0-zero-semidirect";
  }
  return "unknown";
}

namespace {

ThirdKindCertificate third_kind_certificate(const GeneralizedBialgebra& b, const Extraction& ex) {
  const CharacteristicSubalgebra& ch = ex.characteristic;
  const LieAlgebra& h = ch.h;
  ThirdKindCertificate cert;
  const LcsStructure ls = jacobi_to_lcs({h, ch.r, ch.x0});
  cert.lcs_omega2 = ls.omega2;
  cert.lee = ls.lee;

  const Matrix form = invariant_scalar_product(h);
  const Multivector bar = Multivector::from_coordinates(inverse(form)->apply(ls.lee.coordinates()));
  const Rational w = evaluate(ls.lee, bar);
  if (w.is_zero()) throw VerificationFailed("Lee form vanishes on its dual vector");
  cert.y0 = (Rational(1) / w) * bar;
  if (!center(h).contains(cert.y0.coordinates())) throw VerificationFailed("Y0 of the l.c.s. structure is not central");

  cert.eta_bar = -contract(cert.y0, ls.omega2);
  if (evaluate(cert.eta_bar, ch.x0) != Rational(1)) throw VerificationFailed("eta_bar(X0) != 1");

  cert.h_prime = nullspace(Matrix::from_rows({ls.lee.coordinates()}, 4));
  cert.h_prime_algebra = induced_subalgebra(h, cert.h_prime, default_labels(3)).renamed(b.g.name() + ":h'");
  std::vector<Rational> eta(3);
  for (std::size_t a = 0; a < 3; ++a) eta[a] = evaluate(cert.eta_bar, Multivector::from_coordinates(cert.h_prime[a]));
  cert.eta = Form::from_coordinates(eta);
  if (!is_contact(cert.h_prime_algebra, cert.eta)) throw VerificationFailed("eta is not contact on ker(lee)");
  const JacobiPair contact = contact_to_jacobi({cert.h_prime_algebra, cert.eta});
  cert.r_prime = contact.r;

  const auto x0_prime = coordinates_in(cert.h_prime, ch.x0.coordinates());
  if (!x0_prime || Multivector::from_coordinates(*x0_prime) != contact.x0) {
    throw VerificationFailed("Reeb vector of eta differs from X0");
  }
  const Matrix c = Matrix::from_columns(cert.h_prime, 4);
  const Matrix expected = bivector_matrix(ch.r + wedge(cert.y0, ch.x0));
  if (!(c * bivector_matrix(contact.r) * c.transpose() == expected)) {
    throw VerificationFailed("contact 2-vector differs from r + Y0^X0");
  }
  const CompactnessCertificate hc = is_compact(cert.h_prime_algebra);
  if (!hc.compact || hc.derived.dim() != 3) throw VerificationFailed("ker(lee) is not a compact simple 3-dimensional algebra");

  Multivector mu(3, 1);
  for (const auto& [index, coeff] : contact.r.terms()) {
    const auto ij = index.indices();
    mu += coeff * cert.h_prime_algebra.bracket_basis(ij[0], ij[1]);
  }
  cert.mu_r_prime = mu;
  if (mu != -contact.x0) throw VerificationFailed("bracket of r' differs from -X0");

  cert.e4 = push_forward(ch.basis, -cert.y0, b.g.dim());
  if (evaluate(b.phi0, cert.e4) != Rational(1)) throw VerificationFailed("phi0(e4) != 1");
  return cert;
}

SemidirectData semidirect_data(const GeneralizedBialgebra& b) {
  const std::size_t n = b.g.dim();
  const auto x0 = b.x0.coordinates();
  if (!center(b.g).contains(x0)) throw VerificationFailed("X0 is not central");
  const Matrix form = invariant_scalar_product(b.g);
  const Form bar = Form::from_coordinates(form.apply(x0));
  SemidirectData out;
  out.theta0 = (Rational(1) / evaluate(bar, b.x0)) * bar;
  auto cols = nullspace(Matrix::from_rows({out.theta0.coordinates()}, n));
  cols.push_back(x0);
  out.adapted_basis = Matrix::from_columns(cols, n);
  const std::size_t m = n - 1;
  const GeneralizedBialgebra a = change_basis(b, out.adapted_basis, default_labels(n));

  auto restrict = [m](const LieAlgebra& alg, std::vector<std::string> labels, const char* what) {
    LieAlgebra::Table table;
    for (const auto& [key, value] : alg.table()) {
      if (key.second >= m) continue;
      if (!value.coefficient(MultiIndex::single(m)).is_zero())
        throw VerificationFailed(std::string(what) + " is not closed in the adapted basis");
      Multivector v(m, 1);
      for (const auto& [index, coeff] : value.terms()) v.add_term(index, coeff);
      table.emplace(key, std::move(v));
    }
    return LieAlgebra(alg.name(), std::move(labels), std::move(table));
  };
  out.h = restrict(a.g, default_labels(m), "h").renamed(b.g.name() + ":h");
  out.h_star = restrict(a.g_star, dual_labels(default_labels(m)), "h*").renamed(b.g.name() + ":h*");

  // Ψ(X) = X + i(θ₀)(d_*X), with θ₀ = e^n in the adapted basis.
  const Form theta = Form::basis(n, m);
  out.psi = Matrix(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const Multivector ej = Multivector::basis(n, j);
    const Multivector v = ej + contract_unchecked(theta, dual_differential(a.g_star, ej));
    if (!v.component(m).is_zero()) throw VerificationFailed("Psi leaves h");
    for (std::size_t i = 0; i < m; ++i) out.psi(i, j) = v.component(i);
  }
  const GeneralizedBialgebra rebuilt = build_semidirect_glb(out.h, out.h_star, out.psi);
  if (rebuilt.g.table() != a.g.table() || rebuilt.g_star.table() != a.g_star.table() || rebuilt.x0 != a.x0 ||
      rebuilt.phi0 != a.phi0) {
    throw VerificationFailed("semidirect reconstruction differs from the input");
  }
  return out;
}

}  // namespace

Classification classify_compact(const GeneralizedBialgebra& b) {
  const CompactnessCertificate cc = is_compact(b.g);
  if (!cc.compact) throw PreconditionFailed("g is not compact: " + cc.reason);
  if (!check_glb(b).ok) throw PreconditionFailed("input is not a generalized Lie bialgebra");
  Classification out;
  if (b.phi0.is_zero() && b.x0.is_zero()) {
    out.kind = CompactKind::LieBialgebra;
    return out;
  }
  if (b.phi0.is_zero()) {
    out.kind = CompactKind::Phi0ZeroSemidirect;
    out.semidirect = semidirect_data(b);
    return out;
  }
  out.extraction = extract_jacobi(b, default_y0(b));
  const CharacteristicSubalgebra& ch = out.extraction->characteristic;
  const std::size_t m = ch.basis.size();
  if (b.x0.is_zero()) {
    if (!ch.h.is_abelian()) throw VerificationFailed("characteristic subalgebra of a first kind GLB is not abelian");
    if (rank(bivector_matrix(ch.r)) != m) throw VerificationFailed("r is degenerate on h");
    for (const auto& v : ch.basis)
      if (!evaluate(b.phi0, Multivector::from_coordinates(v)).is_zero())
        throw VerificationFailed("phi0 does not annihilate h");
    out.kind = CompactKind::First;
  } else if (m == 2) {
    if (!ch.h.is_abelian()) throw VerificationFailed("2-dimensional characteristic subalgebra is not abelian");
    out.kind = CompactKind::Second;
  } else if (m == 4) {
    out.third = third_kind_certificate(b, *out.extraction);
    out.kind = CompactKind::Third;
  } else {
    throw VerificationFailed("characteristic subalgebra has dimension " + std::to_string(m));
  }
  return out;
}

GeneralizedBialgebra build_semidirect_glb(const LieAlgebra& h, const LieAlgebra& h_star, const Matrix& psi) {
  const std::size_t m = h.dim();
  if (h_star.dim() != m || psi.rows() != m || psi.cols() != m) throw DimensionMismatch("semidirect data shapes differ");
  std::vector<std::string> problems;
  if (!check_glb({h, h_star, Form(m, 1), Multivector(m, 1)}).ok) problems.push_back("(h, h*) is not a Lie bialgebra");
  if (!is_derivation(h, psi)) problems.push_back("Psi is not a derivation of h");
  const Matrix dual_minus_id = psi.transpose() - Matrix::identity(m);
  if (!is_derivation(h_star, dual_minus_id)) problems.push_back("Psi* - Id is not a derivation of h*");
  fail_if(problems, "semidirect hypotheses fail:");

  std::string extra = "e" + std::to_string(m + 1);
  while (h.index_of(extra)) extra += "'";
  std::vector<std::string> labels = h.labels();
  labels.push_back(extra);
  std::vector<std::string> star_labels = h_star.labels();
  std::string star_extra = dual_label(extra);
  while (h_star.index_of(star_extra)) star_extra += "'";
  star_labels.push_back(star_extra);

  auto lift = [m](const Multivector& v) {
    Multivector out(m + 1, 1);
    for (const auto& [index, coeff] : v.terms()) out.add_term(index, coeff);
    return out;
  };
  LieAlgebra::Table gt;
  for (const auto& [key, value] : h.table()) gt.emplace(key, lift(value));
  LieAlgebra::Table st;
  for (const auto& [key, value] : h_star.table()) st.emplace(key, lift(value));
  for (std::size_t a = 0; a < m; ++a) {
    // [f^a, f^new] = (Ψ* − Id)(f^a)
    std::vector<Rational> col = dual_minus_id.column(a);
    col.push_back(Rational(0));
    Multivector v = Multivector::from_coordinates(col);
    if (!v.is_zero()) st.emplace(std::make_pair(a, m), std::move(v));
  }
  GeneralizedBialgebra out{LieAlgebra(h.name() + "+R", labels, std::move(gt)),
                           LieAlgebra(h_star.name() + "+R", star_labels, std::move(st)), Form(m + 1, 1),
                           Multivector::basis(m + 1, m)};
  if (!check_glb(out).ok) throw VerificationFailed("semidirect construction fails the bialgebra conditions");
  return out;
}

}  // namespace glb
