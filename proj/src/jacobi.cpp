#include "glb/jacobi.hpp"

#include <sstream>

namespace glb {

namespace {

Form form_from(const std::vector<Rational>& v) { return Form::from_coordinates(v); }
Multivector vector_from(const std::vector<Rational>& v) { return Multivector::from_coordinates(v); }

std::string describe(const Multivector& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [index, coeff] : m.terms()) {
    if (!first) os << " + ";
    first = false;
    os << coeff << "*";
    const auto ids = index.indices();
    for (std::size_t t = 0; t < ids.size(); ++t) os << (t ? "^" : "") << "e" << ids[t] + 1;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

JacobiReport check_jacobi(const JacobiPair& jp) {
  const std::size_t n = jp.algebra.dim();
  jp.r.require_grade(2, "r");
  jp.r.require_dim(n, "r");
  jp.x0.require_grade(1, "x0");
  jp.x0.require_dim(n, "x0");
  JacobiReport rep;
  rep.rr_residual = schouten(jp.algebra, jp.r, jp.r) - Rational(2) * wedge(jp.x0, jp.r);
  rep.x0_residual = schouten(jp.algebra, jp.x0, jp.r);
  rep.ok = rep.rr_residual.is_zero() && rep.x0_residual.is_zero();
  return rep;
}

Matrix sharp(const Multivector& r) {
  // Column i holds r(e^i, e^j) in row j.
  return bivector_matrix(r).transpose();
}

std::size_t jacobi_rank(const JacobiPair& jp) {
  const std::size_t n = jp.algebra.dim();
  const Matrix s = sharp(jp.r);
  std::vector<std::vector<Rational>> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back(s.column(i));
  vs.push_back(jp.x0.coordinates());
  return rank(Matrix::from_rows(vs, n));
}

CharacteristicSubalgebra characteristic_subalgebra(const JacobiPair& jp) {
  if (!check_jacobi(jp).ok) throw PreconditionFailed("characteristic subalgebra of a pair that is not Jacobi");
  const std::size_t n = jp.algebra.dim();
  const Matrix s = sharp(jp.r);
  std::vector<std::vector<Rational>> cols;
  for (std::size_t i = 0; i < n; ++i) cols.push_back(s.column(i));
  CharacteristicSubalgebra out;
  out.basis = Subspace::span(n, cols).vectors();
  const auto x0 = jp.x0.coordinates();
  if (!Subspace::span(n, out.basis).contains(x0)) out.basis.push_back(x0);
  const std::size_t m = out.basis.size();
  out.h = induced_subalgebra(jp.algebra, out.basis, default_labels(m)).renamed(jp.algebra.name() + ":char");
  out.contact = m % 2 == 1;

  const auto x0c = coordinates_in(out.basis, x0);
  if (!x0c) throw VerificationFailed("X0 outside the characteristic subalgebra");
  out.x0 = m == 0 ? Multivector(0, 1) : vector_from(*x0c);

  // r = C R Cᵀ; recover R through the left inverse (CᵀC)⁻¹Cᵀ.
  if (m == 0) {
    out.r = Multivector(0, 2);
    return out;
  }
  const Matrix c = Matrix::from_columns(out.basis, n);
  const Matrix left = *inverse(c.transpose() * c) * c.transpose();
  const Matrix full = bivector_matrix(jp.r);
  const Matrix restricted = left * full * left.transpose();
  if (!(c * restricted * c.transpose() == full)) throw VerificationFailed("r is not in the exterior square of h");
  out.r = bivector_from_matrix<VectorKind>(restricted);
  return out;
}

bool is_contact(const LieAlgebra& g, const Form& eta) {
  eta.require_grade(1, "eta");
  eta.require_dim(g.dim(), "eta");
  if (g.dim() % 2 == 0) return false;
  const Form top = wedge(eta, wedge_power(differential(g, eta), g.dim() / 2));
  return !top.is_zero();
}

Matrix flat_contact(const LieAlgebra& g, const Form& eta) {
  const std::size_t n = g.dim();
  const Form deta = differential(g, eta);
  Matrix f(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Multivector ej = Multivector::basis(n, j);
    const Form b = contract(ej, deta) + eta.component(j) * eta;
    for (std::size_t i = 0; i < n; ++i) f(i, j) = b.component(i);
  }
  return f;
}

JacobiPair contact_to_jacobi(const ContactStructure& cs) {
  const std::size_t n = cs.algebra.dim();
  if (!is_contact(cs.algebra, cs.eta)) throw PreconditionFailed("eta is not a contact form");
  const auto finv = inverse(flat_contact(cs.algebra, cs.eta));
  if (!finv) throw PreconditionFailed("flat map of eta is singular");
  const Form deta = differential(cs.algebra, cs.eta);
  JacobiPair jp{cs.algebra, Multivector(n, 2), vector_from(finv->apply(cs.eta.coordinates()))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational v = evaluate(deta, vector_from(finv->column(i)), vector_from(finv->column(j)));
      jp.r.add_term(MultiIndex::from_bits((std::uint64_t{1} << i) | (std::uint64_t{1} << j)), v);
    }
  return jp;
}

ContactStructure jacobi_to_contact(const JacobiPair& jp) {
  const std::size_t n = jp.algebra.dim();
  if (n % 2 == 0 || jacobi_rank(jp) != n) throw PreconditionFailed("jacobi_to_contact needs full odd rank");
  // ♭⁻¹ is α ↦ α(X₀)X₀ − ♯_r α.
  const auto x = jp.x0.coordinates();
  Matrix b = Rational(-1) * sharp(jp.r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) += x[i] * x[j];
  const auto flat = inverse(b);
  if (!flat) throw VerificationFailed("contact reconstruction: flat map is singular");
  ContactStructure cs{jp.algebra, form_from(flat->apply(x))};
  if (!is_contact(jp.algebra, cs.eta)) throw VerificationFailed("reconstructed eta is not contact");
  const JacobiPair back = contact_to_jacobi(cs);
  if (back.r != jp.r || back.x0 != jp.x0) {
    throw VerificationFailed("contact roundtrip mismatch: r residual " + describe(back.r - jp.r));
  }
  return cs;
}

LcsReport check_lcs(const LcsStructure& ls) {
  const LieAlgebra& g = ls.algebra;
  const std::size_t n = g.dim();
  ls.omega2.require_grade(2, "Omega");
  ls.omega2.require_dim(n, "Omega");
  ls.lee.require_grade(1, "lee form");
  ls.lee.require_dim(n, "lee form");
  LcsReport rep;
  rep.even_dim = n % 2 == 0;
  rep.nondegenerate = rep.even_dim && !wedge_power(ls.omega2, n / 2).is_zero();
  rep.lee_cocycle = is_one_cocycle(g, ls.lee);
  rep.residual = differential(g, ls.omega2) - wedge(ls.lee, ls.omega2);
  rep.ok = rep.nondegenerate && rep.lee_cocycle && rep.residual.is_zero();
  return rep;
}

Matrix flat_lcs(const Form& omega2) {
  // (♭e_j)(e_i) = Ω(e_j, e_i).
  return bivector_matrix(omega2).transpose();
}

JacobiPair lcs_to_jacobi(const LcsStructure& ls) {
  const std::size_t n = ls.algebra.dim();
  if (!check_lcs(ls).ok) throw PreconditionFailed("(Omega, lee) is not an l.c.s. structure");
  const auto finv = inverse(flat_lcs(ls.omega2));
  if (!finv) throw PreconditionFailed("flat map of Omega is singular");
  JacobiPair jp{ls.algebra, Multivector(n, 2), vector_from(finv->apply(ls.lee.coordinates()))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational v = evaluate(ls.omega2, vector_from(finv->column(i)), vector_from(finv->column(j)));
      jp.r.add_term(MultiIndex::from_bits((std::uint64_t{1} << i) | (std::uint64_t{1} << j)), v);
    }
  return jp;
}

LcsStructure jacobi_to_lcs(const JacobiPair& jp) {
  const std::size_t n = jp.algebra.dim();
  if (n % 2 == 1 || jacobi_rank(jp) != n) throw PreconditionFailed("jacobi_to_lcs needs full even rank");
  const auto sinv = inverse(sharp(jp.r));
  if (!sinv) throw PreconditionFailed("sharp map of r is singular");
  const Matrix flat = Rational(-1) * *sinv;
  // Ω(e_i, e_j) = (♭e_i)(e_j) = flat(j, i).
  LcsStructure ls{jp.algebra, bivector_from_matrix<CovectorKind>(flat.transpose()),
                  form_from(flat.apply(jp.x0.coordinates()))};
  const LcsReport rep = check_lcs(ls);
  if (!rep.ok) throw VerificationFailed("reconstructed (Omega, lee) is not l.c.s.");
  const JacobiPair back = lcs_to_jacobi(ls);
  if (back.r != jp.r || back.x0 != jp.x0) throw VerificationFailed("l.c.s. roundtrip mismatch");
  return ls;
}

JacobiPair lcs_from_contact_times_line(const JacobiPair& contact) {
  const LieAlgebra& h = contact.algebra;
  const std::size_t n = h.dim();
  if (n % 2 == 0 || jacobi_rank(contact) != n || !check_jacobi(contact).ok) {
    throw PreconditionFailed("input must be a full odd rank Jacobi pair");
  }
  std::string extra = "e" + std::to_string(n + 1);
  while (h.index_of(extra)) extra += "'";
  const LieAlgebra line("R", {extra}, {});
  const LieAlgebra g = direct_product(h, line);
  auto lift = [n](const Multivector& v) {
    Multivector out(n + 1, v.grade());
    for (const auto& [index, coeff] : v.terms()) out.add_term(index, coeff);
    return out;
  };
  const Multivector x0 = lift(contact.x0);
  JacobiPair out{g, lift(contact.r) + wedge(Multivector::basis(n + 1, n), x0), x0};
  if (!check_jacobi(out).ok) throw VerificationFailed("product pair fails the Jacobi conditions");
  if (jacobi_rank(out) != n + 1) throw VerificationFailed("product pair does not have full rank");
  return out;
}

}  // namespace glb
