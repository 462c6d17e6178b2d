#include "glb/schouten.hpp"

#include <string>
#include <vector>

namespace glb {

namespace {

Exterior<VectorKind> zero_for(std::size_t dim, long grade) {
  return Multivector(dim, grade < 0 ? 0 : static_cast<std::size_t>(grade));
}

}  // namespace

void require_cocycle(const LieAlgebra& g, const Form& phi0, const char* what) {
  phi0.require_dim(g.dim(), what);
  if (!is_one_cocycle(g, phi0)) throw PreconditionFailed(std::string(what) + " is not a 1-cocycle");
}

Multivector schouten(const LieAlgebra& g, const Multivector& p, const Multivector& q) {
  const std::size_t n = g.dim();
  p.require_dim(n, "schouten operand");
  q.require_dim(n, "schouten operand");
  const std::size_t k = p.grade();
  const std::size_t kk = q.grade();
  if (k == 0 || kk == 0) return zero_for(n, static_cast<long>(k + kk) - 1);

  Multivector out(n, k + kk - 1);
  std::vector<std::size_t> seq;
  seq.reserve(k + kk - 1);
  for (const auto& [ip, cp] : p.terms()) {
    const auto xs = ip.indices();
    for (const auto& [iq, cq] : q.terms()) {
      const auto ys = iq.indices();
      const Rational base = cp * cq;
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < kk; ++b) {
          // Σ (−1)^{a+b} [x_a, y_b] ∧ x̂_a ∧ ŷ_b, then the overall (−1)^{k+1}.
          const bool negative = ((a + b) + (k + 1)) % 2 == 1;
          for (std::size_t c = 0; c < n; ++c) {
            const Rational& s = g.constant(xs[a], ys[b], c);
            if (s.is_zero()) continue;
            seq.clear();
            seq.push_back(c);
            for (std::size_t t = 0; t < k; ++t)
              if (t != a) seq.push_back(xs[t]);
            for (std::size_t t = 0; t < kk; ++t)
              if (t != b) seq.push_back(ys[t]);
            const auto sorted = MultiIndex::from_sequence(seq);
            if (!sorted) continue;
            Rational v = base * s;
            if (negative != (sorted->second < 0)) v = -v;
            out.add_term(sorted->first, v);
          }
        }
      }
    }
  }
  return out;
}

Multivector phi0_schouten(const LieAlgebra& g, const Form& phi0, const Multivector& p, const Multivector& q) {
  require_cocycle(g, phi0, "phi0");
  return phi0_schouten_unchecked(g, phi0, p, q);
}

Multivector phi0_schouten_unchecked(const LieAlgebra& g, const Form& phi0, const Multivector& p,
                                    const Multivector& q) {
  phi0.require_dim(g.dim(), "phi0");
  const long k = static_cast<long>(p.grade());
  const long kk = static_cast<long>(q.grade());
  if (k + kk == 0) return Multivector(g.dim(), 0);
  Multivector out = schouten(g, p, q);
  if (k != 1 && kk >= 1) {
    const Rational c((k % 2 == 1 ? 1 : -1) * (k - 1));
    out += c * wedge(p, contract_unchecked(phi0, q));
  }
  if (kk != 1 && k >= 1) {
    out -= Rational(kk - 1) * wedge(contract_unchecked(phi0, p), q);
  }
  return out;
}

template <class Kind>
Exterior<Kind> ce_differential(const LieAlgebra& source, const Exterior<Kind>& w) {
  const std::size_t n = source.dim();
  w.require_dim(n, "differential operand");
  const std::size_t k = w.grade();
  Exterior<Kind> out(n, k + 1);
  if (k == 0) return out;
  std::vector<std::size_t> seq;
  for (const auto& [index, coeff] : w.terms()) {
    const auto xs = index.indices();
    for (std::size_t m = 0; m < k; ++m) {
      // d a^c = −Σ_{i<j} c^c_{ij} a^i∧a^j, placed at position m with sign (−1)^m.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Rational& s = source.constant(i, j, xs[m]);
          if (s.is_zero()) continue;
          seq.clear();
          for (std::size_t t = 0; t < m; ++t) seq.push_back(xs[t]);
          seq.push_back(i);
          seq.push_back(j);
          for (std::size_t t = m + 1; t < k; ++t) seq.push_back(xs[t]);
          const auto sorted = MultiIndex::from_sequence(seq);
          if (!sorted) continue;
          Rational v = coeff * s;
          const bool negative = (m % 2 == 0) != (sorted->second < 0);
          out.add_term(sorted->first, negative ? -v : v);
        }
      }
    }
  }
  return out;
}

template Form ce_differential<CovectorKind>(const LieAlgebra&, const Form&);
template Multivector ce_differential<VectorKind>(const LieAlgebra&, const Multivector&);

Form twisted_differential(const LieAlgebra& g, const Form& phi0, const Form& omega) {
  require_cocycle(g, phi0, "phi0");
  return differential(g, omega) + wedge(phi0, omega);
}

bool is_dual_cocycle(const LieAlgebra& g_star, const Multivector& x) {
  return is_one_cocycle(g_star, reinterpret<CovectorKind>(x));
}

Multivector twisted_dual_differential(const LieAlgebra& g_star, const Multivector& x0, const Multivector& p) {
  x0.require_dim(g_star.dim(), "x0");
  if (!is_dual_cocycle(g_star, x0)) throw PreconditionFailed("x0 is not a 1-cocycle of the dual algebra");
  return dual_differential(g_star, p) + wedge(x0, p);
}

Multivector ad_rep(const LieAlgebra& g, const Form& phi0, const Rational& c, const Multivector& x,
                   const Multivector& s) {
  require_cocycle(g, phi0, "phi0");
  x.require_grade(1, "ad_rep vector");
  const Rational factor = (Rational(static_cast<long>(s.grade())) - c) * evaluate(phi0, x);
  Multivector out = schouten(g, x, s);
  if (!factor.is_zero()) out -= factor * s;
  return out;
}

bool is_invariant(const LieAlgebra& g, const Form& phi0, const Rational& c, const Multivector& s) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!ad_rep(g, phi0, c, Multivector::basis(g.dim(), i), s).is_zero()) return false;
  return true;
}

}  // namespace glb
