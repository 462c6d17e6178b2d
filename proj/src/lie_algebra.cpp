#include "glb/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace glb {

namespace {

std::vector<Rational> bracket_coords(const LieAlgebra& g, const std::vector<Rational>& x,
                                     const std::vector<Rational>& y) {
  const std::size_t n = g.dim();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = g.constant(i, j, k);
        if (!c.is_zero()) out[k] += f * c;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> default_labels(std::size_t n, std::size_t first) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(first + i));
  return labels;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, Table brackets)
    : name_(std::move(name)), labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (n > kMaxDim) throw DimensionMismatch("Lie algebra dimension exceeds 64");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw std::invalid_argument("empty basis label");
    if (!seen.insert(l).second) throw std::invalid_argument("repeated basis label '" + l + "'");
  }
  constants_.assign(n * n * n, Rational(0));
  for (auto& [key, value] : brackets) {
    const auto [i, j] = key;
    if (i >= j || j >= n) throw std::invalid_argument("bracket entries must satisfy i < j < dim");
    value.require_grade(1, "bracket value");
    value.require_dim(n, "bracket value");
    if (value.is_zero()) continue;
    for (const auto& [index, coeff] : value.terms()) {
      const std::size_t k = index.indices().front();
      constants_[(i * n + j) * n + k] = coeff;
      constants_[(j * n + i) * n + k] = -coeff;
    }
    table_.emplace(key, value);
  }
}

Multivector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return Multivector(dim(), 1);
  if (i < j) {
    auto it = table_.find({i, j});
    return it == table_.end() ? Multivector(dim(), 1) : it->second;
  }
  return -bracket_basis(j, i);
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra out = *this;
  out.name_ = std::move(name);
  return out;
}

LieAlgebra LieAlgebra::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != dim()) throw DimensionMismatch("relabel with wrong number of labels");
  return LieAlgebra(name_, std::move(labels), table_);
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra("abelian(" + std::to_string(n) + ")", default_labels(n), {}); }

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport report;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Multivector ek = Multivector::basis(n, k);
        const Multivector ei = Multivector::basis(n, i);
        const Multivector ej = Multivector::basis(n, j);
        Multivector sum = bracket(g, g.bracket_basis(i, j), ek) + bracket(g, g.bracket_basis(j, k), ei) +
                          bracket(g, g.bracket_basis(k, i), ej);
        if (!sum.is_zero()) {
          report.ok = false;
          report.violations.push_back({i, j, k, std::move(sum)});
        }
      }
    }
  }
  return report;
}

Multivector bracket(const LieAlgebra& g, const Multivector& x, const Multivector& y) {
  x.require_grade(1, "bracket operand");
  y.require_grade(1, "bracket operand");
  x.require_dim(g.dim(), "bracket operand");
  y.require_dim(g.dim(), "bracket operand");
  return Multivector::from_coordinates(bracket_coords(g, x.coordinates(), y.coordinates()));
}

Matrix ad_matrix(const LieAlgebra& g, const Multivector& x) {
  const std::size_t n = g.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = bracket(g, x, Multivector::basis(n, j)).coordinates();
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<std::vector<Rational>>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  s.basis_ = row_reduce(Matrix::from_rows(vectors, ambient_dim)).reduced;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

std::vector<std::vector<Rational>> Subspace::vectors() const {
  std::vector<std::vector<Rational>> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.push_back(basis_.row(r));
  return out;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
  auto rows = vectors();
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, ambient_)) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.vectors())
    if (!contains(v)) return false;
  return true;
}

Subspace center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  // Unknown x with Σ_i x_i c^k_{ij} = 0 for all (j, k).
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) m(j * n + k, i) = g.constant(i, j, k);
  return Subspace::span(n, nullspace(m));
}

Subspace derived_algebra(const LieAlgebra& g) {
  std::vector<std::vector<Rational>> vectors;
  for (const auto& [key, value] : g.table()) vectors.push_back(value.coordinates());
  return Subspace::span(g.dim(), vectors);
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return Subspace::span(s.ambient_dim(), nullspace(s.basis()));
}

Subspace one_cocycles(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rational> row(n);
      for (std::size_t k = 0; k < n; ++k) row[k] = g.constant(i, j, k);
      rows.push_back(std::move(row));
    }
  if (rows.empty()) return Subspace::full(n);
  return Subspace::span(n, nullspace(Matrix::from_rows(rows, n)));
}

bool is_one_cocycle(const LieAlgebra& g, const Form& phi) {
  phi.require_grade(1, "cocycle");
  phi.require_dim(g.dim(), "cocycle");
  for (const auto& [key, value] : g.table()) {
    if (!pair(phi, value).is_zero()) return false;
  }
  return true;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  const auto vs = s.vectors();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b)
      if (!s.contains(bracket_coords(g, vs[a], vs[b]))) return false;
  return true;
}

namespace {

// Linear system for Ψ[e_i,e_j] − [Ψe_i,e_j] − [e_i,Ψe_j] = 0; variable (k, j) is Ψ_{kj}.
Matrix derivation_system(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  const std::size_t pairs = n * (n - 1) / 2;
  Matrix m(std::max<std::size_t>(pairs * n, 1), n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t c = 0; c < n; ++c, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          m(row, c * n + k) += g.constant(i, j, k);
          m(row, k * n + i) -= g.constant(k, j, c);
          m(row, k * n + j) -= g.constant(i, k, c);
        }
      }
    }
  }
  return m;
}

}  // namespace

bool is_derivation(const LieAlgebra& g, const Matrix& psi) {
  const std::size_t n = g.dim();
  if (psi.rows() != n || psi.cols() != n) throw DimensionMismatch("derivation matrix has wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto lhs = psi.apply(g.bracket_basis(i, j).coordinates());
      const auto a = bracket_coords(g, psi.column(i), Multivector::basis(n, j).coordinates());
      const auto b = bracket_coords(g, Multivector::basis(n, i).coordinates(), psi.column(j));
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != a[k] + b[k]) return false;
    }
  }
  return true;
}

std::vector<Matrix> derivations(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> out;
  for (const auto& v : nullspace(derivation_system(g))) {
    Matrix d(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) d(k, j) = v[k * n + j];
    out.push_back(std::move(d));
  }
  return out;
}

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational t(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Rational& x = g.constant(i, b, a);
          if (x.is_zero()) continue;
          const Rational& y = g.constant(j, a, b);
          if (!y.is_zero()) t += x * y;
        }
      k(i, j) = t;
      k(j, i) = t;
    }
  }
  return k;
}

CompactnessCertificate is_compact(const LieAlgebra& g) {
  CompactnessCertificate cert;
  const std::size_t n = g.dim();
  cert.center = center(g);
  cert.derived = derived_algebra(g);
  auto both = cert.center.vectors();
  for (const auto& v : cert.derived.vectors()) both.push_back(v);
  cert.direct_sum = cert.center.dim() + cert.derived.dim() == n &&
                    (both.empty() ? n == 0 : rank(Matrix::from_rows(both, n)) == n);
  if (!cert.direct_sum) {
    cert.reason = "g is not the direct sum of its center and derived algebra";
    return cert;
  }
  const Matrix k = killing_form(g);
  const Matrix& d = cert.derived.basis();
  cert.derived_gram = d * k * d.transpose();
  cert.derived_inertia = inertia(cert.derived_gram);
  if (cert.derived_inertia.negative != cert.derived.dim()) {
    std::ostringstream os;
    os << "Killing form on [g,g] is not negative definite (inertia +" << cert.derived_inertia.positive << " -"
       << cert.derived_inertia.negative << " 0:" << cert.derived_inertia.zero << ")";
    cert.reason = os.str();
    return cert;
  }
  cert.compact = true;
  return cert;
}

Matrix invariant_scalar_product(const LieAlgebra& g) {
  const CompactnessCertificate cert = is_compact(g);
  if (!cert.compact) throw PreconditionFailed("invariant scalar product requires a compact Lie algebra: " + cert.reason);
  const std::size_t n = g.dim();
  const std::size_t m = cert.derived.dim();
  // Basis change P: columns = derived basis, then center basis.
  std::vector<std::vector<Rational>> cols = cert.derived.vectors();
  for (const auto& z : cert.center.vectors()) cols.push_back(z);
  if (n == 0) return Matrix(0, 0);
  const Matrix p = Matrix::from_columns(cols, n);
  Matrix block(n, n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) block(a, b) = -cert.derived_gram(a, b);
  for (std::size_t a = m; a < n; ++a) block(a, a) = Rational(1);
  const Matrix pinv = *inverse(p);
  return pinv.transpose() * block * pinv;
}

LieAlgebra direct_product(const LieAlgebra& g, const LieAlgebra& h) {
  const std::size_t n = g.dim();
  const std::size_t total = n + h.dim();
  std::vector<std::string> labels = g.labels();
  labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) labels = default_labels(total);
  LieAlgebra::Table table;
  auto embed = [total](const Multivector& v, std::size_t offset) {
    Multivector out(total, 1);
    for (const auto& [index, coeff] : v.terms()) out.add_term(MultiIndex::single(index.indices().front() + offset), coeff);
    return out;
  };
  for (const auto& [key, value] : g.table()) table.emplace(key, embed(value, 0));
  for (const auto& [key, value] : h.table()) table.emplace(std::make_pair(key.first + n, key.second + n), embed(value, n));
  return LieAlgebra(g.name() + "+" + h.name(), std::move(labels), std::move(table));
}

namespace {

std::vector<std::string> extended_labels(const LieAlgebra& h) {
  std::vector<std::string> labels = h.labels();
  std::string extra = "e" + std::to_string(h.dim() + 1);
  while (h.index_of(extra)) extra += "'";
  labels.push_back(extra);
  return labels;
}

Multivector lift(const Multivector& v, std::size_t total) {
  Multivector out(total, 1);
  for (const auto& [index, coeff] : v.terms()) out.add_term(index, coeff);
  return out;
}

}  // namespace

LieAlgebra central_extension(const LieAlgebra& h, const Form& omega) {
  const std::size_t n = h.dim();
  omega.require_grade(2, "central extension cocycle");
  omega.require_dim(n, "central extension cocycle");
  // dΩ(x,y,z) = −Ω([x,y],z) + Ω([x,z],y) − Ω([y,z],x)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto ei = Multivector::basis(n, i), ej = Multivector::basis(n, j), ek = Multivector::basis(n, k);
        const Rational v = -evaluate(omega, h.bracket_basis(i, j), ek) + evaluate(omega, h.bracket_basis(i, k), ej) -
                           evaluate(omega, h.bracket_basis(j, k), ei);
        if (!v.is_zero()) throw PreconditionFailed("central extension requires a closed 2-form");
      }
  LieAlgebra::Table table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Multivector v = lift(h.bracket_basis(i, j), n + 1);
      v.add_term(MultiIndex::single(n), -omega.coefficient(MultiIndex::from_bits((std::uint64_t{1} << i) | (std::uint64_t{1} << j))));
      if (!v.is_zero()) table.emplace(std::make_pair(i, j), std::move(v));
    }
  return LieAlgebra(h.name() + "x_Omega R", extended_labels(h), std::move(table));
}

LieAlgebra semidirect_by_derivation(const LieAlgebra& h, const Matrix& psi) {
  const std::size_t n = h.dim();
  if (!is_derivation(h, psi)) throw PreconditionFailed("semidirect product requires a derivation");
  LieAlgebra::Table table;
  for (const auto& [key, value] : h.table()) table.emplace(key, lift(value, n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    // [e_i, e_new] = −Ψ(e_i)
    auto col = psi.column(i);
    col.push_back(Rational(0));
    Multivector v = -Multivector::from_coordinates(col);
    if (!v.is_zero()) table.emplace(std::make_pair(i, n), std::move(v));
  }
  return LieAlgebra(h.name() + "x_Psi R", extended_labels(h), std::move(table));
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& basis, std::vector<std::string> labels) {
  const std::size_t n = g.dim();
  if (basis.rows() != n || basis.cols() != n) throw DimensionMismatch("basis change matrix has wrong shape");
  const auto pinv = inverse(basis);
  if (!pinv) throw PreconditionFailed("basis change matrix is singular");
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto w = bracket_coords(g, basis.column(a), basis.column(b));
      Multivector v = Multivector::from_coordinates(pinv->apply(w));
      if (!v.is_zero()) table.emplace(std::make_pair(a, b), std::move(v));
    }
  return LieAlgebra(g.name(), std::move(labels), std::move(table));
}

std::optional<std::vector<Rational>> coordinates_in(const std::vector<std::vector<Rational>>& vectors,
                                                    const std::vector<Rational>& v) {
  if (vectors.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return std::nullopt;
    return std::vector<Rational>{};
  }
  const auto sol = solve(Matrix::from_columns(vectors, v.size()), v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

LieAlgebra induced_subalgebra(const LieAlgebra& g, const std::vector<std::vector<Rational>>& vectors,
                              std::vector<std::string> labels) {
  const std::size_t m = vectors.size();
  if (labels.size() != m) throw DimensionMismatch("induced subalgebra label count");
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto w = bracket_coords(g, vectors[a], vectors[b]);
      const auto c = coordinates_in(vectors, w);
      if (!c) {
        std::ostringstream os;
        os << "subspace is not bracket-closed: bracket of basis vectors " << a << " and " << b << " leaves the span";
        throw VerificationFailed(os.str());
      }
      Multivector v = Multivector::from_coordinates(*c);
      if (!v.is_zero()) table.emplace(std::make_pair(a, b), std::move(v));
    }
  return LieAlgebra(g.name() + "|sub", std::move(labels), std::move(table));
}

}  // namespace glb
