#include "glb/catalog.hpp"

#include <regex>

namespace glb {

namespace {

Multivector vec(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Multivector out(n, 1);
  for (const auto& [i, c] : terms) out.add_term(MultiIndex::single(i - 1), Rational(c));
  return out;
}

LieAlgebra::Table table(std::size_t n,
                        std::initializer_list<std::tuple<std::size_t, std::size_t, Multivector>> entries) {
  LieAlgebra::Table t;
  for (const auto& [i, j, v] : entries) {
    (void)n;
    t.emplace(std::make_pair(i - 1, j - 1), v);
  }
  return t;
}

Multivector e(std::size_t n, std::size_t i) { return Multivector::basis(n, i - 1); }
Form f(std::size_t n, std::size_t i) { return Form::basis(n, i - 1); }

}  // namespace

LieAlgebra heisenberg(std::size_t n) {
  if (n == 0) throw std::invalid_argument("heisenberg(1,n) needs n >= 1");
  Form omega(2 * n, 2);
  for (std::size_t i = 0; i < n; ++i) omega += wedge(Form::basis(2 * n, n + i), Form::basis(2 * n, i));
  return central_extension(abelian(2 * n), omega).renamed("heisenberg(1," + std::to_string(n) + ")");
}

LieAlgebra solvable2() { return LieAlgebra("solvable2", default_labels(2), table(2, {{1, 2, e(2, 1)}})); }

LieAlgebra solvable3() {
  return LieAlgebra("solvable3_51", default_labels(3), table(3, {{1, 3, e(3, 1)}, {2, 3, -e(3, 2)}}));
}

LieAlgebra sl2r() {
  return LieAlgebra("sl2r", default_labels(3),
                    table(3, {{1, 2, vec(3, {{2, 2}})}, {1, 3, vec(3, {{3, -2}})}, {2, 3, e(3, 1)}}));
}

LieAlgebra su2() {
  return LieAlgebra("su2", default_labels(3), table(3, {{1, 2, e(3, 3)}, {1, 3, -e(3, 2)}, {2, 3, e(3, 1)}}));
}

LieAlgebra with_center(const LieAlgebra& g, std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    std::string l = "e" + std::to_string(g.dim() + i + 1);
    while (g.index_of(l)) l += "'";
    labels.push_back(l);
  }
  const LieAlgebra line("R" + std::to_string(k), labels, {});
  return direct_product(g, line).renamed(g.name() + "+R" + (k == 1 ? "" : std::to_string(k)));
}

LieAlgebra u2() { return with_center(su2(), 1).renamed("u2"); }
LieAlgebra gl2r() { return with_center(sl2r(), 1).renamed("gl2r"); }

JacobiPair su2_contact_pair(const Rational& l1, const Rational& l2, const Rational& l3) {
  const std::size_t n = 3;
  const Multivector r = l1 * wedge(e(n, 2), e(n, 3)) - l2 * wedge(e(n, 1), e(n, 3)) + l3 * wedge(e(n, 1), e(n, 2));
  const Multivector x0 = -(l1 * e(n, 1) + l2 * e(n, 2) + l3 * e(n, 3));
  return {su2(), r, x0};
}

JacobiPair sl2r_contact_pair(const Rational& l1, const Rational& l2, const Rational& l3) {
  const std::size_t n = 3;
  const Multivector r = l1 * wedge(e(n, 2), e(n, 3)) + l2 * wedge(e(n, 1), e(n, 2)) - l3 * wedge(e(n, 1), e(n, 3));
  const Multivector x0 = -(l1 * e(n, 1) + Rational(2) * l2 * e(n, 2) + Rational(2) * l3 * e(n, 3));
  return {sl2r(), r, x0};
}

YbData solvable3_yb() {
  const std::size_t n = 3;
  return {solvable3(), f(n, 3), wedge(e(n, 3), e(n, 1) - e(n, 2)), e(n, 1) + e(n, 2)};
}

YbData h11_yb(const Rational& l12, const Rational& l13, const Rational& l23) {
  const std::size_t n = 3;
  const Multivector r = l12 * wedge(e(n, 1), e(n, 2)) + l13 * wedge(e(n, 1), e(n, 3)) + l23 * wedge(e(n, 2), e(n, 3));
  return {heisenberg(1).renamed("h11"), Form(n, 1), r, e(n, 3)};
}

YbData semidirect4_yb() {
  const std::size_t n = 4;
  Matrix psi(3, 3);
  psi(0, 0) = Rational(1, 2);
  psi(1, 1) = Rational(1, 2);
  psi(2, 2) = Rational(1);
  const LieAlgebra g = semidirect_by_derivation(abelian(3), psi).renamed("semidirect4_53");
  return {g, f(n, 4), wedge(e(n, 1), e(n, 2)) - Rational(2) * wedge(e(n, 3), e(n, 4)), e(n, 3)};
}

GeneralizedBialgebra noncob4() {
  const std::size_t n = 4;
  const LieAlgebra g("noncob4_53", default_labels(4),
                     table(n, {{1, 4, -e(n, 1)}, {2, 4, -e(n, 2)}, {3, 4, -e(n, 3)}}));
  const LieAlgebra gs("noncob4_53*", dual_labels(default_labels(4)), table(n, {{1, 2, e(n, 3)}, {1, 4, e(n, 4)}}));
  return {g, gs, f(n, 4), e(n, 1)};
}

GeneralizedBialgebra firstkind4() {
  const std::size_t n = 4;
  const LieAlgebra g = abelian(4);
  GeneralizedBialgebra b = build_first_kind(g, {e(n, 1), e(n, 2)}, wedge(e(n, 1), e(n, 2)), f(n, 3));
  b.g = b.g.renamed("firstkind4");
  b.g_star = b.g_star.renamed("firstkind4*");
  return b;
}

GeneralizedBialgebra secondkind4() {
  const std::size_t n = 4;
  GeneralizedBialgebra b = build_second_kind(abelian(4), e(n, 1), e(n, 2), Rational(1), Rational(1), Rational(0));
  b.g = b.g.renamed("secondkind4");
  b.g_star = b.g_star.renamed("secondkind4*");
  return b;
}

GeneralizedBialgebra thirdkind_u2() {
  const std::size_t n = 4;
  GeneralizedBialgebra b =
      build_third_kind(u2(), {e(n, 1), e(n, 2), e(n, 3), e(n, 4)}, Rational(1), Rational(0), Rational(0));
  b.g = b.g.renamed("thirdkind_u2");
  b.g_star = b.g_star.renamed("thirdkind_u2*");
  return b;
}

std::vector<std::string> catalog_names() {
  return {"abelian(n)", "heisenberg(1,n)", "solvable2",     "solvable3_51", "sl2r",        "su2",
          "u2",         "gl2r",            "h11",           "semidirect4_53", "noncob4_53", "firstkind4",
          "secondkind4", "thirdkind_u2"};
}

CatalogEntry catalog(const std::string& name) {
  static const std::regex abelian_re(R"(abelian\((\d+)\))");
  static const std::regex heis_re(R"(heisenberg\(1,\s*(\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, abelian_re)) {
    const auto n = std::stoul(m[1]);
    if (n > kMaxDim) throw std::invalid_argument("abelian(n) needs n <= 64");
    return {name, abelian(n)};
  }
  if (std::regex_match(name, m, heis_re)) {
    const auto n = std::stoul(m[1]);
    if (n == 0 || 2 * n + 1 > kMaxDim) throw std::invalid_argument("heisenberg(1,n) needs 1 <= n <= 31");
    return {name, heisenberg(n)};
  }
  if (name == "solvable2") return {name, solvable2()};
  if (name == "sl2r") return {name, sl2r()};
  if (name == "su2") return {name, su2()};
  if (name == "u2") return {name, u2()};
  if (name == "gl2r") return {name, gl2r()};
  if (name == "solvable3_51") return {name, solvable3_yb()};
  if (name == "h11") return {name, h11_yb(Rational(2))};
  if (name == "semidirect4_53") return {name, semidirect4_yb()};
  if (name == "noncob4_53") return {name, noncob4()};
  if (name == "firstkind4") return {name, firstkind4()};
  if (name == "secondkind4") return {name, secondkind4()};
  if (name == "thirdkind_u2") return {name, thirdkind_u2()};
  std::string msg = "unknown catalog name '" + name + "'; available:";
  for (const auto& n : catalog_names()) msg += " " + n;
  throw std::invalid_argument(msg);
}

}  // namespace glb
