// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "glb/bialgebra.hpp"
#include "glb/catalog.hpp"
#include "glb/cli.hpp"
#include "glb/document.hpp"
#include "property_checks.hpp"

namespace {

using namespace glb;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

namespace fs = std::filesystem;

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("glb_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Multivector v(std::size_t n, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Multivector out(n, 1);
  for (auto [i, c] : terms) out += Rational(c) * Multivector::basis(n, i - 1);
  return out;
}

/// Expected dual bracket: every pair listed, everything else zero.
using Expected = std::vector<std::tuple<std::size_t, std::size_t, Multivector>>;

bool dual_matches(const LieAlgebra& dual, const Expected& expected, std::string& why) {
  const std::size_t n = dual.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Multivector want(n, 1);
      for (const auto& [a, b, val] : expected)
        if (a == i + 1 && b == j + 1) want = val;
      if (dual.bracket_basis(i, j) != want) {
        why = "[e^" + std::to_string(i + 1) + ",e^" + std::to_string(j + 1) + "]* = " +
              format_element(dual.bracket_basis(i, j), dual.labels()) + ", expected " + format_element(want, dual.labels());
        return false;
      }
    }
  return true;
}

Verdict criterion1() {
  Verdict out;
  const std::vector<std::pair<std::string, Expected>> cases = {
      {"solvable3_51", {{1, 3, -v(3, {{3, 1}})}, {2, 3, v(3, {{3, 1}})}}},
      {"h11", {{1, 3, v(3, {{1, -3}})}, {2, 3, v(3, {{2, -3}})}}},
      {"semidirect4_53", {{3, 4, v(4, {{4, 1}})}}},
  };
  for (const auto& [name, expected] : cases) {
    const fs::path file = scratch_dir() / (name + "_dual.json");
    const CliResult r = cli({"yb-build", "--name", name, "--out", file.string()});
    out.require(r.code == 0, name + ": yb-build exit " + std::to_string(r.code) + " " + r.err);
    if (r.code != 0) continue;
    const Document d = parse_document(slurp(file));
    const auto* dual = std::get_if<LieAlgebra>(&d.value);
    out.require(dual != nullptr, name + ": yb-build output is not an algebra document");
    if (!dual) continue;
    std::string why;
    out.require(dual_matches(*dual, expected, why), name + ": " + why);
  }
  if (out.ok) out.detail = "solvable3_51, h11 (lambda12 = 2), semidirect4_53 duals exact";
  return out;
}

std::vector<std::pair<std::string, GeneralizedBialgebra>> criterion2_inputs() {
  std::vector<std::pair<std::string, GeneralizedBialgebra>> out;
  const auto family = [](const JacobiPair& contact, const std::string& name) {
    const JacobiPair lp = lcs_from_contact_times_line(contact);
    const std::size_t n = lp.algebra.dim();
    const JacobiBuild jb = build_from_jacobi({lp.algebra, Form::basis(n, n - 1), lp.r, lp.x0});
    if (!jb.homomorphism || !jb.isomorphism) throw std::runtime_error(name + ": -sharp_r certificate missing");
    return jb.glb;
  };
  out.emplace_back("glb_from_cocycle(h11, e^1)", glb_from_cocycle(heisenberg(1), Form::basis(3, 0)));
  out.emplace_back("u(2) family (1,0,0)", family(su2_contact_pair(1, 0, 0), "u2"));
  out.emplace_back("gl(2,R) family (1,0,0)", family(sl2r_contact_pair(1, 0, 0), "gl2r"));
  return out;
}

bool all_residuals_zero(const Json& report) {
  return report.at("ok").get<bool>() && report.at("condalg1_residuals").empty() &&
         report.at("condalg3_residuals").empty() && report.at("phi0_x0").get<std::string>() == "0";
}

Verdict criterion2() {
  Verdict out;
  std::size_t passed = 0;
  for (const std::string name : {"noncob4_53", "firstkind4", "secondkind4", "thirdkind_u2"}) {
    const CliResult r = cli({"glb-check", "--name", name, "--format", "machine"});
    out.require(r.code == 0, name + ": glb-check exit " + std::to_string(r.code));
    if (r.code == 0) {
      out.require(all_residuals_zero(Json::parse(r.out).at("report")), name + ": nonzero residual");
      ++passed;
    }
  }
  try {
    for (const auto& [name, b] : criterion2_inputs()) {
      Document d;
      d.name = name;
      d.value = b;
      const fs::path file = scratch_dir() / ("glb_" + std::to_string(passed) + ".json");
      std::ofstream(file) << serialize(d);
      const CliResult r = cli({"glb-check", "--glb", file.string(), "--format", "machine"});
      out.require(r.code == 0, name + ": glb-check exit " + std::to_string(r.code));
      if (r.code == 0) {
        out.require(all_residuals_zero(Json::parse(r.out).at("report")), name + ": nonzero residual");
        ++passed;
      }
    }
  } catch (const std::exception& e) {
    out.require(false, e.what());
  }
  out.require(passed == 7, "only " + std::to_string(passed) + " of 7 bialgebras checked");
  if (out.ok) out.detail = "7 bialgebras pass with identically zero residuals";
  return out;
}

Verdict criterion3() {
  Verdict out;
  const CliResult r = cli({"coboundary-solve", "--name", "noncob4_53", "--format", "machine"});
  out.require(r.code == 1, "coboundary-solve exit " + std::to_string(r.code) + " (expected 1: no solution)");
  if (r.code == 1) {
    const Json rep = Json::parse(r.out).at("report");
    out.require(rep.contains("solutions") && rep.at("solutions").empty(), "report does not show an empty set");
  }
  out.require(!solve_coboundary(noncob4()).has_value(), "library solver found a solution");
  if (out.ok) out.detail = "linear system infeasible, solution set empty";
  return out;
}

Verdict criterion4() {
  Verdict out;
  std::size_t count = 0;
  const LieAlgebra g = su2();
  for (int m1 = -2; m1 <= 2; ++m1)
    for (int m2 = -2; m2 <= 2; ++m2)
      for (int m3 = -2; m3 <= 2; ++m3) {
        if (m1 == 0 && m2 == 0 && m3 == 0) continue;
        ++count;
        Form eta(3, 1);
        eta += Rational(m1) * Form::basis(3, 0);
        eta += Rational(m2) * Form::basis(3, 1);
        eta += Rational(m3) * Form::basis(3, 2);
        const std::string tag = "mu = (" + std::to_string(m1) + "," + std::to_string(m2) + "," + std::to_string(m3) + ")";
        if (!is_contact(g, eta)) {
          out.require(false, tag + " not contact");
          continue;
        }
        const JacobiPair jp = contact_to_jacobi({g, eta});
        const Rational norm(m1 * m1 + m2 * m2 + m3 * m3);
        const Rational l1 = Rational(-m1) / norm, l2 = Rational(-m2) / norm, l3 = Rational(-m3) / norm;
        const Multivector r = l1 * Multivector::monomial(3, {1, 2}) - l2 * Multivector::monomial(3, {0, 2}) +
                              l3 * Multivector::monomial(3, {0, 1});
        const Multivector x0 = -(l1 * Multivector::basis(3, 0) + l2 * Multivector::basis(3, 1) +
                                 l3 * Multivector::basis(3, 2));
        out.require(jp.r == r && jp.x0 == x0, tag + " differs from the closed form");
      }
  out.require(count == 124, "swept " + std::to_string(count) + " forms");
  if (out.ok) out.detail = "124 forms contact, lambda^i = -mu_i/|mu|^2 exactly";
  return out;
}

Verdict criterion5() {
  Verdict out;
  const auto e = [](std::size_t n, std::size_t i) { return Multivector::basis(n, i - 1); };
  const auto f = [](std::size_t n, std::size_t i) { return Form::basis(n, i - 1); };
  const LieAlgebra su2r = with_center(su2(), 1), su2r2 = with_center(su2(), 2), su2r3 = with_center(su2(), 3);
  const LieAlgebra su2su2r = with_center(direct_product(su2(), su2()), 1);

  struct Case {
    std::string label;
    CompactKind kind;
    std::function<GeneralizedBialgebra()> build;
    Multivector r, x0;
  };
  std::vector<Case> cases;
  // First kind: X₀ = 0, r on an abelian h annihilated by φ₀.
  cases.push_back({"first/abelian4", CompactKind::First,
                   [&] { return build_first_kind(abelian(4), {e(4, 1), e(4, 2)}, wedge(e(4, 1), e(4, 2)), f(4, 3)); },
                   wedge(e(4, 1), e(4, 2)), Multivector(4, 1)});
  cases.push_back({"first/su2+R2", CompactKind::First,
                   [&] { return build_first_kind(su2r2, {e(5, 1), e(5, 4)}, wedge(e(5, 1), e(5, 4)), f(5, 5)); },
                   wedge(e(5, 1), e(5, 4)), Multivector(5, 1)});
  cases.push_back({"first/su2+R3", CompactKind::First,
                   [&] {
                     return build_first_kind(su2r3, {e(6, 4), e(6, 5)}, Rational(2) * wedge(e(6, 4), e(6, 5)),
                                             f(6, 6));
                   },
                   Rational(2) * wedge(e(6, 4), e(6, 5)), Multivector(6, 1)});
  // Second kind: r = λ e1∧e2, X₀ = λ¹e1 + λ²e2.
  cases.push_back({"second/abelian4", CompactKind::Second,
                   [&] { return build_second_kind(abelian(4), e(4, 1), e(4, 2), 1, 1, 0); },
                   wedge(e(4, 1), e(4, 2)), e(4, 1)});
  cases.push_back({"second/su2+R", CompactKind::Second,
                   [&] { return build_second_kind(su2r, e(4, 1), e(4, 4), 2, 1, 0); },
                   Rational(2) * wedge(e(4, 1), e(4, 4)), e(4, 1)});
  cases.push_back({"second/su2+R2", CompactKind::Second,
                   [&] { return build_second_kind(su2r2, e(5, 4), e(5, 5), 1, 1, 2); },
                   wedge(e(5, 4), e(5, 5)), e(5, 4) + Rational(2) * e(5, 5)});
  // Third kind, written out from the displayed formula with e4 the chosen central vector.
  const auto third = [&](std::size_t n, std::size_t c, Rational l1, Rational l2, Rational l3) {
    const Multivector r = l1 * (wedge(e(n, 2), e(n, 3)) - wedge(e(n, c), e(n, 1))) -
                          l2 * (wedge(e(n, 1), e(n, 3)) + wedge(e(n, c), e(n, 2))) +
                          l3 * (wedge(e(n, 1), e(n, 2)) - wedge(e(n, c), e(n, 3)));
    const Multivector x0 = -(l1 * e(n, 1) + l2 * e(n, 2) + l3 * e(n, 3));
    return std::make_pair(r, x0);
  };
  const auto t1 = third(4, 4, 1, 0, 0), t2 = third(5, 4, 1, 2, -1), t3 = third(7, 7, 0, 1, Rational(1, 2));
  cases.push_back({"third/su2+R", CompactKind::Third,
                   [&] { return build_third_kind(su2r, {e(4, 1), e(4, 2), e(4, 3), e(4, 4)}, 1, 0, 0); },
                   t1.first, t1.second});
  cases.push_back({"third/su2+R2", CompactKind::Third,
                   [&] { return build_third_kind(su2r2, {e(5, 1), e(5, 2), e(5, 3), e(5, 4)}, 1, 2, -1); },
                   t2.first, t2.second});
  cases.push_back({"third/su2+su2+R", CompactKind::Third,
                   [&] {
                     return build_third_kind(su2su2r, {e(7, 1), e(7, 2), e(7, 3), e(7, 7)}, 0, 1, Rational(1, 2));
                   },
                   t3.first, t3.second});

  for (const auto& c : cases) {
    try {
      const GeneralizedBialgebra b = c.build();
      out.require(check_glb(b).ok, c.label + ": builder output fails check_glb");
      const Classification cl = classify_compact(b);
      out.require(cl.kind == c.kind, c.label + ": classified as " + to_string(cl.kind));
      out.require(cl.extraction.has_value(), c.label + ": no extraction");
      if (!cl.extraction) continue;
      const auto& L = b.g.labels();
      out.require(cl.extraction->pair.r == c.r,
                  c.label + ": extracted r = " + format_element(cl.extraction->pair.r, L) + ", built " +
                      format_element(c.r, L));
      out.require(cl.extraction->pair.x0 == c.x0, c.label + ": extracted X0 = " +
                                                      format_element(cl.extraction->pair.x0, L));
      out.require(b.x0 == c.x0, c.label + ": builder X0 differs from the formula");
    } catch (const std::exception& ex) {
      out.require(false, c.label + ": " + ex.what());
    }
  }
  if (out.ok) out.detail = std::to_string(cases.size()) + " builds over 3 bases per kind classified, (r, X0) recovered";
  return out;
}

Verdict criterion6() {
  Verdict out;
  constexpr std::size_t kCases = 200;
  gen::Rng rng;
  const auto d2 = props::differential_squares(kCases, rng);
  const auto sch = props::phi0_schouten_identities(kCases, rng);
  const auto agree = props::dual_bracket_formulas_agree(kCases, rng);
  const auto [post, dr] = props::yb_postconditions(kCases, rng);
  const auto add = [&](const char* name, const props::Outcome& o) {
    out.require(o.ok(kCases), std::string(name) + ": " + std::to_string(o.cases) + " cases, " +
                                  std::to_string(o.failures) + " failures " + o.first_failure);
  };
  add("d^2", d2);
  add("phi0-Schouten identities", sch);
  add("coadjoint vs pointwise bracket", agree);
  add("d_*r identity", dr);
  add("assembled bialgebra valid", post);
  if (out.ok) out.detail = "5 suites x " + std::to_string(kCases) + " cases, no failures";
  return out;
}

Verdict criterion7() {
  Verdict out;
  const YbData s = semidirect4_yb();
  const JacobiReport jr = check_jacobi({s.g, s.r, s.x0});
  out.require(!jr.ok, "semidirect4_53 passes check_jacobi");
  out.require(jr.rr_residual == Rational(2) * Multivector::monomial(4, {0, 1, 2}),
              "residual " + format_element(jr.rr_residual, s.g.labels()));
  const CliResult r = cli({"jacobi-check", "--name", "semidirect4_53"});
  out.require(r.code == 1 && r.out.find("2 e1^e2^e3") != std::string::npos, "CLI jacobi-check did not report it");
  out.require(!validate(gen::bad_algebra()).ok, "validate accepts the Jacobi-violating algebra");
  out.require(!is_compact(sl2r()).compact, "sl2r reported compact");
  const CompactnessCertificate su = is_compact(su2());
  out.require(su.compact, "su2 reported noncompact");
  out.require(killing_form(su2()) == Rational(-2) * Matrix::identity(3), "Killing form of su2 is not -2 I");
  if (out.ok) out.detail = "residual 2 e1^e2^e3, bad algebra rejected, sl2r noncompact, su2 compact with K = -2I";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"1 golden yb-build duals", criterion1},
      {"2 glb-check on seven bialgebras", criterion2},
      {"3 noncob4_53 has no coboundary r", criterion3},
      {"4 su(2) contact sweep", criterion4},
      {"5 compact classification roundtrips", criterion5},
      {"6 property suites", criterion6},
      {"7 negative controls", criterion7},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << name << ": " << v.detail << "\n";
    all = all && v.ok;
  }
  std::error_code ec;
  fs::remove_all(scratch_dir(), ec);
  return all ? 0 : 1;
}
