#include "glb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "glb/bialgebra.hpp"
#include "glb/catalog.hpp"
#include "glb/document.hpp"
#include "glb/jacobi.hpp"

namespace glb::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string algebra, r, x0, phi0, eta, omega, lee, glb, name, out, y0;
  std::string format = "text";
};

struct Output {
  Json report = Json::object();
  std::vector<std::string> lines;
  std::optional<Document> produced;  // result document, written to --out
  std::optional<Document> subject;   // carries the report in machine format
  bool ok = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Document load(const std::string& path, const std::vector<std::string>* context = nullptr) {
  try {
    return parse_document(read_file(path), context);
  } catch (const DocumentError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void check(Output& o, const std::string& key, const std::string& label, bool ok) {
  o.report[key] = ok;
  o.lines.push_back(label + ": " + verdict(ok));
  o.ok = o.ok && ok;
}

template <class Kind>
void residual(Output& o, const std::string& key, const std::string& label, const Exterior<Kind>& v,
              const std::vector<std::string>& labels) {
  o.report[key] = element_to_json(v, labels);
  o.lines.push_back("  " + label + " = " + format_element(v, labels));
}

template <class Kind>
void value(Output& o, const std::string& key, const std::string& label, const Exterior<Kind>& v,
           const std::vector<std::string>& labels) {
  o.report[key] = element_to_json(v, labels);
  o.lines.push_back(label + " = " + format_element(v, labels));
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {}

  LieAlgebra algebra() const {
    if (!opt_.name.empty()) return algebra_of(to_document(catalog_entry()));
    if (!opt_.algebra.empty()) return algebra_of(load(opt_.algebra));
    throw UsageError("an algebra is required (--algebra FILE or --name NAME)");
  }

  Document subject_document() const {
    if (!opt_.name.empty()) return to_document(catalog_entry());
    if (!opt_.glb.empty()) return load(opt_.glb);
    if (!opt_.algebra.empty()) return load(opt_.algebra);
    throw UsageError("an input is required (--algebra FILE, --glb FILE or --name NAME)");
  }

  Multivector vector_file(const std::string& path, const LieAlgebra& g, std::size_t grade, const char* flag) const {
    Document d = load(path, &g.labels());
    auto* v = std::get_if<Multivector>(&d.value);
    if (!v) throw UsageError(std::string(flag) + ": expected a multivector document");
    if (v->grade() != grade) throw UsageError(std::string(flag) + ": expected grade " + std::to_string(grade));
    return *v;
  }

  Form form_file(const std::string& path, const LieAlgebra& g, std::size_t grade, const char* flag) const {
    Document d = load(path, &g.labels());
    auto* v = std::get_if<Form>(&d.value);
    if (!v) throw UsageError(std::string(flag) + ": expected a form document");
    if (v->grade() != grade) throw UsageError(std::string(flag) + ": expected grade " + std::to_string(grade));
    return *v;
  }

  /// From a jacobi/yb document, or an algebra plus --r/--x0. Flags override.
  JacobiPair pair() const {
    const YbData y = yb(false);
    return {y.g, y.r, y.x0};
  }

  YbData yb(bool want_phi0 = true) const {
    std::optional<YbData> base;
    if (!opt_.name.empty() || !opt_.algebra.empty()) {
      const Document d = !opt_.name.empty() ? to_document(catalog_entry()) : load(opt_.algebra);
      if (auto* jp = std::get_if<JacobiPair>(&d.value)) {
        base = YbData{jp->algebra, Form(jp->algebra.dim(), 1), jp->r, jp->x0};
      } else if (auto* y = std::get_if<YbData>(&d.value)) {
        base = *y;
      } else {
        const LieAlgebra g = algebra_of(d);
        base = YbData{g, Form(g.dim(), 1), Multivector(g.dim(), 2), Multivector(g.dim(), 1)};
        if (opt_.r.empty()) throw UsageError("--r is required when the input is a bare algebra");
      }
    } else {
      throw UsageError("an input is required (--algebra FILE or --name NAME)");
    }
    if (!opt_.r.empty()) base->r = vector_file(opt_.r, base->g, 2, "--r");
    if (!opt_.x0.empty()) base->x0 = vector_file(opt_.x0, base->g, 1, "--x0");
    if (want_phi0 && !opt_.phi0.empty()) base->phi0 = form_file(opt_.phi0, base->g, 1, "--phi0");
    return *base;
  }

  GeneralizedBialgebra glb() const {
    const Document d = subject_document();
    if (auto* b = std::get_if<GeneralizedBialgebra>(&d.value)) return *b;
    throw UsageError("expected a glb document (--glb FILE or --name NAME)");
  }

 private:
  CatalogEntry catalog_entry() const {
    try {
      return catalog(opt_.name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  static LieAlgebra algebra_of(const Document& d) {
    return std::visit(
        [](const auto& v) -> LieAlgebra {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, LieAlgebra>) {
            return v;
          } else if constexpr (std::is_same_v<T, JacobiPair>) {
            return v.algebra;
          } else if constexpr (std::is_same_v<T, YbData> || std::is_same_v<T, GeneralizedBialgebra>) {
            return v.g;
          } else {
            throw UsageError("expected a document containing an algebra");
          }
        },
        d.value);
  }

  const Options& opt_;
};

Document jacobi_document(const JacobiPair& jp, std::string name = {}) {
  Document d;
  d.name = std::move(name);
  d.value = jp;
  return d;
}

Document algebra_document(const LieAlgebra& g) {
  Document d;
  d.name = g.name();
  d.value = g;
  return d;
}

Document glb_document(const GeneralizedBialgebra& b, std::string name = {}) {
  Document d;
  d.name = std::move(name);
  d.value = b;
  return d;
}

void report_jacobi(Output& o, const JacobiPair& jp) {
  const JacobiReport rep = check_jacobi(jp);
  const auto& L = jp.algebra.labels();
  check(o, "ok", "Jacobi pair", rep.ok);
  residual(o, "rr_residual", "[r,r] - 2 X0^r", rep.rr_residual, L);
  residual(o, "x0_residual", "[X0,r]", rep.x0_residual, L);
}

// Subcommands. Each fills `o`; failures of checks set o.ok = false.

void cmd_validate(const Session& s, Output& o) {
  const Document d = s.subject_document();
  o.subject = d;
  std::vector<std::pair<std::string, LieAlgebra>> algebras;
  if (auto* g = std::get_if<LieAlgebra>(&d.value)) algebras.emplace_back("algebra", *g);
  if (auto* jp = std::get_if<JacobiPair>(&d.value)) algebras.emplace_back("algebra", jp->algebra);
  if (auto* y = std::get_if<YbData>(&d.value)) algebras.emplace_back("algebra", y->g);
  if (auto* b = std::get_if<GeneralizedBialgebra>(&d.value)) {
    algebras.emplace_back("g", b->g);
    algebras.emplace_back("g_star", b->g_star);
  }
  if (algebras.empty()) throw UsageError("validate expects a document containing an algebra");
  for (const auto& [key, g] : algebras) {
    const ValidationReport rep = validate(g);
    check(o, key, key + " (" + g.name() + ") Jacobi identity", rep.ok);
    Json violations = Json::array();
    for (const auto& v : rep.violations) {
      const auto& L = g.labels();
      violations.push_back(Json{{"i", L[v.i]}, {"j", L[v.j]}, {"k", L[v.k]},
                                {"residual", element_to_json(v.residual, L)}});
      o.lines.push_back("  [[" + L[v.i] + "," + L[v.j] + "]," + L[v.k] + "] + cyclic = " +
                        format_element(v.residual, L));
    }
    o.report[key + "_violations"] = violations;
  }
  o.report["ok"] = o.ok;
}

void cmd_jacobi_check(const Session& s, Output& o) {
  const JacobiPair jp = s.pair();
  o.subject = jacobi_document(jp);
  report_jacobi(o, jp);
}

std::string rank_type(const JacobiPair& jp, std::size_t rank) {
  if (rank != jp.algebra.dim()) return "degenerate";
  return rank % 2 == 1 ? "contact" : "lcs";
}

void cmd_rank(const Session& s, Output& o) {
  const JacobiPair jp = s.pair();
  o.subject = jacobi_document(jp);
  const std::size_t k = jacobi_rank(jp);
  o.report["rank"] = k;
  o.report["dim"] = jp.algebra.dim();
  o.report["type"] = rank_type(jp, k);
  o.lines.push_back("rank = " + std::to_string(k) + " (dim " + std::to_string(jp.algebra.dim()) + ", " +
                    rank_type(jp, k) + ")");
}

void cmd_char_sub(const Session& s, Output& o) {
  const JacobiPair jp = s.pair();
  o.subject = jacobi_document(jp);
  report_jacobi(o, jp);
  if (!o.ok) return;
  const CharacteristicSubalgebra cs = characteristic_subalgebra(jp);
  Json basis = Json::array();
  o.lines.push_back("characteristic subalgebra of dimension " + std::to_string(cs.basis.size()) + " (" +
                    (cs.contact ? "contact" : "lcs") + ")");
  for (std::size_t i = 0; i < cs.basis.size(); ++i) {
    const Multivector v = Multivector::from_coordinates(cs.basis[i]);
    basis.push_back(element_to_json(v, jp.algebra.labels()));
    o.lines.push_back("  " + cs.h.labels()[i] + " = " + format_element(v, jp.algebra.labels()));
  }
  o.report["basis"] = basis;
  o.report["type"] = cs.contact ? "contact" : "lcs";
  o.produced = jacobi_document({cs.h, cs.r, cs.x0});
}

void cmd_contact(const Session& s, const Options& opt, Output& o) {
  if (!opt.eta.empty()) {
    const LieAlgebra g = s.algebra();
    const Form eta = s.form_file(opt.eta, g, 1, "--eta");
    o.subject = element_document(eta, g.labels());
    const bool contact = is_contact(g, eta);
    check(o, "ok", "contact form", contact);
    if (!contact) return;
    const JacobiPair jp = contact_to_jacobi({g, eta});
    value(o, "r", "r", jp.r, g.labels());
    value(o, "x0", "X0", jp.x0, g.labels());
    o.produced = jacobi_document(jp);
    return;
  }
  const JacobiPair jp = s.pair();
  o.subject = jacobi_document(jp);
  const ContactStructure cs = jacobi_to_contact(jp);
  check(o, "ok", "contact structure", true);
  value(o, "eta", "eta", cs.eta, jp.algebra.labels());
  o.produced = element_document(cs.eta, jp.algebra.labels());
}

void cmd_lcs(const Session& s, const Options& opt, Output& o) {
  if (!opt.omega.empty()) {
    const LieAlgebra g = s.algebra();
    const Form omega2 = s.form_file(opt.omega, g, 2, "--omega");
    const Form lee = opt.lee.empty() ? Form(g.dim(), 1) : s.form_file(opt.lee, g, 1, "--lee");
    o.subject = element_document(omega2, g.labels());
    const LcsReport rep = check_lcs({g, omega2, lee});
    check(o, "even_dim", "even dimension", rep.even_dim);
    check(o, "nondegenerate", "Omega nondegenerate", rep.nondegenerate);
    check(o, "lee_cocycle", "Lee form closed", rep.lee_cocycle);
    check(o, "ok", "l.c.s. structure", rep.ok);
    residual(o, "residual", "d Omega - omega^Omega", rep.residual, g.labels());
    if (!rep.ok) return;
    const JacobiPair jp = lcs_to_jacobi({g, omega2, lee});
    value(o, "r", "r", jp.r, g.labels());
    value(o, "x0", "X0", jp.x0, g.labels());
    o.produced = jacobi_document(jp);
    return;
  }
  const JacobiPair jp = s.pair();
  o.subject = jacobi_document(jp);
  const LcsStructure ls = jacobi_to_lcs(jp);
  check(o, "ok", "l.c.s. structure", true);
  value(o, "omega", "Omega", ls.omega2, jp.algebra.labels());
  value(o, "lee", "omega", ls.lee, jp.algebra.labels());
  o.produced = element_document(ls.omega2, jp.algebra.labels());
}

void report_yb(Output& o, const YbData& y) {
  const YbReport rep = check_yb_hypotheses(y);
  const auto& L = y.g.labels();
  check(o, "rr_invariant", "[r,r] - 2 X0^r is ad(phi0,1)-invariant", rep.rr_invariant);
  residual(o, "rr_term", "[r,r] - 2 X0^r", rep.rr_term, L);
  Json rr = Json::array();
  for (const auto& a : rep.rr_action) {
    rr.push_back(Json{{"basis", L[a.i]}, {"residual", element_to_json(a.residual, L)}});
    o.lines.push_back("  ad(" + L[a.i] + ") of it = " + format_element(a.residual, L));
  }
  o.report["rr_action"] = rr;
  check(o, "x0_r_zero", "[X0,r] = 0", rep.x0_r_zero);
  residual(o, "x0_r", "[X0,r]", rep.x0_r, L);
  check(o, "s_invariant", "i(phi0)r - X0 is ad(phi0,0)-invariant", rep.s_invariant);
  residual(o, "s_term", "i(phi0)r - X0", rep.s_term, L);
  Json sa = Json::array();
  for (const auto& a : rep.s_action) {
    sa.push_back(Json{{"basis", L[a.i]}, {"residual", element_to_json(a.residual, L)}});
    o.lines.push_back("  ad(" + L[a.i] + ") of it = " + format_element(a.residual, L));
  }
  o.report["s_action"] = sa;
  o.report["ok"] = rep.ok;
}

void cmd_yb_check(const Session& s, Output& o) {
  const YbData y = s.yb();
  Document d;
  d.value = y;
  o.subject = d;
  report_yb(o, y);
}

void report_glb(Output& o, const GeneralizedBialgebra& b) {
  const GlbReport rep = check_glb(b);
  const auto& L = b.g.labels();
  check(o, "g_jacobi", "g Jacobi identity", rep.g_jacobi);
  check(o, "g_star_jacobi", "g* Jacobi identity", rep.g_star_jacobi);
  check(o, "phi0_cocycle", "phi0 is a 1-cocycle of g", rep.phi0_cocycle);
  check(o, "x0_cocycle", "X0 is a 1-cocycle of g*", rep.x0_cocycle);
  check(o, "condalg1", "condalg1", rep.condalg1);
  Json c1 = Json::array();
  for (const auto& p : rep.condalg1_residuals) {
    c1.push_back(Json{{"i", L[p.i]}, {"j", L[p.j]}, {"residual", element_to_json(p.residual, L)}});
    o.lines.push_back("  (" + L[p.i] + "," + L[p.j] + ") residual = " + format_element(p.residual, L));
  }
  o.report["condalg1_residuals"] = c1;
  check(o, "condalg2", "condalg2", rep.condalg2);
  o.report["phi0_x0"] = rep.phi0_x0.to_string();
  o.lines.push_back("  phi0(X0) = " + rep.phi0_x0.to_string());
  check(o, "condalg3", "condalg3", rep.condalg3);
  Json c3 = Json::array();
  for (const auto& p : rep.condalg3_residuals) {
    c3.push_back(Json{{"i", L[p.i]}, {"residual", element_to_json(p.residual, L)}});
    o.lines.push_back("  (" + L[p.i] + ") residual = " + format_element(p.residual, L));
  }
  o.report["condalg3_residuals"] = c3;
  o.report["ok"] = rep.ok;
}

void cmd_yb_build(const Session& s, Output& o) {
  const YbData y = s.yb();
  Document d;
  d.value = y;
  o.subject = d;
  report_yb(o, y);
  if (!o.ok) return;
  const LieAlgebra dual = build_dual_bracket(y);
  const GeneralizedBialgebra b{y.g, dual, y.phi0, y.x0};
  Output glb_part;
  report_glb(glb_part, b);
  o.report["glb"] = glb_part.report;
  o.lines.push_back("assembled bialgebra: " + std::string(verdict(glb_part.ok)));
  for (const auto& l : glb_part.lines) o.lines.push_back("  " + l);
  o.ok = o.ok && glb_part.ok;
  residual(o, "dual_r_residual", "d_* r - ([r,r] - 2 X0^r - i(phi0)r^r)", dual_r_residual(y, dual), y.g.labels());
  o.ok = o.ok && dual_r_residual(y, dual).is_zero();
  o.report["ok"] = o.ok;
  o.lines.push_back("dual brackets:");
  const auto& L = dual.labels();
  for (std::size_t i = 0; i < dual.dim(); ++i)
    for (std::size_t j = i + 1; j < dual.dim(); ++j)
      o.lines.push_back("  [" + L[i] + "," + L[j] + "]* = " + format_element(dual.bracket_basis(i, j), L));
  o.produced = algebra_document(dual);
}

void cmd_glb_check(const Session& s, Output& o) {
  const GeneralizedBialgebra b = s.glb();
  o.subject = glb_document(b);
  report_glb(o, b);
}

void cmd_glb_extract(const Session& s, const Options& opt, Output& o) {
  const GeneralizedBialgebra b = s.glb();
  o.subject = glb_document(b);
  const Multivector y0 = opt.y0.empty() ? default_y0(b) : s.vector_file(opt.y0, b.g, 1, "--y0");
  const Extraction ex = extract_jacobi(b, y0);
  const auto& L = b.g.labels();
  check(o, "ok", "extracted Jacobi pair", true);
  value(o, "y0", "Y0", y0, L);
  value(o, "r", "r", ex.pair.r, L);
  value(o, "x0", "X0", ex.pair.x0, L);
  o.report["characteristic_dim"] = ex.characteristic.basis.size();
  o.report["characteristic_type"] = ex.characteristic.contact ? "contact" : "lcs";
  o.lines.push_back("characteristic subalgebra: dimension " + std::to_string(ex.characteristic.basis.size()) +
                    (ex.characteristic.contact ? " (contact)" : " (lcs)"));
  o.produced = jacobi_document(ex.pair);
}

void cmd_glb_classify(const Session& s, Output& o) {
  const GeneralizedBialgebra b = s.glb();
  o.subject = glb_document(b);
  const Classification c = classify_compact(b);
  const auto& L = b.g.labels();
  o.report["ok"] = true;
  o.report["class"] = to_string(c.kind);
  o.lines.push_back("class: " + to_string(c.kind));
  if (c.extraction) {
    value(o, "r", "r", c.extraction->pair.r, L);
    value(o, "x0", "X0", c.extraction->pair.x0, L);
    o.produced = jacobi_document(c.extraction->pair);
  }
  if (c.third) {
    value(o, "e4", "e4", c.third->e4, L);
    o.report["h_prime_dim"] = c.third->h_prime.size();
    o.lines.push_back("contact subalgebra h': dimension " + std::to_string(c.third->h_prime.size()));
  }
  if (c.semidirect) {
    value(o, "theta0", "theta0", c.semidirect->theta0, L);
    o.report["psi"] = c.semidirect->psi.to_string();
    o.lines.push_back("Psi = " + c.semidirect->psi.to_string());
  }
}

void cmd_coboundary(const Session& s, Output& o) {
  const GeneralizedBialgebra b = s.glb();
  o.subject = glb_document(b);
  const auto sol = solve_coboundary(b);
  const auto& L = b.g.labels();
  check(o, "ok", "coboundary r exists", sol.has_value());
  if (!sol) {
    o.report["solutions"] = Json::array();
    o.lines.push_back("  solution set is empty");
    return;
  }
  value(o, "particular", "r", sol->particular, L);
  Json h = Json::array();
  for (const auto& v : sol->homogeneous) {
    h.push_back(element_to_json(v, L));
    o.lines.push_back("  + t * (" + format_element(v, L) + ")");
  }
  o.report["homogeneous"] = h;
  o.produced = element_document(sol->particular, L);
}

void cmd_catalog(const Options& opt, Output& o) {
  if (opt.name.empty()) {
    o.report["names"] = catalog_names();
    for (const auto& n : catalog_names()) o.lines.push_back(n);
    return;
  }
  CatalogEntry e;
  try {
    e = catalog(opt.name);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  o.produced = to_document(e);
  o.subject = o.produced;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write '" + path + "'");
}

void emit(const Options& opt, const std::string& command, Output& o, std::ostream& out) {
  if (!opt.out.empty() && o.produced) write_file(opt.out, serialize(*o.produced));
  if (opt.format == "machine") {
    Document d;
    if (o.produced && command != "catalog") {
      d = *o.produced;
    } else if (o.subject) {
      d = *o.subject;
    }
    Json report = Json{{"command", command}, {"ok", o.ok}};
    for (auto it = o.report.begin(); it != o.report.end(); ++it) {
      if (it.key() != "ok") report[it.key()] = it.value();
    }
    if (command == "catalog" && !o.produced) {
      out << Json{{"report", report}}.dump(2) << "\n";
      return;
    }
    if (command != "catalog") d.report = report;
    out << serialize(d);
    return;
  }
  for (const auto& l : o.lines) out << l << "\n";
  if (o.produced && opt.out.empty()) out << serialize(*o.produced);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact computations with Lie algebras, Jacobi structures and generalized Lie bialgebras", "glbtool"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  struct Command {
    const char* name;
    const char* help;
    std::vector<std::string> flags;
  };
  const std::vector<Command> commands = {
      {"validate", "Check the Jacobi identity of every algebra in a document", {"algebra", "glb", "name"}},
      {"jacobi-check", "Check [r,r] = 2 X0^r and [X0,r] = 0", {"algebra", "r", "x0", "name"}},
      {"rank", "Rank of (r, X0)", {"algebra", "r", "x0", "name"}},
      {"char-sub", "Characteristic subalgebra of a Jacobi pair", {"algebra", "r", "x0", "name"}},
      {"contact", "Contact form to Jacobi pair (--eta), or back", {"algebra", "r", "x0", "eta", "name"}},
      {"lcs", "l.c.s. structure to Jacobi pair (--omega, --lee), or back",
       {"algebra", "r", "x0", "omega", "lee", "name"}},
      {"yb-check", "Check the Yang-Baxter hypotheses", {"algebra", "r", "x0", "phi0", "name"}},
      {"yb-build", "Build the dual bracket from Yang-Baxter data", {"algebra", "r", "x0", "phi0", "name"}},
      {"glb-check", "Check a generalized Lie bialgebra", {"glb", "name"}},
      {"glb-extract", "Extract the Jacobi pair r = -d_{*X0} Y0", {"glb", "name", "y0"}},
      {"glb-classify", "Classify a bialgebra over a compact Lie algebra", {"glb", "name"}},
      {"coboundary-solve", "Solve d_{*X0} = ad(phi0,1)(.)(r) for r", {"glb", "name"}},
      {"catalog", "List catalog entries or print one", {"name"}},
  };
  const std::map<std::string, std::pair<std::string*, const char*>> flag_targets = {
      {"algebra", {&opt.algebra, "Algebra, jacobi or yb document"}},
      {"r", {&opt.r, "Multivector document of grade 2"}},
      {"x0", {&opt.x0, "Multivector document of grade 1"}},
      {"phi0", {&opt.phi0, "Form document of grade 1"}},
      {"eta", {&opt.eta, "Form document of grade 1"}},
      {"omega", {&opt.omega, "Form document of grade 2"}},
      {"lee", {&opt.lee, "Form document of grade 1"}},
      {"glb", {&opt.glb, "GLB document"}},
      {"y0", {&opt.y0, "Multivector document of grade 1"}},
      {"name", {&opt.name, "Catalog entry"}},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    for (const auto& f : c.flags) {
      const auto& [target, help] = flag_targets.at(f);
      sub->add_option("--" + f, *target, help);
    }
    sub->add_option("--out", opt.out, "Write the resulting document to FILE");
    sub->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
    subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Session s(opt);
    Output o;
    if (command == "validate") cmd_validate(s, o);
    else if (command == "jacobi-check") cmd_jacobi_check(s, o);
    else if (command == "rank") cmd_rank(s, o);
    else if (command == "char-sub") cmd_char_sub(s, o);
    else if (command == "contact") cmd_contact(s, opt, o);
    else if (command == "lcs") cmd_lcs(s, opt, o);
    else if (command == "yb-check") cmd_yb_check(s, o);
    else if (command == "yb-build") cmd_yb_build(s, o);
    else if (command == "glb-check") cmd_glb_check(s, o);
    else if (command == "glb-extract") cmd_glb_extract(s, opt, o);
    else if (command == "glb-classify") cmd_glb_classify(s, o);
    else if (command == "coboundary-solve") cmd_coboundary(s, o);
    else cmd_catalog(opt, o);
    emit(opt, command, o, out);
    return o.ok ? 0 : 1;
  } catch (const PreconditionFailed& e) {
    err << command << ": check failed: " << e.what() << "\n";
    return 1;
  } catch (const VerificationFailed& e) {
    err << command << ": check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << command << ": error: " << e.what() << "\n";
    return 2;
  } catch (...) {
    err << command << ": error: unknown failure\n";
    return 2;
  }
}

}  // namespace glb::cli
