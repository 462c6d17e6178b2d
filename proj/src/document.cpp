#include "glb/document.hpp"

#include <map>
#include <set>

namespace glb {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw DocumentError(path + ": " + message);
}

void check_keys(const Json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (auto a : allowed) known = known || a == it.key();
    if (!known) fail(path + "." + it.key(), "unknown field");
  }
}

const Json& require(const Json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing required field");
  return *it;
}

std::string get_string(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::size_t get_size(const Json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    fail(path, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

Rational get_rational(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a rational string \"p\" or \"p/q\"");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

const Json& get_array(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::vector<std::string> parse_labels(const Json& v, const std::string& path) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  const Json& arr = get_array(v, path);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string l = get_string(arr[i], at(path, i));
    if (l.empty()) fail(at(path, i), "empty label");
    if (!seen.insert(l).second) fail(at(path, i), "repeated label '" + l + "'");
    labels.push_back(std::move(l));
  }
  if (labels.size() > kMaxDim) fail(path, "more than 64 basis vectors");
  return labels;
}

using LabelMap = std::map<std::string, std::size_t>;

LabelMap label_map(const std::vector<std::string>& labels, bool dual) {
  LabelMap m;
  for (std::size_t i = 0; i < labels.size(); ++i) m.emplace(labels[i], i);
  if (dual) {
    for (std::size_t i = 0; i < labels.size(); ++i) m.emplace(dual_label(labels[i]), i);
  }
  return m;
}

std::size_t lookup(const LabelMap& m, const Json& v, const std::string& path) {
  const std::string l = get_string(v, path);
  auto it = m.find(l);
  if (it == m.end()) fail(path, "unknown basis label '" + l + "'");
  return it->second;
}

template <class Kind>
Exterior<Kind> parse_element(const Json& j, const std::string& path, const std::vector<std::string>& labels,
                             std::initializer_list<std::string_view> allowed) {
  check_keys(j, path, allowed);
  const LabelMap m = label_map(labels, std::is_same_v<Kind, CovectorKind>);
  const std::size_t grade = get_size(require(j, path, "grade"), path + ".grade");
  Exterior<Kind> out(labels.size(), grade);
  const std::string tpath = path + ".terms";
  const Json& terms = get_array(require(j, path, "terms"), tpath);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string p = at(tpath, t);
    check_keys(terms[t], p, {"index", "coeff"});
    const Json& index = get_array(require(terms[t], p, "index"), p + ".index");
    if (index.size() != grade) fail(p + ".index", "length differs from grade " + std::to_string(grade));
    std::vector<std::size_t> seq;
    for (std::size_t k = 0; k < index.size(); ++k) seq.push_back(lookup(m, index[k], at(p + ".index", k)));
    if (!MultiIndex::from_sequence(seq)) fail(p + ".index", "repeated index");
    out += Exterior<Kind>::monomial(labels.size(), seq, get_rational(require(terms[t], p, "coeff"), p + ".coeff"));
  }
  return out;
}

LieAlgebra parse_algebra(const Json& j, const std::string& path) {
  check_keys(j, path, {"kind", "name", "dim", "basis", "brackets"});
  if (get_string(require(j, path, "kind"), path + ".kind") != "algebra") fail(path + ".kind", "expected \"algebra\"");
  std::string name;
  if (auto it = j.find("name"); it != j.end()) name = get_string(*it, path + ".name");
  const std::vector<std::string> labels = parse_labels(require(j, path, "basis"), path + ".basis");
  const std::size_t n = labels.size();
  if (auto it = j.find("dim"); it != j.end()) {
    if (get_size(*it, path + ".dim") != n) fail(path + ".dim", "differs from the number of basis labels");
  } else {
    fail(path + ".dim", "missing required field");
  }
  const LabelMap m = label_map(labels, false);
  LieAlgebra::Table table;
  const std::string bpath = path + ".brackets";
  const Json& brackets = get_array(require(j, path, "brackets"), bpath);
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string p = at(bpath, b);
    check_keys(brackets[b], p, {"i", "j", "value"});
    const std::size_t i = lookup(m, require(brackets[b], p, "i"), p + ".i");
    const std::size_t k = lookup(m, require(brackets[b], p, "j"), p + ".j");
    if (i == k) fail(p, "repeated index '" + labels[i] + "'");
    if (i > k) fail(p, "i must precede j in basis order");
    if (table.count({i, k})) fail(p, "duplicate entry for [" + labels[i] + "," + labels[k] + "]");
    Multivector v(n, 1);
    std::set<std::size_t> seen;
    const std::string vpath = p + ".value";
    const Json& value = get_array(require(brackets[b], p, "value"), vpath);
    for (std::size_t t = 0; t < value.size(); ++t) {
      const std::string q = at(vpath, t);
      check_keys(value[t], q, {"basis", "coeff"});
      const std::size_t e = lookup(m, require(value[t], q, "basis"), q + ".basis");
      if (!seen.insert(e).second) fail(q + ".basis", "repeated basis label '" + labels[e] + "'");
      v.add_term(MultiIndex::single(e), get_rational(require(value[t], q, "coeff"), q + ".coeff"));
    }
    table.emplace(std::make_pair(i, k), v);
  }
  try {
    return LieAlgebra(name, labels, table);
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

template <class Kind>
Exterior<Kind> parse_embedded(const Json& doc, const char* key, const std::vector<std::string>& labels,
                              std::size_t grade) {
  const std::string path = std::string("$.") + key;
  auto v = parse_element<Kind>(require(doc, "$", key), path, labels, {"grade", "terms"});
  if (v.grade() != grade) fail(path + ".grade", "expected " + std::to_string(grade));
  return v;
}

std::string coefficient_text(const Rational& c) { return c.to_string(); }

template <class Kind>
Json element_json(const Exterior<Kind>& e, const std::vector<std::string>& labels) {
  Json terms = Json::array();
  for (const auto& [index, coeff] : e.terms()) {
    Json idx = Json::array();
    for (auto i : index.indices()) idx.push_back(labels.at(i));
    terms.push_back(Json{{"index", std::move(idx)}, {"coeff", coefficient_text(coeff)}});
  }
  return Json{{"grade", e.grade()}, {"terms", std::move(terms)}};
}

std::vector<std::string> form_labels(const std::vector<std::string>& labels) { return dual_labels(labels); }

template <class Kind>
std::string format_impl(const Exterior<Kind>& e, const std::vector<std::string>& labels) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, coeff] : e.terms()) {
    Rational c = coeff;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    c = abs(c);
    std::string mono;
    for (auto i : index.indices()) mono += (mono.empty() ? "" : "^") + labels.at(i);
    if (mono.empty()) {
      out += c.to_string();
    } else {
      if (c != Rational(1)) out += c.to_string() + " ";
      out += mono;
    }
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Algebra: return "algebra";
    case DocumentKind::Multivector: return "multivector";
    case DocumentKind::Form: return "form";
    case DocumentKind::Jacobi: return "jacobi";
    case DocumentKind::Yb: return "yb";
    case DocumentKind::Glb: return "glb";
  }
  return "unknown";
}

DocumentKind Document::kind() const { return static_cast<DocumentKind>(value.index()); }

Json algebra_to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (const auto& [ij, v] : g.table()) {
    Json value = Json::array();
    for (const auto& [index, coeff] : v.terms()) {
      value.push_back(Json{{"basis", g.labels()[index.indices().front()]}, {"coeff", coefficient_text(coeff)}});
    }
    if (value.empty()) continue;
    brackets.push_back(Json{{"i", g.labels()[ij.first]}, {"j", g.labels()[ij.second]}, {"value", std::move(value)}});
  }
  return Json{{"kind", "algebra"}, {"name", g.name()}, {"dim", g.dim()}, {"basis", g.labels()},
              {"brackets", std::move(brackets)}};
}

Json element_to_json(const Multivector& p, const std::vector<std::string>& labels) { return element_json(p, labels); }
Json element_to_json(const Form& w, const std::vector<std::string>& labels) {
  return element_json(w, form_labels(labels));
}

std::string format_element(const Multivector& p, const std::vector<std::string>& labels) {
  return format_impl(p, labels);
}
std::string format_element(const Form& w, const std::vector<std::string>& labels) {
  return format_impl(w, form_labels(labels));
}

Json to_json(const Document& doc) {
  Json j;
  const auto named = [&](const char* kind) {
    j["kind"] = kind;
    if (!doc.name.empty()) j["name"] = doc.name;
  };
  const auto standalone = [&](const char* kind, Json body) {
    named(kind);
    j["basis"] = doc.basis;
    j["grade"] = body["grade"];
    j["terms"] = body["terms"];
  };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LieAlgebra>) {
          j = algebra_to_json(v);
        } else if constexpr (std::is_same_v<T, Multivector>) {
          standalone("multivector", element_to_json(v, doc.basis));
        } else if constexpr (std::is_same_v<T, Form>) {
          standalone("form", element_to_json(v, doc.basis));
        } else if constexpr (std::is_same_v<T, JacobiPair>) {
          named("jacobi");
          j["algebra"] = algebra_to_json(v.algebra);
          j["r"] = element_to_json(v.r, v.algebra.labels());
          j["x0"] = element_to_json(v.x0, v.algebra.labels());
        } else if constexpr (std::is_same_v<T, YbData>) {
          named("yb");
          j["algebra"] = algebra_to_json(v.g);
          j["r"] = element_to_json(v.r, v.g.labels());
          j["x0"] = element_to_json(v.x0, v.g.labels());
          j["phi0"] = element_to_json(v.phi0, v.g.labels());
        } else {
          named("glb");
          j["g"] = algebra_to_json(v.g);
          j["g_star"] = algebra_to_json(v.g_star);
          j["phi0"] = element_to_json(v.phi0, v.g.labels());
          j["x0"] = element_to_json(v.x0, v.g.labels());
        }
      },
      doc.value);
  if (doc.report) j["report"] = *doc.report;
  return j;
}

std::string serialize(const Document& doc) { return to_json(doc).dump(2) + "\n"; }

Document parse_document(std::string_view text, const std::vector<std::string>* context) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw DocumentError("byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail("$", "expected an object");
  const std::string kind = get_string(require(j, "$", "kind"), "$.kind");
  Document doc;
  if (auto it = j.find("report"); it != j.end()) {
    if (!it->is_object()) fail("$.report", "expected an object");
    doc.report = *it;
  }
  if (kind == "algebra") {
    Json body = j;
    body.erase("report");
    LieAlgebra g = parse_algebra(body, "$");
    doc.name = g.name();
    doc.value = std::move(g);
    return doc;
  }
  if (auto it = j.find("name"); it != j.end()) doc.name = get_string(*it, "$.name");
  if (kind == "multivector" || kind == "form") {
    if (auto it = j.find("basis"); it != j.end()) {
      doc.basis = parse_labels(*it, "$.basis");
      if (context && *context != doc.basis) fail("$.basis", "does not match the algebra's basis labels");
    } else if (context) {
      doc.basis = *context;
    } else {
      fail("$.basis", "missing required field (no algebra context)");
    }
    const std::initializer_list<std::string_view> keys{"kind", "name", "basis", "grade", "terms", "report"};
    if (kind == "multivector") {
      doc.value = parse_element<VectorKind>(j, "$", doc.basis, keys);
    } else {
      doc.value = parse_element<CovectorKind>(j, "$", doc.basis, keys);
    }
    return doc;
  }
  if (kind == "jacobi" || kind == "yb") {
    if (kind == "jacobi") {
      check_keys(j, "$", {"kind", "name", "algebra", "r", "x0", "report"});
    } else {
      check_keys(j, "$", {"kind", "name", "algebra", "r", "x0", "phi0", "report"});
    }
    LieAlgebra g = parse_algebra(require(j, "$", "algebra"), "$.algebra");
    Multivector r = parse_embedded<VectorKind>(j, "r", g.labels(), 2);
    Multivector x0 = parse_embedded<VectorKind>(j, "x0", g.labels(), 1);
    if (kind == "jacobi") {
      doc.value = JacobiPair{std::move(g), std::move(r), std::move(x0)};
    } else {
      Form phi0 = parse_embedded<CovectorKind>(j, "phi0", g.labels(), 1);
      doc.value = YbData{std::move(g), std::move(phi0), std::move(r), std::move(x0)};
    }
    return doc;
  }
  if (kind == "glb") {
    check_keys(j, "$", {"kind", "name", "g", "g_star", "phi0", "x0", "report"});
    LieAlgebra g = parse_algebra(require(j, "$", "g"), "$.g");
    LieAlgebra gs = parse_algebra(require(j, "$", "g_star"), "$.g_star");
    if (gs.dim() != g.dim()) fail("$.g_star.dim", "differs from the dimension of g");
    Form phi0 = parse_embedded<CovectorKind>(j, "phi0", g.labels(), 1);
    Multivector x0 = parse_embedded<VectorKind>(j, "x0", g.labels(), 1);
    doc.value = GeneralizedBialgebra{std::move(g), std::move(gs), std::move(phi0), std::move(x0)};
    return doc;
  }
  fail("$.kind", "unknown document kind '" + kind + "'");
}

Document to_document(const CatalogEntry& entry) {
  Document doc;
  std::visit([&](const auto& v) { doc.value = v; }, entry.value);
  doc.name = doc.kind() == DocumentKind::Algebra ? std::get<LieAlgebra>(doc.value).name() : entry.name;
  return doc;
}

Document element_document(const Multivector& p, std::vector<std::string> labels) {
  Document doc;
  doc.value = p;
  doc.basis = std::move(labels);
  return doc;
}

Document element_document(const Form& w, std::vector<std::string> labels) {
  Document doc;
  doc.value = w;
  doc.basis = std::move(labels);
  return doc;
}

}  // namespace glb
