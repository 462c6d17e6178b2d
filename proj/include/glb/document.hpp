#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "glb/bialgebra.hpp"
#include "glb/catalog.hpp"
#include "glb/jacobi.hpp"
#include "glb/lie_algebra.hpp"

namespace glb {

using Json = nlohmann::ordered_json;

/// Malformed text or schema violation. The message starts with the byte
/// offset (syntax errors) or the JSON path of the offending field.
class DocumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class DocumentKind { Algebra, Multivector, Form, Jacobi, Yb, Glb };
std::string to_string(DocumentKind kind);

struct Document {
  using Value = std::variant<LieAlgebra, Multivector, Form, JacobiPair, YbData, GeneralizedBialgebra>;

  std::string name;                 // optional except for algebras, where it is always written
  Value value;
  std::vector<std::string> basis;   // labels of a standalone multivector/form
  std::optional<Json> report;       // carried through parse/serialize untouched

  DocumentKind kind() const;
};

/// `context` supplies the basis of a standalone multivector/form document
/// that has no "basis" field.
Document parse_document(std::string_view text, const std::vector<std::string>* context = nullptr);
std::string serialize(const Document& doc);

Document to_document(const CatalogEntry& entry);
Document element_document(const Multivector& p, std::vector<std::string> labels);
Document element_document(const Form& w, std::vector<std::string> labels);

Json to_json(const Document& doc);
Json algebra_to_json(const LieAlgebra& g);
/// {"grade": k, "terms": [...]} with the given primal labels (dual labels for forms).
Json element_to_json(const Multivector& p, const std::vector<std::string>& labels);
Json element_to_json(const Form& w, const std::vector<std::string>& labels);

/// Plain-text rendering such as "2 e1^e2^e3 - 1/2 e2"; "0" for zero.
std::string format_element(const Multivector& p, const std::vector<std::string>& labels);
std::string format_element(const Form& w, const std::vector<std::string>& labels);

}  // namespace glb
