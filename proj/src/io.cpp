#include "radx/io.hpp"

#include <fstream>

namespace radx {

namespace {

using nlohmann::json;

json table_to_labels(const std::vector<std::string>& labels, const OpTable& t) {
  json rows = json::array();
  for (std::size_t a = 0; a < t.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < t.size(); ++b) row.push_back(labels[t(elem(a), elem(b))]);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::vector<elem>> table_from_labels(const json& rows,
                                                 const std::vector<std::string>& labels,
                                                 std::size_t expect_rows,
                                                 std::size_t expect_cols, const char* which) {
  if (!rows.is_array() || rows.size() != expect_rows)
    throw MalformedTables(std::string(which) + " table must have " +
                          std::to_string(expect_rows) + " rows");
  auto find = [&](const std::string& lab) -> elem {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == lab) return elem(i);
    throw MalformedTables(std::string(which) + " table uses unknown label '" + lab + "'");
  };
  std::vector<std::vector<elem>> out;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != expect_cols)
      throw MalformedTables(std::string(which) + " table must have " +
                            std::to_string(expect_cols) + " columns");
    std::vector<elem> r;
    for (const auto& cell : row) {
      if (!cell.is_string()) throw MalformedTables(std::string(which) + " cells must be labels");
      r.push_back(find(cell.get<std::string>()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> parse_elements(const json& doc) {
  if (!doc.contains("elements") || !doc["elements"].is_array())
    throw MalformedTables("document needs an 'elements' array");
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) throw MalformedTables("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  return labels;
}

elem parse_zero(const json& doc, const std::vector<std::string>& labels) {
  if (!doc.contains("zero") || !doc["zero"].is_string())
    throw MalformedTables("document needs a 'zero' label");
  std::string z = doc["zero"].get<std::string>();
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == z) return elem(i);
  throw MalformedTables("zero label '" + z + "' is not an element");
}

std::string doc_name(const json& doc, const char* fallback) {
  if (doc.contains("name") && doc["name"].is_string()) return doc["name"].get<std::string>();
  return fallback;
}

}  // namespace

json to_document(const Hemiring& R) {
  json doc;
  doc["kind"] = "hemiring";
  doc["name"] = R.name;
  doc["elements"] = R.labels();
  doc["zero"] = R.label(0);
  doc["add"] = table_to_labels(R.labels(), R.add_table());
  doc["mul"] = table_to_labels(R.labels(), R.mul_table());
  return doc;
}

json to_document(const CommMonoid& M) {
  json doc;
  doc["kind"] = "monoid";
  doc["name"] = M.name;
  doc["elements"] = M.labels();
  doc["zero"] = M.label(0);
  doc["add"] = table_to_labels(M.labels(), M.add_table());
  return doc;
}

json to_document(const Semimodule& M) {
  json doc;
  doc["kind"] = "semimodule";
  doc["name"] = M.name;
  doc["hemiring_ref"] = to_document(M.ring());
  doc["elements"] = M.labels();
  doc["zero"] = M.label(0);
  doc["add"] = table_to_labels(M.labels(), M.add_table());
  json rows = json::array();
  for (std::size_t r = 0; r < M.ring().size(); ++r) {
    json row = json::array();
    for (std::size_t m = 0; m < M.size(); ++m) row.push_back(M.label(M.act(elem(r), elem(m))));
    rows.push_back(row);
  }
  doc["action"] = rows;
  return doc;
}

DocumentKind document_kind(const json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    throw MalformedTables("document needs a 'kind' field");
  std::string k = doc["kind"].get<std::string>();
  if (k == "hemiring") return DocumentKind::hemiring;
  if (k == "semimodule") return DocumentKind::semimodule;
  if (k == "monoid") return DocumentKind::monoid;
  throw MalformedTables("unknown document kind '" + k + "'");
}

HemiringPtr parse_hemiring(const json& doc) {
  if (document_kind(doc) != DocumentKind::hemiring)
    throw MalformedTables("expected a hemiring document");
  auto labels = parse_elements(doc);
  elem zero = parse_zero(doc, labels);
  if (!doc.contains("add") || !doc.contains("mul"))
    throw MalformedTables("hemiring documents need 'add' and 'mul' tables");
  auto add = table_from_labels(doc["add"], labels, labels.size(), labels.size(), "add");
  auto mul = table_from_labels(doc["mul"], labels, labels.size(), labels.size(), "mul");
  return std::make_shared<Hemiring>(
      Hemiring::validate(doc_name(doc, "hemiring"), labels, zero, add, mul));
}

CommMonoidPtr parse_monoid(const json& doc) {
  if (document_kind(doc) != DocumentKind::monoid)
    throw MalformedTables("expected a monoid document");
  auto labels = parse_elements(doc);
  elem zero = parse_zero(doc, labels);
  if (!doc.contains("add")) throw MalformedTables("monoid documents need an 'add' table");
  auto add = table_from_labels(doc["add"], labels, labels.size(), labels.size(), "add");
  return std::make_shared<CommMonoid>(
      CommMonoid::validate(doc_name(doc, "monoid"), labels, zero, add));
}

SemimodulePtr parse_semimodule(const json& doc, const std::string& base_dir) {
  if (document_kind(doc) != DocumentKind::semimodule)
    throw MalformedTables("expected a semimodule document");
  if (!doc.contains("hemiring_ref"))
    throw MalformedTables("semimodule documents need a 'hemiring_ref'");
  HemiringPtr R;
  const auto& ref = doc["hemiring_ref"];
  if (ref.is_string()) {
    std::string path = ref.get<std::string>();
    if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
    R = parse_hemiring(load_json_file(path));
  } else if (ref.is_object()) {
    R = parse_hemiring(ref);
  } else {
    throw MalformedTables("hemiring_ref must be a document or a file path");
  }
  auto labels = parse_elements(doc);
  elem zero = parse_zero(doc, labels);
  if (!doc.contains("add") || !doc.contains("action"))
    throw MalformedTables("semimodule documents need 'add' and 'action' tables");
  auto add = table_from_labels(doc["add"], labels, labels.size(), labels.size(), "add");
  auto action = table_from_labels(doc["action"], labels, R->size(), labels.size(), "action");
  return std::make_shared<Semimodule>(
      Semimodule::validate(doc_name(doc, "semimodule"), R, labels, zero, add, action));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedTables("cannot open file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw MalformedTables("invalid JSON in '" + path + "': " + e.what());
  }
  return doc;
}

}  // namespace radx
