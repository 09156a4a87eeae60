// radx: exact radicals and verification suites for finite hemirings.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "radx/catalog.hpp"
#include "radx/construct.hpp"
#include "radx/enumerate.hpp"
#include "radx/error.hpp"
#include "radx/io.hpp"
#include "radx/iso.hpp"
#include "radx/radical.hpp"
#include "radx/verify.hpp"

namespace {

using nlohmann::json;
using namespace radx;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitFinding = 3;
constexpr int kExitResourceLimit = 4;

struct GlobalOptions {
  bool json_output = false;
  std::size_t limit_congruences = default_limits().max_congruences;
  std::size_t limit_ideals = default_limits().max_ideals;
  unsigned jobs = 1;

  Limits limits() const {
    Limits l = default_limits();
    l.max_congruences = limit_congruences;
    l.max_ideals = limit_ideals;
    return l;
  }
};

// One report document per invocation. elapsed_ms is pinned to 0 so output is
// byte-identical across runs.
struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  json witnesses = json::object();
  std::string status = "ok";
  std::vector<std::string> lines;

  void line(const std::string& s) { lines.push_back(s); }

  void emit(bool as_json) const {
    if (as_json) {
      json doc;
      doc["command"] = command;
      doc["inputs"] = inputs;
      doc["result"] = result;
      doc["witnesses"] = witnesses;
      doc["status"] = status;
      doc["elapsed_ms"] = 0;
      std::cout << doc.dump(2) << "\n";
    } else {
      for (const auto& s : lines) std::cout << s << "\n";
    }
  }
};

json subset_json(const Hemiring& R, const Bitset& s) {
  json arr = json::array();
  s.for_each([&](std::size_t i) { arr.push_back(R.label(elem(i))); });
  return arr;
}

std::string subset_text(const Hemiring& R, const Bitset& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    out += R.label(elem(i));
    first = false;
  });
  return out + "}";
}

// Source resolution: positional file path or --builtin NAME.
struct SourceSpec {
  std::string file;
  std::string builtin;

  bool given() const { return !file.empty() || !builtin.empty(); }
};

void add_source(CLI::App* cmd, SourceSpec& spec, bool required = true) {
  auto* pos = cmd->add_option("source", spec.file, "structure file (JSON document)");
  auto* opt = cmd->add_option("--builtin", spec.builtin, "builtin structure name");
  if (required) {
    pos->excludes(opt);
    // requiredness is validated after parsing so the error message is uniform
  }
}

HemiringPtr load_hemiring(const SourceSpec& spec) {
  if (!spec.builtin.empty()) {
    if (!is_catalog_hemiring(spec.builtin))
      throw MalformedTables("unknown builtin hemiring '" + spec.builtin + "'");
    return catalog_hemiring(spec.builtin);
  }
  if (spec.file.empty()) throw MalformedTables("no input structure given");
  return parse_hemiring(load_json_file(spec.file));
}

CommMonoidPtr load_monoid(const SourceSpec& spec) {
  if (!spec.builtin.empty()) {
    if (!is_catalog_monoid(spec.builtin))
      throw MalformedTables("unknown builtin monoid '" + spec.builtin + "'");
    return catalog_monoid(spec.builtin);
  }
  if (spec.file.empty()) throw MalformedTables("no input structure given");
  return parse_monoid(load_json_file(spec.file));
}

json classification_json(const Classification& c, const Hemiring& R) {
  json out;
  out["is_semiring"] = c.is_semiring;
  if (c.identity) out["identity"] = R.label(*c.identity);
  out["commutative"] = c.commutative;
  out["additively_idempotent"] = c.additively_idempotent;
  out["additively_cancellative"] = c.additively_cancellative;
  out["additively_regular"] = c.additively_regular;
  out["zeroic"] = c.zeroic;
  out["lattice_ordered"] = c.lattice_ordered;
  out["subtractive_hemiring"] = c.subtractive_hemiring;
  out["strongly_subtractive"] = c.strongly_subtractive;
  out["congruence_simple"] = c.congruence_simple;
  out["ideal_simple"] = c.ideal_simple;
  out["simple"] = c.simple;
  out["zeroid"] = subset_json(R, c.zeroid);
  out["ring"] = R.is_ring();
  return out;
}

int run_validate(const GlobalOptions& g, const SourceSpec& spec) {
  Report rep;
  rep.command = "validate";
  json doc;
  if (!spec.builtin.empty()) {
    if (is_catalog_hemiring(spec.builtin))
      doc = to_document(*catalog_hemiring(spec.builtin));
    else if (is_catalog_monoid(spec.builtin))
      doc = to_document(*catalog_monoid(spec.builtin));
    else
      throw MalformedTables("unknown builtin '" + spec.builtin + "'");
  } else {
    if (spec.file.empty()) throw MalformedTables("no input structure given");
    doc = load_json_file(spec.file);
  }
  rep.inputs["structure"] = doc;
  switch (document_kind(doc)) {
    case DocumentKind::hemiring: {
      auto R = parse_hemiring(doc);
      rep.result["kind"] = "hemiring";
      rep.result["name"] = R->name;
      rep.result["size"] = R->size();
      rep.line("valid hemiring '" + R->name + "' with " + std::to_string(R->size()) +
               " elements");
      break;
    }
    case DocumentKind::semimodule: {
      auto M = parse_semimodule(doc);
      rep.result["kind"] = "semimodule";
      rep.result["name"] = M->name;
      rep.result["size"] = M->size();
      rep.result["hemiring"] = M->ring().name;
      rep.line("valid semimodule '" + M->name + "' with " + std::to_string(M->size()) +
               " elements over '" + M->ring().name + "'");
      break;
    }
    case DocumentKind::monoid: {
      auto M = parse_monoid(doc);
      rep.result["kind"] = "monoid";
      rep.result["name"] = M->name;
      rep.result["size"] = M->size();
      rep.line("valid commutative monoid '" + M->name + "' with " +
               std::to_string(M->size()) + " elements");
      break;
    }
  }
  rep.emit(g.json_output);
  return kExitOk;
}

int run_classify(const GlobalOptions& g, const SourceSpec& spec) {
  Report rep;
  rep.command = "classify";
  json doc;
  if (!spec.builtin.empty()) {
    if (is_catalog_hemiring(spec.builtin))
      doc = to_document(*catalog_hemiring(spec.builtin));
    else if (is_catalog_monoid(spec.builtin))
      doc = to_document(*catalog_monoid(spec.builtin));
    else
      throw MalformedTables("unknown builtin '" + spec.builtin + "'");
  } else {
    if (spec.file.empty()) throw MalformedTables("no input structure given");
    doc = load_json_file(spec.file);
  }
  rep.inputs["structure"] = doc;
  if (document_kind(doc) == DocumentKind::hemiring) {
    auto R = parse_hemiring(doc);
    auto c = classify(*R, g.limits());
    rep.result = classification_json(c, *R);
    rep.line("classification of '" + R->name + "':");
    auto flag = [&](const char* name, bool v) {
      rep.line("  " + std::string(name) + ": " + (v ? "yes" : "no"));
    };
    rep.line("  semiring: " + std::string(c.is_semiring ? "yes" : "no") +
             (c.identity ? " (identity " + R->label(*c.identity) + ")" : ""));
    flag("commutative", c.commutative);
    flag("additively idempotent", c.additively_idempotent);
    flag("additively cancellative", c.additively_cancellative);
    flag("additively regular", c.additively_regular);
    flag("zeroic", c.zeroic);
    flag("lattice-ordered", c.lattice_ordered);
    flag("subtractive", c.subtractive_hemiring);
    flag("strongly subtractive", c.strongly_subtractive);
    flag("congruence-simple", c.congruence_simple);
    flag("ideal-simple", c.ideal_simple);
    flag("simple", c.simple);
    flag("ring", R->is_ring());
    rep.line("  zeroid: " + subset_text(*R, c.zeroid));
  } else if (document_kind(doc) == DocumentKind::semimodule) {
    auto M = parse_semimodule(doc);
    auto r = semimodule_report(*M);
    rep.result["annihilator"] = subset_json(M->ring(), r.annihilator);
    rep.result["faithful"] = r.faithful;
    rep.result["cancellative"] = r.cancellative;
    rep.result["simple"] = r.simple;
    rep.result["irreducible"] = r.irreducible;
    rep.result["semi_irreducible"] = r.semi_irreducible;
    rep.result["w_finitely_generated"] = r.w_finitely_generated;
    json z = json::array();
    r.zeroid.for_each([&](std::size_t i) { z.push_back(M->label(elem(i))); });
    rep.result["zeroid"] = z;
    rep.line("semimodule report for '" + M->name + "' over '" + M->ring().name + "':");
    rep.line("  annihilator: " + subset_text(M->ring(), r.annihilator));
    rep.line("  faithful: " + std::string(r.faithful ? "yes" : "no"));
    rep.line("  cancellative: " + std::string(r.cancellative ? "yes" : "no"));
    rep.line("  simple: " + std::string(r.simple ? "yes" : "no"));
    rep.line("  irreducible: " + std::string(r.irreducible ? "yes" : "no"));
    rep.line("  semi-irreducible: " + std::string(r.semi_irreducible ? "yes" : "no"));
    rep.line("  w-finitely generated: " + std::string(r.w_finitely_generated ? "yes" : "no"));
  } else {
    auto M = parse_monoid(doc);
    rep.result["size"] = M->size();
    rep.result["idempotent"] = M->idempotent();
    rep.line("commutative monoid '" + M->name + "': " + std::to_string(M->size()) +
             " elements, " + (M->idempotent() ? "idempotent (semilattice)" : "not idempotent"));
  }
  rep.emit(g.json_output);
  return kExitOk;
}

int run_radical(const GlobalOptions& g, const SourceSpec& spec, const std::string& kind_name,
                const std::string& method_name) {
  Report rep;
  rep.command = "radical";
  auto R = load_hemiring(spec);
  rep.inputs["structure"] = to_document(*R);
  rep.inputs["kind"] = kind_name;
  rep.inputs["method"] = method_name;

  RadicalKind kind;
  if (kind_name == "J")
    kind = RadicalKind::J;
  else if (kind_name == "Js")
    kind = RadicalKind::Js;
  else if (kind_name == "BM")
    kind = RadicalKind::BM;
  else if (kind_name == "BMCs")
    kind = RadicalKind::BMCs;
  else
    throw MalformedTables("unknown radical kind '" + kind_name + "'");

  RadicalResult res;
  if (kind == RadicalKind::J && method_name != "auto") {
    JacobsonMethod m;
    if (method_name == "semiregular")
      m = JacobsonMethod::semiregular;
    else if (method_name == "annihilators")
      m = JacobsonMethod::annihilators;
    else if (method_name == "star")
      m = JacobsonMethod::star_differences;
    else
      throw MalformedTables("unknown method '" + method_name + "'");
    res = jacobson_oracle(R, m, g.limits());
  } else {
    if (method_name != "auto" && kind != RadicalKind::J)
      throw MalformedTables("--method applies to kind J only");
    res = radical(R, kind, g.limits());
  }

  rep.result["kind"] = to_string(res.kind);
  rep.result["method"] = res.method;
  rep.result["subset"] = subset_json(*R, res.subset);
  rep.result["subset_size"] = res.subset.count();
  rep.result["is_whole"] = res.subset.count() == R->size();

  json wit = json::object();
  if (!res.witness_semimodules.empty()) {
    json mods = json::array();
    for (std::size_t i = 0; i < res.witness_semimodules.size(); ++i) {
      const auto& M = res.witness_semimodules[i];
      json m;
      m["name"] = M.name;
      m["size"] = M.size();
      m["annihilator"] = subset_json(*R, res.witness_annihilators[i]);
      mods.push_back(m);
    }
    wit["semimodules"] = mods;
  }
  if (!res.witness_congruences.empty()) {
    json congs = json::array();
    for (const auto& rho : res.witness_congruences) {
      json c;
      c["blocks"] = rho.num_blocks();
      c["kernel"] = subset_json(*R, rho.kernel_block());
      congs.push_back(c);
    }
    wit["congruences"] = congs;
  }
  if (!res.witness_ideals.empty()) {
    json ideals = json::array();
    for (const auto& I : res.witness_ideals) ideals.push_back(subset_json(*R, I));
    wit["semiregular_right_ideals"] = ideals;
  }
  if (!res.notes.empty()) wit["notes"] = res.notes;
  rep.witnesses = wit;

  rep.line(to_string(res.kind) + "(" + R->name + ") = " + subset_text(*R, res.subset) +
           (res.subset.count() == R->size() ? "  (the whole hemiring)" : "") +
           "  [method " + res.method + "]");
  rep.emit(g.json_output);
  return kExitOk;
}

int run_quotient(const GlobalOptions& g, const SourceSpec& spec, const std::string& ideal_csv) {
  Report rep;
  rep.command = "quotient";
  auto R = load_hemiring(spec);
  rep.inputs["structure"] = to_document(*R);
  rep.inputs["ideal"] = ideal_csv;
  Bitset subset(R->size());
  std::string cur;
  std::vector<std::string> items;
  for (char ch : ideal_csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) items.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  for (const auto& lab : items) {
    auto idx = R->index_of(lab);
    if (!idx) throw MalformedTables("unknown element label '" + lab + "'");
    subset.set(*idx);
  }
  subset.set(0);
  if (!is_ideal(*R, subset, Sidedness::two_sided))
    throw NotAnIdeal("the given subset is not a two-sided ideal");
  auto q = bourne_quotient(R, SubsetIdeal{subset, Sidedness::two_sided,
                                          is_subtractive(*R, subset)});
  rep.result["quotient"] = to_document(*q.hemiring);
  json proj = json::object();
  for (elem r = 0; r < R->size(); ++r)
    proj[R->label(r)] = q.hemiring->label(q.projection.image[r]);
  rep.result["projection"] = proj;
  rep.line("Bourne quotient of '" + R->name + "' by " + subset_text(*R, subset) + " has " +
           std::to_string(q.hemiring->size()) + " elements");
  for (elem r = 0; r < R->size(); ++r)
    rep.line("  " + R->label(r) + " -> " + q.hemiring->label(q.projection.image[r]));
  rep.emit(g.json_output);
  return kExitOk;
}

int run_matrix(const GlobalOptions& g, const SourceSpec& spec, unsigned n) {
  Report rep;
  rep.command = "matrix";
  auto R = load_hemiring(spec);
  rep.inputs["structure"] = to_document(*R);
  rep.inputs["n"] = n;
  auto M = matrix_hemiring(*R, n, g.limits());
  rep.result["matrix"] = to_document(M);
  rep.result["size"] = M.size();
  rep.result["has_identity"] = M.one().has_value();
  rep.line("M_" + std::to_string(n) + "(" + R->name + ") has " + std::to_string(M.size()) +
           " elements" + (M.one() ? " and an identity" : " and no identity"));
  rep.emit(g.json_output);
  return kExitOk;
}

int run_end(const GlobalOptions& g, const SourceSpec& spec) {
  Report rep;
  rep.command = "end";
  auto M = load_monoid(spec);
  rep.inputs["structure"] = to_document(*M);
  auto E = endomorphism_hemiring(M, g.limits());
  rep.result["endomorphism_hemiring"] = to_document(*E.ring);
  rep.result["size"] = E.ring->size();
  rep.line("End(" + M->name + ") has " + std::to_string(E.ring->size()) + " elements");
  if (M->idempotent()) {
    auto density = density_check(E, Bitset::full(E.ring->size()));
    rep.result["step_monoid_size"] = density.step_monoid.count();
    rep.line("F_M (additive closure of the step endomorphisms) has " +
             std::to_string(density.step_monoid.count()) + " elements");
  }
  rep.emit(g.json_output);
  return kExitOk;
}

int run_modules(const GlobalOptions& g, const SourceSpec& spec, bool irreducibles) {
  Report rep;
  rep.command = irreducibles ? "irreducibles" : "simples";
  auto R = load_hemiring(spec);
  rep.inputs["structure"] = to_document(*R);
  auto mods = irreducibles ? enumerate_irreducible_semimodules(R, g.limits())
                           : enumerate_simple_semimodules(R, g.limits());
  json arr = json::array();
  rep.line(std::string(irreducibles ? "irreducible" : "simple") + " left semimodules over '" +
           R->name + "' up to isomorphism: " + std::to_string(mods.size()));
  for (const auto& M : mods) {
    json m;
    m["document"] = to_document(M);
    Bitset ann = annihilator(M);
    m["annihilator"] = subset_json(*R, ann);
    arr.push_back(m);
    rep.line("  " + M.name + ": " + std::to_string(M.size()) +
             " elements, annihilator " + subset_text(*R, ann));
  }
  rep.result["semimodules"] = arr;
  rep.result["count"] = mods.size();
  rep.emit(g.json_output);
  return kExitOk;
}

int run_verify(const GlobalOptions& g, const SourceSpec& spec, const std::string& suite,
               unsigned n, const std::string& idempotent) {
  Report rep;
  rep.command = "verify";
  rep.inputs["suite"] = suite;
  rep.inputs["n"] = n;

  VerifyBundle bundle;
  bundle.limits = g.limits();
  bundle.matrix_n = n;
  if (!idempotent.empty()) bundle.idempotent_label = idempotent;
  if (spec.given()) {
    if (!spec.builtin.empty() && is_catalog_monoid(spec.builtin)) {
      bundle.monoid = load_monoid(spec);
      rep.inputs["structure"] = to_document(*bundle.monoid);
    } else {
      json doc = spec.builtin.empty() ? load_json_file(spec.file)
                                      : to_document(*catalog_hemiring(spec.builtin));
      if (document_kind(doc) == DocumentKind::monoid) {
        bundle.monoid = parse_monoid(doc);
        rep.inputs["structure"] = doc;
      } else {
        bundle.hemiring = parse_hemiring(doc);
        rep.inputs["structure"] = doc;
      }
    }
  }

  std::vector<VerifyReport> reports;
  if (suite == "all") {
    reports = verify_all(bundle);
  } else {
    reports.push_back(verify(suite, bundle));
  }

  bool any_fail = false;
  json arr = json::array();
  for (const auto& r : reports) {
    json jr;
    jr["theorem_id"] = r.theorem_id;
    jr["status"] = to_string(r.status);
    jr["details"] = r.details;
    if (!r.counterexample.empty()) jr["counterexample"] = r.counterexample;
    arr.push_back(jr);
    rep.line(r.theorem_id + ": " + to_string(r.status));
    for (const auto& d : r.details) rep.line("    " + d);
    if (!r.counterexample.empty()) rep.line("    counterexample: " + r.counterexample);
    if (r.status == VerifyStatus::fail) any_fail = true;
  }
  rep.result["reports"] = arr;
  rep.status = any_fail ? "fail" : "pass";
  rep.emit(g.json_output);
  return any_fail ? kExitFinding : kExitOk;
}

int run_enumerate(const GlobalOptions& g, unsigned order, const std::string& predicate_csv,
                  bool count_only) {
  Report rep;
  rep.command = "enumerate";
  rep.inputs["order"] = order;
  rep.inputs["predicates"] = predicate_csv;
  PredicateList preds;
  std::string cur;
  for (char ch : predicate_csv + ",") {
    if (ch == ',') {
      if (!cur.empty()) preds.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  auto classes = enumerate_hemirings(order, preds, g.limits(), g.jobs);
  rep.result["count"] = classes.size();
  rep.line("order " + std::to_string(order) + ": " + std::to_string(classes.size()) +
           " isomorphism classes" + (preds.empty() ? "" : " matching the predicates"));
  if (!count_only) {
    json arr = json::array();
    for (const auto& R : classes) {
      arr.push_back(encode_tables(R));
      rep.line("  " + encode_tables(R));
    }
    rep.result["classes"] = arr;
  }
  rep.emit(g.json_output);
  return kExitOk;
}

int run_search(const GlobalOptions& g, const std::string& problem_name, unsigned max_order) {
  Report rep;
  rep.command = "search";
  rep.inputs["problem"] = problem_name;
  rep.inputs["max_order"] = max_order;
  SearchProblem problem;
  if (problem_name == "P1")
    problem = SearchProblem::P1_JS_VS_J;
  else if (problem_name == "P3")
    problem = SearchProblem::P3_BM_VS_CS;
  else
    throw MalformedTables("unknown problem '" + problem_name + "' (use P1 or P3)");
  auto res = search_counterexample(problem, max_order, g.limits());
  rep.line("search " + problem_name + " up to order " + std::to_string(max_order) + ":");
  for (const auto& line : res.per_class) rep.line("  " + line);
  json arr = json::array();
  for (const auto& f : res.findings) {
    json jf;
    jf["order"] = f.order;
    jf["structure"] = f.structure;
    jf["description"] = f.description;
    arr.push_back(jf);
    rep.line("FINDING (order " + std::to_string(f.order) + "): " + f.description + " on " +
             f.structure);
  }
  rep.result["per_class"] = res.per_class;
  rep.result["findings"] = arr;
  rep.result["exhausted"] = res.exhausted;
  if (res.findings.empty()) rep.line("search exhausted, no findings");
  rep.status = res.findings.empty() ? "exhausted" : "findings";
  rep.emit(g.json_output);
  return res.findings.empty() ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact radicals of finite hemirings and semirings"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_flag("--json", g.json_output, "machine-readable report");
  app.add_option("--limit-congruences", g.limit_congruences, "congruence lattice bound");
  app.add_option("--limit-ideals", g.limit_ideals, "ideal lattice bound");
  app.add_option("--jobs", g.jobs, "worker threads for enumeration");

  SourceSpec src_validate, src_classify, src_radical, src_quotient, src_matrix, src_end,
      src_simples, src_irreducibles, src_verify;

  auto* c_validate = app.add_subcommand("validate", "validate a structure document");
  add_source(c_validate, src_validate);

  auto* c_classify = app.add_subcommand("classify", "classify a structure");
  add_source(c_classify, src_classify);

  auto* c_radical = app.add_subcommand("radical", "compute a radical");
  std::string kind_name, method_name = "auto";
  c_radical->add_option("--kind", kind_name, "J | Js | BM | BMCs")->required();
  c_radical->add_option("--method", method_name, "auto | semiregular | annihilators | star");
  add_source(c_radical, src_radical);

  auto* c_quotient = app.add_subcommand("quotient", "Bourne quotient by an ideal");
  std::string ideal_csv;
  c_quotient->add_option("--ideal", ideal_csv, "comma-separated element labels")->required();
  add_source(c_quotient, src_quotient);

  auto* c_matrix = app.add_subcommand("matrix", "matrix hemiring M_n(R)");
  unsigned matrix_n = 2;
  c_matrix->add_option("--n", matrix_n, "matrix dimension")->required();
  add_source(c_matrix, src_matrix);

  auto* c_end = app.add_subcommand("end", "endomorphism hemiring of a commutative monoid");
  c_end->add_option("--monoid", src_end.builtin, "builtin monoid name");
  c_end->add_option("source", src_end.file, "monoid file (JSON document)");

  auto* c_simples = app.add_subcommand("simples", "simple left semimodules up to isomorphism");
  add_source(c_simples, src_simples);

  auto* c_irreducibles =
      app.add_subcommand("irreducibles", "irreducible left semimodules up to isomorphism");
  add_source(c_irreducibles, src_irreducibles);

  auto* c_verify = app.add_subcommand("verify", "run theorem verification suites");
  std::string suite;
  unsigned verify_n = 2;
  std::string idempotent;
  c_verify->add_option("--suite", suite, "all or a theorem id")->required();
  c_verify->add_option("--n", verify_n, "matrix dimension for the matrix identities");
  c_verify->add_option("--idempotent", idempotent, "idempotent label for corner checks");
  add_source(c_verify, src_verify, false);

  auto* c_enumerate = app.add_subcommand("enumerate", "isomorph-free hemiring enumeration");
  unsigned order = 2;
  std::string predicate_csv;
  bool count_only = false;
  c_enumerate->add_option("--order", order, "carrier size")->required();
  c_enumerate->add_option("--predicate", predicate_csv, "comma-separated classification filters");
  c_enumerate->add_flag("--count-only", count_only, "print the class count only");

  auto* c_search = app.add_subcommand("search", "counterexample searches for the open problems");
  std::string problem_name;
  unsigned max_order = 2;
  c_search->add_option("--problem", problem_name, "P1 | P3")->required();
  c_search->add_option("--max-order", max_order, "largest carrier size")->required();

  // Global flags may appear after the subcommand.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) return run_validate(g, src_validate);
    if (c_classify->parsed()) return run_classify(g, src_classify);
    if (c_radical->parsed()) return run_radical(g, src_radical, kind_name, method_name);
    if (c_quotient->parsed()) return run_quotient(g, src_quotient, ideal_csv);
    if (c_matrix->parsed()) return run_matrix(g, src_matrix, matrix_n);
    if (c_end->parsed()) return run_end(g, src_end);
    if (c_simples->parsed()) return run_modules(g, src_simples, false);
    if (c_irreducibles->parsed()) return run_modules(g, src_irreducibles, true);
    if (c_verify->parsed()) return run_verify(g, src_verify, suite, verify_n, idempotent);
    if (c_enumerate->parsed()) return run_enumerate(g, order, predicate_csv, count_only);
    if (c_search->parsed()) return run_search(g, problem_name, max_order);
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const AxiomViolation& e) {
    std::cerr << "invalid structure: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const RadxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
