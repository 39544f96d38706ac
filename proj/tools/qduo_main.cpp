// Command-line front end: realize ring descriptors, compute derived sets,
// decide predicates, run the verification suite, and explain constructions.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qduo/checkers.hpp"
#include "qduo/constructions.hpp"
#include "qduo/descriptor.hpp"
#include "qduo/kernels.hpp"
#include "qduo/theorem_suite.hpp"
#include "qduo/version.hpp"

namespace {

using nlohmann::json;
using qduo::Elem;
using qduo::ElementSet;
using qduo::FiniteRing;
using qduo::RingPtr;

struct GlobalOpts {
  std::string exec;
  std::size_t order_cap = 0;
  std::size_t axiom_cap = 0;
  std::string format = "text";
  std::string out;
};

void apply_globals(const GlobalOpts& g) {
  if (g.exec == "serial") qduo::kernels::set_default_exec(qduo::kernels::Exec::serial);
  if (g.exec == "parallel") qduo::kernels::set_default_exec(qduo::kernels::Exec::parallel);
  if (g.order_cap) qduo::rings::set_order_cap(g.order_cap);
  if (g.axiom_cap) qduo::rings::set_axiom_cap(g.axiom_cap);
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

RingPtr resolve_ring(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return qduo::rings::builtin(spec.substr(8));
  if (qduo::rings::is_builtin(spec)) return qduo::rings::builtin(spec);
  return qduo::rings::build(load_json_file(spec));
}

void emit(const GlobalOpts& g, const json& doc, const std::string& text) {
  const std::string payload = g.format == "json" ? doc.dump(2) + "\n" : text;
  if (g.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(g.out);
  if (!out) throw std::invalid_argument("cannot write file: " + g.out);
  out << payload;
  std::cout << "report written to " << g.out << "\n";
}

json ring_header(const FiniteRing& ring) {
  return json{{"name", ring.name()},
              {"kind", ring.kind()},
              {"order", ring.order()},
              {"descriptor", json::parse(ring.descriptor_json())}};
}

std::string set_to_text(const FiniteRing& ring, const ElementSet& set, bool full) {
  std::ostringstream os;
  os << "(" << set.size() << ")";
  if (set.size() <= 1024 || full) {
    os << ": {";
    bool first = true;
    for (Elem e : set.members()) {
      if (!first) os << ", ";
      os << ring.label(e);
      first = false;
    }
    os << "}";
  } else {
    os << ": listing suppressed (use --full)";
  }
  return os.str();
}

json set_to_json(const FiniteRing& ring, const ElementSet& set, bool full) {
  json j{{"count", set.size()}};
  if (set.size() <= 1024 || full) {
    json elems = json::array();
    for (Elem e : set.members()) elems.push_back(ring.label(e));
    j["elements"] = std::move(elems);
  } else {
    j["elements_omitted"] = true;
  }
  return j;
}

const std::vector<std::string> kSetNames{"units",       "qnil",   "jacobson", "nilpotents",
                                         "idempotents", "center", "comm",     "comm2"};

int cmd_compute(const GlobalOpts& g, const std::string& ring_spec, const std::string& sets_csv,
                const std::string& element, bool axioms, bool full) {
  // reject unknown names before any computation
  std::vector<std::string> sets;
  std::stringstream ss(sets_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "all") {
      for (const auto& s : kSetNames)
        if (s != "comm" && s != "comm2") sets.push_back(s);
      continue;
    }
    if (std::find(kSetNames.begin(), kSetNames.end(), tok) == kSetNames.end())
      throw std::invalid_argument("unknown set \"" + tok + "\" (known: units, qnil, jacobson, "
                                  "nilpotents, idempotents, center, comm, comm2, all)");
    sets.push_back(tok);
  }
  const bool needs_element =
      std::find(sets.begin(), sets.end(), "comm") != sets.end() ||
      std::find(sets.begin(), sets.end(), "comm2") != sets.end();
  if (needs_element && element.empty())
    throw std::invalid_argument("comm/comm2 need --element (construction-native coordinates, "
                                "e.g. \"a=2,b=1,c=0\")");

  RingPtr ring = resolve_ring(ring_spec);
  json doc{{"schema", "qduo.sets/1"}, {"engine", qduo::engine_id()}, {"ring", ring_header(*ring)}};
  std::ostringstream text;
  text << "ring: " << ring->name() << "  (order " << ring->order() << ", kind " << ring->kind()
       << ")\n";

  Elem a = 0;
  if (!element.empty()) {
    a = qduo::rings::parse_element(*ring, element);
    doc["element"] = ring->label(a);
    text << "element: " << ring->label(a) << "\n";
  }

  if (axioms) {
    auto rep = qduo::kernels::verify_axioms(*ring, qduo::rings::axiom_cap());
    const char* status = rep.status == qduo::kernels::AxiomReport::Status::verified ? "verified"
                         : rep.status == qduo::kernels::AxiomReport::Status::violation
                             ? "violation"
                             : "unchecked";
    doc["axioms"] = json{{"status", status}, {"note", rep.note}};
    if (rep.violation) doc["axioms"]["elements"] = rep.violation->elems;
    text << "axioms: " << status << " (" << rep.note << ")\n";
  }

  json sets_json = json::object();
  for (const auto& name : sets) {
    const ElementSet* set = nullptr;
    ElementSet local;
    if (name == "units") set = &ring->units();
    else if (name == "qnil") set = &ring->qnil();
    else if (name == "jacobson") set = &ring->jacobson();
    else if (name == "nilpotents") set = &ring->nilpotents();
    else if (name == "idempotents") set = &ring->idempotents();
    else if (name == "center") set = &ring->center();
    else if (name == "comm") { local = ring->commutant(a); set = &local; }
    else { local = ring->double_commutant(a); set = &local; }
    sets_json[name] = set_to_json(*ring, *set, full);
    text << name << " " << set_to_text(*ring, *set, full) << "\n";
  }
  doc["sets"] = std::move(sets_json);
  emit(g, doc, text.str());
  return 0;
}

int cmd_check(const GlobalOpts& g, const std::string& ring_spec, const std::string& props_csv,
              bool witness, const std::string& element) {
  std::vector<std::string> props;
  std::stringstream ss(props_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "k0-kernel-condition") {
      if (element.empty())
        throw std::invalid_argument("k0-kernel-condition needs --element for the matrix A");
    } else if (!qduo::checks::is_predicate_name(tok)) {
      std::string known;
      for (const auto& n : qduo::checks::predicate_names()) known += (known.empty() ? "" : ", ") + n;
      throw std::invalid_argument("unknown property \"" + tok + "\" (known: " + known +
                                  ", k0-kernel-condition)");
    }
    props.push_back(tok);
  }

  RingPtr ring = resolve_ring(ring_spec);
  json doc{{"schema", "qduo.check/1"}, {"engine", qduo::engine_id()}, {"ring", ring_header(*ring)}};
  std::ostringstream text;
  text << "ring: " << ring->name() << "  (order " << ring->order() << ")\n";

  json props_json = json::object();
  for (const auto& name : props) {
    qduo::checks::PredicateVerdict v;
    if (name == "k0-kernel-condition") {
      v = qduo::checks::k0_kernel_condition(*ring, qduo::rings::parse_element(*ring, element));
    } else {
      v = qduo::checks::run_predicate(*ring, name);
    }
    json pj{{"holds", v.holds}, {"millis", v.millis}};
    text << name << ": " << (v.holds ? "true" : "false");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v.millis);
    text << "  [" << buf << " ms]\n";
    if (!v.note.empty() && v.holds) {
      pj["note"] = v.note;
      text << "  note: " << v.note << "\n";
    }
    if (!v.holds && witness) {
      json parts = json::array();
      text << "  witness:";
      for (const auto& p : v.witness) {
        parts.push_back(json{{"role", p.role}, {"element", ring->label(p.element)}});
        text << " " << p.role << " = " << ring->label(p.element) << ",";
      }
      text << "\n  violated: " << v.note << "\n";
      pj["witness"] = json{{"parts", parts}, {"note", v.note}};
    }
    props_json[name] = std::move(pj);
  }
  doc["props"] = std::move(props_json);
  emit(g, doc, text.str());
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& catalog_spec) {
  std::vector<std::pair<std::string, json>> catalog;
  if (catalog_spec.empty() || catalog_spec == "default") {
    catalog = qduo::suite::default_catalog();
  } else {
    const json doc = load_json_file(catalog_spec);
    const json& arr = doc.is_array() ? doc : doc.at("rings");
    std::size_t k = 0;
    for (const auto& entry : arr) {
      if (entry.is_object() && entry.contains("id") && entry.contains("descriptor"))
        catalog.emplace_back(entry["id"].get<std::string>(), entry["descriptor"]);
      else
        catalog.emplace_back("custom" + std::to_string(k), entry);
      ++k;
    }
  }
  auto report = qduo::suite::run_all(catalog);
  emit(g, report.doc, report.to_text());
  return report.exit_code();
}

int cmd_explain(const GlobalOpts& g, const std::string& ring_spec) {
  RingPtr ring = resolve_ring(ring_spec);
  static const std::map<std::string, std::pair<const char*, const char*>> info = {
      {"zn", {"residues modulo n with the usual arithmetic", ""}},
      {"product", {"componentwise operations on tuples over the factors", "P2.4-products, T3.5-product-qnil-duo"}},
      {"mn", {"full n x n matrices over the base", "EX3.10.1-matrix-not-qnil-duo"}},
      {"un", {"upper triangular n x n matrices over the base", "L2.3.1-u2-triangular-qnil"}},
      {"dn", {"upper triangular matrices with constant diagonal", "L2.3.2-d2-qnil, L2.3.3-d2-extraction"}},
      {"vn", {"matrices constant along every diagonal band (isomorphic to R[x]/(x^n))", "EX3.10.2-vn-commutative-qnil-duo"}},
      {"lst", {"3x3 matrices [[a,0,0],[p,d,q],[0,0,f]] with p in sR, q in tR; s, t central; "
               "operations from M_3(R)", "L4.1.1-L-invertibility, L4.2.3-L00-qnil-iff, EX4.4-L11Z4-not-right-qnil-duo"}},
      {"hst", {"3x3 matrices [[a,0,0],[c,d,e],[0,0,f]] with a - d = sc and d - f = te; s, t "
               "central units; free coordinates (a, c, e)", "L4.5.1-H-commutation, T4.6-H-equivalence"}},
      {"ks", {"2x2 generalized matrices with corner products twisted by central s: "
              "[[a,b],[c,d]][[a',b'],[c',d']] = [[aa'+s bc', ab'+bd'],[ca'+dc', s cb'+dd']]; "
              "s = 0 is allowed and is the object of study", "L4.7-K0-units-center, T4.9-K0-kernel-condition"}},
      {"dorroh", {"pairs (a, b) in R x Z_n with (a1,b1)(a2,b2) = (a1a2 + b1 a2 + b2 a1, b1b2); "
                  "identity (0, 1)", "L2.5.1-dorroh-commutant, T2.7-dorroh-criterion"}},
      {"hurwitz", {"coefficient vectors (a_0..a_k) with c_n = sum_i C(n,i) a_i alpha^i(b_(n-i)), "
                   "truncated at degree k; eps projects to a_0", "L2.9-series-units, P2.10-series-qnil-inclusion"}},
      {"skewpower", {"coefficient vectors (a_0..a_k) with c_n = sum_i a_i alpha^i(b_(n-i)), "
                     "truncated at degree k; eps projects to a_0", "L2.9-series-units, T3.19-series-descent"}},
      {"ttrunc", {"level-n truncation of eventually constant sequences: componentwise R^n x S", "P2.8-t-trunc-qnil, P3.18-t-trunc-descent"}},
      {"corner", {"the corner eRe for an idempotent e, with identity e", "P2.2.5-corner-qnil, C3.7-corner-qnil-duo"}},
      {"xuxu16", {"a + bx + cy with a mod 4 and b, c mod 2; x^2 = xy = 2, yx = y^2 = 0, "
                  "2x = 2y = 0", "EX3.12.3-xuxu"}},
      {"d3pattern", {"triples (a,b,c) as [[a,b,c],[0,a,0],[0,0,a]]: "
                     "(a,b,c)(a',b',c') = (aa', ab'+ba', ac'+ca')", "EX3.12.1-d3pattern"}},
      {"table", {"explicit addition and multiplication tables, axiom-checked on construction", "CAT.2-axioms"}},
  };
  auto it = info.find(ring->kind());
  const char* formula = it != info.end() ? it->second.first : "(no description)";
  const char* cases = it != info.end() ? it->second.second : "";

  std::ostringstream text;
  text << "ring: " << ring->name() << "\nkind: " << ring->kind() << "\norder: " << ring->order()
       << "\nelements: " << formula << "\n";
  text << "coordinates:";
  for (const auto& n : ring->coord_names()) text << " " << n;
  text << "\nencoding: mixed radix over the coordinates, first coordinate varies fastest; "
          "element literals are \"name=value\" pairs (e.g. --element \""
       << ring->coord_names()[0] << "=1\")\n";
  text << "zero: " << ring->label(ring->zero()) << "\none: " << ring->label(ring->one()) << "\n";
  if (cases[0] != '\0') text << "related suite cases: " << cases << "\n";
  text << "descriptor: " << ring->descriptor_json() << "\n";

  json doc{{"schema", "qduo.explain/1"},
           {"engine", qduo::engine_id()},
           {"ring", ring_header(*ring)},
           {"elements", formula},
           {"coordinates", ring->coord_names()},
           {"zero", ring->label(ring->zero())},
           {"one", ring->label(ring->one())}};
  if (cases[0] != '\0') doc["related_cases"] = cases;
  emit(g, doc, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(qduo::engine_id()) +
               " - finite ring laboratory for quasinilpotent and duo-type properties"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--exec", g.exec, "execution mode: serial or parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));
  app.add_option("--order-cap", g.order_cap, "override the realized-order cap");
  app.add_option("--axiom-cap", g.axiom_cap, "override the axiom-scan cap");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "write the report to this path");

  std::string ring_spec, sets_csv = "all", props_csv, element, catalog_spec = "default";
  bool witness = false, axioms = false, full = false;

  auto* compute = app.add_subcommand("compute", "compute derived element sets");
  compute->fallthrough();
  compute->add_option("--ring", ring_spec, "builtin:<name> or a descriptor JSON path")->required();
  compute->add_option("--sets", sets_csv,
                      "comma list: units,qnil,jacobson,nilpotents,idempotents,center,comm,comm2,all");
  compute->add_option("--element", element, "element literal for comm/comm2");
  compute->add_flag("--axioms", axioms, "run the exhaustive axiom scan (subject to the cap)");
  compute->add_flag("--full", full, "never suppress long element listings");

  auto* check = app.add_subcommand("check", "decide predicates with witnesses");
  check->fallthrough();
  check->add_option("--ring", ring_spec, "builtin:<name> or a descriptor JSON path")->required();
  check->add_option("--props", props_csv, "comma list of predicate names")->required();
  check->add_flag("--witness", witness, "include witness elements and the violated equation");
  check->add_option("--element", element, "element literal for k0-kernel-condition");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->fallthrough();
  verify->add_option("--catalog", catalog_spec, "\"default\" or a catalog JSON path");

  auto* explain = app.add_subcommand("explain", "describe a construction and its encoding");
  explain->fallthrough();
  explain->add_option("--ring", ring_spec, "builtin:<name> or a descriptor JSON path")->required();

  auto* builtins = app.add_subcommand("builtins", "list built-in ring names");
  builtins->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    apply_globals(g);
    if (compute->parsed()) return cmd_compute(g, ring_spec, sets_csv, element, axioms, full);
    if (check->parsed()) return cmd_check(g, ring_spec, props_csv, witness, element);
    if (verify->parsed()) return cmd_verify(g, catalog_spec);
    if (explain->parsed()) return cmd_explain(g, ring_spec);
    if (builtins->parsed()) {
      for (const auto& name : qduo::rings::builtin_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
