#include "qduo/descriptor.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qduo::rings {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& message) { throw std::invalid_argument(message); }

const json& field(const json& j, const char* key, const char* kind) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string(kind) + ": missing field \"" + key + "\"");
  return *it;
}

bool is_uint(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0);
}

unsigned uint_field(const json& j, const char* key, const char* kind) {
  const json& v = field(j, key, kind);
  if (!is_uint(v)) bad(std::string(kind) + ": field \"" + key + "\" must be a non-negative integer");
  return v.get<unsigned>();
}

std::vector<std::vector<Elem>> table_field(const json& j, const char* key) {
  const json& v = field(j, key, "table");
  if (!v.is_array()) bad("table: field \"" + std::string(key) + "\" must be an array of rows");
  std::vector<std::vector<Elem>> out;
  for (const auto& row : v) {
    if (!row.is_array()) bad("table: rows must be arrays");
    std::vector<Elem> r;
    for (const auto& x : row) {
      if (!is_uint(x)) bad("table: entries must be non-negative integers");
      r.push_back(x.get<Elem>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

EndomorphismMap parse_alpha(const json& spec, const RingPtr& base, const char* kind) {
  if (spec.is_string()) {
    const std::string name = spec.get<std::string>();
    if (name == "id") return identity_endo(base);
    if (name == "swap") return swap_endo(base);
    bad(std::string(kind) + ": unknown endomorphism \"" + name + "\" (use \"id\", \"swap\" or an image array)");
  }
  if (spec.is_array()) {
    EndomorphismMap m;
    m.base = base;
    for (const auto& x : spec) {
      if (!is_uint(x)) bad(std::string(kind) + ": alpha image entries must be element indexes");
      m.image.push_back(x.get<Elem>());
    }
    m.name = "custom";
    m.validate();
    return m;
  }
  bad(std::string(kind) + ": field \"alpha\" must be a string or an image array");
}

}  // namespace

Elem parse_element(const FiniteRing& ring, const json& literal) {
  const auto& names = ring.coord_names();
  if (is_uint(literal)) {
    const Elem v = literal.get<Elem>();
    if (names.size() == 1) return ring.encode({v});
    if (v >= ring.order())
      bad("element literal " + std::to_string(v) + " out of range for " + ring.name());
    return v;  // raw index form for multi-coordinate rings
  }
  if (literal.is_array()) {
    std::vector<Elem> coords;
    for (const auto& x : literal) {
      if (!is_uint(x)) bad("element literal coordinates must be non-negative integers");
      coords.push_back(x.get<Elem>());
    }
    return ring.encode(coords);
  }
  if (literal.is_object()) {
    std::vector<Elem> coords(names.size(), 0);
    for (const auto& [key, value] : literal.items()) {
      auto it = std::find(names.begin(), names.end(), key);
      if (it == names.end())
        bad("unknown coordinate \"" + key + "\" for " + ring.name() + " (coordinates: " +
            [&] {
              std::string s;
              for (const auto& n : names) s += (s.empty() ? "" : ",") + n;
              return s;
            }() +
            ")");
      if (!is_uint(value)) bad("coordinate \"" + key + "\" must be a non-negative integer");
      coords[static_cast<std::size_t>(it - names.begin())] = value.get<Elem>();
    }
    return ring.encode(coords);
  }
  if (literal.is_string()) return parse_element(ring, literal.get<std::string>());
  bad("element literal must be a number, array, object or coordinate string");
}

Elem parse_element(const FiniteRing& ring, const std::string& literal) {
  // "a=2,b=1,c=0" or a bare integer.
  if (literal.find('=') == std::string::npos) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(literal, &pos);
    } catch (const std::exception&) {
      bad("element literal \"" + literal + "\" is not a number or coordinate list");
    }
    if (pos != literal.size()) bad("element literal \"" + literal + "\" is not a number");
    return parse_element(ring, json(static_cast<Elem>(v)));
  }
  json obj = json::object();
  std::stringstream ss(literal);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos || eq == 0)
      bad("element literal part \"" + part + "\" is not name=value");
    const std::string key = part.substr(0, eq);
    const std::string val = part.substr(eq + 1);
    try {
      obj[key] = static_cast<Elem>(std::stoul(val));
    } catch (const std::exception&) {
      bad("element literal part \"" + part + "\" has a non-numeric value");
    }
  }
  return parse_element(ring, obj);
}

RingPtr build(const json& descriptor) {
  if (!descriptor.is_object()) bad("descriptor must be a JSON object");
  if (auto it = descriptor.find("schema"); it != descriptor.end() && *it != "qduo.ring/1")
    bad("descriptor: unsupported schema \"" + it->dump() + "\" (this build speaks qduo.ring/1)");
  const json& kind_v = field(descriptor, "kind", "descriptor");
  if (!kind_v.is_string()) bad("descriptor: \"kind\" must be a string");
  const std::string kind = kind_v.get<std::string>();

  if (kind == "zn") return zn(uint_field(descriptor, "n", "zn"));
  if (kind == "product") {
    const json& fs = field(descriptor, "factors", "product");
    if (!fs.is_array() || fs.empty()) bad("product: \"factors\" must be a non-empty array");
    std::vector<RingPtr> factors;
    for (const auto& f : fs) factors.push_back(build(f));
    return product(std::move(factors));
  }
  if (kind == "mn" || kind == "un" || kind == "dn" || kind == "vn") {
    RingPtr base = build(field(descriptor, "base", kind.c_str()));
    const unsigned n = uint_field(descriptor, "n", kind.c_str());
    MatrixShape shape = kind == "mn"   ? MatrixShape::full
                        : kind == "un" ? MatrixShape::upper
                        : kind == "dn" ? MatrixShape::eqdiag
                                       : MatrixShape::band;
    return matrix_ring(std::move(base), n, shape);
  }
  if (kind == "lst" || kind == "hst") {
    RingPtr base = build(field(descriptor, "base", kind.c_str()));
    const Elem s = parse_element(*base, field(descriptor, "s", kind.c_str()));
    const Elem t = parse_element(*base, field(descriptor, "t", kind.c_str()));
    return kind == "lst" ? lst_ring(std::move(base), s, t) : hst_ring(std::move(base), s, t);
  }
  if (kind == "ks") {
    RingPtr base = build(field(descriptor, "base", "ks"));
    const Elem s = parse_element(*base, field(descriptor, "s", "ks"));
    return ks_ring(std::move(base), s);
  }
  if (kind == "dorroh") {
    RingPtr algebra = build(field(descriptor, "algebra", "dorroh"));
    return dorroh(std::move(algebra), uint_field(descriptor, "n", "dorroh"));
  }
  if (kind == "hurwitz" || kind == "skewpower") {
    RingPtr base = build(field(descriptor, "base", kind.c_str()));
    EndomorphismMap alpha = parse_alpha(field(descriptor, "alpha", kind.c_str()), base, kind.c_str());
    const unsigned k = uint_field(descriptor, "k", kind.c_str());
    return kind == "hurwitz" ? hurwitz_trunc(std::move(base), std::move(alpha), k)
                             : skew_power_trunc(std::move(base), std::move(alpha), k);
  }
  if (kind == "ttrunc") {
    RingPtr r = build(field(descriptor, "r", "ttrunc"));
    RingPtr s = build(field(descriptor, "s", "ttrunc"));
    return t_trunc(std::move(r), std::move(s), uint_field(descriptor, "n", "ttrunc"));
  }
  if (kind == "corner") {
    RingPtr base = build(field(descriptor, "base", "corner"));
    const Elem e = parse_element(*base, field(descriptor, "e", "corner"));
    return corner(std::move(base), e);
  }
  if (kind == "xuxu16") return xuxu_local16();
  if (kind == "d3pattern") return d3_pattern(build(field(descriptor, "base", "d3pattern")));
  if (kind == "table") return table_ring(table_field(descriptor, "add"), table_field(descriptor, "mul"));

  bad("descriptor: unknown kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// Built-ins

namespace {

json zn_d(unsigned n) { return json{{"kind", "zn"}, {"n", n}}; }

json mat_d(const char* kind, json base, unsigned n) {
  return json{{"kind", kind}, {"base", std::move(base)}, {"n", n}};
}

const std::map<std::string, json>& builtin_map() {
  static const std::map<std::string, json> table = [] {
    std::map<std::string, json> m;
    for (unsigned n = 2; n <= 9; ++n) m["z" + std::to_string(n)] = zn_d(n);
    m["z2xz3"] = json{{"kind", "product"}, {"factors", json::array({zn_d(2), zn_d(3)})}};
    m["z4xz4"] = json{{"kind", "product"}, {"factors", json::array({zn_d(4), zn_d(4)})}};
    m["z2xz2"] = json{{"kind", "product"}, {"factors", json::array({zn_d(2), zn_d(2)})}};
    m["m2-z2"] = mat_d("mn", zn_d(2), 2);
    m["m2-z4"] = mat_d("mn", zn_d(4), 2);
    m["u2-z2"] = mat_d("un", zn_d(2), 2);
    m["u2-z4"] = mat_d("un", zn_d(4), 2);
    m["d2-z4"] = mat_d("dn", zn_d(4), 2);
    m["d3-z2"] = mat_d("dn", zn_d(2), 3);
    m["v3-z2"] = mat_d("vn", zn_d(2), 3);
    m["v3-z4"] = mat_d("vn", zn_d(4), 3);
    for (auto [s, t] : {std::pair{1u, 1u}, {0u, 1u}, {1u, 0u}, {0u, 0u}}) {
      m["l" + std::to_string(s) + std::to_string(t) + "-z4"] =
          json{{"kind", "lst"}, {"base", zn_d(4)}, {"s", s}, {"t", t}};
    }
    m["h11-z4"] = json{{"kind", "hst"}, {"base", zn_d(4)}, {"s", 1}, {"t", 1}};
    m["h13-z4"] = json{{"kind", "hst"}, {"base", zn_d(4)}, {"s", 1}, {"t", 3}};
    m["k0-z2"] = json{{"kind", "ks"}, {"base", zn_d(2)}, {"s", 0}};
    m["k0-z4"] = json{{"kind", "ks"}, {"base", zn_d(4)}, {"s", 0}};
    m["k1-z2"] = json{{"kind", "ks"}, {"base", zn_d(2)}, {"s", 1}};
    m["dorroh-m2z2-z2"] = json{{"kind", "dorroh"}, {"algebra", mat_d("mn", zn_d(2), 2)}, {"n", 2}};
    m["dorroh-z4-z4"] = json{{"kind", "dorroh"}, {"algebra", zn_d(4)}, {"n", 4}};
    m["hurwitz-z2-id-2"] = json{{"kind", "hurwitz"}, {"base", zn_d(2)}, {"alpha", "id"}, {"k", 2}};
    m["hurwitz-z4-id-2"] = json{{"kind", "hurwitz"}, {"base", zn_d(4)}, {"alpha", "id"}, {"k", 2}};
    m["skewpower-z2xz2-swap-2"] =
        json{{"kind", "skewpower"},
             {"base", json{{"kind", "product"}, {"factors", json::array({zn_d(2), zn_d(2)})}}},
             {"alpha", "swap"},
             {"k", 2}};
    m["t2-z4-z4"] = json{{"kind", "ttrunc"}, {"r", zn_d(4)}, {"s", zn_d(4)}, {"n", 2}};
    m["xuxu-local16"] = json{{"kind", "xuxu16"}};
    m["d3pattern-z4"] = json{{"kind", "d3pattern"}, {"base", zn_d(4)}};
    // Corners of M_2(Z_2) at the diagonal idempotent E11 and at the
    // non-diagonal idempotent [[1,1],[0,0]].
    m["corner-m2z2-e11"] =
        json{{"kind", "corner"}, {"base", mat_d("mn", zn_d(2), 2)}, {"e", json::array({1, 0, 0, 0})}};
    m["corner-m2z2-upper"] =
        json{{"kind", "corner"}, {"base", mat_d("mn", zn_d(2), 2)}, {"e", json::array({1, 1, 0, 0})}};
    return m;
  }();
  return table;
}

}  // namespace

bool is_builtin(const std::string& name) { return builtin_map().count(name) != 0; }

RingPtr builtin(const std::string& name) {
  auto it = builtin_map().find(name);
  if (it == builtin_map().end()) bad("unknown builtin ring \"" + name + "\"");
  return build(it->second);
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, desc] : builtin_map()) out.push_back(name);
  return out;
}

json builtin_descriptor(const std::string& name) {
  auto it = builtin_map().find(name);
  if (it == builtin_map().end()) bad("unknown builtin ring \"" + name + "\"");
  return it->second;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace qduo::rings
