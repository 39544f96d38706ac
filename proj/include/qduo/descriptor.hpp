#pragma once

// JSON ring descriptors (grammar "qduo.ring/1") and the built-in registry.
//
// A descriptor is an object {"kind": "...", ...params}. Kinds and parameters:
//   zn        {n}
//   product   {factors: [descriptor...]}
//   mn|un|dn|vn {base, n}
//   lst       {base, s, t}          s, t central element literals
//   hst       {base, s, t}          s, t central unit literals
//   ks        {base, s}             s central (0 allowed)
//   dorroh    {algebra, n}
//   hurwitz   {base, alpha, k}      alpha: "id" | "swap" | image array
//   skewpower {base, alpha, k}
//   ttrunc    {r, s, n}
//   corner    {base, e}             e a nonzero idempotent literal
//   xuxu16    {}
//   d3pattern {base}
//   table     {add: [[..]], mul: [[..]]}
//
// Element literals are construction-native coordinates: a number (the single
// coordinate, or a raw element index for multi-coordinate rings), an array of
// coordinates, or an object keyed by coordinate names.

#include <string>
#include <vector>

#include <json.hpp>

#include "qduo/constructions.hpp"
#include "qduo/ring.hpp"

namespace qduo::rings {

/// Validates and realizes a descriptor. Throws std::invalid_argument with the
/// violated precondition named.
RingPtr build(const nlohmann::json& descriptor);

/// Parses an element literal (number, coordinate array, object or coordinate
/// string "a=2,b=1") against a ring.
Elem parse_element(const FiniteRing& ring, const nlohmann::json& literal);
Elem parse_element(const FiniteRing& ring, const std::string& literal);

/// Built-in named rings (the default catalog plus a few conveniences).
RingPtr builtin(const std::string& name);
bool is_builtin(const std::string& name);
std::vector<std::string> builtin_names();
nlohmann::json builtin_descriptor(const std::string& name);

std::uint64_t fnv1a64(std::string_view s);

}  // namespace qduo::rings
