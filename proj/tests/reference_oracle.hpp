#pragma once

// Brute-force reference implementations, straight from the definitions and
// independent of the kernel code paths. Meant for small rings only (the test
// suite keeps them under order 64 or so).

#include <optional>
#include <vector>

#include "qduo/ring.hpp"

namespace oracle {

using qduo::Elem;
using qduo::ElementSet;
using qduo::FiniteRing;

inline bool is_unit(const FiniteRing& r, Elem u) {
  for (Elem v = 0; v < r.order(); ++v)
    if (r.mul(u, v) == r.one() && r.mul(v, u) == r.one()) return true;
  return false;
}

inline ElementSet units(const FiniteRing& r) {
  std::vector<std::uint8_t> flags(r.order(), 0);
  for (Elem u = 0; u < r.order(); ++u) flags[u] = is_unit(r, u);
  return ElementSet(flags);
}

inline ElementSet qnil(const FiniteRing& r) {
  std::vector<std::uint8_t> flags(r.order(), 0);
  for (Elem a = 0; a < r.order(); ++a) {
    bool ok = true;
    for (Elem x = 0; x < r.order() && ok; ++x) {
      if (r.mul(a, x) != r.mul(x, a)) continue;
      if (!is_unit(r, r.add(r.one(), r.mul(a, x)))) ok = false;
    }
    flags[a] = ok;
  }
  return ElementSet(flags);
}

inline ElementSet jacobson(const FiniteRing& r) {
  std::vector<std::uint8_t> flags(r.order(), 0);
  for (Elem a = 0; a < r.order(); ++a) {
    bool ok = true;
    for (Elem x = 0; x < r.order() && ok; ++x)
      if (!is_unit(r, r.add(r.one(), r.mul(a, x)))) ok = false;
    flags[a] = ok;
  }
  return ElementSet(flags);
}

inline ElementSet nilpotents(const FiniteRing& r) {
  std::vector<std::uint8_t> flags(r.order(), 0);
  for (Elem a = 0; a < r.order(); ++a) {
    Elem p = a;
    for (std::size_t k = 1; k <= r.order(); ++k) {
      if (p == r.zero()) {
        flags[a] = 1;
        break;
      }
      p = r.mul(p, a);
    }
  }
  return ElementSet(flags);
}

inline ElementSet idempotents(const FiniteRing& r) {
  std::vector<std::uint8_t> flags(r.order(), 0);
  for (Elem e = 0; e < r.order(); ++e) flags[e] = r.mul(e, e) == e;
  return ElementSet(flags);
}

inline ElementSet center(const FiniteRing& r) {
  std::vector<std::uint8_t> flags(r.order(), 0);
  for (Elem c = 0; c < r.order(); ++c) {
    bool ok = true;
    for (Elem x = 0; x < r.order() && ok; ++x)
      if (r.mul(c, x) != r.mul(x, c)) ok = false;
    flags[c] = ok;
  }
  return ElementSet(flags);
}

// First (a, b) violating subset*a <= a*subset (right) in ascending (a, b).
inline std::optional<std::array<Elem, 2>> right_normality_violation(const FiniteRing& r,
                                                                    const ElementSet& subset) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b : subset.members()) {
      bool found = false;
      for (Elem c : subset.members())
        if (r.mul(a, c) == r.mul(b, a)) {
          found = true;
          break;
        }
      if (!found) return std::array<Elem, 2>{a, b};
    }
  return std::nullopt;
}

inline std::optional<std::array<Elem, 2>> left_normality_violation(const FiniteRing& r,
                                                                   const ElementSet& subset) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b : subset.members()) {
      bool found = false;
      for (Elem c : subset.members())
        if (r.mul(c, a) == r.mul(a, b)) {
          found = true;
          break;
        }
      if (!found) return std::array<Elem, 2>{a, b};
    }
  return std::nullopt;
}

inline bool is_exchange(const FiniteRing& r) {
  for (Elem x = 0; x < r.order(); ++x) {
    bool found = false;
    for (Elem e = 0; e < r.order() && !found; ++e) {
      if (r.mul(e, e) != e) continue;
      bool e_in_rx = false, ce_in_r1x = false;
      for (Elem s = 0; s < r.order(); ++s) {
        if (r.mul(s, x) == e) e_in_rx = true;
        if (r.mul(s, r.sub(r.one(), x)) == r.sub(r.one(), e)) ce_in_r1x = true;
      }
      found = e_in_rx && ce_in_r1x;
    }
    if (!found) return false;
  }
  return true;
}

inline bool is_clean(const FiniteRing& r) {
  for (Elem x = 0; x < r.order(); ++x) {
    bool found = false;
    for (Elem u = 0; u < r.order() && !found; ++u) {
      if (!is_unit(r, u)) continue;
      const Elem e = r.sub(x, u);
      found = r.mul(e, e) == e;
    }
    if (!found) return false;
  }
  return true;
}

inline bool has_stable_range_one(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem b = 0; b < r.order(); ++b) {
      bool comaximal = false;
      for (Elem s = 0; s < r.order() && !comaximal; ++s)
        for (Elem t = 0; t < r.order(); ++t)
          if (r.add(r.mul(a, s), r.mul(b, t)) == r.one()) {
            comaximal = true;
            break;
          }
      if (!comaximal) continue;
      bool lift = false;
      for (Elem y = 0; y < r.order() && !lift; ++y)
        if (is_unit(r, r.add(a, r.mul(b, y)))) lift = true;
      if (!lift) return false;
    }
  return true;
}

inline bool is_regular(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a) {
    bool found = false;
    for (Elem b = 0; b < r.order() && !found; ++b)
      if (r.mul(r.mul(a, b), a) == a) found = true;
    if (!found) return false;
  }
  return true;
}

inline bool is_strongly_regular(const FiniteRing& r) {
  for (Elem a = 0; a < r.order(); ++a) {
    bool found = false;
    for (Elem b = 0; b < r.order() && !found; ++b)
      if (r.mul(r.mul(a, a), b) == a) found = true;
    if (!found) return false;
  }
  return true;
}

}  // namespace oracle
