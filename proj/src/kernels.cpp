#include "qduo/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <mutex>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qduo::kernels {

namespace {

Exec initial_exec() {
  if (const char* env = std::getenv("QDUO_EXEC")) {
    if (std::strcmp(env, "serial") == 0) return Exec::serial;
    if (std::strcmp(env, "parallel") == 0) return Exec::parallel;
  }
#ifdef _OPENMP
  return Exec::parallel;
#else
  return Exec::serial;
#endif
}

std::atomic<Exec>& exec_flag() {
  static std::atomic<Exec> flag{initial_exec()};
  return flag;
}

// Runs fn(i) for i in 0..n-1. Parallel mode keeps the exact same body; all
// kernels write to disjoint slots or reduce through min_hit below.
template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::parallel && n > 1) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) fn(static_cast<Elem>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(static_cast<Elem>(i));
}

// Deterministic first-hit reduction over an ascending outer index. Threads
// skip indexes above the current best, so early exits survive parallelism.
template <class Payload>
struct MinHit {
  explicit MinHit(std::size_t n) : bound(static_cast<std::int64_t>(n)) {}
  std::atomic<std::int64_t> hint{std::numeric_limits<std::int64_t>::max()};
  std::int64_t bound;
  std::int64_t best;
  Payload payload{};
  std::mutex m;
  bool init = false;

  bool skip(Elem i) const { return static_cast<std::int64_t>(i) > hint.load(std::memory_order_relaxed); }

  void offer(Elem i, const Payload& p) {
    std::lock_guard<std::mutex> lock(m);
    if (!init || static_cast<std::int64_t>(i) < best) {
      init = true;
      best = static_cast<std::int64_t>(i);
      payload = p;
      std::int64_t cur = hint.load(std::memory_order_relaxed);
      while (cur > best && !hint.compare_exchange_weak(cur, best)) {
      }
    }
  }

  bool found() const { return init; }
};

std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

void set_bit(std::vector<std::uint64_t>& w, Elem e) {
  w[e >> 6] |= std::uint64_t{1} << (e & 63u);
}

bool get_bit(const std::vector<std::uint64_t>& w, Elem e) {
  return ((w[e >> 6] >> (e & 63u)) & 1u) != 0;
}

}  // namespace

Exec default_exec() { return exec_flag().load(); }
void set_default_exec(Exec exec) { exec_flag().store(exec); }

bool parallel_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

const char* to_string(Exec exec) { return exec == Exec::serial ? "serial" : "parallel"; }
const char* to_string(Side side) { return side == Side::right ? "right" : "left"; }

// ---------------------------------------------------------------------------
// Axioms

namespace {

using Triple = std::array<Elem, 3>;

// Each law scan returns the lexicographically first violating tuple.
template <class Body>
std::optional<Triple> scan_triples(std::size_t n, Exec exec, Body&& violates) {
  MinHit<Triple> hit(n);
  for_each_index(n, exec, [&](Elem i) {
    if (hit.skip(i)) return;
    for (Elem j = 0; j < n; ++j) {
      for (Elem k = 0; k < n; ++k) {
        if (violates(i, j, k)) {
          hit.offer(i, Triple{i, j, k});
          return;
        }
      }
    }
  });
  if (!hit.found()) return std::nullopt;
  return hit.payload;
}

template <class Body>
std::optional<Triple> scan_pairs(std::size_t n, Exec exec, Body&& violates) {
  MinHit<Triple> hit(n);
  for_each_index(n, exec, [&](Elem i) {
    if (hit.skip(i)) return;
    for (Elem j = 0; j < n; ++j) {
      if (violates(i, j)) {
        hit.offer(i, Triple{i, j, 0});
        return;
      }
    }
  });
  if (!hit.found()) return std::nullopt;
  return hit.payload;
}

}  // namespace

AxiomReport verify_axioms(const FiniteRing& ring, std::size_t cap, Exec exec) {
  const std::size_t n = ring.order();
  if (n > cap) {
    AxiomReport r;
    r.status = AxiomReport::Status::unchecked;
    r.note = "order " + std::to_string(n) + " exceeds axiom-check cap " + std::to_string(cap);
    return r;
  }

  // The cubic scans dominate; materialize the operation tables once so the
  // inner loops are array lookups instead of construction closures.
  std::vector<Elem> add_t, mul_t, neg_t;
  const bool tabulate = n <= 2048;
  if (tabulate) {
    add_t.resize(n * n);
    mul_t.resize(n * n);
    neg_t.resize(n);
    for_each_index(n, exec, [&](Elem i) {
      neg_t[i] = ring.neg(i);
      for (Elem j = 0; j < n; ++j) {
        add_t[std::size_t(i) * n + j] = ring.add(i, j);
        mul_t[std::size_t(i) * n + j] = ring.mul(i, j);
      }
    });
  }
  auto add = [&](Elem i, Elem j) { return tabulate ? add_t[std::size_t(i) * n + j] : ring.add(i, j); };
  auto mul = [&](Elem i, Elem j) { return tabulate ? mul_t[std::size_t(i) * n + j] : ring.mul(i, j); };
  auto neg = [&](Elem i) { return tabulate ? neg_t[i] : ring.neg(i); };

  auto fail = [&](const char* law, std::vector<Elem> elems) {
    AxiomReport r;
    r.status = AxiomReport::Status::violation;
    r.violation = AxiomViolation{law, std::move(elems)};
    r.note = law;
    return r;
  };
  auto fail3 = [&](const char* law, const std::optional<Triple>& t, int arity) {
    std::vector<Elem> e(t->begin(), t->begin() + arity);
    return fail(law, std::move(e));
  };

  if (ring.zero() == ring.one()) return fail("zero-ne-one", {});
  if (ring.zero() >= n || ring.one() >= n) return fail("identity-in-range", {});

  if (auto t = scan_pairs(n, exec, [&](Elem i, Elem j) {
        return add(i, j) >= n || mul(i, j) >= n;
      }))
    return fail3("closure", t, 2);
  for (Elem i = 0; i < n; ++i)
    if (neg(i) >= n) return fail("closure", {i});

  if (auto t = scan_triples(n, exec, [&](Elem i, Elem j, Elem k) {
        return add(add(i, j), k) != add(i, add(j, k));
      }))
    return fail3("add-associativity", t, 3);
  if (auto t = scan_pairs(n, exec, [&](Elem i, Elem j) { return add(i, j) != add(j, i); }))
    return fail3("add-commutativity", t, 2);
  for (Elem i = 0; i < n; ++i) {
    if (add(i, ring.zero()) != i) return fail("add-identity", {i});
    if (add(i, neg(i)) != ring.zero()) return fail("add-inverse", {i});
  }

  if (auto t = scan_triples(n, exec, [&](Elem i, Elem j, Elem k) {
        return mul(mul(i, j), k) != mul(i, mul(j, k));
      }))
    return fail3("mul-associativity", t, 3);
  for (Elem i = 0; i < n; ++i) {
    if (mul(i, ring.one()) != i || mul(ring.one(), i) != i)
      return fail("mul-identity", {i});
  }
  if (auto t = scan_triples(n, exec, [&](Elem i, Elem j, Elem k) {
        return mul(i, add(j, k)) != add(mul(i, j), mul(i, k));
      }))
    return fail3("left-distributivity", t, 3);
  if (auto t = scan_triples(n, exec, [&](Elem i, Elem j, Elem k) {
        return mul(add(i, j), k) != add(mul(i, k), mul(j, k));
      }))
    return fail3("right-distributivity", t, 3);

  AxiomReport r;
  r.status = AxiomReport::Status::verified;
  r.note = "all axioms hold";
  return r;
}

// ---------------------------------------------------------------------------
// Derived sets

std::vector<Elem> inverse_table(const FiniteRing& ring, Exec exec) {
  const std::size_t n = ring.order();
  const Elem one = ring.one();
  std::vector<Elem> inv(n, static_cast<Elem>(n));
  for_each_index(n, exec, [&](Elem u) {
    for (Elem v = 0; v < n; ++v) {
      if (ring.mul(u, v) == one && ring.mul(v, u) == one) {
        inv[u] = v;
        return;
      }
    }
  });
  return inv;
}

ElementSet units(const FiniteRing& ring, Exec exec) {
  auto inv = inverse_table(ring, exec);
  std::vector<std::uint8_t> flags(ring.order(), 0);
  for (std::size_t e = 0; e < ring.order(); ++e)
    if (inv[e] != ring.order()) flags[e] = 1;
  return ElementSet(flags);
}

ElementSet qnil_set(const FiniteRing& ring, const ElementSet& us, Exec exec) {
  const std::size_t n = ring.order();
  const Elem one = ring.one();
  std::vector<std::uint8_t> flags(n, 0);
  // Units first, then per candidate a walk comm(a) with early exit on the
  // first non-unit 1 + ax.
  for_each_index(n, exec, [&](Elem a) {
    for (Elem x = 0; x < n; ++x) {
      const Elem ax = ring.mul(a, x);
      if (ax != ring.mul(x, a)) continue;
      if (!us.contains(ring.add(one, ax))) return;
    }
    flags[a] = 1;
  });
  return ElementSet(flags);
}

ElementSet jacobson_radical(const FiniteRing& ring, const ElementSet& us, Exec exec) {
  const std::size_t n = ring.order();
  const Elem one = ring.one();
  std::vector<std::uint8_t> flags(n, 0);
  for_each_index(n, exec, [&](Elem a) {
    for (Elem x = 0; x < n; ++x)
      if (!us.contains(ring.add(one, ring.mul(a, x)))) return;
    flags[a] = 1;
  });
  return ElementSet(flags);
}

ElementSet nilpotents(const FiniteRing& ring, Exec exec) {
  const std::size_t n = ring.order();
  // a nilpotent iff a^(2^s) = 0 once 2^s >= order: the nilpotency index of
  // any element is at most the order, and squaring dominates it.
  unsigned steps = 1;
  while ((std::size_t{1} << steps) < n) ++steps;
  std::vector<std::uint8_t> flags(n, 0);
  for_each_index(n, exec, [&](Elem a) {
    Elem b = a;
    for (unsigned s = 0; s <= steps; ++s) {
      if (b == ring.zero()) {
        flags[a] = 1;
        return;
      }
      b = ring.mul(b, b);
    }
  });
  return ElementSet(flags);
}

ElementSet idempotents(const FiniteRing& ring, Exec exec) {
  std::vector<std::uint8_t> flags(ring.order(), 0);
  for_each_index(ring.order(), exec, [&](Elem e) {
    if (ring.mul(e, e) == e) flags[e] = 1;
  });
  return ElementSet(flags);
}

ElementSet center(const FiniteRing& ring, Exec exec) {
  const std::size_t n = ring.order();
  std::vector<std::uint8_t> flags(n, 0);
  for_each_index(n, exec, [&](Elem c) {
    for (Elem r = 0; r < n; ++r)
      if (ring.mul(c, r) != ring.mul(r, c)) return;
    flags[c] = 1;
  });
  return ElementSet(flags);
}

ElementSet commutant(const FiniteRing& ring, Elem a) {
  const std::size_t n = ring.order();
  std::vector<std::uint8_t> flags(n, 0);
  for (Elem b = 0; b < n; ++b)
    if (ring.mul(a, b) == ring.mul(b, a)) flags[b] = 1;
  return ElementSet(flags);
}

ElementSet double_commutant(const FiniteRing& ring, Elem a) {
  const ElementSet comm = commutant(ring, a);
  std::vector<std::uint8_t> flags(ring.order(), 0);
  for (Elem b = 0; b < ring.order(); ++b) {
    bool ok = true;
    for (Elem c : comm.members()) {
      if (ring.mul(b, c) != ring.mul(c, b)) {
        ok = false;
        break;
      }
    }
    if (ok) flags[b] = 1;
  }
  return ElementSet(flags);
}

// ---------------------------------------------------------------------------
// Predicate searches

std::optional<std::array<Elem, 2>> normality_violation(const FiniteRing& ring,
                                                       const ElementSet& subset,
                                                       Side side, Exec exec) {
  const std::size_t n = ring.order();
  const auto& mem = subset.members();
  MinHit<Elem> hit(n);
  for_each_index(n, exec, [&](Elem a) {
    if (hit.skip(a)) return;
    // membership image {a*c : c in subset} (or {c*a} on the left side)
    std::vector<std::uint64_t> img(word_count(n), 0);
    for (Elem c : mem)
      set_bit(img, side == Side::right ? ring.mul(a, c) : ring.mul(c, a));
    for (Elem b : mem) {
      const Elem p = side == Side::right ? ring.mul(b, a) : ring.mul(a, b);
      if (!get_bit(img, p)) {
        hit.offer(a, b);
        return;
      }
    }
  });
  if (!hit.found()) return std::nullopt;
  return std::array<Elem, 2>{static_cast<Elem>(hit.best), hit.payload};
}

std::optional<std::array<Elem, 2>> abelian_violation(const FiniteRing& ring,
                                                     const ElementSet& idem, Exec exec) {
  const auto& es = idem.members();
  MinHit<Elem> hit(es.size());
  for_each_index(es.size(), exec, [&](Elem idx) {
    if (hit.skip(idx)) return;
    const Elem e = es[idx];
    for (Elem r = 0; r < ring.order(); ++r) {
      if (ring.mul(e, r) != ring.mul(r, e)) {
        hit.offer(idx, r);
        return;
      }
    }
  });
  if (!hit.found()) return std::nullopt;
  return std::array<Elem, 2>{es[static_cast<std::size_t>(hit.best)], hit.payload};
}

std::optional<std::array<Elem, 2>> directly_finite_violation(const FiniteRing& ring,
                                                             Exec exec) {
  const std::size_t n = ring.order();
  const Elem one = ring.one();
  MinHit<Elem> hit(n);
  for_each_index(n, exec, [&](Elem a) {
    if (hit.skip(a)) return;
    for (Elem b = 0; b < n; ++b) {
      if (ring.mul(a, b) == one && ring.mul(b, a) != one) {
        hit.offer(a, b);
        return;
      }
    }
  });
  if (!hit.found()) return std::nullopt;
  return std::array<Elem, 2>{static_cast<Elem>(hit.best), hit.payload};
}

std::optional<std::array<Elem, 2>> local_violation(const FiniteRing& ring,
                                                   const ElementSet& us, Exec exec) {
  const std::size_t n = ring.order();
  MinHit<Elem> hit(n);
  for_each_index(n, exec, [&](Elem x) {
    if (us.contains(x) || hit.skip(x)) return;
    for (Elem y = 0; y < n; ++y) {
      if (us.contains(y)) continue;
      if (us.contains(ring.add(x, y))) {
        hit.offer(x, y);
        return;
      }
    }
  });
  if (!hit.found()) return std::nullopt;
  return std::array<Elem, 2>{static_cast<Elem>(hit.best), hit.payload};
}

std::optional<Elem> exchange_violation(const FiniteRing& ring, const ElementSet& idem,
                                       Exec exec) {
  const std::size_t n = ring.order();
  MinHit<char> hit(n);
  for_each_index(n, exec, [&](Elem x) {
    if (hit.skip(x)) return;
    std::vector<std::uint64_t> rx(word_count(n), 0), r1x(word_count(n), 0);
    const Elem omx = ring.sub(ring.one(), x);
    for (Elem r = 0; r < n; ++r) {
      set_bit(rx, ring.mul(r, x));
      set_bit(r1x, ring.mul(r, omx));
    }
    for (Elem e : idem.members())
      if (get_bit(rx, e) && get_bit(r1x, ring.sub(ring.one(), e))) return;
    hit.offer(x, 0);
  });
  if (!hit.found()) return std::nullopt;
  return static_cast<Elem>(hit.best);
}

std::optional<Elem> clean_violation(const FiniteRing& ring, const ElementSet& us,
                                    const ElementSet& idem, Exec exec) {
  const std::size_t n = ring.order();
  MinHit<char> hit(n);
  for_each_index(n, exec, [&](Elem x) {
    if (hit.skip(x)) return;
    for (Elem u : us.members())
      if (idem.contains(ring.sub(x, u))) return;
    hit.offer(x, 0);
  });
  if (!hit.found()) return std::nullopt;
  return static_cast<Elem>(hit.best);
}

std::optional<std::array<Elem, 2>> stable_range_one_violation(const FiniteRing& ring,
                                                              const ElementSet& us,
                                                              Exec exec) {
  const std::size_t n = ring.order();
  if (n > 16384)
    throw std::domain_error("stable-range-1 search needs order <= 16384, got " +
                            std::to_string(n));
  const std::size_t w = word_count(n);
  const Elem one = ring.one();

  // mulrow[v]  : bitmap of vR
  // shifted[b] : bit u set iff (1 - u) in bR
  // unitoff[a] : bit t set iff a + t is a unit
  std::vector<std::uint64_t> mulrow(n * w, 0), shifted(n * w, 0), unitoff(n * w, 0);
  for_each_index(n, exec, [&](Elem v) {
    auto* row = &mulrow[static_cast<std::size_t>(v) * w];
    for (Elem r = 0; r < n; ++r) {
      const Elem p = ring.mul(v, r);
      row[p >> 6] |= std::uint64_t{1} << (p & 63u);
    }
  });
  for_each_index(n, exec, [&](Elem b) {
    const auto* row = &mulrow[static_cast<std::size_t>(b) * w];
    auto* out = &shifted[static_cast<std::size_t>(b) * w];
    for (Elem u = 0; u < n; ++u) {
      const Elem d = ring.sub(one, u);
      if ((row[d >> 6] >> (d & 63u)) & 1u) out[u >> 6] |= std::uint64_t{1} << (u & 63u);
    }
  });
  for_each_index(n, exec, [&](Elem a) {
    auto* out = &unitoff[static_cast<std::size_t>(a) * w];
    for (Elem t = 0; t < n; ++t)
      if (us.contains(ring.add(a, t))) out[t >> 6] |= std::uint64_t{1} << (t & 63u);
  });

  MinHit<Elem> hit(n);
  for_each_index(n, exec, [&](Elem a) {
    if (hit.skip(a)) return;
    const auto* ra = &mulrow[static_cast<std::size_t>(a) * w];
    const auto* da = &unitoff[static_cast<std::size_t>(a) * w];
    for (Elem b = 0; b < n; ++b) {
      const auto* tb = &shifted[static_cast<std::size_t>(b) * w];
      bool comaximal = false;
      for (std::size_t k = 0; k < w; ++k) {
        if (ra[k] & tb[k]) {
          comaximal = true;
          break;
        }
      }
      if (!comaximal) continue;
      const auto* rb = &mulrow[static_cast<std::size_t>(b) * w];
      bool liftable = false;
      for (std::size_t k = 0; k < w; ++k) {
        if (rb[k] & da[k]) {
          liftable = true;
          break;
        }
      }
      if (!liftable) {
        hit.offer(a, b);
        return;
      }
    }
  });
  if (!hit.found()) return std::nullopt;
  return std::array<Elem, 2>{static_cast<Elem>(hit.best), hit.payload};
}

std::optional<Elem> regular_violation(const FiniteRing& ring, Exec exec) {
  const std::size_t n = ring.order();
  MinHit<char> hit(n);
  for_each_index(n, exec, [&](Elem a) {
    if (hit.skip(a)) return;
    for (Elem b = 0; b < n; ++b)
      if (ring.mul(ring.mul(a, b), a) == a) return;
    hit.offer(a, 0);
  });
  if (!hit.found()) return std::nullopt;
  return static_cast<Elem>(hit.best);
}

std::optional<Elem> strongly_regular_violation(const FiniteRing& ring, Exec exec) {
  const std::size_t n = ring.order();
  MinHit<char> hit(n);
  for_each_index(n, exec, [&](Elem a) {
    if (hit.skip(a)) return;
    const Elem aa = ring.mul(a, a);
    for (Elem b = 0; b < n; ++b)
      if (ring.mul(aa, b) == a) return;
    hit.offer(a, 0);
  });
  if (!hit.found()) return std::nullopt;
  return static_cast<Elem>(hit.best);
}

}  // namespace qduo::kernels
