#include "qduo/checkers.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace qduo::checks {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

PredicateVerdict ok(Clock::time_point start) {
  PredicateVerdict v;
  v.holds = true;
  v.millis = ms_since(start);
  return v;
}

PredicateVerdict violated(Clock::time_point start, std::vector<WitnessPart> witness,
                          std::string note) {
  PredicateVerdict v;
  v.holds = false;
  v.witness = std::move(witness);
  v.note = std::move(note);
  v.millis = ms_since(start);
  return v;
}

std::string term(const FiniteRing& ring, Elem e) {
  std::string l = ring.label(e);
  if (l.find('+') != std::string::npos || l.find(' ') != std::string::npos) return "(" + l + ")";
  return l;
}

PredicateVerdict normality_impl(const FiniteRing& ring, const ElementSet& subset,
                                Side side, Exec exec, const std::string& set_name) {
  const auto start = Clock::now();
  auto hit = kernels::normality_violation(ring, subset, side, exec);
  if (!hit) return ok(start);
  const Elem a = (*hit)[0], b = (*hit)[1];
  std::string note;
  if (side == Side::right) {
    note = term(ring, b) + " * " + term(ring, a) + " = " + term(ring, ring.mul(b, a)) +
           " is not of the form " + term(ring, a) + " * c for any c in " + set_name;
  } else {
    note = term(ring, a) + " * " + term(ring, b) + " = " + term(ring, ring.mul(a, b)) +
           " is not of the form c * " + term(ring, a) + " for any c in " + set_name;
  }
  return violated(start, {{"b", b}, {"a", a}}, std::move(note));
}

}  // namespace

PredicateVerdict one_sided_normality(const FiniteRing& ring, const ElementSet& subset,
                                     Side side, Exec exec) {
  return normality_impl(ring, subset, side, exec, "the subset");
}

PredicateVerdict is_right_duo(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ElementSet::full(ring.order()), Side::right, exec, "R");
}
PredicateVerdict is_left_duo(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ElementSet::full(ring.order()), Side::left, exec, "R");
}
PredicateVerdict is_right_qnil_duo(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ring.qnil(), Side::right, exec, "R^qnil");
}
PredicateVerdict is_left_qnil_duo(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ring.qnil(), Side::left, exec, "R^qnil");
}
PredicateVerdict is_right_unit_duo(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ring.units(), Side::right, exec, "U(R)");
}
PredicateVerdict is_left_unit_duo(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ring.units(), Side::left, exec, "U(R)");
}
PredicateVerdict is_right_nilpotent_duo(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ring.nilpotents(), Side::right, exec, "N(R)");
}
PredicateVerdict is_left_nilpotent_duo(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ring.nilpotents(), Side::left, exec, "N(R)");
}
PredicateVerdict is_right_normal_on_jacobson(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ring.jacobson(), Side::right, exec, "J(R)");
}
PredicateVerdict is_left_normal_on_jacobson(const FiniteRing& ring, Exec exec) {
  return normality_impl(ring, ring.jacobson(), Side::left, exec, "J(R)");
}

PredicateVerdict is_abelian(const FiniteRing& ring, Exec exec) {
  const auto start = Clock::now();
  auto hit = kernels::abelian_violation(ring, ring.idempotents(), exec);
  if (!hit) return ok(start);
  const Elem e = (*hit)[0], r = (*hit)[1];
  return violated(start, {{"e", e}, {"r", r}},
                  "idempotent " + ring.label(e) + " is not central: e*r = " +
                      ring.label(ring.mul(e, r)) + " but r*e = " + ring.label(ring.mul(r, e)));
}

PredicateVerdict is_directly_finite(const FiniteRing& ring, Exec exec) {
  const auto start = Clock::now();
  auto hit = kernels::directly_finite_violation(ring, exec);
  if (!hit) return ok(start);
  const Elem a = (*hit)[0], b = (*hit)[1];
  return violated(start, {{"a", a}, {"b", b}},
                  ring.label(a) + " * " + ring.label(b) + " = 1 but " + ring.label(b) + " * " +
                      ring.label(a) + " = " + ring.label(ring.mul(b, a)));
}

PredicateVerdict is_local(const FiniteRing& ring, Exec exec) {
  const auto start = Clock::now();
  auto hit = kernels::local_violation(ring, ring.units(), exec);
  if (!hit) return ok(start);
  const Elem x = (*hit)[0], y = (*hit)[1];
  return violated(start, {{"x", x}, {"y", y}},
                  "non-units " + ring.label(x) + " and " + ring.label(y) +
                      " sum to the unit " + ring.label(ring.add(x, y)));
}

PredicateVerdict is_exchange(const FiniteRing& ring, Exec exec) {
  const auto start = Clock::now();
  auto hit = kernels::exchange_violation(ring, ring.idempotents(), exec);
  if (!hit) return ok(start);
  return violated(start, {{"x", *hit}},
                  "no idempotent e has e in R*" + ring.label(*hit) + " and 1-e in R*(1-" +
                      ring.label(*hit) + ")");
}

PredicateVerdict is_clean(const FiniteRing& ring, Exec exec) {
  const auto start = Clock::now();
  auto hit = kernels::clean_violation(ring, ring.units(), ring.idempotents(), exec);
  if (!hit) return ok(start);
  return violated(start, {{"x", *hit}},
                  ring.label(*hit) + " is not a unit plus an idempotent");
}

PredicateVerdict has_stable_range_one(const FiniteRing& ring, Exec exec) {
  const auto start = Clock::now();
  auto hit = kernels::stable_range_one_violation(ring, ring.units(), exec);
  if (!hit) return ok(start);
  const Elem a = (*hit)[0], b = (*hit)[1];
  return violated(start, {{"a", a}, {"b", b}},
                  "aR + bR = R for a = " + ring.label(a) + ", b = " + ring.label(b) +
                      " but a + b*y is never a unit");
}

PredicateVerdict is_regular(const FiniteRing& ring, Exec exec) {
  const auto start = Clock::now();
  auto hit = kernels::regular_violation(ring, exec);
  if (!hit) return ok(start);
  return violated(start, {{"a", *hit}},
                  "no b satisfies a*b*a = a for a = " + ring.label(*hit));
}

PredicateVerdict is_strongly_regular(const FiniteRing& ring, Exec exec) {
  const auto start = Clock::now();
  auto hit = kernels::strongly_regular_violation(ring, exec);
  if (!hit) return ok(start);
  return violated(start, {{"a", *hit}},
                  "no b satisfies a^2*b = a for a = " + ring.label(*hit));
}

PredicateVerdict qnil_is_central(const FiniteRing& ring, Exec exec) {
  (void)exec;
  const auto start = Clock::now();
  const auto& q = ring.qnil();
  const auto& c = ring.center();
  for (Elem a : q.members()) {
    if (!c.contains(a)) {
      for (Elem r = 0; r < ring.order(); ++r) {
        if (ring.mul(a, r) != ring.mul(r, a)) {
          return violated(start, {{"q", a}, {"r", r}},
                          "quasinilpotent " + ring.label(a) + " does not commute with " +
                              ring.label(r));
        }
      }
    }
  }
  return ok(start);
}

PredicateVerdict k0_kernel_condition(const FiniteRing& ringK0, Elem A, Exec exec) {
  (void)exec;
  const auto start = Clock::now();
  if (ringK0.kind() != "ks" || ringK0.bases().size() != 1)
    throw std::domain_error("k0_kernel_condition: ring was not built as K_s(R)");
  const FiniteRing& base = *ringK0.bases()[0];
  if (A >= ringK0.order() || !ringK0.qnil().contains(A))
    throw std::domain_error("k0_kernel_condition: A is not quasinilpotent in " + ringK0.name());
  const auto blocks = ringK0.decode(A);
  const Elem a = blocks[0], b = blocks[1], c = blocks[2], d = blocks[3];
  // s = 0 check: the (1,1) block of [[0,b],[c,0]]^2 must vanish for b=c=1;
  // cheaper and equivalent for our builder: 1*1 twisted by s.
  {
    const Elem twist = ringK0.mul(ringK0.encode({base.zero(), base.one(), base.zero(), base.zero()}),
                                  ringK0.encode({base.zero(), base.zero(), base.one(), base.zero()}));
    if (ringK0.decode(twist)[0] != base.zero())
      throw std::domain_error("k0_kernel_condition: ring is K_s with s != 0");
  }
  const ElementSet comm_a = base.commutant(a);
  const ElementSet comm_d = base.commutant(d);
  for (Elem x : comm_a.members()) {
    for (Elem y : comm_d.members()) {
      if (base.mul(x, b) != base.mul(b, y))
        return violated(start, {{"x", x}, {"y", y}},
                        "x*b = " + base.label(base.mul(x, b)) + " differs from b*y = " +
                            base.label(base.mul(b, y)));
      if (base.mul(y, c) != base.mul(c, x))
        return violated(start, {{"x", x}, {"y", y}},
                        "y*c = " + base.label(base.mul(y, c)) + " differs from c*x = " +
                            base.label(base.mul(c, x)));
    }
  }
  PredicateVerdict v = ok(start);
  const bool qa = base.qnil().contains(a), qd = base.qnil().contains(d);
  v.note = std::string("kernel condition holds; diagonal quasinilpotent: a ") +
           (qa ? "yes" : "NO") + ", d " + (qd ? "yes" : "NO");
  return v;
}

// ---------------------------------------------------------------------------
// Name registry

namespace {

using Fn = std::function<PredicateVerdict(const FiniteRing&, Exec)>;

const std::vector<std::pair<std::string, Fn>>& registry() {
  static const std::vector<std::pair<std::string, Fn>> table = {
      {"right-duo", is_right_duo},
      {"left-duo", is_left_duo},
      {"right-qnil-duo", is_right_qnil_duo},
      {"left-qnil-duo", is_left_qnil_duo},
      {"right-unit-duo", is_right_unit_duo},
      {"left-unit-duo", is_left_unit_duo},
      {"right-nilpotent-duo", is_right_nilpotent_duo},
      {"left-nilpotent-duo", is_left_nilpotent_duo},
      {"right-normal-jacobson", is_right_normal_on_jacobson},
      {"left-normal-jacobson", is_left_normal_on_jacobson},
      {"abelian", is_abelian},
      {"directly-finite", is_directly_finite},
      {"local", is_local},
      {"exchange", is_exchange},
      {"clean", is_clean},
      {"stable-range-1", has_stable_range_one},
      {"regular", is_regular},
      {"strongly-regular", is_strongly_regular},
      {"central-qnil", qnil_is_central},
  };
  return table;
}

Elem witness_part(const std::vector<WitnessPart>& w, const char* role) {
  for (const auto& p : w)
    if (p.role == role) return p.element;
  throw std::invalid_argument(std::string("witness is missing role \"") + role + "\"");
}

bool reverify_normality(const FiniteRing& ring, const ElementSet& subset, Side side,
                        const std::vector<WitnessPart>& w) {
  const Elem b = witness_part(w, "b"), a = witness_part(w, "a");
  if (!subset.contains(b)) return false;
  if (side == Side::right) {
    const Elem ba = ring.mul(b, a);
    for (Elem c : subset.members())
      if (ring.mul(a, c) == ba) return false;
  } else {
    const Elem ab = ring.mul(a, b);
    for (Elem c : subset.members())
      if (ring.mul(c, a) == ab) return false;
  }
  return true;
}

}  // namespace

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_predicate_name(const std::string& name) {
  for (const auto& [n, fn] : registry())
    if (n == name) return true;
  return false;
}

PredicateVerdict run_predicate(const FiniteRing& ring, const std::string& name, Exec exec) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(ring, exec);
  throw std::invalid_argument("unknown predicate \"" + name + "\"");
}

bool reverify(const FiniteRing& ring, const std::string& name,
              const std::vector<WitnessPart>& w) {
  if (name == "right-duo") return reverify_normality(ring, ElementSet::full(ring.order()), Side::right, w);
  if (name == "left-duo") return reverify_normality(ring, ElementSet::full(ring.order()), Side::left, w);
  if (name == "right-qnil-duo") return reverify_normality(ring, ring.qnil(), Side::right, w);
  if (name == "left-qnil-duo") return reverify_normality(ring, ring.qnil(), Side::left, w);
  if (name == "right-unit-duo") return reverify_normality(ring, ring.units(), Side::right, w);
  if (name == "left-unit-duo") return reverify_normality(ring, ring.units(), Side::left, w);
  if (name == "right-nilpotent-duo") return reverify_normality(ring, ring.nilpotents(), Side::right, w);
  if (name == "left-nilpotent-duo") return reverify_normality(ring, ring.nilpotents(), Side::left, w);
  if (name == "right-normal-jacobson") return reverify_normality(ring, ring.jacobson(), Side::right, w);
  if (name == "left-normal-jacobson") return reverify_normality(ring, ring.jacobson(), Side::left, w);

  if (name == "abelian") {
    const Elem e = witness_part(w, "e"), r = witness_part(w, "r");
    return ring.mul(e, e) == e && ring.mul(e, r) != ring.mul(r, e);
  }
  if (name == "directly-finite") {
    const Elem a = witness_part(w, "a"), b = witness_part(w, "b");
    return ring.mul(a, b) == ring.one() && ring.mul(b, a) != ring.one();
  }
  if (name == "local") {
    const Elem x = witness_part(w, "x"), y = witness_part(w, "y");
    const auto& u = ring.units();
    return !u.contains(x) && !u.contains(y) && u.contains(ring.add(x, y));
  }
  if (name == "exchange") {
    const Elem x = witness_part(w, "x");
    for (Elem e : ring.idempotents().members()) {
      bool in_rx = false, in_r1x = false;
      const Elem omx = ring.sub(ring.one(), x), ome = ring.sub(ring.one(), e);
      for (Elem r = 0; r < ring.order() && !(in_rx && in_r1x); ++r) {
        if (ring.mul(r, x) == e) in_rx = true;
        if (ring.mul(r, omx) == ome) in_r1x = true;
      }
      if (in_rx && in_r1x) return false;
    }
    return true;
  }
  if (name == "clean") {
    const Elem x = witness_part(w, "x");
    for (Elem u : ring.units().members())
      if (ring.idempotents().contains(ring.sub(x, u))) return false;
    return true;
  }
  if (name == "stable-range-1") {
    const Elem a = witness_part(w, "a"), b = witness_part(w, "b");
    bool comaximal = false;
    for (Elem r = 0; r < ring.order() && !comaximal; ++r)
      for (Elem s = 0; s < ring.order(); ++s)
        if (ring.add(ring.mul(a, r), ring.mul(b, s)) == ring.one()) {
          comaximal = true;
          break;
        }
    if (!comaximal) return false;
    for (Elem y = 0; y < ring.order(); ++y)
      if (ring.units().contains(ring.add(a, ring.mul(b, y)))) return false;
    return true;
  }
  if (name == "regular") {
    const Elem a = witness_part(w, "a");
    for (Elem b = 0; b < ring.order(); ++b)
      if (ring.mul(ring.mul(a, b), a) == a) return false;
    return true;
  }
  if (name == "strongly-regular") {
    const Elem a = witness_part(w, "a");
    for (Elem b = 0; b < ring.order(); ++b)
      if (ring.mul(ring.mul(a, a), b) == a) return false;
    return true;
  }
  if (name == "central-qnil") {
    const Elem q = witness_part(w, "q"), r = witness_part(w, "r");
    return ring.qnil().contains(q) && ring.mul(q, r) != ring.mul(r, q);
  }
  throw std::invalid_argument("reverify: unknown predicate \"" + name + "\"");
}

}  // namespace qduo::checks
