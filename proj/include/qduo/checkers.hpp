#pragma once

// Predicate layer: exhaustive decisions about a ring with explicit witnesses.
// Every negative verdict carries the violating elements; reverify() plugs a
// witness back into the raw definition.

#include <string>
#include <vector>

#include "qduo/kernels.hpp"
#include "qduo/ring.hpp"

namespace qduo::checks {

using kernels::Exec;
using kernels::Side;

struct WitnessPart {
  std::string role;
  Elem element;
};

struct PredicateVerdict {
  bool holds = false;
  std::vector<WitnessPart> witness;  // non-empty exactly when holds is false
  std::string note;                  // the violated condition, instantiated
  double millis = 0.0;
};

/// Right: subset * a <= a * subset for every a in R; left is the mirror.
/// Degenerate subsets ({} or {0}) hold vacuously.
PredicateVerdict one_sided_normality(const FiniteRing& ring, const ElementSet& subset,
                                     Side side, Exec exec = kernels::default_exec());

// The duo family: one_sided_normality with subset = R, R^qnil, U(R), N(R), J(R).
PredicateVerdict is_right_duo(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_left_duo(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_right_qnil_duo(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_left_qnil_duo(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_right_unit_duo(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_left_unit_duo(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_right_nilpotent_duo(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_left_nilpotent_duo(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_right_normal_on_jacobson(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_left_normal_on_jacobson(const FiniteRing& ring, Exec exec = kernels::default_exec());

PredicateVerdict is_abelian(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_directly_finite(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_local(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_exchange(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_clean(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict has_stable_range_one(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_regular(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict is_strongly_regular(const FiniteRing& ring, Exec exec = kernels::default_exec());
PredicateVerdict qnil_is_central(const FiniteRing& ring, Exec exec = kernels::default_exec());

/// For a quasinilpotent A = [[a,b],[c,d]] in a ring built by ks_ring with
/// s = 0: holds iff xb = by and yc = cx for every x in comm(a), y in comm(d)
/// over the base ring. The note records whether a and d are quasinilpotent.
/// Throws std::domain_error when the ring is not a K_0 or A is not in qnil.
PredicateVerdict k0_kernel_condition(const FiniteRing& ringK0, Elem A,
                                     Exec exec = kernels::default_exec());

/// Names accepted by run_predicate (and the CLI --props flag).
const std::vector<std::string>& predicate_names();
bool is_predicate_name(const std::string& name);
PredicateVerdict run_predicate(const FiniteRing& ring, const std::string& name,
                               Exec exec = kernels::default_exec());

/// Re-checks a witness against the raw definition of the named predicate.
/// True when the witness still violates it.
bool reverify(const FiniteRing& ring, const std::string& name,
              const std::vector<WitnessPart>& witness);

}  // namespace qduo::checks
