#pragma once

// Exhaustive-search kernels. Every kernel takes an execution mode: `serial`
// is the straightforward reference loop, `parallel` runs the same scan with
// OpenMP across element indexes. Results are identical by construction
// (disjoint output slots, deterministic min-reduction for witnesses); the
// test suite and the bench tool compare the two modes.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qduo/ring.hpp"

namespace qduo::kernels {

enum class Exec { serial, parallel };

/// Process-wide default mode: parallel when built with OpenMP, overridable
/// via set_default_exec() or the QDUO_EXEC environment variable.
Exec default_exec();
void set_default_exec(Exec exec);
bool parallel_available();
int thread_count();
const char* to_string(Exec exec);

struct AxiomViolation {
  std::string law;          // e.g. "mul-associativity"
  std::vector<Elem> elems;  // the violating tuple, smallest first
};

struct AxiomReport {
  enum class Status { verified, violation, unchecked };
  Status status = Status::unchecked;
  std::optional<AxiomViolation> violation;
  std::string note;  // reason when unchecked, law summary when violated
  bool ok() const { return status == Status::verified; }
};

/// Scans all ring axioms (O(order^3)). Orders above `cap` come back as
/// `unchecked`, never as a silent pass.
AxiomReport verify_axioms(const FiniteRing& ring, std::size_t cap,
                          Exec exec = default_exec());

ElementSet units(const FiniteRing& ring, Exec exec = default_exec());
/// inverse_table()[u] is the two-sided inverse of u, or ring.order() when u
/// is not a unit.
std::vector<Elem> inverse_table(const FiniteRing& ring, Exec exec = default_exec());

ElementSet qnil_set(const FiniteRing& ring, const ElementSet& units,
                    Exec exec = default_exec());
ElementSet jacobson_radical(const FiniteRing& ring, const ElementSet& units,
                            Exec exec = default_exec());
ElementSet nilpotents(const FiniteRing& ring, Exec exec = default_exec());
ElementSet idempotents(const FiniteRing& ring, Exec exec = default_exec());
ElementSet center(const FiniteRing& ring, Exec exec = default_exec());

ElementSet commutant(const FiniteRing& ring, Elem a);
ElementSet double_commutant(const FiniteRing& ring, Elem a);

enum class Side { right, left };
const char* to_string(Side side);

/// Right: subset * a <= a * subset for every a; left is the mirror image.
/// Returns the first violating pair in ascending (a, b) order, where b is the
/// subset member with b*a outside a*subset (resp. a*b outside subset*a).
std::optional<std::array<Elem, 2>> normality_violation(const FiniteRing& ring,
                                                       const ElementSet& subset,
                                                       Side side,
                                                       Exec exec = default_exec());

/// First (e, r) with e idempotent and er != re.
std::optional<std::array<Elem, 2>> abelian_violation(const FiniteRing& ring,
                                                     const ElementSet& idem,
                                                     Exec exec = default_exec());

/// First (a, b) with ab = 1 but ba != 1.
std::optional<std::array<Elem, 2>> directly_finite_violation(const FiniteRing& ring,
                                                             Exec exec = default_exec());

/// First pair of non-units whose sum is a unit.
std::optional<std::array<Elem, 2>> local_violation(const FiniteRing& ring,
                                                   const ElementSet& units,
                                                   Exec exec = default_exec());

/// First x with no idempotent e such that e in Rx and 1-e in R(1-x).
std::optional<Elem> exchange_violation(const FiniteRing& ring, const ElementSet& idem,
                                       Exec exec = default_exec());

/// First x that is not unit + idempotent.
std::optional<Elem> clean_violation(const FiniteRing& ring, const ElementSet& units,
                                    const ElementSet& idem, Exec exec = default_exec());

/// First (a, b) with aR + bR = R but a + by never a unit. Requires
/// order <= 16384 (bit-matrix working set); throws std::domain_error above.
std::optional<std::array<Elem, 2>> stable_range_one_violation(const FiniteRing& ring,
                                                              const ElementSet& units,
                                                              Exec exec = default_exec());

/// First a with no b satisfying aba = a.
std::optional<Elem> regular_violation(const FiniteRing& ring, Exec exec = default_exec());
/// First a with no b satisfying a*a*b = a.
std::optional<Elem> strongly_regular_violation(const FiniteRing& ring,
                                               Exec exec = default_exec());

}  // namespace qduo::kernels
