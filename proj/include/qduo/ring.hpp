#pragma once

// Core model: a finite unital ring presented as arithmetic closures on the
// element indexes 0..order-1, plus lazily memoized derived sets (units,
// quasinilpotents, Jacobson radical, nilpotents, idempotents, center).
//
// Rings are immutable once constructed. Derived sets follow a compute-once /
// publish contract: concurrent readers may block on the first computation but
// always observe identical member lists afterwards.

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qduo {

/// Element index inside a ring. Elements are identified by their index only;
/// what an index means is defined by the construction that built the ring.
using Elem = std::uint32_t;

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A set of element indexes of one ring, with O(1) membership tests and
/// deterministic ascending iteration order.
class ElementSet {
 public:
  ElementSet() = default;

  /// Build from per-element flags; flags.size() is the universe size.
  explicit ElementSet(const std::vector<std::uint8_t>& flags);

  static ElementSet of(std::size_t universe, std::initializer_list<Elem> elems);
  static ElementSet of(std::size_t universe, const std::vector<Elem>& elems);
  static ElementSet full(std::size_t universe);
  static ElementSet empty_set(std::size_t universe);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(Elem e) const {
    return e < universe_ && ((words_[e >> 6] >> (e & 63u)) & 1u) != 0;
  }

  /// Members in ascending index order.
  const std::vector<Elem>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool subset_of(const ElementSet& other) const;
  ElementSet intersect(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const {
    return universe_ == other.universe_ && members_ == other.members_;
  }
  bool operator!=(const ElementSet& other) const { return !(*this == other); }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<Elem> members_;
};

/// Everything a construction supplies to realize a ring. add/mul/neg must be
/// total on 0..order-1 and closed; (order, add, zero, neg) an abelian group,
/// mul associative with two-sided identity `one` != `zero`, distributivity on
/// both sides. kernels::verify_axioms checks all of it exhaustively for
/// orders under the axiom cap; table-backed rings are always scanned.
struct RingOps {
  std::size_t order = 0;
  Elem zero = 0;
  Elem one = 0;
  std::function<Elem(Elem, Elem)> add;
  std::function<Elem(Elem, Elem)> mul;
  std::function<Elem(Elem)> neg;
  std::function<std::string(Elem)> label;

  std::string name;             // display name, e.g. "L_(1,1)(Z_4)"
  std::string kind;             // construction kind, e.g. "lst"
  std::string descriptor_json;  // canonical serialized recipe (provenance)
  std::vector<RingPtr> bases;   // base rings, outermost first

  // Construction-native coordinates. decode/encode round-trip for every
  // element; encode validates and throws std::invalid_argument on bad input.
  std::vector<std::string> coord_names;
  std::function<std::vector<Elem>(Elem)> decode;
  std::function<Elem(std::span<const Elem>)> encode;
};

class FiniteRing {
 public:
  explicit FiniteRing(RingOps ops);
  ~FiniteRing();
  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t order() const { return ops_.order; }
  Elem zero() const { return ops_.zero; }
  Elem one() const { return ops_.one; }

  Elem add(Elem a, Elem b) const { return ops_.add(a, b); }
  Elem mul(Elem a, Elem b) const { return ops_.mul(a, b); }
  Elem neg(Elem a) const { return ops_.neg(a); }
  Elem sub(Elem a, Elem b) const { return ops_.add(a, ops_.neg(b)); }

  /// k * 1 under repeated addition.
  Elem scalar(std::uint64_t k) const { return scalar_mul(k, ops_.one); }
  /// k * a under repeated addition (binary doubling).
  Elem scalar_mul(std::uint64_t k, Elem a) const;
  /// a^k with a^0 = 1 (binary powering).
  Elem pow(Elem a, std::uint64_t k) const;

  std::string label(Elem e) const { return ops_.label(e); }
  const std::string& name() const { return ops_.name; }
  const std::string& kind() const { return ops_.kind; }
  const std::string& descriptor_json() const { return ops_.descriptor_json; }
  const std::vector<RingPtr>& bases() const { return ops_.bases; }

  const std::vector<std::string>& coord_names() const { return ops_.coord_names; }
  std::vector<Elem> decode(Elem e) const { return ops_.decode(e); }
  Elem encode(std::span<const Elem> coords) const { return ops_.encode(coords); }
  Elem encode(std::initializer_list<Elem> coords) const {
    return ops_.encode(std::span<const Elem>(coords.begin(), coords.size()));
  }

  const RingOps& raw() const { return ops_; }

  // Derived sets, memoized after first computation.
  const ElementSet& units() const;
  /// Two-sided inverse of u. Throws std::domain_error when u is not a unit.
  Elem inverse(Elem u) const;
  /// {a : 1 + ax is a unit for every x commuting with a}.
  const ElementSet& qnil() const;
  /// {a : 1 + ax is a unit for every x}.
  const ElementSet& jacobson() const;
  const ElementSet& nilpotents() const;
  const ElementSet& idempotents() const;
  const ElementSet& center() const;

  /// {b : ab = ba}. Not memoized; O(order) per call.
  ElementSet commutant(Elem a) const;
  /// {b : bc = cb for every c in commutant(a)}.
  ElementSet double_commutant(Elem a) const;

 private:
  RingOps ops_;
  struct Cache;
  mutable std::unique_ptr<Cache> cache_;
};

}  // namespace qduo
