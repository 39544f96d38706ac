#include "qduo/ring.hpp"

#include <mutex>
#include <stdexcept>

#include "qduo/kernels.hpp"

namespace qduo {

ElementSet::ElementSet(const std::vector<std::uint8_t>& flags) {
  universe_ = flags.size();
  words_.assign((universe_ + 63) / 64, 0);
  for (std::size_t e = 0; e < universe_; ++e) {
    if (flags[e]) {
      words_[e >> 6] |= std::uint64_t{1} << (e & 63u);
      members_.push_back(static_cast<Elem>(e));
    }
  }
}

ElementSet ElementSet::of(std::size_t universe, std::initializer_list<Elem> elems) {
  return of(universe, std::vector<Elem>(elems));
}

ElementSet ElementSet::of(std::size_t universe, const std::vector<Elem>& elems) {
  std::vector<std::uint8_t> flags(universe, 0);
  for (Elem e : elems) {
    if (e >= universe) throw std::out_of_range("ElementSet: element outside universe");
    flags[e] = 1;
  }
  return ElementSet(flags);
}

ElementSet ElementSet::full(std::size_t universe) {
  return ElementSet(std::vector<std::uint8_t>(universe, 1));
}

ElementSet ElementSet::empty_set(std::size_t universe) {
  return ElementSet(std::vector<std::uint8_t>(universe, 0));
}

bool ElementSet::subset_of(const ElementSet& other) const {
  for (Elem e : members_)
    if (!other.contains(e)) return false;
  return true;
}

ElementSet ElementSet::intersect(const ElementSet& other) const {
  std::vector<std::uint8_t> flags(universe_, 0);
  for (Elem e : members_)
    if (other.contains(e)) flags[e] = 1;
  return ElementSet(flags);
}

struct FiniteRing::Cache {
  std::once_flag units_once, qnil_once, jac_once, nil_once, idem_once, center_once;
  ElementSet units, qnil, jac, nil, idem, center;
  std::vector<Elem> inverse;
};

FiniteRing::FiniteRing(RingOps ops) : ops_(std::move(ops)), cache_(new Cache) {
  if (ops_.order < 2) throw std::invalid_argument("ring: order must be at least 2");
  if (ops_.zero == ops_.one) throw std::invalid_argument("ring: zero and one must differ");
  if (!ops_.add || !ops_.mul || !ops_.neg)
    throw std::invalid_argument("ring: add, mul and neg must all be supplied");
  if (!ops_.label) {
    ops_.label = [](Elem e) { return std::to_string(e); };
  }
  if (!ops_.decode || !ops_.encode || ops_.coord_names.empty())
    throw std::invalid_argument("ring: coordinate codec must be supplied");
}

FiniteRing::~FiniteRing() = default;

Elem FiniteRing::scalar_mul(std::uint64_t k, Elem a) const {
  Elem acc = ops_.zero;
  Elem base = a;
  while (k != 0) {
    if (k & 1u) acc = ops_.add(acc, base);
    k >>= 1u;
    if (k != 0) base = ops_.add(base, base);
  }
  return acc;
}

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem acc = ops_.one;
  Elem base = a;
  while (k != 0) {
    if (k & 1u) acc = ops_.mul(acc, base);
    k >>= 1u;
    if (k != 0) base = ops_.mul(base, base);
  }
  return acc;
}

const ElementSet& FiniteRing::units() const {
  std::call_once(cache_->units_once, [&] {
    cache_->inverse = kernels::inverse_table(*this);
    std::vector<std::uint8_t> flags(ops_.order, 0);
    for (std::size_t e = 0; e < ops_.order; ++e)
      if (cache_->inverse[e] != ops_.order) flags[e] = 1;
    cache_->units = ElementSet(flags);
  });
  return cache_->units;
}

Elem FiniteRing::inverse(Elem u) const {
  units();
  if (u >= ops_.order || cache_->inverse[u] == ops_.order)
    throw std::domain_error("inverse: " + label(u) + " is not a unit of " + ops_.name);
  return cache_->inverse[u];
}

const ElementSet& FiniteRing::qnil() const {
  std::call_once(cache_->qnil_once,
                 [&] { cache_->qnil = kernels::qnil_set(*this, units()); });
  return cache_->qnil;
}

const ElementSet& FiniteRing::jacobson() const {
  std::call_once(cache_->jac_once,
                 [&] { cache_->jac = kernels::jacobson_radical(*this, units()); });
  return cache_->jac;
}

const ElementSet& FiniteRing::nilpotents() const {
  std::call_once(cache_->nil_once, [&] { cache_->nil = kernels::nilpotents(*this); });
  return cache_->nil;
}

const ElementSet& FiniteRing::idempotents() const {
  std::call_once(cache_->idem_once, [&] { cache_->idem = kernels::idempotents(*this); });
  return cache_->idem;
}

const ElementSet& FiniteRing::center() const {
  std::call_once(cache_->center_once, [&] { cache_->center = kernels::center(*this); });
  return cache_->center;
}

ElementSet FiniteRing::commutant(Elem a) const { return kernels::commutant(*this, a); }

ElementSet FiniteRing::double_commutant(Elem a) const {
  return kernels::double_commutant(*this, a);
}

}  // namespace qduo
