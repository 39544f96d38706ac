#include <doctest.h>

#include "qduo/checkers.hpp"
#include "qduo/constructions.hpp"
#include "qduo/descriptor.hpp"

using namespace qduo;
using checks::PredicateVerdict;

namespace {

void check_witness_invariant(const FiniteRing& ring, const std::string& name,
                             const PredicateVerdict& v) {
  CHECK(v.holds == v.witness.empty());
  if (!v.holds) CHECK(checks::reverify(ring, name, v.witness));
}

}  // namespace

TEST_CASE("commutative rings satisfy the whole duo family") {
  auto z6 = rings::builtin("z6");
  for (const auto& name : checks::predicate_names()) {
    if (name.rfind("right-", 0) != 0 && name.rfind("left-", 0) != 0) continue;
    CAPTURE(name);
    CHECK(checks::run_predicate(*z6, name).holds);
  }
}

TEST_CASE("the 16-element local ring is not right qnil-duo, with the expected witness") {
  auto r = rings::builtin("xuxu-local16");
  auto v = checks::is_right_qnil_duo(*r);
  REQUIRE_FALSE(v.holds);
  check_witness_invariant(*r, "right-qnil-duo", v);
  // first violation in ascending (a, b): a = y, b = x
  REQUIRE(v.witness.size() == 2);
  CHECK(v.witness[0].role == "b");
  CHECK(r->label(v.witness[0].element) == "x");
  CHECK(v.witness[1].role == "a");
  CHECK(r->label(v.witness[1].element) == "y");
  // the equation x*y = 2 has no solution y*c = 2 with c quasinilpotent
  const Elem x = r->encode({0, 1, 0}), y = r->encode({0, 0, 1});
  CHECK(r->mul(x, y) == r->encode({2, 0, 0}));
  for (Elem c : r->qnil().members()) CHECK(r->mul(y, c) != r->encode({2, 0, 0}));
}

TEST_CASE("M_2(Z_2) structural predicates") {
  auto m2 = rings::builtin("m2-z2");
  auto ab = checks::is_abelian(*m2);
  CHECK_FALSE(ab.holds);
  check_witness_invariant(*m2, "abelian", ab);
  CHECK(checks::is_directly_finite(*m2).holds);
  auto loc = checks::is_local(*m2);
  CHECK_FALSE(loc.holds);
  check_witness_invariant(*m2, "local", loc);
  CHECK(checks::is_exchange(*m2).holds);
  CHECK(checks::is_clean(*m2).holds);
  CHECK(checks::has_stable_range_one(*m2).holds);
  CHECK(checks::is_regular(*m2).holds);
  auto sreg = checks::is_strongly_regular(*m2);
  CHECK_FALSE(sreg.holds);
  check_witness_invariant(*m2, "strongly-regular", sreg);
  auto qc = checks::qnil_is_central(*m2);
  CHECK_FALSE(qc.holds);
  check_witness_invariant(*m2, "central-qnil", qc);
  CHECK_FALSE(checks::is_right_qnil_duo(*m2).holds);
  CHECK_FALSE(checks::is_left_qnil_duo(*m2).holds);
}

TEST_CASE("small commutative facts") {
  auto z6 = rings::builtin("z6");
  auto loc = checks::is_local(*z6);
  CHECK_FALSE(loc.holds);  // 2 + 3 = 5 is a unit
  check_witness_invariant(*z6, "local", loc);
  CHECK(checks::is_regular(*z6).holds);
  CHECK(checks::is_strongly_regular(*z6).holds);

  auto z4 = rings::builtin("z4");
  CHECK(checks::is_local(*z4).holds);
  CHECK(checks::is_exchange(*z4).holds);
  CHECK(checks::is_clean(*z4).holds);
  CHECK(checks::has_stable_range_one(*z4).holds);
  auto reg = checks::is_regular(*z4);
  CHECK_FALSE(reg.holds);
  REQUIRE(reg.witness.size() == 1);
  CHECK(reg.witness[0].element == 2);  // 2*b*2 = 0 for every b mod 4
  check_witness_invariant(*z4, "regular", reg);
  CHECK(checks::qnil_is_central(*z4).holds);
}

TEST_CASE("central qnil across the catalog") {
  // the pattern ring turns out to be commutative, so its quasinilpotents are
  // central and it is qnil-duo
  auto d3 = rings::builtin("d3pattern-z4");
  CHECK(d3->center().size() == d3->order());
  CHECK(checks::qnil_is_central(*d3).holds);
  CHECK(checks::is_right_qnil_duo(*d3).holds);
  CHECK(checks::is_left_qnil_duo(*d3).holds);

  // a noncommutative ring with non-central quasinilpotents
  auto sp = rings::builtin("skewpower-z2xz2-swap-2");
  CHECK(sp->center().size() < sp->order());
  auto qc = checks::qnil_is_central(*sp);
  CHECK_FALSE(qc.holds);
  check_witness_invariant(*sp, "central-qnil", qc);
  CHECK_FALSE(checks::is_right_qnil_duo(*sp).holds);
}

TEST_CASE("degenerate subsets hold vacuously") {
  auto z5 = rings::builtin("z5");
  CHECK(z5->qnil().size() == 1);  // {0}
  CHECK(checks::is_right_qnil_duo(*z5).holds);
  CHECK(checks::one_sided_normality(*z5, ElementSet::empty_set(5), kernels::Side::right).holds);
  CHECK(checks::one_sided_normality(*z5, ElementSet::of(5, {0}), kernels::Side::left).holds);
}

TEST_CASE("one_sided_normality matches the named wrappers") {
  auto m2 = rings::builtin("m2-z2");
  auto direct = checks::one_sided_normality(*m2, m2->units(), kernels::Side::right);
  auto named = checks::is_right_unit_duo(*m2);
  CHECK(direct.holds == named.holds);
  if (!direct.holds) {
    CHECK(direct.witness[0].element == named.witness[0].element);
    CHECK(direct.witness[1].element == named.witness[1].element);
  }
}

TEST_CASE("witness determinism across runs and execution modes") {
  auto L = rings::builtin("l11-z4");
  auto v1 = checks::is_right_qnil_duo(*L, kernels::Exec::serial);
  auto v2 = checks::is_right_qnil_duo(*L, kernels::Exec::parallel);
  auto v3 = checks::is_right_qnil_duo(*L, kernels::Exec::parallel);
  REQUIRE_FALSE(v1.holds);
  REQUIRE(v1.witness.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(v1.witness[i].element == v2.witness[i].element);
    CHECK(v2.witness[i].element == v3.witness[i].element);
  }
  check_witness_invariant(*L, "right-qnil-duo", v1);
}

TEST_CASE("k0 kernel condition") {
  auto k0 = rings::builtin("k0-z4");
  const FiniteRing& base = *k0->bases()[0];

  SUBCASE("diagonal matrices satisfy the condition trivially when blocks are 0") {
    const Elem A = k0->encode({2, 0, 0, 2});
    REQUIRE(k0->qnil().contains(A));
    auto v = checks::k0_kernel_condition(*k0, A);
    CHECK(v.holds);
    CHECK(v.note.find("a yes") != std::string::npos);
  }
  SUBCASE("non-quasinilpotent input is a domain error") {
    CHECK_THROWS_AS(checks::k0_kernel_condition(*k0, k0->one()), std::domain_error);
  }
  SUBCASE("rings not built as K_0 are rejected") {
    auto m2 = rings::builtin("m2-z2");
    CHECK_THROWS_AS(checks::k0_kernel_condition(*m2, m2->zero()), std::domain_error);
    auto k1 = rings::builtin("k1-z2");
    const Elem n = k1->encode({0, 1, 0, 0});
    REQUIRE(k1->qnil().contains(n));
    CHECK_THROWS_AS(checks::k0_kernel_condition(*k1, n), std::domain_error);
  }
  SUBCASE("whenever the condition holds on qnil(K_0(Z_4)), the diagonal is qnil") {
    for (Elem A : k0->qnil().members()) {
      auto v = checks::k0_kernel_condition(*k0, A);
      if (!v.holds) continue;
      auto c = k0->decode(A);
      CHECK(base.qnil().contains(c[0]));
      CHECK(base.qnil().contains(c[3]));
    }
  }
}

TEST_CASE("every false verdict across the catalog carries a re-verifying witness") {
  for (const auto& name : rings::builtin_names()) {
    auto r = rings::builtin(name);
    if (r->order() > 256) continue;
    for (const auto& prop : checks::predicate_names()) {
      auto v = checks::run_predicate(*r, prop);
      CHECK(v.holds == v.witness.empty());
      if (!v.holds) {
        INFO(name << " / " << prop);
        CHECK(checks::reverify(*r, prop, v.witness));
        CHECK_FALSE(v.note.empty());
      }
    }
  }
}

TEST_CASE("unknown predicate names are rejected") {
  auto z4 = rings::builtin("z4");
  CHECK_THROWS_AS(checks::run_predicate(*z4, "right-frobnitz"), std::invalid_argument);
  CHECK(checks::is_predicate_name("right-qnil-duo"));
  CHECK_FALSE(checks::is_predicate_name("qnil"));
}

TEST_CASE("stable range search rejects oversized rings") {
  auto big = rings::zn(20000);
  CHECK_THROWS_AS(kernels::stable_range_one_violation(*big, big->units()), std::domain_error);
}
