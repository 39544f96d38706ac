#include <doctest.h>

#include <thread>

#include "qduo/constructions.hpp"
#include "qduo/descriptor.hpp"
#include "qduo/kernels.hpp"
#include "reference_oracle.hpp"

using namespace qduo;

TEST_CASE("element sets are deterministic and order-checked") {
  auto s = ElementSet::of(8, {5, 1, 3});
  CHECK(s.size() == 3);
  CHECK(s.members() == std::vector<Elem>{1, 3, 5});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK_THROWS_AS(ElementSet::of(4, {7}), std::out_of_range);
  CHECK(ElementSet::full(4).size() == 4);
  CHECK(s.intersect(ElementSet::of(8, {3, 4, 5})) == ElementSet::of(8, {3, 5}));
  CHECK(ElementSet::of(8, {3}).subset_of(s));
}

TEST_CASE("axiom verification") {
  SUBCASE("Z_4 passes") {
    CHECK(kernels::verify_axioms(*rings::zn(4), 4096).ok());
  }
  SUBCASE("K_0(Z_2) passes the full 16^3 scan") {
    CHECK(kernels::verify_axioms(*rings::builtin("k0-z2"), 4096).ok());
  }
  SUBCASE("a corrupted product table is rejected naming associativity") {
    auto t = rings::export_tables(*rings::zn(4));
    t.mul[3][3] = 2;  // 3*3 = 1 in Z_4
    try {
      rings::table_ring(t.add, t.mul);
      FAIL("corrupted table accepted");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    }
  }
  SUBCASE("cap exceeded reports unchecked, never a silent pass") {
    auto rep = kernels::verify_axioms(*rings::zn(5000), 4096);
    CHECK(rep.status == kernels::AxiomReport::Status::unchecked);
    CHECK(rep.note.find("cap") != std::string::npos);
    CHECK_FALSE(rep.ok());
  }
}

TEST_CASE("units and inverses") {
  auto z4 = rings::zn(4);
  CHECK(z4->units() == ElementSet::of(4, {1, 3}));
  CHECK(z4->inverse(3) == 3);
  CHECK_THROWS_AS(z4->inverse(2), std::domain_error);

  auto xu = rings::xuxu_local16();
  CHECK(xu->units().size() == 8);
  for (Elem u : xu->units().members()) CHECK((xu->decode(u)[0] % 2) == 1);

  // L_(s,t): invertible iff the three diagonal entries are invertible
  auto L = rings::builtin("l11-z4");
  const auto& zu = L->bases()[0]->units();
  for (Elem A : L->units().members()) {
    auto c = L->decode(A);
    CHECK(zu.contains(c[0]));
    CHECK(zu.contains(c[2]));
    CHECK(zu.contains(c[4]));
  }
  CHECK(L->units().size() == 128);
}

TEST_CASE("commutant and double commutant") {
  auto z6 = rings::zn(6);
  for (Elem a = 0; a < 6; ++a) CHECK(z6->commutant(a).size() == 6);

  auto m2 = rings::builtin("m2-z2");
  const Elem e11 = m2->encode({1, 0, 0, 0});
  const auto comm = m2->commutant(e11);
  const auto comm2 = m2->double_commutant(e11);
  CHECK(comm.size() == 4);
  CHECK(comm2.size() == 4);
  for (Elem b : comm.members()) {
    auto c = m2->decode(b);
    CHECK(c[1] == 0);  // diagonal matrices only
    CHECK(c[2] == 0);
  }
  CHECK(comm2 == comm);
  CHECK(comm2.subset_of(comm));
  for (Elem must : {m2->zero(), m2->one(), e11}) {
    CHECK(comm.contains(must));
    CHECK(comm2.contains(must));
  }
}

TEST_CASE("qnil sets") {
  CHECK(rings::zn(5)->qnil() == ElementSet::of(5, {0}));
  CHECK(rings::xuxu_local16()->qnil() == ElementSet::of(16, {0, 2, 4, 6, 8, 10, 12, 14}));

  auto m2 = rings::builtin("m2-z2");
  CHECK(m2->qnil() == m2->nilpotents());
  CHECK(m2->qnil().size() == 4);
  CHECK(m2->qnil().contains(m2->encode({0, 1, 0, 0})));  // E12
  CHECK(m2->qnil().contains(m2->encode({0, 0, 1, 0})));  // E21
  CHECK(m2->qnil().contains(m2->encode({1, 1, 1, 1})));
}

TEST_CASE("jacobson radical") {
  CHECK(rings::zn(4)->jacobson() == ElementSet::of(4, {0, 2}));

  auto m2 = rings::builtin("m2-z2");
  CHECK(m2->jacobson() == ElementSet::of(16, {0}));
  const Elem e12 = m2->encode({0, 1, 0, 0});
  CHECK(m2->qnil().contains(e12));
  CHECK_FALSE(m2->jacobson().contains(e12));

  auto xu = rings::xuxu_local16();
  CHECK(xu->jacobson() == xu->qnil());
}

TEST_CASE("nilpotents, idempotents, center") {
  auto z4 = rings::zn(4);
  CHECK(z4->nilpotents() == ElementSet::of(4, {0, 2}));
  CHECK(z4->idempotents() == ElementSet::of(4, {0, 1}));
  CHECK(z4->center().size() == 4);

  auto m2 = rings::builtin("m2-z2");
  CHECK(m2->nilpotents().size() == 4);
  CHECK(m2->idempotents().size() == 8);
  CHECK(m2->center() == ElementSet::of(16, {m2->zero(), m2->one()}));

  auto k0 = rings::builtin("k0-z2");
  CHECK(k0->center().size() == 2);
  for (Elem c : k0->center().members()) {
    auto v = k0->decode(c);
    CHECK(v[0] == v[3]);
    CHECK(v[1] == 0);
    CHECK(v[2] == 0);
  }
}

TEST_CASE("qnil invariants on a sample of rings") {
  for (const char* id : {"z4", "z6", "m2-z2", "xuxu-local16", "k0-z2", "d2-z4", "v3-z2"}) {
    CAPTURE(id);
    auto r = rings::builtin(id);
    const auto& q = r->qnil();
    const auto& u = r->units();
    CHECK(r->jacobson().subset_of(q));
    CHECK(r->nilpotents().subset_of(q));
    CHECK(q.contains(r->zero()));
    CHECK_FALSE(q.contains(r->one()));
    for (Elem e : q.members()) CHECK_FALSE(u.contains(e));

    // power closure via the contrapositive
    for (Elem a = 0; a < r->order(); ++a) {
      if (q.contains(a)) continue;
      Elem p = a;
      for (std::size_t k = 1; k <= r->order(); ++k) {
        CHECK_FALSE(q.contains(p));
        p = r->mul(p, a);
      }
    }
    // ab/ba swap
    for (Elem a = 0; a < r->order(); ++a)
      for (Elem b = 0; b < r->order(); ++b)
        CHECK(q.contains(r->mul(a, b)) == q.contains(r->mul(b, a)));
    // conjugation
    for (Elem a : q.members())
      for (Elem v : u.members()) CHECK(q.contains(r->mul(r->mul(r->inverse(v), a), v)));
    // idempotent defect
    for (Elem e : r->idempotents().members())
      for (Elem x = 0; x < r->order(); ++x) {
        const Elem exe = r->mul(r->mul(e, x), e);
        CHECK(q.contains(r->sub(r->mul(e, x), exe)));
        CHECK(q.contains(r->sub(r->mul(x, e), exe)));
      }
  }
}

TEST_CASE("local partition on local rings") {
  for (const char* id : {"z4", "z8", "z9", "xuxu-local16", "v3-z2"}) {
    CAPTURE(id);
    auto r = rings::builtin(id);
    for (Elem e = 0; e < r->order(); ++e)
      CHECK(r->units().contains(e) != r->qnil().contains(e));
  }
}

TEST_CASE("memoized sets are stable across calls") {
  auto r = rings::builtin("d2-z4");
  const auto first = r->qnil().members();
  CHECK(r->qnil().members() == first);
  const auto units1 = kernels::units(*r, kernels::Exec::serial);
  const auto units2 = kernels::units(*r, kernels::Exec::serial);
  CHECK(units1 == units2);
  CHECK(units1 == r->units());
}

TEST_CASE("concurrent readers observe identical derived sets") {
  auto r = rings::builtin("h13-z4");
  std::vector<std::vector<Elem>> seen(4);
  std::vector<std::thread> workers;
  for (int i = 0; i < 4; ++i)
    workers.emplace_back([&, i] { seen[i] = r->qnil().members(); });
  for (auto& w : workers) w.join();
  for (int i = 1; i < 4; ++i) CHECK(seen[i] == seen[0]);
  CHECK(seen[0] == r->qnil().members());
}
