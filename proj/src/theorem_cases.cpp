#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "qduo/constructions.hpp"
#include "qduo/theorem_suite.hpp"

// Case registry. Every case runs exhaustively over its input instances;
// assertion and implication cases decide the suite outcome, recorded cases
// only log what was measured.

namespace qduo::suite {

namespace {

using checks::PredicateVerdict;
using nlohmann::json;

CaseResult pass(std::string detail = "") {
  CaseResult r;
  r.outcome = Outcome::pass;
  r.detail = std::move(detail);
  return r;
}

CaseResult fail(std::string detail, json witness = nullptr) {
  CaseResult r;
  r.outcome = Outcome::fail;
  r.detail = std::move(detail);
  r.witness = std::move(witness);
  return r;
}

CaseResult recorded(std::string detail) {
  CaseResult r;
  r.outcome = Outcome::recorded;
  r.detail = std::move(detail);
  return r;
}

json elem_json(const FiniteRing& ring, const char* role, Elem e) {
  return json{{"role", role}, {"ring", ring.name()}, {"element", ring.label(e)}};
}

json witness_from_verdict(const FiniteRing& ring, const PredicateVerdict& v) {
  json parts = json::array();
  for (const auto& p : v.witness) parts.push_back(elem_json(ring, p.role.c_str(), p.element));
  return json{{"parts", parts}, {"note", v.note}};
}

struct Violation {
  std::string detail;
  json witness = nullptr;
};

// Applies fn to every requested instance; first violation fails the case.
template <class Fn>
CaseResult over_rings(const CaseContext& ctx, const std::vector<std::string>& ids, Fn&& fn,
                      const std::string& what = "") {
  std::size_t count = 0;
  for (const auto& id : ids) {
    RingPtr ring = ctx.need(id);
    if (auto v = fn(id, *ring)) return fail(id + ": " + v->detail, v->witness);
    ++count;
  }
  return pass("verified on " + std::to_string(count) + " instance(s)" +
              (what.empty() ? "" : "; " + what));
}

template <class Fn>
CaseResult over_catalog(const CaseContext& ctx, Fn&& fn, std::string extra = "") {
  std::size_t count = 0;
  for (const auto& [id, ring] : ctx.catalog()) {
    if (auto v = fn(id, *ring)) return fail(id + ": " + v->detail, v->witness);
    ++count;
  }
  return pass("verified on " + std::to_string(count) + " catalog ring(s)" +
              (extra.empty() ? "" : "; " + extra));
}

// Implication over instances: pass iff (not H) or C on each; counts H.
template <class Hyp, class Con>
CaseResult implication(const CaseContext& ctx, const std::vector<std::string>& ids,
                       Hyp&& hyp, Con&& con, const char* conclusion_text) {
  std::size_t h_count = 0;
  std::vector<std::string> h_ids;
  std::vector<std::pair<std::string, RingPtr>> instances;
  if (ids.size() == 1 && ids[0] == "<catalog>") {
    instances = ctx.catalog();
  } else {
    for (const auto& id : ids) instances.emplace_back(id, ctx.need(id));
  }
  for (const auto& [id, ring] : instances) {
    if (!hyp(*ring)) continue;
    ++h_count;
    h_ids.push_back(id);
    if (auto v = con(*ring)) {
      CaseResult r = fail(id + ": hypothesis holds but " + std::string(conclusion_text) +
                              " fails: " + v->detail,
                          v->witness);
      r.hypothesis_count = h_count;
      return r;
    }
  }
  std::ostringstream os;
  os << "hypothesis held on " << h_count << " of " << instances.size() << " instance(s)";
  if (!h_ids.empty()) {
    os << " (";
    for (std::size_t i = 0; i < h_ids.size(); ++i) os << (i ? ", " : "") << h_ids[i];
    os << "); conclusion verified on those";
  }
  CaseResult r = pass(os.str());
  r.hypothesis_count = h_count;
  return r;
}

std::optional<Violation> verdict_violation(const FiniteRing& ring, const PredicateVerdict& v,
                                           const char* what) {
  if (v.holds) return std::nullopt;
  return Violation{std::string(what) + ": " + v.note, witness_from_verdict(ring, v)};
}

bool square_zero_qnil(const FiniteRing& ring) {
  const auto& q = ring.qnil();
  for (Elem p : q.members())
    for (Elem r : q.members())
      if (ring.mul(p, r) != ring.zero()) return false;
  return true;
}

// Diagonal (a, d, f) of an element of an hst-built ring.
std::array<Elem, 3> hst_diag(const FiniteRing& h, Elem s, Elem t, Elem A) {
  const FiniteRing& base = *h.bases()[0];
  const auto c = h.decode(A);
  const Elem d = base.sub(c[0], base.mul(s, c[1]));
  const Elem f = base.sub(d, base.mul(t, c[2]));
  return {c[0], d, f};
}

std::pair<Elem, Elem> hst_twists(const FiniteRing& h) {
  const FiniteRing& base = *h.bases()[0];
  const json d = json::parse(h.descriptor_json());
  auto parse = [&](const json& v) {
    std::vector<Elem> coords;
    for (const auto& x : v) coords.push_back(x.get<Elem>());
    return base.encode(coords);
  };
  return {parse(d.at("s")), parse(d.at("t"))};
}

std::vector<TheoremCase>& mutable_registry() {
  static std::vector<TheoremCase> cases;
  return cases;
}

void add(TheoremCase c) { mutable_registry().push_back(std::move(c)); }

const std::vector<std::string> kCatalogInput{"<catalog>"};

// ---------------------------------------------------------------------------

void register_core_cases() {
  add({"CAT.2-axioms", "ring model", "all ring axioms hold on catalog instances up to order 256",
       CaseKind::assertion, kCatalogInput, [](const CaseContext& ctx) {
         std::size_t checked = 0, trusted = 0;
         for (const auto& [id, ring] : ctx.catalog()) {
           if (ring->order() > 256) {
             ++trusted;
             continue;
           }
           auto rep = kernels::verify_axioms(*ring, 256, ctx.exec);
           if (!rep.ok()) {
             json w = nullptr;
             if (rep.violation) {
               w = json{{"law", rep.violation->law}, {"elements", rep.violation->elems}};
             }
             return fail(id + ": axiom scan: " + rep.note, w);
           }
           ++checked;
         }
         return pass("scanned " + std::to_string(checked) + " rings exhaustively; " +
                     std::to_string(trusted) + " larger rings trusted by construction");
       }});

  add({"CAT.3-core-invariants", "qnil basics",
       "J and N lie in qnil, qnil avoids units and contains 0 but not 1, J is an ideal, "
       "the center is closed, double commutants sit inside commutants",
       CaseKind::assertion, kCatalogInput, [](const CaseContext& ctx) {
         return over_catalog(ctx, [&](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
           const auto& q = r.qnil();
           const auto& u = r.units();
           const auto& j = r.jacobson();
           const auto& nil = r.nilpotents();
           if (!j.subset_of(q)) return Violation{"J(R) is not contained in qnil"};
           if (!nil.subset_of(q)) return Violation{"N(R) is not contained in qnil"};
           for (Elem e : q.members())
             if (u.contains(e)) return Violation{"unit " + r.label(e) + " in qnil"};
           if (!q.contains(r.zero())) return Violation{"0 not in qnil"};
           if (q.contains(r.one())) return Violation{"1 in qnil"};
           if (!r.idempotents().contains(r.zero()) || !r.idempotents().contains(r.one()))
             return Violation{"Id(R) is missing 0 or 1"};
           for (Elem a : j.members()) {
             for (Elem b : j.members())
               if (!j.contains(r.add(a, b)))
                 return Violation{"J not closed under addition at " + r.label(a) + " + " + r.label(b)};
             for (Elem x = 0; x < r.order(); ++x) {
               if (!j.contains(r.mul(x, a)) || !j.contains(r.mul(a, x)))
                 return Violation{"J not an ideal at " + r.label(a) + ", " + r.label(x)};
             }
           }
           const auto& c = r.center();
           for (Elem x : c.members())
             for (Elem y : c.members())
               if (!c.contains(r.add(x, y)) || !c.contains(r.mul(x, y)))
                 return Violation{"center not closed at " + r.label(x) + ", " + r.label(y)};
           // double commutant containment, sampled for large rings
           std::vector<Elem> sample;
           if (r.order() <= 128) {
             for (Elem a = 0; a < r.order(); ++a) sample.push_back(a);
           } else {
             for (Elem a = 0; a < 16; ++a) sample.push_back(a);
             for (Elem a : q.members()) {
               sample.push_back(a);
               if (sample.size() >= 48) break;
             }
           }
           for (Elem a : sample) {
             const auto comm = r.commutant(a);
             const auto comm2 = r.double_commutant(a);
             if (!comm2.subset_of(comm))
               return Violation{"comm^2(a) not inside comm(a) for a = " + r.label(a)};
             for (Elem must : {r.zero(), r.one(), a})
               if (!comm.contains(must) || !comm2.contains(must))
                 return Violation{"comm/comm^2 missing 0, 1 or a for a = " + r.label(a)};
           }
           return std::nullopt;
         });
       }});

  add({"P2.2.1-power-closure", "Prop 2.2(1)",
       "if some power of a is quasinilpotent then so is a (checked via the contrapositive)",
       CaseKind::assertion, kCatalogInput, [](const CaseContext& ctx) {
         return over_catalog(ctx, [](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
           const auto& q = r.qnil();
           for (Elem a = 0; a < r.order(); ++a) {
             if (q.contains(a)) continue;
             Elem p = a;
             for (std::size_t k = 1; k <= r.order(); ++k) {
               if (q.contains(p))
                 return Violation{"a = " + r.label(a) + " is not qnil but a^" + std::to_string(k) +
                                  " = " + r.label(p) + " is",
                                  json{{"a", r.label(a)}, {"k", k}}};
               p = r.mul(p, a);
             }
           }
           return std::nullopt;
         });
       }});

  add({"P2.2.2-local-partition", "Prop 2.2(2)",
       "a local ring splits as the disjoint union of its units and its quasinilpotents",
       CaseKind::assertion, kCatalogInput, [](const CaseContext& ctx) {
         std::vector<std::string> locals;
         for (const auto& [id, ring] : ctx.catalog()) {
           if (!checks::is_local(*ring, ctx.exec).holds) continue;
           locals.push_back(id);
           const auto& u = ring->units();
           const auto& q = ring->qnil();
           for (Elem e = 0; e < ring->order(); ++e) {
             const bool in_u = u.contains(e), in_q = q.contains(e);
             if (in_u == in_q)
               return fail(id + ": element " + ring->label(e) +
                           (in_u ? " is both a unit and quasinilpotent" : " is neither"));
           }
         }
         std::string names;
         for (const auto& s : locals) names += (names.empty() ? "" : ", ") + s;
         return pass("partition verified on " + std::to_string(locals.size()) +
                     " local rings (" + names + ")");
       }});

  add({"P2.2.3-qnil-swap", "Prop 2.2(3)", "ab is quasinilpotent exactly when ba is",
       CaseKind::assertion, kCatalogInput, [](const CaseContext& ctx) {
         return over_catalog(ctx, [](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
           const auto& q = r.qnil();
           for (Elem a = 0; a < r.order(); ++a)
             for (Elem b = 0; b < r.order(); ++b)
               if (q.contains(r.mul(a, b)) != q.contains(r.mul(b, a)))
                 return Violation{"swap fails at a = " + r.label(a) + ", b = " + r.label(b),
                                  json{{"a", r.label(a)}, {"b", r.label(b)}}};
           return std::nullopt;
         });
       }});

  add({"P2.2.4-qnil-conjugation", "Prop 2.2(4)",
       "conjugating a quasinilpotent by a unit stays quasinilpotent", CaseKind::assertion,
       kCatalogInput, [](const CaseContext& ctx) {
         return over_catalog(ctx, [](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
           const auto& q = r.qnil();
           for (Elem a : q.members())
             for (Elem u : r.units().members()) {
               const Elem conj = r.mul(r.mul(r.inverse(u), a), u);
               if (!q.contains(conj))
                 return Violation{"u^-1 a u = " + r.label(conj) + " leaves qnil for a = " +
                                  r.label(a) + ", u = " + r.label(u)};
             }
           return std::nullopt;
         });
       }});

  add({"P2.2.5-corner-qnil", "Prop 2.2(5)",
       "for every idempotent e != 0, qnil(eRe) = eRe intersect qnil(R)", CaseKind::assertion,
       kCatalogInput, [](const CaseContext& ctx) {
         std::size_t corners = 0;
         for (const auto& [id, ring] : ctx.catalog()) {
           for (Elem e : ring->idempotents().members()) {
             if (e == ring->zero()) continue;  // zero ring, outside the model
             RingPtr c = rings::corner(ring, e);
             ++corners;
             const auto& qc = c->qnil();
             const auto& qr = ring->qnil();
             for (Elem i = 0; i < c->order(); ++i) {
               const Elem rep = c->decode(i)[0];
               if (qc.contains(i) != qr.contains(rep))
                 return fail(id + ": corner at e = " + ring->label(e) + " disagrees at " +
                             ring->label(rep));
             }
           }
         }
         return pass("verified " + std::to_string(corners) + " corner rings");
       }});
}

void register_section2_cases() {
  add({"L2.3.1-u2-triangular-qnil", "Lemma 2.3(1)",
       "upper triangular 2x2 matrices with quasinilpotent diagonal are quasinilpotent",
       CaseKind::assertion, {"u2-z2", "u2-z4"}, [](const CaseContext& ctx) {
         return over_rings(ctx, {"u2-z2", "u2-z4"},
                           [](const std::string&, const FiniteRing& u2) -> std::optional<Violation> {
                             const FiniteRing& base = *u2.bases()[0];
                             for (Elem a : base.qnil().members())
                               for (Elem c : base.qnil().members())
                                 for (Elem b = 0; b < base.order(); ++b) {
                                   const Elem A = u2.encode({a, b, c});
                                   if (!u2.qnil().contains(A))
                                     return Violation{"matrix " + u2.label(A) + " escapes qnil"};
                                 }
                             return std::nullopt;
                           });
       }});

  add({"L2.3.2-d2-qnil", "Lemma 2.3(2)",
       "[[a,b],[0,a]] with a quasinilpotent is quasinilpotent in D_2", CaseKind::assertion,
       {"d2-z4"}, [](const CaseContext& ctx) {
         return over_rings(ctx, {"d2-z4"},
                           [](const std::string&, const FiniteRing& d2) -> std::optional<Violation> {
                             const FiniteRing& base = *d2.bases()[0];
                             for (Elem a : base.qnil().members())
                               for (Elem b = 0; b < base.order(); ++b) {
                                 const Elem A = d2.encode({a, b});
                                 if (!d2.qnil().contains(A))
                                   return Violation{"matrix " + d2.label(A) + " escapes qnil"};
                               }
                             return std::nullopt;
                           });
       }});

  add({"L2.3.3-d2-extraction", "Lemma 2.3(3)",
       "if [[a,b],[0,a]] is quasinilpotent and b double-commutes with a, then a is quasinilpotent",
       CaseKind::assertion, {"d2-z4"}, [](const CaseContext& ctx) {
         return over_rings(ctx, {"d2-z4"},
                           [](const std::string&, const FiniteRing& d2) -> std::optional<Violation> {
                             const FiniteRing& base = *d2.bases()[0];
                             for (Elem A : d2.qnil().members()) {
                               const auto c = d2.decode(A);
                               if (!base.double_commutant(c[0]).contains(c[1])) continue;
                               if (!base.qnil().contains(c[0]))
                                 return Violation{"A = " + d2.label(A) +
                                                  " is qnil with b in comm^2(a), yet a = " +
                                                  base.label(c[0]) + " is not"};
                             }
                             return std::nullopt;
                           });
       }});

  add({"P2.4-products", "Prop 2.4",
       "the quasinilpotents of a finite product are the componentwise quasinilpotents",
       CaseKind::assertion, {"z2xz3", "z4xz4", "t2-z4-z4"}, [](const CaseContext& ctx) {
         return over_rings(ctx, {"z2xz3", "z4xz4", "t2-z4-z4"},
                           [](const std::string&, const FiniteRing& p) -> std::optional<Violation> {
                             const auto& factors = p.bases();
                             for (Elem e = 0; e < p.order(); ++e) {
                               const auto c = p.decode(e);
                               bool all = true;
                               for (std::size_t i = 0; i < factors.size(); ++i)
                                 all = all && factors[i]->qnil().contains(c[i]);
                               if (p.qnil().contains(e) != all)
                                 return Violation{"product rule fails at " + p.label(e)};
                             }
                             return std::nullopt;
                           });
       }});

  const std::vector<std::string> dorroh_ids{"dorroh-m2z2-z2", "dorroh-z4-z4"};

  add({"L2.5.1-dorroh-commutant", "Lemma 2.5(1)",
       "(c,d) commutes with (a,b) in I(R,S) exactly when c commutes with a in R",
       CaseKind::assertion, dorroh_ids, [dorroh_ids](const CaseContext& ctx) {
         return over_rings(ctx, dorroh_ids,
                           [](const std::string&, const FiniteRing& I) -> std::optional<Violation> {
                             const FiniteRing& R = *I.bases()[0];
                             for (Elem x = 0; x < I.order(); ++x)
                               for (Elem y = 0; y < I.order(); ++y) {
                                 const bool comm = I.mul(x, y) == I.mul(y, x);
                                 const Elem a = I.decode(x)[0], c = I.decode(y)[0];
                                 if (comm != (R.mul(a, c) == R.mul(c, a)))
                                   return Violation{"commutant mismatch at " + I.label(x) + ", " +
                                                    I.label(y)};
                               }
                             return std::nullopt;
                           });
       }});

  add({"L2.5.2-dorroh-inverse", "Lemma 2.5(2)",
       "(a,b)(c,d) = (0,1) = (c,d)(a,b) exactly when (a+b)(c+d) = 1 = (c+d)(a+b) and bd = 1",
       CaseKind::assertion, dorroh_ids, [dorroh_ids](const CaseContext& ctx) {
         return over_rings(ctx, dorroh_ids,
                           [](const std::string&, const FiniteRing& I) -> std::optional<Violation> {
                             const FiniteRing& R = *I.bases()[0];
                             const Elem ns = static_cast<Elem>(I.order() / R.order());
                             for (Elem x = 0; x < I.order(); ++x)
                               for (Elem y = 0; y < I.order(); ++y) {
                                 const bool inv = I.mul(x, y) == I.one() && I.mul(y, x) == I.one();
                                 const auto xc = I.decode(x), yc = I.decode(y);
                                 const Elem ab = R.add(xc[0], R.scalar(xc[1]));
                                 const Elem cd = R.add(yc[0], R.scalar(yc[1]));
                                 const bool rhs = R.mul(ab, cd) == R.one() &&
                                                  R.mul(cd, ab) == R.one() &&
                                                  (xc[1] * yc[1]) % ns == 1;
                                 if (inv != rhs)
                                   return Violation{"inverse criterion fails at " + I.label(x) +
                                                    ", " + I.label(y)};
                               }
                             return std::nullopt;
                           });
       }});

  add({"P2.6.1-dorroh-rqnil", "Prop 2.6(1)",
       "(R,0) meets the quasinilpotents of I(R,S) exactly in the quasinilpotents of R",
       CaseKind::assertion, dorroh_ids, [dorroh_ids](const CaseContext& ctx) {
         return over_rings(ctx, dorroh_ids,
                           [](const std::string&, const FiniteRing& I) -> std::optional<Violation> {
                             const FiniteRing& R = *I.bases()[0];
                             for (Elem x = 0; x < R.order(); ++x) {
                               const Elem ix = I.encode({x, 0});
                               if (R.qnil().contains(x) != I.qnil().contains(ix))
                                 return Violation{"(x,0) status differs for x = " + R.label(x)};
                             }
                             return std::nullopt;
                           });
       }});

  add({"P2.6.2-dorroh-sqnil", "Prop 2.6(2)",
       "(0,s) quasinilpotent in I(R,S) forces s quasinilpotent in S", CaseKind::assertion,
       dorroh_ids, [dorroh_ids](const CaseContext& ctx) {
         return over_rings(ctx, dorroh_ids,
                           [](const std::string&, const FiniteRing& I) -> std::optional<Violation> {
                             const FiniteRing& R = *I.bases()[0];
                             const unsigned ns = static_cast<unsigned>(I.order() / R.order());
                             RingPtr S = rings::zn(ns);
                             for (Elem s = 0; s < ns; ++s) {
                               const Elem is = I.encode({R.zero(), s});
                               if (I.qnil().contains(is) && !S->qnil().contains(s))
                                 return Violation{"(0," + std::to_string(s) +
                                                  ") is qnil in the extension but s is not qnil in Z_" +
                                                  std::to_string(ns)};
                             }
                             return std::nullopt;
                           });
       }});

  add({"T2.7-dorroh-criterion", "Thm 2.7",
       "(0,i) with i qnil in S is quasinilpotent in I(R,S) exactly when the two-equation "
       "solvability condition holds for every commuting (a,b)",
       CaseKind::assertion, dorroh_ids, [dorroh_ids](const CaseContext& ctx) {
         return over_rings(ctx, dorroh_ids,
                           [](const std::string&, const FiniteRing& I) -> std::optional<Violation> {
                             const FiniteRing& R = *I.bases()[0];
                             const unsigned ns = static_cast<unsigned>(I.order() / R.order());
                             RingPtr S = rings::zn(ns);
                             for (Elem i : S->qnil().members()) {
                               const Elem zi = I.encode({R.zero(), i});
                               const bool lhs = I.qnil().contains(zi);
                               bool rhs = true;
                               for (Elem ab = 0; ab < I.order() && rhs; ++ab) {
                                 if (I.mul(ab, zi) != I.mul(zi, ab)) continue;
                                 const auto abc = I.decode(ab);
                                 const Elem apb = R.add(abc[0], R.scalar(abc[1]));
                                 const Elem lead = R.add(R.scalar_mul(i, apb), R.one());
                                 const Elem onepib = (1 + i * abc[1]) % ns;
                                 bool solvable = false;
                                 for (Elem u = 0; u < R.order() && !solvable; ++u)
                                   for (Elem v = 0; v < ns; ++v) {
                                     if ((onepib * v) % ns != 1) continue;
                                     if (R.mul(lead, R.add(u, R.scalar(v))) == R.one()) {
                                       solvable = true;
                                       break;
                                     }
                                   }
                                 rhs = solvable;
                               }
                               if (lhs != rhs)
                                 return Violation{"criterion mismatch at i = " + std::to_string(i) +
                                                  ": membership " + (lhs ? "yes" : "no") +
                                                  ", solvability " + (rhs ? "yes" : "no")};
                             }
                             return std::nullopt;
                           });
       }});

  add({"P2.8-t-trunc-qnil", "Prop 2.8",
       "in the truncation of T[R,S]: quasinilpotent iff every coordinate is, and constant "
       "tails built from quasinilpotents are quasinilpotent",
       CaseKind::assertion, {"t2-z4-z4"}, [](const CaseContext& ctx) {
         RingPtr T = ctx.need("t2-z4-z4");
         const auto& factors = T->bases();
         for (Elem e = 0; e < T->order(); ++e) {
           const auto c = T->decode(e);
           bool all = true;
           for (std::size_t i = 0; i < factors.size(); ++i)
             all = all && factors[i]->qnil().contains(c[i]);
           if (T->qnil().contains(e) != all)
             return fail("coordinate rule fails at " + T->label(e));
         }
         const FiniteRing& R = *factors[0];
         const FiniteRing& S = *factors.back();
         for (Elem a : R.qnil().members())
           for (Elem s : S.qnil().members()) {
             const Elem A = T->encode({a, s, s});
             if (!T->qnil().contains(A))
               return fail("constant tail " + T->label(A) + " escapes qnil");
           }
         return pass("both directions verified on T_2[Z_4,Z_4]");
       }});

  const std::vector<std::string> series_ids{"hurwitz-z2-id-2", "hurwitz-z4-id-2",
                                            "skewpower-z2xz2-swap-2"};

  add({"L2.9-series-units", "Lemma 2.9",
       "units of the truncated series ring are exactly the preimage of the base units under "
       "the constant-term projection",
       CaseKind::assertion, series_ids, [series_ids](const CaseContext& ctx) {
         return over_rings(ctx, series_ids,
                           [](const std::string&, const FiniteRing& H) -> std::optional<Violation> {
                             const FiniteRing& base = *H.bases()[0];
                             for (Elem f = 0; f < H.order(); ++f)
                               if (H.units().contains(f) != base.units().contains(rings::eps(H, f)))
                                 return Violation{"unit criterion fails at " + H.label(f)};
                             return std::nullopt;
                           });
       }});

  add({"P2.10-series-qnil-inclusion", "Prop 2.10",
       "series with quasinilpotent constant term are quasinilpotent in the truncation",
       CaseKind::assertion, series_ids, [series_ids](const CaseContext& ctx) {
         return over_rings(ctx, series_ids,
                           [](const std::string&, const FiniteRing& H) -> std::optional<Violation> {
                             const FiniteRing& base = *H.bases()[0];
                             for (Elem f = 0; f < H.order(); ++f)
                               if (base.qnil().contains(rings::eps(H, f)) && !H.qnil().contains(f))
                                 return Violation{"eps^-1(qnil) escapes qnil at " + H.label(f)};
                             return std::nullopt;
                           });
       }});

  add({"P2.10-series-qnil-equality", "Prop 2.10",
       "whether the quasinilpotents equal the full preimage of the base quasinilpotents is "
       "measured per truncation, not asserted",
       CaseKind::recorded, series_ids, [series_ids](const CaseContext& ctx) {
         std::string detail;
         for (const auto& id : series_ids) {
           RingPtr H = ctx.need(id);
           const FiniteRing& base = *H->bases()[0];
           std::size_t extra = 0;
           for (Elem f = 0; f < H->order(); ++f)
             if (H->qnil().contains(f) && !base.qnil().contains(rings::eps(*H, f))) ++extra;
           detail += (detail.empty() ? "" : "; ") + id + ": " +
                     (extra == 0 ? "equality holds"
                                 : std::to_string(extra) + " quasinilpotents beyond the preimage");
         }
         return recorded(detail);
       }});
}

void register_section3_cases() {
  add({"D3.1-definition-consistency", "Def 3.1",
       "the one-sided normality checker agrees with the brute-force definition of "
       "right/left qnil-duo, and two-sided = right and left",
       CaseKind::assertion, {"xuxu-local16", "z6", "m2-z2", "v3-z2", "d2-z4"},
       [](const CaseContext& ctx) {
         return over_rings(
             ctx, {"xuxu-local16", "z6", "m2-z2", "v3-z2", "d2-z4"},
             [&](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
               const auto& q = r.qnil();
               auto naive = [&](kernels::Side side) {
                 for (Elem a = 0; a < r.order(); ++a)
                   for (Elem b : q.members()) {
                     bool found = false;
                     for (Elem c : q.members()) {
                       const bool match = side == kernels::Side::right
                                              ? r.mul(b, a) == r.mul(a, c)
                                              : r.mul(a, b) == r.mul(c, a);
                       if (match) {
                         found = true;
                         break;
                       }
                     }
                     if (!found) return false;
                   }
                 return true;
               };
               const bool right = checks::is_right_qnil_duo(r, ctx.exec).holds;
               const bool left = checks::is_left_qnil_duo(r, ctx.exec).holds;
               if (right != naive(kernels::Side::right))
                 return Violation{"right checker disagrees with the definition"};
               if (left != naive(kernels::Side::left))
                 return Violation{"left checker disagrees with the definition"};
               return std::nullopt;
             });
       }});

  add({"L3.central-qnil-duo", "Lemma 3.4",
       "if the quasinilpotents are central then the ring is qnil-duo on both sides",
       CaseKind::implication, kCatalogInput, [](const CaseContext& ctx) {
         return implication(
             ctx, kCatalogInput,
             [&](const FiniteRing& r) { return checks::qnil_is_central(r, ctx.exec).holds; },
             [&](const FiniteRing& r) -> std::optional<Violation> {
               auto vr = checks::is_right_qnil_duo(r, ctx.exec);
               if (!vr.holds) return verdict_violation(r, vr, "right qnil-duo");
               auto vl = checks::is_left_qnil_duo(r, ctx.exec);
               if (!vl.holds) return verdict_violation(r, vl, "left qnil-duo");
               return std::nullopt;
             },
             "two-sided qnil-duo");
       }});

  add({"T3.5-product-qnil-duo", "Thm 3.5",
       "a finite product is right (left) qnil-duo exactly when every factor is",
       CaseKind::assertion, {"z2xz3", "z4xz4", "t2-z4-z4", "m2-z2", "z2"},
       [](const CaseContext& ctx) {
         std::vector<std::pair<std::string, RingPtr>> instances;
         for (const char* id : {"z2xz3", "z4xz4", "t2-z4-z4"})
           instances.emplace_back(id, ctx.need(id));
         instances.emplace_back("m2-z2 x z2",
                                rings::product({ctx.need("m2-z2"), ctx.need("z2")}));
         for (const auto& [id, p] : instances) {
           for (auto side : {kernels::Side::right, kernels::Side::left}) {
             const bool whole =
                 checks::one_sided_normality(*p, p->qnil(), side, ctx.exec).holds;
             bool factors = true;
             for (const auto& f : p->bases())
               factors =
                   factors && checks::one_sided_normality(*f, f->qnil(), side, ctx.exec).holds;
             if (whole != factors)
               return fail(id + ": " + kernels::to_string(side) +
                           " qnil-duo transfer fails (product " + (whole ? "yes" : "no") +
                           ", factors " + (factors ? "yes" : "no") + ")");
           }
         }
         return pass("both directions verified on 4 products, including a non-qnil-duo factor");
       }});

  add({"T3.6.1-idempotent-defect", "Thm 3.6(1)",
       "ex - exe and xe - exe are quasinilpotent for every x and idempotent e",
       CaseKind::assertion, kCatalogInput, [](const CaseContext& ctx) {
         return over_catalog(ctx, [](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
           const auto& q = r.qnil();
           for (Elem e : r.idempotents().members())
             for (Elem x = 0; x < r.order(); ++x) {
               const Elem exe = r.mul(r.mul(e, x), e);
               if (!q.contains(r.sub(r.mul(e, x), exe)))
                 return Violation{"ex - exe escapes qnil at e = " + r.label(e) +
                                  ", x = " + r.label(x)};
               if (!q.contains(r.sub(r.mul(x, e), exe)))
                 return Violation{"xe - exe escapes qnil at e = " + r.label(e) +
                                  ", x = " + r.label(x)};
             }
           return std::nullopt;
         });
       }});

  add({"T3.6.2-qnil-duo-abelian", "Thm 3.6(2)", "right or left qnil-duo rings are abelian",
       CaseKind::implication, kCatalogInput, [](const CaseContext& ctx) {
         return implication(
             ctx, kCatalogInput,
             [&](const FiniteRing& r) {
               return checks::is_right_qnil_duo(r, ctx.exec).holds ||
                      checks::is_left_qnil_duo(r, ctx.exec).holds;
             },
             [&](const FiniteRing& r) -> std::optional<Violation> {
               auto v = checks::is_abelian(r, ctx.exec);
               return verdict_violation(r, v, "abelian");
             },
             "abelian");
       }});

  add({"T3.6.3-pierce-decomposition", "Thm 3.6(3)",
       "for a central idempotent e, the ring is right qnil-duo exactly when both corner "
       "factors eRe and (1-e)R(1-e) are",
       CaseKind::assertion, kCatalogInput, [](const CaseContext& ctx) {
         std::size_t checked = 0;
         for (const auto& [id, ring] : ctx.catalog()) {
           const auto& center = ring->center();
           std::optional<bool> whole_right, whole_left;
           for (Elem e : ring->idempotents().members()) {
             if (e == ring->zero() || e == ring->one() || !center.contains(e)) continue;
             RingPtr c1 = rings::corner(ring, e);
             RingPtr c2 = rings::corner(ring, ring->sub(ring->one(), e));
             if (!whole_right) {
               whole_right = checks::is_right_qnil_duo(*ring, ctx.exec).holds;
               whole_left = checks::is_left_qnil_duo(*ring, ctx.exec).holds;
             }
             const bool parts_right = checks::is_right_qnil_duo(*c1, ctx.exec).holds &&
                                      checks::is_right_qnil_duo(*c2, ctx.exec).holds;
             const bool parts_left = checks::is_left_qnil_duo(*c1, ctx.exec).holds &&
                                     checks::is_left_qnil_duo(*c2, ctx.exec).holds;
             if (parts_right != *whole_right || parts_left != *whole_left)
               return fail(id + ": Pierce transfer fails at central e = " + ring->label(e));
             ++checked;
           }
         }
         return pass("verified " + std::to_string(checked) +
                     " central Pierce decompositions");
       }});

  add({"C3.7-corner-qnil-duo", "Cor 3.7",
       "corners of a right (left) qnil-duo ring at any idempotent are right (left) qnil-duo",
       CaseKind::implication, kCatalogInput, [](const CaseContext& ctx) {
         return implication(
             ctx, kCatalogInput,
             [&](const FiniteRing& r) {
               return checks::is_right_qnil_duo(r, ctx.exec).holds ||
                      checks::is_left_qnil_duo(r, ctx.exec).holds;
             },
             [&](const FiniteRing& r) -> std::optional<Violation> {
               const bool right = checks::is_right_qnil_duo(r, ctx.exec).holds;
               const bool left = checks::is_left_qnil_duo(r, ctx.exec).holds;
               for (Elem e : r.idempotents().members()) {
                 if (e == r.zero()) continue;
                 // need a RingPtr for the corner builder
                 RingPtr self;
                 for (const auto& [id2, rp] : ctx.rings)
                   if (rp.get() == &r) self = rp;
                 if (!self) return std::nullopt;
                 RingPtr c = rings::corner(self, e);
                 if (right && !checks::is_right_qnil_duo(*c, ctx.exec).holds)
                   return Violation{"corner at e = " + r.label(e) + " is not right qnil-duo"};
                 if (left && !checks::is_left_qnil_duo(*c, ctx.exec).holds)
                   return Violation{"corner at e = " + r.label(e) + " is not left qnil-duo"};
               }
               return std::nullopt;
             },
             "corner qnil-duo");
       }});

  add({"T3.8-directly-finite", "Thm 3.8",
       "right (left) qnil-duo rings are directly finite; every catalog ring is directly "
       "finite outright, verified independently",
       CaseKind::assertion, kCatalogInput, [](const CaseContext& ctx) {
         return over_catalog(ctx, [&](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
           auto v = checks::is_directly_finite(r, ctx.exec);
           return verdict_violation(r, v, "directly finite");
         });
       }});

  add({"EX3.9-m2z2-directly-finite-not-abelian", "Ex 3.9",
       "M_2(Z_2) is directly finite but not abelian, hence neither right nor left qnil-duo",
       CaseKind::assertion, {"m2-z2"}, [](const CaseContext& ctx) {
         RingPtr r = ctx.need("m2-z2");
         if (!checks::is_directly_finite(*r, ctx.exec).holds)
           return fail("M_2(Z_2) should be directly finite");
         if (checks::is_abelian(*r, ctx.exec).holds) return fail("M_2(Z_2) should not be abelian");
         auto vr = checks::is_right_qnil_duo(*r, ctx.exec);
         auto vl = checks::is_left_qnil_duo(*r, ctx.exec);
         if (vr.holds || vl.holds) return fail("M_2(Z_2) should fail qnil-duo on both sides");
         if (!checks::reverify(*r, "right-qnil-duo", vr.witness) ||
             !checks::reverify(*r, "left-qnil-duo", vl.witness))
           return fail("witness does not re-verify");
         return pass("directly finite, not abelian, not qnil-duo; witnesses re-verified");
       }});

  add({"EX3.10.1-matrix-not-qnil-duo", "Exs 3.10(1)",
       "full and upper triangular matrix rings are neither right nor left qnil-duo",
       CaseKind::assertion, {"m2-z2", "m2-z4", "u2-z2", "u2-z4"}, [](const CaseContext& ctx) {
         return over_rings(
             ctx, {"m2-z2", "m2-z4", "u2-z2", "u2-z4"},
             [&](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
               auto vr = checks::is_right_qnil_duo(r, ctx.exec);
               auto vl = checks::is_left_qnil_duo(r, ctx.exec);
               if (vr.holds) return Violation{"unexpectedly right qnil-duo"};
               if (vl.holds) return Violation{"unexpectedly left qnil-duo"};
               if (!checks::reverify(r, "right-qnil-duo", vr.witness))
                 return Violation{"right witness does not re-verify"};
               if (!checks::reverify(r, "left-qnil-duo", vl.witness))
                 return Violation{"left witness does not re-verify"};
               return std::nullopt;
             });
       }});

  add({"EX3.10.2-vn-commutative-qnil-duo", "Exs 3.10(2)",
       "V_n over a commutative ring is commutative, hence qnil-duo", CaseKind::assertion,
       {"v3-z2", "v3-z4"}, [](const CaseContext& ctx) {
         return over_rings(ctx, {"v3-z2", "v3-z4"},
                           [&](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
                             if (r.center().size() != r.order())
                               return Violation{"expected a commutative ring"};
                             if (!checks::is_right_qnil_duo(r, ctx.exec).holds ||
                                 !checks::is_left_qnil_duo(r, ctx.exec).holds)
                               return Violation{"commutative ring failing qnil-duo"};
                             return std::nullopt;
                           });
       }});

  add({"T3.11-local-sqzero-qnil-duo", "Thm 3.11",
       "a local ring whose quasinilpotents multiply to zero is qnil-duo on both sides",
       CaseKind::implication, kCatalogInput, [](const CaseContext& ctx) {
         return implication(
             ctx, kCatalogInput,
             [&](const FiniteRing& r) {
               return checks::is_local(r, ctx.exec).holds && square_zero_qnil(r);
             },
             [&](const FiniteRing& r) -> std::optional<Violation> {
               auto vr = checks::is_right_qnil_duo(r, ctx.exec);
               if (!vr.holds) return verdict_violation(r, vr, "right qnil-duo");
               auto vl = checks::is_left_qnil_duo(r, ctx.exec);
               if (!vl.holds) return verdict_violation(r, vl, "left qnil-duo");
               return std::nullopt;
             },
             "two-sided qnil-duo");
       }});

  add({"EX3.12.1-d3pattern", "Ex 3.12(1)",
       "the D_3 pattern ring over Z_4 has qnil = {diagonal in 2Z_4}, 32 elements, and is "
       "qnil-duo",
       CaseKind::assertion, {"d3pattern-z4"}, [](const CaseContext& ctx) {
         RingPtr r = ctx.need("d3pattern-z4");
         std::size_t count = 0;
         for (Elem e = 0; e < r->order(); ++e) {
           const Elem a = r->decode(e)[0];
           if (r->qnil().contains(e) != (a == 0 || a == 2))
             return fail("qnil shape differs at " + r->label(e));
           if (r->qnil().contains(e)) ++count;
         }
         if (count != 32) return fail("expected 32 quasinilpotents, found " + std::to_string(count));
         if (!checks::is_right_qnil_duo(*r, ctx.exec).holds ||
             !checks::is_left_qnil_duo(*r, ctx.exec).holds)
           return fail("pattern ring should be qnil-duo");
         return pass("qnil = {a in 2Z_4} with 32 elements; qnil-duo both sides");
       }});

  add({"EX3.12.2-d3pattern-sqzero", "Ex 3.12(1)",
       "the stated square-zero property of the pattern ring's quasinilpotents is measured, "
       "not asserted",
       CaseKind::recorded, {"d3pattern-z4"}, [](const CaseContext& ctx) {
         RingPtr r = ctx.need("d3pattern-z4");
         std::size_t nonzero = 0;
         std::string example;
         for (Elem p : r->qnil().members())
           for (Elem q : r->qnil().members())
             if (r->mul(p, q) != r->zero()) {
               if (example.empty())
                 example = r->label(p) + " * " + r->label(q) + " = " + r->label(r->mul(p, q));
               ++nonzero;
             }
         if (nonzero == 0) return recorded("(qnil)^2 = 0 as stated");
         return recorded("measured (qnil)^2 != 0: " + std::to_string(nonzero) +
                         " nonzero products, e.g. " + example +
                         "; the displayed square-zero claim does not hold on this instance "
                         "(the ring is still qnil-duo, see EX3.12.1)");
       }});

  add({"EX3.12.3-xuxu", "Exs 3.3(2), Ex 3.12(2)",
       "the 16-element local ring: qnil is the 8 listed elements and equals J, xy = 2, "
       "(qnil)^2 != 0, and right qnil-duo fails with the witness pair (x, y)",
       CaseKind::assertion, {"xuxu-local16"}, [](const CaseContext& ctx) {
         RingPtr r = ctx.need("xuxu-local16");
         const auto expected = ElementSet::of(16, {0, 2, 4, 6, 8, 10, 12, 14});
         if (r->qnil() != expected) return fail("qnil differs from the 8 listed elements");
         if (r->jacobson() != r->qnil()) return fail("J(R) should equal qnil");
         if (!checks::is_local(*r, ctx.exec).holds) return fail("ring should be local");
         const Elem x = r->encode({0, 1, 0}), y = r->encode({0, 0, 1}), two = r->encode({2, 0, 0});
         if (r->mul(x, y) != two) return fail("xy != 2");
         if (square_zero_qnil(*r)) return fail("(qnil)^2 should not vanish");
         auto v = checks::is_right_qnil_duo(*r, ctx.exec);
         if (v.holds) return fail("ring should not be right qnil-duo");
         if (!checks::reverify(*r, "right-qnil-duo", v.witness))
           return fail("checker witness does not re-verify");
         for (Elem t : r->qnil().members())
           if (r->mul(y, t) == two)
             return fail("unexpected t in qnil with y*t = 2: t = " + r->label(t));
         return pass("qnil = {0,2,x,y,2+x,2+y,x+y,2+x+y} = J; xy = 2 with no t in qnil "
                     "solving y*t = 2; witness re-verified");
       }});

  add({"T3.14-d2-domain-descent", "Thm 3.14",
       "descent of right qnil-duo from D_2 over a domain; degenerate at finite scale",
       CaseKind::assertion, {}, [](const CaseContext&) {
         CaseResult r;
         r.outcome = Outcome::skipped_degenerate;
         r.detail = "finite domains are fields, so any finite instance has qnil = {0} and the "
                    "descent is trivial; registered as degenerate rather than silently omitted";
         return r;
       }});

  add({"T3.15.1-exchange-stable-range", "Thm 3.15(1)",
       "right (left) qnil-duo exchange rings have stable range 1", CaseKind::implication,
       kCatalogInput, [](const CaseContext& ctx) {
         return implication(
             ctx, kCatalogInput,
             [&](const FiniteRing& r) {
               const bool duo = checks::is_right_qnil_duo(r, ctx.exec).holds ||
                                checks::is_left_qnil_duo(r, ctx.exec).holds;
               return duo && checks::is_exchange(r, ctx.exec).holds;
             },
             [&](const FiniteRing& r) -> std::optional<Violation> {
               auto v = checks::has_stable_range_one(r, ctx.exec);
               return verdict_violation(r, v, "stable range 1");
             },
             "stable range 1");
       }});

  add({"T3.15.2-regular-strongly-regular", "Thm 3.15(2)",
       "right (left) qnil-duo regular rings are strongly regular", CaseKind::implication,
       kCatalogInput, [](const CaseContext& ctx) {
         return implication(
             ctx, kCatalogInput,
             [&](const FiniteRing& r) {
               const bool duo = checks::is_right_qnil_duo(r, ctx.exec).holds ||
                                checks::is_left_qnil_duo(r, ctx.exec).holds;
               return duo && checks::is_regular(r, ctx.exec).holds;
             },
             [&](const FiniteRing& r) -> std::optional<Violation> {
               auto v = checks::is_strongly_regular(r, ctx.exec);
               return verdict_violation(r, v, "strongly regular");
             },
             "strongly regular");
       }});

  add({"T3.17-dorroh-descent", "Thm 3.17",
       "if the Dorroh extension is right qnil-duo then so is the algebra",
       CaseKind::implication, {"dorroh-m2z2-z2", "dorroh-z4-z4"}, [](const CaseContext& ctx) {
         return implication(
             ctx, {"dorroh-m2z2-z2", "dorroh-z4-z4"},
             [&](const FiniteRing& I) { return checks::is_right_qnil_duo(I, ctx.exec).holds; },
             [&](const FiniteRing& I) -> std::optional<Violation> {
               auto v = checks::is_right_qnil_duo(*I.bases()[0], ctx.exec);
               return verdict_violation(*I.bases()[0], v, "right qnil-duo base");
             },
             "right qnil-duo algebra");
       }});

  add({"P3.18-t-trunc-descent", "Prop 3.18",
       "if the T[R,S] truncation is right qnil-duo then so are R and S; conversely when "
       "the quasinilpotents of S lie in those of R",
       CaseKind::assertion, {"t2-z4-z4"}, [](const CaseContext& ctx) {
         RingPtr T = ctx.need("t2-z4-z4");
         const FiniteRing& R = *T->bases()[0];
         const FiniteRing& S = *T->bases().back();
         const bool ht = checks::is_right_qnil_duo(*T, ctx.exec).holds;
         const bool hr = checks::is_right_qnil_duo(R, ctx.exec).holds;
         const bool hs = checks::is_right_qnil_duo(S, ctx.exec).holds;
         if (ht && !(hr && hs)) return fail("truncation is right qnil-duo but a factor is not");
         const bool contained = S.qnil().subset_of(R.qnil());  // same base ring here
         if (hr && hs && contained && !ht)
           return fail("factors right qnil-duo with S^qnil inside R^qnil, yet truncation is not");
         return pass(std::string("descent verified; instance values: T ") + (ht ? "yes" : "no") +
                     ", R " + (hr ? "yes" : "no") + ", S " + (hs ? "yes" : "no"));
       }});

  add({"T3.19-series-descent", "Thm 3.19",
       "if the truncated Hurwitz or skew power series ring is right qnil-duo then so is the base",
       CaseKind::implication, {"hurwitz-z2-id-2", "hurwitz-z4-id-2", "skewpower-z2xz2-swap-2"},
       [](const CaseContext& ctx) {
         return implication(
             ctx, {"hurwitz-z2-id-2", "hurwitz-z4-id-2", "skewpower-z2xz2-swap-2"},
             [&](const FiniteRing& H) { return checks::is_right_qnil_duo(H, ctx.exec).holds; },
             [&](const FiniteRing& H) -> std::optional<Violation> {
               auto v = checks::is_right_qnil_duo(*H.bases()[0], ctx.exec);
               return verdict_violation(*H.bases()[0], v, "right qnil-duo base");
             },
             "right qnil-duo base");
       }});
}

void register_section4_cases() {
  const std::vector<std::string> l_ids{"l11-z4", "l01-z4", "l10-z4", "l00-z4"};

  add({"L4.1.1-L-invertibility", "Lemma 4.1(1)",
       "an L_(s,t) matrix is invertible exactly when its three diagonal entries are",
       CaseKind::assertion, l_ids, [l_ids](const CaseContext& ctx) {
         return over_rings(ctx, l_ids,
                           [](const std::string&, const FiniteRing& L) -> std::optional<Violation> {
                             const FiniteRing& base = *L.bases()[0];
                             const auto& ub = base.units();
                             for (Elem A = 0; A < L.order(); ++A) {
                               const auto c = L.decode(A);
                               const bool diag =
                                   ub.contains(c[0]) && ub.contains(c[2]) && ub.contains(c[4]);
                               if (L.units().contains(A) != diag)
                                 return Violation{"invertibility differs at " + L.label(A)};
                             }
                             return std::nullopt;
                           });
       }});

  add({"L4.1.2-L-qnil-sufficiency", "Lemma 4.1(2)",
       "quasinilpotent diagonal entries force an L_(s,t) matrix to be quasinilpotent",
       CaseKind::assertion, l_ids, [l_ids](const CaseContext& ctx) {
         return over_rings(ctx, l_ids,
                           [](const std::string&, const FiniteRing& L) -> std::optional<Violation> {
                             const FiniteRing& base = *L.bases()[0];
                             const auto& qb = base.qnil();
                             for (Elem A = 0; A < L.order(); ++A) {
                               const auto c = L.decode(A);
                               if (qb.contains(c[0]) && qb.contains(c[2]) && qb.contains(c[4]) &&
                                   !L.qnil().contains(A))
                                 return Violation{"diagonal-qnil matrix " + L.label(A) +
                                                  " escapes qnil"};
                             }
                             return std::nullopt;
                           });
       }});

  add({"L4.2.1-L0t-qnil-a", "Lemma 4.2(1)",
       "in L_(0,t), quasinilpotency forces the (1,1) entry to be quasinilpotent",
       CaseKind::assertion, {"l01-z4", "l00-z4"}, [](const CaseContext& ctx) {
         return over_rings(ctx, {"l01-z4", "l00-z4"},
                           [](const std::string&, const FiniteRing& L) -> std::optional<Violation> {
                             const FiniteRing& base = *L.bases()[0];
                             for (Elem A : L.qnil().members())
                               if (!base.qnil().contains(L.decode(A)[0]))
                                 return Violation{"qnil matrix " + L.label(A) +
                                                  " has non-qnil (1,1) entry"};
                             return std::nullopt;
                           });
       }});

  add({"L4.2.2-Ls0-qnil-f", "Lemma 4.2(2)",
       "in L_(s,0), quasinilpotency forces the (3,3) entry to be quasinilpotent",
       CaseKind::assertion, {"l10-z4", "l00-z4"}, [](const CaseContext& ctx) {
         return over_rings(ctx, {"l10-z4", "l00-z4"},
                           [](const std::string&, const FiniteRing& L) -> std::optional<Violation> {
                             const FiniteRing& base = *L.bases()[0];
                             for (Elem A : L.qnil().members())
                               if (!base.qnil().contains(L.decode(A)[4]))
                                 return Violation{"qnil matrix " + L.label(A) +
                                                  " has non-qnil (3,3) entry"};
                             return std::nullopt;
                           });
       }});

  add({"L4.2.3-L00-qnil-iff", "Lemma 4.2(3)",
       "in L_(0,0), quasinilpotent is equivalent to all three diagonal entries quasinilpotent",
       CaseKind::assertion, {"l00-z4"}, [](const CaseContext& ctx) {
         RingPtr L = ctx.need("l00-z4");
         const FiniteRing& base = *L->bases()[0];
         for (Elem A = 0; A < L->order(); ++A) {
           const auto c = L->decode(A);
           const bool diag = base.qnil().contains(c[0]) && base.qnil().contains(c[2]) &&
                             base.qnil().contains(c[4]);
           if (L->qnil().contains(A) != diag) return fail("equivalence fails at " + L->label(A));
         }
         return pass("equivalence verified on all of L_(0,0)(Z_4)");
       }});

  add({"T4.3-L0t-descent", "Thm 4.3",
       "if L_(0,t)(R) is right qnil-duo then R is right qnil-duo", CaseKind::implication,
       {"l01-z4", "l00-z4"}, [](const CaseContext& ctx) {
         return implication(
             ctx, {"l01-z4", "l00-z4"},
             [&](const FiniteRing& L) { return checks::is_right_qnil_duo(L, ctx.exec).holds; },
             [&](const FiniteRing& L) -> std::optional<Violation> {
               auto v = checks::is_right_qnil_duo(*L.bases()[0], ctx.exec);
               return verdict_violation(*L.bases()[0], v, "right qnil-duo base");
             },
             "right qnil-duo base");
       }});

  add({"EX4.4-L11Z4-not-right-qnil-duo", "Ex 4.4",
       "L_(1,1)(Z_4) is not right qnil-duo: for the displayed A and quasinilpotent B, no "
       "quasinilpotent C satisfies BA = AC",
       CaseKind::assertion, {"l11-z4"}, [](const CaseContext& ctx) {
         RingPtr L = ctx.need("l11-z4");
         const Elem A = L->encode({0, 1, 2, 1, 3});
         const Elem B = L->encode({2, 1, 2, 3, 2});
         if (!L->qnil().contains(B)) return fail("B should be quasinilpotent");
         const Elem BA = L->mul(B, A);
         if (BA != L->encode({0, 2, 0, 3, 2}))
           return fail("computed BA = " + L->label(BA) + " differs from the displayed product");
         for (Elem C : L->qnil().members())
           if (L->mul(A, C) == BA)
             return fail("unexpected quasinilpotent C with BA = AC: C = " + L->label(C));
         auto v = checks::is_right_qnil_duo(*L, ctx.exec);
         if (v.holds) return fail("checker says right qnil-duo");
         if (!checks::reverify(*L, "right-qnil-duo", v.witness))
           return fail("checker witness does not re-verify");
         return pass("B in qnil, BA matches the displayed product, and no C in qnil solves "
                     "BA = AC; checker witness re-verified");
       }});

  const std::vector<std::string> h_ids{"h11-z4", "h13-z4"};

  add({"L4.5.1-H-commutation", "Lemma 4.5(1)",
       "two H_(s,t) matrices commute exactly when their diagonals commute entrywise",
       CaseKind::assertion, h_ids, [h_ids](const CaseContext& ctx) {
         return over_rings(ctx, h_ids,
                           [](const std::string&, const FiniteRing& H) -> std::optional<Violation> {
                             const FiniteRing& base = *H.bases()[0];
                             const auto [s, t] = hst_twists(H);
                             for (Elem A = 0; A < H.order(); ++A) {
                               const auto da = hst_diag(H, s, t, A);
                               for (Elem B = 0; B < H.order(); ++B) {
                                 const auto db = hst_diag(H, s, t, B);
                                 const bool comm = H.mul(A, B) == H.mul(B, A);
                                 const bool diag = base.mul(da[0], db[0]) == base.mul(db[0], da[0]) &&
                                                   base.mul(da[1], db[1]) == base.mul(db[1], da[1]) &&
                                                   base.mul(da[2], db[2]) == base.mul(db[2], da[2]);
                                 if (comm != diag)
                                   return Violation{"commutation differs at " + H.label(A) + ", " +
                                                    H.label(B)};
                               }
                             }
                             return std::nullopt;
                           });
       }});

  add({"L4.5.2-H-invertibility", "Lemma 4.5(2)",
       "A and B are mutually inverse in H_(s,t) exactly when their diagonals are mutually "
       "inverse entrywise; units have invertible diagonal",
       CaseKind::assertion, h_ids, [h_ids](const CaseContext& ctx) {
         return over_rings(ctx, h_ids,
                           [](const std::string&, const FiniteRing& H) -> std::optional<Violation> {
                             const FiniteRing& base = *H.bases()[0];
                             const auto [s, t] = hst_twists(H);
                             for (Elem A = 0; A < H.order(); ++A) {
                               const auto da = hst_diag(H, s, t, A);
                               const bool unit_diag = base.units().contains(da[0]) &&
                                                      base.units().contains(da[1]) &&
                                                      base.units().contains(da[2]);
                               if (H.units().contains(A) != unit_diag)
                                 return Violation{"unit criterion fails at " + H.label(A)};
                               for (Elem B = 0; B < H.order(); ++B) {
                                 const auto db = hst_diag(H, s, t, B);
                                 const bool inv = H.mul(A, B) == H.one() && H.mul(B, A) == H.one();
                                 auto mutual = [&](Elem u, Elem v) {
                                   return base.mul(u, v) == base.one() && base.mul(v, u) == base.one();
                                 };
                                 const bool diag = mutual(da[0], db[0]) && mutual(da[1], db[1]) &&
                                                   mutual(da[2], db[2]);
                                 if (inv != diag)
                                   return Violation{"inverse criterion differs at " + H.label(A) +
                                                    ", " + H.label(B)};
                               }
                             }
                             return std::nullopt;
                           });
       }});

  add({"L4.5.3-H-qnil", "Lemma 4.5(3)",
       "an H_(s,t) matrix is quasinilpotent exactly when its diagonal entries are",
       CaseKind::assertion, h_ids, [h_ids](const CaseContext& ctx) {
         return over_rings(ctx, h_ids,
                           [](const std::string&, const FiniteRing& H) -> std::optional<Violation> {
                             const FiniteRing& base = *H.bases()[0];
                             const auto [s, t] = hst_twists(H);
                             for (Elem A = 0; A < H.order(); ++A) {
                               const auto d = hst_diag(H, s, t, A);
                               const bool diag = base.qnil().contains(d[0]) &&
                                                 base.qnil().contains(d[1]) &&
                                                 base.qnil().contains(d[2]);
                               if (H.qnil().contains(A) != diag)
                                 return Violation{"qnil criterion differs at " + H.label(A)};
                             }
                             return std::nullopt;
                           });
       }});

  add({"T4.6-H-equivalence", "Thm 4.6",
       "R is right qnil-duo exactly when H_(s,t)(R) is right qnil-duo", CaseKind::assertion,
       h_ids, [h_ids](const CaseContext& ctx) {
         return over_rings(ctx, h_ids,
                           [&](const std::string&, const FiniteRing& H) -> std::optional<Violation> {
                             const bool hr = checks::is_right_qnil_duo(H, ctx.exec).holds;
                             const bool br = checks::is_right_qnil_duo(*H.bases()[0], ctx.exec).holds;
                             if (hr != br)
                               return Violation{std::string("equivalence fails: H ") +
                                                (hr ? "yes" : "no") + ", base " + (br ? "yes" : "no")};
                             return std::nullopt;
                           },
                           "both sides evaluated");
       }});

  const std::vector<std::string> k_ids{"k0-z2", "k0-z4"};

  add({"L4.7-K0-units-center", "Lemma 4.7",
       "units of K_0(R) are the matrices with invertible diagonal; the center is the central "
       "scalar diagonal matrices",
       CaseKind::assertion, k_ids, [k_ids](const CaseContext& ctx) {
         return over_rings(ctx, k_ids,
                           [](const std::string&, const FiniteRing& K) -> std::optional<Violation> {
                             const FiniteRing& base = *K.bases()[0];
                             for (Elem A = 0; A < K.order(); ++A) {
                               const auto c = K.decode(A);
                               const bool diag_units =
                                   base.units().contains(c[0]) && base.units().contains(c[3]);
                               if (K.units().contains(A) != diag_units)
                                 return Violation{"unit criterion fails at " + K.label(A)};
                               const bool central_scalar = c[1] == base.zero() &&
                                                           c[2] == base.zero() && c[0] == c[3] &&
                                                           base.center().contains(c[0]);
                               if (K.center().contains(A) != central_scalar)
                                 return Violation{"center criterion fails at " + K.label(A)};
                             }
                             return std::nullopt;
                           });
       }});

  add({"P4.8-K0-qnil-sufficiency", "Prop 4.8",
       "quasinilpotent diagonal blocks force a K_0 matrix to be quasinilpotent",
       CaseKind::assertion, k_ids, [k_ids](const CaseContext& ctx) {
         return over_rings(ctx, k_ids,
                           [](const std::string&, const FiniteRing& K) -> std::optional<Violation> {
                             const FiniteRing& base = *K.bases()[0];
                             for (Elem A = 0; A < K.order(); ++A) {
                               const auto c = K.decode(A);
                               if (base.qnil().contains(c[0]) && base.qnil().contains(c[3]) &&
                                   !K.qnil().contains(A))
                                 return Violation{"diagonal-qnil matrix " + K.label(A) +
                                                  " escapes qnil"};
                             }
                             return std::nullopt;
                           });
       }});

  add({"T4.9-K0-kernel-condition", "Thm 4.9",
       "a quasinilpotent K_0 matrix whose off-diagonal blocks satisfy the kernel conditions "
       "for all commuting pairs has quasinilpotent diagonal",
       CaseKind::assertion, k_ids, [k_ids](const CaseContext& ctx) {
         return over_rings(ctx, k_ids,
                           [&](const std::string&, const FiniteRing& K) -> std::optional<Violation> {
                             const FiniteRing& base = *K.bases()[0];
                             std::size_t held = 0;
                             for (Elem A : K.qnil().members()) {
                               auto v = checks::k0_kernel_condition(K, A, ctx.exec);
                               if (!v.holds) continue;
                               ++held;
                               const auto c = K.decode(A);
                               if (!base.qnil().contains(c[0]) || !base.qnil().contains(c[3]))
                                 return Violation{"kernel condition holds at " + K.label(A) +
                                                  " but a diagonal block is not quasinilpotent"};
                             }
                             (void)held;
                             return std::nullopt;
                           });
       }});

  add({"P4.10.1-K0-local-qnil", "Prop 4.10(1)",
       "over a local base, a K_0 matrix is quasinilpotent exactly when both diagonal blocks are",
       CaseKind::assertion, k_ids, [k_ids](const CaseContext& ctx) {
         return over_rings(ctx, k_ids,
                           [&](const std::string&, const FiniteRing& K) -> std::optional<Violation> {
                             const FiniteRing& base = *K.bases()[0];
                             if (!checks::is_local(base, ctx.exec).holds)
                               return Violation{"base is not local"};
                             for (Elem A = 0; A < K.order(); ++A) {
                               const auto c = K.decode(A);
                               const bool diag = base.qnil().contains(c[0]) &&
                                                 base.qnil().contains(c[3]);
                               if (K.qnil().contains(A) != diag)
                                 return Violation{"equivalence fails at " + K.label(A)};
                             }
                             return std::nullopt;
                           });
       }});

  add({"P4.10.2-K0-diagonal-qnil", "Prop 4.10(2)",
       "a diagonal K_0 matrix is quasinilpotent exactly when both diagonal entries are",
       CaseKind::assertion, k_ids, [k_ids](const CaseContext& ctx) {
         return over_rings(ctx, k_ids,
                           [](const std::string&, const FiniteRing& K) -> std::optional<Violation> {
                             const FiniteRing& base = *K.bases()[0];
                             for (Elem a = 0; a < base.order(); ++a)
                               for (Elem d = 0; d < base.order(); ++d) {
                                 const Elem A = K.encode({a, base.zero(), base.zero(), d});
                                 const bool diag =
                                     base.qnil().contains(a) && base.qnil().contains(d);
                                 if (K.qnil().contains(A) != diag)
                                   return Violation{"diagonal equivalence fails at " + K.label(A)};
                               }
                             return std::nullopt;
                           });
       }});

  add({"T4.11-K0-descent", "Thm 4.11",
       "if K_0(R) is right qnil-duo and R is local or has no nonzero zero divisors, then R "
       "is right qnil-duo",
       CaseKind::implication, k_ids, [k_ids](const CaseContext& ctx) {
         return implication(
             ctx, k_ids,
             [&](const FiniteRing& K) { return checks::is_right_qnil_duo(K, ctx.exec).holds; },
             [&](const FiniteRing& K) -> std::optional<Violation> {
               auto v = checks::is_right_qnil_duo(*K.bases()[0], ctx.exec);
               return verdict_violation(*K.bases()[0], v, "right qnil-duo base");
             },
             "right qnil-duo base");
       }});
}

void register_finite_cases() {
  add({"FIN.2-stable-range-catalog", "finite rings",
       "every catalog ring has stable range 1 (finite rings are semilocal); recorded as an "
       "expected constant and verified exhaustively",
       CaseKind::assertion, kCatalogInput, [](const CaseContext& ctx) {
         return over_catalog(ctx, [&](const std::string&, const FiniteRing& r) -> std::optional<Violation> {
           auto v = checks::has_stable_range_one(r, ctx.exec);
           return verdict_violation(r, v, "stable range 1");
         });
       }});
}

}  // namespace

const std::vector<TheoremCase>& case_registry() {
  static const std::vector<TheoremCase> cases = [] {
    register_core_cases();
    register_section2_cases();
    register_section3_cases();
    register_section4_cases();
    register_finite_cases();
    auto& v = mutable_registry();
    std::sort(v.begin(), v.end(),
              [](const TheoremCase& a, const TheoremCase& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].id == v[i - 1].id) throw std::logic_error("duplicate case id: " + v[i].id);
    return std::move(v);
  }();
  return cases;
}

}  // namespace qduo::suite
