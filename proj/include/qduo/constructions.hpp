#pragma once

// Builders for every ring family in the catalog. All builders validate their
// preconditions (central twists, idempotent corners, endomorphism maps,
// order cap) and throw std::invalid_argument naming the violated condition.
// Realized rings are immutable and carry a canonical descriptor string.

#include <string>
#include <vector>

#include "qduo/ring.hpp"

namespace qduo::rings {

/// Global cap on realized ring orders (default 200000, env QDUO_ORDER_CAP).
std::size_t order_cap();
void set_order_cap(std::size_t cap);

/// Cap for exhaustive axiom verification (default 4096, env QDUO_AXIOM_CAP).
std::size_t axiom_cap();
void set_axiom_cap(std::size_t cap);

/// A unital ring endomorphism given by its full image table.
struct EndomorphismMap {
  RingPtr base;
  std::vector<Elem> image;
  std::string name;  // "id", "swap", or "custom"

  Elem operator()(Elem e) const { return image[e]; }
  bool is_identity() const;
  /// Exhaustively checks preservation of 0, 1, add and mul; throws on failure.
  void validate() const;
};

EndomorphismMap identity_endo(RingPtr base);
/// Coordinate swap on a two-factor product of equal rings.
EndomorphismMap swap_endo(RingPtr product_of_two);

// --- elementary -----------------------------------------------------------

RingPtr zn(unsigned n);
RingPtr product(std::vector<RingPtr> factors);

enum class MatrixShape { full, upper, eqdiag, band };  // M_n, U_n, D_n, V_n
const char* to_string(MatrixShape shape);
RingPtr matrix_ring(RingPtr base, unsigned n, MatrixShape shape);

// --- matrix subrings with twists -------------------------------------------

/// L_(s,t)(R): 3x3 matrices [[a,0,0],[p,d,q],[0,0,f]] with p ranging over the
/// ideal sR and q over tR; s, t central. Operations inherited from M_3(R).
RingPtr lst_ring(RingPtr base, Elem s, Elem t);

/// H_(s,t)(R): 3x3 matrices [[a,0,0],[c,d,e],[0,0,f]] constrained by
/// a - d = sc and d - f = te; s, t central units. Free coordinates (a, c, e).
RingPtr hst_ring(RingPtr base, Elem s, Elem t);

/// K_s(R): 2x2 generalized matrix ring, corner products twisted by central s.
RingPtr ks_ring(RingPtr base, Elem s);

// --- extensions -------------------------------------------------------------

/// Dorroh extension I(R, Z_n): pairs (a, b) with
/// (a1,b1)(a2,b2) = (a1 a2 + b1 a2 + b2 a1, b1 b2); identity (0, 1).
/// Requires the additive exponent of R to divide n.
RingPtr dorroh(RingPtr algebra, unsigned scalars_n);

/// Degree-k truncation of the Hurwitz series ring over (R, alpha):
/// c_n = sum_{i<=n} C(n,i) a_i alpha^i(b_{n-i}).
RingPtr hurwitz_trunc(RingPtr base, EndomorphismMap alpha, unsigned degree);
/// Degree-k truncation of the skew power series ring:
/// c_n = sum_{i<=n} a_i alpha^i(b_{n-i}).
RingPtr skew_power_trunc(RingPtr base, EndomorphismMap alpha, unsigned degree);
/// Constant-term projection for rings built by the two builders above.
Elem eps(const FiniteRing& series_ring, Elem f);

/// Level-n truncation of eventually-constant sequences: R^n x S componentwise.
RingPtr t_trunc(RingPtr r, RingPtr s, unsigned n);

/// Corner ring eRe for an idempotent e != 0; identity e.
RingPtr corner(RingPtr base, Elem e);

/// The 16-element local ring Z_4<x,y>/(x^3, y^2, yx, x^2-xy, x^2-2, 2x, 2y),
/// elements a + bx + cy with a in Z_4 and b, c in {0,1}.
RingPtr xuxu_local16();

/// {[[a,b,c],[0,a,0],[0,0,a]]} over the base: triples with
/// (a,b,c)(a',b',c') = (aa', ab'+ba', ac'+ca').
RingPtr d3_pattern(RingPtr base);

/// Ring backed by explicit addition/multiplication tables. Zero, one and
/// negation are recovered from the tables; the full axiom scan always runs
/// and a violation is rejected with the offending law and tuple.
RingPtr table_ring(const std::vector<std::vector<Elem>>& add,
                   const std::vector<std::vector<Elem>>& mul);

struct RingTables {
  std::vector<std::vector<Elem>> add, mul;
};
/// Materializes the operation tables of a ring (order <= 2048).
RingTables export_tables(const FiniteRing& ring);

}  // namespace qduo::rings
