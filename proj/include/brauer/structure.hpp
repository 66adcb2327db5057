#pragma once

#include "brauer/typec.hpp"

#include <unordered_map>
#include <vector>

namespace brauer {

// delta^k a = U V W with U = a_{top(a),B}, W = op(a_{bottom(a),B}) and V the
// diagram of op(U) a op(W), whose top and bottom are both B.
struct UVWDecomposition {
  int k = 0;
  Diagram U;
  Diagram V;
  Diagram W;
  AdmissibleSetA B;
};

/// Nested strands (m-j+1, m+j), j = 1..size, with m = floor(N/2); height 0.
AdmissibleSetA reference_set(int strands, int size);

/// B must have height 0 and as many roots as a has top strands.
UVWDecomposition decompose(const Monomial& a, const AdmissibleSetA& b);
UVWDecomposition decompose(const Monomial& a);
/// U V W as a monomial; equals delta^k a.
Monomial recompose(const UVWDecomposition& d);

/// Recomposition, height additivity, V in K_B and injectivity over every
/// diagram on the given strand count.
Report uvw_suite(int strands);

// Group K_B of diagrams with top and bottom B under the product
// x o y = delta^{-|B|} x y; its unit is a_{B,B}.
struct KGroup {
  AdmissibleSetA B;
  std::vector<Diagram> generators;  // adjacent crossings of free dots
  std::vector<Diagram> elements;    // sorted
};

/// Throws std::invalid_argument if B has nonzero height.
KGroup k_group(const AdmissibleSetA& b);
/// Diagram of x y; throws std::logic_error unless exactly |B| loops close.
Diagram k_multiply(const KGroup& k, const Diagram& x, const Diagram& y);
/// Order (r+1)!, Coxeter relations of type A_r, generator heights.
Report k_group_suite(const AdmissibleSetA& b);
/// Number of sigma-fixed elements of K_{B_i} on 2n strands.
std::size_t sigma_fixed_k_order(int n, int i);

// ---------------------------------------------------------------------------
// Cell datum with the group-element basis of L_i standing in for a cellular
// basis of its group ring.

struct CellIndex {
  int u = 0;  // member of D_{i,p}
  int p = 0;
  int s = 0;  // member of L_i
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

struct CellLayer {
  int i = 0;
  std::vector<CellIndex> T;
  /// C[x][y] = delta^{-i} u e_{i,p} b_i s t^{-1} e_{i,p'} w^op.
  std::vector<std::vector<Monomial>> C;
};

struct CellDatum {
  int n = 0;
  /// Layer indices 0..n; B_a > B_b iff a < b.
  std::vector<int> lambda;
  std::vector<CellLayer> layers;
  static bool greater(int a, int b) { return a < b; }
};

CellDatum build_cell_datum(const NormalFormBasis& basis);
/// Swaps two images in one row of the first layer with two distinct right
/// cosets; used as a negative control.
void corrupt_cell_datum(CellDatum& datum);

/// Image of C is the basis, layer by layer, and C(x,y)^op = C(y,x).
Report check_cell_datum(const CellDatum& datum, const NormalFormBasis& basis);
/// Left multiplication by each generator keeps a layer or moves to a lower
/// one, and same-layer terms are C(x',y) with (x', coefficient) independent
/// of y.
Report check_filtration(const CellDatum& datum);

// ---------------------------------------------------------------------------

/// Number of diagrams generated by phi(r_j), phi(e_j) for j in J.
std::size_t parabolic_rank(int n, const std::vector<int>& J);

/// Diagrams generated by phi(e_0), ..., phi(e_{n-1}).
std::vector<Diagram> tl_closure_C(int n);
/// Compares the closure with the symmetric part of the type A Temperley-Lieb
/// monoid and checks E_B = phi(e_{fp(B)}) on sigma-invariant sets.
Report tl_subalgebra(int n);

}  // namespace brauer
