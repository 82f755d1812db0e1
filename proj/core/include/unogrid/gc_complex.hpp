#pragma once

// The grid chain complex: states, empty rectangles, weights, delta gradings.

#include <iosfwd>
#include <span>
#include <vector>

#include "unogrid/complex.hpp"
#include "unogrid/grid.hpp"

namespace unogrid {

inline constexpr int kDefaultStateCap = 8;

/// Point i sits at the lattice point (column i, row perm[i]).
struct GridState {
  std::vector<int> perm;

  int size() const noexcept { return static_cast<int>(perm.size()); }
  friend auto operator<=>(const GridState&, const GridState&) = default;
};

/// Lexicographic rank (Lehmer code) of a permutation.
Index state_rank(std::span<const int> perm);
GridState state_unrank(Index rank, int n);
std::string state_label(const GridState& x);  // 1-indexed rows, e.g. "21345"

/// All n! states in lexicographic order. Throws CapExceeded when n > cap.
std::vector<GridState> enumerate_states(int n, int cap = kDefaultStateCap);

/// Rectangle from x to y: lower-left corner (c1,r1) and upper-right corner
/// (c2,r2) are points of x; it covers `width` columns starting at c1 and
/// `height` rows starting at r1, wrapping around the torus.
struct Rectangle {
  int c1 = 0, r1 = 0, c2 = 0, r2 = 0;
  int width = 0, height = 0;
  ExponentVector weight;  // markings inside, by marking id
  int interior_points = 0;

  bool is_empty() const noexcept { return interior_points == 0; }
};

/// Both rectangles from x to y before the emptiness filter: two when x and y
/// differ in exactly two columns, none otherwise.
std::vector<Rectangle> candidate_rectangles(const GridDiagram& g, const GridState& x, const GridState& y);
/// The empty ones.
std::vector<Rectangle> rectangles(const GridDiagram& g, const GridState& x, const GridState& y);

/// 2*delta(x).
int delta_grading(const GridDiagram& g, const GridState& x);

struct BuildOptions {
  int cap = kDefaultStateCap;
  int threads = 1;
};

/// Multivariable complex over F2[U_0..U_{2n-1}], variable = marking id.
MonomialComplex build_complex(const GridDiagram& g, const BuildOptions& options = {});
/// Sum over every pair of markings adjacent along a component of U_a U_b. The
/// multivariable boundary squares to this times the identity.
MultiPoly curvature(const GridDiagram& g);
/// True when boundary_squared(c) is curvature(g) on the diagonal and zero elsewhere.
bool matches_curvature(const GridDiagram& g, const MonomialComplex& c);

/// GC' directly over F2[U]; equal to to_ucomplex(specialize(build_complex(g), all_to_u)).
UComplex build_unoriented(const GridDiagram& g, const BuildOptions& options = {});

/// Text dump: header lines `n <n>`, `variables <m>`, `gradings <g_0> ... <g_{N-1}>`,
/// then one line `src tgt e_0,...,e_{m-1}` per monomial of every entry.
void write_complex_dump(std::ostream& os, int n, const MonomialComplex& c);
struct ComplexDump {
  int n = 0;
  MonomialComplex complex;
};
/// Throws ParseError.
ComplexDump read_complex_dump(std::istream& is);

}  // namespace unogrid
