#pragma once

// Test-only reference implementations. They share no code with the library
// beyond the GridDiagram value type and are written for clarity, not speed.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "unogrid/grid.hpp"

namespace oracle {

/// Polynomial over F2 as a little-endian bitset.
class Poly {
 public:
  Poly() = default;
  static Poly mono(int k);

  bool zero() const { return w_.empty(); }
  int deg() const;
  bool operator==(const Poly& o) const { return w_ == o.w_; }
  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  /// Quotient and remainder of long division by a nonzero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  bool bit(int k) const;
  bool is_monomial() const;

 private:
  void flip(int k);
  void trim();
  std::vector<std::uint64_t> w_;
};

using Matrix = std::vector<std::vector<Poly>>;

/// Invariant factors of a matrix over F2[U] by repeated Euclidean elimination.
std::vector<Poly> invariant_factors(Matrix m);

/// Cell-walking rectangle: columns a, a+1, .., b-1 and rows p, .., q-1 mod n.
struct Rect {
  int a, p, b, q;
  std::vector<int> marks;  // marking ids inside, sorted
  int interior;
};

/// Every rectangle from x to y (empty or not).
std::vector<Rect> all_rects(const unogrid::GridDiagram& g, const std::vector<int>& x, const std::vector<int>& y);

/// 2 * delta from the planar formula, recomputed with doubled coordinates.
int doubled_delta(const unogrid::GridDiagram& g, const std::vector<int>& x);

/// Differential of the unoriented complex: (source, target, exponent), listing
/// one triple per nonzero entry after cancelling pairs of equal rectangles.
struct DenseComplex {
  std::vector<std::vector<int>> states;
  std::vector<int> gradings;
  std::vector<std::tuple<int, int, int>> entries;
};
DenseComplex unoriented_complex(const unogrid::GridDiagram& g);

/// Multivariable boundary squared: (x, z) -> set of exponent vectors.
std::map<std::pair<int, int>, std::map<std::vector<int>, int>> multivariable_square(const unogrid::GridDiagram& g);

/// dim over F2 of H(C / U^j) in every doubled grading.
std::map<int, int> truncated_dims(const std::vector<int>& gradings, const std::vector<std::tuple<int, int, int>>& entries,
                                  int j);

/// Rank over F2(U) of the boundary, read off at U = 1 (valid for homogeneous matrices).
int generic_rank(std::size_t size, const std::vector<std::tuple<int, int, int>>& entries);

/// Module totals from the invariant factors of the full boundary matrix:
/// free rank and sorted torsion exponents.
std::pair<int, std::vector<int>> module_totals(std::size_t size, const std::vector<std::tuple<int, int, int>>& entries);

}  // namespace oracle
