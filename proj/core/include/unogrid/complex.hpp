#pragma once

// Free graded complexes over F2[U_0..U_{m-1}] and over F2[U], and chain maps
// between F2[U] complexes. Gradings are doubled delta values throughout.

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "unogrid/poly.hpp"

namespace unogrid {

using Index = std::uint32_t;

struct GradedBasis {
  std::vector<std::string> labels;
  std::vector<int> gradings;  // doubled delta

  std::size_t size() const noexcept { return gradings.size(); }
  void push(std::string label, int grading) {
    labels.push_back(std::move(label));
    gradings.push_back(grading);
  }
};

/// Column-sparse matrix with multivariable entries; column = source, row = target.
using MultiMatrix = std::vector<std::vector<std::pair<Index, MultiPoly>>>;

struct MonomialComplex {
  GradedBasis basis;
  std::size_t variables = 0;  // marking_count for grid complexes
  MultiMatrix boundary;       // boundary[x] = sorted (y, coefficient of y in dx)

  std::size_t size() const noexcept { return basis.size(); }
};

struct SpecializePolicy {
  enum class Kind { AllToU, KeepPair };
  Kind kind = Kind::AllToU;
  int keep_i = -1;
  int keep_j = -1;

  static SpecializePolicy all_to_u() { return {}; }
  static SpecializePolicy keep(int i, int j) { return {Kind::KeepPair, i, j}; }
};

/// All->U leaves one variable; keep-(i,j) leaves three: U, U_i, U_j. Throws BadPolicy.
MonomialComplex specialize(const MonomialComplex& c, const SpecializePolicy& policy);

/// Renames variable v to perm[v]. Throws BadPermutation.
MonomialComplex relabel_variables(const MonomialComplex& c, const std::vector<int>& perm);

MultiMatrix multiply(const MultiMatrix& left, const MultiMatrix& right, std::size_t rows);
MultiMatrix boundary_squared(const MonomialComplex& c);
bool is_zero(const MultiMatrix& m);

/// Differential entry U^exponent.
struct UEntry {
  Index target;
  int exponent;
};

/// Free complex over F2[U] whose boundary entries are monomials.
struct UComplex {
  GradedBasis basis;
  std::vector<std::vector<UEntry>> boundary;  // sorted by target

  std::size_t size() const noexcept { return basis.size(); }
  std::size_t entry_count() const noexcept;

  /// 2*delta(x) - 2*delta(y) == 2 - 2*exponent for every entry. Throws NotHomogeneous.
  void check_homogeneous() const;
  /// Throws NotAComplex when the boundary does not square to zero.
  void check_square_zero() const;

  static UComplex from_entries(GradedBasis basis, const std::vector<std::tuple<Index, Index, int>>& entries);
};

/// Requires a single-variable complex with monomial entries. Throws NonHomogeneousEntry.
UComplex to_ucomplex(const MonomialComplex& c);

/// Copy of `c` tensored with a rank-2 free module with zero differential. Generator
/// i of `c` becomes i (first factor generator) and i + c.size() (second).
UComplex tensor_rank2(const UComplex& c, int first_offset, int second_offset, const std::string& first_label,
                      const std::string& second_label);

using SparseVector = std::vector<std::pair<Index, PolyF2U>>;

/// F2[U]-linear map between free modules, column-sparse.
class UMap {
 public:
  UMap() = default;
  UMap(std::size_t source_size, std::size_t target_size) : target_size_(target_size), cols_(source_size) {}

  static UMap identity(std::size_t n) { return scalar(n, PolyF2U::one()); }
  static UMap scalar(std::size_t n, const PolyF2U& p);
  static UMap from_differential(const UComplex& c);

  std::size_t source_size() const noexcept { return cols_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }

  const SparseVector& column(Index src) const { return cols_[src]; }
  PolyF2U at(Index tgt, Index src) const;
  /// Adds p to entry (tgt, src).
  void add(Index tgt, Index src, const PolyF2U& p);

  SparseVector apply(const SparseVector& v) const;

  /// this ∘ right
  UMap after(const UMap& right) const;
  UMap& operator+=(const UMap& other);
  friend UMap operator+(UMap a, const UMap& b) { return a += b; }
  friend bool operator==(const UMap&, const UMap&) = default;

  bool is_zero() const;
  bool is_chain_map(const UComplex& source, const UComplex& target) const;
  /// Common doubled-grading shift of all terms, or nullopt when inhomogeneous or zero.
  std::optional<int> degree(const UComplex& source, const UComplex& target) const;

  std::string to_string(const GradedBasis* src = nullptr, const GradedBasis* tgt = nullptr) const;

 private:
  std::size_t target_size_ = 0;
  std::vector<SparseVector> cols_;  // sorted by target
};

}  // namespace unogrid
