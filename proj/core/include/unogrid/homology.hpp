#pragma once

// Homology of graded free F2[U] complexes and the maps they induce.
//
// The reduction repeatedly picks a boundary entry x -> U^k y of globally minimal
// exponent k and splits off the summand spanned by x and y' = dx / U^k. Units
// (k = 0) go first and only shrink the complex; a pivot with k > 0 leaves a
// summand F2[U]/(U^k) generated by y'. Minimality of k keeps every other entry
// in the row of y and the column of x divisible by U^k, so the change of basis
// stays over F2[U] and the surviving entries stay monomials.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "unogrid/complex.hpp"

namespace unogrid {

struct GradingSummary {
  int free_rank = 0;
  std::vector<int> torsion;  // sorted ascending, each >= 1

  friend bool operator==(const GradingSummary&, const GradingSummary&) = default;
};

/// Per doubled grading: number of F2[U] towers whose generator sits there and
/// the exponents k of the F2[U]/(U^k) summands generated there.
class GradedModuleSummary {
 public:
  void add_free(int grading, int count = 1);
  void add_torsion(int grading, int exponent);

  const std::map<int, GradingSummary, std::greater<>>& entries() const noexcept { return entries_; }
  int total_free_rank() const;
  int total_torsion_count() const;
  std::vector<int> free_gradings() const;  // with multiplicity, descending

  GradedModuleSummary shifted(int doubled_shift) const;
  /// Tensor with a free rank-2 module generated in the two given doubled gradings.
  GradedModuleSummary tensor_rank2(int first_offset, int second_offset) const;
  GradedModuleSummary direct_sum(const GradedModuleSummary& other) const;

  /// `[{"grading_doubled":d,"free_rank":r,"torsion":[...]}, ...]`, gradings descending.
  std::string to_json() const;
  std::string to_table() const;

  friend bool operator==(const GradedModuleSummary&, const GradedModuleSummary&) = default;

 private:
  std::map<int, GradingSummary, std::greater<>> entries_;
};

GradedModuleSummary summary_from_json(const std::string& text);

struct HomologyGenerator {
  int grading = 0;
  int torsion = 0;  // 0 for a free tower, k for F2[U]/(U^k)
  SparseVector representative;  // cycle in the original basis; empty unless tracked
};

struct HomologyOptions {
  bool track_representatives = true;
  bool check_complex = true;  // homogeneity and square-zero checks before reducing
};

class Homology {
 public:
  const GradedModuleSummary& summary() const noexcept { return summary_; }
  const std::vector<HomologyGenerator>& generators() const noexcept { return generators_; }
  bool has_representatives() const noexcept { return tracked_; }
  std::size_t complex_size() const noexcept { return complex_size_; }
  std::size_t pivot_count() const noexcept { return pivots_.size(); }

  /// Coordinates of a cycle in the homology basis; torsion coordinates reduced mod U^k.
  std::vector<PolyF2U> coordinates(const SparseVector& cycle) const;

 private:
  friend Homology compute_homology(const UComplex& c, const HomologyOptions& options);

  struct Pivot {
    Index source;
    Index target;
    int exponent;
    int generator;  // homology generator index for exponent > 0, else -1
    std::vector<UEntry> source_tail;  // remaining entries of d(source) divided by U^exponent
  };

  GradedModuleSummary summary_;
  std::vector<HomologyGenerator> generators_;
  std::vector<Pivot> pivots_;
  std::vector<std::pair<Index, int>> free_slots_;  // (basis index, generator index)
  std::size_t complex_size_ = 0;
  bool tracked_ = false;
};

/// Throws NotHomogeneous / NotAComplex when `check_complex` is set.
Homology compute_homology(const UComplex& c, const HomologyOptions& options = {});

/// Matrix over F2[U] of a map between homology modules; rows are target generators.
struct HomologyMatrix {
  std::vector<std::vector<PolyF2U>> entries;  // entries[row][col]

  std::size_t rows() const noexcept { return entries.size(); }
  std::size_t cols() const noexcept { return entries.empty() ? 0 : entries[0].size(); }
  friend bool operator==(const HomologyMatrix&, const HomologyMatrix&) = default;
  std::string to_string() const;
};

/// Throws NotChainMap unless f commutes with the differentials.
HomologyMatrix induced_map(const UMap& f, const UComplex& source, const Homology& source_homology,
                           const UComplex& target, const Homology& target_homology);

/// True iff (f - g)(z) is a boundary for every homology representative z.
bool maps_equal_on_homology(const UMap& f, const UMap& g, const UComplex& source, const Homology& source_homology,
                            const UComplex& target, const Homology& target_homology);

/// The identity of H(c) scaled by p, in the generator basis of `h`.
HomologyMatrix scalar_on_homology(const Homology& h, const PolyF2U& p);

}  // namespace unogrid
