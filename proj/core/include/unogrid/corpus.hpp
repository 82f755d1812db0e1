#pragma once

// Small named grids shipped with the library; the corpus/ directory holds the
// same grids as files.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "unogrid/grid.hpp"

namespace unogrid {

struct NamedGrid {
  std::string name;
  GridDiagram grid;
};

/// unknot2..4, trefoil5, figure_eight6, hopf4 and three split unions.
const std::vector<NamedGrid>& builtin_corpus();
const GridDiagram& corpus_grid(const std::string& name);  // throws std::out_of_range

/// O on the diagonal, X shifted right by `shift` columns.
GridDiagram shifted_grid(int n, int shift);

/// Uniform over valid n x n grids (rejection sampling on the X permutation).
GridDiagram random_grid(int n, std::mt19937_64& rng);

/// Calls f on every valid n x n grid, O permutation outermost, both in
/// lexicographic order.
void for_each_grid(int n, const std::function<void(const GridDiagram&)>& f);

/// Least (O, X) pair among all cyclic row and column shifts of g.
GridDiagram translation_representative(const GridDiagram& g);

}  // namespace unogrid
