#include "unogrid/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace unogrid {

GridDiagram shifted_grid(int n, int shift) {
  std::vector<int> o(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    o[static_cast<std::size_t>(r)] = r;
    x[static_cast<std::size_t>(r)] = ((r + shift) % n + n) % n;
  }
  return GridDiagram(std::move(o), std::move(x));
}

namespace {

bool disjoint(const std::vector<int>& o, const std::vector<int>& x) {
  for (std::size_t i = 0; i < o.size(); ++i)
    if (o[i] == x[i]) return false;
  return true;
}

}  // namespace

GridDiagram random_grid(int n, std::mt19937_64& rng) {
  std::vector<int> o(static_cast<std::size_t>(n)), x(static_cast<std::size_t>(n));
  std::iota(o.begin(), o.end(), 0);
  std::iota(x.begin(), x.end(), 0);
  std::shuffle(o.begin(), o.end(), rng);
  do std::shuffle(x.begin(), x.end(), rng);
  while (!disjoint(o, x));
  return GridDiagram(std::move(o), std::move(x));
}

void for_each_grid(int n, const std::function<void(const GridDiagram&)>& f) {
  std::vector<int> o(static_cast<std::size_t>(n));
  std::iota(o.begin(), o.end(), 0);
  do {
    std::vector<int> x(o.size());
    std::iota(x.begin(), x.end(), 0);
    do
      if (disjoint(o, x)) f(GridDiagram(o, x));
    while (std::next_permutation(x.begin(), x.end()));
  } while (std::next_permutation(o.begin(), o.end()));
}

GridDiagram translation_representative(const GridDiagram& g) {
  GridDiagram best = g;
  for (int c = 0; c < g.size(); ++c)
    for (int r = 0; r < g.size(); ++r) {
      auto t = g.rotated(c, r);
      if (std::tie(t.o_col(), t.x_col()) < std::tie(best.o_col(), best.x_col())) best = std::move(t);
    }
  return best;
}

const std::vector<NamedGrid>& builtin_corpus() {
  static const std::vector<NamedGrid> corpus = [] {
    const auto unknot2 = shifted_grid(2, 1), unknot3 = shifted_grid(3, 1), trefoil = shifted_grid(5, 2);
    return std::vector<NamedGrid>{
        {"unknot2", unknot2},
        {"unknot3", unknot3},
        {"unknot4", shifted_grid(4, 1)},
        {"trefoil5", trefoil},
        {"figure_eight6", GridDiagram({2, 5, 0, 4, 3, 1}, {0, 1, 3, 2, 5, 4})},
        {"hopf4", shifted_grid(4, 2)},
        {"split_unknot2_unknot2", split_union(unknot2, unknot2)},
        {"split_unknot3_unknot3", split_union(unknot3, unknot3)},
        {"split_trefoil5_unknot2", split_union(trefoil, unknot2)},
    };
  }();
  return corpus;
}

const GridDiagram& corpus_grid(const std::string& name) {
  for (const auto& g : builtin_corpus())
    if (g.name == name) return g.grid;
  throw std::out_of_range("no corpus grid named " + name);
}

}  // namespace unogrid
