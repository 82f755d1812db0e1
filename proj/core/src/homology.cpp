#include "unogrid/homology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "unogrid/error.hpp"

namespace unogrid {

void GradedModuleSummary::add_free(int grading, int count) {
  if (count <= 0) return;
  entries_[grading].free_rank += count;
}

void GradedModuleSummary::add_torsion(int grading, int exponent) {
  if (exponent < 1) throw std::invalid_argument("torsion exponent must be >= 1");
  auto& t = entries_[grading].torsion;
  t.insert(std::upper_bound(t.begin(), t.end(), exponent), exponent);
}

int GradedModuleSummary::total_free_rank() const {
  int r = 0;
  for (const auto& [g, e] : entries_) r += e.free_rank;
  return r;
}

int GradedModuleSummary::total_torsion_count() const {
  int r = 0;
  for (const auto& [g, e] : entries_) r += static_cast<int>(e.torsion.size());
  return r;
}

std::vector<int> GradedModuleSummary::free_gradings() const {
  std::vector<int> out;
  for (const auto& [g, e] : entries_) out.insert(out.end(), static_cast<std::size_t>(e.free_rank), g);
  return out;
}

GradedModuleSummary GradedModuleSummary::shifted(int doubled_shift) const {
  GradedModuleSummary out;
  for (const auto& [g, e] : entries_) out.entries_[g + doubled_shift] = e;
  return out;
}

GradedModuleSummary GradedModuleSummary::direct_sum(const GradedModuleSummary& other) const {
  GradedModuleSummary out = *this;
  for (const auto& [g, e] : other.entries_) {
    out.add_free(g, e.free_rank);
    for (int k : e.torsion) out.add_torsion(g, k);
  }
  return out;
}

GradedModuleSummary GradedModuleSummary::tensor_rank2(int first_offset, int second_offset) const {
  return shifted(first_offset).direct_sum(shifted(second_offset));
}

std::string GradedModuleSummary::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [g, e] : entries_)
    arr.push_back({{"grading_doubled", g}, {"free_rank", e.free_rank}, {"torsion", e.torsion}});
  return arr.dump();
}

std::string GradedModuleSummary::to_table() const {
  std::ostringstream os;
  os << "grading_doubled free_rank torsion\n";
  for (const auto& [g, e] : entries_) {
    os << g << ' ' << e.free_rank << ' ';
    if (e.torsion.empty()) os << '-';
    for (std::size_t i = 0; i < e.torsion.size(); ++i) os << (i ? "," : "") << e.torsion[i];
    os << '\n';
  }
  return os.str();
}

GradedModuleSummary summary_from_json(const std::string& text) {
  GradedModuleSummary s;
  for (const auto& item : nlohmann::json::parse(text)) {
    int g = item.at("grading_doubled").get<int>();
    s.add_free(g, item.at("free_rank").get<int>());
    for (int k : item.at("torsion").get<std::vector<int>>()) s.add_torsion(g, k);
  }
  return s;
}

namespace {

// Sparse monomial vector in the original basis; coefficients are U^exponent.
using MonoVec = std::unordered_map<Index, int>;

void add_shifted(MonoVec& into, const MonoVec& v, int shift) {
  for (auto [i, e] : v) {
    auto [it, inserted] = into.try_emplace(i, e + shift);
    if (!inserted) {
      if (it->second != e + shift) throw std::logic_error("representative lost homogeneity");
      into.erase(it);
    }
  }
}

SparseVector to_sparse(const MonoVec& v) {
  SparseVector out;
  for (auto [i, e] : v) out.emplace_back(i, PolyF2U::monomial(e));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

class Reducer {
 public:
  Reducer(const UComplex& c, bool track) : c_(c), track_(track), out_(c.size()), in_(c.size()), alive_(c.size(), 1) {
    for (Index x = 0; x < c.size(); ++x)
      for (const auto& e : c.boundary[x]) {
        out_[x].emplace(e.target, e.exponent);
        in_[e.target].insert(x);
      }
    if (track_) {
      vec_.resize(c.size());
      for (Index x = 0; x < c.size(); ++x) vec_[x].emplace(x, 0);
    }
  }

  template <class OnPivot>
  void run(OnPivot&& on_pivot) {
    for (int level = min_exponent(); level >= 0; level = min_exponent()) {
      std::deque<Index> work;
      std::vector<char> queued(c_.size(), 0);
      for (Index x = 0; x < c_.size(); ++x)
        if (alive_[x] && has_level_entry(x, level)) {
          work.push_back(x);
          queued[x] = 1;
        }
      auto push = [&](Index a) {
        if (!queued[a]) {
          queued[a] = 1;
          work.push_back(a);
        }
      };
      while (!work.empty()) {
        Index x = work.front();
        work.pop_front();
        queued[x] = 0;
        if (!alive_[x]) continue;
        // Markowitz-style choice: the level entry whose row is sparsest.
        Index best = x;
        std::size_t best_fill = std::numeric_limits<std::size_t>::max();
        for (auto [y, e] : out_[x])
          if (e == level && y != x && in_[y].size() < best_fill) {
            best = y;
            best_fill = in_[y].size();
          }
        if (best == x) continue;
        eliminate(x, best, level, push, on_pivot);
      }
      if (min_exponent() == level) throw std::logic_error("reduction stalled on self-loops");
    }
  }

  bool alive(Index x) const { return alive_[x]; }
  SparseVector representative(Index x) const { return track_ ? to_sparse(vec_[x]) : SparseVector{}; }

 private:
  int min_exponent() const {
    int m = -1;
    for (Index x = 0; x < c_.size(); ++x)
      for (auto [y, e] : out_[x])
        if (m < 0 || e < m) m = e;
    return m;
  }

  bool has_level_entry(Index x, int level) const {
    for (auto [y, e] : out_[x])
      if (e == level && y != x) return true;
    return false;
  }

  void toggle(Index a, Index b, int e) {
    auto [it, inserted] = out_[a].try_emplace(b, e);
    if (inserted) {
      in_[b].insert(a);
      return;
    }
    if (it->second != e) throw Error(ErrorCode::NotHomogeneous, "reduction met two powers of U in one entry");
    out_[a].erase(it);
    in_[b].erase(a);
  }

  void drop(Index v) {
    for (auto [b, e] : out_[v]) in_[b].erase(v);
    for (Index z : in_[v]) out_[z].erase(v);
    out_[v].clear();
    in_[v].clear();
    alive_[v] = 0;
  }

  template <class Push, class OnPivot>
  void eliminate(Index x, Index y, int k, Push&& push, OnPivot&& on_pivot) {
    std::vector<std::pair<Index, int>> sources, targets;
    for (Index a : in_[y])
      if (a != x && a != y) sources.emplace_back(a, out_[a].at(y));
    for (auto [b, e] : out_[x])
      if (b != x && b != y) targets.emplace_back(b, e);
    std::sort(sources.begin(), sources.end());
    std::sort(targets.begin(), targets.end());

    std::vector<UEntry> tail;
    for (auto [b, e] : targets) tail.push_back({b, e - k});

    MonoVec y_rep;
    if (track_) {
      // y' = dx / U^k in terms of the current basis.
      for (auto [b, e] : out_[x]) add_shifted(y_rep, vec_[b], e - k);
      for (auto [a, ea] : sources) add_shifted(vec_[a], vec_[x], ea - k);
    }

    for (auto [a, ea] : sources)
      for (auto [b, eb] : targets) {
        const int e = ea + eb - k;
        toggle(a, b, e);
        if (e == k && out_[a].count(b)) push(a);
      }
    drop(x);
    drop(y);
    on_pivot(x, y, k, std::move(tail), std::move(y_rep));
    if (track_) {
      vec_[x].clear();
      vec_[y].clear();
    }
  }

  const UComplex& c_;
  bool track_;
  std::vector<std::unordered_map<Index, int>> out_;
  std::vector<std::unordered_set<Index>> in_;
  std::vector<char> alive_;
  std::vector<MonoVec> vec_;
};

}  // namespace

Homology compute_homology(const UComplex& c, const HomologyOptions& options) {
  if (options.check_complex) {
    c.check_homogeneous();
    c.check_square_zero();
  }
  Homology h;
  h.complex_size_ = c.size();
  h.tracked_ = options.track_representatives;
  Reducer reducer(c, options.track_representatives);
  reducer.run([&](Index x, Index y, int k, std::vector<UEntry> tail, MonoVec y_rep) {
    int gen = -1;
    if (k > 0) {
      gen = static_cast<int>(h.generators_.size());
      h.generators_.push_back({c.basis.gradings[y], k, to_sparse(y_rep)});
      h.summary_.add_torsion(c.basis.gradings[y], k);
    }
    h.pivots_.push_back({x, y, k, gen, std::move(tail)});
  });
  for (Index a = 0; a < c.size(); ++a)
    if (reducer.alive(a)) {
      h.free_slots_.emplace_back(a, static_cast<int>(h.generators_.size()));
      h.generators_.push_back({c.basis.gradings[a], 0, reducer.representative(a)});
      h.summary_.add_free(c.basis.gradings[a]);
    }
  return h;
}

std::vector<PolyF2U> Homology::coordinates(const SparseVector& cycle) const {
  std::unordered_map<Index, PolyF2U> w;
  for (const auto& [i, p] : cycle)
    if (!p.is_zero()) w[i] += p;
  std::vector<PolyF2U> coords(generators_.size());
  for (const auto& pv : pivots_) {
    w.erase(pv.source);
    auto it = w.find(pv.target);
    if (it == w.end()) continue;
    PolyF2U beta = std::move(it->second);
    w.erase(it);
    if (beta.is_zero()) continue;
    if (pv.generator >= 0) coords[static_cast<std::size_t>(pv.generator)] = beta.truncated(pv.exponent);
    for (const auto& t : pv.source_tail) {
      auto& slot = w[t.target];
      slot += beta.shifted(t.exponent);
      if (slot.is_zero()) w.erase(t.target);
    }
  }
  for (auto [idx, gen] : free_slots_)
    if (auto it = w.find(idx); it != w.end()) coords[static_cast<std::size_t>(gen)] = it->second;
  return coords;
}

std::string HomologyMatrix::to_string() const {
  std::ostringstream os;
  for (const auto& row : entries) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j].to_string();
    os << '\n';
  }
  return os.str();
}

namespace {

void require_representatives(const Homology& h) {
  if (!h.has_representatives()) throw std::invalid_argument("homology computed without representatives");
}

}  // namespace

HomologyMatrix induced_map(const UMap& f, const UComplex& source, const Homology& source_homology,
                           const UComplex& target, const Homology& target_homology) {
  require_representatives(source_homology);
  if (!f.is_chain_map(source, target)) throw Error(ErrorCode::NotChainMap, "map does not commute with boundaries");
  const auto& src_gens = source_homology.generators();
  HomologyMatrix m;
  m.entries.assign(target_homology.generators().size(), std::vector<PolyF2U>(src_gens.size()));
  for (std::size_t j = 0; j < src_gens.size(); ++j) {
    const auto coords = target_homology.coordinates(f.apply(src_gens[j].representative));
    for (std::size_t i = 0; i < coords.size(); ++i) m.entries[i][j] = coords[i];
  }
  return m;
}

bool maps_equal_on_homology(const UMap& f, const UMap& g, const UComplex& source, const Homology& source_homology,
                            const UComplex& target, const Homology& target_homology) {
  return induced_map(f, source, source_homology, target, target_homology) ==
         induced_map(g, source, source_homology, target, target_homology);
}

HomologyMatrix scalar_on_homology(const Homology& h, const PolyF2U& p) {
  const auto& gens = h.generators();
  HomologyMatrix m;
  m.entries.assign(gens.size(), std::vector<PolyF2U>(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i)
    m.entries[i][i] = gens[i].torsion > 0 ? p.truncated(gens[i].torsion) : p;
  return m;
}

}  // namespace unogrid
