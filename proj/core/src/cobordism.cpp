#include "unogrid/cobordism.hpp"

#include <algorithm>

#include "unogrid/error.hpp"

namespace unogrid {

namespace {

std::size_t state_count(const GridDiagram& g) {
  std::size_t f = 1;
  for (int i = 2; i <= g.size(); ++i) f *= static_cast<std::size_t>(i);
  return f;
}

void require_site(const GridDiagram& g, const SwitchSite& s) {
  if (!is_valid_site(g, s)) throw Error(ErrorCode::InvalidSite, "no switch site at " + to_string(s));
}

std::optional<int> map_degree(const UMap& f, const UComplex& src, const UComplex& tgt) { return f.degree(src, tgt); }

void assert_chain_map(const UMap& f, const UComplex& src, const UComplex& tgt, const std::string& what) {
  if (!f.is_chain_map(src, tgt)) throw Error(ErrorCode::ChainMapViolation, what + " does not commute with the boundary");
}

// Complex and map for dropping factor `pos`; generators whose bit `pos` equals
// `keep_bit` map to their image, the rest to zero.
MoveResult drop_factor(const MovieState& s, const UComplex& c, std::size_t pos, int keep_bit) {
  const std::size_t n_states = state_count(s.grid);
  const std::size_t k = s.factors.size();
  if (c.size() != n_states << k) throw std::invalid_argument("complex does not match the movie state");
  MoveResult r{.state = s};
  r.state.factors.erase(r.state.factors.begin() + static_cast<std::ptrdiff_t>(pos));
  auto reindex = [&](std::size_t idx) {
    const std::size_t g = idx % n_states, bits = idx / n_states;
    const std::size_t low = bits & ((std::size_t{1} << pos) - 1), high = bits >> (pos + 1);
    return g + n_states * (low | (high << pos));
  };
  auto bit_of = [&](std::size_t idx) { return static_cast<int>((idx / n_states >> pos) & 1u); };
  const std::size_t out_size = c.size() / 2;
  r.target.basis.labels.resize(out_size);
  r.target.basis.gradings.resize(out_size);
  r.target.boundary.resize(out_size);
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (bit_of(idx) != 0) continue;
    const auto j = reindex(idx);
    r.target.basis.gradings[j] = c.basis.gradings[idx];
    for (const auto& e : c.boundary[idx]) r.target.boundary[j].push_back({static_cast<Index>(reindex(e.target)), e.exponent});
  }
  // Labels carry one "*factor" suffix per factor, in factor order.
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (bit_of(idx) != 0) continue;
    const auto& label = c.basis.labels[idx];
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t p = label.find('*'); p != std::string::npos; p = label.find('*', start)) {
      parts.push_back(label.substr(start, p - start));
      start = p + 1;
    }
    parts.push_back(label.substr(start));
    std::string out = parts[0];
    for (std::size_t t = 1; t < parts.size(); ++t)
      if (t - 1 != pos) out += "*" + parts[t];
    r.target.basis.labels[reindex(idx)] = out;
  }
  for (auto& col : r.target.boundary)
    std::sort(col.begin(), col.end(), [](const UEntry& a, const UEntry& b) { return a.target < b.target; });
  r.map = UMap(c.size(), out_size);
  for (std::size_t idx = 0; idx < c.size(); ++idx)
    if (bit_of(idx) == keep_bit)
      r.map.add(static_cast<Index>(reindex(idx)), static_cast<Index>(idx), PolyF2U::one());
  assert_chain_map(r.map, c, r.target, "destabilization map");
  r.degree = map_degree(r.map, c, r.target);
  return r;
}

MoveResult add_factor(const MovieState& s, const UComplex& c, const StabModel& m) {
  MoveResult r{.state = s};
  r.state.factors.push_back(m);
  const bool quasi = m.kind == StabKind::Quasi;
  r.target = tensor_rank2(c, 0, -stabilization_gap(), quasi ? "x+" : "t+", quasi ? "x-" : "t-");
  r.map = UMap(c.size(), r.target.size());
  for (Index i = 0; i < c.size(); ++i) r.map.add(i, i, PolyF2U::one());
  assert_chain_map(r.map, c, r.target, "stabilization map");
  r.degree = map_degree(r.map, c, r.target);
  return r;
}

void require_anchor(const GridDiagram& g, const Marking& a) {
  if (a.row < 0 || a.row >= g.size())
    throw Error(ErrorCode::MoveSequenceInvalid, "marking " + a.name() + " does not exist on a grid of size " +
                                                    std::to_string(g.size()));
}

}  // namespace

std::pair<int, int> distinguished_point(const GridDiagram& g, const SwitchSite& s) {
  return {g.wrap(s.col + 1), g.wrap(s.row + 1)};
}

bool band_multiplies(const GridDiagram& g, const BandMapChoice& choice, const GridState& x) {
  const auto [c, r] = distinguished_point(g, choice.site);
  const bool through = x.perm[static_cast<std::size_t>(c)] == r;
  const bool forward = choice.direction == BandDirection::Forward;
  const bool nu = choice.flavor == BandFlavor::Nu;
  return through == (forward == nu);
}

BandDirection natural_direction(const GridDiagram& g, const SwitchSite& s) {
  const auto d = site_diagonal(g, s);
  if (!d) throw Error(ErrorCode::InvalidSite, "no switch site at " + to_string(s));
  return *d == SiteDiagonal::Main ? BandDirection::Forward : BandDirection::Inverse;
}

UMap band_rule(const GridDiagram& g, const BandMapChoice& choice, std::size_t complex_size) {
  const std::size_t n_states = state_count(g);
  if (complex_size % n_states != 0) throw std::invalid_argument("complex size is not a multiple of the state count");
  std::vector<char> mult(n_states);
  for (std::size_t i = 0; i < n_states; ++i)
    mult[i] = band_multiplies(g, choice, state_unrank(static_cast<Index>(i), g.size()));
  UMap f(complex_size, complex_size);
  for (std::size_t i = 0; i < complex_size; ++i)
    f.add(static_cast<Index>(i), static_cast<Index>(i), mult[i % n_states] ? PolyF2U::monomial(1) : PolyF2U::one());
  return f;
}

UMap band_map(const GridDiagram& g, const UComplex& source, const UComplex& target, const BandMapChoice& choice) {
  require_site(g, choice.site);
  if (source.size() != target.size()) throw std::invalid_argument("band map complexes differ in size");
  UMap f = band_rule(g, choice, source.size());
  assert_chain_map(f, source, target, "band map at " + to_string(choice.site));
  return f;
}

UMap band_map_sum(const GridDiagram& g, const UComplex& source, const UComplex& target, const SwitchSite& site,
                  BandDirection direction) {
  require_site(g, site);
  if (source.size() != target.size()) throw std::invalid_argument("band map complexes differ in size");
  UMap f = band_rule(g, {site, BandFlavor::Nu, direction}, source.size()) +
           band_rule(g, {site, BandFlavor::NuTilde, direction}, source.size());
  assert_chain_map(f, source, target, "band map sum at " + to_string(site));
  return f;
}

int stabilization_gap() {
  static const int gap = [] {
    const auto h = compute_homology(build_unoriented(GridDiagram({0, 1}, {1, 0})));
    const auto towers = h.summary().free_gradings();
    if (towers.size() != 2) throw std::logic_error("2x2 unknot must have two towers");
    return towers.front() - towers.back();
  }();
  return gap;
}

UComplex state_complex(const MovieState& s, const BuildOptions& options) {
  UComplex c = build_unoriented(s.grid, options);
  for (const auto& f : s.factors) {
    const bool quasi = f.kind == StabKind::Quasi;
    c = tensor_rank2(c, 0, -stabilization_gap(), quasi ? "x+" : "t+", quasi ? "x-" : "t-");
  }
  return c;
}

MoveResult band_switch(const MovieState& s, const UComplex& c, const BandMapChoice& choice,
                       const BuildOptions& options) {
  require_site(s.grid, choice.site);
  MoveResult r{.state = s};
  r.state.grid = apply_switch(s.grid, choice.site);
  r.target = state_complex(r.state, options);
  r.map = band_map(s.grid, c, r.target, choice);
  r.degree = map_degree(r.map, c, r.target);
  return r;
}

MoveResult quasi_stab(const MovieState& s, const UComplex& c, const StabModel& m) {
  if (m.kind != StabKind::Quasi) throw std::invalid_argument("quasi_stab needs a quasi model");
  require_anchor(s.grid, m.anchor);
  return add_factor(s, c, m);
}

MoveResult quasi_destab(const MovieState& s, const UComplex& c, const Marking& anchor) {
  require_anchor(s.grid, anchor);
  const int n = s.grid.size();
  for (std::size_t t = s.factors.size(); t-- > 0;)
    if (s.factors[t].kind == StabKind::Quasi && s.factors[t].anchor == anchor) return drop_factor(s, c, t, 1);
  const auto topo = link_topology(s.grid);
  for (std::size_t t = s.factors.size(); t-- > 0;)
    if (s.factors[t].kind == StabKind::Quasi && topo.adjacent(s.factors[t].anchor.id(n), anchor.id(n)))
      return drop_factor(s, c, t, 0);
  throw Error(ErrorCode::AnchorMismatch, "no quasi-stabilization at or next to " + anchor.name());
}

MoveResult disk_stab(const MovieState& s, const UComplex& c) { return add_factor(s, c, {StabKind::Disk, StabSide::Beta, {}}); }

MoveResult disk_destab(const MovieState& s, const UComplex& c) {
  for (std::size_t t = s.factors.size(); t-- > 0;)
    if (s.factors[t].kind == StabKind::Disk) return drop_factor(s, c, t, 1);
  throw Error(ErrorCode::MoveSequenceInvalid, "no disk stabilization to remove");
}

MoveResult renumber(const MovieState& s, const UComplex& c, const std::vector<int>& perm) {
  const auto m = static_cast<std::size_t>(s.marking_count());
  if (perm.size() != m) throw Error(ErrorCode::BadPermutation, "renumbering must list all " + std::to_string(m) + " markings");
  std::vector<char> hit(m, 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= m || hit[static_cast<std::size_t>(p)])
      throw Error(ErrorCode::BadPermutation, "renumbering is not a permutation");
    hit[static_cast<std::size_t>(p)] = 1;
  }
  MoveResult r{.state = s};
  r.target = c;
  r.map = UMap::identity(c.size());
  r.degree = map_degree(r.map, c, r.target);
  return r;
}

namespace {

const char* move_name(const Move& m) {
  static constexpr const char* names[] = {"switch", "quasistab", "quasidestab", "diskstab", "diskdestab", "renumber"};
  return names[m.index()];
}

MoveResult apply_move(const MovieState& s, const UComplex& c, const Move& move, const BuildOptions& options) {
  return std::visit(
      [&](const auto& m) -> MoveResult {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SwitchMove>) return band_switch(s, c, m.choice, options);
        else if constexpr (std::is_same_v<T, QuasiStabMove>) return quasi_stab(s, c, {StabKind::Quasi, m.side, m.anchor});
        else if constexpr (std::is_same_v<T, QuasiDestabMove>) return quasi_destab(s, c, m.anchor);
        else if constexpr (std::is_same_v<T, DiskStabMove>) return disk_stab(s, c);
        else if constexpr (std::is_same_v<T, DiskDestabMove>) return disk_destab(s, c);
        else return renumber(s, c, m.perm);
      },
      move);
}

}  // namespace

MovieResult compose_movie(const Movie& m, const MovieOptions& options) {
  MovieResult r{.final_state = m.start};
  r.source = state_complex(m.start, options.build);
  r.target = r.source;
  r.total = UMap::identity(r.source.size());
  for (std::size_t i = 0; i < m.moves.size(); ++i) {
    std::optional<MoveResult> step;
    try {
      step = apply_move(r.final_state, r.target, m.moves[i], options.build);
    } catch (const Error& e) {
      throw Error(ErrorCode::MoveSequenceInvalid, "move " + std::to_string(i + 1) + " (" + move_name(m.moves[i]) +
                                                      "): " + std::string(to_string(e.code())) + ": " + e.what());
    }
    r.total = step->map.after(r.total);
    r.move_degrees.push_back(step->degree);
    r.final_state = std::move(step->state);
    r.target = std::move(step->target);
  }
  r.degree = r.total.degree(r.source, r.target);
  if (options.induced) {
    r.source_homology = compute_homology(r.source);
    r.target_homology = m.moves.empty() ? r.source_homology : compute_homology(r.target);
    r.induced = induced_map(r.total, r.source, *r.source_homology, r.target, *r.target_homology);
  }
  return r;
}

namespace {

SwitchSite same_block_site(const GridDiagram& g, const SwitchSite& s) {
  for (auto letter : {SiteLetter::O, SiteLetter::X, SiteLetter::Mixed}) {
    SwitchSite t{s.col, s.row, letter};
    if (is_valid_site(g, t)) return t;
  }
  throw Error(ErrorCode::InvalidSite, to_string(s) + " is not a site after the other switch");
}

// The boundary of GC' depends on marking positions only; letters can shift the gradings by a constant.
bool same_cells(const GridDiagram& a, const GridDiagram& b) {
  if (a.size() != b.size()) return false;
  for (int c = 0; c < a.size(); ++c) {
    const int ra[2] = {a.o_row_in_col(c), a.x_row_in_col(c)}, rb[2] = {b.o_row_in_col(c), b.x_row_in_col(c)};
    if (std::min(ra[0], ra[1]) != std::min(rb[0], rb[1]) || std::max(ra[0], ra[1]) != std::max(rb[0], rb[1]))
      return false;
  }
  return true;
}

}  // namespace

bool verify_commutation(const GridDiagram& g, const SwitchSite& first, const SwitchSite& second,
                        const BuildOptions& options) {
  if (!sites_disjoint(g, first, second))
    throw Error(ErrorCode::SitesNotDisjoint, to_string(first) + " and " + to_string(second) + " overlap");
  require_site(g, first);
  require_site(g, second);
  const auto g1 = apply_switch(g, first), g2 = apply_switch(g, second);
  // A mixed switch may reletter the other block's component.
  const auto second_after = same_block_site(g1, second), first_after = same_block_site(g2, first);
  const auto g12 = apply_switch(g1, second_after);
  if (!same_cells(g12, apply_switch(g2, first_after)))
    throw std::logic_error("disjoint switches did not commute on the grid");
  const auto c = build_unoriented(g, options), c1 = build_unoriented(g1, options),
             c2 = build_unoriented(g2, options), c12 = build_unoriented(g12, options);
  auto nu = [](const GridDiagram& grid, const SwitchSite& s) {
    return BandMapChoice{s, BandFlavor::Nu, natural_direction(grid, s)};
  };
  const UMap a = band_map(g1, c1, c12, nu(g1, second_after)).after(band_map(g, c, c1, nu(g, first)));
  const UMap b = band_map(g2, c2, c12, nu(g2, first_after)).after(band_map(g, c, c2, nu(g, second)));
  const auto h = compute_homology(c), h12 = compute_homology(c12);
  return maps_equal_on_homology(a, b, c, h, c12, h12);
}

}  // namespace unogrid
