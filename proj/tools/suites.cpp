#include <filesystem>
#include <fstream>
#include <functional>
#include <random>

#include "cli.hpp"
#include "unogrid/cobordism.hpp"
#include "unogrid/corpus.hpp"
#include "unogrid/gc_complex.hpp"
#include "unogrid/grid_io.hpp"
#include "unogrid/movie_io.hpp"

namespace unogrid::cli {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) { report_.suite = std::move(suite); }

  // Runs one check; a thrown library error counts as a failure of that check.
  void check(const std::string& name, const GridDiagram& g, const std::vector<Move>& movie,
             const std::function<bool()>& body) {
    ++report_.checks;
    bool ok = false;
    std::string why;
    try {
      ok = body();
    } catch (const Error& e) {
      why = std::string(": ") + e.what();
    }
    if (ok) return;
    ++report_.failures;
    if (!report_.first_failure) report_.first_failure = Counterexample{name + why, serialize_grid(g), serialize_movie(movie)};
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  SuiteReport report_;
};

bool within_cap(const GridDiagram& g, const RunConfig& cfg) { return g.size() <= cfg.state_cap; }

BuildOptions build_options(const RunConfig& cfg) { return {cfg.state_cap, cfg.threads}; }

bool same_complex(const UComplex& a, const UComplex& b) {
  if (a.basis.gradings != b.basis.gradings || a.size() != b.size()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.boundary[x].size() != b.boundary[x].size()) return false;
    for (std::size_t k = 0; k < a.boundary[x].size(); ++k)
      if (a.boundary[x][k].target != b.boundary[x][k].target || a.boundary[x][k].exponent != b.boundary[x][k].exponent)
        return false;
  }
  return true;
}

SuiteReport curvature_suite(const RunConfig& cfg) {
  Recorder rec("curvature");
  for (int n = 2; n <= std::min(5, cfg.state_cap); ++n)
    for_each_grid(n, [&](const GridDiagram& g) {
      rec.check("multivariable boundary squares to the curvature", g, {}, [&] {
        const auto c = build_complex(g, build_options(cfg));
        if (!matches_curvature(g, c)) return false;
        to_ucomplex(specialize(c, SpecializePolicy::all_to_u())).check_square_zero();
        return true;
      });
    });
  return rec.finish();
}

SuiteReport grading_suite(const RunConfig& cfg) {
  Recorder rec("grading");
  std::vector<GridDiagram> grids;
  for (const auto& ng : builtin_corpus())
    if (within_cap(ng.grid, cfg) && ng.grid.size() <= 6) grids.push_back(ng.grid);
  std::mt19937_64 rng(cfg.seed);
  for (int n = 3; n <= std::min(6, cfg.state_cap); ++n)
    for (int k = 0; k < 10; ++k) grids.push_back(random_grid(n, rng));
  for (const auto& g : grids) {
    rec.check("boundary lowers doubled delta by 2 - 2 weight", g, {}, [&] {
      build_unoriented(g, build_options(cfg)).check_homogeneous();
      return true;
    });
    rec.check("specialized multivariable complex equals GC'", g, {}, [&] {
      return same_complex(to_ucomplex(specialize(build_complex(g, build_options(cfg)), SpecializePolicy::all_to_u())),
                          build_unoriented(g, build_options(cfg)));
    });
  }
  return rec.finish();
}

SuiteReport band_suite(const RunConfig& cfg) {
  Recorder rec("band-relations");
  for (const auto& ng : builtin_corpus()) {
    const auto& g = ng.grid;
    if (!within_cap(g, cfg)) continue;
    const auto c = build_unoriented(g, build_options(cfg));
    const auto h = g.size() <= 6 ? std::optional<Homology>(compute_homology(c)) : std::nullopt;
    for (const auto& s : find_switch_sites(g)) {
      const auto g2 = apply_switch(g, s);
      const auto rev = reverse_site(g, s);
      const BandMapChoice there{s, BandFlavor::Nu, natural_direction(g, s)};
      const BandMapChoice back{rev, BandFlavor::Nu, natural_direction(g2, rev)};
      const std::vector<Move> movie{SwitchMove{there}, SwitchMove{back}};
      const auto c2 = build_unoriented(g2, build_options(cfg));
      rec.check(ng.name + ": nu' nu = U and nu nu' = U pointwise", g, movie, [&] {
        const auto nu = band_map(g, c, c2, there);
        const auto nu_back = band_map(g2, c2, c, back);
        const auto u = PolyF2U::monomial(1);
        return nu_back.after(nu) == UMap::scalar(c.size(), u) && nu.after(nu_back) == UMap::scalar(c2.size(), u) &&
               nu.degree(c, c2).has_value() && nu_back.degree(c2, c).has_value();
      });
      if (!h) continue;
      rec.check(ng.name + ": band then inverse band is U on homology", g, movie, [&] {
        const auto r = compose_movie({{g, {}}, movie}, {.build = build_options(cfg), .induced = false});
        const auto u = UMap::scalar(c.size(), PolyF2U::monomial(1));
        return maps_equal_on_homology(r.total, u, c, *h, c, *h);
      });
    }
  }
  return rec.finish();
}

SuiteReport stab_suite(const RunConfig& cfg) {
  Recorder rec("stab-relations");
  const auto zero = PolyF2U::zero(), one = PolyF2U::one();
  auto induced_is = [&](const GridDiagram& g, const std::vector<Move>& moves, const PolyF2U& p) {
    const auto r = compose_movie({{g, {}}, moves}, {.build = build_options(cfg), .induced = true});
    return r.final_state.factors.empty() && *r.induced == scalar_on_homology(*r.target_homology, p);
  };
  for (const auto& ng : builtin_corpus()) {
    const auto& g = ng.grid;
    if (!within_cap(g, cfg) || g.size() > 5) continue;
    const auto topo = link_topology(g);
    for (int a = 0; a < g.marking_count(); ++a) {
      const auto ma = Marking::from_id(a, g.size());
      for (auto side : {StabSide::Alpha, StabSide::Beta}) {
        const std::vector<Move> same{QuasiStabMove{ma, side}, QuasiDestabMove{ma}};
        rec.check(ng.name + ": destab after stab at one anchor is 0", g, same, [&] { return induced_is(g, same, zero); });
      }
      for (int b = 0; b < g.marking_count(); ++b) {
        if (!topo.adjacent(a, b)) continue;
        const std::vector<Move> adj{QuasiStabMove{ma, StabSide::Beta}, QuasiDestabMove{Marking::from_id(b, g.size())}};
        rec.check(ng.name + ": destab at an adjacent anchor after stab is id", g, adj,
                  [&] { return induced_is(g, adj, one); });
      }
    }
    const std::vector<Move> disk{DiskStabMove{}, DiskDestabMove{}};
    rec.check(ng.name + ": disk destab after disk stab is 0", g, disk, [&] { return induced_is(g, disk, zero); });
  }
  return rec.finish();
}

SuiteReport commutation_suite(const RunConfig& cfg) {
  Recorder rec("commutation");
  for (const auto& ng : builtin_corpus()) {
    const auto& g = ng.grid;
    if (!within_cap(g, cfg) || g.size() > 6) continue;
    const auto sites = find_switch_sites(g);
    for (std::size_t i = 0; i < sites.size(); ++i)
      for (std::size_t j = i + 1; j < sites.size(); ++j) {
        if (!sites_disjoint(g, sites[i], sites[j])) continue;
        // Pairs where one switch destroys the other block are not commuting squares.
        bool square = false;
        try {
          const auto g1 = apply_switch(g, sites[i]);
          const auto g2 = apply_switch(g, sites[j]);
          bool found1 = false, found2 = false;
          for (const auto& t : find_switch_sites(g1)) found1 |= t.col == sites[j].col && t.row == sites[j].row;
          for (const auto& t : find_switch_sites(g2)) found2 |= t.col == sites[i].col && t.row == sites[i].row;
          square = found1 && found2;
        } catch (const Error&) {
        }
        if (!square) continue;
        const BandMapChoice first{sites[i], BandFlavor::Nu, natural_direction(g, sites[i])};
        const std::vector<Move> movie{SwitchMove{first}};
        rec.check(ng.name + ": disjoint switches " + to_string(sites[i]) + " and " + to_string(sites[j]) + " commute",
                  g, movie, [&] { return verify_commutation(g, sites[i], sites[j], build_options(cfg)); });
      }
  }
  return rec.finish();
}

void dump(const Counterexample& c, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / "failure.grid") << "# " << c.check << '\n' << c.grid;
  std::ofstream(std::filesystem::path(dir) / "failure.movie") << "# " << c.check << '\n' << c.movie;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"curvature", "band-relations", "stab-relations", "commutation",
                                              "grading"};
  return names;
}

SuiteReport run_suite(const std::string& suite, const RunConfig& cfg) {
  SuiteReport r;
  if (suite == "curvature") r = curvature_suite(cfg);
  else if (suite == "band-relations") r = band_suite(cfg);
  else if (suite == "stab-relations") r = stab_suite(cfg);
  else if (suite == "commutation") r = commutation_suite(cfg);
  else if (suite == "grading") r = grading_suite(cfg);
  else throw Error(ErrorCode::UnknownSuite, "no suite named '" + suite + "'");
  if (r.first_failure && !cfg.dump_dir.empty()) dump(*r.first_failure, cfg.dump_dir);
  return r;
}

}  // namespace unogrid::cli
