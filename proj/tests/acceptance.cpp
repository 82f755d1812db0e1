// Acceptance report: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run one; the exit code reflects that criterion only

#include <sys/resource.h>

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "oracle/oracle.hpp"
#include "unogrid/cobordism.hpp"
#include "unogrid/corpus.hpp"
#include "unogrid/error.hpp"
#include "unogrid/gc_complex.hpp"
#include "unogrid/grid_io.hpp"
#include "unogrid/homology.hpp"
#include "unogrid/smith.hpp"

using namespace unogrid;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

PolyF2U U(int k) { return PolyF2U::monomial(k); }

int worker_count() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

// Runs f(i) for i in [0, count) on a pool of threads.
void parallel(std::size_t count, const std::function<void(std::size_t)>& f) {
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < worker_count(); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) f(i);
    });
  for (auto& th : pool) th.join();
}

// Checks one GC': homogeneous and square zero. Returns an empty string on success.
std::string check_gc(const GridDiagram& g) {
  try {
    const auto c = build_unoriented(g);
    c.check_homogeneous();
    c.check_square_zero();
    return {};
  } catch (const Error& e) {
    return serialize_grid(g) + e.what();
  }
}

struct Sweep {
  std::atomic<long> checked{0};
  std::mutex m;
  std::string first_failure;

  void run(const std::vector<GridDiagram>& grids, const std::function<std::string(const GridDiagram&)>& check) {
    parallel(grids.size(), [&](std::size_t i) {
      auto why = check(grids[i]);
      ++checked;
      if (!why.empty()) {
        std::lock_guard lock(m);
        if (first_failure.empty()) first_failure = std::move(why);
      }
    });
  }
};

std::vector<GridDiagram> all_grids(int n) {
  std::vector<GridDiagram> out;
  for_each_grid(n, [&](const GridDiagram& g) { out.push_back(g); });
  return out;
}

Outcome criterion1() {
  Sweep sweep;
  std::size_t per_n[8] = {};
  for (int n = 2; n <= 5; ++n) {
    const auto grids = all_grids(n);
    per_n[n] = grids.size();
    sweep.run(grids, check_gc);
  }
  // n = 6: one grid per orbit of toroidal translations, plus every translate of the corpus grids
  std::vector<GridDiagram> six;
  for_each_grid(6, [&](const GridDiagram& g) {
    if (translation_representative(g) == g) six.push_back(g);
  });
  for (const auto& ng : builtin_corpus())
    if (ng.grid.size() == 6)
      for (int c = 0; c < 6; ++c)
        for (int r = 0; r < 6; ++r) six.push_back(ng.grid.rotated(c, r));
  per_n[6] = six.size();
  sweep.run(six, check_gc);
  std::mt19937_64 rng(7001);
  std::vector<GridDiagram> seven;
  for (int k = 0; k < 100; ++k) seven.push_back(random_grid(7, rng));
  per_n[7] = seven.size();
  sweep.run(seven, check_gc);
  std::ostringstream d;
  d << sweep.checked << " grids (n=2..5 exhaustive: " << per_n[2] << "+" << per_n[3] << "+" << per_n[4] << "+"
    << per_n[5] << "; n=6 translation classes and corpus translates: " << per_n[6] << "; n=7 random: " << per_n[7]
    << ")";
  if (!sweep.first_failure.empty()) d << "; first failure:\n" << sweep.first_failure;
  return {sweep.first_failure.empty(), d.str()};
}

Outcome criterion2() {
  Sweep sweep;
  for (int n = 2; n <= 5; ++n)
    sweep.run(all_grids(n), [](const GridDiagram& g) -> std::string {
      return matches_curvature(g, build_complex(g)) ? "" : serialize_grid(g);
    });
  return {sweep.first_failure.empty(), std::to_string(sweep.checked) + " grids n<=5, boundary squared equals the "
                                                                        "sum of adjacent marking products times id" +
                                           (sweep.first_failure.empty() ? "" : "; failure:\n" + sweep.first_failure)};
}

Outcome criterion3() {
  std::vector<GridDiagram> grids;
  for (int n = 2; n <= 5; ++n)
    for (auto& g : all_grids(n)) grids.push_back(std::move(g));
  for (const auto& ng : builtin_corpus()) grids.push_back(ng.grid);
  std::mt19937_64 rng(7003);
  for (int k = 0; k < 20; ++k) grids.push_back(random_grid(6 + k % 2, rng));
  // every switched grid of the corpus as well
  for (const auto& ng : builtin_corpus())
    for (const auto& s : find_switch_sites(ng.grid)) grids.push_back(apply_switch(ng.grid, s));
  Sweep sweep;
  sweep.run(grids, [](const GridDiagram& g) -> std::string {
    try {
      build_unoriented(g).check_homogeneous();
      if (g.size() <= 5)
        to_ucomplex(specialize(build_complex(g), SpecializePolicy::all_to_u())).check_homogeneous();
      return {};
    } catch (const Error& e) {
      return serialize_grid(g) + e.what();
    }
  });
  return {sweep.first_failure.empty(),
          std::to_string(sweep.checked) + " complexes, every entry U^w with 2d(x) - 2d(y) = 2 - 2w" +
              (sweep.first_failure.empty() ? "" : "; failure:\n" + sweep.first_failure)};
}

GradedModuleSummary tensor_v(GradedModuleSummary s, int copies) {
  for (int i = 0; i < copies; ++i) s = s.tensor_rank2(0, -stabilization_gap());
  return s;
}

Outcome criterion4() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto h = compute_homology(build_unoriented(corpus_grid("trefoil5"))).summary();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  // model a, b, c with da = U(b + c), generated in doubled grading 0
  const auto model = compute_homology(UComplex::from_entries(
                                          [] {
                                            GradedBasis b;
                                            for (const char* l : {"a", "b", "c"}) b.push(l, 0);
                                            return b;
                                          }(),
                                          {{0, 1, 1}, {0, 2, 1}}))
                         .summary();
  const auto expected = tensor_v(model, 4);
  const int shift = h.entries().empty() ? 0 : h.entries().begin()->first;
  const bool iso = h == expected.shifted(shift);
  const bool counts = h.total_free_rank() == 16 && h.total_torsion_count() == 16;
  std::vector<int> torsion;
  for (const auto& [g, e] : h.entries()) torsion.insert(torsion.end(), e.torsion.begin(), e.torsion.end());
  const bool all_u = std::all_of(torsion.begin(), torsion.end(), [](int k) { return k == 1; });
  std::ostringstream d;
  d << "free " << h.total_free_rank() << ", torsion " << h.total_torsion_count() << " x F2[U]/(U), iso to (F2[U] + "
    << "F2[U]/(U)) x V^4 shifted to doubled grading " << shift << ": " << (iso ? "yes" : "no") << ", " << secs << " s";
  return {iso && counts && all_u && secs < 10, d.str()};
}

Outcome criterion5() {
  const int gap = stabilization_gap();
  std::ostringstream d;
  bool ok = true;
  d << "s_V = " << gap << ";";
  for (int n = 2; n <= 4; ++n) {
    const auto h = compute_homology(build_unoriented(corpus_grid("unknot" + std::to_string(n)))).summary();
    GradedModuleSummary tower;
    tower.add_free(h.entries().empty() ? 0 : h.entries().begin()->first);
    const bool iso = h == tensor_v(tower, n - 1);
    ok &= iso;
    d << " n=" << n << " free " << h.total_free_rank() << (iso ? " ok" : " mismatch") << ";";
  }
  return {ok, d.str()};
}

Outcome criterion6() {
  long sites = 0, good = 0;
  std::string first;
  for (const auto& ng : builtin_corpus()) {
    const auto& g = ng.grid;
    const auto c = build_unoriented(g);
    for (const auto& s : find_switch_sites(g)) {
      ++sites;
      try {
        const auto g2 = apply_switch(g, s);
        const auto c2 = build_unoriented(g2);
        const auto rev = reverse_site(g, s);
        const auto nu = band_map(g, c, c2, {s, BandFlavor::Nu, natural_direction(g, s)});
        const auto back = band_map(g2, c2, c, {rev, BandFlavor::Nu, natural_direction(g2, rev)});
        if (back.after(nu) == UMap::scalar(c.size(), U(1)) && nu.after(back) == UMap::scalar(c2.size(), U(1)))
          ++good;
        else if (first.empty())
          first = ng.name + " " + to_string(s);
      } catch (const Error& e) {
        if (first.empty()) first = ng.name + " " + to_string(s) + ": " + e.what();
      }
    }
  }
  return {sites > 0 && good == sites, std::to_string(good) + "/" + std::to_string(sites) +
                                          " corpus sites with nu' nu = U id and nu nu' = U id as matrices" +
                                          (first.empty() ? "" : "; first failure " + first)};
}

Outcome criterion7() {
  const auto& g = corpus_grid("trefoil5");
  const auto unknot = compute_homology(build_unoriented(shifted_grid(5, 1))).summary();
  for (const auto& s : find_switch_sites(g)) {
    const auto cls = classify_band(g, s);
    if (cls.orientation != BandOrientation::Unoriented || cls.type != BandType::TypeI) continue;
    const auto g2 = apply_switch(g, s);
    if (compute_homology(build_unoriented(g2)).summary() != unknot) continue;
    const Movie m{{g, {}},
                  {SwitchMove{{s, BandFlavor::Nu, natural_direction(g, s)}},
                   SwitchMove{{reverse_site(g, s), BandFlavor::Nu, natural_direction(g2, reverse_site(g, s))}}}};
    const auto r = compose_movie(m);
    const bool exact_u = r.final_state == m.start && *r.induced == scalar_on_homology(*r.target_homology, U(1));
    return {exact_u, "site " + to_string(s) + ": " + to_string(cls) + ", switched grid has unknot homology, " +
                         "[band; inverse band] induces " + (exact_u ? "exactly U" : "something other than U")};
  }
  return {false, "no unoriented Type I trefoil site with unknot homology"};
}

Outcome criterion8() {
  long sites = 0, pointwise = 0, chain = 0;
  for (const auto& ng : builtin_corpus()) {
    const auto& g = ng.grid;
    if (g.size() > 6) continue;
    const auto c = build_unoriented(g);
    for (const auto& s : find_switch_sites(g)) {
      ++sites;
      const auto g2 = apply_switch(g, s);
      const auto c2 = build_unoriented(g2);
      const auto dir = natural_direction(g, s);
      const auto f = band_rule(g, {s, BandFlavor::Nu, dir}, c.size()) + band_rule(g, {s, BandFlavor::NuTilde, dir}, c.size());
      if (f == UMap::scalar(c.size(), PolyF2U::from_exponents({0, 1}))) ++pointwise;
      if (f.is_chain_map(c, c2)) ++chain;
    }
  }
  std::ostringstream d;
  d << "nu + nu_tilde equals (1+U) id pointwise on " << pointwise << "/" << sites << " sites; chain map on " << chain
    << "/" << sites << " (a chain map would need the switch to leave the boundary unchanged)";
  return {sites > 0 && pointwise == sites && chain == sites, d.str()};
}

Outcome criterion9() {
  long checks = 0, good = 0;
  std::string first;
  auto expect = [&](const GridDiagram& g, const std::vector<Move>& moves, const PolyF2U& p, const std::string& what) {
    ++checks;
    const auto r = compose_movie({{g, {}}, moves});
    if (*r.induced == scalar_on_homology(*r.target_homology, p)) ++good;
    else if (first.empty()) first = what;
  };
  for (const auto& ng : builtin_corpus()) {
    const auto& g = ng.grid;
    if (g.size() > 6) continue;
    const auto topo = link_topology(g);
    for (int a = 0; a < g.marking_count(); ++a) {
      const auto ma = Marking::from_id(a, g.size());
      for (const auto side : {StabSide::Alpha, StabSide::Beta}) {
        expect(g, {QuasiStabMove{ma, side}, QuasiDestabMove{ma}}, PolyF2U::zero(),
               ng.name + " equal anchor " + ma.name());
        for (int b = 0; b < g.marking_count(); ++b)
          if (topo.adjacent(a, b))
            expect(g, {QuasiStabMove{ma, side}, QuasiDestabMove{Marking::from_id(b, g.size())}}, PolyF2U::one(),
                   ng.name + " adjacent anchors " + ma.name());
      }
    }
    expect(g, {DiskStabMove{}, DiskDestabMove{}}, PolyF2U::zero(), ng.name + " disk");
  }
  return {good == checks, std::to_string(good) + "/" + std::to_string(checks) +
                              " movies (equal anchor 0, adjacent anchor id, disk 0) on homology" +
                              (first.empty() ? "" : "; first failure " + first)};
}

Outcome criterion10() {
  struct Case {
    const char* grid;
    SwitchSite a, b;
  };
  const Case cases[] = {
      {"split_unknot3_unknot3", {2, 2, SiteLetter::O}, {5, 5, SiteLetter::O}},
      {"split_unknot3_unknot3", {0, 1, SiteLetter::Mixed}, {3, 4, SiteLetter::Mixed}},
      {"split_trefoil5_unknot2", {4, 4, SiteLetter::O}, {6, 6, SiteLetter::O}},
      {"split_trefoil5_unknot2", {1, 0, SiteLetter::Mixed}, {4, 4, SiteLetter::O}},
  };
  std::ostringstream d;
  bool ok = true;
  for (const auto& c : cases) {
    const auto& g = corpus_grid(c.grid);
    bool agree = false;
    try {
      agree = is_valid_site(g, c.a) && is_valid_site(g, c.b) && sites_disjoint(g, c.a, c.b) &&
              verify_commutation(g, c.a, c.b);
    } catch (const Error& e) {
      d << e.what() << "; ";
    }
    ok &= agree;
    d << c.grid << " " << to_string(c.a) << " | " << to_string(c.b) << ": " << (agree ? "commute" : "differ") << "; ";
  }
  return {ok, d.str()};
}

Outcome criterion11() {
  std::mt19937_64 rng(7011);
  int agree = 0;
  std::string first;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t r = 1 + rng() % 12, c = 1 + rng() % 12;
    std::vector<int> a(r), b(c);
    for (auto& v : a) v = static_cast<int>(rng() % 3);
    for (auto& v : b) v = static_cast<int>(rng() % 3);
    const unsigned density = 20 + static_cast<unsigned>(rng() % 70);
    PolyMatrix m(r, c);
    oracle::Matrix om(r, std::vector<oracle::Poly>(c));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() % 100 < density) {
          m.at(i, j) = U(a[i] + b[j]);  // exponents 0..4
          om[i][j] = oracle::Poly::mono(a[i] + b[j]);
        }
    const auto s = smith_reduce(m);
    std::vector<int> expected;
    bool monomial = true;
    for (const auto& p : oracle::invariant_factors(om)) {
      monomial &= p.is_monomial();
      expected.push_back(p.deg());
    }
    std::sort(expected.begin(), expected.end());
    const bool ok = monomial && s.diagonal == expected && s.p * m * s.q == s.d &&
                    s.p * s.p_inv == PolyMatrix::identity(r) && s.q * s.q_inv == PolyMatrix::identity(c);
    if (ok) ++agree;
    else if (first.empty()) first = "trial " + std::to_string(trial) + "\n" + m.to_string();
  }
  return {agree == 500, std::to_string(agree) + "/500 random homogeneous matrices up to 12x12 agree with the "
                                                "Euclidean oracle (diagonal, PMQ = D, inverses)" +
                            (first.empty() ? "" : "; first failure " + first)};
}

Outcome criterion12() {
  std::mt19937_64 rng(7012);
  GridDiagram g = random_grid(7, rng);
  while (link_topology(g).component_count != 1) g = random_grid(7, rng);
  const auto t0 = std::chrono::steady_clock::now();
  const auto c = build_unoriented(g, {8, 1});
  const auto h = compute_homology(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  const double mib = static_cast<double>(ru.ru_maxrss) / 1024.0;
  std::ostringstream d;
  d << c.size() << " generators, " << c.entry_count() << " entries, free " << h.summary().total_free_rank()
    << " torsion " << h.summary().total_torsion_count() << ", " << secs << " s single-threaded, peak RSS " << mib
    << " MiB";
  return {c.size() == 5040 && secs < 60 && mib < 4096, d.str()};
}

const std::function<Outcome()> kCriteria[] = {criterion1, criterion2,  criterion3,  criterion4,
                                             criterion5, criterion6,  criterion7,  criterion8,
                                             criterion9, criterion10, criterion11, criterion12};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance report"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, 12));
  CLI11_PARSE(app, argc, argv);
  bool all = true;
  for (int i = 1; i <= 12; ++i) {
    if (only && i != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = kCriteria[i - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL") << " [" << secs << " s] " << o.detail
              << std::endl;
    all &= o.pass;
  }
  return all ? 0 : 1;
}
