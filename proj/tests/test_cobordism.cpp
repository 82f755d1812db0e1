#include <doctest.h>

#include <set>

#include "unogrid/cobordism.hpp"
#include "unogrid/corpus.hpp"
#include "unogrid/error.hpp"

using namespace unogrid;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

PolyF2U U(int k) { return PolyF2U::monomial(k); }

BandMapChoice natural(const GridDiagram& g, const SwitchSite& s) { return {s, BandFlavor::Nu, natural_direction(g, s)}; }

GridState inverse(const GridState& x) {
  GridState y{std::vector<int>(x.perm.size())};
  for (std::size_t i = 0; i < x.perm.size(); ++i) y.perm[static_cast<std::size_t>(x.perm[i])] = static_cast<int>(i);
  return y;
}

MovieState plain(const GridDiagram& g) { return {g, {}}; }

}  // namespace

TEST_CASE("distinguished point and the pointwise rule") {
  const auto& g = corpus_grid("trefoil5");
  const SwitchSite s{0, 0, SiteLetter::O};
  CHECK(distinguished_point(g, s) == std::pair{1, 1});
  CHECK(distinguished_point(g, {4, 3, SiteLetter::Mixed}) == std::pair{0, 4});
  for (const auto& x : enumerate_states(5)) {
    const bool through = x.perm[1] == 1;
    CHECK(band_multiplies(g, {s, BandFlavor::Nu, BandDirection::Forward}, x) == through);
    CHECK(band_multiplies(g, {s, BandFlavor::Nu, BandDirection::Inverse}, x) == !through);
    CHECK(band_multiplies(g, {s, BandFlavor::NuTilde, BandDirection::Forward}, x) == !through);
  }
  CHECK(natural_direction(g, s) == BandDirection::Forward);
  CHECK(natural_direction(g, {0, 4, SiteLetter::Mixed}) == BandDirection::Inverse);
}

TEST_CASE("nu is a chain map and nu' nu = U pointwise on every corpus site") {
  for (const auto& ng : builtin_corpus()) {
    if (ng.grid.size() > 6) continue;
    const auto& g = ng.grid;
    const auto c = build_unoriented(g);
    for (const auto& s : find_switch_sites(g)) {
      CAPTURE(ng.name);
      CAPTURE(to_string(s));
      const auto g2 = apply_switch(g, s);
      const auto c2 = build_unoriented(g2);
      const auto rev = reverse_site(g, s);
      const auto nu = band_map(g, c, c2, natural(g, s));
      const auto back = band_map(g2, c2, c, natural(g2, rev));
      CHECK(back.after(nu) == UMap::scalar(c.size(), U(1)));
      CHECK(nu.after(back) == UMap::scalar(c2.size(), U(1)));
      REQUIRE(nu.degree(c, c2).has_value());
      REQUIRE(back.degree(c2, c).has_value());
      CHECK(*nu.degree(c, c2) + *back.degree(c2, c) == -2);
    }
  }
}

TEST_CASE("band map degrees on the trefoil") {
  const auto& g = corpus_grid("trefoil5");
  const auto c = build_unoriented(g);
  for (const auto& s : find_switch_sites(g)) {
    const auto g2 = apply_switch(g, s);
    const auto c2 = build_unoriented(g2);
    CHECK(band_map(g, c, c2, natural(g, s)).degree(c, c2) == (s.letter == SiteLetter::Mixed ? -4 : -2));
  }
}

TEST_CASE("band map errors") {
  const auto& g = corpus_grid("trefoil5");
  const auto c = build_unoriented(g);
  CHECK(code_of([&] { band_map(g, c, c, {{1, 0, SiteLetter::O}}); }) == ErrorCode::InvalidSite);
  // the rule in the wrong direction is caught by the chain-map assertion
  const SwitchSite s{0, 0, SiteLetter::O};
  const auto c2 = build_unoriented(apply_switch(g, s));
  CHECK(code_of([&] { band_map(g, c, c2, {s, BandFlavor::Nu, BandDirection::Inverse}); }) ==
        ErrorCode::ChainMapViolation);
}

TEST_CASE("band construction is symmetric under transposition") {
  for (const auto& ng : builtin_corpus()) {
    if (ng.grid.size() > 5) continue;
    const auto& g = ng.grid;
    const auto gt = g.transposed();
    const auto c = build_unoriented(g), ct = build_unoriented(gt);
    const auto states = enumerate_states(g.size());
    for (const auto& x : states) CHECK(delta_grading(g, x) == delta_grading(gt, inverse(x)));
    for (const auto& s : find_switch_sites(g)) {
      const SwitchSite st{s.row, s.col, s.letter};
      REQUIRE(is_valid_site(gt, st));
      CHECK(site_diagonal(gt, st) == site_diagonal(g, s));
      CHECK(natural_direction(gt, st) == natural_direction(g, s));
      if (s.letter != SiteLetter::Mixed) CHECK(apply_switch(gt, st) == apply_switch(g, s).transposed());
      for (const auto& x : states)
        CHECK(band_multiplies(gt, {st, BandFlavor::Nu, BandDirection::Forward}, inverse(x)) ==
              band_multiplies(g, {s, BandFlavor::Nu, BandDirection::Forward}, x));
      const auto c2t = build_unoriented(apply_switch(gt, st));
      CHECK_NOTHROW(band_map(gt, ct, c2t, natural(gt, st)));
    }
  }
}

TEST_CASE("stabilization gap is derived from the 2x2 unknot") {
  CHECK(stabilization_gap() == 0);
  const auto h3 = compute_homology(build_unoriented(corpus_grid("unknot3"))).summary();
  const auto h2 = compute_homology(build_unoriented(corpus_grid("unknot2"))).summary();
  CHECK(h3 == h2.tensor_rank2(0, -stabilization_gap()));
}

TEST_CASE("quasi-stabilization relations at chain level") {
  const auto& g = corpus_grid("trefoil5");
  const auto c = build_unoriented(g);
  const auto topo = link_topology(g);
  for (int a = 0; a < g.marking_count(); ++a) {
    const auto ma = Marking::from_id(a, 5);
    const auto st = quasi_stab(plain(g), c, {StabKind::Quasi, StabSide::Beta, ma});
    CHECK(st.state.factors.size() == 1);
    CHECK(st.target.size() == 2 * c.size());
    CHECK(st.map.is_chain_map(c, st.target));
    CHECK(quasi_destab(st.state, st.target, ma).map.after(st.map).is_zero());
    for (int b = 0; b < g.marking_count(); ++b) {
      const auto mb = Marking::from_id(b, 5);
      if (topo.adjacent(a, b)) {
        const auto ds = quasi_destab(st.state, st.target, mb);
        CHECK(ds.map.after(st.map) == UMap::identity(c.size()));
        CHECK(ds.state == plain(g));
      } else if (a != b) {
        CHECK(code_of([&] { quasi_destab(st.state, st.target, mb); }) == ErrorCode::AnchorMismatch);
      }
    }
  }
}

TEST_CASE("disk stabilization") {
  const auto& g = corpus_grid("hopf4");
  const auto c = build_unoriented(g);
  const auto st = disk_stab(plain(g), c);
  CHECK(disk_destab(st.state, st.target).map.after(st.map).is_zero());
  CHECK(code_of([&] { disk_destab(plain(g), c); }) == ErrorCode::MoveSequenceInvalid);
  const auto h = compute_homology(c).summary();
  CHECK(compute_homology(st.target).summary() == h.tensor_rank2(0, -stabilization_gap()));
}

TEST_CASE("renumbering") {
  const auto& g = corpus_grid("unknot3");
  const auto c = build_unoriented(g);
  const auto r = renumber(plain(g), c, {1, 0, 2, 3, 4, 5});
  CHECK(r.map == UMap::identity(c.size()));
  CHECK(code_of([&] { renumber(plain(g), c, {0, 0, 1, 2, 3, 4}); }) == ErrorCode::BadPermutation);
  CHECK(code_of([&] { renumber(plain(g), c, {0, 1}); }) == ErrorCode::BadPermutation);
}

TEST_CASE("movie composition") {
  const auto& g = corpus_grid("trefoil5");
  const SwitchSite s{0, 4, SiteLetter::Mixed};

  SUBCASE("empty movie is the identity") {
    const auto r = compose_movie({plain(g), {}});
    CHECK(r.total == UMap::identity(120));
    CHECK(*r.induced == scalar_on_homology(*r.source_homology, PolyF2U::one()));
  }
  SUBCASE("band then inverse band induces U") {
    const auto g2 = apply_switch(g, s);
    const Movie m{plain(g), {SwitchMove{natural(g, s)}, SwitchMove{natural(g2, reverse_site(g, s))}}};
    const auto r = compose_movie(m);
    CHECK(r.final_state == plain(g));
    CHECK(*r.induced == scalar_on_homology(*r.target_homology, U(1)));
    CHECK(r.degree == -2);
  }
  SUBCASE("stab then adjacent destab is the identity on homology") {
    const Movie m{plain(g), {QuasiStabMove{{Letter::O, 0}}, QuasiDestabMove{{Letter::X, 0}}}};
    const auto r = compose_movie(m);
    CHECK(*r.induced == scalar_on_homology(*r.target_homology, PolyF2U::one()));
  }
  SUBCASE("invalid moves name the failing move") {
    const Movie m{plain(g), {DiskStabMove{}, SwitchMove{{{1, 0, SiteLetter::O}}}}};
    try {
      compose_movie(m);
      FAIL("expected MoveSequenceInvalid");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MoveSequenceInvalid);
      CHECK(std::string(e.what()).find("move 2 (switch)") != std::string::npos);
      CHECK(std::string(e.what()).find("InvalidSite") != std::string::npos);
    }
  }
  SUBCASE("re-associating the composition gives the same maps") {
    const auto g2 = apply_switch(g, s);
    const std::vector<Move> moves{SwitchMove{natural(g, s)}, QuasiStabMove{{Letter::O, 1}}, DiskStabMove{},
                                  SwitchMove{natural(g2, reverse_site(g, s))}, DiskDestabMove{},
                                  QuasiDestabMove{{Letter::O, 1}}};
    const auto whole = compose_movie({plain(g), moves}, {.induced = false});
    for (std::size_t cut = 0; cut <= moves.size(); ++cut) {
      const std::vector<Move> head(moves.begin(), moves.begin() + static_cast<long>(cut));
      const std::vector<Move> tail(moves.begin() + static_cast<long>(cut), moves.end());
      const auto a = compose_movie({plain(g), head}, {.induced = false});
      const auto b = compose_movie({a.final_state, tail}, {.induced = false});
      CHECK(b.total.after(a.total) == whole.total);
      CHECK(b.final_state == whole.final_state);
    }
  }
}

TEST_CASE("disjoint band moves commute on homology") {
  const auto& g = corpus_grid("split_unknot3_unknot3");
  CHECK(verify_commutation(g, {2, 2, SiteLetter::O}, {5, 5, SiteLetter::O}));
  CHECK(verify_commutation(g, {0, 1, SiteLetter::Mixed}, {3, 4, SiteLetter::Mixed}));
  CHECK(code_of([&] { verify_commutation(g, {2, 2, SiteLetter::O}, {2, 2, SiteLetter::O}); }) ==
        ErrorCode::SitesNotDisjoint);
  CHECK(code_of([&] { verify_commutation(g, {2, 2, SiteLetter::O}, {5, 5, SiteLetter::X}); }) ==
        ErrorCode::InvalidSite);
}

TEST_CASE("band and quasi-stabilization away from the block commute on homology") {
  const auto& g = corpus_grid("trefoil5");
  const SwitchSite s{0, 0, SiteLetter::O};
  const Marking far{Letter::O, 3};  // row 3 is outside the block rows 0 and 1
  const auto one = compose_movie({plain(g), {SwitchMove{natural(g, s)}, QuasiStabMove{far}}});
  const auto two = compose_movie({plain(g), {QuasiStabMove{far}, SwitchMove{natural(g, s)}}});
  CHECK(one.final_state == two.final_state);
  CHECK(maps_equal_on_homology(one.total, two.total, one.source, *one.source_homology, one.target,
                               *one.target_homology));
}
