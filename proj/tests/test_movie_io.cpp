#include <doctest.h>

#include "unogrid/error.hpp"
#include "unogrid/movie_io.hpp"

using namespace unogrid;

namespace {

std::string parse_error_of(const std::string& text) {
  try {
    parse_movie(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.what();
  }
  FAIL("no parse error");
  return {};
}

}  // namespace

TEST_CASE("movie scripts parse") {
  const auto moves = parse_movie(
      "# comment\n"
      "switch col=1 row=5 letter=OX flavor=nu dir=inv\n"
      "switch col=2 row=2 letter=O flavor=nu_tilde dir=fwd\n"
      "\n"
      "quasistab anchor=O3 side=alpha\n"
      "quasidestab anchor=X1\n"
      "diskstab\n"
      "diskdestab\n"
      "renumber 2 1 3 4\n");
  REQUIRE(moves.size() == 7);
  const auto& sw = std::get<SwitchMove>(moves[0]).choice;
  CHECK(sw.site == SwitchSite{0, 4, SiteLetter::Mixed});
  CHECK(sw.flavor == BandFlavor::Nu);
  CHECK(sw.direction == BandDirection::Inverse);
  CHECK(std::get<SwitchMove>(moves[1]).choice.flavor == BandFlavor::NuTilde);
  CHECK(std::get<QuasiStabMove>(moves[2]).anchor == Marking{Letter::O, 2});
  CHECK(std::get<QuasiStabMove>(moves[2]).side == StabSide::Alpha);
  CHECK(std::get<QuasiDestabMove>(moves[3]).anchor == Marking{Letter::X, 0});
  CHECK(std::holds_alternative<DiskStabMove>(moves[4]));
  CHECK(std::holds_alternative<DiskDestabMove>(moves[5]));
  CHECK(std::get<RenumberMove>(moves[6]).perm == std::vector<int>{1, 0, 2, 3});
}

TEST_CASE("movie round trip") {
  const std::string text =
      "switch col=3 row=1 letter=X flavor=nu_tilde dir=inv\nquasistab anchor=X2 side=beta\nquasidestab anchor=O2\n"
      "diskstab\ndiskdestab\nrenumber 1 3 2\n";
  const auto moves = parse_movie(text);
  CHECK(parse_movie(serialize_movie(moves)) == moves);
  CHECK(serialize_movie({}).empty());
  CHECK(parse_movie("").empty());
}

TEST_CASE("switch defaults") {
  const auto m = parse_movie("switch col=1 row=1 letter=O\n");
  CHECK(std::get<SwitchMove>(m[0]).choice.flavor == BandFlavor::Nu);
}

TEST_CASE("movie parse errors are line numbered") {
  CHECK(parse_error_of("diskstab\nfrobnicate\n").find("line 2") != std::string::npos);
  CHECK(parse_error_of("switch col=0 row=1 letter=O\n").find("line 1") != std::string::npos);
  CHECK(parse_error_of("switch col=1 row=1 letter=Q\n").find("line 1") != std::string::npos);
  CHECK(parse_error_of("quasistab anchor=Z3\n").find("line 1") != std::string::npos);
  CHECK(parse_error_of("diskstab\n\nquasidestab\n").find("line 3") != std::string::npos);
  CHECK(parse_error_of("renumber 1 x\n").find("line 1") != std::string::npos);
  CHECK(parse_error_of("switch col=1 row=1 letter=O dir=up\n").find("line 1") != std::string::npos);
}

TEST_CASE("marking names") {
  CHECK(parse_marking("O3") == Marking{Letter::O, 2});
  CHECK(parse_marking("X12") == Marking{Letter::X, 11});
  CHECK_THROWS_AS(parse_marking("O0"), Error);
  CHECK_THROWS_AS(parse_marking("Y1"), Error);
  CHECK_THROWS_AS(parse_marking("O"), Error);
}

TEST_CASE("corpus movies load") {
  for (const char* name : {"trefoil_band_inverse", "empty", "quasi_stab_adjacent", "quasi_stab_same", "disk_stab"})
    CHECK_NOTHROW(load_movie(std::string(UNOGRID_CORPUS_DIR) + "/movies/" + name + ".movie"));
  CHECK_THROWS_AS(load_movie("/nonexistent.movie"), Error);
}
