#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "unogrid/cobordism.hpp"
#include "unogrid/gc_complex.hpp"
#include "unogrid/grid_io.hpp"
#include "unogrid/homology.hpp"
#include "unogrid/movie_io.hpp"

namespace unogrid::cli {

using nlohmann::json;

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kExitParseError;
    case ErrorCode::CapExceeded: return kExitCapExceeded;
    case ErrorCode::MoveSequenceInvalid: return kExitMoveSequenceInvalid;
    case ErrorCode::UnknownSuite: return kExitUnknownSuite;
    default: return kExitFailure;
  }
}

namespace {

BuildOptions build_options(const RunConfig& cfg) { return {cfg.state_cap, cfg.threads}; }

json summary_json(const GradedModuleSummary& s) { return json::parse(s.to_json()); }

std::string join(const std::vector<int>& v, int offset = 0) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i] + offset);
  return s;
}

std::string factor_name(const StabModel& m) {
  if (m.kind == StabKind::Disk) return "disk";
  return std::string("quasi:") + m.anchor.name() + (m.side == StabSide::Alpha ? ":alpha" : ":beta");
}

// Runs a command body and maps library errors to exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

std::string matrix_cell(const PolyF2U& p) { return p.to_string(); }

}  // namespace

int cmd_homology(const std::string& grid_file, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto g = load_grid(grid_file);
    const auto c = build_unoriented(g, build_options(cfg));
    const auto h = compute_homology(c, {.track_representatives = false});
    const auto& s = h.summary();
    const int components = link_topology(g).component_count;
    if (cfg.output == OutputFormat::Json) {
      json j{{"n", g.size()},
             {"components", components},
             {"states", c.size()},
             {"free_rank", s.total_free_rank()},
             {"torsion_count", s.total_torsion_count()},
             {"summary", summary_json(s)}};
      out << j.dump(2) << '\n';
    } else {
      out << "n " << g.size() << '\n'
          << "components " << components << '\n'
          << "states " << c.size() << '\n'
          << "free_rank " << s.total_free_rank() << '\n'
          << "torsion_count " << s.total_torsion_count() << '\n'
          << s.to_table();
    }
    return kExitOk;
  });
}

int cmd_movie(const std::string& grid_file, const std::string& movie_file, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto g = load_grid(grid_file);
    Movie movie{{g, {}}, load_movie(movie_file)};
    const auto r = compose_movie(movie, {.build = build_options(cfg), .induced = true});
    const auto& fg = r.final_state.grid;

    std::string induced_is = "n/a";
    if (r.final_state == movie.start) {
      const std::pair<const char*, PolyF2U> candidates[] = {
          {"identity", PolyF2U::one()}, {"U", PolyF2U::monomial(1)}, {"zero", PolyF2U::zero()}};
      induced_is = "other";
      for (const auto& [name, p] : candidates)
        if (*r.induced == scalar_on_homology(*r.target_homology, p)) {
          induced_is = name;
          break;
        }
    }
    std::vector<std::string> factors;
    for (const auto& f : r.final_state.factors) factors.push_back(factor_name(f));
    std::vector<std::vector<std::string>> matrix;
    for (const auto& row : r.induced->entries) {
      auto& cells = matrix.emplace_back();
      for (const auto& p : row) cells.push_back(matrix_cell(p));
    }

    if (cfg.output == OutputFormat::Json) {
      json degrees = json::array();
      for (const auto& d : r.move_degrees) degrees.push_back(d ? json(*d) : json(nullptr));
      json j{{"moves", movie.moves.size()},
             {"final_grid", json::parse(serialize_grid_json(fg))},
             {"factors", factors},
             {"degree", r.degree ? json(*r.degree) : json(nullptr)},
             {"move_degrees", degrees},
             {"source_homology", summary_json(r.source_homology->summary())},
             {"target_homology", summary_json(r.target_homology->summary())},
             {"induced", matrix},
             {"induced_is", induced_is}};
      out << j.dump(2) << '\n';
    } else {
      out << "moves " << movie.moves.size() << '\n'
          << "final_n " << fg.size() << '\n'
          << "final_O " << join(fg.o_col(), 1) << '\n'
          << "final_X " << join(fg.x_col(), 1) << '\n'
          << "factors";
      for (const auto& f : factors) out << ' ' << f;
      out << "\ndegree " << (r.degree ? std::to_string(*r.degree) : "none") << "\nmove_degrees";
      for (const auto& d : r.move_degrees) out << ' ' << (d ? std::to_string(*d) : "none");
      out << "\nsource_homology\n"
          << r.source_homology->summary().to_table() << "target_homology\n"
          << r.target_homology->summary().to_table() << "induced " << matrix.size() << 'x'
          << (matrix.empty() ? 0 : matrix[0].size()) << '\n';
      for (const auto& row : matrix) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
        out << '\n';
      }
      out << "induced_is " << induced_is << '\n';
    }
    return kExitOk;
  });
}

int cmd_sites(const std::string& grid_file, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto g = load_grid(grid_file);
    json list = json::array();
    std::string table;
    for (const auto& s : find_switch_sites(g)) {
      const auto cls = classify_band(g, s);
      const bool main = site_diagonal(g, s) == SiteDiagonal::Main;
      const char* orientation = cls.orientation == BandOrientation::Oriented ? "oriented" : "unoriented";
      const char* type = cls.type == BandType::TypeI ? "I" : "II";
      const char* dir = natural_direction(g, s) == BandDirection::Forward ? "fwd" : "inv";
      list.push_back({{"col", s.col + 1},
                      {"row", s.row + 1},
                      {"letter", to_string(s.letter)},
                      {"diagonal", main ? "main" : "anti"},
                      {"orientation", orientation},
                      {"type", type},
                      {"components_before", cls.components_before},
                      {"components_after", cls.components_after},
                      {"direction", dir}});
      table += "col=" + std::to_string(s.col + 1) + " row=" + std::to_string(s.row + 1) +
               " letter=" + std::string(to_string(s.letter)) + " diagonal=" + (main ? "main" : "anti") + ' ' +
               orientation + " type=" + type + " components=" + std::to_string(cls.components_before) + "->" +
               std::to_string(cls.components_after) + " dir=" + dir + '\n';
    }
    if (cfg.output == OutputFormat::Json)
      out << json{{"sites", list}}.dump(2) << '\n';
    else
      out << table;
    return kExitOk;
  });
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto r = run_suite(suite, cfg);
    const char* status = r.passed() ? "pass" : "fail";
    if (cfg.output == OutputFormat::Json) {
      json j{{"suite", r.suite}, {"checks", r.checks}, {"failures", r.failures}, {"status", status}};
      j["first_failure"] = r.first_failure
                               ? json{{"check", r.first_failure->check},
                                      {"grid", r.first_failure->grid},
                                      {"movie", r.first_failure->movie}}
                               : json(nullptr);
      out << j.dump(2) << '\n';
    } else {
      out << "suite " << r.suite << "\nchecks " << r.checks << "\nfailures " << r.failures << "\nstatus " << status
          << '\n';
      if (r.first_failure)
        out << "first_failure " << r.first_failure->check << "\n--- grid\n"
            << r.first_failure->grid << "--- movie\n"
            << r.first_failure->movie;
    }
    return r.passed() ? kExitOk : kExitFailure;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unoriented grid homology and band-move maps"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool json_out = false;
  app.add_option("--cap", cfg.state_cap, "largest grid size to build")->check(CLI::Range(2, 12));
  app.add_flag("--json", json_out, "JSON output");
  app.add_option("--threads", cfg.threads, "threads for complex construction")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  std::string grid_file, movie_file, suite;
  auto* homology = app.add_subcommand("homology", "graded summary of the unoriented homology");
  homology->add_option("grid", grid_file)->required();
  auto* movie = app.add_subcommand("movie", "compose a movie and report the induced map");
  movie->add_option("grid", grid_file)->required();
  movie->add_option("movie", movie_file)->required();
  auto* sites = app.add_subcommand("sites", "list switch sites with classifications");
  sites->add_option("grid", grid_file)->required();
  auto* verify = app.add_subcommand("verify", "run a relation suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--dump", cfg.dump_dir, "directory for the first counterexample");

  for (auto* sub : {homology, movie, sites, verify}) {
    sub->add_option("--cap", cfg.state_cap)->check(CLI::Range(2, 12));
    sub->add_flag("--json", json_out);
    sub->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }
  cfg.output = json_out ? OutputFormat::Json : OutputFormat::Table;

  if (*homology) return cmd_homology(grid_file, cfg, out, err);
  if (*movie) return cmd_movie(grid_file, movie_file, cfg, out, err);
  if (*sites) return cmd_sites(grid_file, cfg, out, err);
  return cmd_verify(suite, cfg, out, err);
}

}  // namespace unogrid::cli
