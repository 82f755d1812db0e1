#include "unogrid/grid_io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "unogrid/error.hpp"

namespace unogrid {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

GridDiagram from_one_indexed(std::vector<int> o, std::vector<int> x) {
  for (auto& v : o) --v;
  for (auto& v : x) --v;
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("o") || !j.contains("x"))
    throw Error(ErrorCode::ParseError, "json: expected keys n, o, x");
  std::vector<int> o, x;
  try {
    o = j.at("o").get<std::vector<int>>();
    x = j.at("x").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("json: ") + e.what());
  }
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(o.size()))
    throw Error(ErrorCode::ParseError, "json: n does not match length of o");
  return from_one_indexed(std::move(o), std::move(x));
}

}  // namespace

GridDiagram parse_grid(std::string_view text) {
  auto first = trim(text);
  if (!first.empty() && first.front() == '{') return parse_json(text);

  int n = -1, line_no = 0;
  std::vector<int> o, x;
  bool have_o = false, have_x = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected `key = value`");
    auto key = trim(line.substr(0, eq));
    std::istringstream values{std::string(trim(line.substr(eq + 1)))};
    std::vector<int> nums;
    std::string tok;
    while (values >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        nums.push_back(v);
      } catch (const std::exception&) {
        fail(line_no, "not an integer: `" + tok + "`");
      }
    }
    if (key == "n") {
      if (nums.size() != 1) fail(line_no, "n takes one integer");
      n = nums[0];
    } else if (key == "O") {
      o = std::move(nums);
      have_o = true;
    } else if (key == "X") {
      x = std::move(nums);
      have_x = true;
    } else {
      fail(line_no, "unknown key `" + std::string(key) + "`");
    }
  }
  if (n < 0) fail(line_no, "missing `n = <int>`");
  if (!have_o || !have_x) fail(line_no, "missing O or X line");
  if (static_cast<int>(o.size()) != n || static_cast<int>(x.size()) != n)
    fail(line_no, "O and X must list exactly n columns");
  return from_one_indexed(std::move(o), std::move(x));
}

GridDiagram load_grid(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_grid(ss.str());
}

std::string serialize_grid(const GridDiagram& g) {
  std::ostringstream os;
  os << "n = " << g.size() << "\nO =";
  for (int c : g.o_col()) os << ' ' << c + 1;
  os << "\nX =";
  for (int c : g.x_col()) os << ' ' << c + 1;
  os << '\n';
  return os.str();
}

std::string serialize_grid_json(const GridDiagram& g) {
  nlohmann::json j;
  j["n"] = g.size();
  std::vector<int> o, x;
  for (int c : g.o_col()) o.push_back(c + 1);
  for (int c : g.x_col()) x.push_back(c + 1);
  j["o"] = o;
  j["x"] = x;
  return j.dump();
}

}  // namespace unogrid
