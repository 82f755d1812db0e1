#include "unogrid/movie_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "unogrid/error.hpp"

namespace unogrid {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

int parse_positive(std::string_view tok) {
  int v = 0;
  if (tok.empty()) throw std::invalid_argument("empty");
  for (char ch : tok) {
    if (ch < '0' || ch > '9') throw std::invalid_argument(std::string(tok));
    v = v * 10 + (ch - '0');
    if (v > 1'000'000) throw std::invalid_argument(std::string(tok));
  }
  if (v < 1) throw std::invalid_argument(std::string(tok));
  return v;
}

std::map<std::string, std::string> key_values(std::istringstream& in, int line) {
  std::map<std::string, std::string> kv;
  for (std::string tok; in >> tok;) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0) fail(line, "expected key=value, got `" + tok + "`");
    if (!kv.emplace(tok.substr(0, eq), tok.substr(eq + 1)).second) fail(line, "repeated key `" + tok.substr(0, eq) + "`");
  }
  return kv;
}

void allow_only(const std::map<std::string, std::string>& kv, std::initializer_list<const char*> keys, int line) {
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (const char* allowed : keys) ok = ok || k == allowed;
    if (!ok) fail(line, "unknown key `" + k + "`");
  }
}

const std::string& require(const std::map<std::string, std::string>& kv, const char* key, int line) {
  auto it = kv.find(key);
  if (it == kv.end()) fail(line, std::string("missing ") + key + "=");
  return it->second;
}

std::string marking_name(const Marking& m) { return m.name(); }

}  // namespace

Marking parse_marking(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'O' && name[0] != 'X'))
    throw Error(ErrorCode::ParseError, "bad marking `" + std::string(name) + "`");
  try {
    return Marking{name[0] == 'O' ? Letter::O : Letter::X, parse_positive(name.substr(1)) - 1};
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad marking `" + std::string(name) + "`");
  }
}

std::vector<Move> parse_movie(std::string_view text) {
  std::vector<Move> moves;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    std::istringstream ls(raw);
    std::string verb;
    ls >> verb;
    try {
      if (verb == "switch") {
        auto kv = key_values(ls, line);
        allow_only(kv, {"col", "row", "letter", "flavor", "dir"}, line);
        BandMapChoice ch;
        ch.site.col = parse_positive(require(kv, "col", line)) - 1;
        ch.site.row = parse_positive(require(kv, "row", line)) - 1;
        const auto& letter = require(kv, "letter", line);
        if (letter == "O") ch.site.letter = SiteLetter::O;
        else if (letter == "X") ch.site.letter = SiteLetter::X;
        else if (letter == "OX") ch.site.letter = SiteLetter::Mixed;
        else fail(line, "letter must be O, X or OX");
        if (auto it = kv.find("flavor"); it != kv.end()) {
          if (it->second != "nu" && it->second != "nu_tilde") fail(line, "flavor must be nu or nu_tilde");
          ch.flavor = it->second == "nu" ? BandFlavor::Nu : BandFlavor::NuTilde;
        }
        if (auto it = kv.find("dir"); it != kv.end()) {
          if (it->second != "fwd" && it->second != "inv") fail(line, "dir must be fwd or inv");
          ch.direction = it->second == "fwd" ? BandDirection::Forward : BandDirection::Inverse;
        }
        moves.emplace_back(SwitchMove{ch});
      } else if (verb == "quasistab") {
        auto kv = key_values(ls, line);
        allow_only(kv, {"anchor", "side"}, line);
        QuasiStabMove m{parse_marking(require(kv, "anchor", line))};
        if (auto it = kv.find("side"); it != kv.end()) {
          if (it->second != "alpha" && it->second != "beta") fail(line, "side must be alpha or beta");
          m.side = it->second == "alpha" ? StabSide::Alpha : StabSide::Beta;
        }
        moves.emplace_back(m);
      } else if (verb == "quasidestab") {
        auto kv = key_values(ls, line);
        allow_only(kv, {"anchor"}, line);
        moves.emplace_back(QuasiDestabMove{parse_marking(require(kv, "anchor", line))});
      } else if (verb == "diskstab" || verb == "diskdestab") {
        std::string extra;
        if (ls >> extra) fail(line, verb + " takes no arguments");
        if (verb == "diskstab") moves.emplace_back(DiskStabMove{});
        else moves.emplace_back(DiskDestabMove{});
      } else if (verb == "renumber") {
        RenumberMove m;
        for (std::string tok; ls >> tok;) m.perm.push_back(parse_positive(tok) - 1);
        if (m.perm.empty()) fail(line, "renumber needs a permutation");
        moves.emplace_back(std::move(m));
      } else {
        fail(line, "unknown move `" + verb + "`");
      }
    } catch (const std::invalid_argument& e) {
      fail(line, std::string("not a positive integer: `") + e.what() + "`");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError && std::string_view(e.what()).starts_with("line ")) throw;
      fail(line, e.what());
    }
  }
  return moves;
}

std::vector<Move> load_movie(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_movie(ss.str());
}

std::string serialize_movie(const std::vector<Move>& moves) {
  std::ostringstream os;
  for (const auto& move : moves)
    std::visit(
        [&](const auto& m) {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, SwitchMove>) {
            const auto& c = m.choice;
            os << "switch col=" << c.site.col + 1 << " row=" << c.site.row + 1
               << " letter=" << to_string(c.site.letter)
               << " flavor=" << (c.flavor == BandFlavor::Nu ? "nu" : "nu_tilde")
               << " dir=" << (c.direction == BandDirection::Forward ? "fwd" : "inv");
          } else if constexpr (std::is_same_v<T, QuasiStabMove>) {
            os << "quasistab anchor=" << marking_name(m.anchor) << " side=" << (m.side == StabSide::Alpha ? "alpha" : "beta");
          } else if constexpr (std::is_same_v<T, QuasiDestabMove>) {
            os << "quasidestab anchor=" << marking_name(m.anchor);
          } else if constexpr (std::is_same_v<T, DiskStabMove>) {
            os << "diskstab";
          } else if constexpr (std::is_same_v<T, DiskDestabMove>) {
            os << "diskdestab";
          } else {
            os << "renumber";
            for (int p : m.perm) os << ' ' << p + 1;
          }
          os << '\n';
        },
        move);
  return os.str();
}

}  // namespace unogrid
