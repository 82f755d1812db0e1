#include "unogrid/grid.hpp"

#include <algorithm>
#include <sstream>

#include "unogrid/error.hpp"

namespace unogrid {

namespace {

std::vector<int> inverse_permutation(const std::vector<int>& p, const char* what) {
  const int n = static_cast<int>(p.size());
  std::vector<int> inv(p.size(), -1);
  for (int i = 0; i < n; ++i) {
    int v = p[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n)
      throw Error(ErrorCode::NonPermutation, std::string(what) + " entry " + std::to_string(v) + " out of range");
    if (inv[static_cast<std::size_t>(v)] != -1)
      throw Error(ErrorCode::NonPermutation, std::string(what) + " repeats column " + std::to_string(v));
    inv[static_cast<std::size_t>(v)] = i;
  }
  return inv;
}

}  // namespace

std::string Marking::name() const { return (letter == Letter::O ? "O" : "X") + std::to_string(row + 1); }

GridDiagram::GridDiagram(std::vector<int> o_col, std::vector<int> x_col)
    : o_col_(std::move(o_col)), x_col_(std::move(x_col)) {
  if (o_col_.size() != x_col_.size())
    throw Error(ErrorCode::NonPermutation, "O and X sequences differ in length");
  if (o_col_.size() < 2) throw Error(ErrorCode::SizeTooSmall, "grid size must be at least 2");
  o_row_ = inverse_permutation(o_col_, "O");
  x_row_ = inverse_permutation(x_col_, "X");
  for (std::size_t r = 0; r < o_col_.size(); ++r)
    if (o_col_[r] == x_col_[r])
      throw Error(ErrorCode::MarkingCollision, "row " + std::to_string(r) + " has O and X in one cell");
}

GridDiagram validate(std::span<const int> o_col, std::span<const int> x_col) {
  return GridDiagram({o_col.begin(), o_col.end()}, {x_col.begin(), x_col.end()});
}

int GridDiagram::column_of(const Marking& m) const {
  auto r = static_cast<std::size_t>(m.row);
  return m.letter == Letter::O ? o_col_[r] : x_col_[r];
}

std::optional<Marking> GridDiagram::marking_at(int col, int row) const {
  col = wrap(col);
  row = wrap(row);
  auto r = static_cast<std::size_t>(row);
  if (o_col_[r] == col) return Marking{Letter::O, row};
  if (x_col_[r] == col) return Marking{Letter::X, row};
  return std::nullopt;
}

GridDiagram GridDiagram::rotated(int col_shift, int row_shift) const {
  const int n = size();
  std::vector<int> o(o_col_.size()), x(x_col_.size());
  for (int r = 0; r < n; ++r) {
    auto dst = static_cast<std::size_t>(wrap(r + row_shift));
    o[dst] = wrap(o_col_[static_cast<std::size_t>(r)] + col_shift);
    x[dst] = wrap(x_col_[static_cast<std::size_t>(r)] + col_shift);
  }
  return GridDiagram(std::move(o), std::move(x));
}

GridDiagram GridDiagram::transposed() const { return GridDiagram(o_row_, x_row_); }

GridDiagram split_union(const GridDiagram& a, const GridDiagram& b) {
  std::vector<int> o = a.o_col(), x = a.x_col();
  for (int r = 0; r < b.size(); ++r) {
    o.push_back(b.o_col()[static_cast<std::size_t>(r)] + a.size());
    x.push_back(b.x_col()[static_cast<std::size_t>(r)] + a.size());
  }
  return GridDiagram(std::move(o), std::move(x));
}

bool LinkTopology::adjacent(int a, int b) const {
  if (a == b || component_of.at(static_cast<std::size_t>(a)) != component_of.at(static_cast<std::size_t>(b)))
    return false;
  const auto& cyc = cycles[static_cast<std::size_t>(component_of[static_cast<std::size_t>(a)])];
  const auto len = cyc.size();
  auto pos = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), a) - cyc.begin());
  return cyc[(pos + 1) % len] == b || cyc[(pos + len - 1) % len] == b;
}

LinkTopology link_topology(const GridDiagram& g) {
  // O_r -(row r)- X_r -(column of X_r)- O in that column -(row)- ...
  const int n = g.size();
  LinkTopology t;
  t.component_of.assign(static_cast<std::size_t>(2 * n), -1);
  for (int start = 0; start < n; ++start) {
    if (t.component_of[static_cast<std::size_t>(start)] != -1) continue;
    std::vector<int> cycle;
    int r = start;
    do {
      cycle.push_back(r);
      cycle.push_back(n + r);
      t.component_of[static_cast<std::size_t>(r)] = t.component_count;
      t.component_of[static_cast<std::size_t>(n + r)] = t.component_count;
      r = g.o_row_in_col(g.x_col()[static_cast<std::size_t>(r)]);
    } while (r != start);
    t.cycles.push_back(std::move(cycle));
    ++t.component_count;
  }
  return t;
}

std::vector<std::vector<int>> alternating_colorings(const GridDiagram& g) {
  const auto topo = link_topology(g);
  const int n = g.size();
  std::vector<std::vector<int>> out;
  const unsigned count = 1u << topo.component_count;
  for (unsigned mask = 0; mask < count; ++mask) {
    std::vector<int> coloring(static_cast<std::size_t>(2 * n), 0);
    for (int c = 0; c < topo.component_count; ++c) {
      int sign = (mask >> c) & 1u ? -1 : 1;
      const auto& cyc = topo.cycles[static_cast<std::size_t>(c)];
      for (std::size_t i = 0; i < cyc.size(); ++i)
        coloring[static_cast<std::size_t>(cyc[i])] = i % 2 == 0 ? sign : -sign;
    }
    out.push_back(std::move(coloring));
  }
  return out;
}

std::optional<SiteDiagonal> site_diagonal(const GridDiagram& g, const SwitchSite& s) {
  if (g.size() < 3) return std::nullopt;  // a 2x2 block covers the whole torus
  const int c = s.col, r = s.row;
  auto ll = g.marking_at(c, r), ur = g.marking_at(c + 1, r + 1);
  auto ul = g.marking_at(c, r + 1), lr = g.marking_at(c + 1, r);
  auto pair_is = [&](const std::optional<Marking>& a, const std::optional<Marking>& b) {
    if (!a || !b) return false;
    switch (s.letter) {
      case SiteLetter::O: return a->letter == Letter::O && b->letter == Letter::O;
      case SiteLetter::X: return a->letter == Letter::X && b->letter == Letter::X;
      case SiteLetter::Mixed: return a->letter != b->letter;
    }
    return false;
  };
  if (pair_is(ll, ur) && !ul && !lr) return SiteDiagonal::Main;
  if (pair_is(ul, lr) && !ll && !ur) return SiteDiagonal::Anti;
  return std::nullopt;
}

bool is_valid_site(const GridDiagram& g, const SwitchSite& s) {
  return s.col >= 0 && s.col < g.size() && s.row >= 0 && s.row < g.size() && site_diagonal(g, s).has_value();
}

std::pair<Marking, Marking> site_markings(const GridDiagram& g, const SwitchSite& s) {
  const auto diag = site_diagonal(g, s);
  if (!diag || !is_valid_site(g, s)) throw Error(ErrorCode::InvalidSite, to_string(s));
  const int c = s.col, r = s.row;
  if (*diag == SiteDiagonal::Main) return {*g.marking_at(c, r), *g.marking_at(c + 1, r + 1)};
  return {*g.marking_at(c + 1, r), *g.marking_at(c, r + 1)};
}

std::vector<SwitchSite> find_switch_sites(const GridDiagram& g) {
  std::vector<SwitchSite> out;
  for (int c = 0; c < g.size(); ++c)
    for (int r = 0; r < g.size(); ++r)
      for (SiteLetter l : {SiteLetter::O, SiteLetter::X, SiteLetter::Mixed})
        if (SwitchSite s{c, r, l}; is_valid_site(g, s)) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Alternating lettering of an unlettered marking set (two markings per row and
// per column). `previous[k]` is the old letter of marking k, or nullopt if it moved.
GridDiagram reletter(int n, const std::vector<std::pair<int, int>>& cells,
                     const std::vector<std::optional<Letter>>& previous) {
  const std::size_t m = cells.size();
  std::vector<int> color(m, -1);
  auto partner = [&](std::size_t k, bool same_row) {
    for (std::size_t t = 0; t < m; ++t)
      if (t != k && (same_row ? cells[t].second == cells[k].second : cells[t].first == cells[k].first)) return t;
    throw std::logic_error("marking without a partner");
  };
  for (std::size_t start = 0; start < m; ++start) {
    if (color[start] != -1) continue;
    std::vector<std::size_t> comp;
    std::size_t cur = start;
    bool same_row = true;
    color[cur] = 0;
    while (true) {
      comp.push_back(cur);
      const std::size_t next = partner(cur, same_row);
      if (color[next] != -1) break;
      color[next] = 1 - color[cur];
      cur = next;
      same_row = !same_row;
    }
    int agree = 0, disagree = 0;
    std::optional<bool> first_agrees;
    for (std::size_t k : comp)
      if (previous[k]) {
        const bool a = (*previous[k] == Letter::O) == (color[k] == 0);
        (a ? agree : disagree)++;
        if (!first_agrees) first_agrees = a;
      }
    if (disagree > agree || (disagree == agree && first_agrees == false))
      for (std::size_t k : comp) color[k] ^= 1;
  }
  std::vector<int> o(static_cast<std::size_t>(n), -1), x(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < m; ++k) {
    auto [c, r] = cells[k];
    (color[k] == 0 ? o : x)[static_cast<std::size_t>(r)] = c;
  }
  return GridDiagram(std::move(o), std::move(x));
}

}  // namespace

GridDiagram apply_switch(const GridDiagram& g, const SwitchSite& s) {
  if (!is_valid_site(g, s)) throw Error(ErrorCode::InvalidSite, to_string(s));
  const int n = g.size();
  const int r0 = s.row, r1 = g.wrap(s.row + 1);
  if (s.letter != SiteLetter::Mixed) {
    std::vector<int> o = g.o_col(), x = g.x_col();
    auto& cols = s.letter == SiteLetter::O ? o : x;
    std::swap(cols[static_cast<std::size_t>(r0)], cols[static_cast<std::size_t>(r1)]);
    return GridDiagram(std::move(o), std::move(x));
  }
  const int c0 = s.col, c1 = g.wrap(s.col + 1);
  std::vector<std::pair<int, int>> cells;
  std::vector<std::optional<Letter>> previous;
  for (int id = 0; id < g.marking_count(); ++id) {
    const Marking mk = Marking::from_id(id, n);
    const int c = g.column_of(mk);
    int r = mk.row;
    const bool in_block = (c == c0 || c == c1) && (r == r0 || r == r1);
    if (in_block) r = r == r0 ? r1 : r0;
    cells.emplace_back(c, r);
    previous.push_back(in_block ? std::nullopt : std::optional<Letter>(mk.letter));
  }
  return reletter(n, cells, previous);
}

SwitchSite reverse_site(const GridDiagram& g, const SwitchSite& s) {
  const GridDiagram h = apply_switch(g, s);
  for (SiteLetter l : {SiteLetter::O, SiteLetter::X, SiteLetter::Mixed})
    if (SwitchSite back{s.col, s.row, l}; is_valid_site(h, back)) return back;
  throw std::logic_error("switched block is not a site");
}

BandClass classify_band(const GridDiagram& g, const SwitchSite& s) {
  auto [a, b] = site_markings(g, s);
  const auto before = link_topology(g);
  const auto after = link_topology(apply_switch(g, s));
  const int n = g.size();
  BandClass out{};
  out.components_before = before.component_count;
  out.components_after = after.component_count;
  out.orientation =
      before.component_count != after.component_count ? BandOrientation::Oriented : BandOrientation::Unoriented;
  const bool one_circle = before.component_of[static_cast<std::size_t>(a.id(n))] ==
                          before.component_of[static_cast<std::size_t>(b.id(n))];
  out.type = one_circle ? BandType::TypeI : BandType::TypeII;
  return out;
}

std::string to_string(const SwitchSite& s) {
  std::ostringstream os;
  os << "col=" << s.col + 1 << " row=" << s.row + 1 << " letter=" << to_string(s.letter);
  return os.str();
}

std::string_view to_string(SiteLetter l) {
  switch (l) {
    case SiteLetter::O: return "O";
    case SiteLetter::X: return "X";
    case SiteLetter::Mixed: return "OX";
  }
  return "?";
}

std::string to_string(const BandClass& c) {
  std::string out = c.orientation == BandOrientation::Oriented ? "oriented" : "unoriented";
  out += c.type == BandType::TypeI ? " TypeI" : " TypeII";
  return out;
}

bool sites_disjoint(const GridDiagram& g, const SwitchSite& a, const SwitchSite& b) {
  auto meets = [&](int x, int y) {
    for (int i : {x, g.wrap(x + 1)})
      for (int j : {y, g.wrap(y + 1)})
        if (i == j) return true;
    return false;
  };
  return !meets(a.col, b.col) && !meets(a.row, b.row);
}

}  // namespace unogrid
