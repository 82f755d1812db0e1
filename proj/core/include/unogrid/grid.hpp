#pragma once

// Toroidal grid diagrams and the link-level combinatorics read off them.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unogrid {

enum class Letter { O, X };

/// A marking is identified by its letter and its row. Marking ids run O rows
/// first (0..n-1) then X rows (n..2n-1).
struct Marking {
  Letter letter;
  int row;

  int id(int n) const { return letter == Letter::O ? row : n + row; }
  static Marking from_id(int id, int n) { return id < n ? Marking{Letter::O, id} : Marking{Letter::X, id - n}; }
  std::string name() const;  // "O3" / "X1", 1-indexed rows
  friend auto operator<=>(const Marking&, const Marking&) = default;
};

class GridDiagram {
 public:
  /// Validates and builds. Throws Error{SizeTooSmall, NonPermutation, MarkingCollision}.
  GridDiagram(std::vector<int> o_col, std::vector<int> x_col);

  int size() const noexcept { return static_cast<int>(o_col_.size()); }
  const std::vector<int>& o_col() const noexcept { return o_col_; }
  const std::vector<int>& x_col() const noexcept { return x_col_; }
  int o_row_in_col(int c) const { return o_row_[static_cast<std::size_t>(c)]; }
  int x_row_in_col(int c) const { return x_row_[static_cast<std::size_t>(c)]; }
  int marking_count() const noexcept { return 2 * size(); }

  /// Column of a marking.
  int column_of(const Marking& m) const;
  /// Marking occupying cell (col,row), if any.
  std::optional<Marking> marking_at(int col, int row) const;

  int wrap(int i) const noexcept { int n = size(); return ((i % n) + n) % n; }

  /// Grid with rows and columns cyclically shifted (same link on the torus).
  GridDiagram rotated(int col_shift, int row_shift) const;
  /// Grid reflected across the diagonal; rows become columns.
  GridDiagram transposed() const;

  friend bool operator==(const GridDiagram&, const GridDiagram&) = default;

 private:
  std::vector<int> o_col_, x_col_;
  std::vector<int> o_row_, x_row_;  // inverse permutations
};

GridDiagram validate(std::span<const int> o_col, std::span<const int> x_col);

/// Block diagonal union; the second grid occupies the upper right corner.
GridDiagram split_union(const GridDiagram& a, const GridDiagram& b);

struct LinkTopology {
  int component_count = 0;
  std::vector<int> component_of;           // by marking id
  std::vector<std::vector<int>> cycles;    // marking ids in link order, alternating O,X

  /// True when the two markings are consecutive along their component.
  bool adjacent(int marking_a, int marking_b) const;
};

LinkTopology link_topology(const GridDiagram& g);

/// All colorings (marking id -> +1/-1) alternating along every component.
std::vector<std::vector<int>> alternating_colorings(const GridDiagram& g);

/// Letters on the diagonal of a switch block: two O's, two X's, or one of each.
enum class SiteLetter { O, X, Mixed };

/// A 2x2 block spanning columns col, col+1 and rows row, row+1 (mod n) with
/// markings on two diagonal corners and nothing in the other two cells.
struct SwitchSite {
  int col = 0;
  int row = 0;
  SiteLetter letter = SiteLetter::O;

  friend auto operator<=>(const SwitchSite&, const SwitchSite&) = default;
};

/// Which diagonal of the block the markings occupy: Main = (col,row),(col+1,row+1).
enum class SiteDiagonal { Main, Anti };

std::optional<SiteDiagonal> site_diagonal(const GridDiagram& g, const SwitchSite& s);
bool is_valid_site(const GridDiagram& g, const SwitchSite& s);

/// The switched markings, lower row first.
std::pair<Marking, Marking> site_markings(const GridDiagram& g, const SwitchSite& s);

/// Sites sorted lexicographically by (col, row, letter).
std::vector<SwitchSite> find_switch_sites(const GridDiagram& g);

/// Moves each diagonal marking to the other row of the block. Same-letter
/// sites keep all letters. Mixed sites leave rows with two markings of one
/// letter, so every component of the result is relettered alternately, keeping
/// the letters of most markings that did not move on that component. Throws InvalidSite.
GridDiagram apply_switch(const GridDiagram& g, const SwitchSite& s);

/// The site on apply_switch(g, s) that switches the block back.
SwitchSite reverse_site(const GridDiagram& g, const SwitchSite& s);

enum class BandOrientation { Oriented, Unoriented };
enum class BandType { TypeI, TypeII };

struct BandClass {
  BandOrientation orientation;
  BandType type;
  int components_before;
  int components_after;
};

/// Oriented iff the component count changes. Type I iff the two switched
/// markings lie on one component of the source link (the band's feet sit on a
/// single circle); Type II when they lie on two.
BandClass classify_band(const GridDiagram& g, const SwitchSite& s);

std::string to_string(const SwitchSite& s);
std::string_view to_string(SiteLetter l);  // "O", "X", "OX"
std::string to_string(const BandClass& c);

/// Sites whose blocks share no row and no column.
bool sites_disjoint(const GridDiagram& g, const SwitchSite& a, const SwitchSite& b);

}  // namespace unogrid
