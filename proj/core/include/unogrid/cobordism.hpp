#pragma once

// Chain maps for elementary cobordisms on GC' and composition of movies.
//
// A movie state is a grid together with a stack of rank-2 tensor factors,
// one per quasi- or disk-stabilization still in effect. The complex of a state
// with k factors is GC'(grid) tensored k times; generator g of GC'(grid) and
// factor bits b_0..b_{k-1} sit at index g + N * sum(b_t 2^t), bit 0 standing for
// the plus generator and bit 1 for the minus generator.

#include <optional>
#include <variant>
#include <vector>

#include "unogrid/gc_complex.hpp"
#include "unogrid/grid.hpp"
#include "unogrid/homology.hpp"

namespace unogrid {

enum class BandFlavor { Nu, NuTilde };
enum class BandDirection { Forward, Inverse };

struct BandMapChoice {
  SwitchSite site;
  BandFlavor flavor = BandFlavor::Nu;
  BandDirection direction = BandDirection::Forward;

  friend bool operator==(const BandMapChoice&, const BandMapChoice&) = default;
};

/// The lattice point shared by the four cells of the site block.
std::pair<int, int> distinguished_point(const GridDiagram& g, const SwitchSite& s);

/// Forward multiplies by U the states through the distinguished point, inverse
/// the states avoiding it; NuTilde swaps the two sets.
bool band_multiplies(const GridDiagram& g, const BandMapChoice& choice, const GridState& x);

/// The direction whose Nu rule is a chain map: Forward on main-diagonal sites,
/// Inverse on anti-diagonal ones.
BandDirection natural_direction(const GridDiagram& g, const SwitchSite& s);

/// Pointwise map x -> x or U x on a state complex over `g` of size
/// `complex_size` (a multiple of n!), without any checks.
UMap band_rule(const GridDiagram& g, const BandMapChoice& choice, std::size_t complex_size);

/// Band map from the complex of g to the complex of apply_switch(g, site) (or
/// their tensor extensions). Throws InvalidSite, ChainMapViolation.
UMap band_map(const GridDiagram& g, const UComplex& source, const UComplex& target, const BandMapChoice& choice);

/// Nu + NuTilde in the given direction. Throws InvalidSite, ChainMapViolation.
UMap band_map_sum(const GridDiagram& g, const UComplex& source, const UComplex& target, const SwitchSite& site,
                  BandDirection direction);

enum class StabKind { Quasi, Disk };
enum class StabSide { Alpha, Beta };

struct StabModel {
  StabKind kind = StabKind::Quasi;
  StabSide side = StabSide::Beta;
  Marking anchor{Letter::O, 0};  // unused for disk factors

  friend bool operator==(const StabModel&, const StabModel&) = default;
};

/// Doubled delta gap between the two towers of the 2x2 unknot; the minus
/// generator of every stabilization factor sits this far below the plus one.
int stabilization_gap();

struct MovieState {
  GridDiagram grid;
  std::vector<StabModel> factors;

  int marking_count() const { return grid.marking_count() + 2 * static_cast<int>(factors.size()); }
  friend bool operator==(const MovieState&, const MovieState&) = default;
};

UComplex state_complex(const MovieState& s, const BuildOptions& options = {});

struct MoveResult {
  MovieState state;
  UComplex target{};
  UMap map{};
  std::optional<int> degree{};  // doubled delta shift, nullopt for the zero map
};

MoveResult band_switch(const MovieState& s, const UComplex& c, const BandMapChoice& choice,
                       const BuildOptions& options = {});
/// x -> x (x) plus.
MoveResult quasi_stab(const MovieState& s, const UComplex& c, const StabModel& m);
/// Removes the latest quasi factor anchored at `anchor` (plus -> 0, minus -> x),
/// else the latest one anchored at a marking adjacent to it (plus -> x, minus -> 0).
/// Throws AnchorMismatch.
MoveResult quasi_destab(const MovieState& s, const UComplex& c, const Marking& anchor);
/// x -> x (x) theta plus.
MoveResult disk_stab(const MovieState& s, const UComplex& c);
/// Removes the latest disk factor: theta plus -> 0, theta minus -> x. Throws MoveSequenceInvalid.
MoveResult disk_destab(const MovieState& s, const UComplex& c);
/// Identity on GC'; `perm` is 0-indexed over the state's markings. Throws BadPermutation.
MoveResult renumber(const MovieState& s, const UComplex& c, const std::vector<int>& perm);

struct SwitchMove {
  BandMapChoice choice;
  friend bool operator==(const SwitchMove&, const SwitchMove&) = default;
};
struct QuasiStabMove {
  Marking anchor;
  StabSide side = StabSide::Beta;
  friend bool operator==(const QuasiStabMove&, const QuasiStabMove&) = default;
};
struct QuasiDestabMove {
  Marking anchor;
  friend bool operator==(const QuasiDestabMove&, const QuasiDestabMove&) = default;
};
struct DiskStabMove {
  friend bool operator==(const DiskStabMove&, const DiskStabMove&) = default;
};
struct DiskDestabMove {
  friend bool operator==(const DiskDestabMove&, const DiskDestabMove&) = default;
};
struct RenumberMove {
  std::vector<int> perm;  // 0-indexed
  friend bool operator==(const RenumberMove&, const RenumberMove&) = default;
};

using Move = std::variant<SwitchMove, QuasiStabMove, QuasiDestabMove, DiskStabMove, DiskDestabMove, RenumberMove>;

struct Movie {
  MovieState start;
  std::vector<Move> moves;
};

struct MovieResult {
  MovieState final_state;
  UComplex source{}, target{};
  UMap total{};
  std::optional<int> degree{};
  std::vector<std::optional<int>> move_degrees{};
  std::optional<Homology> source_homology{}, target_homology{};
  std::optional<HomologyMatrix> induced{};
};

struct MovieOptions {
  BuildOptions build{};
  bool induced = true;  // compute homology of both ends and the induced matrix
};

/// Any failing move precondition surfaces as MoveSequenceInvalid naming the move.
MovieResult compose_movie(const Movie& m, const MovieOptions& options = {});

/// Both orders of two disjoint band moves, each in its natural direction, give
/// equal maps on homology. Throws SitesNotDisjoint, InvalidSite.
bool verify_commutation(const GridDiagram& g, const SwitchSite& first, const SwitchSite& second,
                        const BuildOptions& options = {});

}  // namespace unogrid
