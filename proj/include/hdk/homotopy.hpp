#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdk/diagram.hpp"
#include "hdk/embedding.hpp"
#include "hdk/move_kind.hpp"
#include "hdk/signature.hpp"

namespace hdk {

enum class Direction { forward, inverse };

/// Which cell of an interchangeable pair ends up lower. A type I cell in the
/// forward direction takes the upper-left cell down (`left_down`).
enum class Interchange { left_down, right_down };

/// Sheet and chirality of a pull-through. Front: a block B moves down past a
/// single cell c. Rear: c moves down past B. Primed variants pull through
/// inverse type I cells.
enum class PullVariant { front, rear, primed_front, primed_rear };

std::string_view to_string(Direction d);
std::string_view to_string(Interchange d);
std::string_view to_string(PullVariant v);
std::optional<Direction> parse_direction(std::string_view text);
std::optional<Interchange> parse_interchange(std::string_view text);
std::optional<PullVariant> parse_variant(std::string_view text);

struct MoveLocation {
  std::size_t height = 0;
  /// Offset of the redex inside the slice at `height`.
  std::vector<std::size_t> coords;

  friend bool operator==(const MoveLocation&, const MoveLocation&) = default;
};

/// One homotopy-generator application. `applied` is `cell` or its inverse;
/// its source sits at `embedding` in the diagram the move was applied to.
struct MoveInstance {
  MoveKind kind;
  GeneratorId cell;
  GeneratorId applied;
  MoveLocation location;
  Embedding embedding;

  Entry entry() const { return Entry{applied, embedding}; }
};

struct MoveResult {
  Diagram diagram;
  MoveInstance move;
};

struct Redex {
  std::size_t height = 0;
  Interchange direction = Interchange::left_down;

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// Index range [lo, hi) of the source slice touched by any entry of `w`.
struct Hull {
  std::size_t lo = 0;
  std::size_t hi = 0;
};
Hull top_hull(const Diagram& w, const Signature& sig);
/// `w` with its source cut down to heights [lo, hi) and entries shifted to match.
Diagram trim(const Diagram& w, Hull hull, const Signature& sig);

// ---- Type I ----

std::vector<Redex> interchange_redexes(const Diagram& d, const Signature& sig);
MoveResult apply_interchange(Signature& sig, const Diagram& d, std::size_t height, Interchange dir);

/// Atomic moves taking a stack of `upper` cells down past the `lower` cells
/// directly beneath it, lowest upper cell first, each past the nearest cell first.
std::vector<MoveInstance> expand_interchange(Signature& sig, const Diagram& d, std::size_t height,
                                             std::size_t lower, std::size_t upper);

/// Forward interchanges inside [height, height + length) until none apply.
/// Every entry in the span must be a type I cell.
std::vector<MoveInstance> rearrange_crossings(Signature& sig, const Diagram& d, std::size_t height,
                                              std::size_t length);

// ---- Type II ----

/// Canonical crossings of cell c with a block of `block` cells inside the
/// slice `y`. Front: c at `p`, block above. Rear: block at `p`, c above.
std::vector<MoveInstance> crossings(Signature& sig, const Diagram& y, std::size_t p,
                                    std::size_t block, PullVariant variant);

MoveResult apply_pullthrough(Signature& sig, const Diagram& d, std::size_t height,
                             PullVariant variant, Direction dir);

/// Atomic pull-throughs moving `cells` stacked cells down through `crossings`
/// crossing groups, lowest cell first, nearest group first.
std::vector<MoveInstance> expand_pullthrough(Signature& sig, const Diagram& d, std::size_t height,
                                             std::size_t cells, std::size_t crossing_groups,
                                             PullVariant variant);

// ---- Replay ----

Diagram apply_move(const Diagram& d, const MoveInstance& m, const Signature& sig);
Diagram replay(const Diagram& d, std::span<const MoveInstance> moves, const Signature& sig);
/// The diagram one dimension up whose entries are `moves`, starting at `start`.
Diagram path(const Diagram& start, std::span<const MoveInstance> moves);

// ---- Types III to VI ----

/// The redex a higher move is assembled around.
///
/// III: `base` has `crossing_groups` crossing groups at `height` followed by
/// `cells` stacked cells, and `cell` is a cell rewriting that stack.
/// IV: three crossings at `height` forming the braid pattern.
/// V: a single crossing at `height`, then a cell on each of the two crossing cells.
/// VI: crossings at `height`, a cell on the block, then the inverse crossings.
struct HigherMoveParams {
  Diagram base;
  std::size_t height = 0;
  PullVariant variant = PullVariant::front;
  std::size_t cells = 1;
  std::size_t crossing_groups = 1;
  std::optional<GeneratorId> cell;
};

struct Boundary {
  Diagram source;
  Diagram target;
};

Boundary higher_move_boundary(Signature& sig, const MoveKind& kind, const HigherMoveParams& params);

/// Rewrites the path `d` by the higher move whose boundary is assembled from
/// `params`, at `loc`. Throws NoMatchAtLocation when the source is not there.
MoveResult apply_higher_move(Signature& sig, const Diagram& d, const MoveLocation& loc,
                             const MoveKind& kind, const HigherMoveParams& params, Direction dir);

// ---- Discovery ----

struct MoveOption {
  MoveKind kind;
  std::size_t height = 0;
  std::optional<Interchange> interchange;
  std::optional<PullVariant> variant;
  Direction direction = Direction::forward;
};

/// Type I and II moves that apply at `height` of `d`.
std::vector<MoveOption> moves_at(Signature& sig, const Diagram& d, std::size_t height);

}  // namespace hdk
