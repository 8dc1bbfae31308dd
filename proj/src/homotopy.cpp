#include "hdk/homotopy.hpp"

#include <algorithm>

#include "hdk/error.hpp"
#include "hdk/kernel.hpp"

namespace hdk {
namespace {

constexpr MoveKind kInterchange{MoveFamily::I, false, false, Composite::atomic};

bool is_primed(PullVariant v) { return v == PullVariant::primed_front || v == PullVariant::primed_rear; }
bool is_front(PullVariant v) { return v == PullVariant::front || v == PullVariant::primed_front; }

Interchange chirality(PullVariant v) {
  return is_primed(v) ? Interchange::right_down : Interchange::left_down;
}

Hull merge(Hull a, Hull b) { return Hull{std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Embedding location_embedding(std::size_t height, std::size_t lo, std::size_t dim) {
  std::vector<std::size_t> h(dim, 0);
  h[0] = height;
  if (dim > 1) h[1] = lo;
  return Embedding(std::move(h));
}

MoveLocation location_of(const Embedding& e) {
  auto h = e.heights();
  return MoveLocation{h[0], std::vector<std::size_t>(h.begin() + 1, h.end())};
}

std::size_t sizeof_source(const Signature& sig, GeneratorId g) { return sig.source(g).size(); }
std::size_t sizeof_target(const Signature& sig, GeneratorId g) { return sig.target(g).size(); }

Embedding shift_top(const Embedding& e, std::size_t to) { return e.with_height(to); }

/// Builds the cell for rewriting segment `from` into segment `to` (both over
/// the slice `y` at `height` of a diagram of dimension `dim`), interning the
/// forward cell whose source is `forward_source ? from : to`.
MoveInstance make_move(Signature& sig, const MoveKind& kind, const Diagram& y,
                       std::vector<Entry> from, std::vector<Entry> to, std::size_t height,
                       bool from_is_source) {
  Diagram wf(y, std::move(from));
  Diagram wt(y, std::move(to));
  Hull hull = merge(top_hull(wf, sig), top_hull(wt, sig));
  Diagram sf = trim(wf, hull, sig);
  Diagram st = trim(wt, hull, sig);
  GeneratorId cell = from_is_source ? sig.intern_move(kind, sf, st) : sig.intern_move(kind, st, sf);
  MoveKind applied_kind = kind;
  applied_kind.inverse = !from_is_source;
  Embedding emb = location_embedding(height, hull.lo, y.dim() + 1);
  return MoveInstance{applied_kind, cell, from_is_source ? cell : sig.inverse(cell), location_of(emb),
                      emb};
}

bool is_interchange_cell(const Signature& sig, GeneratorId g, std::optional<bool> inverse = {}) {
  const auto& move = sig.at(g).move;
  if (!move || move->family != MoveFamily::I || move->composite != Composite::atomic) return false;
  return !inverse || move->inverse == *inverse;
}

}  // namespace

std::string_view to_string(Direction d) { return d == Direction::forward ? "forward" : "inverse"; }

std::string_view to_string(Interchange d) {
  return d == Interchange::left_down ? "left-down" : "right-down";
}

std::string_view to_string(PullVariant v) {
  switch (v) {
    case PullVariant::front: return "front";
    case PullVariant::rear: return "rear";
    case PullVariant::primed_front: return "primed-front";
    case PullVariant::primed_rear: return "primed-rear";
  }
  return "?";
}

std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "forward") return Direction::forward;
  if (text == "inverse") return Direction::inverse;
  return std::nullopt;
}

std::optional<Interchange> parse_interchange(std::string_view text) {
  if (text == "left-down") return Interchange::left_down;
  if (text == "right-down") return Interchange::right_down;
  return std::nullopt;
}

std::optional<PullVariant> parse_variant(std::string_view text) {
  for (auto v : {PullVariant::front, PullVariant::rear, PullVariant::primed_front,
                 PullVariant::primed_rear})
    if (to_string(v) == text) return v;
  return std::nullopt;
}

Hull top_hull(const Diagram& w, const Signature& sig) {
  if (w.dim() < 2) throw Error(ErrorCode::DimensionMismatch, "hull of a diagram below dimension 2");
  const std::size_t n = w.source().size();
  if (w.entries().empty()) return Hull{0, n};
  const auto& sl = slices(w, sig);
  std::size_t lo = n;
  std::size_t right = n;
  for (std::size_t t = 0; t < w.entries().size(); ++t) {
    const std::size_t at = w[t].embedding[0];
    const std::size_t width = sizeof_source(sig, w[t].generator);
    lo = std::min(lo, at);
    right = std::min(right, sl[t].size() - at - width);
  }
  return Hull{lo, n - right};
}

Diagram trim(const Diagram& w, Hull hull, const Signature& sig) {
  std::vector<Entry> entries;
  entries.reserve(w.entries().size());
  for (const Entry& e : w.entries()) {
    if (e.embedding[0] < hull.lo) throw Error(ErrorCode::HeightOutOfRange, "entry left of the hull");
    entries.push_back(Entry{e.generator, shift_top(e.embedding, e.embedding[0] - hull.lo)});
  }
  return Diagram(subdiagram(w.source(), hull.lo, hull.hi, sig), std::move(entries));
}

// ---- Type I ----

namespace {

struct PairShape {
  bool right = false;  // upper cell clear of the lower cell's output, to its right
  bool left = false;   // upper cell entirely to the left
};

PairShape pair_shape(const Diagram& d, std::size_t i, const Signature& sig) {
  const Entry& a = d[i];
  const Entry& b = d[i + 1];
  const std::size_t u = a.embedding[0];
  const std::size_t v = b.embedding[0];
  return PairShape{v >= u + sizeof_target(sig, a.generator),
                   v + sizeof_source(sig, b.generator) <= u};
}

}  // namespace

std::vector<Redex> interchange_redexes(const Diagram& d, const Signature& sig) {
  std::vector<Redex> out;
  if (d.dim() < 2) return out;
  for (std::size_t i = 0; i + 1 < d.entries().size(); ++i) {
    PairShape shape = pair_shape(d, i, sig);
    if (shape.left) out.push_back(Redex{i, Interchange::left_down});
    if (shape.right) out.push_back(Redex{i, Interchange::right_down});
  }
  return out;
}

MoveResult apply_interchange(Signature& sig, const Diagram& d, std::size_t i, Interchange dir) {
  if (d.dim() < 2) throw Error(ErrorCode::NotARedex, "interchange needs dimension at least 2");
  if (i + 1 >= d.entries().size())
    throw Error(ErrorCode::NotARedex, "no pair of entries at height " + std::to_string(i));
  const Entry& a = d[i];
  const Entry& b = d[i + 1];
  PairShape shape = pair_shape(d, i, sig);
  const std::size_t u = a.embedding[0];
  const std::size_t v = b.embedding[0];
  Entry lower = b;
  Entry upper = a;
  if (dir == Interchange::left_down) {
    if (!shape.left)
      throw Error(ErrorCode::NotARedex, "upper cell at height " + std::to_string(i + 1) +
                                            " is not left of the cell below");
    upper.embedding = shift_top(a.embedding, u - sizeof_source(sig, b.generator) +
                                                 sizeof_target(sig, b.generator));
  } else {
    if (!shape.right)
      throw Error(ErrorCode::NotARedex, "upper cell at height " + std::to_string(i + 1) +
                                            " is not right of the cell below");
    lower.embedding = shift_top(b.embedding, v - sizeof_target(sig, a.generator) +
                                                 sizeof_source(sig, a.generator));
  }
  const Diagram& y = slice(d, i, sig);
  MoveInstance move = make_move(sig, kInterchange, y, {a, b}, {lower, upper}, i,
                                dir == Interchange::left_down);
  std::vector<Entry> entries(d.entries().begin(), d.entries().end());
  entries[i] = lower;
  entries[i + 1] = upper;
  return MoveResult{Diagram(d.source(), std::move(entries)), std::move(move)};
}

std::vector<MoveInstance> expand_interchange(Signature& sig, const Diagram& d, std::size_t height,
                                             std::size_t lower, std::size_t upper) {
  if (height + lower + upper > d.entries().size())
    throw Error(ErrorCode::NotABlock, "block exceeds the diagram");
  std::vector<MoveInstance> out;
  if (lower == 0 || upper == 0) return out;
  std::optional<Interchange> dir;
  Diagram state = d;
  for (std::size_t j = 0; j < upper; ++j) {
    const std::size_t top = height + lower + j;
    for (std::size_t t = 0; t < lower; ++t) {
      const std::size_t at = top - 1 - t;
      if (!dir) {
        PairShape shape = pair_shape(state, at, sig);
        if (shape.left) dir = Interchange::left_down;
        else if (shape.right) dir = Interchange::right_down;
        else throw Error(ErrorCode::NotABlock, "cells at height " + std::to_string(at) + " overlap");
      }
      try {
        MoveResult r = apply_interchange(sig, state, at, *dir);
        state = r.diagram;
        out.push_back(std::move(r.move));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NotARedex) throw;
        throw Error(ErrorCode::NotABlock, err.what());
      }
    }
  }
  return out;
}

std::vector<MoveInstance> rearrange_crossings(Signature& sig, const Diagram& d, std::size_t height,
                                              std::size_t length) {
  if (height + length > d.entries().size())
    throw Error(ErrorCode::NotACrossingPattern, "span exceeds the diagram");
  for (std::size_t i = height; i < height + length; ++i)
    if (!is_interchange_cell(sig, d[i].generator))
      throw Error(ErrorCode::NotACrossingPattern,
                  "entry at height " + std::to_string(i) + " is not an interchange");
  std::vector<MoveInstance> out;
  Diagram state = d;
  const std::size_t cap = length * length + 1;
  for (std::size_t round = 0; round < cap; ++round) {
    bool moved = false;
    for (std::size_t i = height; i + 1 < height + length; ++i) {
      PairShape shape = pair_shape(state, i, sig);
      if (!shape.left || shape.right) continue;
      MoveResult r = apply_interchange(sig, state, i, Interchange::left_down);
      state = r.diagram;
      out.push_back(std::move(r.move));
      moved = true;
      break;
    }
    if (!moved) return out;
  }
  throw Error(ErrorCode::NotACrossingPattern, "rearrangement did not settle");
}

// ---- Type II ----

std::vector<MoveInstance> crossings(Signature& sig, const Diagram& y, std::size_t p,
                                    std::size_t block, PullVariant variant) {
  std::vector<MoveInstance> out;
  Diagram state = y;
  for (std::size_t j = 0; j < block; ++j) {
    const std::size_t at = is_front(variant) ? p + j : p + block - 1 - j;
    MoveResult r = apply_interchange(sig, state, at, chirality(variant));
    state = r.diagram;
    out.push_back(std::move(r.move));
  }
  return out;
}

namespace {

struct PullPattern {
  std::size_t p = 0;          // lowest slice index of c and the block
  std::size_t block = 0;      // s
  Embedding alpha_after;      // where the cell sits after the crossings
};

/// Finds the smallest block size s for which entries [i, i+s] of `d` are the
/// canonical crossings followed by a cell acting exactly on the block.
std::optional<PullPattern> match_forward(Signature& sig, const Diagram& d, std::size_t i,
                                         PullVariant variant) {
  const Diagram& y = slice(d, i, sig);
  const std::size_t q = d[i].embedding[0];
  for (std::size_t s = 1; i + s < d.entries().size(); ++s) {
    if (!is_interchange_cell(sig, d[i + s - 1].generator)) break;
    if (!is_front(variant) && q + 1 < s) break;
    const std::size_t p = is_front(variant) ? q : q + 1 - s;
    std::vector<MoveInstance> cs;
    try {
      cs = crossings(sig, y, p, s, variant);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotARedex) throw;
      if (is_front(variant)) break;
      continue;
    }
    bool same = true;
    for (std::size_t j = 0; j < s && same; ++j) same = cs[j].entry() == d[i + j];
    if (!same) {
      if (is_front(variant)) break;
      continue;
    }
    const Entry& alpha = d[i + s];
    const std::size_t expect = is_front(variant) ? p : p + 1;
    if (alpha.embedding[0] != expect || sizeof_source(sig, alpha.generator) != s) continue;
    return PullPattern{p, s, alpha.embedding};
  }
  return std::nullopt;
}

void check_chirality(const Signature& sig, const Entry& crossing, PullVariant variant) {
  const auto& move = sig.at(crossing.generator).move;
  if (move && move->family == MoveFamily::I && move->inverse != is_primed(variant))
    throw Error(ErrorCode::VariantMismatch,
                std::string(to_string(variant)) + " pull-through over a " +
                    (move->inverse ? "inverse" : "forward") + " interchange");
}

MoveResult pull_forward(Signature& sig, const Diagram& d, std::size_t i, PullVariant variant) {
  if (!is_interchange_cell(sig, d[i].generator))
    throw Error(ErrorCode::NotARedex, "no interchange at height " + std::to_string(i));
  check_chirality(sig, d[i], variant);
  auto found = match_forward(sig, d, i, variant);
  if (!found) throw Error(ErrorCode::NotARedex, "no pull-through pattern at height " + std::to_string(i));
  const Diagram& y = slice(d, i, sig);
  const std::size_t p = found->p;
  const std::size_t s = found->block;
  const GeneratorId alpha = d[i + s].generator;
  const Diagram& alpha_s = sig.source(alpha);
  const std::size_t first = is_front(variant) ? p + 1 : p;
  auto tail = y[first].embedding.minus(alpha_s[0].embedding);
  if (!tail) throw Error(ErrorCode::NotARedex, "cell does not fit the block before crossing");
  Embedding placed = Embedding::cons(first, *tail);
  if (!well_defined_embedding(placed, alpha_s, y, sig))
    throw Error(ErrorCode::NotARedex, "cell does not fit the block before crossing");
  Diagram y2 = rewrite(y, placed, alpha_s, sig.target(alpha));
  const std::size_t m = sizeof_target(sig, alpha);
  if (m == 0) throw Error(ErrorCode::NotARedex, "cell has an empty target; nothing to cross");
  std::vector<MoveInstance> after;
  try {
    after = crossings(sig, y2, p, m, variant);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NotARedex) throw;
    throw Error(ErrorCode::NotARedex, std::string("output does not cross back: ") + err.what());
  }
  std::vector<Entry> from(d.entries().begin() + i, d.entries().begin() + i + s + 1);
  std::vector<Entry> to{Entry{alpha, placed}};
  for (const auto& c : after) to.push_back(c.entry());
  MoveKind kind{MoveFamily::II, is_primed(variant), false, Composite::atomic};
  MoveInstance move = make_move(sig, kind, y, from, to, i, true);
  std::vector<Entry> entries(d.entries().begin(), d.entries().begin() + i);
  entries.insert(entries.end(), to.begin(), to.end());
  entries.insert(entries.end(), d.entries().begin() + i + s + 1, d.entries().end());
  return MoveResult{Diagram(d.source(), std::move(entries)), std::move(move)};
}

MoveResult pull_inverse(Signature& sig, const Diagram& d, std::size_t i, PullVariant variant) {
  if (i >= d.entries().size()) throw Error(ErrorCode::NotARedex, "height out of range");
  const Entry& alpha = d[i];
  const std::size_t s = sizeof_source(sig, alpha.generator);
  const std::size_t m = sizeof_target(sig, alpha.generator);
  if (s == 0 || m == 0) throw Error(ErrorCode::NotARedex, "cell with an empty boundary");
  if (i + m >= d.entries().size())
    throw Error(ErrorCode::NotARedex, "not enough crossings above height " + std::to_string(i));
  if (!is_interchange_cell(sig, d[i + 1].generator))
    throw Error(ErrorCode::NotARedex, "no interchange above height " + std::to_string(i));
  check_chirality(sig, d[i + 1], variant);
  const std::size_t q = alpha.embedding[0];
  if (is_front(variant) && q == 0) throw Error(ErrorCode::NotARedex, "nothing below the block");
  const std::size_t p = is_front(variant) ? q - 1 : q;
  const Diagram& y = slice(d, i, sig);
  const Diagram& y2 = slice(d, i + 1, sig);
  std::vector<MoveInstance> after;
  try {
    after = crossings(sig, y2, p, m, variant);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NotARedex) throw;
    throw Error(ErrorCode::NotARedex, err.what());
  }
  for (std::size_t j = 0; j < m; ++j)
    if (!(after[j].entry() == d[i + 1 + j]))
      throw Error(ErrorCode::NotARedex, "crossings above height " + std::to_string(i) +
                                            " are not canonical");
  std::vector<MoveInstance> before;
  try {
    before = crossings(sig, y, p, s, variant);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::NotARedex) throw;
    throw Error(ErrorCode::NotARedex, std::string("block does not cross: ") + err.what());
  }
  Diagram ys = replay(y, before, sig);
  const std::size_t first = is_front(variant) ? p : p + 1;
  auto tail = ys[first].embedding.minus(sig.source(alpha.generator)[0].embedding);
  if (!tail) throw Error(ErrorCode::NotARedex, "cell does not fit the crossed block");
  std::vector<Entry> from;
  for (const auto& c : before) from.push_back(c.entry());
  from.push_back(Entry{alpha.generator, Embedding::cons(first, *tail)});
  // The forward move from the reconstructed source must land exactly here.
  Diagram candidate(y, from);
  MoveResult fwd = pull_forward(sig, candidate, 0, variant);
  std::vector<Entry> to(d.entries().begin() + i, d.entries().begin() + i + m + 1);
  if (!equivalent(fwd.diagram, Diagram(y, to)))
    throw Error(ErrorCode::NotARedex, "segment is not the image of a pull-through");
  MoveInstance move = fwd.move;
  move.kind.inverse = true;
  move.applied = sig.inverse(move.cell);
  move.embedding = move.embedding.with_height(i);
  move.location.height = i;
  std::vector<Entry> entries(d.entries().begin(), d.entries().begin() + i);
  entries.insert(entries.end(), from.begin(), from.end());
  entries.insert(entries.end(), d.entries().begin() + i + m + 1, d.entries().end());
  return MoveResult{Diagram(d.source(), std::move(entries)), std::move(move)};
}

}  // namespace

MoveResult apply_pullthrough(Signature& sig, const Diagram& d, std::size_t height,
                             PullVariant variant, Direction dir) {
  if (d.dim() < 3) throw Error(ErrorCode::NotARedex, "pull-through needs dimension at least 3");
  if (height >= d.entries().size())
    throw Error(ErrorCode::NotARedex, "height " + std::to_string(height) + " out of range");
  return dir == Direction::forward ? pull_forward(sig, d, height, variant)
                                   : pull_inverse(sig, d, height, variant);
}

std::vector<MoveInstance> expand_pullthrough(Signature& sig, const Diagram& d, std::size_t height,
                                             std::size_t cells, std::size_t groups,
                                             PullVariant variant) {
  std::vector<MoveInstance> out;
  if (cells == 0 || groups == 0) return out;
  // Block size: the first cell sits right after `groups` groups of that many crossings.
  std::size_t s = 0;
  for (std::size_t cand = 1; height + groups * cand < d.entries().size(); ++cand) {
    const Entry& e = d[height + groups * cand];
    if (!is_interchange_cell(sig, e.generator) || sizeof_source(sig, e.generator) == cand) {
      if (sizeof_source(sig, e.generator) == cand) s = cand;
      break;
    }
  }
  if (s == 0) throw Error(ErrorCode::NotABlock, "no cell stack after the crossing groups");
  Diagram state = d;
  for (std::size_t j = 0; j < cells; ++j) {
    const std::size_t base = height + j;
    if (base + groups * s >= state.entries().size())
      throw Error(ErrorCode::NotABlock, "cell stack is shorter than " + std::to_string(cells));
    const GeneratorId alpha = state[base + groups * s].generator;
    if (sizeof_source(sig, alpha) != s)
      throw Error(ErrorCode::NotABlock, "cell " + sig.name(alpha) + " does not act on the block");
    for (std::size_t g = groups; g-- > 0;) {
      try {
        MoveResult r = apply_pullthrough(sig, state, base + g * s, variant, Direction::forward);
        state = r.diagram;
        out.push_back(std::move(r.move));
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NotARedex && err.code() != ErrorCode::VariantMismatch) throw;
        throw Error(ErrorCode::NotABlock, err.what());
      }
    }
    s = sizeof_target(sig, alpha);
  }
  return out;
}

// ---- Replay ----

Diagram apply_move(const Diagram& d, const MoveInstance& m, const Signature& sig) {
  return checked_rewrite(d, m.embedding, sig.source(m.applied), sig.target(m.applied), sig);
}

Diagram replay(const Diagram& d, std::span<const MoveInstance> moves, const Signature& sig) {
  Diagram state = d;
  for (const auto& m : moves) state = apply_move(state, m, sig);
  return state;
}

Diagram path(const Diagram& start, std::span<const MoveInstance> moves) {
  std::vector<Entry> entries;
  entries.reserve(moves.size());
  for (const auto& m : moves) entries.push_back(m.entry());
  return Diagram(start, std::move(entries));
}

// ---- Discovery ----

std::vector<MoveOption> moves_at(Signature& sig, const Diagram& d, std::size_t height) {
  std::vector<MoveOption> out;
  if (d.dim() < 2 || height >= d.entries().size()) return out;
  for (const Redex& r : interchange_redexes(d, sig)) {
    if (r.height != height) continue;
    MoveKind kind = kInterchange;
    kind.inverse = r.direction == Interchange::right_down;
    out.push_back(MoveOption{kind, height, r.direction, std::nullopt,
                             kind.inverse ? Direction::inverse : Direction::forward});
  }
  if (d.dim() < 3) return out;
  for (auto v : {PullVariant::front, PullVariant::rear, PullVariant::primed_front,
                 PullVariant::primed_rear}) {
    for (auto dir : {Direction::forward, Direction::inverse}) {
      try {
        apply_pullthrough(sig, d, height, v, dir);
      } catch (const Error&) {
        continue;
      }
      MoveKind kind{MoveFamily::II, is_primed(v), dir == Direction::inverse, Composite::atomic};
      out.push_back(MoveOption{kind, height, std::nullopt, v, dir});
    }
  }
  return out;
}

}  // namespace hdk
