#include <algorithm>

#include "hdk/error.hpp"
#include "hdk/homotopy.hpp"
#include "hdk/kernel.hpp"

namespace hdk {
namespace {

bool is_primed(PullVariant v) { return v == PullVariant::primed_front || v == PullVariant::primed_rear; }

PullVariant with_prime(PullVariant v, bool primed) {
  const bool front = v == PullVariant::front || v == PullVariant::primed_front;
  if (front) return primed ? PullVariant::primed_front : PullVariant::front;
  return primed ? PullVariant::primed_rear : PullVariant::rear;
}

/// The crossings that undo a `v` group: the other sheet, the other chirality.
PullVariant undoing(PullVariant v) {
  switch (v) {
    case PullVariant::front: return PullVariant::primed_rear;
    case PullVariant::rear: return PullVariant::primed_front;
    case PullVariant::primed_front: return PullVariant::rear;
    case PullVariant::primed_rear: return PullVariant::front;
  }
  return v;
}

/// A path under construction: the diagram reached so far and the entries taken.
struct Walk {
  Diagram state;
  std::vector<Entry> steps;

  void take(const MoveInstance& m, const Signature& sig) {
    state = apply_move(state, m, sig);
    steps.push_back(m.entry());
  }
  void take_all(const std::vector<MoveInstance>& ms, const Signature& sig) {
    for (const auto& m : ms) take(m, sig);
  }
  void take(const Entry& e, const Signature& sig) {
    state = checked_rewrite(state, e.embedding, sig.source(e.generator), sig.target(e.generator), sig);
    steps.push_back(e);
  }
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedParams, what); }

/// Runs `fn`, reporting any redex failure as malformed parameters.
template <class Fn>
auto as_params(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& err) {
    switch (err.code()) {
      case ErrorCode::NotARedex:
      case ErrorCode::NotABlock:
      case ErrorCode::VariantMismatch:
      case ErrorCode::NotACrossingPattern:
      case ErrorCode::EmbeddingIllDefined:
      case ErrorCode::HeightOutOfRange:
        malformed(err.what());
      default:
        throw;
    }
  }
}

Embedding locate(const Signature& sig, const Diagram& pattern, const Diagram& d, std::size_t height) {
  for (const Embedding& e : find_embeddings(pattern, d, sig))
    if (e.height() == height) return e;
  malformed("cell source not found at height " + std::to_string(height));
}

bool is_crossing(const Signature& sig, GeneratorId g) {
  const auto& move = sig.at(g).move;
  return move && move->family == MoveFamily::I && move->composite == Composite::atomic;
}

/// Removes adjacent crossing/inverse pairs with unit witnesses, innermost
/// first, starting the search at `from`.
void cancel_pairs(Signature& sig, Walk& walk, std::size_t from, std::size_t count) {
  for (std::size_t done = 0; done < count; ++done) {
    const Diagram& d = walk.state;
    std::optional<std::size_t> at;
    for (std::size_t i = from; i + 1 < d.entries().size() && !at; ++i) {
      const Entry& x = d[i];
      const Entry& y = d[i + 1];
      if (is_crossing(sig, x.generator) && x.embedding == y.embedding &&
          y.generator == sig.inverse(x.generator))
        at = i;
    }
    if (!at) throw Error(ErrorCode::PathsNotGlobular, "crossings do not cancel");
    GeneratorId w = sig.unit_witness(d[*at].generator);
    walk.take(Entry{w, Embedding::cons(*at, d[*at].embedding)}, sig);
  }
}

Boundary finish(const Diagram& base, Walk a, Walk b, const Signature& sig) {
  Diagram source(base, std::move(a.steps));
  Diagram target(base, std::move(b.steps));
  if (!well_defined(source, sig).ok || !well_defined(target, sig).ok ||
      !globular(source, target, sig))
    throw Error(ErrorCode::PathsNotGlobular, "the two paths do not meet");
  return Boundary{std::move(source), std::move(target)};
}

Boundary type_iii(Signature& sig, const HigherMoveParams& p) {
  if (!p.cell) malformed("type III needs the cell rewriting the stack");
  const GeneratorId mu = *p.cell;
  const Diagram& mu_s = sig.source(mu);
  const Diagram& mu_t = sig.target(mu);
  if (mu_s.dim() != p.base.dim()) malformed("cell has the wrong dimension");
  if (mu_s.size() != p.cells) malformed("cell source does not match the stack height");

  Walk one{p.base, {}};
  one.take_all(as_params([&] {
    return expand_pullthrough(sig, p.base, p.height, p.cells, p.crossing_groups, p.variant);
  }), sig);
  one.take(Entry{mu, locate(sig, mu_s, one.state, p.height)}, sig);

  // The block size is the width of the lowest cell in the stack.
  const std::size_t block = sig.source(mu_s[0].generator).size();
  Walk two{p.base, {}};
  two.take(Entry{mu, locate(sig, mu_s, p.base, p.height + p.crossing_groups * block)}, sig);
  two.take_all(as_params([&] {
    return expand_pullthrough(sig, two.state, p.height, mu_t.size(), p.crossing_groups, p.variant);
  }), sig);
  return finish(p.base, std::move(one), std::move(two), sig);
}

Boundary type_iv(Signature& sig, const HigherMoveParams& p) {
  const bool primed = is_primed(p.variant);
  Walk one{p.base, {}};
  one.take(as_params([&] {
    return apply_pullthrough(sig, p.base, p.height, with_prime(PullVariant::rear, primed),
                             Direction::forward).move;
  }), sig);
  Walk two{p.base, {}};
  two.take(as_params([&] {
    return apply_pullthrough(sig, p.base, p.height, with_prime(PullVariant::front, primed),
                             Direction::inverse).move;
  }), sig);
  return finish(p.base, std::move(one), std::move(two), sig);
}

Boundary type_v(Signature& sig, const HigherMoveParams& p) {
  // Layout: crossings of c with a block B at `height`, then alpha on B, then beta on c.
  const bool primed = is_primed(p.variant);
  const PullVariant front = with_prime(PullVariant::front, primed);
  const PullVariant rear = with_prime(PullVariant::rear, primed);
  const Diagram& d = p.base;
  std::size_t s = 0;
  while (p.height + s < d.entries().size() && is_crossing(sig, d[p.height + s].generator)) ++s;
  if (s == 0 || p.height + s + 1 >= d.entries().size()) malformed("type V needs crossings and two cells");
  const GeneratorId alpha = d[p.height + s].generator;
  const GeneratorId beta = d[p.height + s + 1].generator;
  const std::size_t m_alpha = sig.target(alpha).size();
  if (sig.source(beta).size() != 1 || sig.target(beta).size() != 1)
    malformed("the cell on the single crossing strand must keep it a single cell");

  Walk one{d, {}};
  one.take(as_params([&] { return apply_pullthrough(sig, d, p.height, front, Direction::forward).move; }),
           sig);
  one.take_all(as_params([&] {
    return expand_pullthrough(sig, one.state, p.height + 1, 1, m_alpha, rear);
  }), sig);
  one.take_all(rearrange_crossings(sig, one.state, p.height + 2, m_alpha), sig);

  Walk two{d, {}};
  two.take(as_params([&] {
    return apply_interchange(sig, d, p.height + s, Interchange::right_down).move;
  }), sig);
  two.take_all(as_params([&] {
    return expand_pullthrough(sig, two.state, p.height, 1, s, rear);
  }), sig);
  two.take(as_params([&] {
    return apply_pullthrough(sig, two.state, p.height + 1, front, Direction::forward).move;
  }), sig);
  two.take(as_params([&] {
    return apply_interchange(sig, two.state, p.height, Interchange::right_down).move;
  }), sig);
  two.take_all(rearrange_crossings(sig, two.state, p.height + 2, m_alpha), sig);
  return finish(d, std::move(one), std::move(two), sig);
}

Boundary type_vi(Signature& sig, const HigherMoveParams& p) {
  // Layout: crossings (variant) at `height`, a cell on the block, then the crossings undone.
  const Diagram& d = p.base;
  Walk one{d, {}};
  MoveResult pulled =
      as_params([&] { return apply_pullthrough(sig, d, p.height, p.variant, Direction::forward); });
  one.take(pulled.move, sig);
  const std::size_t m = sig.target(pulled.diagram[p.height].generator).size();
  cancel_pairs(sig, one, p.height + 1, m);

  // The undoing crossings start right after the cell.
  std::size_t s = 0;
  while (p.height + s < d.entries().size() && is_crossing(sig, d[p.height + s].generator)) ++s;
  Walk two{d, {}};
  two.take(as_params([&] {
    return apply_pullthrough(sig, d, p.height + s, undoing(p.variant), Direction::inverse).move;
  }), sig);
  cancel_pairs(sig, two, p.height, s);
  return finish(d, std::move(one), std::move(two), sig);
}

}  // namespace

Boundary higher_move_boundary(Signature& sig, const MoveKind& kind, const HigherMoveParams& params) {
  if (!kind.valid() || kind.composite != Composite::atomic)
    malformed("not a higher move kind: " + kind.to_string());
  if (params.base.dim() < 3) malformed("higher moves act on diagrams of dimension at least 3");
  if (params.height >= params.base.entries().size()) malformed("height out of range");
  if (kind.family != MoveFamily::VI && kind.primed != is_primed(params.variant))
    malformed("variant " + std::string(to_string(params.variant)) + " does not match " +
              kind.to_string());
  Boundary b = [&] {
    switch (kind.family) {
      case MoveFamily::III: return type_iii(sig, params);
      case MoveFamily::IV: return type_iv(sig, params);
      case MoveFamily::V: return type_v(sig, params);
      case MoveFamily::VI: return type_vi(sig, params);
      default: malformed(kind.to_string() + " is not a higher move");
    }
  }();
  if (kind.inverse) std::swap(b.source, b.target);
  return b;
}

MoveResult apply_higher_move(Signature& sig, const Diagram& d, const MoveLocation& loc,
                             const MoveKind& kind, const HigherMoveParams& params, Direction dir) {
  MoveKind forward = kind;
  forward.inverse = false;
  Boundary b = higher_move_boundary(sig, forward, params);
  GeneratorId cell = sig.intern_move(forward, b.source, b.target);
  const bool fwd = dir == Direction::forward;
  const Diagram& from = fwd ? b.source : b.target;
  const Diagram& to = fwd ? b.target : b.source;
  if (d.dim() != from.dim() || loc.coords.size() + 1 != d.dim())
    throw Error(ErrorCode::NoMatchAtLocation, "location has the wrong dimension");
  Embedding e = Embedding::cons(loc.height, Embedding(loc.coords));
  WellDefinedness w = check_embedding(e, from, d, sig);
  if (!w.ok) {
    const std::size_t h = w.failure ? w.failure->height : loc.height;
    throw Error(ErrorCode::NoMatchAtLocation,
                "no match at height " + std::to_string(h) + (w.failure ? ": " + w.failure->reason : ""));
  }
  MoveKind applied_kind = forward;
  applied_kind.inverse = !fwd;
  MoveInstance move{applied_kind, cell, fwd ? cell : sig.inverse(cell), loc, e};
  return MoveResult{rewrite(d, e, from, to), std::move(move)};
}

}  // namespace hdk
