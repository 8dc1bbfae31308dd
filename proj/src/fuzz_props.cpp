#include <algorithm>

#include "hdk/compose.hpp"
#include "hdk/error.hpp"
#include "hdk/fuzz.hpp"
#include "hdk/homotopy.hpp"
#include "hdk/kernel.hpp"
#include "hdk/reference.hpp"

namespace hdk::fuzz {
namespace {

// How many times a case may redraw before it gives up as vacuous.
constexpr int kRetries = 40;

/// Collects the first broken expectation of a case.
class Expect {
 public:
  explicit Expect(const Signature& sig) : sig_(sig) {}

  void operator()(bool cond, const std::string& what) {
    if (!cond && out_.ok) out_ = Outcome::fail(what);
  }
  void same(const Diagram& a, const Diagram& b, const std::string& what) {
    if (!(a == b) && out_.ok) out_ = Outcome::fail(what + ": " + to_string(a, sig_) + " vs " + to_string(b, sig_));
  }
  void same(const Embedding& a, const Embedding& b, const std::string& what) {
    if (!(a == b) && out_.ok) out_ = Outcome::fail(what + ": " + a.to_string() + " vs " + b.to_string());
  }
  void defined(const Diagram& d, const std::string& what) {
    WellDefinedness w = well_defined(d, sig_);
    if (!w.ok) return (*this)(false, what + ": " + w.failure->reason);
    (*this)(reference::well_defined(d, sig_), what + " (reference check)");
  }
  void embeds(const Embedding& e, const Diagram& s, const Diagram& d, const std::string& what) {
    WellDefinedness w = check_embedding(e, s, d, sig_);
    if (!w.ok) return (*this)(false, what + " " + e.to_string() + ": " + w.failure->reason);
    (*this)(reference::well_defined_embedding(e, s, d, sig_), what + " (reference check)");
  }
  Outcome result() const { return out_; }

 private:
  const Signature& sig_;
  Outcome out_;
};

std::size_t dim_in(Gen& g, std::size_t lo) {
  const std::size_t hi = g.limits().max_dim;
  return lo + g.below(hi - lo + 1);
}

struct RewriteCase {
  Diagram d;
  Piece s;
  Diagram t;
};

RewriteCase rewrite_case(Gen& g, const Signature& sig) {
  Diagram d = g.diagram(sig, dim_in(g, 1));
  Piece s = g.piece(sig, d);
  Diagram t = g.partner(sig, s.diagram);
  return {d, s, t};
}

/// e: S into D, f: D into M, optionally g: M into N.
struct Chain {
  Diagram n, m, d, s;
  Embedding g, f, e;
};

Chain chain(Gen& gen, const Signature& sig, std::size_t lo = 1) {
  Diagram n = gen.diagram(sig, dim_in(gen, lo));
  Piece pm = gen.piece(sig, n);
  Piece pd = gen.piece(sig, pm.diagram);
  Piece ps = gen.piece(sig, pd.diagram);
  return Chain{n, pm.diagram, pd.diagram, ps.diagram, pm.embedding, pd.embedding, ps.embedding};
}

/// A composable pair S (dim m), D (dim n).
struct Pair {
  Diagram s, d;
};

Pair pair_of_dims(Gen& g, const Signature& sig, std::size_t m, std::size_t n) {
  Diagram s = g.diagram(sig, m);
  if (n >= m) return {s, g.over(sig, target(s, sig), n)};
  return {s, g.from(sig, boundary_iter(s, Side::target, m - n + 1, sig))};
}

// ---- metatheory ----

Outcome identity_rewrites(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  RewriteCase c = rewrite_case(g, *sig);
  expect.same(rewrite(c.d, c.s.embedding, c.s.diagram, c.s.diagram), c.d, "rewrite by S itself");
  return expect.result();
}

Outcome well_defined_rewrites(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  RewriteCase c = rewrite_case(g, *sig);
  expect.defined(rewrite(c.d, c.s.embedding, c.s.diagram, c.t), "rewrite");
  return expect.result();
}

Outcome well_defined_lifts(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  RewriteCase c = rewrite_case(g, *sig);
  Diagram r = rewrite(c.d, c.s.embedding, c.s.diagram, c.t);
  expect.embeds(lift(c.s.embedding, c.s.diagram, c.t, *sig), c.t, r, "lift");
  return expect.result();
}

Outcome well_defined_composite_embeddings(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  Chain c = chain(g, *sig);
  expect.embeds(compose_embeddings(c.g, c.f), c.d, c.n, "g after f");
  expect.embeds(compose_embeddings(c.f, c.e), c.s, c.m, "f after e");
  return expect.result();
}

Outcome globularity_on_slices(Gen& g) {
  if (g.limits().max_dim < 2) return Outcome::none();
  auto sig = g.signature();
  Expect expect(*sig);
  Diagram d = g.diagram(*sig, dim_in(g, 2));
  const auto& sl = slices(d, *sig);
  const auto ref = reference::slices(d, *sig);
  expect(sl == ref, "cached slices differ from recomputed ones");
  const Diagram t = target(d.source(), *sig);
  for (std::size_t i = 0; i < d.entries().size(); ++i) {
    expect.same(sl[i].source(), d.source().source(), "source of slice " + std::to_string(i));
    expect.same(target(sl[i], *sig), t, "target of slice " + std::to_string(i));
  }
  return expect.result();
}

Outcome explicit_rewrites(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  RewriteCase c = rewrite_case(g, *sig);
  Diagram r = rewrite(c.d, c.s.embedding, c.s.diagram, c.t);
  expect.same(r, reference::rewrite(c.d, c.s.embedding, c.s.diagram, c.t, *sig), "literal rewrite");
  for (std::size_t j = 0; j <= r.entries().size(); ++j)
    expect.same(slice(r, j, *sig), reference::explicit_rewrite_slice(c.d, c.s.embedding, c.s.diagram, c.t, j, *sig),
                "slice " + std::to_string(j));
  return expect.result();
}

/// C into B by f, A parallel to C, S into A by e, T parallel to S.
struct Nested {
  Diagram b, c, a, s, t;
  Embedding f, e;
};

Nested nested(Gen& g, const Signature& sig) {
  Diagram b = g.diagram(sig, dim_in(g, 1));
  Piece pc = g.piece(sig, b);
  Diagram a = g.partner(sig, pc.diagram);
  Piece ps = g.piece(sig, a);
  Diagram t = g.partner(sig, ps.diagram);
  return Nested{b, pc.diagram, a, ps.diagram, t, pc.embedding, ps.embedding};
}

Outcome composite_lifts(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  Nested n = nested(g, *sig);
  const Diagram ra = rewrite(n.a, n.e, n.s, n.t);
  const Embedding lhs = lift(compose_embeddings(lift(n.f, n.c, n.a, *sig), n.e), n.s, n.t, *sig);
  const Embedding rhs = compose_embeddings(lift(n.f, n.c, ra, *sig), lift(n.e, n.s, n.t, *sig));
  const Diagram lhs_cod = rewrite(rewrite(n.b, n.f, n.c, n.a), compose_embeddings(n.f, n.e), n.s, n.t);
  const Diagram rhs_cod = rewrite(n.b, n.f, n.c, ra);
  expect(equivalent(TypedEmbedding{lhs, n.t, lhs_cod}, TypedEmbedding{rhs, n.t, rhs_cod}),
         "lifted composites differ: " + lhs.to_string() + " vs " + rhs.to_string());
  expect.embeds(rhs, n.t, rhs_cod, "composite lift");
  return expect.result();
}

Outcome composite_rewrites(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  Nested n = nested(g, *sig);
  const Diagram inner = rewrite(n.b, n.f, n.c, rewrite(n.a, n.e, n.s, n.t));
  const Diagram outer =
      rewrite(rewrite(n.b, n.f, n.c, n.a), compose_embeddings(lift(n.f, n.c, n.a, *sig), n.e), n.s, n.t);
  expect.same(inner, outer, "rewrite orders");
  expect.defined(inner, "composite rewrite");
  return expect.result();
}

Outcome associative_composite_embeddings(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  Chain c = chain(g, *sig);
  expect.same(compose_embeddings(c.g, compose_embeddings(c.f, c.e)),
              compose_embeddings(compose_embeddings(c.g, c.f), c.e), "kernel composition");
  const Embedding left = reference::compose_embeddings(
      c.g, reference::compose_embeddings(c.f, c.e, c.s, c.d, *sig), c.s, c.m, *sig);
  const Embedding right = reference::compose_embeddings(
      reference::compose_embeddings(c.g, c.f, c.d, c.m, *sig), c.e, c.s, c.d, *sig);
  expect.same(left, right, "literal composition");
  return expect.result();
}

Outcome well_defined_composition(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  Pair p = pair_of_dims(g, *sig, dim_in(g, 1), dim_in(g, 1));
  expect(composable(p.s, p.d, *sig), "generated pair is not composable");
  expect.defined(compose(p.s, p.d, *sig), "composite");
  return expect.result();
}

Outcome well_defined_inclusions(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  Pair p = pair_of_dims(g, *sig, dim_in(g, 1), dim_in(g, 1));
  const Diagram c = compose(p.s, p.d, *sig);
  if (p.d.dim() >= p.s.dim())
    expect.embeds(inclusion(p.s, p.d, *sig), p.d, c, "inclusion");
  else
    expect.embeds(inclusion_rev(p.s, p.d, *sig), p.s, c, "reverse inclusion");
  return expect.result();
}

/// Dimensions m != n, both in range.
std::pair<std::size_t, std::size_t> unequal_dims(Gen& g) {
  const std::size_t lo = dim_in(g, 1);
  std::size_t hi = dim_in(g, 1);
  while (hi == lo) hi = 1 + g.below(g.limits().max_dim);
  return g.coin() ? std::pair{lo, hi} : std::pair{hi, lo};
}

Outcome well_behaved_whiskering(Gen& g) {
  if (g.limits().max_dim < 2) return Outcome::none();
  auto sig = g.signature();
  Expect expect(*sig);
  auto [m, n] = unequal_dims(g);
  Pair p = pair_of_dims(g, *sig, m, n);
  const Diagram c = compose(p.s, p.d, *sig);
  if (n > m) {
    for (std::size_t i = 0; i < p.d.entries().size(); ++i)
      expect.same(slice(c, i, *sig), compose(p.s, slice(p.d, i, *sig), *sig), "slice " + std::to_string(i));
  } else {
    for (std::size_t i = 0; i < p.s.entries().size(); ++i)
      expect.same(slice(c, i, *sig), compose(slice(p.s, i, *sig), p.d, *sig), "slice " + std::to_string(i));
  }
  return expect.result();
}

Outcome lifts_and_inclusions(Gen& g) {
  if (g.limits().max_dim < 2) return Outcome::none();
  auto sig = g.signature();
  Expect expect(*sig);
  auto [m, n] = unequal_dims(g);
  Pair p = pair_of_dims(g, *sig, m, n);
  const Diagram c = compose(p.s, p.d, *sig);
  if (n > m) {
    const Embedding inner = inclusion(p.s, p.d, *sig).tail();
    for (std::size_t i = 0; i < p.d.entries().size(); ++i) {
      const Diagram di = slice(p.d, i, *sig);
      const Embedding inc = inclusion(p.s, di, *sig);
      expect.same(inc, lift(inner, p.d.source(), di, *sig), "inclusion into slice " + std::to_string(i));
      expect.embeds(inc, di, slice(c, i, *sig), "inclusion into slice");
    }
  } else {
    const Embedding inner = inclusion_rev(p.s, p.d, *sig).tail();
    for (std::size_t i = 0; i < p.s.entries().size(); ++i) {
      const Diagram si = slice(p.s, i, *sig);
      // a slice of the same dimension as D is stacked under it: the initial segment
      const Embedding inc = si.dim() > p.d.dim() ? inclusion_rev(si, p.d, *sig) : identity_embedding(si);
      expect.same(inc, lift(inner, p.s.source(), si, *sig), "reverse inclusion of slice " + std::to_string(i));
      expect.embeds(inc, si, slice(c, i, *sig), "reverse inclusion of slice");
    }
  }
  return expect.result();
}

/// S, D of dimension n and M of dimension l > n, with S then D then M composable.
struct Triple {
  Diagram s, d, m;
};

Triple stacked(Gen& g, const Signature& sig) {
  const std::size_t n = 1 + g.below(g.limits().max_dim - 1);
  const std::size_t l = n + 1 + g.below(g.limits().max_dim - n);
  Diagram s = g.diagram(sig, n);
  Diagram d = g.from(sig, target(s, sig));
  Diagram m = g.over(sig, target(d, sig), l);
  return {s, d, m};
}

Outcome associative_composition(Gen& g) {
  if (g.limits().max_dim < 2) return Outcome::none();
  auto sig = g.signature();
  Expect expect(*sig);
  Triple t = stacked(g, *sig);
  expect.same(compose(t.s, compose(t.d, t.m, *sig), *sig), compose(compose(t.s, t.d, *sig), t.m, *sig),
              "lower-dimensional pair on the left");

  // the same with the higher-dimensional operand first
  const std::size_t l = t.m.dim();
  const std::size_t n = t.s.dim();
  Diagram m = g.diagram(*sig, l);
  Diagram s = g.from(*sig, boundary_iter(m, Side::target, l - n + 1, *sig));
  Diagram d = g.from(*sig, target(s, *sig));
  expect.same(compose(compose(m, s, *sig), d, *sig), compose(m, compose(s, d, *sig), *sig),
              "higher-dimensional operand on the left");

  // vertical composition
  Diagram a = g.diagram(*sig, n);
  Diagram b = g.from(*sig, target(a, *sig));
  Diagram c = g.from(*sig, target(b, *sig));
  expect.same(compose(a, compose(b, c, *sig), *sig), compose(compose(a, b, *sig), c, *sig), "vertical");
  return expect.result();
}

Outcome composition_of_inclusions(Gen& g) {
  if (g.limits().max_dim < 2) return Outcome::none();
  auto sig = g.signature();
  Expect expect(*sig);
  Triple t = stacked(g, *sig);
  const Diagram dm = compose(t.d, t.m, *sig);
  expect.same(compose_embeddings(inclusion(t.s, dm, *sig), inclusion(t.d, t.m, *sig)),
              inclusion(compose(t.s, t.d, *sig), t.m, *sig), "composed inclusions");
  return expect.result();
}

/// S of dimension m, D of dimension n, M of dimension l with l, n > m > 0,
/// where S then D then M compose and S whiskers onto M.
std::optional<Triple> whiskered(Gen& g, const Signature& sig, bool l_at_least_n) {
  const std::size_t top = g.limits().max_dim;
  const std::size_t m = 1 + g.below(top - 1);
  std::size_t n = m + 1 + g.below(top - m);
  std::size_t l = m + 1 + g.below(top - m);
  if (l_at_least_n && l < n) std::swap(l, n);
  Diagram s = g.diagram(sig, m);
  Diagram d = g.over(sig, target(s, sig), n);
  Diagram mm = l >= n ? g.over(sig, target(d, sig), l)
                      : g.from(sig, boundary_iter(d, Side::target, n - l + 1, sig));
  if (!composable(s, mm, sig)) return std::nullopt;
  return Triple{s, d, mm};
}

Outcome distributive_composition(Gen& g) {
  if (g.limits().max_dim < 2) return Outcome::none();
  auto sig = g.signature();
  Expect expect(*sig);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    auto t = whiskered(g, *sig, false);
    if (!t) continue;
    const Diagram sd = compose(t->s, t->d, *sig);
    const Diagram sm = compose(t->s, t->m, *sig);
    expect(composable(sd, sm, *sig), "whiskered composites do not compose");
    if (!expect.result().ok) return expect.result();
    expect.same(compose(t->s, compose(t->d, t->m, *sig), *sig), compose(sd, sm, *sig), "distributivity");
    return expect.result();
  }
  return Outcome::none();
}

Outcome triple_inclusion(Gen& g) {
  if (g.limits().max_dim < 2) return Outcome::none();
  auto sig = g.signature();
  Expect expect(*sig);
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    auto t = whiskered(g, *sig, true);
    if (!t) continue;
    const Diagram dm = compose(t->d, t->m, *sig);
    const Embedding left = compose_embeddings(inclusion(t->s, dm, *sig), inclusion(t->d, t->m, *sig));
    const Embedding right = compose_embeddings(
        inclusion(compose(t->s, t->d, *sig), compose(t->s, t->m, *sig), *sig), inclusion(t->s, t->m, *sig));
    expect.same(left, right, "inclusions of M");
    expect.embeds(left, t->m, compose(t->s, dm, *sig), "inclusion of M");
    return expect.result();
  }
  return Outcome::none();
}

Outcome identity_cancellation(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  Diagram m = g.diagram(*sig, dim_in(g, 1));
  Piece p = g.piece(*sig, m);
  expect.same(compose_embeddings(p.embedding, identity_embedding(p.diagram)), p.embedding, "f after id");
  expect.same(compose_embeddings(identity_embedding(m), p.embedding), p.embedding, "id after f");
  expect.same(reference::compose_embeddings(p.embedding, identity_embedding(p.diagram), p.diagram, p.diagram, *sig),
              p.embedding, "literal f after id");
  expect.same(reference::compose_embeddings(identity_embedding(m), p.embedding, p.diagram, m, *sig), p.embedding,
              "literal id after f");
  return expect.result();
}

Outcome unit_laws(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  const std::size_t n = dim_in(g, 1);
  Diagram d = g.diagram(*sig, n);
  const std::size_t k = g.below(n);
  const Diagram below = boundary_iter(d, Side::source, n - k, *sig);
  const Diagram above = boundary_iter(d, Side::target, n - k, *sig);
  expect.same(compose(identity_diagram(below), d, *sig), d, "identity first");
  expect.same(compose(d, identity_diagram(above), *sig), d, "identity last");
  return expect.result();
}

// ---- normal form and size law ----

Outcome normal_form_case(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  Diagram a = g.diagram(*sig, dim_in(g, 1));
  Piece pd = g.piece(*sig, a);
  Piece ps = g.piece(*sig, pd.diagram);
  const Embedding fast = compose_embeddings(pd.embedding, ps.embedding);
  expect.same(fast, reference::compose_embeddings(pd.embedding, ps.embedding, ps.diagram, pd.diagram, *sig),
              "elementwise sum against the recursion");
  return expect.result();
}

Outcome size_law_case(Gen& g) {
  auto sig = g.signature();
  Expect expect(*sig);
  RewriteCase c = rewrite_case(g, *sig);
  const Diagram r = rewrite(c.d, c.s.embedding, c.s.diagram, c.t);
  const std::size_t expected = c.d.entries().size() - c.s.diagram.entries().size() + c.t.entries().size();
  expect(r.entries().size() == expected,
         "size " + std::to_string(r.entries().size()) + ", expected " + std::to_string(expected));
  return expect.result();
}

// ---- move round-trips ----

void check_move(Expect& expect, const Diagram& d, const MoveResult& r, const Diagram& back, const Signature& sig) {
  expect.same(back, d, "inverse move");
  expect.same(r.diagram.source(), d.source(), "source boundary");
  expect.same(target(r.diagram, sig), target(d, sig), "target boundary");
  expect.defined(r.diagram, "moved diagram");
  expect.same(apply_move(d, r.move, sig), r.diagram, "move cell replay");
}

Outcome interchange_round_trip(Gen& g) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    auto sig = g.signature();
    for (int draw = 0; draw < 8; ++draw) {
      Diagram d = g.from(*sig, g.diagram(*sig, 1 + g.below(g.limits().max_dim - 1)), 2 + g.below(g.limits().max_height - 1));
      if (d.dim() < 2) continue;
      auto redexes = interchange_redexes(d, *sig);
      if (redexes.empty()) continue;
      const Redex x = redexes[g.below(redexes.size())];
      Expect expect(*sig);
      MoveResult r = apply_interchange(*sig, d, x.height, x.direction);
      const Interchange back =
          x.direction == Interchange::left_down ? Interchange::right_down : Interchange::left_down;
      check_move(expect, d, r, apply_interchange(*sig, r.diagram, x.height, back).diagram, *sig);
      return expect.result();
    }
  }
  return Outcome::none();
}

/// A 3-diagram with a pull-through redex of `variant` at the returned height.
std::optional<std::pair<Diagram, std::size_t>> pull_redex(Gen& g, Signature& sig, PullVariant variant) {
  Diagram y0 = g.from(sig, g.diagram(sig, 1), 2 + g.below(3));
  Diagram prefix = g.from(sig, y0, g.below(2));
  const Diagram y = target(prefix, sig);
  auto cells = sig.generators_of_dim(3);
  cells.erase(std::remove_if(cells.begin(), cells.end(), [&](GeneratorId c) { return sig.at(c).synthesized; }),
              cells.end());
  std::vector<std::size_t> heights(y.entries().size());
  for (std::size_t i = 0; i < heights.size(); ++i) heights[i] = i;
  std::shuffle(heights.begin(), heights.end(), std::mt19937_64(g.below(1u << 30)));
  for (std::size_t p : heights) {
    for (std::size_t block = 1; block <= 2; ++block) {
      std::vector<MoveInstance> cross;
      try {
        cross = crossings(sig, y, p, block, variant);
      } catch (const Error&) {
        continue;
      }
      const Diagram crossed = replay(y, cross, sig);
      for (GeneratorId a : cells) {
        for (const Embedding& e : find_embeddings(sig.source(a), crossed, sig)) {
          std::vector<Entry> entries(prefix.entries().begin(), prefix.entries().end());
          for (const auto& m : cross) entries.push_back(m.entry());
          entries.push_back(Entry{a, e});
          Diagram d(y0, entries);
          try {
            apply_pullthrough(sig, d, prefix.entries().size(), variant, Direction::forward);
          } catch (const Error&) {
            continue;
          }
          Diagram suffix = g.from(sig, target(d, sig), g.below(2));
          entries.insert(entries.end(), suffix.entries().begin(), suffix.entries().end());
          return std::pair{Diagram(y0, std::move(entries)), prefix.entries().size()};
        }
      }
    }
  }
  return std::nullopt;
}

template <PullVariant V>
Outcome pull_round_trip(Gen& g) {
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    auto sig = g.signature();
    for (int draw = 0; draw < 4; ++draw) {
      auto found = pull_redex(g, *sig, V);
      if (!found) continue;
      const auto& [d, h] = *found;
      Expect expect(*sig);
      MoveResult r = apply_pullthrough(*sig, d, h, V, Direction::forward);
      check_move(expect, d, r, apply_pullthrough(*sig, r.diagram, h, V, Direction::inverse).diagram, *sig);
      return expect.result();
    }
  }
  return Outcome::none();
}

constexpr Limits kMoveLimits{3, 3, 4};

}  // namespace

const std::vector<Property>& metatheory() {
  static const std::vector<Property> all{
      {"Identity rewrites", identity_rewrites, {}},
      {"Well-defined rewrites", well_defined_rewrites, {}},
      {"Well-defined lifts", well_defined_lifts, {}},
      {"Well-defined composite embeddings", well_defined_composite_embeddings, {}},
      {"Globularity on slices", globularity_on_slices, {}},
      {"Explicit rewrites", explicit_rewrites, {}},
      {"Composite lifts", composite_lifts, {}},
      {"Composite rewrites", composite_rewrites, {}},
      {"Associative composite embeddings", associative_composite_embeddings, {}},
      {"Well-defined composition", well_defined_composition, {}},
      {"Well-defined inclusions", well_defined_inclusions, {}},
      {"Well-behaved whiskering", well_behaved_whiskering, {}},
      {"Interaction of lifts and inclusions", lifts_and_inclusions, {}},
      {"Associative diagram composition", associative_composition, {}},
      {"Composition of inclusions", composition_of_inclusions, {}},
      {"Distributive diagram composition", distributive_composition, {}},
      {"Triple inclusion property", triple_inclusion, {}},
      {"Identity-embedding cancellation", identity_cancellation, {}},
      {"Unit laws for identity diagrams", unit_laws, {}},
  };
  return all;
}

const Property& normal_form() {
  static const Property p{"Embedding-composition normal form", normal_form_case, {}};
  return p;
}

const Property& rewrite_size_law() {
  static const Property p{"Rewrite size law", size_law_case, {}};
  return p;
}

const std::vector<Property>& move_round_trips() {
  static const std::vector<Property> all{
      {"Type I round-trip", interchange_round_trip, kMoveLimits},
      {"Type II front round-trip", pull_round_trip<PullVariant::front>, kMoveLimits},
      {"Type II rear round-trip", pull_round_trip<PullVariant::rear>, kMoveLimits},
      {"Type II primed front round-trip", pull_round_trip<PullVariant::primed_front>, kMoveLimits},
      {"Type II primed rear round-trip", pull_round_trip<PullVariant::primed_rear>, kMoveLimits},
  };
  return all;
}

}  // namespace hdk::fuzz
