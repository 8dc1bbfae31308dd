// Acceptance run: one PASS/FAIL line per criterion, details indented below.

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "hdk/compose.hpp"
#include "hdk/error.hpp"
#include "hdk/fuzz.hpp"
#include "hdk/homotopy.hpp"
#include "hdk/kernel.hpp"
#include "hdk/proofdoc.hpp"
#include "oracles.hpp"

using namespace hdk;

namespace {

constexpr std::uint64_t kSeed = 20240917;

struct Verdict {
  bool ok = true;
  std::vector<std::string> details;

  void note(std::string line) { details.push_back(std::move(line)); }
  void fail(std::string line) {
    ok = false;
    note(std::move(line));
  }
};

int failures = 0;

void report(const std::string& criterion, const std::function<Verdict()>& body) {
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v.fail(std::string("threw ") + e.what());
  }
  std::printf("%s  %s\n", v.ok ? "PASS" : "FAIL", criterion.c_str());
  for (const auto& line : v.details) {
    std::istringstream lines(line);
    for (std::string l; std::getline(lines, l);) std::printf("      %s\n", l.c_str());
  }
  std::fflush(stdout);
  if (!v.ok) ++failures;
}

void run_properties(Verdict& v, const std::vector<fuzz::Property>& props, std::size_t cases,
                    const fuzz::Limits& limits, double* seconds = nullptr) {
  for (const auto& p : props) {
    fuzz::PropertyReport r = fuzz::run(p, cases, kSeed, limits);
    if (seconds) *seconds += r.seconds;
    if (!r.ok())
      v.fail(fuzz::format_report(r));
    else if (r.vacuous)
      v.fail(fuzz::format_report(r) + " (fewer instances than required)");
    else
      v.note(fuzz::format_report(r));
  }
}

std::vector<GeneratorId> user_cells(const Signature& sig, std::size_t dim) {
  std::vector<GeneratorId> out;
  for (GeneratorId g : sig.generators_of_dim(dim))
    if (!sig.at(g).synthesized) out.push_back(g);
  return out;
}

// ---- Composite interchange ----

struct Block {
  Diagram d;
  std::size_t height, lower, upper;
  Interchange dir;
};

/// A lower stack P and an upper stack Q side by side, above and below some
/// random cells.
std::optional<Block> interchange_block(fuzz::Gen& g, const Signature& sig) {
  Diagram pre = g.from(sig, g.diagram(sig, 1), g.below(3));
  const Diagram word = target(pre, sig);
  if (word.size() < 2) return std::nullopt;
  const std::size_t cut = 1 + g.below(word.size() - 1);
  Diagram w1(word.source(), std::vector<Entry>(word.entries().begin(), word.entries().begin() + cut));
  Diagram w2(slice(word, cut, sig), std::vector<Entry>(word.entries().begin() + cut, word.entries().end()));
  Diagram p = g.from(sig, w1, 1 + g.below(3));
  Diagram q = g.from(sig, w2, 1 + g.below(3));
  if (p.size() == 0 || q.size() == 0) return std::nullopt;
  const bool left_lower = g.coin();
  Diagram block = left_lower
                      ? compose(compose(p, w2, sig), compose(target(p, sig), q, sig), sig)
                      : compose(compose(w1, q, sig), compose(p, target(q, sig), sig), sig);
  if (block.source() != word) return std::nullopt;
  Diagram after = g.from(sig, target(block, sig), g.below(2));
  std::vector<Entry> entries(pre.entries().begin(), pre.entries().end());
  entries.insert(entries.end(), block.entries().begin(), block.entries().end());
  entries.insert(entries.end(), after.entries().begin(), after.entries().end());
  return Block{Diagram(pre.source(), std::move(entries)), pre.size(), left_lower ? p.size() : q.size(),
               left_lower ? q.size() : p.size(), left_lower ? Interchange::right_down : Interchange::left_down};
}

// ---- Composite pull-through ----

struct Pull {
  Diagram d;
  std::size_t height, cells;
};

/// Front crossings of one cell with a block, then a stack of cells on the block.
std::optional<Pull> pull_block(fuzz::Gen& g, Signature& sig) {
  Diagram y0 = g.from(sig, g.diagram(sig, 1), 2 + g.below(3));
  Diagram prefix = g.from(sig, y0, g.below(2));
  const Diagram y = target(prefix, sig);
  const auto cells = user_cells(sig, 3);
  for (std::size_t attempt = 0; attempt < 8 && y.size() > 1; ++attempt) {
    const std::size_t p = g.below(y.size() - 1);
    const std::size_t block = 1 + g.below(2);
    std::vector<MoveInstance> cross;
    try {
      cross = crossings(sig, y, p, block, PullVariant::front);
    } catch (const Error&) {
      continue;
    }
    const Diagram crossed = replay(y, cross, sig);
    std::vector<Entry> stack;
    for (GeneratorId a : cells) {
      if (sig.source(a).size() != block || sig.target(a).size() == 0) continue;
      for (const Embedding& e : find_embeddings(sig.source(a), crossed, sig))
        if (e.height() == p) stack.push_back(Entry{a, e});
      if (!stack.empty()) break;
    }
    if (stack.empty()) continue;
    stack.resize(1);
    // Further cells rewrite the previous cell's output in place. A cell with
    // an empty output leaves nothing to cross, so the stack avoids those.
    const std::size_t want = 1 + g.below(3);
    while (stack.size() < want) {
      std::vector<GeneratorId> next;
      for (GeneratorId a : cells)
        if (sig.source(a) == sig.target(stack.back().generator) && sig.target(a).size() > 0) next.push_back(a);
      if (next.empty()) break;
      stack.push_back(Entry{next[g.below(next.size())], stack.back().embedding});
    }
    std::vector<Entry> entries(prefix.entries().begin(), prefix.entries().end());
    for (const auto& m : cross) entries.push_back(m.entry());
    entries.insert(entries.end(), stack.begin(), stack.end());
    Diagram d(y0, entries);
    if (!well_defined(d, sig).ok) continue;
    try {
      apply_pullthrough(sig, d, prefix.size(), PullVariant::front, Direction::forward);
    } catch (const Error&) {
      continue;
    }
    Diagram suffix = g.from(sig, target(d, sig), g.below(2));
    entries.insert(entries.end(), suffix.entries().begin(), suffix.entries().end());
    return Pull{Diagram(y0, std::move(entries)), prefix.size(), stack.size()};
  }
  return std::nullopt;
}

// ---- Higher-move instances ----

/// One 0-cell, f, m: [f,f] => [f] and three endomorphisms s, t, b of f, each
/// with a 3-cell a_x: x => x, a merge j_x: [x,x] => [x], and 4-cells
/// mu_x: a_x => [a_x, a_x], nu_x: [a_x, a_x] => a_x, rho_x: j_x => j_x.
std::unique_ptr<Signature> template_signature() {
  auto sig = std::make_unique<Signature>(6);
  GeneratorId star = sig->add_generator("*", 0);
  Diagram pt = Diagram::point(star);
  GeneratorId f = sig->add_generator("f", 1, pt, pt);
  Diagram f1(pt, {Entry{f, Embedding{}}});
  Diagram ff(pt, {Entry{f, Embedding{}}, Entry{f, Embedding{}}});
  sig->add_generator("m", 2, ff, f1);
  for (const char* x : {"s", "t", "b"}) {
    GeneratorId e = sig->add_generator(x, 2, f1, f1);
    Diagram one(f1, {Entry{e, Embedding{0}}});
    Diagram two(f1, {Entry{e, Embedding{0}}, Entry{e, Embedding{0}}});
    GeneratorId a = sig->add_generator(std::string("a_") + x, 3, one, one);
    GeneratorId j = sig->add_generator(std::string("j_") + x, 3, two, one);
    Diagram a1(one, {Entry{a, Embedding{0, 0}}});
    Diagram a2(one, {Entry{a, Embedding{0, 0}}, Entry{a, Embedding{0, 0}}});
    Diagram j1(two, {Entry{j, Embedding{0, 0}}});
    sig->add_generator(std::string("mu_") + x, 4, a1, a2);
    sig->add_generator(std::string("nu_") + x, 4, a2, a1);
    sig->add_generator(std::string("rho_") + x, 4, j1, j1);
  }
  return sig;
}

struct Instance {
  std::string label;
  MoveKind kind;
  HigherMoveParams params;
};

/// Builds slices and paths for one instance: spare wires left of the redex
/// wires and right of them; some spare strands below and above
/// the redex in the slice, and cells on the lower spare strands before it.
class Layout {
 public:
  Layout(Signature& sig, std::mt19937_64& rng, std::size_t redex_wires) : sig_(sig), rng_(rng) {
    left_ = pick(3);
    right_ = pick(3);
    width_ = left_ + redex_wires + right_;
    if (left_ + right_ > 0) {
      below_ = pick(3);
      above_ = pick(3);
    }
    for (std::size_t i = 0; i < below_ + above_; ++i) spare_.push_back(Entry{endo(), Embedding{spare_wire()}});
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::string type() { return std::string(1, "stb"[pick(3)]); }
  GeneratorId endo() { return sig_.require(type()); }
  GeneratorId cell(const std::string& prefix, const std::string& x) { return sig_.require(prefix + x); }

  /// Slice height of the first redex strand, and its leftmost wire.
  std::size_t o() const { return below_; }
  std::size_t w() const { return left_; }

  /// The slice: spare strands below, the redex strands (wire offsets relative
  /// to the redex), spare strands above.
  Diagram slice(const std::vector<std::pair<std::string, std::size_t>>& strands) {
    const GeneratorId f = sig_.require("f");
    Diagram word(Diagram::point(sig_.require("*")), std::vector<Entry>(width_, Entry{f, Embedding{}}));
    std::vector<Entry> entries(spare_.begin(), spare_.begin() + below_);
    for (const auto& [x, wire] : strands) entries.push_back(Entry{sig_.require(x), Embedding{left_ + wire}});
    entries.insert(entries.end(), spare_.begin() + below_, spare_.end());
    return Diagram(std::move(word), std::move(entries));
  }

  /// Cells on the lower spare strands, which leave the slice unchanged.
  std::vector<Entry> prefix() {
    std::vector<Entry> out;
    const std::size_t n = below_ == 0 ? 0 : pick(below_ + 1);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t k = pick(below_);
      const Entry& strand = spare_[k];
      const std::string x = sig_.at(strand.generator).name;
      out.push_back(Entry{cell("a_", x), Embedding{k, strand.embedding[0]}});
    }
    return out;
  }

  /// The same on the upper spare strands of `top`.
  std::vector<Entry> suffix(const Diagram& top) {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < above_; ++i) {
      if (pick(2)) continue;
      const std::size_t k = top.size() - above_ + i;
      const std::string x = sig_.at(top[k].generator).name;
      out.push_back(Entry{cell("a_", x), Embedding{k, top[k].embedding[0]}});
    }
    return out;
  }

 private:
  std::size_t spare_wire() {
    const std::size_t k = pick(left_ + right_);
    return k < left_ ? k : width_ - right_ + (k - left_);
  }

  Signature& sig_;
  std::mt19937_64& rng_;
  std::size_t left_ = 0, right_ = 0, width_ = 0, below_ = 0, above_ = 0;
  std::vector<Entry> spare_;
};

/// Prefix, the redex entries built over `y`, and a suffix, as one path.
Diagram assemble(Signature& sig, Layout& layout, const Diagram& y, const std::vector<Entry>& pre,
                 const std::vector<Entry>& redex) {
  std::vector<Entry> entries = pre;
  entries.insert(entries.end(), redex.begin(), redex.end());
  Diagram d(y, entries);
  for (const Entry& e : layout.suffix(target(d, sig))) entries.push_back(e);
  return Diagram(y, std::move(entries));
}

Instance type_iii(Signature& sig, std::mt19937_64& rng) {
  Layout L(sig, rng, 2);
  const std::size_t o = L.o(), w = L.w();
  const std::string x = L.type(), c = L.type();
  const bool merge = L.pick(3) == 0;
  std::vector<std::pair<std::string, std::size_t>> strands{{c, 1}, {x, 0}};
  if (merge) strands.push_back({x, 0});
  Diagram y = L.slice(strands);
  auto pre = L.prefix();
  std::vector<Entry> redex;
  for (const auto& m : crossings(sig, y, o, merge ? 2 : 1, PullVariant::front)) redex.push_back(m.entry());
  std::size_t cells = merge ? 1 : 1 + L.pick(2);
  for (std::size_t i = 0; i < cells; ++i) redex.push_back(Entry{L.cell(merge ? "j_" : "a_", x), Embedding{o, w}});
  const GeneratorId mu = L.cell(merge ? "rho_" : cells == 1 ? "mu_" : "nu_", x);
  Diagram base = assemble(sig, L, y, pre, redex);
  return {"III" + std::string(merge ? " (merged block)" : "") + ", " + std::to_string(cells) + " cell(s)",
          MoveKind{MoveFamily::III, false, false, Composite::atomic},
          HigherMoveParams{base, pre.size(), PullVariant::front, cells, 1, mu}};
}

Instance type_iv(Signature& sig, std::mt19937_64& rng, bool primed) {
  Layout L(sig, rng, 3);
  const std::size_t o = L.o();
  Diagram y = primed ? L.slice({{L.type(), 0}, {L.type(), 1}, {L.type(), 2}})
                     : L.slice({{L.type(), 2}, {L.type(), 1}, {L.type(), 0}});
  auto pre = L.prefix();
  const Interchange dir = primed ? Interchange::right_down : Interchange::left_down;
  std::vector<Entry> redex;
  Diagram state = y;
  for (std::size_t at : {o + 1, o, o + 1}) {
    auto r = apply_interchange(sig, state, at, dir);
    redex.push_back(r.move.entry());
    state = r.diagram;
  }
  Diagram base = assemble(sig, L, y, pre, redex);
  return {primed ? "IV'" : "IV", MoveKind{MoveFamily::IV, primed, false, Composite::atomic},
          HigherMoveParams{base, pre.size(), primed ? PullVariant::primed_rear : PullVariant::rear}};
}

Instance type_v(Signature& sig, std::mt19937_64& rng, bool primed, bool merge) {
  Layout L(sig, rng, 2);
  const std::size_t o = L.o(), w = L.w();
  const std::string x = L.type(), c = L.type();
  std::vector<Entry> redex;
  std::vector<Entry> pre;
  Diagram y = primed ? L.slice({{x, 0}, {c, 1}}) : merge ? L.slice({{c, 1}, {x, 0}, {x, 0}}) : L.slice({{c, 1}, {x, 0}});
  pre = L.prefix();
  const PullVariant variant = primed ? PullVariant::primed_front : PullVariant::front;
  for (const auto& m : crossings(sig, y, o, merge ? 2 : 1, variant)) redex.push_back(m.entry());
  if (primed) {
    // the right strand comes down first
    redex.push_back(Entry{L.cell("a_", c), Embedding{o, w + 1}});
    redex.push_back(Entry{L.cell("a_", x), Embedding{o + 1, w}});
  } else {
    redex.push_back(Entry{L.cell(merge ? "j_" : "a_", x), Embedding{o, w}});
    redex.push_back(Entry{L.cell("a_", c), Embedding{o + 1, w + 1}});
  }
  Diagram base = assemble(sig, L, y, pre, redex);
  return {std::string(primed ? "V'" : "V") + (merge ? " (merging cell)" : ""),
          MoveKind{MoveFamily::V, primed, false, Composite::atomic}, HigherMoveParams{base, pre.size(), variant}};
}

PullVariant undoing(PullVariant v) {
  switch (v) {
    case PullVariant::front: return PullVariant::primed_rear;
    case PullVariant::rear: return PullVariant::primed_front;
    case PullVariant::primed_front: return PullVariant::rear;
    case PullVariant::primed_rear: return PullVariant::front;
  }
  return v;
}

Instance type_vi(Signature& sig, std::mt19937_64& rng, PullVariant variant) {
  Layout L(sig, rng, 2);
  const std::size_t o = L.o(), w = L.w();
  const std::string x = L.type(), c = L.type();
  // (block wire, block height after the crossing) for each variant
  std::vector<std::pair<std::string, std::size_t>> strands;
  std::size_t block_wire = 0, block_height = 0;
  switch (variant) {
    case PullVariant::front: strands = {{c, 1}, {x, 0}}, block_wire = 0, block_height = o; break;
    case PullVariant::rear: strands = {{x, 1}, {c, 0}}, block_wire = 1, block_height = o + 1; break;
    case PullVariant::primed_front: strands = {{c, 0}, {x, 1}}, block_wire = 1, block_height = o; break;
    case PullVariant::primed_rear: strands = {{x, 0}, {c, 1}}, block_wire = 0, block_height = o + 1; break;
  }
  Diagram y = L.slice(strands);
  auto pre = L.prefix();
  auto cross = crossings(sig, y, o, 1, variant);
  Entry on_block{L.cell("a_", x), Embedding{block_height, w + block_wire}};
  Diagram after = replay(y, cross, sig);
  after = rewrite(after, on_block.embedding, sig.source(on_block.generator), sig.target(on_block.generator));
  auto undo = crossings(sig, after, o, 1, undoing(variant));
  std::vector<Entry> redex{cross[0].entry(), on_block, undo[0].entry()};
  Diagram base = assemble(sig, L, y, pre, redex);
  return {"VI " + std::string(to_string(variant)), MoveKind{MoveFamily::VI, false, false, Composite::atomic},
          HigherMoveParams{base, pre.size(), variant}};
}

// ---- Corpus ----

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const char* const kCorpus[] = {"sigma_star_interchange", "pullthrough", "adjunction"};

}  // namespace

int main() {
  const fuzz::Limits limits{3, 3, 4};

  report("Metatheory fuzz suite: 19 properties, 500 cases each, within 60 s", [&] {
    Verdict v;
    double seconds = 0;
    run_properties(v, fuzz::metatheory(), 500, limits, &seconds);
    char line[96];
    std::snprintf(line, sizeof line, "total %.2f s", seconds);
    if (seconds > 60) v.fail(std::string(line) + " exceeds 60 s");
    else v.note(line);
    return v;
  });

  report("Embedding-composition normal form: 10000 pairs", [&] {
    Verdict v;
    run_properties(v, {fuzz::normal_form()}, 10000, limits);
    return v;
  });

  report("Rewrite size law: 1000 rewrites", [&] {
    Verdict v;
    run_properties(v, {fuzz::rewrite_size_law()}, 1000, limits);
    return v;
  });

  report("Move round-trips: type I and every type II variant, 500 redexes each", [&] {
    Verdict v;
    run_properties(v, fuzz::move_round_trips(), 500, limits);
    return v;
  });

  report("Composite-scheme oracle: 200 interchange blocks and 200 pull-through blocks", [&] {
    Verdict v;
    std::size_t done = 0, tries = 0, atoms = 0;
    for (std::uint64_t i = 0; done < 200 && tries < 20000; ++i, ++tries) {
      fuzz::Gen g(fuzz::case_seed(kSeed, "interchange block", i), limits);
      auto sig = g.signature();
      auto b = interchange_block(g, *sig);
      if (!b) continue;
      ++done;
      auto moves = expand_interchange(*sig, b->d, b->height, b->lower, b->upper);
      atoms += moves.size();
      Diagram got = replay(b->d, moves, *sig);
      if (got != oracles::block_swap(b->d, b->height, b->lower, b->upper, b->dir, *sig))
        v.fail("interchange block " + std::to_string(i) + " differs from the direct swap");
      if (moves.size() != b->lower * b->upper)
        v.fail("interchange block " + std::to_string(i) + " expanded to " + std::to_string(moves.size()) +
               " moves");
    }
    if (done < 200) v.fail("only " + std::to_string(done) + " interchange blocks generated");
    v.note(std::to_string(done) + " interchange blocks, " + std::to_string(atoms) + " atomic moves");

    done = tries = atoms = 0;
    std::size_t stacked = 0;
    for (std::uint64_t i = 0; done < 200 && tries < 20000; ++i, ++tries) {
      fuzz::Gen g(fuzz::case_seed(kSeed, "pull block", i), limits);
      auto sig = g.signature();
      auto p = pull_block(g, *sig);
      if (!p) continue;
      ++done;
      if (p->cells > 1) ++stacked;
      auto moves = expand_pullthrough(*sig, p->d, p->height, p->cells, 1, PullVariant::front);
      atoms += moves.size();
      Diagram got = replay(p->d, moves, *sig);
      if (got != oracles::direct_front_pull(*sig, p->d, p->height, p->cells))
        v.fail("pull-through block " + std::to_string(i) + " differs from the direct pull");
    }
    if (done < 200) v.fail("only " + std::to_string(done) + " pull-through blocks generated");
    v.note(std::to_string(done) + " pull-through blocks (" + std::to_string(stacked) + " with stacked cells), " +
           std::to_string(atoms) + " atomic moves");
    return v;
  });

  report("Boundary assembly: 50 type III to VI instances", [&] {
    Verdict v;
    auto sig = template_signature();
    std::mt19937_64 rng(kSeed);
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < 50; ++i) {
      Instance inst = [&] {
        switch (i % 9) {
          case 0: return type_iii(*sig, rng);
          case 1: return type_iv(*sig, rng, false);
          case 2: return type_iv(*sig, rng, true);
          case 3: return type_v(*sig, rng, false, false);
          case 4: return type_v(*sig, rng, false, true);
          case 5: return type_v(*sig, rng, true, false);
          case 6: return type_vi(*sig, rng, PullVariant::front);
          case 7: return type_vi(*sig, rng, i % 2 ? PullVariant::rear : PullVariant::primed_front);
          default: return type_vi(*sig, rng, PullVariant::primed_rear);
        }
      }();
      ++seen[inst.label];
      const std::string tag = "instance " + std::to_string(i) + " (" + inst.label + ")";
      if (!well_defined(inst.params.base, *sig).ok) {
        v.fail(tag + ": base path is not well-defined");
        continue;
      }
      try {
        for (bool inverse : {false, true}) {
          MoveKind kind = inst.kind;
          kind.inverse = inverse;
          Boundary b = higher_move_boundary(*sig, kind, inst.params);
          if (!globular(b.source, b.target, *sig)) v.fail(tag + ": boundary is not globular");
          if (!well_defined(b.source, *sig).ok || !well_defined(b.target, *sig).ok)
            v.fail(tag + ": boundary is not well-defined");
          if (b.source.source() != inst.params.base) v.fail(tag + ": boundary is not over the base path");
          if (b.source == b.target) v.fail(tag + ": boundary is degenerate");
        }
      } catch (const Error& e) {
        v.fail(tag + ": " + e.what());
      }
    }
    std::string kinds;
    for (const auto& [label, n] : seen) kinds += (kinds.empty() ? "" : ", ") + label + " x" + std::to_string(n);
    v.note(kinds);
    return v;
  });

  report("Corpus replay: bundled documents match their golden reports", [&] {
    Verdict v;
    for (const char* name : kCorpus) {
      const std::string base = std::string(HDK_CORPUS_DIR) + "/" + name;
      ProofDocument doc = parse_document(read_file(base + ".hdprf"));
      Report r = check_document(doc);
      const std::string text = report_text(r);
      if (!r.ok) v.fail(std::string(name) + ": check failed");
      if (text != read_file(base + ".golden")) v.fail(std::string(name) + ": report differs from golden:\n" + text);
      else v.note(std::string(name) + ": " + std::to_string(r.heights.size() - 1) + " steps, as recorded");
    }
    return v;
  });

  report("Serialization: canonical round-trip of the corpus and embedding lists", [&] {
    Verdict v;
    for (const char* name : kCorpus) {
      ProofDocument doc = parse_document(read_file(std::string(HDK_CORPUS_DIR) + "/" + name + ".hdprf"));
      const std::string canon = serialize_document(doc);
      ProofDocument again = parse_document(canon);
      if (serialize_document(again) != canon) v.fail(std::string(name) + ": canonical form is not stable");
      for (const auto& [key, d] : doc.diagrams)
        if (to_string(again.diagram(key), *again.signature) != to_string(d, *doc.signature)) v.fail(std::string(name) + ": diagram " + key + " changed");
    }
    auto sig = template_signature();
    const GeneratorId f = sig->require("f"), s = sig->require("s");
    Diagram ff(Diagram::point(sig->require("*")), {Entry{f, Embedding{}}, Entry{f, Embedding{}}});
    Diagram d(ff, {Entry{s, Embedding{1}}, Entry{s, Embedding{0}}, Entry{s, Embedding{1}}});
    const std::string text = serialize_diagram(d, *sig);
    Diagram back = parse_diagram(text, *sig);
    if (back != d || serialize_diagram(back, *sig) != text) v.fail("[1],[0],[1] did not round-trip: " + text);
    else v.note("a diagram with embeddings [1], [0], [1] round-trips");
    return v;
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : (std::to_string(failures) + " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
