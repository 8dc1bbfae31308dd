#include <algorithm>

#include "hdk/compose.hpp"
#include "hdk/fuzz.hpp"
#include "hdk/kernel.hpp"

namespace hdk::fuzz {
namespace {

// Attempts at drawing a partner diagram with the right target.
constexpr int kPartnerTries = 12;

}  // namespace

Gen::Gen(std::uint64_t seed, Limits limits) : rng_(seed), limits_(limits) {}

std::size_t Gen::below(std::size_t n) {
  if (n == 0) return 0;
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

bool Gen::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

std::shared_ptr<Signature> Gen::signature() {
  auto sig = std::make_shared<Signature>(limits_.max_dim + 2);
  const std::size_t zeros = 1 + below(std::min<std::size_t>(limits_.max_generators, 2));
  for (std::size_t i = 0; i < zeros; ++i) sig->add_generator("x" + std::to_string(i), 0);
  auto points = sig->generators_of_dim(0);

  for (std::size_t k = 1; k <= limits_.max_dim; ++k) {
    const std::size_t count = 1 + below(limits_.max_generators);
    const std::string prefix(1, static_cast<char>('a' + k - 1));
    for (std::size_t i = 0; i < count; ++i) {
      const std::string name = prefix + std::to_string(i);
      if (k == 1) {
        // the first 1-cell is a loop so that words of any length exist
        GeneratorId s = i == 0 ? points[0] : points[below(points.size())];
        GeneratorId t = i == 0 ? points[0] : points[below(points.size())];
        sig->add_generator(name, 1, Diagram::point(s), Diagram::point(t));
        continue;
      }
      if (i == 0 || coin(0.25)) {
        // a cell on a single lower cell, so every level has something to stack
        auto lower = sig->generators_of_dim(k - 1);
        Diagram source = atom_diagram(*sig, lower[coin(0.6) ? 0 : below(lower.size())]);
        sig->add_generator(name, k, source, partner(*sig, source));
        continue;
      }
      auto existing = sig->generators_of_dim(k);
      if (coin(0.3)) {
        GeneratorId g = existing[below(existing.size())];
        // parallel to, or reversing, an existing cell
        if (coin())
          sig->add_generator(name, k, sig->source(g), sig->target(g));
        else
          sig->add_generator(name, k, sig->target(g), sig->source(g));
        continue;
      }
      const std::size_t heights[] = {1, 1, 2, 0};
      Diagram base = diagram(*sig, k - 2);
      Diagram source = from(*sig, base, heights[below(4)]);
      Diagram target = partner(*sig, source);
      sig->add_generator(name, k, source, target);
    }
  }
  return sig;
}

Diagram Gen::word(const Signature& sig, std::size_t max_len) {
  auto points = sig.generators_of_dim(0);
  return from(sig, Diagram::point(points[below(points.size())]), below(max_len + 1));
}

Diagram Gen::diagram(const Signature& sig, std::size_t n) {
  if (n == 0) {
    auto points = sig.generators_of_dim(0);
    return Diagram::point(points[coin(0.7) ? 0 : below(points.size())]);
  }
  // Redraw the source a few times when the cells do not fit on it.
  const std::size_t want = coin(0.1) ? 0 : 1 + below(limits_.max_height);
  Diagram best = from(sig, diagram(sig, n - 1), want);
  for (int i = 0; i < 5 && best.entries().size() < want; ++i) {
    Diagram d = from(sig, diagram(sig, n - 1), want);
    if (d.entries().size() > best.entries().size()) best = d;
  }
  return best;
}

Diagram Gen::from(const Signature& sig, const Diagram& source, std::optional<std::size_t> height) {
  const std::size_t n = source.dim() + 1;
  const std::size_t want = height.value_or(coin(0.1) ? 0 : 1 + below(limits_.max_height));
  auto cells = sig.generators_of_dim(n);
  // Move cells have dimension above the user generators; keep to user cells.
  cells.erase(std::remove_if(cells.begin(), cells.end(), [&](GeneratorId g) { return sig.at(g).synthesized; }),
              cells.end());
  std::vector<Entry> entries;
  Diagram slice = source;
  for (std::size_t step = 0; step < want; ++step) {
    std::shuffle(cells.begin(), cells.end(), rng_);
    bool placed = false;
    for (GeneratorId g : cells) {
      auto found = find_embeddings(sig.source(g), slice, sig);
      if (found.empty()) continue;
      const Embedding& e = found[below(found.size())];
      slice = rewrite(slice, e, sig.source(g), sig.target(g));
      entries.push_back(Entry{g, e});
      placed = true;
      break;
    }
    if (!placed) break;
  }
  return Diagram(source, std::move(entries));
}

Diagram Gen::over(const Signature& sig, const Diagram& base, std::size_t n) {
  Diagram d = base;
  while (d.dim() < n) d = from(sig, d);
  return d;
}

Piece Gen::piece(const Signature& sig, const Diagram& d) {
  const std::size_t n = d.dim();
  if (n == 0) return Piece{d, Embedding{}};
  const std::size_t len = d.entries().size();
  switch (below(3)) {
    case 0:
      if (len > 0) {
        const std::size_t i = below(len);
        return Piece{atom_diagram(sig, d[i].generator), Embedding::cons(i, d[i].embedding)};
      }
      break;
    case 1: {
      auto cells = sig.generators_of_dim(n);
      std::shuffle(cells.begin(), cells.end(), rng_);
      for (GeneratorId g : cells) {
        Diagram atom = atom_diagram(sig, g);
        auto found = find_embeddings(atom, d, sig);
        if (!found.empty()) return Piece{atom, found[below(found.size())]};
      }
      break;
    }
    default: break;
  }
  const std::size_t begin = below(len + 1);
  const std::size_t end = begin + below(std::min<std::size_t>(len - begin, 2) + 1);
  return Piece{subdiagram(d, begin, end, sig), Embedding::cons(begin, Embedding::zero(n - 1))};
}

Diagram Gen::partner(const Signature& sig, const Diagram& s) {
  if (s.dim() == 0) {
    auto points = sig.generators_of_dim(0);
    return Diagram::point(points[below(points.size())]);
  }
  std::vector<Diagram> options{s};
  const Diagram t = target(s, sig);
  if (t == s.source()) options.push_back(identity_diagram(s.source()));
  for (int i = 0; i < kPartnerTries; ++i) {
    Diagram c = from(sig, s.source(), below(3));
    if (target(c, sig) == t) options.push_back(c);
  }
  // s followed by a loop on its target
  for (int i = 0; i < kPartnerTries / 2; ++i) {
    Diagram loop = from(sig, t, 1 + below(2));
    if (loop.entries().size() > 0 && target(loop, sig) == t) {
      options.push_back(compose(s, loop, sig));
      break;
    }
  }
  return options[below(options.size())];
}

}  // namespace hdk::fuzz
