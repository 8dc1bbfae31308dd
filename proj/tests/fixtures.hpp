#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "hdk/compose.hpp"
#include "hdk/error.hpp"
#include "hdk/kernel.hpp"
#include "hdk/signature.hpp"

namespace fixtures {

using hdk::Diagram;
using hdk::Embedding;
using hdk::Entry;
using hdk::Signature;

/// Error code thrown by `fn`; fails the test when nothing is thrown.
inline hdk::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const hdk::Error& e) {
    return e.code();
  }
  FAIL("expected an hdk::Error");
  return hdk::ErrorCode::Unsupported;
}

/// A 1-diagram over a single 0-cell: the listed 1-cells in order.
inline Diagram word(const Signature& sig, const std::string& base,
                    const std::vector<std::string>& cells) {
  std::vector<Entry> entries;
  for (const auto& c : cells) entries.push_back(Entry{sig.require(c), Embedding{}});
  return Diagram(Diagram::point(sig.require(base)), std::move(entries));
}

/// An n-diagram from a source and (name, heights) pairs.
inline Diagram stack(const Signature& sig, Diagram source,
                     const std::vector<std::pair<std::string, std::vector<std::size_t>>>& cells) {
  std::vector<Entry> entries;
  for (const auto& [name, h] : cells) entries.push_back(Entry{sig.require(name), Embedding(h)});
  return Diagram(std::move(source), std::move(entries));
}

/// One 0-cell *, f: * -> *, m: [f,f] => [f], s: [f] => [f].
inline std::unique_ptr<Signature> sigma_star(std::size_t top_dim = 4) {
  auto sig = std::make_unique<Signature>(top_dim);
  auto star = sig->add_generator("*", 0);
  Diagram pt = Diagram::point(star);
  sig->add_generator("f", 1, pt, pt);
  sig->add_generator("m", 2, word(*sig, "*", {"f", "f"}), word(*sig, "*", {"f"}));
  sig->add_generator("s", 2, word(*sig, "*", {"f"}), word(*sig, "*", {"f"}));
  return sig;
}

}  // namespace fixtures
