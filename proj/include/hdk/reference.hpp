#pragma once

// Slow, literal transcriptions of the definitions. Nothing here is cached or
// shortcut; the fuzz suite compares the fast kernel against these.

#include <cstddef>
#include <vector>

#include "hdk/diagram.hpp"
#include "hdk/embedding.hpp"
#include "hdk/signature.hpp"

namespace hdk::reference {

/// Slices recomputed from scratch on every call.
std::vector<Diagram> slices(const Diagram& d, const Signature& sig);
Diagram slice(const Diagram& d, std::size_t i, const Signature& sig);

/// Composite f after e, where e: S -> D. Unfolds the recursive definition,
/// lifting f.e through the first e.h entries of D one entry at a time.
Embedding compose_embeddings(const Embedding& f, const Embedding& e, const Diagram& s,
                             const Diagram& d, const Signature& sig);

/// Rewrite whose new entries are composed with the literal recursion.
Diagram rewrite(const Diagram& d, const Embedding& e, const Diagram& s, const Diagram& t,
                const Signature& sig);

/// Slice j of rewrite(A, e, S, T) by the three-range formula.
Diagram explicit_rewrite_slice(const Diagram& a, const Embedding& e, const Diagram& s,
                               const Diagram& t, std::size_t j, const Signature& sig);

bool well_defined_embedding(const Embedding& e, const Diagram& s, const Diagram& d,
                            const Signature& sig);
bool well_defined(const Diagram& d, const Signature& sig);

/// Every embedding S -> D, one candidate height at a time on one thread, each
/// candidate checked with the literal well-definedness test.
std::vector<Embedding> find_embeddings(const Diagram& s, const Diagram& d, const Signature& sig);

}  // namespace hdk::reference
