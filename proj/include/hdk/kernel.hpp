#pragma once

// The trusted core: slices, rewrites, lifts, embedding composition and the
// well-definedness checks everything else is validated against.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hdk/diagram.hpp"
#include "hdk/embedding.hpp"
#include "hdk/signature.hpp"

namespace hdk {

/// Where a well-definedness condition first broke: the lowest height of the
/// outer diagram and, below it, the deepest level reached.
struct Failure {
  std::size_t height = 0;
  std::size_t level = 0;
  std::string reason;
};

struct WellDefinedness {
  bool ok = true;
  std::optional<Failure> failure;

  explicit operator bool() const noexcept { return ok; }
};

/// An embedding together with its domain and codomain, for equivalence checks.
struct TypedEmbedding {
  Embedding heights;
  Diagram domain;
  Diagram codomain;
};

enum class Side { source, target };

/// [g]: the height-1 diagram consisting of `g` alone (or the 0-diagram for a 0-cell).
Diagram atom_diagram(const Signature& sig, GeneratorId g);

/// All slices 0..|D| of an n-diagram (n > 0). Throws IllDefined if an entry's
/// embedding is not well-defined in the slice below it. Memoized per diagram.
const std::vector<Diagram>& slices(const Diagram& d, const Signature& sig);
Diagram slice(const Diagram& d, std::size_t i, const Signature& sig);
Diagram target(const Diagram& d, const Signature& sig);
Diagram boundary(const Diagram& d, Side side, const Signature& sig);

/// D with the image of e: S -> D replaced by T. Range- and dimension-checked only.
Diagram rewrite(const Diagram& d, const Embedding& e, const Diagram& s, const Diagram& t);
/// rewrite after checking that S, T are globular and e is well-defined.
Diagram checked_rewrite(const Diagram& d, const Embedding& e, const Diagram& s, const Diagram& t,
                        const Signature& sig);

/// The lifted embedding T -> rewrite(D, e, S, T); numerically identical to e.
Embedding lift(const Embedding& e, const Diagram& s, const Diagram& t, const Signature& sig);

/// f after e. Equals the elementwise sum of the height vectors.
Embedding compose_embeddings(const Embedding& f, const Embedding& e);
Embedding identity_embedding(const Diagram& d);

bool equivalent(const TypedEmbedding& a, const TypedEmbedding& b);

WellDefinedness well_defined(const Diagram& d, const Signature& sig);
WellDefinedness check_embedding(const Embedding& e, const Diagram& s, const Diagram& d,
                                const Signature& sig);
bool well_defined_embedding(const Embedding& e, const Diagram& s, const Diagram& d,
                            const Signature& sig);

/// Both n = 0, or equal sources and equal targets.
bool globular(const Diagram& s, const Diagram& t, const Signature& sig);

/// Every well-defined embedding S -> D, in lexicographic height order.
std::vector<Embedding> find_embeddings(const Diagram& s, const Diagram& d, const Signature& sig);

/// The subdiagram of D spanning heights [begin, end), with source slice(D, begin).
/// Its embedding into D is (begin, 0, ..., 0).
Diagram subdiagram(const Diagram& d, std::size_t begin, std::size_t end, const Signature& sig);

std::string to_string(const Diagram& d, const Signature& sig);

}  // namespace hdk
