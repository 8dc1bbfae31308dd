#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hdk/embedding.hpp"

namespace hdk {

class Diagram;

/// One rewrite step of an n-diagram: a generating n-cell and the embedding of
/// its source into the current slice.
struct Entry {
  GeneratorId generator;
  Embedding embedding;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Immutable recursive diagram value.
///
/// A 0-diagram is a single generator. An n-diagram (n > 0) is a source
/// (n-1)-diagram together with an ordered list of entries, one per height.
/// Copies share structure; all operations are pure.
class Diagram {
 public:
  /// The 0-diagram consisting of generator `g`.
  static Diagram point(GeneratorId g);

  /// An n-diagram with the given source and entries; n = source.dim() + 1.
  Diagram(Diagram source, std::vector<Entry> entries);

  std::size_t dim() const noexcept;
  /// |D|: number of entries, or 1 for a 0-diagram.
  std::size_t size() const noexcept;
  /// The generator of a 0-diagram.
  GeneratorId generator() const;
  /// The source of an n-diagram, n > 0.
  const Diagram& source() const;
  std::span<const Entry> entries() const noexcept;
  const Entry& operator[](std::size_t i) const;

  /// Structural hash consistent with `equivalent`.
  std::size_t hash() const noexcept;
  bool shares_node_with(const Diagram& other) const noexcept { return node_ == other.node_; }

  struct Node;

 private:
  explicit Diagram(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;

  friend const Node& node_of(const Diagram& d) noexcept;
};

/// Recursive structural equality of dimension, sources, sizes, generators and heights.
bool equivalent(const Diagram& a, const Diagram& b);

inline bool operator==(const Diagram& a, const Diagram& b) { return equivalent(a, b); }

struct DiagramHash {
  std::size_t operator()(const Diagram& d) const noexcept { return d.hash(); }
};

}  // namespace hdk
