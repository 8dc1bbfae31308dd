#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hdk/diagram.hpp"
#include "hdk/move_kind.hpp"

namespace hdk {

struct InvertibilityData {
  GeneratorId inverse;
  /// f': source [f] then [f^-1], target the identity on f.source.
  std::optional<GeneratorId> unit_witness;
  /// f'': source the identity on f.target, target [f^-1] then [f].
  std::optional<GeneratorId> counit_witness;

  friend bool operator==(const InvertibilityData&, const InvertibilityData&) = default;
};

struct Generator {
  GeneratorId id;
  std::string name;
  std::size_t dim = 0;
  std::optional<Diagram> source;
  std::optional<Diagram> target;
  std::optional<InvertibilityData> invertibility;
  /// Set on cells synthesized for homotopy moves.
  std::optional<MoveKind> move;
  /// True for cells the kernel created (inverses, witnesses, move cells).
  bool synthesized = false;
};

/// Append-only catalog of generating cells in dimensions 0..top_dim.
///
/// Lookups may run concurrently with each other and with insertions; an
/// inserted record never moves or changes except for its invertibility data.
class Signature {
 public:
  explicit Signature(std::size_t top_dim);
  Signature(const Signature&) = delete;
  Signature& operator=(const Signature&) = delete;

  std::size_t top_dim() const noexcept { return top_dim_; }
  /// Process-unique tag; slice caches are keyed on it.
  std::uint64_t serial() const noexcept { return serial_; }
  std::size_t size() const;

  /// Registers a generator after checking dimension, boundary presence,
  /// well-definedness of the boundaries and their globularity.
  GeneratorId add_generator(std::string name, std::size_t dim,
                            std::optional<Diagram> source = std::nullopt,
                            std::optional<Diagram> target = std::nullopt);

  /// Registers a kernel-made cell under a fresh name derived from `base_name`.
  GeneratorId add_synthesized(std::string_view base_name, std::size_t dim, Diagram source,
                              Diagram target, std::optional<MoveKind> move = std::nullopt);

  const Generator& at(GeneratorId id) const;
  Generator info(GeneratorId id) const { return at(id); }
  std::optional<GeneratorId> find(std::string_view name) const;
  GeneratorId require(std::string_view name) const;
  const std::string& name(GeneratorId id) const { return at(id).name; }
  std::size_t dim(GeneratorId id) const { return at(id).dim; }
  const Diagram& source(GeneratorId id) const;
  const Diagram& target(GeneratorId id) const;

  std::vector<GeneratorId> generators() const;
  std::vector<GeneratorId> generators_of_dim(std::size_t dim) const;

  /// Creates (once) the inverse cell with swapped boundaries. Idempotent.
  InvertibilityData mark_invertible(GeneratorId id);
  bool is_invertible(GeneratorId id) const;
  GeneratorId inverse(GeneratorId id) const;
  /// Lazily synthesized witness cells; only exist below top_dim.
  GeneratorId unit_witness(GeneratorId id);
  GeneratorId counit_witness(GeneratorId id);

  /// The invertible move cell of `kind` with this source, created on first
  /// request. Later requests with an equivalent source return the same id.
  GeneratorId intern_move(const MoveKind& kind, const Diagram& source, const Diagram& target);

 private:
  GeneratorId insert_locked(Generator record);
  std::string fresh_name_locked(std::string_view base) const;
  void set_invertibility(GeneratorId id, const InvertibilityData& data);

  std::size_t top_dim_;
  std::uint64_t serial_;
  mutable std::shared_mutex mutex_;
  std::deque<Generator> records_;
  std::unordered_map<std::string, GeneratorId> by_name_;
  std::unordered_multimap<std::size_t, GeneratorId> moves_;
};

}  // namespace hdk
