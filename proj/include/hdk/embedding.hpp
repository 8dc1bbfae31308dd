#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hdk {

/// Opaque handle to a generator record inside one `Signature`.
struct GeneratorId {
  std::uint32_t index = 0;
  friend auto operator<=>(GeneratorId, GeneratorId) = default;
};

/// Height data of an embedding between two k-diagrams, stored flat.
///
/// `heights()[0]` is the top-level height `e.h`; the remaining entries are the
/// source embedding `e.e`, recursively. An embedding between 0-diagrams
/// carries no data.
class Embedding {
 public:
  Embedding() = default;
  explicit Embedding(std::vector<std::size_t> heights) : heights_(std::move(heights)) {}
  Embedding(std::initializer_list<std::size_t> heights) : heights_(heights) {}

  static Embedding zero(std::size_t dim) { return Embedding(std::vector<std::size_t>(dim, 0)); }

  std::size_t dim() const noexcept { return heights_.size(); }
  std::span<const std::size_t> heights() const noexcept { return heights_; }
  std::size_t operator[](std::size_t level) const { return heights_.at(level); }

  /// Top-level height. Requires dim() > 0.
  std::size_t height() const;
  /// The source embedding one dimension down.
  Embedding tail() const;
  /// Same tail with a different top height.
  Embedding with_height(std::size_t h) const;
  /// Prepends a new top height above `tail`.
  static Embedding cons(std::size_t h, const Embedding& tail);

  /// Elementwise difference, or nullopt when any component would go negative.
  std::optional<Embedding> minus(const Embedding& other) const;

  bool is_zero() const noexcept;
  std::string to_string() const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  std::vector<std::size_t> heights_;
};

/// Elementwise sum; throws DimensionMismatch on differing dimensions.
Embedding operator+(const Embedding& a, const Embedding& b);

}  // namespace hdk
