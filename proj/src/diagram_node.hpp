#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hdk/diagram.hpp"
#include "hdk/kernel.hpp"

namespace hdk {

/// Slices computed against one signature. Computation stops at the first
/// entry whose embedding is ill-defined; `slices` then holds the prefix.
struct SliceTable {
  std::uint64_t serial = 0;
  std::vector<Diagram> slices;
  std::optional<Failure> failure;
};

struct Diagram::Node {
  std::size_t dim = 0;
  GeneratorId generator;
  std::optional<Diagram> source;
  std::vector<Entry> entries;
  std::size_t hash = 0;

  mutable std::mutex cache_mutex;
  // Tables are never removed, so references handed out stay valid.
  mutable std::vector<std::shared_ptr<const SliceTable>> tables;
};

const Diagram::Node& node_of(const Diagram& d) noexcept;

}  // namespace hdk
