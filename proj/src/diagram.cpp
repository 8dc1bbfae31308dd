#include "hdk/diagram.hpp"

#include "diagram_node.hpp"
#include "hdk/error.hpp"

namespace hdk {
namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

const Diagram::Node& node_of(const Diagram& d) noexcept { return *d.node_; }

Diagram Diagram::point(GeneratorId g) {
  auto node = std::make_shared<Node>();
  node->dim = 0;
  node->generator = g;
  node->hash = mix(0, g.index);
  return Diagram(std::shared_ptr<const Node>(std::move(node)));
}

Diagram::Diagram(Diagram source, std::vector<Entry> entries) {
  auto node = std::make_shared<Node>();
  node->dim = source.dim() + 1;
  std::size_t h = mix(node->dim, source.hash());
  for (const Entry& e : entries) {
    if (e.embedding.dim() != source.dim())
      throw Error(ErrorCode::DimensionMismatch,
                  "entry embedding " + e.embedding.to_string() + " in a " +
                      std::to_string(node->dim) + "-diagram");
    h = mix(h, e.generator.index);
    for (auto x : e.embedding.heights()) h = mix(h, x);
  }
  node->hash = mix(h, entries.size());
  node->source = std::move(source);
  node->entries = std::move(entries);
  node_ = std::move(node);
}

std::size_t Diagram::dim() const noexcept { return node_->dim; }

std::size_t Diagram::size() const noexcept {
  return node_->dim == 0 ? 1 : node_->entries.size();
}

GeneratorId Diagram::generator() const {
  if (node_->dim != 0) throw Error(ErrorCode::DimensionMismatch, "generator() of an n-diagram");
  return node_->generator;
}

const Diagram& Diagram::source() const {
  if (node_->dim == 0) throw Error(ErrorCode::DimensionMismatch, "source() of a 0-diagram");
  return *node_->source;
}

std::span<const Entry> Diagram::entries() const noexcept { return node_->entries; }

const Entry& Diagram::operator[](std::size_t i) const {
  if (i >= node_->entries.size())
    throw Error(ErrorCode::HeightOutOfRange,
                "height " + std::to_string(i) + " of a diagram of size " +
                    std::to_string(node_->entries.size()));
  return node_->entries[i];
}

std::size_t Diagram::hash() const noexcept { return node_->hash; }

bool equivalent(const Diagram& a, const Diagram& b) {
  if (a.shares_node_with(b)) return true;
  if (a.dim() != b.dim() || a.hash() != b.hash()) return false;
  if (a.dim() == 0) return a.generator() == b.generator();
  if (a.entries().size() != b.entries().size()) return false;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    if (!(a[i] == b[i])) return false;
  return equivalent(a.source(), b.source());
}

}  // namespace hdk
