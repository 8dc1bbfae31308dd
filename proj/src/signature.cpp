#include "hdk/signature.hpp"

#include <atomic>
#include <mutex>

#include "hdk/error.hpp"
#include "hdk/kernel.hpp"

namespace hdk {
namespace {

std::atomic<std::uint64_t> next_serial{1};

void check_boundary(const Signature& sig, const Diagram& b, std::size_t dim, const char* which) {
  if (b.dim() + 1 != dim)
    throw Error(ErrorCode::BoundaryIllDefined, std::string(which) + " has dimension " +
                                                   std::to_string(b.dim()) + ", expected " +
                                                   std::to_string(dim - 1));
  WellDefinedness w = well_defined(b, sig);
  if (!w)
    throw Error(ErrorCode::BoundaryIllDefined,
                std::string(which) + " ill-defined at height " + std::to_string(w.failure->height) +
                    ": " + w.failure->reason);
}

}  // namespace

Signature::Signature(std::size_t top_dim) : top_dim_(top_dim), serial_(next_serial++) {}

std::size_t Signature::size() const {
  std::shared_lock lock(mutex_);
  return records_.size();
}

GeneratorId Signature::add_generator(std::string name, std::size_t dim,
                                     std::optional<Diagram> source,
                                     std::optional<Diagram> target) {
  if (dim > top_dim_)
    throw Error(ErrorCode::BoundaryIllTyped,
                name + " has dimension " + std::to_string(dim) + " above the signature's " +
                    std::to_string(top_dim_));
  if ((dim > 0) != source.has_value() || (dim > 0) != target.has_value())
    throw Error(ErrorCode::BoundaryIllDefined,
                name + ": boundaries must be present exactly when dimension > 0");
  if (dim > 0) {
    check_boundary(*this, *source, dim, "source");
    check_boundary(*this, *target, dim, "target");
    if (!globular(*source, *target, *this))
      throw Error(ErrorCode::BoundaryIllTyped, name + ": source and target are not globular");
  }
  Generator record;
  record.name = std::move(name);
  record.dim = dim;
  record.source = std::move(source);
  record.target = std::move(target);
  std::unique_lock lock(mutex_);
  if (by_name_.count(record.name)) throw Error(ErrorCode::DuplicateName, record.name);
  return insert_locked(std::move(record));
}

GeneratorId Signature::add_synthesized(std::string_view base_name, std::size_t dim, Diagram source,
                                       Diagram target, std::optional<MoveKind> move) {
  Generator record;
  record.dim = dim;
  record.source = std::move(source);
  record.target = std::move(target);
  record.move = move;
  record.synthesized = true;
  std::unique_lock lock(mutex_);
  record.name = fresh_name_locked(base_name);
  return insert_locked(std::move(record));
}

GeneratorId Signature::insert_locked(Generator record) {
  GeneratorId id{static_cast<std::uint32_t>(records_.size())};
  record.id = id;
  by_name_.emplace(record.name, id);
  records_.push_back(std::move(record));
  return id;
}

std::string Signature::fresh_name_locked(std::string_view base) const {
  std::string name(base);
  for (std::size_t k = 2; by_name_.count(name); ++k) name = std::string(base) + "#" + std::to_string(k);
  return name;
}

const Generator& Signature::at(GeneratorId id) const {
  std::shared_lock lock(mutex_);
  if (id.index >= records_.size())
    throw Error(ErrorCode::UnknownGenerator, "generator #" + std::to_string(id.index));
  return records_[id.index];
}

std::optional<GeneratorId> Signature::find(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

GeneratorId Signature::require(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error(ErrorCode::UnknownGenerator, std::string(name));
}

const Diagram& Signature::source(GeneratorId id) const {
  const Generator& g = at(id);
  if (!g.source) throw Error(ErrorCode::DimensionMismatch, g.name + " is a 0-cell");
  return *g.source;
}

const Diagram& Signature::target(GeneratorId id) const {
  const Generator& g = at(id);
  if (!g.target) throw Error(ErrorCode::DimensionMismatch, g.name + " is a 0-cell");
  return *g.target;
}

std::vector<GeneratorId> Signature::generators() const {
  std::shared_lock lock(mutex_);
  std::vector<GeneratorId> out;
  for (const auto& r : records_) out.push_back(r.id);
  return out;
}

std::vector<GeneratorId> Signature::generators_of_dim(std::size_t dim) const {
  std::shared_lock lock(mutex_);
  std::vector<GeneratorId> out;
  for (const auto& r : records_)
    if (r.dim == dim) out.push_back(r.id);
  return out;
}

void Signature::set_invertibility(GeneratorId id, const InvertibilityData& data) {
  std::unique_lock lock(mutex_);
  records_[id.index].invertibility = data;
}

InvertibilityData Signature::mark_invertible(GeneratorId id) {
  const Generator& g = at(id);
  if (g.invertibility) return *g.invertibility;
  if (g.dim == 0) throw Error(ErrorCode::DimensionMismatch, g.name + " is a 0-cell");
  GeneratorId inv;
  {
    Generator record;
    record.dim = g.dim;
    record.source = g.target;
    record.target = g.source;
    record.move = g.move;
    if (record.move) record.move->inverse = !record.move->inverse;
    record.synthesized = true;
    std::unique_lock lock(mutex_);
    record.name = fresh_name_locked(g.name + "^-1");
    inv = insert_locked(std::move(record));
  }
  set_invertibility(id, InvertibilityData{inv, std::nullopt, std::nullopt});
  set_invertibility(inv, InvertibilityData{id, std::nullopt, std::nullopt});
  return *at(id).invertibility;
}

bool Signature::is_invertible(GeneratorId id) const { return at(id).invertibility.has_value(); }

GeneratorId Signature::inverse(GeneratorId id) const {
  const Generator& g = at(id);
  if (!g.invertibility) throw Error(ErrorCode::StepInapplicable, g.name + " is not invertible");
  return g.invertibility->inverse;
}

GeneratorId Signature::unit_witness(GeneratorId id) {
  const Generator& g = at(id);
  if (!g.invertibility) throw Error(ErrorCode::StepInapplicable, g.name + " is not invertible");
  if (g.invertibility->unit_witness) return *g.invertibility->unit_witness;
  if (g.dim >= top_dim_)
    throw Error(ErrorCode::Unsupported, g.name + " is top-dimensional and has no witnesses");
  GeneratorId inv = g.invertibility->inverse;
  const Diagram& s = *g.source;
  Diagram src(s, {Entry{id, Embedding::zero(g.dim - 1)}, Entry{inv, Embedding::zero(g.dim - 1)}});
  Diagram tgt(s, {});
  GeneratorId w = add_synthesized(g.name + "'", g.dim + 1, src, tgt);
  InvertibilityData data = *at(id).invertibility;
  data.unit_witness = w;
  set_invertibility(id, data);
  mark_invertible(w);
  return w;
}

GeneratorId Signature::counit_witness(GeneratorId id) {
  const Generator& g = at(id);
  if (!g.invertibility) throw Error(ErrorCode::StepInapplicable, g.name + " is not invertible");
  if (g.invertibility->counit_witness) return *g.invertibility->counit_witness;
  if (g.dim >= top_dim_)
    throw Error(ErrorCode::Unsupported, g.name + " is top-dimensional and has no witnesses");
  GeneratorId inv = g.invertibility->inverse;
  const Diagram& t = *g.target;
  Diagram src(t, {});
  Diagram tgt(t, {Entry{inv, Embedding::zero(g.dim - 1)}, Entry{id, Embedding::zero(g.dim - 1)}});
  GeneratorId w = add_synthesized(g.name + "''", g.dim + 1, src, tgt);
  InvertibilityData data = *at(id).invertibility;
  data.counit_witness = w;
  set_invertibility(id, data);
  mark_invertible(w);
  return w;
}

GeneratorId Signature::intern_move(const MoveKind& kind, const Diagram& source,
                                   const Diagram& target) {
  {
    std::shared_lock lock(mutex_);
    auto [lo, hi] = moves_.equal_range(source.hash());
    for (auto it = lo; it != hi; ++it) {
      const Generator& g = records_[it->second.index];
      if (g.move == kind && equivalent(*g.source, source)) return g.id;
    }
  }
  if (!globular(source, target, *this))
    throw Error(ErrorCode::PathsNotGlobular, kind.to_string() + " cell boundaries are not globular");
  GeneratorId id = add_synthesized(kind.to_string(), source.dim() + 1, source, target, kind);
  {
    std::unique_lock lock(mutex_);
    moves_.emplace(source.hash(), id);
  }
  mark_invertible(id);
  return id;
}

}  // namespace hdk
