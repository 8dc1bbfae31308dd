#include <sstream>

#include "hdk/embedding.hpp"
#include "hdk/error.hpp"
#include "hdk/move_kind.hpp"

namespace hdk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::BoundaryIllTyped: return "BoundaryIllTyped";
    case ErrorCode::BoundaryIllDefined: return "BoundaryIllDefined";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::HeightOutOfRange: return "HeightOutOfRange";
    case ErrorCode::IllDefined: return "IllDefined";
    case ErrorCode::EmbeddingIllDefined: return "EmbeddingIllDefined";
    case ErrorCode::NotGlobular: return "NotGlobular";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::DepthOutOfRange: return "DepthOutOfRange";
    case ErrorCode::NotARedex: return "NotARedex";
    case ErrorCode::VariantMismatch: return "VariantMismatch";
    case ErrorCode::NotABlock: return "NotABlock";
    case ErrorCode::NotACrossingPattern: return "NotACrossingPattern";
    case ErrorCode::MalformedParams: return "MalformedParams";
    case ErrorCode::PathsNotGlobular: return "PathsNotGlobular";
    case ErrorCode::NoMatchAtLocation: return "NoMatchAtLocation";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownReference: return "UnknownReference";
    case ErrorCode::IllDefinedDiagram: return "IllDefinedDiagram";
    case ErrorCode::StepInapplicable: return "StepInapplicable";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

// ---- Embedding ----

std::size_t Embedding::height() const {
  if (heights_.empty()) throw Error(ErrorCode::DimensionMismatch, "0-embedding has no height");
  return heights_.front();
}

Embedding Embedding::tail() const {
  if (heights_.empty()) throw Error(ErrorCode::DimensionMismatch, "0-embedding has no tail");
  return Embedding(std::vector<std::size_t>(heights_.begin() + 1, heights_.end()));
}

Embedding Embedding::with_height(std::size_t h) const {
  Embedding out = *this;
  if (out.heights_.empty()) throw Error(ErrorCode::DimensionMismatch, "0-embedding has no height");
  out.heights_.front() = h;
  return out;
}

Embedding Embedding::cons(std::size_t h, const Embedding& tail) {
  std::vector<std::size_t> v;
  v.reserve(tail.dim() + 1);
  v.push_back(h);
  v.insert(v.end(), tail.heights_.begin(), tail.heights_.end());
  return Embedding(std::move(v));
}

std::optional<Embedding> Embedding::minus(const Embedding& other) const {
  if (other.dim() != dim()) return std::nullopt;
  std::vector<std::size_t> v(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (heights_[i] < other.heights_[i]) return std::nullopt;
    v[i] = heights_[i] - other.heights_[i];
  }
  return Embedding(std::move(v));
}

bool Embedding::is_zero() const noexcept {
  for (auto h : heights_)
    if (h != 0) return false;
  return true;
}

std::string Embedding::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < heights_.size(); ++i) out << (i ? "," : "") << heights_[i];
  out << ']';
  return out.str();
}

Embedding operator+(const Embedding& a, const Embedding& b) {
  if (a.dim() != b.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "cannot add embeddings " + a.to_string() + " and " + b.to_string());
  std::vector<std::size_t> v(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) v[i] = a[i] + b[i];
  return Embedding(std::move(v));
}

// ---- MoveKind ----

bool MoveKind::valid() const noexcept {
  if (composite == Composite::hat && family != MoveFamily::I) return false;
  if (composite == Composite::tilde && family != MoveFamily::I && family != MoveFamily::II)
    return false;
  if (primed && family == MoveFamily::I) return false;
  return true;
}

std::string MoveKind::to_string() const {
  std::string s(hdk::to_string(family));
  if (primed) s += '\'';
  if (composite == Composite::tilde) s += '~';
  if (composite == Composite::hat) s += '^';
  if (inverse) s += "^-1";
  return s;
}

std::string_view to_string(MoveFamily family) {
  switch (family) {
    case MoveFamily::I: return "I";
    case MoveFamily::II: return "II";
    case MoveFamily::III: return "III";
    case MoveFamily::IV: return "IV";
    case MoveFamily::V: return "V";
    case MoveFamily::VI: return "VI";
  }
  return "?";
}

std::optional<MoveFamily> parse_family(std::string_view text) {
  for (auto f : {MoveFamily::I, MoveFamily::II, MoveFamily::III, MoveFamily::IV, MoveFamily::V,
                 MoveFamily::VI})
    if (to_string(f) == text) return f;
  return std::nullopt;
}

std::string_view to_string(Composite composite) {
  switch (composite) {
    case Composite::atomic: return "atomic";
    case Composite::tilde: return "tilde";
    case Composite::hat: return "hat";
  }
  return "?";
}

std::optional<Composite> parse_composite(std::string_view text) {
  for (auto c : {Composite::atomic, Composite::tilde, Composite::hat})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

}  // namespace hdk
