#include "hdk/compose.hpp"

#include "hdk/error.hpp"

namespace hdk {
namespace {

void require_positive(const Diagram& s, const Diagram& d) {
  if (s.dim() == 0 || d.dim() == 0)
    throw Error(ErrorCode::DimensionMismatch, "compose needs operands of dimension at least 1");
}

std::vector<Entry> shifted(std::span<const Entry> entries, std::size_t level, std::size_t by) {
  std::vector<Entry> out;
  out.reserve(entries.size());
  for (const Entry& e : entries) {
    std::vector<std::size_t> h(e.embedding.heights().begin(), e.embedding.heights().end());
    h.at(level) += by;
    out.push_back(Entry{e.generator, Embedding(std::move(h))});
  }
  return out;
}

}  // namespace

Diagram boundary_iter(const Diagram& d, Side side, std::size_t k, const Signature& sig) {
  if (k > d.dim())
    throw Error(ErrorCode::DepthOutOfRange, "boundary of depth " + std::to_string(k) + " of a " +
                                                std::to_string(d.dim()) + "-diagram");
  Diagram out = d;
  for (std::size_t i = 0; i < k; ++i) out = boundary(out, side, sig);
  return out;
}

bool composable(const Diagram& s, const Diagram& d, const Signature& sig) {
  if (s.dim() == 0 || d.dim() == 0) return false;
  const std::size_t m = s.dim();
  const std::size_t n = d.dim();
  if (m == n) return equivalent(target(s, sig), d.source());
  if (m < n) return equivalent(target(s, sig), boundary_iter(d, Side::source, n - m + 1, sig));
  return equivalent(boundary_iter(s, Side::target, m - n + 1, sig), d.source());
}

Diagram compose(const Diagram& s, const Diagram& d, const Signature& sig) {
  require_positive(s, d);
  if (!composable(s, d, sig))
    throw Error(ErrorCode::BoundaryMismatch, "boundaries of " + to_string(s, sig) + " and " +
                                                 to_string(d, sig) + " do not meet");
  const std::size_t m = s.dim();
  const std::size_t n = d.dim();
  if (m == n) {
    std::vector<Entry> entries(s.entries().begin(), s.entries().end());
    entries.insert(entries.end(), d.entries().begin(), d.entries().end());
    return Diagram(s.source(), std::move(entries));
  }
  if (m < n) {
    // D's entries embed into S-whiskered slices: shift at the level where S sits.
    return Diagram(compose(s, d.source(), sig), shifted(d.entries(), n - 1 - m, s.size()));
  }
  return Diagram(compose(s.source(), d, sig), std::vector<Entry>(s.entries().begin(), s.entries().end()));
}

Embedding inclusion(const Diagram& s, const Diagram& d, const Signature& sig) {
  require_positive(s, d);
  if (s.dim() > d.dim())
    throw Error(ErrorCode::DimensionMismatch, "inclusion needs dim S <= dim D");
  if (!composable(s, d, sig)) throw Error(ErrorCode::BoundaryMismatch, "composite does not exist");
  std::vector<std::size_t> h(d.dim(), 0);
  h[d.dim() - s.dim()] = s.size();
  return Embedding(std::move(h));
}

Embedding inclusion_rev(const Diagram& s, const Diagram& d, const Signature& sig) {
  require_positive(s, d);
  if (s.dim() <= d.dim())
    throw Error(ErrorCode::DimensionMismatch, "reverse inclusion needs dim S > dim D");
  if (!composable(s, d, sig)) throw Error(ErrorCode::BoundaryMismatch, "composite does not exist");
  return Embedding::zero(s.dim());
}

Diagram identity_diagram(const Diagram& d) { return Diagram(d, {}); }

}  // namespace hdk
