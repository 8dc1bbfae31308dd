#include "hdk/reference.hpp"

#include "hdk/error.hpp"
#include "hdk/kernel.hpp"

namespace hdk::reference {

std::vector<Diagram> slices(const Diagram& d, const Signature& sig) {
  if (d.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "a 0-diagram has no slices");
  std::vector<Diagram> out{d.source()};
  for (const Entry& entry : d.entries()) {
    const Diagram& below = out.back();
    if (!reference::well_defined_embedding(entry.embedding, sig.source(entry.generator), below, sig))
      throw Error(ErrorCode::IllDefined, "slice " + std::to_string(out.size()));
    out.push_back(reference::rewrite(below, entry.embedding, sig.source(entry.generator),
                          sig.target(entry.generator), sig));
  }
  return out;
}

Diagram slice(const Diagram& d, std::size_t i, const Signature& sig) {
  auto all = reference::slices(d, sig);
  if (i >= all.size()) throw Error(ErrorCode::HeightOutOfRange, "slice " + std::to_string(i));
  return all[i];
}

Embedding compose_embeddings(const Embedding& f, const Embedding& e, const Diagram& s,
                             const Diagram& d, const Signature& sig) {
  if (f.dim() != e.dim() || e.dim() != s.dim() || s.dim() != d.dim())
    throw Error(ErrorCode::DimensionMismatch, "composite of embeddings of different dimensions");
  if (s.dim() == 0) return Embedding{};
  // Lift f.e from D.s up to D[e.h].d, one rewrite at a time.
  Embedding lifted = f.tail();
  for (std::size_t i = 0; i < e.height(); ++i)
    lifted = hdk::lift(lifted, sig.source(d[i].generator), sig.target(d[i].generator), sig);
  Embedding below =
      reference::compose_embeddings(lifted, e.tail(), s.source(), reference::slice(d, e.height(), sig), sig);
  return Embedding::cons(e.height() + f.height(), below);
}

Diagram rewrite(const Diagram& d, const Embedding& e, const Diagram& s, const Diagram& t,
                const Signature& sig) {
  if (d.dim() == 0) return t;
  const std::size_t h = e.height();
  if (h + s.entries().size() > d.entries().size())
    throw Error(ErrorCode::EmbeddingIllDefined, "rewrite span exceeds height");
  std::vector<Entry> out;
  for (std::size_t i = 0; i < h; ++i) out.push_back(d[i]);
  const auto t_slices = reference::slices(t, sig);
  for (std::size_t j = 0; j < t.entries().size(); ++j) {
    // lift(e.e, T[j].d) composed with T[j].e
    Embedding lifted = e.tail();
    Embedding placed = reference::compose_embeddings(lifted, t[j].embedding, sig.source(t[j].generator),
                                          t_slices[j], sig);
    out.push_back(Entry{t[j].generator, placed});
  }
  for (std::size_t i = h + s.entries().size(); i < d.entries().size(); ++i) out.push_back(d[i]);
  return Diagram(d.source(), std::move(out));
}

Diagram explicit_rewrite_slice(const Diagram& a, const Embedding& e, const Diagram& s,
                               const Diagram& t, std::size_t j, const Signature& sig) {
  const std::size_t h = e.height();
  const std::size_t ns = s.entries().size();
  const std::size_t nt = t.entries().size();
  if (j <= h) return reference::slice(a, j, sig);
  if (j <= h + nt)
    return reference::rewrite(reference::slice(a, h, sig), e.tail(), s.source(), reference::slice(t, j - h, sig), sig);
  return reference::slice(a, j + ns - nt, sig);
}

bool well_defined_embedding(const Embedding& e, const Diagram& s, const Diagram& d,
                            const Signature& sig) {
  if (s.dim() != d.dim() || e.dim() != d.dim())
    throw Error(ErrorCode::DimensionMismatch, "embedding between different dimensions");
  if (d.dim() == 0) return s.generator() == d.generator();
  const std::size_t h = e.height();
  if (h + s.entries().size() > d.entries().size()) return false;
  std::vector<Diagram> d_slices;
  std::vector<Diagram> s_slices;
  try {
    d_slices = reference::slices(d, sig);
    s_slices = reference::slices(s, sig);
  } catch (const Error&) {
    return false;
  }
  if (!reference::well_defined_embedding(e.tail(), s.source(), d_slices[h], sig)) return false;
  for (std::size_t i = 0; i < s.entries().size(); ++i) {
    if (s[i].generator != d[h + i].generator) return false;
    Embedding placed = reference::compose_embeddings(e.tail(), s[i].embedding, sig.source(s[i].generator),
                                          s_slices[i], sig);
    if (!(placed == d[h + i].embedding)) return false;
  }
  return true;
}

bool well_defined(const Diagram& d, const Signature& sig) {
  if (d.dim() == 0) {
    try {
      return sig.dim(d.generator()) == 0;
    } catch (const Error&) {
      return false;
    }
  }
  if (!reference::well_defined(d.source(), sig)) return false;
  Diagram current = d.source();
  for (const Entry& entry : d.entries()) {
    try {
      if (sig.dim(entry.generator) != d.dim()) return false;
    } catch (const Error&) {
      return false;
    }
    const Diagram& gs = sig.source(entry.generator);
    if (!reference::well_defined_embedding(entry.embedding, gs, current, sig)) return false;
    current = reference::rewrite(current, entry.embedding, gs, sig.target(entry.generator), sig);
  }
  return true;
}

std::vector<Embedding> find_embeddings(const Diagram& s, const Diagram& d, const Signature& sig) {
  std::vector<Embedding> out;
  if (s.dim() != d.dim()) return out;
  if (d.dim() == 0) {
    if (s.generator() == d.generator()) out.emplace_back();
    return out;
  }
  if (s.size() > d.size()) return out;
  for (std::size_t h = 0; h + s.size() <= d.size(); ++h)
    for (const Embedding& below : reference::find_embeddings(s.source(), reference::slice(d, h, sig), sig)) {
      Embedding e = Embedding::cons(h, below);
      if (reference::well_defined_embedding(e, s, d, sig)) out.push_back(std::move(e));
    }
  return out;
}

}  // namespace hdk::reference
