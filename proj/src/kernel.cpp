#include "hdk/kernel.hpp"

#include <sstream>

#include "diagram_node.hpp"
#include "hdk/error.hpp"

namespace hdk {
namespace {

// Below this many starting heights the embedding search stays on one thread.
constexpr long kParallelSpans = 64;

Failure deeper(Failure f, std::size_t height) {
  f.height = height;
  f.level += 1;
  return f;
}

Failure fail_at(std::size_t height, std::string reason) { return Failure{height, 0, std::move(reason)}; }

std::shared_ptr<const SliceTable> build_table(const Diagram& d, const Signature& sig) {
  auto table = std::make_shared<SliceTable>();
  table->serial = sig.serial();
  table->slices.reserve(d.size() + 1);
  table->slices.push_back(d.source());
  for (std::size_t i = 0; i < d.entries().size(); ++i) {
    const Entry& entry = d[i];
    const Diagram& below = table->slices.back();
    const Generator* g = nullptr;
    try {
      g = &sig.at(entry.generator);
    } catch (const Error& err) {
      table->failure = fail_at(i, err.what());
      break;
    }
    if (g->dim != d.dim()) {
      table->failure = fail_at(i, "generator " + g->name + " has dimension " +
                                      std::to_string(g->dim) + ", expected " +
                                      std::to_string(d.dim()));
      break;
    }
    WellDefinedness w = check_embedding(entry.embedding, *g->source, below, sig);
    if (!w) {
      table->failure = *w.failure;
      table->failure->reason = "entry " + g->name + ": " + table->failure->reason;
      table->failure->height = i;
      break;
    }
    table->slices.push_back(rewrite(below, entry.embedding, *g->source, *g->target));
  }
  return table;
}

const SliceTable& table_for(const Diagram& d, const Signature& sig) {
  if (d.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "a 0-diagram has no slices");
  const Diagram::Node& node = node_of(d);
  {
    std::lock_guard lock(node.cache_mutex);
    for (const auto& t : node.tables)
      if (t->serial == sig.serial()) return *t;
  }
  // Built outside the lock: the recursion locks other nodes.
  auto fresh = build_table(d, sig);
  std::lock_guard lock(node.cache_mutex);
  for (const auto& t : node.tables)
    if (t->serial == sig.serial()) return *t;
  node.tables.push_back(fresh);
  return *fresh;
}

std::string describe(const Failure& f) {
  std::ostringstream out;
  out << "at height " << f.height << ", level " << f.level << ": " << f.reason;
  return out.str();
}

}  // namespace

Diagram atom_diagram(const Signature& sig, GeneratorId g) {
  const Generator& gen = sig.at(g);
  if (gen.dim == 0) return Diagram::point(g);
  return Diagram(*gen.source, {Entry{g, Embedding::zero(gen.dim - 1)}});
}

const std::vector<Diagram>& slices(const Diagram& d, const Signature& sig) {
  const SliceTable& t = table_for(d, sig);
  if (t.failure) throw Error(ErrorCode::IllDefined, describe(*t.failure));
  return t.slices;
}

Diagram slice(const Diagram& d, std::size_t i, const Signature& sig) {
  if (d.dim() == 0) throw Error(ErrorCode::DimensionMismatch, "a 0-diagram has no slices");
  if (i > d.size())
    throw Error(ErrorCode::HeightOutOfRange,
                "slice " + std::to_string(i) + " of a diagram of size " + std::to_string(d.size()));
  const SliceTable& t = table_for(d, sig);
  if (i < t.slices.size()) return t.slices[i];
  throw Error(ErrorCode::IllDefined, describe(*t.failure));
}

Diagram target(const Diagram& d, const Signature& sig) { return slice(d, d.size(), sig); }

Diagram boundary(const Diagram& d, Side side, const Signature& sig) {
  return side == Side::source ? d.source() : target(d, sig);
}

Diagram rewrite(const Diagram& d, const Embedding& e, const Diagram& s, const Diagram& t) {
  if (d.dim() != s.dim() || d.dim() != t.dim() || e.dim() != d.dim())
    throw Error(ErrorCode::DimensionMismatch, "rewrite with mismatched dimensions");
  if (d.dim() == 0) return t;
  const std::size_t h = e.height();
  const std::size_t ns = s.entries().size();
  if (h + ns > d.entries().size())
    throw Error(ErrorCode::EmbeddingIllDefined,
                "rewrite span [" + std::to_string(h) + ", " + std::to_string(h + ns) +
                    ") exceeds height " + std::to_string(d.size()));
  const Embedding offset = e.tail();
  std::vector<Entry> out;
  out.reserve(d.entries().size() - ns + t.entries().size());
  auto entries = d.entries();
  out.insert(out.end(), entries.begin(), entries.begin() + h);
  for (const Entry& te : t.entries()) out.push_back(Entry{te.generator, te.embedding + offset});
  out.insert(out.end(), entries.begin() + h + ns, entries.end());
  return Diagram(d.source(), std::move(out));
}

Diagram checked_rewrite(const Diagram& d, const Embedding& e, const Diagram& s, const Diagram& t,
                        const Signature& sig) {
  if (!globular(s, t, sig)) throw Error(ErrorCode::NotGlobular, "rewrite pair is not globular");
  WellDefinedness w = check_embedding(e, s, d, sig);
  if (!w) throw Error(ErrorCode::EmbeddingIllDefined, e.to_string() + " " + describe(*w.failure));
  return rewrite(d, e, s, t);
}

Embedding lift(const Embedding& e, const Diagram& s, const Diagram& t, const Signature& sig) {
  if (!globular(s, t, sig)) throw Error(ErrorCode::NotGlobular, "lift along a non-globular pair");
  return e;
}

Embedding compose_embeddings(const Embedding& f, const Embedding& e) { return f + e; }

Embedding identity_embedding(const Diagram& d) { return Embedding::zero(d.dim()); }

bool equivalent(const TypedEmbedding& a, const TypedEmbedding& b) {
  return a.heights == b.heights && equivalent(a.domain, b.domain) &&
         equivalent(a.codomain, b.codomain);
}

WellDefinedness well_defined(const Diagram& d, const Signature& sig) {
  if (d.dim() == 0) {
    try {
      const Generator& g = sig.at(d.generator());
      if (g.dim != 0) return {false, fail_at(0, "0-diagram on " + g.name + " of dimension " + std::to_string(g.dim))};
    } catch (const Error& err) {
      return {false, fail_at(0, err.what())};
    }
    return {};
  }
  WellDefinedness src = well_defined(d.source(), sig);
  if (!src) return {false, deeper(*src.failure, 0)};
  const SliceTable& t = table_for(d, sig);
  if (t.failure) return {false, t.failure};
  return {};
}

WellDefinedness check_embedding(const Embedding& e, const Diagram& s, const Diagram& d,
                                const Signature& sig) {
  if (s.dim() != d.dim() || e.dim() != d.dim())
    throw Error(ErrorCode::DimensionMismatch, "embedding " + e.to_string() + " of a " +
                                                  std::to_string(s.dim()) + "-diagram into a " +
                                                  std::to_string(d.dim()) + "-diagram");
  if (d.dim() == 0) {
    if (s.generator() == d.generator()) return {};
    return {false, fail_at(0, "0-cells differ")};
  }
  const std::size_t h = e.height();
  const std::size_t ns = s.entries().size();
  if (h + ns > d.entries().size())
    return {false, fail_at(h, "span [" + std::to_string(h) + ", " + std::to_string(h + ns) +
                                  ") exceeds height " + std::to_string(d.entries().size()))};
  const SliceTable& t = table_for(d, sig);
  if (h >= t.slices.size()) return {false, t.failure};
  const Embedding below = e.tail();
  WellDefinedness w = check_embedding(below, s.source(), t.slices[h], sig);
  if (!w) return {false, deeper(*w.failure, h)};
  for (std::size_t i = 0; i < ns; ++i) {
    const Entry& se = s[i];
    const Entry& de = d[h + i];
    if (se.generator != de.generator)
      return {false, fail_at(h + i, "generator differs at height " + std::to_string(h + i))};
    if (!(se.embedding + below == de.embedding))
      return {false, fail_at(h + i, "embedding " + (se.embedding + below).to_string() +
                                        " differs from " + de.embedding.to_string())};
  }
  return {};
}

bool well_defined_embedding(const Embedding& e, const Diagram& s, const Diagram& d,
                            const Signature& sig) {
  return check_embedding(e, s, d, sig).ok;
}

bool globular(const Diagram& s, const Diagram& t, const Signature& sig) {
  if (s.dim() != t.dim()) throw Error(ErrorCode::DimensionMismatch, "globular: dimensions differ");
  if (s.dim() == 0) return true;
  return equivalent(s.source(), t.source()) && equivalent(target(s, sig), target(t, sig));
}

std::vector<Embedding> find_embeddings(const Diagram& s, const Diagram& d, const Signature& sig) {
  std::vector<Embedding> out;
  if (s.dim() != d.dim()) return out;
  if (d.dim() == 0) {
    if (s.generator() == d.generator()) out.emplace_back();
    return out;
  }
  const std::size_t ns = s.entries().size();
  const std::size_t nd = d.entries().size();
  if (ns > nd) return out;
  const auto& sl = slices(d, sig);
  // Matches per starting height, gathered in order afterwards.
  std::vector<std::vector<Embedding>> at(nd - ns + 1);
  const long spans = static_cast<long>(at.size());
#pragma omp parallel for schedule(dynamic, 8) if (spans >= kParallelSpans)
  for (long h = 0; h < spans; ++h) {
    for (const Embedding& below : find_embeddings(s.source(), sl[h], sig)) {
      bool ok = true;
      for (std::size_t i = 0; i < ns && ok; ++i)
        ok = s[i].generator == d[h + i].generator && s[i].embedding + below == d[h + i].embedding;
      if (ok) at[h].push_back(Embedding::cons(static_cast<std::size_t>(h), below));
    }
  }
  for (auto& found : at) out.insert(out.end(), found.begin(), found.end());
  return out;
}

Diagram subdiagram(const Diagram& d, std::size_t begin, std::size_t end, const Signature& sig) {
  if (begin > end || end > d.entries().size())
    throw Error(ErrorCode::HeightOutOfRange, "subdiagram range out of bounds");
  auto entries = d.entries();
  return Diagram(slice(d, begin, sig),
                 std::vector<Entry>(entries.begin() + begin, entries.begin() + end));
}

std::string to_string(const Diagram& d, const Signature& sig) {
  if (d.dim() == 0) return sig.name(d.generator());
  std::ostringstream out;
  out << "<" << to_string(d.source(), sig) << "; [";
  for (std::size_t i = 0; i < d.entries().size(); ++i) {
    if (i) out << ", ";
    out << "(" << sig.name(d[i].generator) << ", " << d[i].embedding.to_string() << ")";
  }
  out << "]>";
  return out.str();
}

}  // namespace hdk
