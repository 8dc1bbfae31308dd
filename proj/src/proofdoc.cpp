#include "hdk/proofdoc.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hdk/error.hpp"

namespace hdk {
namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

// ---- JSON access with readable errors ----

[[noreturn]] void syntax(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) syntax(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) syntax(where, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t natural(const json& v, const std::string& where) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    syntax(where, "expected a natural number");
  return v.get<std::size_t>();
}

std::string text(const json& v, const std::string& where) {
  if (!v.is_string()) syntax(where, "expected a string");
  return v.get<std::string>();
}

bool boolean(const json& v, const std::string& where) {
  if (!v.is_boolean()) syntax(where, "expected true or false");
  return v.get<bool>();
}

std::vector<std::size_t> naturals(const json& v, const std::string& where) {
  if (!v.is_array()) syntax(where, "expected an array of natural numbers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(natural(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

template <class T, class Parse>
T enum_field(const json& v, const std::string& where, Parse parse) {
  auto parsed = parse(text(v, where));
  if (!parsed) syntax(where, "unknown value \"" + v.get<std::string>() + "\"");
  return *parsed;
}

json parse_json(const std::string& input) {
  try {
    return json::parse(input);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < input.size(); ++i) {
      if (input[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + e.what());
  }
}

// ---- canonical text ----

bool flat(const ojson& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const ojson& x) { return x.is_primitive(); });
}

void emit(const ojson& v, std::string& out, int indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (v.is_object()) {
    if (v.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + ojson(it.key()).dump() + ": ";
      emit(it.value(), out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (v.is_array()) {
    if (flat(v)) {
      out += "[";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += inner;
      emit(v[i], out, indent + 2);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += v.dump();
  }
}

std::string canonical(const ojson& v) {
  std::string out;
  emit(v, out, 0);
  out += "\n";
  return out;
}

// ---- generators and diagrams ----

GeneratorId resolve(Signature& sig, const std::string& name) {
  if (auto id = sig.find(name)) return *id;
  auto derived = [&](std::string_view suffix) -> std::optional<std::string> {
    if (name.size() > suffix.size() && name.ends_with(suffix))
      return name.substr(0, name.size() - suffix.size());
    return std::nullopt;
  };
  try {
    if (auto base = derived("^-1")) return sig.inverse(resolve(sig, *base));
    if (auto base = derived("''")) return sig.counit_witness(resolve(sig, *base));
    if (auto base = derived("'")) return sig.unit_witness(resolve(sig, *base));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownReference) throw;
    throw Error(ErrorCode::UnknownReference, "generator " + name + " (" + e.what() + ")");
  }
  throw Error(ErrorCode::UnknownReference, "generator " + name);
}

Diagram read_diagram(const json& v, Signature& sig, const std::string& where);

Entry read_entry(const json& v, Signature& sig, const Diagram& source,
                 const std::vector<Entry>& below, const std::string& where) {
  if (!v.is_object()) syntax(where, "expected an entry object");
  auto move_entry = [&](auto&& make) -> Entry {
    try {
      Diagram partial(source, below);
      return make(slice(partial, below.size(), sig));
    } catch (const Error& e) {
      throw Error(ErrorCode::IllDefinedDiagram, where + ": " + e.what());
    }
  };
  if (v.contains("interchange")) {
    auto dir = enum_field<Interchange>(v["interchange"], where + ".interchange", parse_interchange);
    std::size_t at = natural(field(v, "at", where), where + ".at");
    return move_entry([&](const Diagram& y) { return apply_interchange(sig, y, at, dir).move.entry(); });
  }
  if (v.contains("pullthrough")) {
    auto variant = enum_field<PullVariant>(v["pullthrough"], where + ".pullthrough", parse_variant);
    auto dir = v.contains("direction")
                   ? enum_field<Direction>(v["direction"], where + ".direction", parse_direction)
                   : Direction::forward;
    std::size_t at = natural(field(v, "at", where), where + ".at");
    return move_entry(
        [&](const Diagram& y) { return apply_pullthrough(sig, y, at, variant, dir).move.entry(); });
  }
  GeneratorId g = resolve(sig, text(field(v, "g", where), where + ".g"));
  return Entry{g, Embedding(naturals(field(v, "e", where), where + ".e"))};
}

Diagram read_diagram(const json& v, Signature& sig, const std::string& where) {
  if (!v.is_object()) syntax(where, "expected a diagram expression");
  if (v.contains("g") && !v.contains("source")) {
    GeneratorId g = resolve(sig, text(v["g"], where + ".g"));
    if (sig.dim(g) != 0) throw Error(ErrorCode::IllDefinedDiagram, where + ": " + sig.name(g) + " is not a 0-cell");
    return Diagram::point(g);
  }
  Diagram source = read_diagram(field(v, "source", where), sig, where + ".source");
  const json& entries = field(v, "entries", where);
  if (!entries.is_array()) syntax(where + ".entries", "expected an array");
  std::vector<Entry> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string at = where + ".entries[" + std::to_string(i) + "]";
    Entry e = read_entry(entries[i], sig, source, out, at);
    if (e.embedding.dim() != source.dim())
      throw Error(ErrorCode::IllDefinedDiagram, at + ": embedding has " + std::to_string(e.embedding.dim()) +
                                                    " heights, expected " + std::to_string(source.dim()));
    out.push_back(std::move(e));
  }
  return Diagram(std::move(source), std::move(out));
}

Diagram checked_diagram(const json& v, Signature& sig, const std::string& where) {
  Diagram d = read_diagram(v, sig, where);
  WellDefinedness w;
  try {
    w = well_defined(d, sig);
  } catch (const Error& e) {
    throw Error(ErrorCode::IllDefinedDiagram, where + ": " + e.what());
  }
  if (!w.ok)
    throw Error(ErrorCode::IllDefinedDiagram,
                where + ": ill-defined at height " + std::to_string(w.failure->height) + " (" +
                    w.failure->reason + ")");
  return d;
}

ojson heights_json(const Embedding& e) {
  ojson arr = ojson::array();
  for (std::size_t h : e.heights()) arr.push_back(h);
  return arr;
}

ojson write_entry(const Diagram& slice_below, const Entry& e, const Signature& sig, Signature& msig) {
  const Generator& g = sig.at(e.generator);
  if (g.move && g.move->composite == Composite::atomic && g.move->family == MoveFamily::I) {
    ojson out;
    out["interchange"] = std::string(to_string(g.move->inverse ? Interchange::right_down : Interchange::left_down));
    out["at"] = e.embedding[0];
    return out;
  }
  if (g.move && g.move->composite == Composite::atomic && g.move->family == MoveFamily::II) {
    const Direction dir = g.move->inverse ? Direction::inverse : Direction::forward;
    for (auto v : {PullVariant::front, PullVariant::rear, PullVariant::primed_front, PullVariant::primed_rear}) {
      try {
        if (apply_pullthrough(msig, slice_below, e.embedding[0], v, dir).move.entry() == e) {
          ojson out;
          out["pullthrough"] = std::string(to_string(v));
          out["direction"] = std::string(to_string(dir));
          out["at"] = e.embedding[0];
          return out;
        }
      } catch (const Error&) {
      }
    }
  }
  if (g.move) throw Error(ErrorCode::Unsupported, "no expression for move cell " + g.name);
  ojson out;
  out["g"] = g.name;
  out["e"] = heights_json(e.embedding);
  return out;
}

ojson write_diagram(const Diagram& d, Signature& sig) {
  ojson out;
  if (d.dim() == 0) {
    out["g"] = sig.name(d.generator());
    return out;
  }
  out["source"] = write_diagram(d.source(), sig);
  ojson entries = ojson::array();
  const bool moves = std::any_of(d.entries().begin(), d.entries().end(),
                                 [&](const Entry& e) { return sig.at(e.generator).move.has_value(); });
  for (std::size_t i = 0; i < d.entries().size(); ++i) {
    Diagram below = moves ? slice(d, i, sig) : d.source();
    entries.push_back(write_entry(below, d[i], sig, sig));
  }
  out["entries"] = std::move(entries);
  return out;
}

// ---- steps ----

std::optional<StepKind> parse_step_kind(std::string_view s) {
  if (s == "attach") return StepKind::attach;
  if (s == "homotopy") return StepKind::homotopy;
  if (s == "invert_intro") return StepKind::invert_intro;
  return std::nullopt;
}

std::optional<Witness> parse_witness(std::string_view s) {
  if (s == "inverse") return Witness::inverse;
  if (s == "unit") return Witness::unit;
  if (s == "counit") return Witness::counit;
  return std::nullopt;
}

std::string_view to_string(Witness w) {
  switch (w) {
    case Witness::inverse: return "inverse";
    case Witness::unit: return "unit";
    case Witness::counit: return "counit";
  }
  return "?";
}

std::optional<Side> parse_side(std::string_view s) {
  if (s == "source") return Side::source;
  if (s == "target") return Side::target;
  return std::nullopt;
}

std::string_view to_string(Side s) { return s == Side::source ? "source" : "target"; }

Step read_step(const json& v, const std::string& where) {
  Step step;
  step.kind = enum_field<StepKind>(field(v, "move", where), where + ".move", parse_step_kind);
  if (v.contains("direction"))
    step.direction = enum_field<Direction>(v["direction"], where + ".direction", parse_direction);
  switch (step.kind) {
    case StepKind::attach:
    case StepKind::invert_intro:
      step.generator = text(field(v, "g", where), where + ".g");
      step.heights = naturals(field(v, "e", where), where + ".e");
      if (v.contains("side")) step.side = enum_field<Side>(v["side"], where + ".side", parse_side);
      if (step.kind == StepKind::invert_intro)
        step.witness = enum_field<Witness>(field(v, "witness", where), where + ".witness", parse_witness);
      break;
    case StepKind::homotopy: {
      step.move.family = enum_field<MoveFamily>(field(v, "family", where), where + ".family", parse_family);
      if (v.contains("primed")) step.move.primed = boolean(v["primed"], where + ".primed");
      if (v.contains("composite"))
        step.move.composite = enum_field<Composite>(v["composite"], where + ".composite", parse_composite);
      step.move.inverse = step.direction == Direction::inverse;
      if (!step.move.valid()) syntax(where, "invalid move kind " + step.move.to_string());
      const json& loc = field(v, "location", where);
      step.location.height = natural(field(loc, "height", where + ".location"), where + ".location.height");
      if (loc.contains("coords")) step.location.coords = naturals(loc["coords"], where + ".location.coords");
      if (v.contains("variant"))
        step.variant = enum_field<PullVariant>(v["variant"], where + ".variant", parse_variant);
      if (v.contains("params")) {
        const json& p = v["params"];
        const std::string pw = where + ".params";
        if (!p.is_object()) syntax(pw, "expected an object");
        auto opt_nat = [&](const char* key, std::optional<std::size_t>& out) {
          if (p.contains(key)) out = natural(p[key], pw + "." + key);
        };
        auto opt_text = [&](const char* key, std::optional<std::string>& out) {
          if (p.contains(key)) out = text(p[key], pw + "." + key);
        };
        opt_nat("lower", step.params.lower);
        opt_nat("upper", step.params.upper);
        opt_nat("length", step.params.length);
        opt_nat("cells", step.params.cells);
        opt_nat("groups", step.params.groups);
        opt_text("base", step.params.base);
        opt_nat("base_height", step.params.base_height);
        opt_text("cell", step.params.cell);
      }
      break;
    }
  }
  return step;
}

ojson write_step(const Step& step) {
  ojson out;
  switch (step.kind) {
    case StepKind::attach:
      out["move"] = "attach";
      out["g"] = step.generator;
      out["side"] = std::string(to_string(step.side));
      out["e"] = step.heights;
      break;
    case StepKind::invert_intro:
      out["move"] = "invert_intro";
      out["g"] = step.generator;
      out["witness"] = std::string(to_string(step.witness));
      out["side"] = std::string(to_string(step.side));
      out["e"] = step.heights;
      out["direction"] = std::string(to_string(step.direction));
      break;
    case StepKind::homotopy: {
      out["move"] = "homotopy";
      out["family"] = std::string(to_string(step.move.family));
      out["primed"] = step.move.primed;
      out["composite"] = std::string(to_string(step.move.composite));
      out["direction"] = std::string(to_string(step.direction));
      ojson loc;
      loc["height"] = step.location.height;
      loc["coords"] = step.location.coords;
      out["location"] = std::move(loc);
      if (step.variant) out["variant"] = std::string(to_string(*step.variant));
      ojson p = ojson::object();
      const StepParams& sp = step.params;
      if (sp.lower) p["lower"] = *sp.lower;
      if (sp.upper) p["upper"] = *sp.upper;
      if (sp.length) p["length"] = *sp.length;
      if (sp.cells) p["cells"] = *sp.cells;
      if (sp.groups) p["groups"] = *sp.groups;
      if (sp.base) p["base"] = *sp.base;
      if (sp.base_height) p["base_height"] = *sp.base_height;
      if (sp.cell) p["cell"] = *sp.cell;
      if (!p.empty()) out["params"] = std::move(p);
      break;
    }
  }
  return out;
}

std::string step_label(const Step& step) {
  switch (step.kind) {
    case StepKind::attach: return "attach " + step.generator + " at " + std::string(to_string(step.side));
    case StepKind::invert_intro:
      return "invert_intro " + step.generator + " " + std::string(to_string(step.witness));
    case StepKind::homotopy:
      return "homotopy " + step.move.to_string() + " at " + std::to_string(step.location.height);
  }
  return "?";
}

// ---- step application ----

[[noreturn]] void inapplicable(const std::string& what) { throw Error(ErrorCode::StepInapplicable, what); }

Diagram attach(const Diagram& state, GeneratorId g, Side side, const Embedding& e, const Signature& sig) {
  if (state.dim() == 0) inapplicable("cannot attach to a 0-diagram");
  if (sig.dim(g) != state.dim())
    inapplicable(sig.name(g) + " has dimension " + std::to_string(sig.dim(g)) + ", the state " +
                 std::to_string(state.dim()));
  if (e.dim() != state.dim() - 1) inapplicable("embedding has the wrong number of heights");
  std::vector<Entry> entries(state.entries().begin(), state.entries().end());
  Diagram out = state;
  if (side == Side::target) {
    if (!well_defined_embedding(e, sig.source(g), target(state, sig), sig))
      inapplicable(sig.name(g) + " does not fit the target at " + e.to_string());
    entries.push_back(Entry{g, e});
    out = Diagram(state.source(), std::move(entries));
  } else {
    if (!well_defined_embedding(e, sig.target(g), state.source(), sig))
      inapplicable(sig.name(g) + " does not fit the source at " + e.to_string());
    Diagram below = rewrite(state.source(), e, sig.target(g), sig.source(g));
    entries.insert(entries.begin(), Entry{g, e});
    out = Diagram(std::move(below), std::move(entries));
  }
  if (!well_defined(out, sig).ok) inapplicable("attaching " + sig.name(g) + " gives an ill-defined diagram");
  return out;
}

bool coords_match(const std::vector<std::size_t>& given, const MoveLocation& actual) {
  if (given.size() > actual.coords.size()) return false;
  return std::equal(given.begin(), given.end(), actual.coords.begin());
}

Diagram homotopy(const Diagram& state, const Step& step, ProofDocument& doc) {
  Signature& sig = *doc.signature;
  const MoveKind& k = step.move;
  const std::size_t h = step.location.height;
  const bool forward = step.direction == Direction::forward;
  auto variant = [&] {
    PullVariant v = step.variant.value_or(k.primed ? PullVariant::primed_front : PullVariant::front);
    const bool primed = v == PullVariant::primed_front || v == PullVariant::primed_rear;
    if (primed != k.primed) inapplicable("variant " + std::string(to_string(v)) + " does not match " + k.to_string());
    return v;
  };
  auto single = [&](const MoveResult& r) {
    if (!coords_match(step.location.coords, r.move.location))
      inapplicable("the redex at height " + std::to_string(h) + " is not at the given coordinates");
    return r.diagram;
  };
  auto composite = [&](const std::vector<MoveInstance>& moves) {
    if (!forward) inapplicable("composite moves apply forward; undo them with their atomic inverses");
    return replay(state, moves, sig);
  };

  switch (k.family) {
    case MoveFamily::I:
      if (k.composite == Composite::atomic)
        return single(apply_interchange(sig, state, h, forward ? Interchange::left_down : Interchange::right_down));
      if (k.composite == Composite::tilde)
        return composite(expand_interchange(sig, state, h, step.params.lower.value_or(1),
                                            step.params.upper.value_or(1)));
      return composite(rearrange_crossings(sig, state, h, step.params.length.value_or(0)));
    case MoveFamily::II:
      if (k.composite == Composite::atomic)
        return single(apply_pullthrough(sig, state, h, variant(), step.direction));
      return composite(expand_pullthrough(sig, state, h, step.params.cells.value_or(1),
                                          step.params.groups.value_or(1), variant()));
    default: {
      if (!step.params.base) inapplicable(k.to_string() + " needs a named redex diagram");
      HigherMoveParams params{doc.diagram(*step.params.base), step.params.base_height.value_or(0), variant(),
                              step.params.cells.value_or(1), step.params.groups.value_or(1), std::nullopt};
      if (step.params.cell) params.cell = resolve(sig, *step.params.cell);
      MoveLocation loc = step.location;
      if (state.dim() > 0 && loc.coords.size() + 1 < state.dim()) loc.coords.resize(state.dim() - 1, 0);
      MoveKind fwd = k;
      fwd.inverse = false;
      return apply_higher_move(sig, state, loc, fwd, params, step.direction).diagram;
    }
  }
}

Diagram run_step(const Diagram& state, const Step& step, ProofDocument& doc) {
  Signature& sig = *doc.signature;
  switch (step.kind) {
    case StepKind::attach:
      return attach(state, resolve(sig, step.generator), step.side, Embedding(step.heights), sig);
    case StepKind::invert_intro: {
      GeneratorId g = resolve(sig, step.generator);
      if (!sig.is_invertible(g)) inapplicable(step.generator + " is not marked invertible");
      if (step.witness == Witness::inverse)
        return attach(state, sig.inverse(g), step.side, Embedding(step.heights), sig);
      GeneratorId w = step.witness == Witness::unit ? sig.unit_witness(g) : sig.counit_witness(g);
      GeneratorId applied = step.direction == Direction::forward ? w : sig.inverse(w);
      return checked_rewrite(state, Embedding(step.heights), sig.source(applied), sig.target(applied), sig);
    }
    case StepKind::homotopy: {
      Diagram out = homotopy(state, step, doc);
      if (!(out.source() == state.source()) || !(target(out, sig) == target(state, sig)))
        inapplicable("move changed the boundary");
      return out;
    }
  }
  return state;
}

}  // namespace

const Diagram& ProofDocument::diagram(const std::string& name) const {
  auto it = diagrams.find(name);
  if (it == diagrams.end()) throw Error(ErrorCode::UnknownReference, "diagram " + name);
  return it->second;
}

ProofDocument parse_document(const std::string& input) {
  json root = parse_json(input);
  ProofDocument doc;
  if (!root.is_object()) syntax("document", "expected an object");
  doc.version = static_cast<int>(natural(field(root, "version", "document"), "version"));
  if (doc.version != 1) syntax("version", "unsupported version " + std::to_string(doc.version));

  const json& sj = field(root, "signature", "document");
  doc.signature = std::make_shared<Signature>(natural(field(sj, "top_dim", "signature"), "signature.top_dim"));
  Signature& sig = *doc.signature;
  const json& gens = field(sj, "generators", "signature");
  if (!gens.is_array()) syntax("signature.generators", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "signature.generators[" + std::to_string(i) + "]";
    const json& g = gens[i];
    std::string name = text(field(g, "name", where), where + ".name");
    std::size_t dim = natural(field(g, "dim", where), where + ".dim");
    std::optional<Diagram> source, target;
    if (g.contains("source")) source = checked_diagram(g["source"], sig, where + ".source");
    if (g.contains("target")) target = checked_diagram(g["target"], sig, where + ".target");
    try {
      GeneratorId id = sig.add_generator(name, dim, source, target);
      if (g.contains("invertible") && boolean(g["invertible"], where + ".invertible")) sig.mark_invertible(id);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SyntaxError) throw;
      const ErrorCode code = e.code() == ErrorCode::DuplicateName || e.code() == ErrorCode::DimensionMismatch
                                 ? ErrorCode::SyntaxError
                                 : ErrorCode::IllDefinedDiagram;
      throw Error(code, where + " (" + name + "): " + e.what());
    }
  }

  if (root.contains("diagrams")) {
    const json& ds = root["diagrams"];
    if (!ds.is_object()) syntax("diagrams", "expected an object");
    for (auto it = ds.begin(); it != ds.end(); ++it)
      doc.diagrams.emplace(it.key(), checked_diagram(it.value(), sig, "diagrams." + it.key()));
  }

  if (root.contains("proof") && !root["proof"].is_null()) {
    const json& pj = root["proof"];
    Proof proof;
    proof.start = text(field(pj, "start", "proof"), "proof.start");
    proof.goal = text(field(pj, "goal", "proof"), "proof.goal");
    for (const auto& name : {proof.start, proof.goal})
      if (!doc.diagrams.count(name)) throw Error(ErrorCode::UnknownReference, "diagram " + name);
    const json& steps = field(pj, "steps", "proof");
    if (!steps.is_array()) syntax("proof.steps", "expected an array");
    for (std::size_t i = 0; i < steps.size(); ++i)
      proof.steps.push_back(read_step(steps[i], "proof.steps[" + std::to_string(i) + "]"));
    doc.proof = std::move(proof);
  }
  return doc;
}

std::string serialize_document(const ProofDocument& doc) {
  Signature& sig = *doc.signature;
  ojson root;
  root["version"] = doc.version;
  ojson sj;
  sj["top_dim"] = sig.top_dim();
  std::vector<GeneratorId> user;
  for (GeneratorId id : sig.generators())
    if (!sig.at(id).synthesized) user.push_back(id);
  std::sort(user.begin(), user.end(), [&](GeneratorId a, GeneratorId b) {
    return std::pair(sig.dim(a), sig.name(a)) < std::pair(sig.dim(b), sig.name(b));
  });
  ojson gens = ojson::array();
  for (GeneratorId id : user) {
    const Generator& g = sig.at(id);
    ojson gj;
    gj["name"] = g.name;
    gj["dim"] = g.dim;
    if (g.source) gj["source"] = write_diagram(*g.source, sig);
    if (g.target) gj["target"] = write_diagram(*g.target, sig);
    gj["invertible"] = g.invertibility.has_value();
    gens.push_back(std::move(gj));
  }
  sj["generators"] = std::move(gens);
  root["signature"] = std::move(sj);
  ojson ds = ojson::object();
  for (const auto& [name, d] : doc.diagrams) ds[name] = write_diagram(d, sig);
  root["diagrams"] = std::move(ds);
  if (doc.proof) {
    ojson pj;
    pj["start"] = doc.proof->start;
    pj["goal"] = doc.proof->goal;
    ojson steps = ojson::array();
    for (const Step& s : doc.proof->steps) steps.push_back(write_step(s));
    pj["steps"] = std::move(steps);
    root["proof"] = std::move(pj);
  }
  return canonical(root);
}

std::string serialize_diagram(const Diagram& d, const Signature& sig) {
  // Expressions for pull-through entries are recovered by re-running the move,
  // which may intern cells; the signature is only logically const here.
  return canonical(write_diagram(d, const_cast<Signature&>(sig)));
}

Diagram parse_diagram(const std::string& input, Signature& sig) {
  return checked_diagram(parse_json(input), sig, "diagram");
}

Step parse_step(const std::string& input) { return read_step(parse_json(input), "step"); }

std::string serialize_step(const Step& step) { return canonical(write_step(step)); }

Diagram apply_step(const Diagram& state, const Step& step, ProofDocument& doc) {
  try {
    return run_step(state, step, doc);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::StepInapplicable || e.code() == ErrorCode::UnknownReference) throw;
    throw Error(ErrorCode::StepInapplicable, step_label(step) + ": " + e.what());
  }
}

Report check_document(ProofDocument& doc) {
  Report report;
  if (!doc.proof) {
    report.failure = StepFailure{0, ErrorCode::StepInapplicable, "document has no proof"};
    return report;
  }
  Diagram state = doc.diagram(doc.proof->start);
  const Diagram& goal = doc.diagram(doc.proof->goal);
  report.heights.push_back(state.size());
  for (std::size_t i = 0; i < doc.proof->steps.size(); ++i) {
    try {
      state = apply_step(state, doc.proof->steps[i], doc);
    } catch (const Error& e) {
      report.failure = StepFailure{i + 1, e.code(), e.what()};
      return report;
    }
    report.heights.push_back(state.size());
  }
  report.goal_reached = equivalent(state, goal);
  report.ok = report.goal_reached;
  return report;
}

std::string report_text(const Report& report) {
  std::ostringstream out;
  for (std::size_t i = 0; i < report.heights.size(); ++i)
    out << (i == 0 ? std::string("start") : "step " + std::to_string(i)) << ": height " << report.heights[i]
        << "\n";
  if (report.failure)
    out << "FAILED at step " << report.failure->step << ": " << report.failure->message << "\n";
  else if (!report.goal_reached)
    out << "FAILED: final state differs from the goal\n";
  else
    out << "OK: goal reached\n";
  return out.str();
}

std::string report_json(const Report& report) {
  ojson out;
  out["ok"] = report.ok;
  out["heights"] = report.heights;
  out["goal_reached"] = report.goal_reached;
  if (report.failure) {
    ojson f;
    f["step"] = report.failure->step;
    f["code"] = std::string(to_string(report.failure->code));
    f["message"] = report.failure->message;
    out["failure"] = std::move(f);
  }
  return canonical(out);
}

}  // namespace hdk
