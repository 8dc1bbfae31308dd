#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "hdk/proofdoc.hpp"

using namespace hdk;
using fixtures::code_of;
using fixtures::stack;
using fixtures::word;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const char* kSigma = R"({
  "version": 1,
  "signature": {"top_dim": 3, "generators": [
    {"name": "*", "dim": 0},
    {"name": "f", "dim": 1, "source": {"g": "*"}, "target": {"g": "*"}},
    {"name": "m", "dim": 2,
     "source": {"source": {"g": "*"}, "entries": [{"g": "f", "e": []}, {"g": "f", "e": []}]},
     "target": {"source": {"g": "*"}, "entries": [{"g": "f", "e": []}]}},
    {"name": "s", "dim": 2,
     "source": {"source": {"g": "*"}, "entries": [{"g": "f", "e": []}]},
     "target": {"source": {"g": "*"}, "entries": [{"g": "f", "e": []}]}}
  ]},
  "diagrams": {
    "two": {"source": {"source": {"g": "*"}, "entries": [{"g": "f", "e": []}, {"g": "f", "e": []}]},
            "entries": [{"g": "s", "e": [0]}, {"g": "s", "e": [1]}]},
    "one": {"source": {"source": {"g": "*"}, "entries": [{"g": "f", "e": []}, {"g": "f", "e": []}]},
            "entries": [{"g": "s", "e": [1]}]}
  }
})";

}  // namespace

TEST_CASE("parsing documents") {
  SUBCASE("minimal") {
    ProofDocument doc = parse_document(R"({"version": 1, "signature": {"top_dim": 0, "generators": [{"name": "x", "dim": 0}]}})");
    CHECK(doc.signature->size() == 1);
    CHECK_FALSE(doc.proof.has_value());
    CHECK(serialize_document(doc).find("\"diagrams\": {}") != std::string::npos);
  }
  SUBCASE("embedding lists") {
    ProofDocument doc = parse_document(kSigma);
    const Diagram& one = doc.diagram("one");
    CHECK(one[0].embedding == Embedding{1});
  }
  SUBCASE("generators must be declared before use") {
    CHECK(code_of([&] {
            parse_document(R"({"version": 1, "signature": {"top_dim": 1, "generators": [
              {"name": "f", "dim": 1, "source": {"g": "*"}, "target": {"g": "*"}}, {"name": "*", "dim": 0}]}})");
          }) == ErrorCode::UnknownReference);
  }
}

TEST_CASE("serialization is canonical") {
  ProofDocument doc = parse_document(kSigma);
  std::string once = serialize_document(doc);
  ProofDocument again = parse_document(once);
  CHECK(serialize_document(again) == once);
  CHECK(again.diagram("two") == doc.diagram("two"));
  CHECK(once.find("\"e\": [1]") != std::string::npos);
  // dimension, then name
  const auto star = once.find("\"name\": \"*\"");
  const auto f = once.find("\"name\": \"f\"");
  const auto m = once.find("\"name\": \"m\"");
  const auto s = once.find("\"name\": \"s\"");
  CHECK(star < f);
  CHECK(f < m);
  CHECK(m < s);
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_document("{\n  \"version\": 1,\n  oops\n}"); }) == ErrorCode::SyntaxError);
  try {
    parse_document("{\n  \"version\": 1,\n  oops\n}");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_document(R"({"version": 1, "signature": {"top_dim": 1, "generators": [
      {"name": "*", "dim": 0}, {"name": "f", "dim": 1, "source": {"g": "*"}, "target": {"g": "nowhere"}}]}})");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownReference);
    CHECK(std::string(e.what()).find("nowhere") != std::string::npos);
  }
  CHECK(code_of([] {
          parse_document(R"({"version": 1, "signature": {"top_dim": 2, "generators": [
            {"name": "*", "dim": 0}, {"name": "f", "dim": 1, "source": {"g": "*"}, "target": {"g": "*"}}]},
            "diagrams": {"bad": {"source": {"source": {"g": "*"}, "entries": [{"g": "f", "e": []}]},
                                 "entries": [{"g": "f", "e": [0]}]}}})");
        }) == ErrorCode::IllDefinedDiagram);
  CHECK(code_of([] { parse_document(R"({"version": 1})"); }) == ErrorCode::SyntaxError);
}

TEST_CASE("applying steps") {
  auto sig = fixtures::sigma_star(3);
  ProofDocument doc;
  doc.signature = std::shared_ptr<Signature>(sig.release());
  Signature& s = *doc.signature;
  Diagram ff = word(s, "*", {"f", "f"});
  Diagram fff = word(s, "*", {"f", "f", "f"});

  Step attach;
  attach.kind = StepKind::attach;
  attach.generator = "m";
  attach.heights = {0};
  Diagram ms = stack(s, fff, {{"s", {1}}});
  Diagram grown = apply_step(ms, attach, doc);
  CHECK(grown.size() == ms.size() + 1);
  CHECK(grown[1] == Entry{s.require("m"), Embedding{0}});

  Step at_source = attach;
  at_source.side = Side::source;
  at_source.generator = "s";
  Diagram pre = apply_step(ms, at_source, doc);
  CHECK(pre.size() == 2);
  CHECK(pre.source() == fff);
  CHECK(target(pre, s) == target(ms, s));

  Step swap;
  swap.kind = StepKind::homotopy;
  swap.move = MoveKind{MoveFamily::I, false, true, Composite::atomic};
  swap.direction = Direction::inverse;
  Diagram two = stack(s, ff, {{"s", {0}}, {"s", {1}}});
  CHECK(apply_step(two, swap, doc) == stack(s, ff, {{"s", {1}}, {"s", {0}}}));
  Step forward = swap;
  forward.direction = Direction::forward;
  forward.move.inverse = false;
  CHECK(code_of([&] { apply_step(two, forward, doc); }) == ErrorCode::StepInapplicable);

  Step invert;
  invert.kind = StepKind::invert_intro;
  invert.generator = "m";
  invert.heights = {0};
  CHECK(code_of([&] { apply_step(grown, invert, doc); }) == ErrorCode::StepInapplicable);
}

TEST_CASE("checking proofs") {
  const std::string base = kSigma;
  auto with_proof = [&](const std::string& proof) {
    std::string text = base;
    text.insert(text.rfind('}'), ",\n  \"proof\": " + proof + "\n");
    return parse_document(text);
  };

  SUBCASE("zero steps") {
    ProofDocument doc = with_proof(R"({"start": "two", "goal": "two", "steps": []})");
    Report r = check_document(doc);
    CHECK(r.ok);
    CHECK(r.heights == std::vector<std::size_t>{2});
  }
  SUBCASE("interchange and back") {
    ProofDocument doc = with_proof(R"({"start": "two", "goal": "two", "steps": [
      {"move": "homotopy", "family": "I", "direction": "inverse", "location": {"height": 0}},
      {"move": "homotopy", "family": "I", "direction": "forward", "location": {"height": 0}}]})");
    Report r = check_document(doc);
    CHECK(r.ok);
    CHECK(r.heights == std::vector<std::size_t>{2, 2, 2});
    CHECK(report_text(check_document(doc)) == report_text(r));
  }
  SUBCASE("out of range at step 2") {
    ProofDocument doc = with_proof(R"({"start": "two", "goal": "two", "steps": [
      {"move": "homotopy", "family": "I", "direction": "inverse", "location": {"height": 0}},
      {"move": "homotopy", "family": "I", "direction": "forward", "location": {"height": 7}}]})");
    Report r = check_document(doc);
    CHECK_FALSE(r.ok);
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->step == 2);
    CHECK(r.heights.size() == 2);
  }
  SUBCASE("goal not reached") {
    ProofDocument doc = with_proof(R"({"start": "two", "goal": "one", "steps": []})");
    Report r = check_document(doc);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.failure.has_value());
    CHECK(report_text(r).find("FAILED") != std::string::npos);
  }
  SUBCASE("unknown start") {
    CHECK(code_of([&] { with_proof(R"({"start": "nope", "goal": "two", "steps": []})"); }) ==
          ErrorCode::UnknownReference);
  }
}

TEST_CASE("bundled documents") {
  for (const char* name : {"sigma_star_interchange", "pullthrough", "adjunction"}) {
    CAPTURE(name);
    const std::string dir = HDK_CORPUS_DIR;
    ProofDocument doc = parse_document(read_file(dir + "/" + name + ".hdprf"));
    Report r = check_document(doc);
    CHECK(r.ok);
    CHECK(report_text(r) == read_file(dir + "/" + name + ".golden"));
    std::string canon = serialize_document(doc);
    CHECK(serialize_document(parse_document(canon)) == canon);
  }
}
