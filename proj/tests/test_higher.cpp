#include "doctest.h"
#include "fixtures.hpp"
#include "hdk/homotopy.hpp"

using namespace hdk;
using fixtures::code_of;
using fixtures::stack;
using fixtures::word;

namespace {

std::unique_ptr<Signature> sigma_high() {
  auto sig = fixtures::sigma_star(6);
  Diagram f1 = word(*sig, "*", {"f"});
  Diagram one_s = stack(*sig, f1, {{"s", {0}}});
  Diagram two_s = stack(*sig, f1, {{"s", {0}}, {"s", {0}}});
  sig->add_generator("a", 3, one_s, one_s);
  sig->add_generator("j", 3, two_s, one_s);
  Diagram one_a = stack(*sig, one_s, {{"a", {0, 0}}});
  sig->add_generator("mu", 4, one_a, stack(*sig, one_s, {{"a", {0, 0}}, {"a", {0, 0}}}));
  return sig;
}

void check_boundary(const Boundary& b, const Signature& sig) {
  CHECK(b.source.source() == b.target.source());
  CHECK(target(b.source, sig) == target(b.target, sig));
  CHECK(well_defined(b.source, sig).ok);
  CHECK(well_defined(b.target, sig).ok);
}

/// Three s-strands crossing in the braid pattern, one interchange per step.
Diagram braid(Signature& sig, bool inverse) {
  Diagram fff = word(sig, "*", {"f", "f", "f"});
  Diagram y = inverse ? stack(sig, fff, {{"s", {0}}, {"s", {1}}, {"s", {2}}})
                      : stack(sig, fff, {{"s", {2}}, {"s", {1}}, {"s", {0}}});
  const Interchange dir = inverse ? Interchange::right_down : Interchange::left_down;
  std::vector<MoveInstance> moves;
  Diagram state = y;
  for (std::size_t at : {1, 0, 1}) {
    auto r = apply_interchange(sig, state, at, dir);
    state = r.diagram;
    moves.push_back(r.move);
  }
  return path(y, moves);
}

}  // namespace

TEST_CASE("type III") {
  auto sig = sigma_high();
  Diagram ff = word(*sig, "*", {"f", "f"});
  Diagram y = stack(*sig, ff, {{"s", {1}}, {"s", {0}}});
  auto cross = apply_interchange(*sig, y, 0, Interchange::left_down);
  Diagram base(y, {cross.move.entry(), Entry{sig->require("a"), Embedding{0, 0}}});
  HigherMoveParams params{base, 0, PullVariant::front, 1, 1, sig->require("mu")};
  MoveKind iii{MoveFamily::III, false, false, Composite::atomic};
  Boundary b = higher_move_boundary(*sig, iii, params);
  check_boundary(b, *sig);
  // A one-cell stack pulls through with a single atomic II on each side.
  CHECK(b.source.size() == 2);
  CHECK(b.target.size() == 3);
  CHECK(sig->at(b.source[0].generator).move->family == MoveFamily::II);

  MoveKind wrong = iii;
  wrong.primed = true;
  CHECK(code_of([&] { higher_move_boundary(*sig, wrong, params); }) == ErrorCode::MalformedParams);
  HigherMoveParams no_cell = params;
  no_cell.cell.reset();
  CHECK(code_of([&] { higher_move_boundary(*sig, iii, no_cell); }) == ErrorCode::MalformedParams);
}

TEST_CASE("type IV") {
  auto sig = sigma_high();
  for (bool primed : {false, true}) {
    Diagram base = braid(*sig, primed);
    REQUIRE(well_defined(base, *sig).ok);
    HigherMoveParams params{base, 0, primed ? PullVariant::primed_rear : PullVariant::rear};
    Boundary b = higher_move_boundary(*sig, MoveKind{MoveFamily::IV, primed, false, Composite::atomic},
                                      params);
    check_boundary(b, *sig);
    CHECK(b.source.size() == 1);
    CHECK(b.target.size() == 1);
    CHECK_FALSE(b.source == b.target);
  }
}

TEST_CASE("type V") {
  auto sig = sigma_high();
  Diagram ff = word(*sig, "*", {"f", "f"});
  GeneratorId a = sig->require("a");
  MoveKind v{MoveFamily::V, false, false, Composite::atomic};

  SUBCASE("single strands") {
    Diagram y = stack(*sig, ff, {{"s", {1}}, {"s", {0}}});
    auto cross = apply_interchange(*sig, y, 0, Interchange::left_down);
    Diagram base(y, {cross.move.entry(), Entry{a, Embedding{0, 0}}, Entry{a, Embedding{1, 1}}});
    REQUIRE(well_defined(base, *sig).ok);
    check_boundary(higher_move_boundary(*sig, v, HigherMoveParams{base, 0, PullVariant::front}), *sig);
  }
  SUBCASE("a merging cell on the block") {
    Diagram y = stack(*sig, ff, {{"s", {1}}, {"s", {0}}, {"s", {0}}});
    auto c = crossings(*sig, y, 0, 2, PullVariant::front);
    Diagram base(y, {c[0].entry(), c[1].entry(), Entry{sig->require("j"), Embedding{0, 0}},
                     Entry{a, Embedding{1, 1}}});
    REQUIRE(well_defined(base, *sig).ok);
    check_boundary(higher_move_boundary(*sig, v, HigherMoveParams{base, 0, PullVariant::front}), *sig);
  }
  SUBCASE("primed") {
    Diagram y = stack(*sig, ff, {{"s", {0}}, {"s", {1}}});
    auto cross = apply_interchange(*sig, y, 0, Interchange::right_down);
    Diagram base(y, {cross.move.entry(), Entry{a, Embedding{0, 1}}, Entry{a, Embedding{1, 0}}});
    REQUIRE(well_defined(base, *sig).ok);
    MoveKind vp = v;
    vp.primed = true;
    check_boundary(higher_move_boundary(*sig, vp, HigherMoveParams{base, 0, PullVariant::primed_front}),
                   *sig);
  }
}

TEST_CASE("type VI") {
  auto sig = sigma_high();
  Diagram ff = word(*sig, "*", {"f", "f"});
  Diagram y = stack(*sig, ff, {{"s", {1}}, {"s", {0}}});
  auto cross = apply_interchange(*sig, y, 0, Interchange::left_down);
  Diagram after = rewrite(cross.diagram, Embedding{0, 0}, sig->source(sig->require("a")),
                          sig->target(sig->require("a")));
  auto undo = crossings(*sig, after, 0, 1, PullVariant::primed_rear);
  Diagram base(y, {cross.move.entry(), Entry{sig->require("a"), Embedding{0, 0}}, undo[0].entry()});
  REQUIRE(well_defined(base, *sig).ok);
  CHECK(target(base, *sig) == y);
  Boundary b = higher_move_boundary(*sig, MoveKind{MoveFamily::VI, false, false, Composite::atomic},
                                    HigherMoveParams{base, 0, PullVariant::front});
  check_boundary(b, *sig);
  CHECK(b.source.size() == 2);
  CHECK(b.target.size() == 2);
}

TEST_CASE("applying a higher move") {
  auto sig = sigma_high();
  Diagram base = braid(*sig, false);
  HigherMoveParams params{base, 0, PullVariant::rear};
  MoveKind iv{MoveFamily::IV, false, false, Composite::atomic};
  Boundary b = higher_move_boundary(*sig, iv, params);

  // The path is the source boundary followed by nothing else.
  MoveLocation loc{0, {0, 0, 0}};
  MoveResult r = apply_higher_move(*sig, b.source, loc, iv, params, Direction::forward);
  CHECK(r.diagram == b.target);
  CHECK(r.diagram.size() == b.source.size() - b.source.size() + b.target.size());
  CHECK(sig->is_invertible(r.move.cell));
  MoveResult back = apply_higher_move(*sig, r.diagram, loc, iv, params, Direction::inverse);
  CHECK(back.diagram == b.source);
  CHECK(back.move.cell == r.move.cell);

  CHECK(code_of([&] {
          apply_higher_move(*sig, b.target, loc, iv, params, Direction::forward);
        }) == ErrorCode::NoMatchAtLocation);
  CHECK(code_of([&] {
          apply_higher_move(*sig, b.source, MoveLocation{1, {0, 0, 0}}, iv, params, Direction::forward);
        }) == ErrorCode::NoMatchAtLocation);
}
