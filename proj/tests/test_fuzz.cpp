#include "doctest.h"
#include "hdk/error.hpp"
#include "hdk/fuzz.hpp"
#include "hdk/kernel.hpp"

using namespace hdk;
using namespace hdk::fuzz;

namespace {

Outcome fails_on_odd_seeds(Gen& g) {
  return g.below(2) == 1 ? Outcome::fail("odd") : Outcome::pass();
}

Outcome throws_always(Gen&) { throw Error(ErrorCode::Unsupported, "boom"); }

}  // namespace

TEST_CASE("generated data is well-defined") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Gen g(seed, Limits{});
    auto sig = g.signature();
    for (std::size_t n = 0; n <= 3; ++n) {
      Diagram d = g.diagram(*sig, n);
      CHECK(d.dim() == n);
      CHECK(well_defined(d, *sig).ok);
      if (n == 0) continue;
      CHECK(d.entries().size() <= g.limits().max_height);
      Piece p = g.piece(*sig, d);
      CHECK(well_defined_embedding(p.embedding, p.diagram, d, *sig));
      Diagram t = g.partner(*sig, p.diagram);
      CHECK(globular(p.diagram, t, *sig));
    }
  }
}

TEST_CASE("cases are reproducible") {
  CHECK(case_seed(1, "x", 3) == case_seed(1, "x", 3));
  CHECK(case_seed(1, "x", 3) != case_seed(1, "x", 4));
  CHECK(case_seed(1, "x", 3) != case_seed(1, "y", 3));
  CHECK(case_seed(1, "x", 3) != case_seed(2, "x", 3));

  Gen a(9, Limits{});
  Gen b(9, Limits{});
  auto sa = a.signature();
  auto sb = b.signature();
  REQUIRE(sa->size() == sb->size());
  CHECK(to_string(a.diagram(*sa, 2), *sa) == to_string(b.diagram(*sb, 2), *sb));
}

TEST_CASE("parallel and serial runs agree") {
  const Limits limits;
  for (const Property& p : {metatheory()[0], metatheory()[6], rewrite_size_law(), move_round_trips()[1]}) {
    CAPTURE(p.name);
    PropertyReport par = run(p, 60, 11, limits);
    PropertyReport ser = run_serial(p, 60, 11, limits);
    CHECK(par == ser);
    CHECK(par.ok());
  }
  Property odd{"odd", fails_on_odd_seeds, {}};
  PropertyReport par = run(odd, 50, 3, limits);
  CHECK(par == run_serial(odd, 50, 3, limits));
  CHECK(par.failures > 0);
  CHECK(par.failures < 50);
  REQUIRE(par.first_failing_case.has_value());
  CHECK(par.first_message == "odd");
}

TEST_CASE("exceptions count as failures") {
  PropertyReport r = run_serial(Property{"throws", throws_always, {}}, 5, 0, Limits{});
  CHECK(r.failures == 5);
  CHECK(r.first_failing_case == std::optional<std::size_t>(0));
  CHECK(r.first_message.find("boom") != std::string::npos);
  CHECK(format_report(r).find("first failure, case 0") != std::string::npos);
}

TEST_CASE("every property holds on a small sample") {
  const Limits limits;
  std::vector<Property> all = metatheory();
  all.push_back(normal_form());
  all.push_back(rewrite_size_law());
  for (const auto& p : move_round_trips()) all.push_back(p);
  for (const Property& p : all) {
    PropertyReport r = run(p, 40, 5, limits);
    INFO(format_report(r));
    CHECK(r.ok());
  }
}
