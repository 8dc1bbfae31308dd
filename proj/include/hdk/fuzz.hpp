#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hdk/diagram.hpp"
#include "hdk/embedding.hpp"
#include "hdk/signature.hpp"

namespace hdk::fuzz {

struct Limits {
  std::size_t max_dim = 3;         // largest diagram dimension generated
  std::size_t max_generators = 3;  // per dimension
  std::size_t max_height = 4;      // entries per diagram level
};

/// A diagram S together with a well-defined embedding of it.
struct Piece {
  Diagram diagram;
  Embedding embedding;
};

/// Random well-defined signatures and diagrams from a single seed.
class Gen {
 public:
  Gen(std::uint64_t seed, Limits limits);

  const Limits& limits() const { return limits_; }
  std::size_t below(std::size_t n);  // uniform in [0, n); 0 when n == 0
  bool coin(double p = 0.5);

  /// Generators in dimensions 0..limits.max_dim; room above for move cells.
  std::shared_ptr<Signature> signature();

  /// A random n-diagram.
  Diagram diagram(const Signature& sig, std::size_t n);
  /// A random diagram with the given source, one dimension up.
  Diagram from(const Signature& sig, const Diagram& source, std::optional<std::size_t> height = {});
  /// A random n-diagram whose iterated source of dimension base.dim() is `base`.
  Diagram over(const Signature& sig, const Diagram& base, std::size_t n);

  /// A well-defined embedding S into d for some S drawn from d.
  Piece piece(const Signature& sig, const Diagram& d);
  /// A diagram T with the same source and target as s (possibly s itself).
  Diagram partner(const Signature& sig, const Diagram& s);

 private:
  Diagram word(const Signature& sig, std::size_t max_len);
  std::mt19937_64 rng_;
  Limits limits_;
};

/// Outcome of one property case.
struct Outcome {
  bool ok = true;
  bool vacuous = false;  // no instance could be generated
  std::string message;

  static Outcome pass() { return {}; }
  static Outcome fail(std::string why) { return {false, false, std::move(why)}; }
  static Outcome none() { return {true, true, {}}; }
};

using Check = Outcome (*)(Gen&);

struct Property {
  std::string name;
  Check check;
  /// Overrides the run's limits for this property when set.
  std::optional<Limits> limits;
};

/// The metatheory properties, in a fixed order.
const std::vector<Property>& metatheory();
/// Embedding-composition normal form against the literal recursion.
const Property& normal_form();
const Property& rewrite_size_law();
/// Apply then invert, for type I and each pull-through variant.
const std::vector<Property>& move_round_trips();

struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t vacuous = 0;
  std::optional<std::size_t> first_failing_case;
  std::string first_message;
  double seconds = 0;

  bool ok() const { return failures == 0 && vacuous == 0; }
  friend bool operator==(const PropertyReport& a, const PropertyReport& b) {
    return a.name == b.name && a.cases == b.cases && a.failures == b.failures && a.vacuous == b.vacuous &&
           a.first_failing_case == b.first_failing_case && a.first_message == b.first_message;
  }
};

/// Seed of case `index` of a property; independent of evaluation order.
std::uint64_t case_seed(std::uint64_t seed, const std::string& property, std::size_t index);

/// Runs `cases` cases of `p`, spread over OpenMP threads when available.
PropertyReport run(const Property& p, std::size_t cases, std::uint64_t seed, const Limits& limits);
/// Same cases, one after another; the report is identical to `run`.
PropertyReport run_serial(const Property& p, std::size_t cases, std::uint64_t seed, const Limits& limits);

std::string format_report(const PropertyReport& r);

}  // namespace hdk::fuzz
