#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hdk/diagram.hpp"
#include "hdk/error.hpp"
#include "hdk/homotopy.hpp"
#include "hdk/kernel.hpp"
#include "hdk/signature.hpp"

namespace hdk {

enum class StepKind { attach, homotopy, invert_intro };
enum class Witness { inverse, unit, counit };

/// Size and redex parameters of a homotopy step. Only the keys that were
/// given are kept, so documents round-trip exactly.
struct StepParams {
  std::optional<std::size_t> lower, upper;    // Ĩ block
  std::optional<std::size_t> length;          // Î span
  std::optional<std::size_t> cells, groups;   // ĨI block, III stack
  std::optional<std::string> base;            // III-VI: named redex diagram
  std::optional<std::size_t> base_height;     // III-VI: height inside the redex
  std::optional<std::string> cell;            // III: the cell rewriting the stack

  friend bool operator==(const StepParams&, const StepParams&) = default;
};

struct Step {
  StepKind kind = StepKind::attach;

  // attach and invert_intro
  std::string generator;
  Side side = Side::target;
  std::vector<std::size_t> heights;
  Witness witness = Witness::inverse;

  // homotopy
  MoveKind move;
  MoveLocation location;
  std::optional<PullVariant> variant;
  StepParams params;

  Direction direction = Direction::forward;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Proof {
  std::string start;
  std::string goal;
  std::vector<Step> steps;
};

struct ProofDocument {
  int version = 1;
  std::shared_ptr<Signature> signature;
  std::map<std::string, Diagram> diagrams;
  std::optional<Proof> proof;

  const Diagram& diagram(const std::string& name) const;
};

ProofDocument parse_document(const std::string& text);
std::string serialize_document(const ProofDocument& doc);

/// Diagram expressions on their own, as used by the service.
std::string serialize_diagram(const Diagram& d, const Signature& sig);
Diagram parse_diagram(const std::string& text, Signature& sig);
Step parse_step(const std::string& text);
std::string serialize_step(const Step& step);

/// Applies one step to `state`; failures are StepInapplicable with details.
Diagram apply_step(const Diagram& state, const Step& step, ProofDocument& doc);

struct StepFailure {
  std::size_t step = 0;  // 1-based; 0 means the start diagram itself
  ErrorCode code = ErrorCode::StepInapplicable;
  std::string message;
};

struct Report {
  bool ok = false;
  /// Height of the state after each step; entry 0 is the start diagram.
  std::vector<std::size_t> heights;
  std::optional<StepFailure> failure;
  bool goal_reached = false;
};

Report check_document(ProofDocument& doc);
std::string report_text(const Report& report);
std::string report_json(const Report& report);

}  // namespace hdk
