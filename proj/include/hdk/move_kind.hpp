#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace hdk {

enum class MoveFamily { I, II, III, IV, V, VI };

enum class Composite { atomic, tilde, hat };

/// Classifies a homotopy-generator application.
///
/// `hat` is only meaningful for family I, `tilde` for families I and II, and
/// `primed` (the extended variants) for families II to VI.
struct MoveKind {
  MoveFamily family = MoveFamily::I;
  bool primed = false;
  bool inverse = false;
  Composite composite = Composite::atomic;

  bool valid() const noexcept;
  std::string to_string() const;

  friend bool operator==(const MoveKind&, const MoveKind&) = default;
};

std::string_view to_string(MoveFamily family);
std::optional<MoveFamily> parse_family(std::string_view text);
std::string_view to_string(Composite composite);
std::optional<Composite> parse_composite(std::string_view text);

}  // namespace hdk
