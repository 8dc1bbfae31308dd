#pragma once

#include <cstddef>

#include "hdk/diagram.hpp"
#include "hdk/embedding.hpp"
#include "hdk/kernel.hpp"
#include "hdk/signature.hpp"

namespace hdk {

/// The k-fold source or target of D. Throws DepthOutOfRange when k > dim(D).
Diagram boundary_iter(const Diagram& d, Side side, std::size_t k, const Signature& sig);

/// The composite "S then D" of an m-diagram S and an n-diagram D, both of
/// dimension at least 1. Equal dimensions stack vertically; otherwise the
/// lower-dimensional operand is whiskered onto the other.
Diagram compose(const Diagram& s, const Diagram& d, const Signature& sig);

/// Embedding of D (dim n >= dim S) into compose(S, D).
Embedding inclusion(const Diagram& s, const Diagram& d, const Signature& sig);
/// Embedding of S (dim m > dim D) into compose(S, D): S is the initial segment.
Embedding inclusion_rev(const Diagram& s, const Diagram& d, const Signature& sig);

/// <D; []>, the height-0 diagram one dimension up.
Diagram identity_diagram(const Diagram& d);

/// Whether compose(S, D) exists.
bool composable(const Diagram& s, const Diagram& d, const Signature& sig);

}  // namespace hdk
