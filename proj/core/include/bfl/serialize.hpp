#pragma once

// Text form of tensor maps:
//
//   # tensor
//   ring: Fp:5
//   rank: 2
//   arity: 2 -> 1
//   (1) <- (0,1) : 3 mod 5
//
// Entry lines are `out <- in : scalar`, sorted by (in, out). Blank lines and
// lines starting with '#' after the header are ignored.

#include <string>
#include <string_view>

#include "bfl/tensor.hpp"

namespace bfl {

std::string to_text(const TensorMap& f);
/// Parses a full document (header plus entries).
TensorMap tensor_from_text(std::string_view text);
/// Parses entry lines only, for a map whose shape is known.
TensorMap entries_from_text(std::string_view text, const Ring& ring, std::size_t rank,
                            std::size_t in_arity, std::size_t out_arity);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace bfl
