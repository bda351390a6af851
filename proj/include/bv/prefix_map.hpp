#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bv/forest.hpp"

namespace bv {

// A finitely supported prefix substitution on addresses i.v: copy index i,
// binary path v. Sources below tail_start are carried by explicit pairs and
// cover their copies completely; from tail_start on, copy c maps to copy
// c + tail_shift with the path untouched.
struct PrefixPair {
  LeafAddr source, target;
  auto operator<=>(const PrefixPair&) const = default;
};

struct PrefixMap {
  std::vector<PrefixPair> pairs;  // sorted by source
  uint32_t tail_start = 0;
  int64_t tail_shift = 0;
};

PrefixMap prefix_identity();

// Image of an address under the substitution. Empty when the address is a
// proper prefix of a source, i.e. straddles several cells of the domain.
std::optional<LeafAddr> prefix_image(const PrefixMap& m, const LeafAddr& a);

// Equality as functions on the address space: compares on the common
// refinement of the two domains.
bool prefix_eq(const PrefixMap& a, const PrefixMap& b);

// Function composition, inner applied first.
PrefixMap prefix_compose(const PrefixMap& outer, const PrefixMap& inner);

std::string format(const PrefixMap& m);

}  // namespace bv
