#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bv/fraction.hpp"

namespace bv {

// Simple means all carets sit in tree 0; the type counts them. An element
// is simple of type k when on top of that its braid only moves the first
// k+1 strands.
struct SimplicityReport {
  bool is_simple = false;
  std::optional<uint32_t> type_k;
  std::optional<bool> braid_ok;
};

SimplicityReport is_simple_forest(const Forest& f);
SimplicityReport is_simple_elt(const MonoidElt& x, Flavor flavor);

// Membership in BV (braided flavor) or V (symmetric): the normal form must
// be balanced, i.e. both forests simple of one type k with the braid in
// B_{k+1}. Left factors of simple elements are simple, so testing the
// normal form alone decides for every representative.
bool is_member(const FractionTriple& t);

// Whether right-multiplying a simple element of type k by the forest word g
// keeps it simple; decided by g's letters alone.
bool simple_product_bound(const MonoidElt& x, const ForestWord& g, Flavor flavor);

struct RelationCheck {
  std::string name;
  bool ok = false;
  FractionTriple lhs, rhs;  // reduced sides
};

struct PresentationReport {
  std::vector<RelationCheck> checks;
  uint64_t failures() const;
  bool ok() const { return failures() == 0; }
};

// Instantiates the defining relations (forest shuffles, braid relations,
// the four crossing/caret interleavings, plus sigma^2 = 1 when symmetric)
// for every admissible tuple of generator indices <= max_index and checks
// each one as a group identity.
PresentationReport verify_presentation(uint32_t max_index, Flavor flavor);

}  // namespace bv
