#pragma once

#include "bv/prefix_map.hpp"
#include "bv/zappa.hpp"

namespace bv {

// A group element (F alpha) G^-1: numerator forest, braid, denominator
// forest. Any (F beta)(G gamma)^-1 folds to this shape since the braid of
// the denominator can be pulled across the inverse.
struct FractionTriple {
  Forest num;
  BraidWord braid;
  Forest den;
  Flavor flavor = Flavor::Braided;
  bool normalized = false;
  bool operator==(const FractionTriple&) const = default;
};

// Which strippable index reduce commits first. The normal form does not
// depend on the choice; exposing it lets tests pin that down.
enum class StripOrder { LowFirst, HighFirst };

FractionTriple frac_new(const MonoidElt& x, const MonoidElt& y, Flavor flavor);

// Strips common right carets off both forests until none splits off, then
// puts the braid into its canonical word. The result is the unique minimal
// triple for the element, bit-stable across strip orders.
FractionTriple reduce(const FractionTriple& t, StripOrder order = StripOrder::LowFirst);

FractionTriple frac_mul(const FractionTriple& a, const FractionTriple& b);
FractionTriple frac_inv(const FractionTriple& a);
bool frac_eq(const FractionTriple& a, const FractionTriple& b);

FractionTriple frac_identity(Flavor flavor);
FractionTriple embed_forest(const Forest& f, Flavor flavor);
FractionTriple embed_braid(const BraidWord& w, Flavor flavor);
FractionTriple embed_mono(const MonoidElt& x, Flavor flavor);

// The same group element on a finer decomposition: both monoid parts get
// multiplied by (j, gamma) on the right. Useful for exercising normal-form
// uniqueness; reduce undoes it.
FractionTriple fatten(const FractionTriple& t, const Forest& j, const BraidWord& gamma);

// Forget crossing signs: the quotient onto the symmetric-flavor group.
FractionTriple project_to_V(const FractionTriple& t);

// The element's action as a prefix substitution, denominator leaves to
// numerator leaves (symmetric flavor only). Any representative of the same
// element yields the same function.
PrefixMap as_prefix_map(const FractionTriple& t);

}  // namespace bv
