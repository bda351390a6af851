#include "bv/fraction.hpp"

#include "bv/common.hpp"

namespace bv {

FractionTriple frac_new(const MonoidElt& x, const MonoidElt& y, Flavor flavor) {
  BraidWord a = x.braid;
  BraidWord yi = inverse_word(y.braid);
  a.insert(a.end(), yi.begin(), yi.end());
  return {x.forest, free_reduce(std::move(a)), y.forest, flavor, false};
}

FractionTriple reduce(const FractionTriple& t, StripOrder order) {
  Forest num = t.num;
  Forest den = t.den;
  BraidWord a = t.braid;
  // A caret strips when it can be peeled off the denominator, pulled back
  // through the braid, and peeled off the numerator where the braid carries
  // it. Each round commits one strip and rescans; den shrinks, so this ends.
  bool progress = true;
  while (progress) {
    progress = false;
    uint32_t bound = den.leaves_through(den.active_end());
    for (uint32_t k = 0; k + 1 < bound; ++k) {
      uint32_t i = order == StripOrder::LowFirst ? k : bound - 2 - k;
      auto dg = strip_right_caret(den, i);
      if (!dg) continue;
      auto b = try_unsplit(a, i, t.flavor);
      if (!b) continue;
      auto nf = strip_right_caret(num, perm_apply(*b, i));
      if (!nf) continue;
      den = *dg;
      a = *b;
      num = *nf;
      progress = true;
      break;
    }
  }
  return {num, canonical_word(a, t.flavor), den, t.flavor, true};
}

FractionTriple frac_mul(const FractionTriple& x, const FractionTriple& y) {
  if (x.flavor != y.flavor) throw error("frac_mul: flavor mismatch");
  // Lift the inner corner G^-1 H over a common right multiple U = GP = HQ,
  // turning it into P Q^-1; the twists land in the two monoid products.
  Forest u = forest_union(x.den, y.num);
  Forest p = *left_divide(x.den, u);
  Forest q = *left_divide(y.num, u);
  MonoidElt n = mono_mul({x.num, x.braid}, {p, {}});
  MonoidElt d = mono_mul({y.den, inverse_word(y.braid)}, {q, {}});
  return reduce(frac_new(n, d, x.flavor));
}

FractionTriple frac_inv(const FractionTriple& x) {
  return reduce({x.den, inverse_word(x.braid), x.num, x.flavor, false});
}

bool frac_eq(const FractionTriple& a, const FractionTriple& b) {
  if (a.flavor != b.flavor) throw error("frac_eq: flavor mismatch");
  FractionTriple ra = a.normalized ? a : reduce(a);
  FractionTriple rb = b.normalized ? b : reduce(b);
  return ra.num == rb.num && ra.den == rb.den &&
         braid_eq(ra.braid, rb.braid, a.flavor);
}

FractionTriple frac_identity(Flavor flavor) {
  return {Forest{}, {}, Forest{}, flavor, true};
}

FractionTriple embed_mono(const MonoidElt& x, Flavor flavor) {
  return reduce(frac_new(x, {Forest{}, {}}, flavor));
}

FractionTriple embed_forest(const Forest& f, Flavor flavor) {
  return embed_mono({f, {}}, flavor);
}

FractionTriple embed_braid(const BraidWord& w, Flavor flavor) {
  return embed_mono({Forest{}, w}, flavor);
}

FractionTriple fatten(const FractionTriple& t, const Forest& j, const BraidWord& gamma) {
  MonoidElt w{j, gamma};
  return frac_new(mono_mul({t.num, t.braid}, w), mono_mul({t.den, {}}, w), t.flavor);
}

FractionTriple project_to_V(const FractionTriple& t) {
  if (t.flavor != Flavor::Braided) throw error("project_to_V: input must be braided");
  return reduce({t.num, t.braid, t.den, Flavor::Symmetric, false});
}

}  // namespace bv
