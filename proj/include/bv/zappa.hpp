#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bv/braid.hpp"
#include "bv/forest.hpp"

namespace bv {

// The positive monoid: a forest with a braid hanging below its leaves.
// Multiplication is twisted, because pushing a braid through a forest both
// permutes the trees it meets and splits strands that pass through carets.
struct MonoidElt {
  Forest forest;
  BraidWord braid;
};

// braid acting on a forest: the word of f, letter by letter, with the braid
// permuting each caret position before splitting around it
Forest act_on_forest(const BraidWord& b, const Forest& f);

// forest acting on a braid: split the braid at every caret of f
BraidWord act_on_braid(const BraidWord& b, const Forest& f);

// the strand at position i doubles; crossings it takes part in duplicate
BraidWord split(const BraidWord& b, uint32_t i);

// inverse of split when the two strands at i, i+1 run in parallel
std::optional<BraidWord> try_unsplit(const BraidWord& b, uint32_t i, Flavor flavor);

MonoidElt mono_mul(const MonoidElt& x, const MonoidElt& y);
bool mono_eq(const MonoidElt& x, const MonoidElt& y, Flavor flavor);

// common right factor extraction: x = x' * r, y = y' * r with the primed
// parts sharing no further caret
struct MonoGcrf {
  MonoidElt x_bar, y_bar, r;
};
MonoGcrf mono_gcrf(const MonoidElt& x, const MonoidElt& y, Flavor flavor);

// Randomized check of the eight action identities tying the two monoids
// together. Samples random braids alpha, beta and forests u, v of word
// length <= bound and tests, for each:
//   (a) (alpha beta) . u   == alpha . (beta . u)
//   (b) (alpha beta)^u     == alpha^(beta . u) beta^u
//   (c) alpha . (u v)      == (alpha . u)(alpha^u . v)
//   (d) alpha^(u v)        == (alpha^u)^v
//   (e) alpha^1            == alpha
//   (f) 1 . u              == u
//   (g) alpha . 1          == 1
//   (h) 1^u                == 1
// where . is act_on_forest and ^ is act_on_braid. Braid comparisons use the
// given flavor. Deterministic for a fixed seed.
struct ZappaReport {
  uint64_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
ZappaReport check_zappa_axioms(uint64_t samples, uint32_t bound, uint64_t seed,
                               Flavor flavor);

}  // namespace bv
