#include <algorithm>

#include "bv/fraction.hpp"
#include "bv/common.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bv;

namespace {

MonoidElt rand_mono(Rng& rng, uint32_t bound) {
  return {oracle::random_forest(rng, bound, bound),
          oracle::random_braid(rng, bound, bound, true)};
}

FractionTriple rand_frac(Rng& rng, uint32_t bound, Flavor fl) {
  return frac_new(rand_mono(rng, bound), rand_mono(rng, bound), fl);
}

}  // namespace

TEST_CASE("fraction: frac_new folds the denominator braid across") {
  FractionTriple t = frac_new({Forest::lambda(0), {sig(0)}},
                              {Forest::lambda(0), {}}, Flavor::Braided);
  CHECK(t.num == Forest::lambda(0));
  CHECK(t.braid == BraidWord{sig(0)});
  CHECK(t.den == Forest::lambda(0));
  CHECK(!t.normalized);

  FractionTriple u = frac_new({Forest::lambda(0), {sig(1)}},
                              {Forest::lambda(1), {sig(0), sig(2, -1)}},
                              Flavor::Braided);
  CHECK(u.braid == BraidWord{sig(1), sig(2), sig(0, -1)});
}

TEST_CASE("fraction: reduce frozen cases") {
  // (l0)(l0)^-1 collapses to the identity triple
  FractionTriple t = frac_new({Forest::lambda(0), {}}, {Forest::lambda(0), {}},
                              Flavor::Braided);
  CHECK(reduce(t) == frac_identity(Flavor::Braided));

  // a half twist over two carets strips nothing
  Forest f = Forest::from_word({0, 1});
  FractionTriple d =
      reduce(frac_new({f, {sig(0), sig(1), sig(0)}}, {f, {}}, Flavor::Braided));
  CHECK(d.num == f);
  CHECK(d.den == f);
  CHECK(braid_eq(d.braid, {sig(0), sig(1), sig(0)}, Flavor::Braided));
  CHECK(!frac_eq(d, frac_identity(Flavor::Braided)));

  // a double crossing is already trivial in the symmetric flavor
  FractionTriple s =
      frac_new({Forest{}, {sig(0), sig(0)}}, {Forest{}, {}}, Flavor::Symmetric);
  CHECK(reduce(s) == frac_identity(Flavor::Symmetric));
}

TEST_CASE("fraction: reduce is bit-stable across strip orders") {
  Rng rng(0xf2ac);
  for (int k = 0; k < 200; ++k) {
    Flavor fl = (k & 1) ? Flavor::Symmetric : Flavor::Braided;
    FractionTriple t = rand_frac(rng, 5, fl);
    FractionTriple lo = reduce(t, StripOrder::LowFirst);
    FractionTriple hi = reduce(t, StripOrder::HighFirst);
    CHECK(lo == hi);
    CHECK(reduce(lo) == lo);
  }
}

TEST_CASE("fraction: the monoid embeds") {
  // l0 s0 l0 s0 and l0 l1 s0 s1 s0 are the same element, visible already in
  // the monoid
  MonoidElt l0{Forest::lambda(0), {}};
  MonoidElt s0{Forest{}, {sig(0)}};
  MonoidElt a = mono_mul(mono_mul(mono_mul(l0, s0), l0), s0);
  MonoidElt b{Forest::from_word({0, 1}), {sig(0), sig(1), sig(0)}};
  CHECK(mono_eq(a, b, Flavor::Braided));
  CHECK(frac_eq(embed_mono(a, Flavor::Braided), embed_mono(b, Flavor::Braided)));

  // and again at the group level, one generator at a time
  auto L0 = embed_forest(Forest::lambda(0), Flavor::Braided);
  auto L1 = embed_forest(Forest::lambda(1), Flavor::Braided);
  auto S0 = embed_braid({sig(0)}, Flavor::Braided);
  auto S1 = embed_braid({sig(1)}, Flavor::Braided);
  auto lhs = frac_mul(frac_mul(frac_mul(L0, S0), L0), S0);
  auto rhs = frac_mul(frac_mul(frac_mul(frac_mul(L0, L1), S0), S1), S0);
  CHECK(frac_eq(lhs, rhs));
  CHECK(lhs == rhs);  // normal forms are bit-identical
}

TEST_CASE("fraction: embedding is a homomorphism") {
  Rng rng(0x11d0);
  for (int k = 0; k < 150; ++k) {
    Flavor fl = (k & 1) ? Flavor::Symmetric : Flavor::Braided;
    MonoidElt x = rand_mono(rng, 4);
    MonoidElt y = rand_mono(rng, 4);
    CHECK(frac_eq(embed_mono(mono_mul(x, y), fl),
                  frac_mul(embed_mono(x, fl), embed_mono(y, fl))));
  }
}

TEST_CASE("fraction: group axioms") {
  Rng rng(0x6a0b);
  for (int k = 0; k < 100; ++k) {
    Flavor fl = (k & 1) ? Flavor::Symmetric : Flavor::Braided;
    FractionTriple x = rand_frac(rng, 4, fl);
    FractionTriple y = rand_frac(rng, 4, fl);
    FractionTriple z = rand_frac(rng, 4, fl);
    FractionTriple e = frac_identity(fl);
    CHECK(frac_eq(frac_mul(frac_mul(x, y), z), frac_mul(x, frac_mul(y, z))));
    CHECK(frac_eq(frac_mul(x, e), x));
    CHECK(frac_eq(frac_mul(e, x), x));
    CHECK(frac_eq(frac_mul(x, frac_inv(x)), e));
    CHECK(frac_eq(frac_mul(frac_inv(x), x), e));
    CHECK(frac_eq(frac_inv(frac_inv(x)), x));
  }
}

TEST_CASE("fraction: inverse swaps the forests") {
  FractionTriple t = reduce(frac_new({Forest::lambda(0), {sig(0)}},
                                     {Forest::lambda(0), {}}, Flavor::Braided));
  FractionTriple i = frac_inv(t);
  CHECK(i.num == Forest::lambda(0));
  CHECK(i.den == Forest::lambda(0));
  CHECK(braid_eq(i.braid, {sig(0, -1)}, Flavor::Braided));
  CHECK(frac_eq(frac_mul(t, i), frac_identity(Flavor::Braided)));
}

TEST_CASE("fraction: fattening does not change the element") {
  Rng rng(0xfa77e4);
  for (int k = 0; k < 100; ++k) {
    Flavor fl = (k & 1) ? Flavor::Symmetric : Flavor::Braided;
    FractionTriple t = reduce(rand_frac(rng, 4, fl));
    Forest j = oracle::random_forest(rng, 3, 4);
    BraidWord g = oracle::random_braid(rng, 4, 4, true);
    FractionTriple fat = fatten(t, j, g);
    CHECK(!fat.normalized);
    CHECK(reduce(fat, StripOrder::LowFirst) == t);
    CHECK(reduce(fat, StripOrder::HighFirst) == t);
  }
}

TEST_CASE("fraction: projection forgets the braiding") {
  FractionTriple full_twist = embed_braid({sig(0), sig(0)}, Flavor::Braided);
  CHECK(!frac_eq(full_twist, frac_identity(Flavor::Braided)));
  FractionTriple shadow = project_to_V(full_twist);
  CHECK(shadow.flavor == Flavor::Symmetric);
  CHECK(frac_eq(shadow, frac_identity(Flavor::Symmetric)));
  CHECK_THROWS_AS(project_to_V(shadow), error);

  Rng rng(0x9a0);
  for (int k = 0; k < 60; ++k) {
    FractionTriple x = rand_frac(rng, 4, Flavor::Braided);
    FractionTriple y = rand_frac(rng, 4, Flavor::Braided);
    CHECK(frac_eq(project_to_V(frac_mul(x, y)),
                  frac_mul(project_to_V(x), project_to_V(y))));
  }
}

TEST_CASE("fraction: one crossing over a caret pair is not the identity") {
  for (Flavor fl : {Flavor::Braided, Flavor::Symmetric}) {
    FractionTriple t = frac_new({Forest::lambda(0), {sig(0)}},
                                {Forest::lambda(0), {}}, fl);
    CHECK(!frac_eq(t, frac_identity(fl)));
  }
}

TEST_CASE("fraction: flavor mismatches are rejected") {
  FractionTriple b = frac_identity(Flavor::Braided);
  FractionTriple s = frac_identity(Flavor::Symmetric);
  CHECK_THROWS_AS(frac_mul(b, s), error);
  CHECK_THROWS_AS((void)frac_eq(b, s), error);
}
