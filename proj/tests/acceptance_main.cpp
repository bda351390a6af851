// Acceptance gate: twelve end-to-end criteria, one verdict line each.
// Budgets (seconds) are pinned next to the criterion name; 0 means untimed.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "bv/hedge.hpp"
#include "bv/io.hpp"
#include "bv/prefix_map.hpp"
#include "bv/rewrite.hpp"
#include "bv/subgroup.hpp"
#include "oracles.hpp"

using namespace bv;

namespace {

int g_failures = 0;

template <class Body>
void criterion(int num, const char* name, double budget_s, Body&& body) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" [") + e.what() + "]";
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_budget = budget_s <= 0 || dt < budget_s;
  bool pass = ok && in_budget;
  if (!pass) ++g_failures;
  if (!ok && note.empty()) note = " [check failed]";
  if (ok && !in_budget) note = " [over budget]";
  if (budget_s > 0)
    std::printf("%s %2d %s (%.2fs of %.0fs)%s\n", pass ? "PASS" : "FAIL", num, name,
                dt, budget_s, note.c_str());
  else
    std::printf("%s %2d %s (%.2fs)%s\n", pass ? "PASS" : "FAIL", num, name, dt,
                note.c_str());
}

MonoidElt rand_mono(Rng& rng, uint32_t bound) {
  return {oracle::random_forest(rng, bound, bound),
          oracle::random_braid(rng, bound, bound, true)};
}

FractionTriple rand_frac(Rng& rng, uint32_t bound, Flavor fl) {
  return frac_new(rand_mono(rng, bound), rand_mono(rng, bound), fl);
}

Forest rand_simple_forest(Rng& rng, uint32_t k) {
  ForestWord w;
  for (uint32_t j = 0; j < k; ++j) w.push_back(rng.uniform(0, j));
  return Forest::from_word(w);
}

FractionTriple rand_member(Rng& rng, uint32_t k, Flavor fl) {
  BraidWord b = k >= 1 ? oracle::random_braid(rng, 6, k - 1, fl == Flavor::Braided)
                       : BraidWord{};
  return frac_new({rand_simple_forest(rng, k), b},
                  {rand_simple_forest(rng, k), {}}, fl);
}

// same braid element, different word: free insertions at random spots
BraidWord scramble_equal(Rng& rng, BraidWord w, uint32_t max_idx) {
  for (int t = 0; t < 3; ++t) {
    uint32_t pos = rng.uniform(0, static_cast<uint32_t>(w.size()));
    uint32_t i = rng.uniform(0, max_idx);
    int s = rng.coin() ? 1 : -1;
    w.insert(w.begin() + pos, {sig(i, s), sig(i, -s)});
  }
  return w;
}

bool c1_paper_identity() {
  MonoidElt l0{Forest::lambda(0), {}};
  MonoidElt s0{Forest{}, {sig(0)}};
  MonoidElt lhs = mono_mul(mono_mul(mono_mul(l0, s0), l0), s0);
  MonoidElt rhs{Forest::from_word({0, 1}), {sig(0), sig(1), sig(0)}};
  if (!mono_eq(lhs, rhs, Flavor::Braided)) return false;
  FractionTriple fa = parse_element("l0 s0 l0 s0 / 1", Flavor::Braided);
  FractionTriple fb = parse_element("l0 l1 s0 s1 s0 / 1", Flavor::Braided);
  return frac_eq(fa, fb) && frac_mul(fa, frac_inv(fb)) == frac_identity(Flavor::Braided);
}

bool c2_spark_chain() {
  std::vector<DeleteStep> trace;
  uint32_t residual = 0;
  BraidWord out = delete_strand({sig(0), sig(1), sig(0)}, 1, &residual, &trace);
  if (out != BraidWord{sig(0)} || residual != 1 || trace.size() != 3) return false;
  auto step_is = [&](size_t i, uint32_t before, BLetter l, const BraidWord& em,
                     uint32_t after) {
    return trace[i].index_before == before && trace[i].letter == l &&
           trace[i].emitted == em && trace[i].index_after == after;
  };
  return step_is(0, 1, sig(0), {}, 0) &&        // d1 s0 = d0: crossing absorbed
         step_is(1, 0, sig(1), {sig(0)}, 0) &&  // d0 s1 = s0 d0: renumbered past
         step_is(2, 0, sig(0), {}, 1);          // d0 s0 = d1: absorbed again
}

bool c3_confluence() {
  std::vector<Rule> schemas{forest_rule(), hedge_rule(), hedge_rule_descending()};
  for (const Rule& r : schemas)
    for (uint32_t b = 2; b <= 10; ++b)
      if (!check_local_confluence({r}, b).ok()) return false;
  return true;
}

bool c4_zappa_axioms() {
  for (Flavor fl : {Flavor::Braided, Flavor::Symmetric})
    if (!check_zappa_axioms(1000, 8, 0xacce5504, fl).ok()) return false;
  // splitting then deleting one crossing, exhaustively
  for (uint32_t q = 0; q <= 8; ++q)
    for (uint32_t m = 0; m <= 8; ++m)
      for (int8_t e : {int8_t{1}, int8_t{-1}}) {
        BraidWord g{sig(q, e)};
        uint32_t res = 0;
        if (delete_strand(split(g, m), perm_apply(g, m), &res) != g || res != m)
          return false;
      }
  return true;
}

bool c5_split_round_trip() {
  if (try_unsplit({sig(0)}, 0, Flavor::Braided).has_value()) return false;
  if (try_unsplit({sig(0)}, 0, Flavor::Symmetric).has_value()) return false;
  Rng rng(0xacce5505);
  for (int k = 0; k < 1000; ++k) {
    Flavor fl = (k & 1) ? Flavor::Symmetric : Flavor::Braided;
    BraidWord b = oracle::random_braid(rng, 10, 6, true);  // widths <= 8
    uint32_t i = rng.uniform(0, 7);
    auto back = try_unsplit(split(b, i), i, fl);
    if (!back || !braid_eq(*back, b, fl)) return false;
  }
  return true;
}

bool c6_dual_backends() {
  Rng rng(0xacce5506);
  for (uint32_t n : {4u, 6u}) {
    for (int k = 0; k < 500; ++k) {
      BraidWord u = oracle::random_braid(rng, 10, n - 2, true);
      BraidWord v = (k % 4 == 0) ? scramble_equal(rng, u, n - 2)
                                 : oracle::random_braid(rng, 10, n - 2, true);
      if (braid_eq_garside(u, v) != braid_eq_handle(u, v)) return false;
    }
  }
  return true;
}

bool c7_normal_form_uniqueness() {
  Rng rng(0xacce5507);
  for (int k = 0; k < 500; ++k) {
    Flavor fl = (k & 1) ? Flavor::Symmetric : Flavor::Braided;
    FractionTriple nf = reduce(rand_frac(rng, 4, fl), StripOrder::LowFirst);
    if (reduce(nf, StripOrder::HighFirst) != nf) return false;
    Forest j = oracle::random_forest(rng, 3, 4);
    BraidWord g = oracle::random_braid(rng, 4, 4, true);
    FractionTriple fat = fatten(nf, j, g);
    if (reduce(fat, StripOrder::LowFirst) != nf) return false;
    if (reduce(fat, StripOrder::HighFirst) != nf) return false;
  }
  return true;
}

bool c8_group_axioms() {
  Rng rng(0xacce5508);
  for (Flavor fl : {Flavor::Braided, Flavor::Symmetric}) {
    FractionTriple e = frac_identity(fl);
    for (int k = 0; k < 500; ++k) {
      FractionTriple x = rand_frac(rng, 3, fl);
      FractionTriple y = rand_frac(rng, 3, fl);
      FractionTriple z = rand_frac(rng, 3, fl);
      if (!frac_eq(frac_mul(frac_mul(x, y), z), frac_mul(x, frac_mul(y, z))))
        return false;
      if (!frac_eq(frac_mul(x, e), x) || !frac_eq(frac_mul(e, x), x)) return false;
      if (!frac_eq(frac_mul(x, frac_inv(x)), e)) return false;
      if (!frac_eq(frac_mul(frac_inv(x), x), e)) return false;
    }
  }
  return true;
}

bool c9_presentation() {
  return verify_presentation(6, Flavor::Braided).ok() &&
         verify_presentation(6, Flavor::Symmetric).ok();
}

bool c10_semantic_oracle() {
  FractionTriple t = parse_element("l0 s0 / l0", Flavor::Symmetric);
  if (frac_eq(t, frac_identity(Flavor::Symmetric))) return false;
  PrefixMap m = as_prefix_map(t);
  if (m.pairs != std::vector<PrefixPair>{{{0, "0"}, {0, "1"}}, {{0, "1"}, {0, "0"}}})
    return false;
  if (m.tail_start != 1 || m.tail_shift != 0) return false;

  Rng rng(0xacce5510);
  for (int k = 0; k < 500; ++k) {
    FractionTriple x = rand_frac(rng, 3, Flavor::Symmetric);
    FractionTriple y;
    if (k < 100) {
      y = fatten(reduce(x), oracle::random_forest(rng, 2, 3),
                 oracle::random_braid(rng, 2, 3, false));
    } else {
      y = rand_frac(rng, 3, Flavor::Symmetric);
    }
    bool fe = frac_eq(x, y);
    if (k < 100 && !fe) return false;
    if (fe != prefix_eq(as_prefix_map(x), as_prefix_map(y))) return false;
  }
  return true;
}

bool c11_bv_closure() {
  Rng rng(0xacce5511);
  std::vector<FractionTriple> elems;
  for (int k = 0; k < 500; ++k) {
    elems.push_back(rand_member(rng, rng.uniform(0, 5), Flavor::Braided));
    if (!is_member(elems.back())) return false;
    if (!is_member(frac_inv(elems.back()))) return false;
    if (!is_member(project_to_V(elems.back()))) return false;
  }
  for (int k = 0; k < 200; ++k) {
    const FractionTriple& a = elems[rng.uniform(0, 499)];
    const FractionTriple& b = elems[rng.uniform(0, 499)];
    if (!is_member(frac_mul(a, b))) return false;
  }
  return true;
}

bool c12_homomorphisms() {
  Rng rng(0xacce5512);
  for (int k = 0; k < 1000; ++k) {
    Forest f = oracle::random_forest(rng, 6, 6);
    Forest g = oracle::random_forest(rng, 6, 6);
    if (leaf_count(forest_mul(f, g)) != hedge_mul(leaf_count(f), leaf_count(g)))
      return false;
  }
  for (int k = 0; k < 500; ++k) {
    FractionTriple x = rand_frac(rng, 3, Flavor::Braided);
    FractionTriple y = rand_frac(rng, 3, Flavor::Braided);
    if (!frac_eq(project_to_V(frac_mul(x, y)),
                 frac_mul(project_to_V(x), project_to_V(y))))
      return false;
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "worked product identity, monoid and fraction", 1.0, c1_paper_identity);
  criterion(2, "strand deletion spark chain", 0, c2_spark_chain);
  criterion(3, "rewrite schema confluence, bounds 2..10", 10.0, c3_confluence);
  criterion(4, "mutual action axioms + split/delete coactions", 0, c4_zappa_axioms);
  criterion(5, "split/unsplit round trips", 0, c5_split_round_trip);
  criterion(6, "garside vs handle backends, B4 and B6", 60.0, c6_dual_backends);
  criterion(7, "normal form uniqueness under fattening", 0, c7_normal_form_uniqueness);
  criterion(8, "group axioms, both flavors", 0, c8_group_axioms);
  criterion(9, "presentation relations, indices <= 6", 30.0, c9_presentation);
  criterion(10, "prefix map semantics agree with frac_eq", 0, c10_semantic_oracle);
  criterion(11, "balanced elements close up under the group ops", 0, c11_bv_closure);
  criterion(12, "leaf count and projection homomorphisms", 0, c12_homomorphisms);
  if (g_failures) std::printf("%d of 12 criteria failed\n", g_failures);
  return g_failures ? 1 : 0;
}
