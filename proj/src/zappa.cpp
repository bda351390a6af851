#include "bv/zappa.hpp"

#include <algorithm>

#include "bv/common.hpp"
#include "bv/rng.hpp"

namespace bv {

BraidWord split(const BraidWord& b, uint32_t i) {
  // Walk the word bottom up (last letter first) with c tracking where the
  // doubled strand currently sits. A crossing either misses the pair, in
  // which case it survives with the index shifted past the extra strand, or
  // involves it, in which case it doubles into two crossings of the same
  // sign. Blocks are pushed reversed and the accumulator flipped once.
  BraidWord out;
  uint32_t c = i;
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    uint32_t m = it->index;
    int8_t e = it->sign;
    if (c < m) {
      out.push_back({m + 1, e});
    } else if (c == m) {
      out.push_back({m + 1, e});
      out.push_back({m, e});
    } else if (c == m + 1) {
      out.push_back({m, e});
      out.push_back({m + 1, e});
    } else {
      out.push_back({m, e});
    }
    if (c == m) {
      c = m + 1;
    } else if (c == m + 1) {
      c = m;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<BraidWord> try_unsplit(const BraidWord& b, uint32_t i, Flavor flavor) {
  uint32_t n = std::max(strand_bound(b), i + 2);
  Perm p = perm_of(b, n);
  uint32_t t = p[i];
  if (p[i + 1] != t + 1) return std::nullopt;
  BraidWord candidate = delete_strand(b, t);
  if (!braid_eq(split(candidate, i), b, flavor)) return std::nullopt;
  return candidate;
}

Forest act_on_forest(const BraidWord& b, const Forest& f) {
  ForestWord out;
  BraidWord cur = b;
  for (uint32_t m : f.to_word()) {
    out.push_back(perm_apply(cur, m));
    cur = split(cur, m);
  }
  return Forest::from_word(out);
}

BraidWord act_on_braid(const BraidWord& b, const Forest& f) {
  BraidWord cur = b;
  for (uint32_t m : f.to_word()) cur = split(cur, m);
  return cur;
}

MonoidElt mono_mul(const MonoidElt& x, const MonoidElt& y) {
  BraidWord braid = act_on_braid(x.braid, y.forest);
  braid.insert(braid.end(), y.braid.begin(), y.braid.end());
  return {forest_mul(x.forest, act_on_forest(x.braid, y.forest)),
          free_reduce(std::move(braid))};
}

bool mono_eq(const MonoidElt& x, const MonoidElt& y, Flavor flavor) {
  return x.forest == y.forest && braid_eq(x.braid, y.braid, flavor);
}

MonoGcrf mono_gcrf(const MonoidElt& x, const MonoidElt& y, Flavor flavor) {
  // Peel common right carets one at a time. A caret lambda_i splits off the
  // right of (F, alpha) when F strips at i and alpha unsplits at i; it splits
  // off y's side too when y's forest strips at the unsplit braid's image of
  // i. Folding y's braid against alpha first lets a single unsplit test
  // serve both components.
  Forest xf = x.forest;
  Forest yg = y.forest;
  BraidWord yb = y.braid;
  BraidWord xinv = inverse_word(x.braid);
  yb.insert(yb.end(), xinv.begin(), xinv.end());
  yb = free_reduce(std::move(yb));
  MonoidElt r{Forest{}, x.braid};
  bool progress = true;
  while (progress) {
    progress = false;
    uint32_t bound = xf.leaves_through(xf.active_end());
    for (uint32_t i = 0; i + 1 < bound; ++i) {
      auto fx = strip_right_caret(xf, i);
      if (!fx) continue;
      auto bp = try_unsplit(yb, i, flavor);
      if (!bp) continue;
      auto gy = strip_right_caret(yg, perm_apply(*bp, i));
      if (!gy) continue;
      xf = *fx;
      yb = *bp;
      yg = *gy;
      r = mono_mul({Forest::lambda(i), {}}, r);
      progress = true;
      break;
    }
  }
  return {{xf, {}}, {yg, yb}, r};
}

namespace {

BraidWord sample_braid(Rng& rng, uint32_t bound) {
  BraidWord w;
  uint32_t len = rng.uniform(0, bound);
  for (uint32_t k = 0; k < len; ++k)
    w.push_back({rng.uniform(0, bound), rng.coin() ? int8_t{1} : int8_t{-1}});
  return w;
}

Forest sample_forest(Rng& rng, uint32_t bound) {
  ForestWord w;
  uint32_t len = rng.uniform(0, bound);
  for (uint32_t k = 0; k < len; ++k) w.push_back(rng.uniform(0, bound));
  return Forest::from_word(w);
}

}  // namespace

ZappaReport check_zappa_axioms(uint64_t samples, uint32_t bound, uint64_t seed,
                               Flavor flavor) {
  Rng rng(seed);
  ZappaReport rep;
  auto beq = [&](const BraidWord& a, const BraidWord& b) {
    return braid_eq(a, b, flavor);
  };
  for (uint64_t s = 0; s < samples; ++s) {
    BraidWord alpha = sample_braid(rng, bound);
    BraidWord beta = sample_braid(rng, bound);
    Forest u = sample_forest(rng, bound);
    Forest v = sample_forest(rng, bound);
    auto fail = [&](char axiom) {
      rep.failures.push_back(std::string("axiom (") + axiom +
                             ") failed at sample " + std::to_string(s));
    };
    BraidWord ab = alpha;
    ab.insert(ab.end(), beta.begin(), beta.end());
    Forest uv = forest_mul(u, v);

    if (!(act_on_forest(ab, u) == act_on_forest(alpha, act_on_forest(beta, u))))
      fail('a');
    {
      BraidWord rhs = act_on_braid(alpha, act_on_forest(beta, u));
      BraidWord bu = act_on_braid(beta, u);
      rhs.insert(rhs.end(), bu.begin(), bu.end());
      if (!beq(act_on_braid(ab, u), rhs)) fail('b');
    }
    if (!(act_on_forest(alpha, uv) ==
          forest_mul(act_on_forest(alpha, u),
                     act_on_forest(act_on_braid(alpha, u), v))))
      fail('c');
    if (!beq(act_on_braid(alpha, uv), act_on_braid(act_on_braid(alpha, u), v)))
      fail('d');
    if (!beq(act_on_braid(alpha, Forest{}), alpha)) fail('e');
    if (!(act_on_forest({}, u) == u)) fail('f');
    if (!(act_on_forest(alpha, Forest{}) == Forest{}))
      fail('g');
    if (!beq(act_on_braid({}, u), {})) fail('h');
    rep.checked += 8;
  }
  return rep;
}

}  // namespace bv
