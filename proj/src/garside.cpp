#include <algorithm>
#include <numeric>

#include "bv/braid.hpp"
#include "bv/common.hpp"

// Garside left-greedy normal form in B_n. Internally simple elements are
// diagram permutations: pi[t] is the bottom position of the strand starting
// at top position t, and stacking a above b composes as pi_b o pi_a. This is
// the inverse of the convention perm_of uses; the two meet only at the word
// boundary, where single crossings are involutions.

namespace bv {

namespace {

Perm identity_perm(uint32_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm half_twist(uint32_t n) {
  Perm p(n);
  for (uint32_t i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

Perm transposition(uint32_t n, uint32_t i) {
  Perm p = identity_perm(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

// product a*b of simples known to stay simple
Perm prod(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (uint32_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

bool is_identity(const Perm& p) {
  for (uint32_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

// sigma_i left-divides a simple iff its strands starting at i, i+1 cross
bool descent(const Perm& p, uint32_t i) { return p[i] > p[i + 1]; }

// t^{-1} * b for a single crossing t = sigma_i: uncross at the top
Perm uncross_top(const Perm& b, uint32_t i) {
  Perm out = b;
  std::swap(out[i], out[i + 1]);
  return out;
}

// greatest common left divisor of two simples, peeled one crossing at a time
Perm left_gcd(Perm a, Perm b) {
  uint32_t n = static_cast<uint32_t>(a.size());
  Perm m = identity_perm(n);
  bool progress = true;
  while (progress) {
    progress = false;
    for (uint32_t i = 0; i + 1 < n; ++i) {
      if (descent(a, i) && descent(b, i)) {
        m = prod(m, transposition(n, i));
        a = uncross_top(a, i);
        b = uncross_top(b, i);
        progress = true;
      }
    }
  }
  return m;
}

// a^{-1} * Delta
Perm complement(const Perm& a) {
  uint32_t n = static_cast<uint32_t>(a.size());
  Perm ainv = perm_inverse(a);
  Perm out(n);
  for (uint32_t i = 0; i < n; ++i) out[i] = n - 1 - ainv[i];
  return out;
}

// Delta s Delta^{-1}
Perm flip(const Perm& s) {
  uint32_t n = static_cast<uint32_t>(s.size());
  Perm out(n);
  for (uint32_t i = 0; i < n; ++i) out[i] = n - 1 - s[n - 1 - i];
  return out;
}

// b with the left factor t removed
Perm left_quot(const Perm& t, const Perm& b) {
  Perm tinv = perm_inverse(t);
  Perm out(b.size());
  for (uint32_t i = 0; i < b.size(); ++i) out[i] = b[tinv[i]];
  return out;
}

}  // namespace

GarsideNF garside_nf(const BraidWord& w, uint32_t n) {
  if (n < 2) n = 2;
  if (strand_bound(w) > n) throw error("garside_nf: width too small for word");
  GarsideNF nf;
  nf.n = n;
  Perm dperm = half_twist(n);
  for (const auto& l : w) {
    if (l.sign > 0) {
      nf.simples.push_back(transposition(n, l.index));
    } else {
      // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); carrying Delta^{-1}
      // to the front twists every stored factor
      nf.delta_pow -= 1;
      for (auto& s : nf.simples) s = flip(s);
      nf.simples.push_back(prod(dperm, transposition(n, l.index)));
    }
  }
  // left-greedy sweeps: drag every divisible head as far left as it goes
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < nf.simples.size(); ++j) {
      Perm t = left_gcd(complement(nf.simples[j]), nf.simples[j + 1]);
      if (!is_identity(t)) {
        nf.simples[j] = prod(nf.simples[j], t);
        nf.simples[j + 1] = left_quot(t, nf.simples[j + 1]);
        changed = true;
      }
    }
    while (!nf.simples.empty() && is_identity(nf.simples.back())) nf.simples.pop_back();
  }
  while (!nf.simples.empty() && nf.simples.front() == dperm) {
    nf.delta_pow += 1;
    nf.simples.erase(nf.simples.begin());
  }
  for (const auto& s : nf.simples) {
    if (is_identity(s) || s == dperm) throw error("garside_nf: normalization incomplete");
  }
  return nf;
}

BraidWord garside_expand(const GarsideNF& nf) {
  uint32_t n = nf.n;
  // a positive word whose diagram permutation is p: the swap positions from
  // bubble sorting p, in generation order
  auto diagram_word = [n](const Perm& p) {
    Perm c = p;
    BraidWord out;
    bool changed = true;
    while (changed) {
      changed = false;
      for (uint32_t i = 0; i + 1 < n; ++i) {
        if (c[i] > c[i + 1]) {
          std::swap(c[i], c[i + 1]);
          out.push_back(sig(i));
          changed = true;
        }
      }
    }
    return out;
  };
  BraidWord out;
  BraidWord dword = diagram_word(half_twist(n));
  if (nf.delta_pow >= 0) {
    for (int64_t r = 0; r < nf.delta_pow; ++r) out.insert(out.end(), dword.begin(), dword.end());
  } else {
    BraidWord dinv = inverse_word(dword);
    for (int64_t r = 0; r < -nf.delta_pow; ++r) out.insert(out.end(), dinv.begin(), dinv.end());
  }
  for (const auto& s : nf.simples) {
    BraidWord sw = diagram_word(s);
    out.insert(out.end(), sw.begin(), sw.end());
  }
  return out;
}

}  // namespace bv
