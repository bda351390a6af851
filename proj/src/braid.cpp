#include "bv/braid.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "bv/common.hpp"

namespace bv {

uint32_t strand_bound(const BraidWord& w) {
  uint32_t m = 0;
  for (const auto& l : w) m = std::max(m, l.index + 2);
  return m;
}

Perm perm_of(const BraidWord& w, uint32_t n) {
  // Entry swaps compose on the right, so a forward pass yields
  // t_{l_1} o ... o t_{l_k}, the rightmost-first composite.
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& l : w) {
    if (l.index + 1 >= n) throw error("perm_of: width too small for word");
    std::swap(p[l.index], p[l.index + 1]);
  }
  return p;
}

uint32_t perm_apply(const BraidWord& w, uint32_t b) {
  uint32_t x = b;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (x == it->index)
      x = it->index + 1;
    else if (x == it->index + 1)
      x = it->index;
  }
  return x;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (uint32_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

BraidWord inverse_word(const BraidWord& w) {
  BraidWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->index, static_cast<int8_t>(-it->sign)});
  return out;
}

BraidWord free_reduce(BraidWord w) {
  BraidWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

BraidWord word_from_perm(const Perm& p) {
  // sort p by adjacent swaps; collecting positions and reversing yields a
  // positive word with perm_of equal to p
  Perm c = p;
  std::vector<uint32_t> positions;
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint32_t i = 0; i + 1 < c.size(); ++i) {
      if (c[i] > c[i + 1]) {
        std::swap(c[i], c[i + 1]);
        positions.push_back(i);
        changed = true;
      }
    }
  }
  BraidWord out;
  for (auto it = positions.rbegin(); it != positions.rend(); ++it) out.push_back(sig(*it));
  return out;
}

bool braid_eq(const BraidWord& u, const BraidWord& v, Flavor flavor) {
  if (flavor == Flavor::Symmetric) {
    uint32_t n = std::max({strand_bound(u), strand_bound(v), 2u});
    return perm_of(u, n) == perm_of(v, n);
  }
  return braid_eq_garside(u, v);
}

bool braid_eq_garside(const BraidWord& u, const BraidWord& v) {
  uint32_t n = std::max({strand_bound(u), strand_bound(v), 2u});
  return garside_nf(u, n) == garside_nf(v, n);
}

bool braid_eq_handle(const BraidWord& u, const BraidWord& v) {
  BraidWord w = u;
  BraidWord vi = inverse_word(v);
  w.insert(w.end(), vi.begin(), vi.end());
  return handle_trivial(std::move(w));
}

BraidWord delete_strand(const BraidWord& w, uint32_t q, uint32_t* residual,
                        std::vector<DeleteStep>* trace) {
  BraidWord out;
  uint32_t c = q;
  for (const auto& l : w) {
    DeleteStep step{c, l, {}, 0};
    uint32_t m = l.index;
    if (c < m) {
      out.push_back({m - 1, l.sign});
      if (trace) step.emitted.push_back(out.back());
    } else if (c > m + 1) {
      out.push_back(l);
      if (trace) step.emitted.push_back(out.back());
    }
    // c == m or c == m+1: the crossing involves the deleted strand, nothing
    // survives; the marker rides through the crossing either way
    if (c == m)
      c = m + 1;
    else if (c == m + 1)
      c = m;
    if (trace) {
      step.index_after = c;
      trace->push_back(std::move(step));
    }
  }
  if (residual) *residual = c;
  return out;
}

BraidWord reduce_width(BraidWord w, uint32_t k) {
  uint32_t b = strand_bound(w);
  for (uint32_t t = b; t-- > k + 1;) w = delete_strand(w, t);
  return w;
}

bool in_Bk(const BraidWord& w, uint32_t k, Flavor flavor) {
  return braid_eq(w, reduce_width(w, k), flavor);
}

BraidWord canonical_word(const BraidWord& w, Flavor flavor) {
  if (flavor == Flavor::Symmetric) {
    uint32_t n = std::max(strand_bound(w), 2u);
    Perm p = perm_of(w, n);
    while (p.size() > 0 && p.back() == p.size() - 1) p.pop_back();
    return word_from_perm(p);
  }
  BraidWord r = free_reduce(w);
  if (r.empty()) return r;
  uint32_t k = 0;
  while (!in_Bk(r, k, Flavor::Braided)) ++k;
  BraidWord narrowed = reduce_width(r, k);
  for (const auto& l : narrowed) {
    if (l.index + 2 > k + 1) throw error("canonical_word: width reduction left a wide letter");
  }
  // expansion can leave a literal cancelling pair at a factor seam
  return free_reduce(garside_expand(garside_nf(narrowed, std::max(k + 1, 2u))));
}

DeltaWord delta_normal_form(const DeltaWord& w) {
  return normalize(w, {hedge_rule()}, Strategy::Leftmost).word;
}

}  // namespace bv
