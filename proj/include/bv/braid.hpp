#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bv/rewrite.hpp"

namespace bv {

enum class Flavor { Braided, Symmetric };

struct BLetter {
  uint32_t index = 0;
  int8_t sign = 1;  // +1 or -1; ignored by symmetric-flavor equality
  bool operator==(const BLetter&) const = default;
};

using BraidWord = std::vector<BLetter>;

inline BLetter sig(uint32_t i, int s = 1) { return {i, static_cast<int8_t>(s)}; }

// 0 for the empty word, otherwise max index + 2 (strands the word touches)
uint32_t strand_bound(const BraidWord& w);

using Perm = std::vector<uint32_t>;

// Letters apply right to left: perm_of(uv) = perm_of(u) o perm_of(v).
// Concretely perm_of(w)(b) is the top position of the strand whose bottom
// sits at b when the word is drawn top to bottom.
Perm perm_of(const BraidWord& w, uint32_t n);
uint32_t perm_apply(const BraidWord& w, uint32_t b);
Perm perm_inverse(const Perm& p);

BraidWord inverse_word(const BraidWord& w);
BraidWord free_reduce(BraidWord w);

// positive word whose perm_of equals p, built by sorting descents
BraidWord word_from_perm(const Perm& p);

bool braid_eq(const BraidWord& u, const BraidWord& v, Flavor flavor);
bool braid_eq_garside(const BraidWord& u, const BraidWord& v);
bool braid_eq_handle(const BraidWord& u, const BraidWord& v);
bool handle_trivial(BraidWord w);  // triviality via Dehornoy handle reduction

struct DeleteStep {
  uint32_t index_before;
  BLetter letter;
  std::vector<BLetter> emitted;
  uint32_t index_after;
};

// Removes the strand whose top is at q. Surviving letters are renumbered;
// crossings involving the strand vanish. residual reports where the deleted
// strand's marker ends up at the bottom.
BraidWord delete_strand(const BraidWord& w, uint32_t q, uint32_t* residual = nullptr,
                        std::vector<DeleteStep>* trace = nullptr);

// delete every strand with top position > k, highest first
BraidWord reduce_width(BraidWord w, uint32_t k);

// does the element lie in the subgroup generated by sigma_0 .. sigma_{k-1}
bool in_Bk(const BraidWord& w, uint32_t k, Flavor flavor);

// canonical representative word of the element (stable across all words
// representing it); symmetric flavor forgets signs
BraidWord canonical_word(const BraidWord& w, Flavor flavor);

// deletion monoid words: delta_q delta_m = delta_m delta_{q+1} for m <= q,
// exactly the hedge presentation
using DeltaWord = IdxWord;
DeltaWord delta_normal_form(const DeltaWord& w);

// Garside left-greedy normal form in B_n. Simple factors are stored as
// diagram permutations (top to bottom maps).
struct GarsideNF {
  int64_t delta_pow = 0;
  std::vector<Perm> simples;
  uint32_t n = 2;
  bool operator==(const GarsideNF&) const = default;
};

GarsideNF garside_nf(const BraidWord& w, uint32_t n);
BraidWord garside_expand(const GarsideNF& nf);

}  // namespace bv
