#include "bv/hedge.hpp"

#include <algorithm>

#include "bv/common.hpp"

namespace bv {

Hedge Hedge::nu(uint32_t i) {
  Hedge h;
  h.vals_[i] = 2;
  return h;
}

Hedge Hedge::from_word(const HedgeWord& w) {
  Hedge h;
  for (uint32_t i : w) h = hedge_mul(h, nu(i));
  return h;
}

uint32_t Hedge::value(uint32_t i) const {
  auto it = vals_.find(i);
  return it == vals_.end() ? 1 : it->second;
}

uint32_t Hedge::active_end() const {
  return vals_.empty() ? 0 : vals_.rbegin()->first + 1;
}

uint64_t Hedge::weight() const {
  uint64_t n = 0;
  for (const auto& [i, v] : vals_) n += v - 1;
  return n;
}

uint64_t Hedge::block_start(uint32_t i) const {
  uint64_t s = i;
  for (const auto& [j, v] : vals_) {
    if (j >= i) break;
    s += v - 1;
  }
  return s;
}

uint32_t Hedge::leaf_root(uint64_t leaf) const {
  uint64_t base = 0;
  uint32_t prev = 0;
  for (const auto& [i, v] : vals_) {
    uint64_t gap = i - prev;  // singleton blocks before i
    if (leaf < base + gap) return prev + static_cast<uint32_t>(leaf - base);
    base += gap;
    if (leaf < base + v) return i;
    base += v;
    prev = i + 1;
  }
  return prev + static_cast<uint32_t>(leaf - base);
}

HedgeWord Hedge::ascending_word() const {
  // Sort the descending word with the defining relation
  // nu_q nu_m = nu_m nu_{q+1} (m <= q) until strictly increasing.
  HedgeWord w = descending_word();
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] >= w[p + 1]) {
        uint32_t q = w[p], m = w[p + 1];
        w[p] = m;
        w[p + 1] = q + 1;
        changed = true;
      }
    }
  }
  return w;
}

std::vector<std::pair<uint32_t, uint32_t>> Hedge::descending_runs() const {
  std::vector<std::pair<uint32_t, uint32_t>> runs;
  for (auto it = vals_.rbegin(); it != vals_.rend(); ++it)
    runs.push_back({it->first, it->second - 1});
  return runs;
}

HedgeWord Hedge::descending_word() const {
  HedgeWord w;
  for (auto [i, mult] : descending_runs())
    for (uint32_t r = 0; r < mult; ++r) w.push_back(i);
  return w;
}

void Hedge::set_value(uint32_t i, uint32_t v) {
  if (v == 0) throw error("hedge values are positive");
  if (v == 1)
    vals_.erase(i);
  else
    vals_[i] = v;
}

Hedge hedge_mul(const Hedge& h, const Hedge& k) {
  Hedge out;
  uint32_t end = h.active_end();
  uint64_t leaf = 0;
  for (uint32_t i = 0; i < end; ++i) {
    uint64_t s = 0;
    for (uint32_t r = 0; r < h.value(i); ++r) s += k.value(static_cast<uint32_t>(leaf++));
    if (s > 1) out.set_value(i, static_cast<uint32_t>(s));
  }
  // past h's activity the blocks are singletons: copy k shifted
  for (const auto& [j, v] : k.active()) {
    if (j < leaf) continue;
    out.set_value(end + static_cast<uint32_t>(j - leaf), v);
  }
  return out;
}

Hedge leaf_count(const Forest& f) {
  Hedge h;
  for (const auto& [i, t] : f.active())
    h.set_value(i, static_cast<uint32_t>((t.size() + 1) / 2));
  return h;
}

IntervalPartition to_partition(const Hedge& h) {
  IntervalPartition p;
  for (const auto& [i, v] : h.active()) {
    uint64_t s = h.block_start(i);
    p.blocks.push_back({s, s + v - 1});
  }
  return p;
}

Hedge from_partition(const IntervalPartition& p) {
  Hedge h;
  uint64_t consumed = 0;  // extra leaves used by earlier blocks
  uint64_t prev_end = 0;
  for (const auto& [a, b] : p.blocks) {
    if (b <= a || a < prev_end) throw error("from_partition: malformed blocks");
    prev_end = b + 1;
    uint32_t pos = static_cast<uint32_t>(a - consumed);
    h.set_value(pos, static_cast<uint32_t>(b - a + 1));
    consumed += b - a;
  }
  return h;
}

IntervalPartition partition_meet(const IntervalPartition& a, const IntervalPartition& b) {
  IntervalPartition out;
  for (const auto& [a1, a2] : a.blocks)
    for (const auto& [b1, b2] : b.blocks) {
      uint64_t lo = std::max(a1, b1), hi = std::min(a2, b2);
      if (hi > lo) out.blocks.push_back({lo, hi});
    }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

IntervalPartition partition_join(const IntervalPartition& a, const IntervalPartition& b) {
  std::vector<std::pair<uint64_t, uint64_t>> all = a.blocks;
  all.insert(all.end(), b.blocks.begin(), b.blocks.end());
  std::sort(all.begin(), all.end());
  IntervalPartition out;
  for (const auto& blk : all) {
    // merge only on overlap (a shared element); adjacency is not enough
    if (!out.blocks.empty() && blk.first <= out.blocks.back().second)
      out.blocks.back().second = std::max(out.blocks.back().second, blk.second);
    else
      out.blocks.push_back(blk);
  }
  return out;
}

bool hedge_divides_left(const Hedge& h, const Hedge& k) {
  for (const auto& [i, v] : h.active())
    if (v > k.value(i)) return false;
  return true;
}

bool hedge_divides_right(const Hedge& h, const Hedge& k) {
  IntervalPartition hp = to_partition(h), kp = to_partition(k);
  for (const auto& [a, b] : hp.blocks) {
    bool inside = false;
    for (const auto& [c, d] : kp.blocks)
      if (c <= a && b <= d) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

Hedge hedge_gclf(const Hedge& h, const Hedge& k) {
  Hedge out;
  for (const auto& [i, v] : h.active()) {
    uint32_t m = std::min(v, k.value(i));
    if (m > 1) out.set_value(i, m);
  }
  return out;
}

Hedge hedge_lcrm(const Hedge& h, const Hedge& k) {
  Hedge out = h;
  for (const auto& [i, v] : k.active())
    out.set_value(i, std::max(out.value(i), v));
  return out;
}

Hedge hedge_gcrf(const Hedge& h, const Hedge& k) {
  return from_partition(partition_meet(to_partition(h), to_partition(k)));
}

Hedge hedge_lclm(const Hedge& h, const Hedge& k) {
  return from_partition(partition_join(to_partition(h), to_partition(k)));
}

}  // namespace bv
