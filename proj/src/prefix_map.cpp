#include "bv/prefix_map.hpp"

#include <algorithm>

#include "bv/common.hpp"
#include "bv/fraction.hpp"

namespace bv {

namespace {

bool is_prefix(const std::string& p, const std::string& s) {
  return s.size() >= p.size() && std::equal(p.begin(), p.end(), s.begin());
}

size_t max_source_depth(const PrefixMap& m) {
  size_t d = 0;
  for (const auto& p : m.pairs) d = std::max(d, p.source.path.size());
  return d;
}

std::string addr_str(const LeafAddr& a) {
  return std::to_string(a.tree) + "." + a.path;
}

bool eq_at(const PrefixMap& a, const PrefixMap& b, const LeafAddr& addr,
           size_t depth_left) {
  auto ia = prefix_image(a, addr);
  auto ib = prefix_image(b, addr);
  if (ia && ib) return *ia == *ib;
  if (depth_left == 0) return false;
  return eq_at(a, b, {addr.tree, addr.path + '0'}, depth_left - 1) &&
         eq_at(a, b, {addr.tree, addr.path + '1'}, depth_left - 1);
}

void emit(const PrefixMap& o, const LeafAddr& s, const LeafAddr& t,
          std::vector<PrefixPair>& out, size_t depth_left) {
  if (auto im = prefix_image(o, t)) {
    out.push_back({s, *im});
    return;
  }
  if (depth_left == 0) throw error("prefix_compose: map does not cover a cell");
  emit(o, {s.tree, s.path + '0'}, {t.tree, t.path + '0'}, out, depth_left - 1);
  emit(o, {s.tree, s.path + '1'}, {t.tree, t.path + '1'}, out, depth_left - 1);
}

}  // namespace

PrefixMap prefix_identity() { return {}; }

std::optional<LeafAddr> prefix_image(const PrefixMap& m, const LeafAddr& a) {
  if (a.tree >= m.tail_start)
    return LeafAddr{static_cast<uint32_t>(a.tree + m.tail_shift), a.path};
  for (const auto& pr : m.pairs) {
    if (pr.source.tree != a.tree) continue;
    if (is_prefix(pr.source.path, a.path))
      return LeafAddr{pr.target.tree,
                      pr.target.path + a.path.substr(pr.source.path.size())};
    if (is_prefix(a.path, pr.source.path)) return std::nullopt;
  }
  return std::nullopt;
}

bool prefix_eq(const PrefixMap& a, const PrefixMap& b) {
  if (a.tail_shift != b.tail_shift) return false;
  uint32_t copies = std::max(a.tail_start, b.tail_start);
  size_t depth = std::max(max_source_depth(a), max_source_depth(b)) + 1;
  for (uint32_t c = 0; c < copies; ++c)
    if (!eq_at(a, b, {c, ""}, depth)) return false;
  return true;
}

PrefixMap prefix_compose(const PrefixMap& outer, const PrefixMap& inner) {
  // Inner cells map affinely, so each (s -> t) of inner composes by chasing
  // t through outer, splitting both sides in sync until outer resolves.
  // Copies where inner is already tail but outer is not still need explicit
  // pairs, hence the cut below instead of inner.tail_start.
  int64_t need = static_cast<int64_t>(outer.tail_start) - inner.tail_shift;
  uint32_t cut = static_cast<uint32_t>(
      std::max<int64_t>(inner.tail_start, std::max<int64_t>(need, 0)));
  size_t depth = max_source_depth(outer) + 2;
  PrefixMap out;
  out.tail_start = cut;
  out.tail_shift = outer.tail_shift + inner.tail_shift;
  for (const auto& p : inner.pairs)
    emit(outer, p.source, p.target, out.pairs, depth);
  for (uint32_t c = inner.tail_start; c < cut; ++c)
    emit(outer, {c, ""}, {static_cast<uint32_t>(c + inner.tail_shift), ""},
         out.pairs, depth);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

std::string format(const PrefixMap& m) {
  std::string out;
  for (const auto& p : m.pairs)
    out += addr_str(p.source) + " -> " + addr_str(p.target) + "\n";
  out += "copies >= " + std::to_string(m.tail_start) + " shift by " +
         std::to_string(m.tail_shift) + "\n";
  return out;
}

PrefixMap as_prefix_map(const FractionTriple& t) {
  if (t.flavor != Flavor::Symmetric)
    throw error("as_prefix_map: symmetric flavor required");
  uint32_t ns = std::max({strand_bound(t.braid),
                          t.den.leaves_through(t.den.active_end()),
                          t.num.leaves_through(t.num.active_end())});
  Perm p = perm_of(t.braid, ns);
  PrefixMap out;
  out.tail_start = ns - t.den.length();
  out.tail_shift =
      static_cast<int64_t>(t.den.length()) - static_cast<int64_t>(t.num.length());
  for (uint32_t b = 0; b < ns; ++b)
    out.pairs.push_back({t.den.leaf_addr(b), t.num.leaf_addr(p[b])});
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

}  // namespace bv
