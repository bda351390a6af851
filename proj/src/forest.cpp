#include "bv/forest.hpp"

#include <algorithm>
#include <cassert>

#include "bv/common.hpp"

namespace bv {

const Tree kTrivialTree = {""};
const Tree kCaretTree = {"", "0", "1"};

bool tree_valid(const Tree& t) {
  if (t.find("") == t.end()) return false;
  for (const auto& v : t) {
    if (v.empty()) continue;
    if (v.find_first_not_of("01") != std::string::npos) return false;
    std::string parent = v.substr(0, v.size() - 1);
    if (!t.count(parent)) return false;
    std::string sib = parent + (v.back() == '0' ? '1' : '0');
    if (!t.count(sib)) return false;
  }
  return true;
}

bool tree_is_leaf(const Tree& t, const std::string& v) {
  return t.count(v) && !t.count(v + "0");
}

std::vector<std::string> tree_leaves(const Tree& t) {
  // std::set orders addresses lexicographically, which restricted to the
  // leaves is exactly the left-to-right order.
  std::vector<std::string> out;
  for (const auto& v : t)
    if (!t.count(v + "0")) out.push_back(v);
  return out;
}

Tree subtree_at(const Tree& t, const std::string& v) {
  Tree out;
  for (const auto& u : t)
    if (u.size() >= v.size() && u.compare(0, v.size(), v) == 0)
      out.insert(u.substr(v.size()));
  return out;
}

Forest Forest::lambda(uint32_t i) {
  Forest f;
  f.trees_[i] = kCaretTree;
  return f;
}

Forest Forest::from_word(const ForestWord& w) {
  Forest f;
  for (uint32_t i : w) f = forest_mul(f, lambda(i));
  return f;
}

Tree Forest::tree(uint32_t i) const {
  auto it = trees_.find(i);
  return it == trees_.end() ? kTrivialTree : it->second;
}

uint32_t Forest::active_end() const {
  return trees_.empty() ? 0 : trees_.rbegin()->first + 1;
}

uint32_t Forest::length() const {
  uint32_t n = 0;
  for (const auto& [i, t] : trees_) n += static_cast<uint32_t>((t.size() - 1) / 2);
  return n;
}

uint32_t Forest::leaf_count(uint32_t i) const {
  auto it = trees_.find(i);
  return it == trees_.end() ? 1 : static_cast<uint32_t>((it->second.size() + 1) / 2);
}

uint32_t Forest::leaves_through(uint32_t tree_end) const {
  uint32_t n = tree_end;
  for (const auto& [i, t] : trees_) {
    if (i >= tree_end) break;
    n += static_cast<uint32_t>((t.size() - 1) / 2);  // extra leaves beyond one
  }
  return n;
}

LeafAddr Forest::leaf_addr(uint32_t n) const {
  uint32_t base = 0;  // leaves before the current tree
  uint32_t prev = 0;  // tree index after the previous active tree
  for (const auto& [i, t] : trees_) {
    uint32_t gap = i - prev;  // trivial trees before tree i
    if (n < base + gap) return {prev + (n - base), ""};
    base += gap;
    uint32_t lc = static_cast<uint32_t>((t.size() + 1) / 2);
    if (n < base + lc) {
      auto leaves = tree_leaves(t);
      return {i, leaves[n - base]};
    }
    base += lc;
    prev = i + 1;
  }
  return {prev + (n - base), ""};
}

uint32_t Forest::leaf_index(const LeafAddr& a) const {
  uint32_t base = leaves_through(a.tree);
  if (a.path.empty() && !trees_.count(a.tree)) return base;
  auto leaves = tree_leaves(tree(a.tree));
  auto it = std::find(leaves.begin(), leaves.end(), a.path);
  if (it == leaves.end()) throw error("leaf_index: not a leaf address");
  return base + static_cast<uint32_t>(it - leaves.begin());
}

ForestWord Forest::to_word() const {
  // Greedy: the ascending normal form starts with the smallest i such that
  // lambda(i) divides on the left, i.e. tree i is non-trivial.
  ForestWord w;
  Forest cur = *this;
  while (!cur.trivial()) {
    uint32_t i = cur.trees_.begin()->first;
    auto rest = left_divide(lambda(i), cur);
    assert(rest);
    w.push_back(i);
    cur = *rest;
  }
  return w;
}

void Forest::set_tree(uint32_t i, Tree t) {
  if (!tree_valid(t)) throw error("set_tree: invalid tree");
  if (t.size() == 1)
    trees_.erase(i);
  else
    trees_[i] = std::move(t);
}

Forest forest_mul(const Forest& f, const Forest& g) {
  Forest out = f;
  for (const auto& [j, t] : g.active()) {
    LeafAddr la = f.leaf_addr(j);
    Tree cur = out.tree(la.tree);
    for (const auto& u : t) cur.insert(la.path + u);
    out.set_tree(la.tree, std::move(cur));
  }
  return out;
}

Forest forest_union(const Forest& f, const Forest& g) {
  Forest out = f;
  for (const auto& [i, t] : g.active()) {
    Tree cur = out.tree(i);
    cur.insert(t.begin(), t.end());
    out.set_tree(i, std::move(cur));
  }
  return out;
}

Forest forest_intersect(const Forest& f, const Forest& g) {
  Forest out;
  for (const auto& [i, t] : f.active()) {
    Tree other = g.tree(i);
    Tree cur;
    for (const auto& v : t)
      if (other.count(v)) cur.insert(v);
    out.set_tree(i, std::move(cur));
  }
  return out;
}

bool divides_left(const Forest& a, const Forest& b) {
  for (const auto& [i, t] : a.active()) {
    Tree bt = b.tree(i);
    for (const auto& v : t)
      if (!bt.count(v)) return false;
  }
  return true;
}

std::optional<Forest> left_divide(const Forest& a, const Forest& b) {
  if (!divides_left(a, b)) return std::nullopt;
  Forest x;
  uint32_t nl = a.leaves_through(std::max(a.active_end(), b.active_end()));
  for (uint32_t n = 0; n < nl; ++n) {
    LeafAddr la = a.leaf_addr(n);
    Tree below = subtree_at(b.tree(la.tree), la.path);
    if (below.size() > 1) x.set_tree(n, std::move(below));
  }
  return x;
}

std::optional<Forest> strip_right_caret(const Forest& f, uint32_t i) {
  LeafAddr a = f.leaf_addr(i);
  LeafAddr b = f.leaf_addr(i + 1);
  if (a.tree != b.tree || a.path.empty()) return std::nullopt;
  std::string parent = a.path.substr(0, a.path.size() - 1);
  if (a.path != parent + "0" || b.path != parent + "1") return std::nullopt;
  Forest out = f;
  Tree t = f.tree(a.tree);
  t.erase(a.path);
  t.erase(b.path);
  out.set_tree(a.tree, std::move(t));
  return out;
}

std::optional<Forest> right_divide(const Forest& l, const Forest& f) {
  ForestWord w = f.to_word();
  Forest cur = l;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    auto s = strip_right_caret(cur, *it);
    if (!s) return std::nullopt;
    cur = *s;
  }
  return cur;
}

GcrfResult gcrf_forest(const Forest& f, const Forest& g) {
  GcrfResult res{f, g, Forest{}};
  bool progress = true;
  while (progress) {
    progress = false;
    uint32_t nf = res.f_bar.leaves_through(res.f_bar.active_end());
    uint32_t ng = res.g_bar.leaves_through(res.g_bar.active_end());
    uint32_t bound = std::min(nf, ng);  // sibling leaves live inside the active region
    for (uint32_t i = 0; i + 1 < bound; ++i) {
      auto sf = strip_right_caret(res.f_bar, i);
      if (!sf) continue;
      auto sg = strip_right_caret(res.g_bar, i);
      if (!sg) continue;
      res.f_bar = *sf;
      res.g_bar = *sg;
      res.r = forest_mul(Forest::lambda(i), res.r);
      progress = true;
      break;
    }
  }
  return res;
}

namespace {

// Assignment search behind lclm_forest. Each output tree of a common left
// multiple L = P*f = Q*g is either a whole f-tree (with a block of g-trees
// matched inside it) or the mirror image of that. States are pairs of
// cursors into the two tree streams.
struct LclmSearch {
  const Forest& f;
  const Forest& g;
  uint32_t ef, eg;
  std::set<std::pair<uint32_t, uint32_t>> dead;
  // per emitted output tree: (took a tree of f, cursor into the other stream
  // after the match)
  std::vector<std::pair<bool, uint32_t>> choices;

  LclmSearch(const Forest& f_, const Forest& g_)
      : f(f_), g(g_), ef(f_.active_end()), eg(g_.active_end()) {}

  // all cursor values reachable by matching the part of `host` below `v`
  // against consecutive trees of `other` starting at cursor `j`
  std::set<uint32_t> match(const Tree& host, const std::string& v, const Forest& other,
                           uint32_t j) const {
    std::set<uint32_t> res;
    if (subtree_at(host, v) == other.tree(j)) res.insert(j + 1);
    if (host.count(v + "0")) {
      for (uint32_t j1 : match(host, v + "0", other, j))
        for (uint32_t j2 : match(host, v + "1", other, j1)) res.insert(j2);
    }
    return res;
  }

  bool solve(uint32_t i, uint32_t j) {
    if (i >= ef && j >= eg) return true;
    if (dead.count({i, j})) return false;
    Tree fi = f.tree(i);
    for (uint32_t j2 : match(fi, "", g, j)) {
      choices.push_back({true, j2});
      if (solve(i + 1, j2)) return true;
      choices.pop_back();
    }
    Tree gj = g.tree(j);
    for (uint32_t i2 : match(gj, "", f, i)) {
      choices.push_back({false, i2});
      if (solve(i2, j + 1)) return true;
      choices.pop_back();
    }
    dead.insert({i, j});
    return false;
  }
};

}  // namespace

std::optional<LclmResult> lclm_forest(const Forest& f, const Forest& g) {
  LclmSearch s(f, g);
  if (!s.solve(0, 0)) return std::nullopt;

  // Replay the winning choices to assemble a common left multiple.
  Forest l;
  uint32_t i = 0, j = 0, out = 0;
  for (auto [take_f, next] : s.choices) {
    if (take_f) {
      l.set_tree(out, f.tree(i));
      ++i;
      j = next;
    } else {
      l.set_tree(out, g.tree(j));
      ++j;
      i = next;
    }
    ++out;
  }

  auto a = right_divide(l, f);
  auto b = right_divide(l, g);
  if (!a || !b) throw error("lclm_forest: internal witness invalid");
  Forest c = forest_intersect(*a, *b);
  auto p = left_divide(c, *a);
  auto q = left_divide(c, *b);
  if (!p || !q) throw error("lclm_forest: internal projection invalid");
  Forest least = forest_mul(*p, f);
  if (least != forest_mul(*q, g)) throw error("lclm_forest: projection mismatch");
  return LclmResult{*p, *q, least};
}

}  // namespace bv
