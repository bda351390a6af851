#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bv {

// A tree is a finite prefix-closed, sibling-complete set of binary addresses
// over {'0','1'}. The empty address is the root; the trivial tree is {""}.
using Tree = std::set<std::string>;

extern const Tree kTrivialTree;  // {""}
extern const Tree kCaretTree;    // {"", "0", "1"}

bool tree_valid(const Tree& t);
bool tree_is_leaf(const Tree& t, const std::string& v);
std::vector<std::string> tree_leaves(const Tree& t);  // left-to-right order
Tree subtree_at(const Tree& t, const std::string& v);

struct LeafAddr {
  uint32_t tree = 0;
  std::string path;
  auto operator<=>(const LeafAddr&) const = default;
};

using ForestWord = std::vector<uint32_t>;

// A forest is a sequence of trees indexed by the naturals, all but finitely
// many trivial. Leaves are numbered globally: left to right inside a tree,
// trees in index order. Only the non-trivial trees are stored.
class Forest {
 public:
  Forest() = default;

  static Forest lambda(uint32_t i);  // one caret at position i
  static Forest from_word(const ForestWord& w);

  bool trivial() const { return trees_.empty(); }
  Tree tree(uint32_t i) const;
  const std::map<uint32_t, Tree>& active() const { return trees_; }
  uint32_t active_end() const;  // 1 + largest non-trivial index (0 if none)
  uint32_t length() const;      // total caret count
  uint32_t leaf_count(uint32_t i) const;

  // number of leaves carried by trees [0, tree_end)
  uint32_t leaves_through(uint32_t tree_end) const;
  LeafAddr leaf_addr(uint32_t n) const;
  uint32_t leaf_index(const LeafAddr& a) const;

  ForestWord to_word() const;  // ascending normal form

  void set_tree(uint32_t i, Tree t);  // drops trivial trees, validates

  bool operator==(const Forest&) const = default;

 private:
  std::map<uint32_t, Tree> trees_;
};

Forest forest_mul(const Forest& f, const Forest& g);
Forest forest_union(const Forest& f, const Forest& g);
Forest forest_intersect(const Forest& f, const Forest& g);

// b = a * x for some forest x
bool divides_left(const Forest& a, const Forest& b);
std::optional<Forest> left_divide(const Forest& a, const Forest& b);

// f = f' * lambda(i); defined iff leaves i and i+1 of f are siblings
std::optional<Forest> strip_right_caret(const Forest& f, uint32_t i);

// p with l = p * f
std::optional<Forest> right_divide(const Forest& l, const Forest& f);

struct GcrfResult {
  Forest f_bar, g_bar, r;  // f = f_bar * r, g = g_bar * r
};
GcrfResult gcrf_forest(const Forest& f, const Forest& g);

struct LclmResult {
  Forest p, q, l;  // l = p * f = q * g, least such
};
std::optional<LclmResult> lclm_forest(const Forest& f, const Forest& g);

}  // namespace bv
