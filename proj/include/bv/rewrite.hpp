#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bv/common.hpp"

namespace bv {

using IdxWord = std::vector<uint32_t>;

// A rule schema over two-letter windows: given the pair of indices at a
// position, either produce a replacement word or decline.
struct Rule {
  std::string name;
  std::function<std::optional<IdxWord>(uint32_t, uint32_t)> apply;
};

Rule forest_rule();            // q m -> m (q+1) when m < q
Rule hedge_rule();             // q m -> m (q+1) when m <= q
Rule hedge_rule_descending();  // m b -> (b-1) m when m < b

enum class Strategy { Leftmost, Rightmost };

struct fuel_error : error {
  IdxWord partial;
  fuel_error(const std::string& what, IdxWord w) : error(what), partial(std::move(w)) {}
};

struct NormalizeReport {
  IdxWord word;
  uint64_t steps = 0;
};

// fuel 0 selects the default budget of 10*len^2 + 64
NormalizeReport normalize(IdxWord w, const std::vector<Rule>& rules, Strategy strategy,
                          uint64_t fuel = 0, std::vector<IdxWord>* trace = nullptr);

struct Peak {
  IdxWord source;
  IdxWord left, right;        // the two one-step reducts
  IdxWord left_nf, right_nf;  // their normal forms
  bool joins = false;
};

struct ConfluenceReport {
  uint64_t peaks = 0;
  std::vector<Peak> examined;  // only filled when keep_all
  std::vector<Peak> failures;
  bool ok() const { return failures.empty(); }
};

// Enumerates all length-2 and length-3 words with indices <= index_bound and
// checks joinability of every pair of distinct one-step reducts.
ConfluenceReport check_local_confluence(const std::vector<Rule>& rules, uint32_t index_bound,
                                        bool keep_all = false, uint64_t fuel = 0);

}  // namespace bv
