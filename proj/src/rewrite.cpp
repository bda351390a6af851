#include "bv/rewrite.hpp"

#include <algorithm>
#include <set>

namespace bv {

Rule forest_rule() {
  return {"lambda", [](uint32_t q, uint32_t m) -> std::optional<IdxWord> {
            if (m < q) return IdxWord{m, q + 1};
            return std::nullopt;
          }};
}

Rule hedge_rule() {
  return {"nu", [](uint32_t q, uint32_t m) -> std::optional<IdxWord> {
            if (m <= q) return IdxWord{m, q + 1};
            return std::nullopt;
          }};
}

Rule hedge_rule_descending() {
  return {"nu-desc", [](uint32_t m, uint32_t b) -> std::optional<IdxWord> {
            if (m < b) return IdxWord{b - 1, m};
            return std::nullopt;
          }};
}

namespace {

struct Redex {
  size_t pos;
  IdxWord replacement;
};

std::optional<Redex> find_redex(const IdxWord& w, const std::vector<Rule>& rules,
                                Strategy strategy) {
  if (w.size() < 2) return std::nullopt;
  if (strategy == Strategy::Leftmost) {
    for (size_t p = 0; p + 1 < w.size(); ++p)
      for (const auto& r : rules)
        if (auto rep = r.apply(w[p], w[p + 1])) return Redex{p, std::move(*rep)};
  } else {
    for (size_t p = w.size() - 1; p-- > 0;)
      for (const auto& r : rules)
        if (auto rep = r.apply(w[p], w[p + 1])) return Redex{p, std::move(*rep)};
  }
  return std::nullopt;
}

IdxWord apply_at(const IdxWord& w, size_t pos, const IdxWord& replacement) {
  IdxWord out(w.begin(), w.begin() + pos);
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), w.begin() + pos + 2, w.end());
  return out;
}

}  // namespace

NormalizeReport normalize(IdxWord w, const std::vector<Rule>& rules, Strategy strategy,
                          uint64_t fuel, std::vector<IdxWord>* trace) {
  if (fuel == 0) fuel = 10 * static_cast<uint64_t>(w.size()) * w.size() + 64;
  NormalizeReport rep;
  if (trace) trace->push_back(w);
  while (auto rd = find_redex(w, rules, strategy)) {
    if (rep.steps == fuel) throw fuel_error("normalize: fuel exhausted", std::move(w));
    w = apply_at(w, rd->pos, rd->replacement);
    ++rep.steps;
    if (trace) trace->push_back(w);
  }
  rep.word = std::move(w);
  return rep;
}

ConfluenceReport check_local_confluence(const std::vector<Rule>& rules, uint32_t index_bound,
                                        bool keep_all, uint64_t fuel) {
  ConfluenceReport rep;
  auto reducts = [&](const IdxWord& w) {
    std::set<IdxWord> out;
    for (size_t p = 0; p + 1 < w.size(); ++p)
      for (const auto& r : rules)
        if (auto rp = r.apply(w[p], w[p + 1])) out.insert(apply_at(w, p, *rp));
    return out;
  };
  auto visit = [&](const IdxWord& w) {
    auto rs = reducts(w);
    if (rs.size() < 2) return;
    std::vector<IdxWord> v(rs.begin(), rs.end());
    for (size_t a = 0; a < v.size(); ++a)
      for (size_t b = a + 1; b < v.size(); ++b) {
        Peak pk;
        pk.source = w;
        pk.left = v[a];
        pk.right = v[b];
        pk.left_nf = normalize(v[a], rules, Strategy::Leftmost, fuel).word;
        pk.right_nf = normalize(v[b], rules, Strategy::Leftmost, fuel).word;
        pk.joins = pk.left_nf == pk.right_nf;
        ++rep.peaks;
        if (!pk.joins) rep.failures.push_back(pk);
        if (keep_all) rep.examined.push_back(std::move(pk));
      }
  };
  for (uint32_t a = 0; a <= index_bound; ++a)
    for (uint32_t b = 0; b <= index_bound; ++b) {
      visit({a, b});
      for (uint32_t c = 0; c <= index_bound; ++c) visit({a, b, c});
    }
  return rep;
}

}  // namespace bv
