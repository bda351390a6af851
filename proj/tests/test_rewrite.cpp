#include "bv/rewrite.hpp"

#include <numeric>

#include "bv/forest.hpp"
#include "bv/hedge.hpp"
#include "bv/rng.hpp"
#include "doctest.h"

using namespace bv;

namespace {

IdxWord random_word(Rng& rng, uint32_t max_len, uint32_t max_idx) {
  IdxWord w;
  for (uint32_t i = rng.uniform(0, max_len); i--;) w.push_back(rng.uniform(0, max_idx));
  return w;
}

uint64_t index_sum(const IdxWord& w) { return std::accumulate(w.begin(), w.end(), uint64_t{0}); }

}  // namespace

TEST_CASE("single rewrite steps") {
  auto rep = normalize({1, 0}, {forest_rule()}, Strategy::Leftmost);
  CHECK(rep.word == IdxWord{0, 2});
  CHECK(rep.steps == 1);

  rep = normalize({2, 1, 0}, {forest_rule()}, Strategy::Leftmost);
  CHECK(rep.word == IdxWord{0, 2, 4});
  CHECK(rep.steps == 3);

  rep = normalize({5, 5, 5}, {hedge_rule()}, Strategy::Leftmost);
  CHECK(rep.word == IdxWord{5, 6, 7});
  CHECK(rep.steps == 3);

  // already normal
  rep = normalize({0, 1, 1}, {forest_rule()}, Strategy::Leftmost);
  CHECK(rep.word == IdxWord{0, 1, 1});
  CHECK(rep.steps == 0);

  CHECK(normalize({}, {forest_rule()}, Strategy::Leftmost).word.empty());
}

TEST_CASE("strategies agree on the normal form") {
  Rng rng(4001);
  for (int it = 0; it < 200; ++it) {
    IdxWord w = random_word(rng, 7, 5);
    auto l = normalize(w, {forest_rule()}, Strategy::Leftmost);
    auto r = normalize(w, {forest_rule()}, Strategy::Rightmost);
    CHECK(l.word == r.word);
    auto lh = normalize(w, {hedge_rule()}, Strategy::Leftmost);
    auto rh = normalize(w, {hedge_rule()}, Strategy::Rightmost);
    CHECK(lh.word == rh.word);
  }
}

TEST_CASE("normal forms match the monoids") {
  Rng rng(4002);
  for (int it = 0; it < 150; ++it) {
    IdxWord w = random_word(rng, 6, 4);
    IdxWord nf = normalize(w, {forest_rule()}, Strategy::Leftmost).word;
    for (size_t p = 0; p + 1 < nf.size(); ++p) CHECK(nf[p] <= nf[p + 1]);
    CHECK(Forest::from_word(nf) == Forest::from_word(w));
    CHECK(nf == Forest::from_word(w).to_word());

    IdxWord hf = normalize(w, {hedge_rule()}, Strategy::Leftmost).word;
    for (size_t p = 0; p + 1 < hf.size(); ++p) CHECK(hf[p] < hf[p + 1]);
    CHECK(Hedge::from_word(hf) == Hedge::from_word(w));
    CHECK(hf == Hedge::from_word(w).ascending_word());
  }
}

TEST_CASE("descending hedge system") {
  CHECK(normalize({0, 1}, {hedge_rule_descending()}, Strategy::Leftmost).word == IdxWord{0, 0});

  Rng rng(4003);
  for (int it = 0; it < 150; ++it) {
    IdxWord w = random_word(rng, 6, 4);
    IdxWord nf = normalize(w, {hedge_rule_descending()}, Strategy::Leftmost).word;
    for (size_t p = 0; p + 1 < nf.size(); ++p) CHECK(nf[p] >= nf[p + 1]);
    CHECK(Hedge::from_word(nf) == Hedge::from_word(w));
    CHECK(nf == Hedge::from_word(w).descending_word());
  }
}

TEST_CASE("each step moves the index sum by one") {
  Rng rng(4004);
  for (int it = 0; it < 100; ++it) {
    IdxWord w = random_word(rng, 6, 4);
    std::vector<IdxWord> trace;
    normalize(w, {hedge_rule()}, Strategy::Leftmost, 0, &trace);
    for (size_t s = 0; s + 1 < trace.size(); ++s)
      CHECK(index_sum(trace[s + 1]) == index_sum(trace[s]) + 1);

    trace.clear();
    normalize(w, {hedge_rule_descending()}, Strategy::Rightmost, 0, &trace);
    for (size_t s = 0; s + 1 < trace.size(); ++s)
      CHECK(index_sum(trace[s + 1]) + 1 == index_sum(trace[s]));
  }
}

TEST_CASE("fuel exhaustion reports the partial word") {
  CHECK_THROWS_AS(normalize({2, 1, 0}, {forest_rule()}, Strategy::Leftmost, 1), fuel_error);
  try {
    normalize({2, 1, 0}, {forest_rule()}, Strategy::Leftmost, 1);
  } catch (const fuel_error& e) {
    CHECK(e.partial == IdxWord{1, 3, 0});
    CHECK(Forest::from_word(e.partial) == Forest::from_word({2, 1, 0}));
  }
}

TEST_CASE("local confluence of the three schemas") {
  for (auto rule : {forest_rule(), hedge_rule(), hedge_rule_descending()}) {
    ConfluenceReport rep = check_local_confluence({rule}, 4, true);
    CHECK(rep.ok());
    CHECK(rep.peaks > 0);
    CHECK(rep.examined.size() == rep.peaks);
    for (const auto& pk : rep.examined) CHECK(pk.joins);
  }
}

TEST_CASE("a non-confluent system is detected") {
  Rule r1{"bad1", [](uint32_t a, uint32_t b) -> std::optional<IdxWord> {
            if (a == 0 && b == 1) return IdxWord{2, 2};
            return std::nullopt;
          }};
  Rule r2{"bad2", [](uint32_t a, uint32_t b) -> std::optional<IdxWord> {
            if (a == 0 && b == 1) return IdxWord{3, 3};
            return std::nullopt;
          }};
  ConfluenceReport rep = check_local_confluence({r1, r2}, 3);
  CHECK(!rep.ok());
  REQUIRE(!rep.failures.empty());
  bool pair_reported = false;
  for (const auto& pk : rep.failures) {
    CHECK(pk.left_nf != pk.right_nf);
    pair_reported = pair_reported || pk.source == IdxWord{0, 1};
  }
  CHECK(pair_reported);
}
