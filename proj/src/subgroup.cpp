#include "bv/subgroup.hpp"

#include "bv/common.hpp"

namespace bv {

SimplicityReport is_simple_forest(const Forest& f) {
  SimplicityReport r;
  r.is_simple = f.active_end() <= 1;
  if (r.is_simple) r.type_k = f.length();
  return r;
}

SimplicityReport is_simple_elt(const MonoidElt& x, Flavor flavor) {
  SimplicityReport r = is_simple_forest(x.forest);
  if (!r.is_simple) return r;
  bool bok = in_Bk(x.braid, *r.type_k, flavor);
  r.braid_ok = bok;
  r.is_simple = bok;
  if (!bok) r.type_k.reset();
  return r;
}

bool is_member(const FractionTriple& t) {
  FractionTriple r = t.normalized ? t : reduce(t);
  SimplicityReport a = is_simple_forest(r.num);
  SimplicityReport b = is_simple_forest(r.den);
  return a.is_simple && b.is_simple && *a.type_k == *b.type_k &&
         in_Bk(r.braid, *a.type_k, r.flavor);
}

bool simple_product_bound(const MonoidElt& x, const ForestWord& g, Flavor flavor) {
  SimplicityReport r = is_simple_elt(x, flavor);
  if (!r.is_simple) throw error("simple_product_bound: element is not simple");
  uint64_t k = *r.type_k;
  for (size_t j = 0; j < g.size(); ++j)
    if (g[j] > k + j) return false;
  return true;
}

uint64_t PresentationReport::failures() const {
  uint64_t n = 0;
  for (const auto& c : checks) n += c.ok ? 0 : 1;
  return n;
}

namespace {

std::string lname(uint32_t i) { return "l" + std::to_string(i); }
std::string sname(uint32_t i, int8_t e) {
  return "s" + std::to_string(i) + (e < 0 ? "'" : "");
}

struct Harness {
  Flavor fl;
  PresentationReport rep;

  FractionTriple l(uint32_t i) { return embed_forest(Forest::lambda(i), fl); }
  FractionTriple s(uint32_t i, int8_t e = 1) {
    return embed_braid({sig(i, e)}, fl);
  }
  void check(const std::string& name, const std::vector<FractionTriple>& lhs,
             const std::vector<FractionTriple>& rhs) {
    auto fold = [&](const std::vector<FractionTriple>& v) {
      FractionTriple acc = frac_identity(fl);
      for (const auto& g : v) acc = frac_mul(acc, g);
      return acc;
    };
    FractionTriple a = fold(lhs);
    FractionTriple b = fold(rhs);
    rep.checks.push_back({name, frac_eq(a, b), a, b});
  }
};

}  // namespace

PresentationReport verify_presentation(uint32_t max_index, Flavor flavor) {
  if (max_index < 2) throw error("verify_presentation: max_index must be >= 2");
  const uint32_t n = max_index;
  Harness h{flavor, {}};
  const int8_t signs[2] = {1, -1};

  // caret shuffles
  for (uint32_t q = 1; q + 1 <= n; ++q)
    for (uint32_t m = 0; m < q; ++m)
      h.check(lname(q) + " " + lname(m) + " = " + lname(m) + " " + lname(q + 1),
              {h.l(q), h.l(m)}, {h.l(m), h.l(q + 1)});

  // distant crossings commute
  for (uint32_t q = 2; q <= n; ++q)
    for (uint32_t m = 0; m + 2 <= q; ++m)
      h.check(sname(q, 1) + " " + sname(m, 1) + " = " + sname(m, 1) + " " + sname(q, 1),
              {h.s(q), h.s(m)}, {h.s(m), h.s(q)});

  // braid relation
  for (uint32_t m = 0; m + 1 <= n; ++m)
    h.check(sname(m, 1) + " " + sname(m + 1, 1) + " " + sname(m, 1) + " = " +
                sname(m + 1, 1) + " " + sname(m, 1) + " " + sname(m + 1, 1),
            {h.s(m), h.s(m + 1), h.s(m)}, {h.s(m + 1), h.s(m), h.s(m + 1)});

  for (int8_t e : signs) {
    // crossing passes over a lower caret, index bumps
    for (uint32_t q = 1; q + 1 <= n; ++q)
      for (uint32_t m = 0; m < q; ++m)
        h.check(sname(q, e) + " " + lname(m) + " = " + lname(m) + " " + sname(q + 1, e),
                {h.s(q, e), h.l(m)}, {h.l(m), h.s(q + 1, e)});

    // crossing meets its own caret
    for (uint32_t m = 0; m + 1 <= n; ++m) {
      h.check(sname(m, e) + " " + lname(m) + " = " + lname(m + 1) + " " +
                  sname(m, e) + " " + sname(m + 1, e),
              {h.s(m, e), h.l(m)}, {h.l(m + 1), h.s(m, e), h.s(m + 1, e)});
      h.check(sname(m, e) + " " + lname(m + 1) + " = " + lname(m) + " " +
                  sname(m + 1, e) + " " + sname(m, e),
              {h.s(m, e), h.l(m + 1)}, {h.l(m), h.s(m + 1, e), h.s(m, e)});
    }

    // crossing far below a caret
    for (uint32_t m = 2; m <= n; ++m)
      for (uint32_t q = 0; q + 1 < m; ++q)
        h.check(sname(q, e) + " " + lname(m) + " = " + lname(m) + " " + sname(q, e),
                {h.s(q, e), h.l(m)}, {h.l(m), h.s(q, e)});
  }

  if (flavor == Flavor::Symmetric) {
    for (uint32_t m = 0; m <= n; ++m)
      h.check(sname(m, 1) + " " + sname(m, 1) + " = 1", {h.s(m), h.s(m)}, {});
  } else {
    for (uint32_t m = 0; m <= n; ++m) {
      h.check(sname(m, 1) + " " + sname(m, -1) + " = 1", {h.s(m), h.s(m, -1)}, {});
      h.check(sname(m, -1) + " " + sname(m, 1) + " = 1", {h.s(m, -1), h.s(m)}, {});
    }
  }
  return std::move(h.rep);
}

}  // namespace bv
