#include "bv/braid.hpp"
#include "bv/common.hpp"

// Dehornoy handle reduction. A sigma_i-handle is a factor
// sigma_i^e v sigma_i^-e whose interior v contains no sigma_i and no
// sigma_(i-1). We always reduce the handle with the earliest closing
// letter: anything nested inside it would close sooner, so the chosen
// handle is innermost and the reduction sequence terminates. A nonempty
// word with no handle at all is sigma-definite in its lowest index and
// therefore a non-trivial braid.

namespace bv {

namespace {

struct Handle {
  size_t open, close;
};

std::optional<Handle> first_handle(const BraidWord& w) {
  // prev[i] = position of the latest sigma_i seen so far
  std::vector<size_t> prev(strand_bound(w), SIZE_MAX);
  for (size_t q = 0; q < w.size(); ++q) {
    uint32_t i = w[q].index;
    size_t p = prev[i];
    if (p != SIZE_MAX && w[p].sign == -w[q].sign) {
      bool blocked = false;
      for (size_t r = p + 1; i > 0 && r < q; ++r) blocked = blocked || w[r].index == i - 1;
      if (!blocked) return Handle{p, q};
    }
    prev[i] = q;
  }
  return std::nullopt;
}

}  // namespace

bool handle_trivial(BraidWord w) {
  w = free_reduce(std::move(w));
  uint64_t fuel = 1u << 22;
  while (!w.empty()) {
    auto h = first_handle(w);
    if (!h) return false;
    if (fuel-- == 0) throw error("handle_trivial: reduction budget exhausted");
    uint32_t i = w[h->open].index;
    int8_t e = w[h->open].sign;
    BraidWord out(w.begin(), w.begin() + h->open);
    for (size_t p = h->open + 1; p < h->close; ++p) {
      if (w[p].index == i + 1) {
        out.push_back({i + 1, static_cast<int8_t>(-e)});
        out.push_back({i, w[p].sign});
        out.push_back({i + 1, e});
      } else {
        out.push_back(w[p]);
      }
    }
    out.insert(out.end(), w.begin() + h->close + 1, w.end());
    w = free_reduce(std::move(out));
  }
  return true;
}

}  // namespace bv
