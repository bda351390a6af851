#pragma once

#include <string>
#include <vector>

#include "bv/fraction.hpp"

namespace bv {

struct Crossing {
  uint32_t index = 0;
  int8_t sign = 1;
  bool operator==(const Crossing&) const = default;
};

// Layout-ready view of a triple: numerator forest on top, one crossing per
// braid letter in word order, denominator forest drawn upside down below.
struct DiagramSpec {
  Forest num, den;
  std::vector<Crossing> crossings;
  uint32_t strands = 1;
};

// reduce_braid toggles free reduction of the braid word before drawing;
// either way the crossing list matches the drawn word letter for letter.
DiagramSpec make_diagram(const FractionTriple& t, bool reduce_braid = true);

// Self-contained SVG. Each crossing is a <g class="crossing"> tagged with
// data-index and data-sign; the under strand breaks at the crossing point.
std::string render_svg(const DiagramSpec& d);

// Terminal sketch. Lossy: crossing signs are noted in the labels only,
// over/under is not drawn.
std::string render_ascii(const DiagramSpec& d);

}  // namespace bv
