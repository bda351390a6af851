#pragma once

#include <string>

#include "bv/fraction.hpp"

namespace bv {

// Words in the generator alphabet: l<i> for carets, s<i> for crossings with
// an apostrophe marking the inverse, "1" for the empty word.
std::string format(const Forest& f);
std::string format(const BraidWord& w);
std::string format(const MonoidElt& x);
std::string format(const FractionTriple& t);  // "NUM / DEN"

// Grammar: Expr := Product ['/' Product]; Product := Atom+;
// Atom := l<i> | s<i>['] | 1 | '(' Product ')' | inv '(' Product ')'.
// Indices are decimal naturals < 2^32; at most one top-level '/'.
// A division of inv-free products keeps its exact triple shape; anything
// with inv is folded through the group operations instead.
FractionTriple parse_element(const std::string& text, Flavor flavor);

std::string to_json(const FractionTriple& t);
FractionTriple triple_from_json(const std::string& text);

}  // namespace bv
