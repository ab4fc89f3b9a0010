#pragma once

#include <string_view>

#include "tsg/group.hpp"

namespace tsg {

// Group spec grammar:
//   spec := term ('x' term)*          direct product, left-associative
//   term := 'C' n | 'D' n | 'S' n | 'A' n | 'semidirect:' path
// D<n> has order 2n. A semidirect term must be the last term since the path
// runs to the end of the input.
FiniteGroup parse_group_spec(std::string_view text);

// Semidirect description file:
//   H <spec>
//   K <spec>
//   <k element>: <image of each H element, in H index order>
// Blank lines and lines starting with '#' are ignored.
FiniteGroup load_semidirect(const std::string& path);
FiniteGroup parse_semidirect(std::string_view contents);

// Element names: any exact label; 'e' for the identity; words such as
// g^3, ts^5, s^-1, τσ^2 in cyclic and dihedral groups; cycle notation
// "(243)" or "(2 4 3)(1 5)" in permutation groups (rightmost cycle first);
// "(x,y)" pairs in products.
element_t parse_element(const FiniteGroup& group, std::string_view text);

// Comma-separated element names; commas inside parentheses do not split.
ElementSubset parse_subset(const FiniteGroup& group, std::string_view text);

}  // namespace tsg
