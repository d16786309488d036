#pragma once

#include <string>

#include "quotnef/quot.hpp"

namespace quotnef {

// Fixed-point decimal with exactly six places, rounding half away from zero.
// The only spot where a rational loses exactness; used for SVG and TikZ
// coordinates and the approximate column of legends.
std::string dec6(const Rat& x);

// Cross-section drawings of the nef-cone bounds for d >= 2, g >= 1: the frame
// triangle A = O(1) + mu_0 L_0, B = theta_d, C = L_0, the lower-bound
// quadrilateral D B C E, and a legend with the exact tau and rho values.
// Output depends only on the parameters, byte for byte. All three throw
// std::invalid_argument when there is no picture (d = 1 or g = 0).
std::string render_svg(const CurveParams& p);
std::string render_tikz(const CurveParams& p);
std::string render_table(const CurveParams& p);

}  // namespace quotnef
