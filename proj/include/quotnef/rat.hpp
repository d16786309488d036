#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace quotnef {

// Exact rational scalar. GMP keeps values in lowest terms with positive
// denominator after canonicalize(); every constructor path below ends in a
// canonical value, and all arithmetic on canonical values stays canonical.
// No floating-point conversion is exposed anywhere; decimal strings are
// produced only by the render layer.
using Rat = mpq_class;

// mpq_class(num, den) does not reduce the fraction, so always build through
// this helper.
inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q" or "p" with optional leading minus. Rejects anything else,
// including a zero denominator.
Rat rat_parse(const std::string& s);

// Renders "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& r);

using RatVec = std::vector<Rat>;

RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_scale(const Rat& s, const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);
bool is_zero_vec(const RatVec& v);

}  // namespace quotnef
