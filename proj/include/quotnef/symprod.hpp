#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quotnef/cone.hpp"
#include "quotnef/rat.hpp"

namespace quotnef {

// Where a Nagata parameter value came from. Known values are proven in the
// literature; conjectural ones depend on the Nagata conjecture and are only
// accepted behind an explicit opt-in; user values come from a config override.
enum class TProv { Known, Conjectural, User };

struct TValue {
    Rat value;
    TProv prov;
};

// Geometric setup shared by every computation: a curve of genus g, the
// quotient length d, and the rank n of the trivial bundle. For g = 0 the
// bundle may split as O(a_1) + ... + O(a_n) with the degrees kept ascending in
// `splitting`; positive genus always uses the trivial bundle. Statements
// about g >= 2 hold for a very general curve only, so that flag is mandatory
// there.
struct CurveParams {
    long g = 0;
    long d = 1;
    long n = 1;
    bool very_general = false;
    std::optional<TValue> t;
    std::optional<std::vector<long>> splitting;
};

// Throws std::invalid_argument when the fields violate the rules above.
void validate_params(const CurveParams& p);

// Gonality of the curves modeled here: 1 for g=0, 2 for g=1, floor((g+3)/2)
// for a very general curve of genus g >= 2.
long gonality(long g);

// Proven Nagata parameter values: t=1,2,9/5 for g=1,2,3 and t=sqrt(g) for
// perfect squares. Everything else is conjectural (t=sqrt(g), irrational) and
// never returned here; a rational stand-in can only arrive via config.
std::optional<TValue> builtin_t(long g);

// (m+g-1)/(mg), the slope threshold attached to the symmetric product C^(m).
// Requires g >= 1.
Rat mu0(long g, long m);

// Coordinate systems on N^1(C^(d)). X_THETA is the canonical hub ([x] and
// theta exist for every d >= 1); the others are derived. ALPHA_L0 only makes
// sense for d=2 with a Nagata parameter at hand.
enum class SymBasis { X_THETA, X_DELTA, THETA_L0, X_L0, ALPHA_L0 };

std::string basis_name(SymBasis b);
std::optional<SymBasis> basis_from_name(const std::string& s);

// Dimension of N^1(C^(d)): 1 on the degree line (d = 1, where theta_1 = g[x],
// or g = 0, where C^(d) = P^d), else 2.
std::size_t sym_dim(const CurveParams& p);

// A divisor class on C^(d). Two coordinates generically; a single coordinate
// (the multiple of [x]) on the degree line.
struct DivClassSym {
    CurveParams params;
    SymBasis basis;
    RatVec coords;
};

DivClassSym sym_class(const CurveParams& p, SymBasis basis, RatVec coords);
DivClassSym sym_x(const CurveParams& p);
DivClassSym sym_theta(const CurveParams& p);
DivClassSym sym_delta_half(const CurveParams& p);
DivClassSym sym_L0(const CurveParams& p);
DivClassSym sym_alpha_t(const CurveParams& p);

// Exact change of coordinates; round trips are identities. Throws when the
// target basis is not valid for the parameters (ALPHA_L0 without t or d != 2).
DivClassSym convert(const DivClassSym& c, SymBasis to);

DivClassSym sym_add(const DivClassSym& a, const DivClassSym& b);
DivClassSym sym_scale(const Rat& s, const DivClassSym& c);

// Test curves in C^(d): the small diagonal delta = {d.p}, the shifted point
// delta' = {x + (d-1)p}, and the line l' of a gonality pencil (needs
// d >= gonality).
enum class SymCurve { SmallDiagonal, ShiftedPoint, GonalLine };

std::string sym_curve_name(SymCurve c);
bool sym_curve_available(const CurveParams& p, SymCurve c);

// Intersection numbers against the canonical basis: delta -> (d, d^2 g),
// delta' -> (1, g), l' -> (1, 0), listed as ([x] value, theta value).
RatVec sym_curve_pairing(const CurveParams& p, SymCurve c);

Rat pair_sym(const DivClassSym& c, SymCurve curve);

// Nef(C^(d)) with its knowledge status, in canonical coordinates. The lower
// bound <L_0, theta> is unconditional. exact=true (and lower == upper) when
// d = 1 (nonnegative degree), d >= gonality, or d = 2 with a Nagata parameter
// (then <L_0, alpha_t>); otherwise upper is the dual of the delta, delta'
// pairings and strictly contains lower.
struct SymNefCones {
    Cone lower;
    Cone upper;
    bool exact;
};

SymNefCones nef_cone_sym(const CurveParams& p);

}  // namespace quotnef
