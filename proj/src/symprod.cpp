#include "quotnef/symprod.hpp"

#include <stdexcept>

#include "quotnef/linalg.hpp"

namespace quotnef {

void validate_params(const CurveParams& p) {
    if (p.g < 0) throw std::invalid_argument("params: genus must be nonnegative");
    if (p.d < 1) throw std::invalid_argument("params: quotient length must be at least 1");
    if (p.n < 1) throw std::invalid_argument("params: bundle rank must be at least 1");
    if (p.g >= 2 && !p.very_general)
        throw std::invalid_argument("params: g >= 2 results hold for very general curves only");
    if (p.splitting) {
        if (p.g != 0) throw std::invalid_argument("params: splitting type requires genus 0");
        if (p.splitting->empty()) throw std::invalid_argument("params: empty splitting type");
        if (p.n != static_cast<long>(p.splitting->size()))
            throw std::invalid_argument("params: rank must equal the number of summands");
        for (std::size_t i = 1; i < p.splitting->size(); ++i)
            if ((*p.splitting)[i - 1] > (*p.splitting)[i])
                throw std::invalid_argument("params: splitting degrees must be ascending");
    } else if (p.g == 0) {
        throw std::invalid_argument("params: genus 0 requires a splitting type");
    }
    if (p.t && p.t->value <= 0)
        throw std::invalid_argument("params: Nagata parameter must be positive");
}

long gonality(long g) {
    if (g < 0) throw std::invalid_argument("gonality: negative genus");
    if (g == 0) return 1;
    if (g == 1) return 2;
    return (g + 3) / 2;
}

std::optional<TValue> builtin_t(long g) {
    if (g == 1) return TValue{rat(1), TProv::Known};
    if (g == 2) return TValue{rat(2), TProv::Known};
    if (g == 3) return TValue{rat(9, 5), TProv::Known};
    for (long r = 2; r * r <= g; ++r)
        if (r * r == g) return TValue{rat(r), TProv::Known};
    return std::nullopt;
}

Rat mu0(long g, long m) {
    if (g < 1 || m < 1) throw std::invalid_argument("mu0: requires g >= 1 and m >= 1");
    return rat(m + g - 1, m * g);
}

std::string basis_name(SymBasis b) {
    switch (b) {
        case SymBasis::X_THETA: return "X_THETA";
        case SymBasis::X_DELTA: return "X_DELTA";
        case SymBasis::THETA_L0: return "THETA_L0";
        case SymBasis::X_L0: return "X_L0";
        case SymBasis::ALPHA_L0: return "ALPHA_L0";
    }
    throw std::logic_error("basis_name: unreachable");
}

std::optional<SymBasis> basis_from_name(const std::string& s) {
    for (SymBasis b : {SymBasis::X_THETA, SymBasis::X_DELTA, SymBasis::THETA_L0,
                       SymBasis::X_L0, SymBasis::ALPHA_L0})
        if (basis_name(b) == s) return b;
    return std::nullopt;
}

namespace {

// g = 0 (where theta vanishes on P^d) and d = 1 (where theta_1 = g[x]) both
// collapse N^1 to the degree line; everything is a multiple of [x] there.
bool degree_line(const CurveParams& p) {
    return p.g == 0 || p.d == 1;
}

// The theta coefficient of [x]-collapse: theta = s[x] on the degree line.
long theta_in_x_units(const CurveParams& p) {
    return p.d == 1 ? p.g : 0;
}

void require_basis_valid(const CurveParams& p, SymBasis b) {
    if (b == SymBasis::ALPHA_L0) {
        if (p.g < 1) throw std::invalid_argument("sym: ALPHA_L0 basis needs positive genus");
        if (p.d != 2) throw std::invalid_argument("sym: ALPHA_L0 basis needs d = 2");
        if (!p.t) throw std::invalid_argument("sym: ALPHA_L0 basis needs a Nagata parameter");
    }
}

// Columns of the basis change into canonical {[x], theta} coordinates: each
// basis vector expressed as c_x [x] + c_theta theta. Built from
// Delta_d/2 = (d+g-1)[x] - theta, L_0 = dg [x] - theta and, for d = 2,
// alpha_t = (t+1)[x] - Delta_2/2 = (t-g)[x] + theta.
RatMat basis_to_canonical(const CurveParams& p, SymBasis b) {
    Rat e = rat(p.d + p.g - 1);
    Rat dg = rat(p.d * p.g);
    switch (b) {
        case SymBasis::X_THETA: return RatMat{{rat(1), rat(0)}, {rat(0), rat(1)}};
        case SymBasis::X_DELTA: return RatMat{{rat(1), e}, {rat(0), rat(-1)}};
        case SymBasis::THETA_L0: return RatMat{{rat(0), dg}, {rat(1), rat(-1)}};
        case SymBasis::X_L0: return RatMat{{rat(1), dg}, {rat(0), rat(-1)}};
        case SymBasis::ALPHA_L0: {
            Rat t = p.t->value;
            return RatMat{{t - rat(p.g), rat(2 * p.g)}, {rat(1), rat(-1)}};
        }
    }
    throw std::logic_error("basis_to_canonical: unreachable");
}

bool same_space(const CurveParams& a, const CurveParams& b) {
    return a.g == b.g && a.d == b.d;
}

}  // namespace

DivClassSym sym_class(const CurveParams& p, SymBasis basis, RatVec coords) {
    validate_params(p);
    require_basis_valid(p, basis);
    std::size_t want = degree_line(p) ? 1 : 2;
    if (coords.size() != want)
        throw std::invalid_argument("sym_class: expected " + std::to_string(want) + " coordinates");
    return DivClassSym{p, basis, std::move(coords)};
}

DivClassSym sym_x(const CurveParams& p) {
    if (degree_line(p)) return sym_class(p, SymBasis::X_THETA, {rat(1)});
    return sym_class(p, SymBasis::X_THETA, {rat(1), rat(0)});
}

DivClassSym sym_theta(const CurveParams& p) {
    if (degree_line(p)) return sym_class(p, SymBasis::X_THETA, {rat(theta_in_x_units(p))});
    return sym_class(p, SymBasis::X_THETA, {rat(0), rat(1)});
}

DivClassSym sym_delta_half(const CurveParams& p) {
    if (degree_line(p))
        return sym_class(p, SymBasis::X_THETA, {rat(p.d + p.g - 1 - theta_in_x_units(p))});
    return sym_class(p, SymBasis::X_THETA, {rat(p.d + p.g - 1), rat(-1)});
}

DivClassSym sym_L0(const CurveParams& p) {
    if (degree_line(p))
        return sym_class(p, SymBasis::X_THETA, {rat(p.d * p.g - theta_in_x_units(p))});
    return sym_class(p, SymBasis::X_THETA, {rat(p.d * p.g), rat(-1)});
}

DivClassSym sym_alpha_t(const CurveParams& p) {
    require_basis_valid(p, SymBasis::ALPHA_L0);
    return sym_class(p, SymBasis::X_THETA, {p.t->value - rat(p.g), rat(1)});
}

DivClassSym convert(const DivClassSym& c, SymBasis to) {
    require_basis_valid(c.params, c.basis);
    require_basis_valid(c.params, to);
    if (c.basis == to) return c;
    // On the degree line every basis names the same single coordinate.
    if (degree_line(c.params)) return DivClassSym{c.params, to, c.coords};
    RatVec canonical = mat_vec(basis_to_canonical(c.params, c.basis), c.coords);
    auto back = solve(basis_to_canonical(c.params, to), canonical);
    if (!back) throw std::logic_error("convert: basis matrix not invertible");
    return DivClassSym{c.params, to, *back};
}

DivClassSym sym_add(const DivClassSym& a, const DivClassSym& b) {
    if (!same_space(a.params, b.params))
        throw std::invalid_argument("sym_add: classes live on different symmetric products");
    DivClassSym bb = convert(b, a.basis);
    return DivClassSym{a.params, a.basis, vec_add(a.coords, bb.coords)};
}

DivClassSym sym_scale(const Rat& s, const DivClassSym& c) {
    return DivClassSym{c.params, c.basis, vec_scale(s, c.coords)};
}

std::string sym_curve_name(SymCurve c) {
    switch (c) {
        case SymCurve::SmallDiagonal: return "SmallDiagonal";
        case SymCurve::ShiftedPoint: return "ShiftedPoint";
        case SymCurve::GonalLine: return "GonalLine";
    }
    throw std::logic_error("sym_curve_name: unreachable");
}

bool sym_curve_available(const CurveParams& p, SymCurve c) {
    if (p.g < 1) return false;
    if (c == SymCurve::GonalLine) return p.d >= gonality(p.g);
    return true;
}

RatVec sym_curve_pairing(const CurveParams& p, SymCurve c) {
    if (!sym_curve_available(p, c))
        throw std::invalid_argument("sym_curve_pairing: " + sym_curve_name(c) +
                                    " is not available for these parameters");
    switch (c) {
        case SymCurve::SmallDiagonal: return {rat(p.d), rat(p.d * p.d * p.g)};
        case SymCurve::ShiftedPoint: return {rat(1), rat(p.g)};
        case SymCurve::GonalLine: return {rat(1), rat(0)};
    }
    throw std::logic_error("sym_curve_pairing: unreachable");
}

Rat pair_sym(const DivClassSym& c, SymCurve curve) {
    RatVec table = sym_curve_pairing(c.params, curve);
    RatVec canonical = convert(c, SymBasis::X_THETA).coords;
    if (c.params.d == 1) {
        // theta_1 = g[x] already folded in: the class is canonical[0] times
        // [x], and every listed curve meets [x] once there.
        return canonical[0];
    }
    return dot(table, canonical);
}

std::size_t sym_dim(const CurveParams& p) {
    return degree_line(p) ? 1 : 2;
}

SymNefCones nef_cone_sym(const CurveParams& p) {
    validate_params(p);

    // Degree line: nef means nonnegative degree, for C itself as well as P^d.
    if (degree_line(p)) {
        Cone line(1, {{rat(1)}});
        return SymNefCones{line, line, true};
    }

    RatVec L0 = sym_L0(p).coords;
    RatVec theta = sym_theta(p).coords;
    Cone lower(2, {L0, theta});

    if (p.d >= gonality(p.g)) return SymNefCones{lower, lower, true};

    if (p.d == 2 && p.t) {
        Cone c(2, {L0, sym_alpha_t(p).coords});
        return SymNefCones{c, c, true};
    }

    Cone upper(2, dual_rays(2, {sym_curve_pairing(p, SymCurve::SmallDiagonal),
                                sym_curve_pairing(p, SymCurve::ShiftedPoint)}));
    return SymNefCones{lower, upper, false};
}

}  // namespace quotnef
