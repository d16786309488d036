#include "quotnef/quot.hpp"

#include <algorithm>
#include <stdexcept>

#include "quotnef/linalg.hpp"

namespace quotnef {

namespace {

std::size_t quot_dim(const CurveParams& p) {
    return 1 + sym_dim(p);
}

DivClassSym sym_zero(const CurveParams& p) {
    return sym_class(p, SymBasis::X_THETA, RatVec(sym_dim(p), rat(0)));
}

void require_positive_genus(const CurveParams& p, const char* who) {
    if (p.g < 1) throw std::invalid_argument(std::string(who) + ": positive genus required");
}

}  // namespace

DivClassQuot quot_class(const CurveParams& p, const Rat& a, const DivClassSym& beta) {
    validate_params(p);
    if (beta.params.g != p.g || beta.params.d != p.d)
        throw std::invalid_argument("quot_class: beta lives on a different symmetric product");
    return DivClassQuot{p, a, convert(beta, SymBasis::X_THETA)};
}

DivClassQuot quot_o1(const CurveParams& p) {
    return quot_class(p, rat(1), sym_zero(p));
}

DivClassQuot quot_b_class(const CurveParams& p, const Rat& degL) {
    return quot_class(p, rat(1), sym_scale(degL, sym_x(p)));
}

DivClassQuot quot_kappa1(const CurveParams& p) {
    require_positive_genus(p, "kappa1");
    DivClassSym beta = sym_add(sym_scale(mu0(p.g, p.d), sym_L0(p)),
                               sym_scale(rat(p.d + p.g - 2, p.d * p.g), sym_theta(p)));
    return quot_class(p, rat(1), beta);
}

DivClassQuot quot_kappa2(const CurveParams& p) {
    require_positive_genus(p, "kappa2");
    return quot_class(p, rat(1), sym_scale(rat(p.g + 1, 2 * p.g), sym_L0(p)));
}

DivClassQuot quot_theta(const CurveParams& p) {
    return quot_class(p, rat(0), sym_theta(p));
}

DivClassQuot quot_L0(const CurveParams& p) {
    return quot_class(p, rat(0), sym_L0(p));
}

DivClassQuot quot_add(const DivClassQuot& a, const DivClassQuot& b) {
    if (a.params.g != b.params.g || a.params.d != b.params.d)
        throw std::invalid_argument("quot_add: classes live on different Quot schemes");
    return DivClassQuot{a.params, a.a + b.a, sym_add(a.beta, b.beta)};
}

DivClassQuot quot_scale(const Rat& s, const DivClassQuot& c) {
    return DivClassQuot{c.params, s * c.a, sym_scale(s, c.beta)};
}

RatVec to_vec(const DivClassQuot& c) {
    RatVec v;
    v.reserve(1 + c.beta.coords.size());
    v.push_back(c.a);
    RatVec canonical = convert(c.beta, SymBasis::X_THETA).coords;
    v.insert(v.end(), canonical.begin(), canonical.end());
    return v;
}

DivClassQuot from_vec(const CurveParams& p, const RatVec& v) {
    if (v.size() != quot_dim(p))
        throw std::invalid_argument("from_vec: expected " + std::to_string(quot_dim(p)) +
                                    " coordinates");
    return quot_class(p, v[0], sym_class(p, SymBasis::X_THETA, RatVec(v.begin() + 1, v.end())));
}

std::string quot_curve_name(QuotCurve c) {
    switch (c) {
        case QuotCurve::FiberLine: return "FiberLine";
        case QuotCurve::SectionGonal: return "SectionGonal";
        case QuotCurve::SectionSmallDiag: return "SectionSmallDiag";
        case QuotCurve::TildeDelta: return "TildeDelta";
    }
    throw std::logic_error("quot_curve_name: unreachable");
}

bool quot_curve_available(const CurveParams& p, QuotCurve c) {
    if (p.g < 1) return false;
    switch (c) {
        case QuotCurve::FiberLine: return true;
        case QuotCurve::SectionGonal: return p.d >= gonality(p.g);
        case QuotCurve::SectionSmallDiag: return true;
        case QuotCurve::TildeDelta: return p.n >= p.d;
    }
    throw std::logic_error("quot_curve_available: unreachable");
}

RatVec quot_curve_functional(const CurveParams& p, QuotCurve c) {
    validate_params(p);
    if (!quot_curve_available(p, c))
        throw std::invalid_argument("quot_curve_functional: " + quot_curve_name(c) +
                                    " is not available for these parameters");
    std::size_t dim = quot_dim(p);
    if (c == QuotCurve::FiberLine) {
        RatVec f(dim, rat(0));
        f[0] = rat(1);
        return f;
    }
    // The eta sections push curves of C^(d) into Q; by the projection formula
    // the O_Q(1) column is the pairing of eta^* O_Q(1) = -Delta_d/2 with the
    // curve downstairs. tilde-delta instead meets O_Q(1) in degree 0 and
    // pushes forward to the small diagonal.
    SymCurve down =
        (c == QuotCurve::SectionGonal) ? SymCurve::GonalLine : SymCurve::SmallDiagonal;
    RatVec f;
    f.reserve(dim);
    if (c == QuotCurve::TildeDelta) {
        f.push_back(rat(0));
    } else {
        f.push_back(pair_sym(sym_scale(rat(-1), sym_delta_half(p)), down));
    }
    f.push_back(pair_sym(sym_x(p), down));
    if (dim == 3) f.push_back(pair_sym(sym_theta(p), down));
    return f;
}

Rat pair_quot(const DivClassQuot& c, QuotCurve curve) {
    return dot(quot_curve_functional(c.params, curve), to_vec(c));
}

std::optional<UpperBound> upper_bound_cone(const CurveParams& p) {
    validate_params(p);
    require_positive_genus(p, "upper_bound_cone");
    long gon = gonality(p.g);

    std::vector<QuotCurve> curves;
    bool weak = false;
    if (p.n >= p.d && p.d >= gon) {
        curves = {QuotCurve::FiberLine, QuotCurve::SectionGonal, QuotCurve::TildeDelta};
    } else if (p.g == 1 && p.d >= 2) {
        // Same numerical wall as tilde-delta, but built from the eta image of
        // the small diagonal, so no rank hypothesis is needed.
        curves = {QuotCurve::FiberLine, QuotCurve::SectionGonal, QuotCurve::SectionSmallDiag};
    } else if (p.g >= 2 && p.d >= gon) {
        curves = {QuotCurve::FiberLine, QuotCurve::SectionGonal};
        weak = true;
    } else {
        return std::nullopt;
    }

    std::vector<RatVec> rows;
    rows.reserve(curves.size());
    for (QuotCurve c : curves) rows.push_back(quot_curve_functional(p, c));
    return UpperBound{Cone(quot_dim(p), dual_rays(quot_dim(p), rows)), weak};
}

Cone lower_bound_cone(const CurveParams& p) {
    validate_params(p);
    require_positive_genus(p, "lower_bound_cone");
    std::vector<RatVec> gens;
    for (const DivClassQuot& c :
         {quot_kappa1(p), quot_kappa2(p), quot_theta(p), quot_L0(p)}) {
        RatVec v = to_vec(c);
        if (!is_zero_vec(v)) gens.push_back(v);  // L_0 vanishes at d = 1
    }
    return Cone(quot_dim(p), gens);
}

std::optional<ExactCone> exact_cone(const CurveParams& p) {
    validate_params(p);

    if (p.g == 0) return ExactCone{genus0_cone(*p.splitting, p.d), "genus0-split-bundle"};

    if (p.g == 1) {
        // mu_0 = 1, so O(1) + L_0 = O(1) + Delta_d/2 spans the extremal ray;
        // at d = 1 the L_0 generator vanishes and the quadrant remains.
        std::vector<RatVec> gens;
        for (const DivClassQuot& cls :
             {quot_add(quot_o1(p), quot_L0(p)), quot_theta(p), quot_L0(p)}) {
            RatVec v = to_vec(cls);
            if (!is_zero_vec(v)) gens.push_back(v);
        }
        return ExactCone{Cone(quot_dim(p), gens), "genus1-full-cone"};
    }

    if (p.d == 2 && p.t) {
        Rat slope = (p.t->value + 1) / (p.t->value + rat(p.g));
        DivClassQuot edge = quot_class(p, rat(1), sym_scale(slope, sym_L0(p)));
        Cone c(3, {to_vec(edge), to_vec(quot_L0(p)),
                   to_vec(quot_class(p, rat(0), sym_alpha_t(p)))});
        return ExactCone{c, "d2-nagata-slope"};
    }

    if (p.g >= 2 && p.g <= 4 && p.d == 3 && p.n >= 3) {
        DivClassQuot edge =
            quot_class(p, rat(1), sym_scale(rat(p.g + 2, 3 * p.g), sym_L0(p)));
        Cone c(3, {to_vec(edge), to_vec(quot_theta(p)), to_vec(quot_L0(p))});
        return ExactCone{c, "d3-genus-2-to-4"};
    }

    return std::nullopt;
}

Cone genus0_cone(const std::vector<long>& splitting, long d) {
    if (splitting.empty()) throw std::invalid_argument("genus0_cone: empty splitting type");
    if (d < 1) throw std::invalid_argument("genus0_cone: quotient length must be at least 1");
    long a1 = *std::min_element(splitting.begin(), splitting.end());
    return Cone(2, {{rat(1), rat(d - 1 - a1)}, {rat(0), rat(1)}});
}

std::vector<Partition> partitions_leq(long d, long n) {
    if (d < 1 || n < 1) throw std::invalid_argument("partitions_leq: requires d, n >= 1");
    std::vector<Partition> out;
    std::vector<long> cur;
    // Descending-lex walk: always place the largest admissible part first.
    auto rec = [&](auto&& self, long remaining, long maxpart, long slots) -> void {
        if (remaining == 0) {
            out.push_back(Partition{cur});
            return;
        }
        if (slots == 0) return;
        for (long m = std::min(remaining, maxpart); m >= 1; --m) {
            cur.push_back(m);
            self(self, remaining - m, m, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, d, d, n);
    return out;
}

std::string nefness_name(Nefness v) {
    switch (v) {
        case Nefness::Nef: return "Nef";
        case Nefness::NotNef: return "NotNef";
        case Nefness::Unknown: return "Unknown";
    }
    throw std::logic_error("nefness_name: unreachable");
}

namespace {

NefVerdict verdict_unknown(const std::string& detail) {
    NefCertificate cert;
    cert.kind = CertKind::None;
    cert.detail = detail;
    return NefVerdict{Nefness::Unknown, cert};
}

NefVerdict not_nef_fiber_line(const DivClassQuot& c) {
    NefCertificate cert;
    cert.kind = CertKind::CurvePairing;
    cert.functional = quot_curve_functional(c.params, QuotCurve::FiberLine);
    cert.detail = "pairs negatively with a line in a fiber of the support map";
    return NefVerdict{Nefness::NotNef, cert};
}

// Nef via membership: the witness combination is rescaled so that it
// reproduces the original (unnormalized) class.
NefVerdict nef_by_membership(const Cone& cone, const RatVec& point, const Rat& scale_back,
                             const std::string& detail) {
    MembershipCert m = membership(cone, point);
    if (m.verdict == Side::Outside)
        throw std::logic_error("nef_by_membership: point unexpectedly outside");
    NefCertificate cert;
    cert.kind = CertKind::ConeMembership;
    cert.generators = cone.generators();
    cert.combination = vec_scale(scale_back, m.combination);
    cert.detail = detail;
    return NefVerdict{Nefness::Nef, cert};
}

}  // namespace

NefVerdict check_nef_sufficient(const DivClassQuot& c) {
    const CurveParams& p = c.params;
    validate_params(p);
    require_positive_genus(p, "check_nef_sufficient");

    if (c.a < 0) return not_nef_fiber_line(c);

    if (c.a == 0) {
        // Pure pullback: nef upstairs exactly when nef on C^(d), and the
        // proven cone there is <L_0, theta>.
        SymNefCones sc = nef_cone_sym(p);
        RatVec beta = convert(c.beta, SymBasis::X_THETA).coords;
        if (contains(sc.lower, beta))
            return nef_by_membership(sc.lower, beta, rat(1),
                                     "pullback of a class in the proven nef cone of the "
                                     "symmetric product (coordinates there)");
        return verdict_unknown("pure pullback outside the proven part of Nef(C^(d))");
    }

    Rat inv_a = 1 / c.a;
    RatVec beta = convert(sym_scale(inv_a, c.beta), SymBasis::X_THETA).coords;

    if (p.d == 1) {
        // Q(n,1) pulls back along the single partition to the curve itself,
        // so nonnegative degree decides.
        if (beta[0] >= 0) {
            Cone quadrant(2, {{rat(1), rat(0)}, {rat(0), rat(1)}});
            return nef_by_membership(quadrant, {rat(1), beta[0]}, c.a,
                                     "nonnegative degree against the O(1) direction at d = 1");
        }
        return verdict_unknown("negative degree part at d = 1");
    }

    // Slope test in (theta, L_0) coordinates. Parts of size m >= 2 in an
    // admissible partition force the threshold mu_0^(m); mu_0 decreases in m,
    // so the binding part is the smallest one: 2 when the rank allows a
    // second part, d itself when n = 1.
    Rat b_L = beta[0] / rat(p.d * p.g);
    Rat b_theta = beta[1] + b_L;
    long m_star = (p.n >= 2) ? 2 : p.d;
    Rat threshold = mu0(p.g, m_star);

    if (b_theta >= 0 && b_L >= threshold) {
        DivClassQuot edge = quot_class(p, rat(1), sym_scale(threshold, sym_L0(p)));
        Cone proven(3, {to_vec(edge), to_vec(quot_theta(p)), to_vec(quot_L0(p))});
        return nef_by_membership(proven, {rat(1), beta[0], beta[1]}, c.a,
                                 "slope thresholds met: the class decomposes over "
                                 "{O(1) + mu_0^(" + std::to_string(m_star) +
                                     ") L_0, theta, L_0}");
    }
    return verdict_unknown("slope thresholds not met; the sufficient criterion does not apply");
}

namespace {

NefVerdict not_nef_partition(const std::vector<long>& partition, long part,
                             const RatVec& factor_class, const RatVec& sym_facet,
                             const std::string& detail) {
    NefCertificate cert;
    cert.kind = CertKind::PartitionFactor;
    cert.partition = partition;
    cert.part = part;
    cert.factor_class = factor_class;
    cert.functional = sym_facet;
    cert.detail = detail;
    return NefVerdict{Nefness::NotNef, cert};
}

// Parameters for the symmetric product of a part: same curve (its genus and
// Nagata parameter travel along), quotient length m.
CurveParams part_params(const CurveParams& p, long m) {
    CurveParams q = p;
    q.d = m;
    return q;
}

}  // namespace

NefVerdict check_nef_necessary(const DivClassQuot& c) {
    const CurveParams& p = c.params;
    validate_params(p);
    require_positive_genus(p, "check_nef_necessary");

    if (c.a < 0) return not_nef_fiber_line(c);

    if (c.a == 0) {
        // The eta section makes Phi-pullback faithful: beta outside the upper
        // bound downstairs is met negatively by an actual curve.
        SymNefCones sc = nef_cone_sym(p);
        RatVec beta = convert(c.beta, SymBasis::X_THETA).coords;
        MembershipCert m = membership(sc.upper, beta);
        if (m.verdict == Side::Outside) {
            NefCertificate cert;
            cert.kind = CertKind::CurvePairing;
            cert.functional = m.separating;
            cert.detail =
                "pure pullback meets the eta image of a curve of C^(d) negatively "
                "(functional in symmetric-product coordinates)";
            return NefVerdict{Nefness::NotNef, cert};
        }
        return verdict_unknown("pure pullback within the curve bounds on C^(d)");
    }

    Rat inv_a = 1 / c.a;
    RatVec beta = convert(sym_scale(inv_a, c.beta), SymBasis::X_THETA).coords;

    // Trivial partition (d): eta pulls the class back to -Delta_d/2 + beta.
    {
        CurveParams q = p;
        RatVec gamma;
        if (sym_dim(q) == 1) {
            gamma = {beta[0]};  // Delta_1 = 0
        } else {
            gamma = {beta[0] - rat(q.d + q.g - 1), beta[1] + 1};
        }
        SymNefCones sc = nef_cone_sym(q);
        MembershipCert m = membership(sc.upper, gamma);
        if (m.verdict == Side::Outside)
            return not_nef_partition({p.d}, p.d, gamma, m.separating,
                                     "the pullback along the full-length partition leaves "
                                     "Nef(C^(d))");
    }

    // For beta a multiple of [x] the pullback splits over every partition
    // with no cross terms; each part m contributes theta_m + (b_x-m-g+1)[x]
    // on C^(m). With n >= 2 every m < d occurs (inside (m, d-m)).
    bool pure_x = (sym_dim(p) == 1) || (beta[1] == 0);
    if (pure_x && p.n >= 2 && p.d >= 2) {
        Rat bx = beta[0];
        for (long m = p.d - 1; m >= 1; --m) {
            CurveParams q = part_params(p, m);
            RatVec gamma;
            if (sym_dim(q) == 1) {
                // m = 1: theta_1 = g[x] cancels the -g, leaving b_x [x].
                gamma = {bx};
            } else {
                gamma = {bx - rat(m + q.g - 1), rat(1)};
            }
            SymNefCones sc = nef_cone_sym(q);
            MembershipCert mem = membership(sc.upper, gamma);
            if (mem.verdict == Side::Outside) {
                std::vector<long> partition = {std::max(m, p.d - m), std::min(m, p.d - m)};
                return not_nef_partition(partition, m, gamma, mem.separating,
                                         "a length-two partition factor leaves Nef(C^(m))");
            }
        }
    }

    return verdict_unknown("no partition pullback violation found");
}

NefVerdict check_nef(const DivClassQuot& c) {
    const CurveParams& p = c.params;
    validate_params(p);

    if (auto ex = exact_cone(p)) {
        MembershipCert m = membership(ex->cone, to_vec(c));
        NefCertificate cert;
        cert.kind = CertKind::TheoremCitation;
        cert.theorem = ex->theorem;
        if (m.verdict == Side::Outside) {
            cert.functional = m.separating;
            cert.detail = "outside the exact nef cone of the theorem database";
            return NefVerdict{Nefness::NotNef, cert};
        }
        cert.generators = ex->cone.generators();
        cert.combination = m.combination;
        cert.detail = "inside the exact nef cone of the theorem database";
        return NefVerdict{Nefness::Nef, cert};
    }

    NefVerdict s = check_nef_sufficient(c);
    if (s.verdict != Nefness::Unknown) return s;

    {
        Cone lower = lower_bound_cone(p);
        RatVec v = to_vec(c);
        if (contains(lower, v))
            return nef_by_membership(lower, v, rat(1),
                                     "member of the proven lower-bound cone "
                                     "<kappa_1, kappa_2, theta, L_0>");
    }

    NefVerdict n = check_nef_necessary(c);
    if (n.verdict != Nefness::Unknown) return n;

    if (auto ub = upper_bound_cone(p)) {
        MembershipCert m = membership(ub->cone, to_vec(c));
        if (m.verdict == Side::Outside) {
            NefCertificate cert;
            cert.kind = CertKind::CurvePairing;
            cert.functional = m.separating;
            cert.detail =
                "separated from the upper bound: the functional is a nonnegative "
                "combination of test curve classes";
            return NefVerdict{Nefness::NotNef, cert};
        }
    }

    return verdict_unknown("between the proven bounds; no certificate applies to this region");
}

std::vector<BoundaryCert> boundary_certificates(const CurveParams& p) {
    validate_params(p);
    std::vector<BoundaryCert> out;
    if (p.g < 1) return out;

    auto verified = [](DivClassQuot cls, QuotCurve curve, std::string note) {
        Rat pairing = pair_quot(cls, curve);
        if (pairing != 0)
            throw std::logic_error("boundary_certificates: expected a zero pairing");
        return BoundaryCert{std::move(cls), curve, pairing, std::move(note)};
    };

    if (p.d >= gonality(p.g))
        out.push_back(verified(quot_b_class(p, rat(p.d + p.g - 1)), QuotCurve::SectionGonal,
                               "eta pulls the class back to theta_d, which kills the gonal "
                               "line; nef of this degree, not ample"));

    if (p.n >= p.d)
        out.push_back(verified(
            quot_class(p, rat(1), sym_scale(mu0(p.g, 2), sym_L0(p))), QuotCurve::TildeDelta,
            "kappa_2 direction: vanishes on the curve of length-2 jumps, nef, not ample"));

    if (p.g >= 2 && p.g % 2 == 0 && p.d == p.g / 2) {
        long k = p.g / 2;
        DivClassQuot cls = quot_b_class(p, rat(3 * (k - 1)));
        out.push_back(BoundaryCert{
            cls, std::nullopt, std::nullopt,
            "very general genus-2k boundary at degree 3(k-1): eta pulls the class back to "
            "theta_k - 2[x], nef but not ample on C^(k); no annihilated curve class among "
            "the named ones"});
    }

    return out;
}

std::optional<Picture> picture_points(const CurveParams& p) {
    validate_params(p);
    if (p.g < 1 || p.d < 2) return std::nullopt;

    DivClassQuot A = quot_class(p, rat(1), sym_scale(mu0(p.g, p.d), sym_L0(p)));
    DivClassQuot B = quot_theta(p);
    DivClassQuot C = quot_L0(p);

    // kappa_1 = A + w B and kappa_2 = A + v C exactly; recover the weights by
    // exact solves rather than trusting closed forms.
    auto weight = [&](const DivClassQuot& corner, const DivClassQuot& kappa) {
        RatMat cols(3, 2);
        RatVec av = to_vec(A), cv = to_vec(corner);
        for (std::size_t i = 0; i < 3; ++i) {
            cols.at(i, 0) = av[i];
            cols.at(i, 1) = cv[i];
        }
        auto sol = solve(cols, to_vec(kappa));
        if (!sol || (*sol)[0] != 1)
            throw std::logic_error("picture_points: kappa decomposition failed");
        return (*sol)[1];
    };
    Rat w = weight(B, quot_kappa1(p));
    Rat v = weight(C, quot_kappa2(p));

    Rat tau = 1 / (1 + w);
    Rat tau_closed = 1 / (1 + rat(p.d + p.g - 2, p.d * p.g));
    Rat rho = 1 / (1 + v);
    Rat rho_closed = 1 / (1 + rat(p.g + 1, 2 * p.g) - rat(p.d + p.g - 2, p.d * p.g));

    auto affine = [&](const Rat& s, const DivClassQuot& x, const DivClassQuot& y) {
        return quot_add(quot_scale(s, x), quot_scale(1 - s, y));
    };
    DivClassQuot D = affine(tau, A, B);
    DivClassQuot E = affine(rho, A, C);

    bool discrepancy = p.d > 2 && p.g > 1;
    return Picture{A, B, C, D, E, tau, tau_closed, rho, rho_closed, discrepancy};
}

}  // namespace quotnef
