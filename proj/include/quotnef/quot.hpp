#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quotnef/cone.hpp"
#include "quotnef/symprod.hpp"

namespace quotnef {

// A divisor class on the Quot scheme Q = Q(n,d) of length-d torsion quotients
// of the trivial rank-n bundle: a multiple of [O_Q(1)] plus the pullback of a
// class on C^(d) along the support map Phi. N^1(Q) is three-dimensional for
// d >= 2 (two-dimensional at d = 1), with canonical coordinates
// (a; b_x, b_theta) over the canonical symmetric-product basis.
struct DivClassQuot {
    CurveParams params;
    Rat a;
    DivClassSym beta;  // always stored in canonical coordinates
};

DivClassQuot quot_class(const CurveParams& p, const Rat& a, const DivClassSym& beta);
DivClassQuot quot_o1(const CurveParams& p);
// [O_Q(1)] + degL.[x], the class of the twist of O_Q(1) by a line bundle of
// that degree.
DivClassQuot quot_b_class(const CurveParams& p, const Rat& degL);
// kappa_1 = O(1) + mu_0 L_0 + ((d+g-2)/(dg)) theta,
// kappa_2 = O(1) + ((g+1)/(2g)) L_0: the two proven-nef slope classes.
DivClassQuot quot_kappa1(const CurveParams& p);
DivClassQuot quot_kappa2(const CurveParams& p);
DivClassQuot quot_theta(const CurveParams& p);
DivClassQuot quot_L0(const CurveParams& p);

DivClassQuot quot_add(const DivClassQuot& a, const DivClassQuot& b);
DivClassQuot quot_scale(const Rat& s, const DivClassQuot& c);

// Flat coordinates for the cone engine: (a, b_x, b_theta), or (a, b) at d=1.
RatVec to_vec(const DivClassQuot& c);
DivClassQuot from_vec(const CurveParams& p, const RatVec& v);

// Test curves in Q: a line l in a fiber of Phi, the eta-section images of the
// gonal line and of the small diagonal, and the tilde-delta curve of
// non-reduced quotients (which needs a surjection k^n -> k^d, so n >= d).
enum class QuotCurve { FiberLine, SectionGonal, SectionSmallDiag, TildeDelta };

std::string quot_curve_name(QuotCurve c);
bool quot_curve_available(const CurveParams& p, QuotCurve c);

// The linear functional (on canonical coordinates) computing intersection
// with the curve. eta pulls O_Q(1) back to -Delta_d/2, which drives the two
// section rows; tilde-delta meets O_Q(1) in degree zero and pushes to delta.
RatVec quot_curve_functional(const CurveParams& p, QuotCurve c);

Rat pair_quot(const DivClassQuot& c, QuotCurve curve);

// Upper bound for Nef(Q), as the dual of the available test-curve classes.
// Branches: {l, eta l', tilde-delta} when n >= d >= gonality; {l, eta l',
// eta delta} when g = 1, d >= 2 and n < d; {l, eta l'} alone (weak=true, the
// cone acquires a lineality direction) when g >= 2, d >= gonality, n < d.
// Absent when no branch applies.
struct UpperBound {
    Cone cone;
    bool weak;
};
std::optional<UpperBound> upper_bound_cone(const CurveParams& p);

// <kappa_1, kappa_2, theta, L_0>, nef for every g >= 1, n >= 1.
Cone lower_bound_cone(const CurveParams& p);

// Exact nef cones from the theorem database. Rows: genus-0 split bundles;
// g = 1 (any n, d); d = 2 with a Nagata parameter (g >= 2 very general);
// d = 3 with 2 <= g <= 4 very general and n >= 3. Each result carries the id
// of the statement it instantiates.
struct ExactCone {
    Cone cone;
    std::string theorem;
};
std::optional<ExactCone> exact_cone(const CurveParams& p);

// Nef cone of Quot(E, d) over P^1 for E = O(a_1)+...+O(a_k), a_i ascending:
// <[O_Q(1)] + (d-1-a_1) H, H> with H the hyperplane class of C^(d) = P^d.
Cone genus0_cone(const std::vector<long>& splitting, long d);

struct Partition {
    std::vector<long> parts;  // weakly decreasing, positive, summing to d
};

// All partitions of d into at most n parts, descending-lex ordered:
// (4), (3,1), (2,2) for d=4, n=2.
std::vector<Partition> partitions_leq(long d, long n);

enum class Nefness { Nef, NotNef, Unknown };

std::string nefness_name(Nefness v);

enum class CertKind {
    None,            // Unknown verdicts
    ConeMembership,  // nonnegative combination over a proven-nef generator set
    TheoremCitation, // exact-cone database decision
    PartitionFactor, // a partition pullback factor leaves Nef(C^(m))
    CurvePairing     // explicit curve class with negative intersection
};

struct NefCertificate {
    CertKind kind = CertKind::None;
    std::string detail;
    // ConeMembership / TheoremCitation (nef side): generators and exact
    // coefficients with sum(coefficients[i] * generators[i]) = class.
    std::vector<RatVec> generators;
    RatVec combination;
    // CurvePairing / TheoremCitation (non-nef side): functional with
    // functional . class < 0, nonnegative on every nef class.
    RatVec functional;
    // PartitionFactor: the partition, the offending part m, and the induced
    // class on C^(m) that fails to be nef there.
    std::vector<long> partition;
    long part = 0;
    RatVec factor_class;
    std::string theorem;
};

struct NefVerdict {
    Nefness verdict;
    NefCertificate cert;
};

// One-sided checks. The sufficient side certifies Nef via the slope
// thresholds mu_0^(m) (plus the fiber-line sign and the a=0 delegation to
// C^(d)); the necessary side certifies NotNef via partition pullbacks. Both
// return Unknown whenever their criterion does not decide; their verdicts are
// invariant under positive scaling.
NefVerdict check_nef_sufficient(const DivClassQuot& c);
NefVerdict check_nef_necessary(const DivClassQuot& c);

// Combined pipeline: exact-cone membership when the database applies, then
// the sufficient check, lower-bound membership, the necessary check, and
// finally the upper-bound separation test.
NefVerdict check_nef(const DivClassQuot& c);

// A nef class together with the curve class it annihilates (the witness that
// it sits on the boundary of the nef cone). The genus-2k entry has no named
// curve in N_1(Q); its witness is the eta-pullback identity recorded in the
// note, with the pulled-back class exposed for checking.
struct BoundaryCert {
    DivClassQuot cls;
    std::optional<QuotCurve> curve;
    std::optional<Rat> pairing;  // exact 0 whenever curve is present
    std::string note;
};
std::vector<BoundaryCert> boundary_certificates(const CurveParams& p);

// The affine cross-section {a + w_B + w_C = 1} picture of the bounds for
// d >= 2: the corner classes A = O(1) + mu_0 L_0, B = theta, C = L_0, and the
// normalized lower-bound generators D = tau kappa_1 (on edge AB) and
// E = rho kappa_2 (on edge AC). tau and rho are recomputed exactly from the
// kappa coefficients; the closed forms carried alongside reproduce the
// printed formulas, and rho_closed_form disagrees with the exact rho at every
// parameter value (see flag below).
struct Picture {
    DivClassQuot A, B, C, D, E;
    Rat tau, tau_closed_form;
    Rat rho, rho_closed_form;
    // Set when the two normalizations give genuinely different E points,
    // which happens exactly for d > 2 and g > 1 (otherwise E = A).
    bool rho_discrepancy;
};
std::optional<Picture> picture_points(const CurveParams& p);

}  // namespace quotnef
