#include "quotnef/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace quotnef {

Json rat_to_json(const Rat& x) { return rat_str(x); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) throw std::runtime_error("json: rational must be a string");
    return rat_parse(j.get<std::string>());
}

Json vec_to_json(const RatVec& v) {
    Json arr = Json::array();
    for (const Rat& x : v) arr.push_back(rat_to_json(x));
    return arr;
}

RatVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::runtime_error("json: vector must be an array");
    RatVec v;
    for (const Json& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json cone_to_json(const Cone& c) {
    Json j;
    j["ambient_dim"] = c.ambient_dim();
    Json gens = Json::array();
    for (const RatVec& g : c.generators()) gens.push_back(vec_to_json(g));
    j["generators"] = gens;
    Json facets = Json::array();
    for (const RatVec& f : c.facets()) facets.push_back(vec_to_json(f));
    j["facets"] = facets;
    return j;
}

Cone cone_from_json(const Json& j) {
    size_t dim = j.at("ambient_dim").get<size_t>();
    std::vector<RatVec> gens;
    for (const Json& g : j.at("generators")) gens.push_back(vec_from_json(g));
    return Cone(dim, gens);
}

Json sym_class_to_json(const DivClassSym& c) {
    Json j;
    j["basis"] = basis_name(c.basis);
    j["coords"] = vec_to_json(c.coords);
    return j;
}

DivClassSym sym_class_from_json(const CurveParams& p, const Json& j) {
    auto basis = basis_from_name(j.at("basis").get<std::string>());
    if (!basis) throw std::runtime_error("json: unknown basis tag");
    return sym_class(p, *basis, vec_from_json(j.at("coords")));
}

Json quot_class_to_json(const DivClassQuot& c) {
    Json j;
    j["a"] = rat_to_json(c.a);
    j["beta"] = sym_class_to_json(c.beta);
    return j;
}

DivClassQuot quot_class_from_json(const CurveParams& p, const Json& j) {
    return quot_class(p, rat_from_json(j.at("a")), sym_class_from_json(p, j.at("beta")));
}

Json params_to_json(const CurveParams& p) {
    Json j;
    j["g"] = p.g;
    j["d"] = p.d;
    j["n"] = p.n;
    if (p.splitting)
        j["splitting"] = *p.splitting;
    else
        j["splitting"] = nullptr;
    j["very_general"] = p.very_general;
    j["gonality"] = gonality(p.g);
    j["mu0"] = p.g >= 1 ? rat_to_json(mu0(p.g, p.d)) : Json(nullptr);
    if (p.t) {
        Json t;
        t["value"] = rat_to_json(p.t->value);
        t["provenance"] = tprov_name(p.t->prov);
        j["t"] = t;
    } else {
        j["t"] = nullptr;
    }
    return j;
}

CurveParams params_from_json(const Json& j) {
    CurveParams p;
    p.g = j.at("g").get<long>();
    p.d = j.at("d").get<long>();
    p.n = j.at("n").get<long>();
    if (j.contains("splitting") && !j.at("splitting").is_null())
        p.splitting = j.at("splitting").get<std::vector<long>>();
    p.very_general = j.at("very_general").get<bool>();
    if (j.contains("t") && !j.at("t").is_null()) {
        TValue tv;
        tv.value = rat_from_json(j.at("t").at("value"));
        auto prov = tprov_from_name(j.at("t").at("provenance").get<std::string>());
        if (!prov) throw std::runtime_error("json: unknown t provenance");
        tv.prov = *prov;
        p.t = tv;
    }
    validate_params(p);
    return p;
}

Json certificate_to_json(const NefCertificate& c) {
    Json j;
    switch (c.kind) {
        case CertKind::None: j["kind"] = "none"; break;
        case CertKind::ConeMembership: j["kind"] = "cone-membership"; break;
        case CertKind::TheoremCitation: j["kind"] = "theorem-citation"; break;
        case CertKind::PartitionFactor: j["kind"] = "partition-factor"; break;
        case CertKind::CurvePairing: j["kind"] = "curve-pairing"; break;
    }
    j["detail"] = c.detail;
    if (!c.theorem.empty()) j["theorem"] = c.theorem;
    if (!c.generators.empty()) {
        Json gens = Json::array();
        for (const RatVec& g : c.generators) gens.push_back(vec_to_json(g));
        j["generators"] = gens;
        j["combination"] = vec_to_json(c.combination);
    }
    if (!c.functional.empty()) j["functional"] = vec_to_json(c.functional);
    if (!c.partition.empty()) {
        j["partition"] = c.partition;
        j["part"] = c.part;
        j["factor_class"] = vec_to_json(c.factor_class);
    }
    return j;
}

Json verdict_to_json(const CurveParams& p, const DivClassQuot& cls, const NefVerdict& v,
                     const std::vector<std::string>& extra_flags) {
    Json j;
    j["params"] = params_to_json(p);
    j["class"] = quot_class_to_json(cls);
    j["verdict"] = nefness_name(v.verdict);
    j["certificate"] = certificate_to_json(v.cert);
    Json flags = Json::array();
    for (const std::string& f : extra_flags) flags.push_back(f);
    j["flags"] = flags;
    return j;
}

namespace {

void push_flag(std::vector<std::string>& flags, const std::string& f) {
    if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(f);
}

}  // namespace

ReportData make_report(const CurveParams& p, const std::vector<std::string>& extra_flags) {
    validate_params(p);
    ReportData r;
    r.params = p;
    for (const std::string& f : extra_flags) push_flag(r.flags, f);
    if (p.t && p.t->prov == TProv::Conjectural) push_flag(r.flags, "conjectural-t");

    auto ec = exact_cone(p);
    if (ec) {
        r.exact = ec->cone;
        r.theorem = ec->theorem;
    }

    if (p.g == 0) {
        // Over P^1 the theorem is unconditional: both bounds equal the cone.
        r.lower = r.exact;
        r.upper = r.exact;
        return r;
    }

    r.lower = lower_bound_cone(p);
    auto ub = upper_bound_cone(p);
    if (ub) {
        r.upper = ub->cone;
        if (ub->weak) push_flag(r.flags, "weak-upper-no-tilde-delta");
    } else {
        push_flag(r.flags, "no-upper-bound");
    }
    r.boundary = boundary_certificates(p);
    r.picture = picture_points(p);
    if (p.d == 2 && p.g >= 2 && !p.t) push_flag(r.flags, "t-unknown");
    if (r.picture && r.picture->rho_discrepancy) push_flag(r.flags, "tau-rho-discrepancy");
    return r;
}

Json report_to_json(const ReportData& r) {
    Json j;
    j["params"] = params_to_json(r.params);
    j["upper"] = r.upper ? cone_to_json(*r.upper) : Json(nullptr);
    j["lower"] = r.lower ? cone_to_json(*r.lower) : Json(nullptr);
    j["exact"] = r.exact ? cone_to_json(*r.exact) : Json(nullptr);
    j["theorem"] = r.theorem ? Json(*r.theorem) : Json(nullptr);
    Json boundary = Json::array();
    for (const BoundaryCert& b : r.boundary) {
        Json e;
        e["class"] = quot_class_to_json(b.cls);
        e["curve"] = b.curve ? Json(quot_curve_name(*b.curve)) : Json(nullptr);
        e["pairing"] = b.pairing ? rat_to_json(*b.pairing) : Json(nullptr);
        e["note"] = b.note;
        boundary.push_back(e);
    }
    j["boundary"] = boundary;
    if (r.picture) {
        const Picture& pic = *r.picture;
        Json p;
        p["A"] = quot_class_to_json(pic.A);
        p["B"] = quot_class_to_json(pic.B);
        p["C"] = quot_class_to_json(pic.C);
        p["D"] = quot_class_to_json(pic.D);
        p["E"] = quot_class_to_json(pic.E);
        p["tau"] = rat_to_json(pic.tau);
        p["tau_closed_form"] = rat_to_json(pic.tau_closed_form);
        p["rho"] = rat_to_json(pic.rho);
        p["rho_closed_form"] = rat_to_json(pic.rho_closed_form);
        j["picture"] = p;
    } else {
        j["picture"] = nullptr;
    }
    j["flags"] = r.flags;
    return j;
}

ReportData report_from_json(const Json& j) {
    ReportData r;
    r.params = params_from_json(j.at("params"));
    if (!j.at("upper").is_null()) r.upper = cone_from_json(j.at("upper"));
    if (!j.at("lower").is_null()) r.lower = cone_from_json(j.at("lower"));
    if (!j.at("exact").is_null()) r.exact = cone_from_json(j.at("exact"));
    if (!j.at("theorem").is_null()) r.theorem = j.at("theorem").get<std::string>();
    for (const Json& e : j.at("boundary")) {
        BoundaryCert b{quot_class_from_json(r.params, e.at("class")), std::nullopt,
                       std::nullopt, e.at("note").get<std::string>()};
        if (!e.at("curve").is_null()) {
            std::string name = e.at("curve").get<std::string>();
            bool found = false;
            for (QuotCurve c : {QuotCurve::FiberLine, QuotCurve::SectionGonal,
                                QuotCurve::SectionSmallDiag, QuotCurve::TildeDelta})
                if (quot_curve_name(c) == name) {
                    b.curve = c;
                    found = true;
                }
            if (!found) throw std::runtime_error("json: unknown curve name " + name);
        }
        if (!e.at("pairing").is_null()) b.pairing = rat_from_json(e.at("pairing"));
        r.boundary.push_back(std::move(b));
    }
    r.flags = j.at("flags").get<std::vector<std::string>>();
    if (!j.at("picture").is_null()) {
        const Json& p = j.at("picture");
        Picture pic{quot_class_from_json(r.params, p.at("A")),
                    quot_class_from_json(r.params, p.at("B")),
                    quot_class_from_json(r.params, p.at("C")),
                    quot_class_from_json(r.params, p.at("D")),
                    quot_class_from_json(r.params, p.at("E")),
                    rat_from_json(p.at("tau")),
                    rat_from_json(p.at("tau_closed_form")),
                    rat_from_json(p.at("rho")),
                    rat_from_json(p.at("rho_closed_form")),
                    std::find(r.flags.begin(), r.flags.end(), "tau-rho-discrepancy") !=
                        r.flags.end()};
        r.picture = pic;
    }
    return r;
}

}  // namespace quotnef
