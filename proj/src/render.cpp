#include "quotnef/render.hpp"

#include <sstream>
#include <stdexcept>

namespace quotnef {

std::string dec6(const Rat& x) {
    mpz_class num = x.get_num();
    mpz_class den = x.get_den();
    bool neg = num < 0;
    if (neg) num = -num;
    mpz_class scaled = num * 1000000;
    mpz_class q = scaled / den;
    if ((scaled % den) * 2 >= den) q += 1;
    mpz_class ip = q / 1000000;
    mpz_class fp = q % 1000000;
    std::ostringstream out;
    if (neg && q != 0) out << '-';
    std::string f = fp.get_str();
    out << ip.get_str() << '.' << std::string(6 - f.size(), '0') << f;
    return out.str();
}

namespace {

struct Px {
    Rat x, y;
};

// The fixed 600x600 frame: A on top, B bottom left, C bottom right. A point
// with affine weights (wA, wB, wC), wA+wB+wC = 1, lands on the weighted
// average of the three anchors.
Px frame_point(const Rat& wA, const Rat& wB, const Rat& wC) {
    return {wA * 300 + wB * 80 + wC * 520, wA * 80 + wB * 520 + wC * 520};
}

struct Layout {
    Picture pic;
    Rat mu;
    Px A, B, C, D, E;
    bool e_is_a;
    std::string upper_note;
};

Layout layout_for(const CurveParams& p) {
    auto pic = picture_points(p);
    if (!pic)
        throw std::invalid_argument(
            "render: no cross-section picture at d = 1 or genus 0");
    Layout L{*pic,
             mu0(p.g, p.d),
             frame_point(rat(1), rat(0), rat(0)),
             frame_point(rat(0), rat(1), rat(0)),
             frame_point(rat(0), rat(0), rat(1)),
             frame_point(pic->tau, rat(1) - pic->tau, rat(0)),
             frame_point(pic->rho, rat(0), rat(1) - pic->rho),
             pic->rho == rat(1),
             ""};
    auto ub = upper_bound_cone(p);
    if (!ub)
        L.upper_note = "upper bound: none (d below the gonality)";
    else if (ub->weak)
        L.upper_note = "upper bound: weak, dual of {l, eta l'} only (n < d)";
    else if (p.n >= p.d)
        L.upper_note = "upper bound: dual of {l, eta l', tilde-delta}";
    else
        L.upper_note = "upper bound: dual of {l, eta l', eta delta}";
    return L;
}

std::string xy(const Px& p) { return dec6(p.x) + "," + dec6(p.y); }

std::string weights3(const Rat& wA, const Rat& wB, const Rat& wC) {
    return "(" + rat_str(wA) + ", " + rat_str(wB) + ", " + rat_str(wC) + ")";
}

std::string class_str(const DivClassQuot& c) {
    RatVec v = to_vec(c);
    std::string s = rat_str(v[0]) + ";";
    for (size_t i = 1; i < v.size(); ++i) s += (i == 1 ? " " : ", ") + rat_str(v[i]);
    return s;
}

std::string title_line(const CurveParams& p) {
    return "nef cone cross-section  g=" + std::to_string(p.g) +
           " d=" + std::to_string(p.d) + " n=" + std::to_string(p.n);
}

void svg_point(std::ostringstream& out, const Px& at, const std::string& label,
               const std::string& fill, int dx, int dy, const std::string& anchor) {
    out << "<circle cx=\"" << dec6(at.x) << "\" cy=\"" << dec6(at.y)
        << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
    out << "<text x=\"" << dec6(at.x + dx) << "\" y=\"" << dec6(at.y + dy)
        << "\" text-anchor=\"" << anchor
        << "\" font-family=\"monospace\" font-size=\"15\">" << label << "</text>\n";
}

void svg_legend(std::ostringstream& out, int y, const std::string& text) {
    out << "<text x=\"24\" y=\"" << y
        << "\" font-family=\"monospace\" font-size=\"12\">" << text << "</text>\n";
}

}  // namespace

std::string render_svg(const CurveParams& p) {
    Layout L = layout_for(p);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
           "viewBox=\"0 0 600 600\">\n";
    out << "<rect width=\"600\" height=\"600\" fill=\"#ffffff\"/>\n";
    out << "<text x=\"300\" y=\"34\" text-anchor=\"middle\" font-family=\"monospace\" "
           "font-size=\"16\">"
        << title_line(p) << "</text>\n";
    // Frame triangle: the upper bound region when the full bound holds.
    out << "<polygon points=\"" << xy(L.A) << " " << xy(L.B) << " " << xy(L.C)
        << "\" fill=\"#edf2fa\" stroke=\"#7a8fb5\" stroke-width=\"1\"/>\n";
    // Lower bound: the hull of D, theta, L_0, E.
    out << "<polygon points=\"" << xy(L.D) << " " << xy(L.B) << " " << xy(L.C) << " "
        << xy(L.E) << "\" fill=\"#c9dcf2\" stroke=\"#2f4f78\" stroke-width=\"1\"/>\n";
    svg_point(out, L.B, "B", "#24416b", -4, 22, "end");
    svg_point(out, L.C, "C", "#24416b", 4, 22, "start");
    svg_point(out, L.D, "D", "#a23317", -10, 0, "end");
    if (L.e_is_a) {
        svg_point(out, L.A, "A = E", "#24416b", 0, -12, "middle");
    } else {
        svg_point(out, L.A, "A", "#24416b", 0, -12, "middle");
        svg_point(out, L.E, "E", "#a23317", 10, 0, "start");
    }
    svg_legend(out, 552,
               "A = O(1) + mu0 L0 with mu0 = " + rat_str(L.mu) +
                   "   B = theta_d   C = L0");
    svg_legend(out, 568,
               "D = tau kappa_1, tau = " + rat_str(L.pic.tau) + " (" + dec6(L.pic.tau) +
                   "), weights " + weights3(L.pic.tau, rat(1) - L.pic.tau, rat(0)));
    svg_legend(out, 584,
               "E = rho kappa_2, rho = " + rat_str(L.pic.rho) + " (" + dec6(L.pic.rho) +
                   "), weights " + weights3(L.pic.rho, rat(0), rat(1) - L.pic.rho));
    std::string closed = "printed closed forms: tau = " + rat_str(L.pic.tau_closed_form) +
                         ", rho = " + rat_str(L.pic.rho_closed_form);
    if (L.pic.rho_discrepancy) closed += "  [tau-rho-discrepancy]";
    svg_legend(out, 600, closed);
    svg_legend(out, 64, L.upper_note);
    out << "</svg>\n";
    return out.str();
}

std::string render_tikz(const CurveParams& p) {
    Layout L = layout_for(p);
    std::ostringstream out;
    out << "% " << title_line(p) << "\n";
    out << "% " << L.upper_note << "\n";
    out << "\\begin{tikzpicture}[x=0.02cm,y=-0.02cm]\n";
    out << "  \\draw[fill=blue!6,draw=blue!50] (" << xy(L.A) << ") -- (" << xy(L.B)
        << ") -- (" << xy(L.C) << ") -- cycle;\n";
    out << "  \\draw[fill=blue!20,draw=blue!70] (" << xy(L.D) << ") -- (" << xy(L.B)
        << ") -- (" << xy(L.C) << ") -- (" << xy(L.E) << ") -- cycle;\n";
    out << "  \\fill (" << xy(L.B) << ") circle[radius=3pt] node[below left] {$B = \\theta_d$};\n";
    out << "  \\fill (" << xy(L.C) << ") circle[radius=3pt] node[below right] {$C = L_0$};\n";
    out << "  \\fill (" << xy(L.D)
        << ") circle[radius=3pt] node[left] {$D = \\tau\\kappa_1$};\n";
    if (L.e_is_a) {
        out << "  \\fill (" << xy(L.A)
            << ") circle[radius=3pt] node[above] {$A = E$};\n";
    } else {
        out << "  \\fill (" << xy(L.A) << ") circle[radius=3pt] node[above] {$A$};\n";
        out << "  \\fill (" << xy(L.E)
            << ") circle[radius=3pt] node[right] {$E = \\rho\\kappa_2$};\n";
    }
    out << "  \\node[anchor=west] at (24,560) {$A = \\mathcal{O}(1) + \\mu_0 L_0$, "
           "$\\mu_0 = "
        << rat_str(L.mu) << "$};\n";
    out << "  \\node[anchor=west] at (24,580) {$\\tau = " << rat_str(L.pic.tau)
        << " \\approx " << dec6(L.pic.tau) << "$, $\\rho = " << rat_str(L.pic.rho)
        << " \\approx " << dec6(L.pic.rho) << "$};\n";
    out << "  \\node[anchor=west] at (24,600) {closed forms: $\\tau = "
        << rat_str(L.pic.tau_closed_form) << "$, $\\rho = "
        << rat_str(L.pic.rho_closed_form) << "$};\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
}

std::string render_table(const CurveParams& p) {
    Layout L = layout_for(p);
    std::ostringstream out;
    out << title_line(p) << "\n";
    out << "mu0 = " << rat_str(L.mu) << "\n\n";
    auto row = [&out](const std::string& name, const std::string& w,
                      const std::string& cls) {
        out << name;
        for (size_t i = name.size(); i < 7; ++i) out << ' ';
        out << w;
        for (size_t i = w.size(); i < 22; ++i) out << ' ';
        out << cls << "\n";
    };
    row("point", "weights (A, B, C)", "class a; b_x, b_theta");
    row("A", weights3(rat(1), rat(0), rat(0)), class_str(L.pic.A));
    row("B", weights3(rat(0), rat(1), rat(0)), class_str(L.pic.B));
    row("C", weights3(rat(0), rat(0), rat(1)), class_str(L.pic.C));
    row("D", weights3(L.pic.tau, rat(1) - L.pic.tau, rat(0)), class_str(L.pic.D));
    row("E", weights3(L.pic.rho, rat(0), rat(1) - L.pic.rho), class_str(L.pic.E));
    out << "\ntau = " << rat_str(L.pic.tau) << "  (closed form "
        << rat_str(L.pic.tau_closed_form) << ")\n";
    out << "rho = " << rat_str(L.pic.rho) << "  (closed form "
        << rat_str(L.pic.rho_closed_form) << ")\n";
    if (L.e_is_a) out << "note: E = A, kappa_2 sits on the O(1) + mu0 L0 ray\n";
    if (L.pic.rho_discrepancy) out << "note: tau-rho-discrepancy\n";
    if (p.g == 1) out << "note: Delta_d/2 = L_0 at genus 1, the frame collapses to two rays\n";
    out << L.upper_note << "\n";
    return out.str();
}

}  // namespace quotnef
