#include "quotnef/rat.hpp"

#include <cctype>

namespace quotnef {

Rat rat_parse(const std::string& s) {
    auto is_int = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = (allow_sign && t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    // The denominator carries no sign: canonical form keeps it positive.
    if (!is_int(num, true) || !is_int(den, false))
        throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");

    Rat r(num + "/" + den);
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

RatVec vec_scale(const Rat& s, const RatVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool is_zero_vec(const RatVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace quotnef
