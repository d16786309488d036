#include "quotnef/cone.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace quotnef {

RatVec primitive(const RatVec& v) {
    if (is_zero_vec(v)) throw std::invalid_argument("primitive: zero vector");
    mpz_class den_lcm = 1;
    for (const auto& x : v) {
        mpz_class d = x.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class num_gcd = 0;
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (den_lcm / x.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        ints.push_back(n);
    }
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(ints[i] / num_gcd);
    return out;
}

namespace {

bool vec_less(const RatVec& a, const RatVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

void canonicalize_ray_set(std::vector<RatVec>& rays) {
    for (auto& r : rays) r = primitive(r);
    std::sort(rays.begin(), rays.end(), vec_less);
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

RatMat rows_to_mat(std::size_t dim, const std::vector<RatVec>& rows) {
    RatMat m(rows.size(), dim);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Indices of a maximal linearly independent subset of rows.
std::vector<std::size_t> independent_rows(const RatMat& a) {
    std::vector<std::size_t> picked;
    std::size_t target = rank(a);
    for (std::size_t i = 0; i < a.rows() && picked.size() < target; ++i) {
        picked.push_back(i);
        RatMat sub(picked.size(), a.cols());
        for (std::size_t k = 0; k < picked.size(); ++k)
            for (std::size_t j = 0; j < a.cols(); ++j) sub.at(k, j) = a.at(picked[k], j);
        if (rank(sub) != picked.size()) picked.pop_back();
    }
    return picked;
}

bool all_nonneg(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x >= 0; });
}

bool all_nonpos(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x <= 0; });
}

void subsets_of_size(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    // Standard lexicographic combination walk.
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<RatVec> dual_rays(std::size_t dim, const std::vector<RatVec>& vecs) {
    if (dim < 1 || dim > 4) throw std::invalid_argument("dual_rays: unsupported dimension");
    for (const auto& v : vecs)
        if (v.size() != dim) throw std::invalid_argument("dual_rays: dimension mismatch");

    RatMat a = rows_to_mat(dim, vecs);

    // Lineality of the dual is the nullspace of the constraint matrix.
    std::vector<RatVec> out;
    for (const auto& z : nullspace(a)) {
        out.push_back(z);
        RatVec neg(dim);
        for (std::size_t j = 0; j < dim; ++j) neg[j] = -z[j];
        out.push_back(neg);
    }

    // The pointed part lives in the row space. Substituting y = B z with B a
    // row-space basis gives the pointed cone {z : (A B) z >= 0} (A B has full
    // column rank because row space and nullspace only meet in 0).
    auto basis_idx = independent_rows(a);
    std::size_t r = basis_idx.size();
    if (r > 0) {
        RatMat b(dim, r);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < dim; ++j) b.at(j, k) = a.at(basis_idx[k], j);
        RatMat m = mat_mul(a, b);

        std::vector<RatVec> pointed;
        if (r == 1) {
            RatVec col(m.rows());
            for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, 0);
            if (all_nonneg(col)) pointed.push_back({Rat(1)});
            if (all_nonpos(col)) pointed.push_back({Rat(-1)});
        } else {
            // Every extreme ray is cut out by r-1 independent tight
            // constraints; enumerate those subsets and keep the feasible
            // nullspace direction.
            subsets_of_size(m.rows(), r - 1, [&](const std::vector<std::size_t>& idx) {
                RatMat sub(r - 1, r);
                for (std::size_t k = 0; k < r - 1; ++k)
                    for (std::size_t j = 0; j < r; ++j) sub.at(k, j) = m.at(idx[k], j);
                if (rank(sub) != r - 1) return;
                auto ns = nullspace(sub);
                if (ns.size() != 1) return;
                RatVec cand = ns[0];
                RatVec img = mat_vec(m, cand);
                if (all_nonneg(img)) {
                    pointed.push_back(cand);
                } else if (all_nonpos(img)) {
                    for (auto& x : cand) x = -x;
                    pointed.push_back(cand);
                }
            });
        }
        for (const auto& z : pointed) {
            RatVec y(dim, Rat(0));
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t j = 0; j < dim; ++j) y[j] += b.at(j, k) * z[k];
            out.push_back(y);
        }
    }

    canonicalize_ray_set(out);
    return out;
}

std::optional<RatVec> find_combination(const std::vector<RatVec>& gens, const RatVec& x) {
    if (is_zero_vec(x)) return RatVec(gens.size(), Rat(0));
    std::size_t dim = x.size();

    std::optional<RatVec> found;
    for (std::size_t k = 1; k <= std::min(dim, gens.size()) && !found; ++k) {
        subsets_of_size(gens.size(), k, [&](const std::vector<std::size_t>& idx) {
            if (found) return;
            RatMat cols(dim, k);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < dim; ++i) cols.at(i, j) = gens[idx[j]][i];
            auto sol = solve(cols, x);
            if (!sol) return;
            if (!all_nonneg(*sol)) return;
            RatVec full(gens.size(), Rat(0));
            for (std::size_t j = 0; j < k; ++j) full[idx[j]] = (*sol)[j];
            found = full;
        });
    }
    return found;
}

Cone::Cone(std::size_t ambient_dim, std::vector<RatVec> generators) : dim_(ambient_dim) {
    if (dim_ < 1 || dim_ > 4) throw std::invalid_argument("Cone: unsupported dimension");
    for (const auto& g : generators) {
        if (g.size() != dim_) throw std::invalid_argument("Cone: generator dimension mismatch");
        if (is_zero_vec(g)) throw std::invalid_argument("Cone: zero generator");
    }
    canonicalize_ray_set(generators);

    // Drop generators already in the cone of the remaining ones. Sequential
    // removal is safe: each step keeps the generated cone unchanged.
    for (std::size_t i = generators.size(); i-- > 0;) {
        std::vector<RatVec> rest;
        rest.reserve(generators.size() - 1);
        for (std::size_t j = 0; j < generators.size(); ++j)
            if (j != i) rest.push_back(generators[j]);
        if (find_combination(rest, generators[i])) generators = std::move(rest);
    }

    gens_ = std::move(generators);
    facets_ = dual_rays(dim_, gens_);
}

Cone dual(const Cone& c) {
    return Cone(c.ambient_dim(), c.facets());
}

bool contains(const Cone& c, const RatVec& x) {
    if (x.size() != c.ambient_dim()) throw std::invalid_argument("contains: dimension mismatch");
    for (const auto& f : c.facets())
        if (dot(f, x) < 0) return false;
    return true;
}

MembershipCert membership(const Cone& c, const RatVec& x) {
    if (x.size() != c.ambient_dim()) throw std::invalid_argument("membership: dimension mismatch");
    bool on_facet = false;
    for (const auto& f : c.facets()) {
        Rat s = dot(f, x);
        if (s < 0) return {Side::Outside, {}, f};
        if (s == 0) on_facet = true;
    }
    auto comb = find_combination(c.generators(), x);
    if (!comb)
        throw std::logic_error("membership: facet test passed but no generator combination found");
    return {on_facet ? Side::Boundary : Side::Interior, *comb, {}};
}

bool equal(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    for (const auto& g : a.generators())
        if (!contains(b, g)) return false;
    for (const auto& g : b.generators())
        if (!contains(a, g)) return false;
    return true;
}

}  // namespace quotnef
