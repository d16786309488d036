#pragma once

#include <optional>
#include <string>
#include <utility>

#include "quotnef/linalg.hpp"
#include "quotnef/rat.hpp"

namespace quotnef {

// Scales a nonzero rational vector by a positive rational so that the entries
// become coprime integers. This is the canonical representative of a ray.
RatVec primitive(const RatVec& v);

// Generators of {y : v.y >= 0 for all v in vecs}: the extreme rays of the
// pointed part plus a +/- pair for each lineality direction. Exact double
// description for ambient dimension <= 4.
std::vector<RatVec> dual_rays(std::size_t dim, const std::vector<RatVec>& vecs);

// Nonnegative rational combination of `gens` reproducing x, if one exists.
// Returned coefficients are indexed like `gens` (zeros for unused
// generators). Searches linearly independent subsets of size <= dim, which is
// complete by Caratheodory's theorem for cones.
std::optional<RatVec> find_combination(const std::vector<RatVec>& gens, const RatVec& x);

enum class Side { Interior, Boundary, Outside };

struct MembershipCert {
    Side verdict;
    // Interior/Boundary: coefficients over the cone's generator list with
    // sum(coeff[i] * gen[i]) == x exactly.
    RatVec combination;
    // Outside: inner normal f of a violated facet, f.x < 0 and f.g >= 0 for
    // every generator g.
    RatVec separating;
};

// Closed convex rational polyhedral cone, ambient dimension 1..4. Both
// representations are computed eagerly and kept canonical: generators are
// primitive, deduplicated, extremal and sorted; facet normals likewise (inner
// normal convention, x in cone iff facet.x >= 0 for all facets). Immutable
// after construction.
class Cone {
public:
    Cone(std::size_t ambient_dim, std::vector<RatVec> generators);

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<RatVec>& generators() const { return gens_; }
    const std::vector<RatVec>& facets() const { return facets_; }

private:
    std::size_t dim_;
    std::vector<RatVec> gens_;
    std::vector<RatVec> facets_;
};

Cone dual(const Cone& c);
MembershipCert membership(const Cone& c, const RatVec& x);
bool contains(const Cone& c, const RatVec& x);
bool equal(const Cone& a, const Cone& b);

}  // namespace quotnef
