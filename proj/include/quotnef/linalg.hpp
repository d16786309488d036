#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>

#include "quotnef/rat.hpp"

namespace quotnef {

// Small dense rational matrix, row-major. Everything here is exact Gaussian
// elimination; the matrices in this project never exceed a handful of rows.
class RatMat {
public:
    RatMat(std::size_t rows, std::size_t cols);
    RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j);
    const Rat& at(std::size_t i, std::size_t j) const;

    RatVec row(std::size_t i) const;
    RatMat transposed() const;

private:
    std::size_t rows_, cols_;
    RatVec data_;
};

RatVec mat_vec(const RatMat& a, const RatVec& x);
RatMat mat_mul(const RatMat& a, const RatMat& b);

// Solves A x = b for square or overdetermined A. Returns the solution only
// when it exists and is unique (full column rank and consistent); returns
// nullopt for inconsistent or rank-deficient systems. Dimension mismatches
// throw.
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

std::size_t rank(const RatMat& a);

// Basis of {x : A x = 0}.
std::vector<RatVec> nullspace(const RatMat& a);

}  // namespace quotnef
