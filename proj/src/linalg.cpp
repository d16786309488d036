#include "quotnef/linalg.hpp"

namespace quotnef {

RatMat::RatMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("RatMat: ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rat& RatMat::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMat::at");
    return data_[i * cols_ + j];
}

const Rat& RatMat::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("RatMat::at");
    return data_[i * cols_ + j];
}

RatVec RatMat::row(std::size_t i) const {
    RatVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

RatMat RatMat::transposed() const {
    RatMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RatVec mat_vec(const RatMat& a, const RatVec& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("mat_vec: dimension mismatch");
    RatVec out(a.rows(), Rat(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a.at(i, j) * x[j];
    return out;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    RatMat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

namespace {

// Row echelon form in place; returns the pivot columns. Rationals make
// pivoting trivial: any nonzero entry works.
std::vector<std::size_t> echelon(RatMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rat inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rat f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve: dimension mismatch");
    if (a.rows() < a.cols()) return std::nullopt;

    RatMat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto pivots = echelon(aug);

    // Inconsistent if some pivot landed in the augmented column.
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    // Unique solution needs full column rank.
    if (pivots.size() != a.cols()) return std::nullopt;

    RatVec x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) x[i] = aug.at(i, a.cols());
    return x;
}

std::size_t rank(const RatMat& a) {
    RatMat m = a;
    return echelon(m).size();
}

std::vector<RatVec> nullspace(const RatMat& a) {
    RatMat m = a;
    auto pivots = echelon(m);

    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<RatVec> basis;
    for (std::size_t free_c = 0; free_c < a.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        RatVec v(a.cols(), Rat(0));
        v[free_c] = 1;
        // Reduced echelon rows read off the pivot coordinates directly.
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, free_c);
        basis.push_back(v);
    }
    return basis;
}

}  // namespace quotnef
