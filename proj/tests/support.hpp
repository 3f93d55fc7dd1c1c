#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "qcorr/linalg.hpp"

namespace qcorr::test {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    return worst;
}

// Matrix from a nested list of reals.
inline ComplexMatrix real_matrix(const std::vector<std::vector<double>>& rows) {
    ComplexMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

// Tr(a b) by explicit index contraction.
inline cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, i);
    return acc;
}

// Determinant by Gaussian elimination with partial pivoting.
inline cplx determinant(ComplexMatrix m) {
    const std::size_t n = m.rows();
    cplx det = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::abs(m(r, c)) > std::abs(m(pivot, c))) pivot = r;
        if (std::abs(m(pivot, c)) == 0.0) return 0.0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(pivot, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            const cplx factor = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= factor * m(c, j);
        }
    }
    return det;
}

// Real roots of det(A - x I) for Hermitian A with simple spectrum: grid scan
// for sign changes followed by bisection.
inline std::vector<double> charpoly_roots(const ComplexMatrix& a, std::size_t grid = 20000) {
    double bound = 0.0;
    for (const auto& z : a.entries()) bound += std::norm(z);
    bound = std::sqrt(bound) + 1.0;
    auto p = [&](double x) {
        ComplexMatrix shifted = a;
        for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= x;
        return determinant(shifted).real();
    };
    std::vector<double> roots;
    double lo = -bound;
    double plo = p(lo);
    for (std::size_t k = 1; k <= grid; ++k) {
        const double hi = -bound + 2.0 * bound * static_cast<double>(k) / static_cast<double>(grid);
        const double phi = p(hi);
        if ((plo < 0.0) != (phi < 0.0)) {
            double l = lo, h = hi, pl = plo;
            for (int it = 0; it < 200 && h - l > 1e-15; ++it) {
                const double mid = 0.5 * (l + h);
                const double pm = p(mid);
                if ((pm < 0.0) == (pl < 0.0)) {
                    l = mid;
                    pl = pm;
                } else {
                    h = mid;
                }
            }
            roots.push_back(0.5 * (l + h));
        }
        lo = hi;
        plo = phi;
    }
    return roots;
}

}  // namespace qcorr::test
