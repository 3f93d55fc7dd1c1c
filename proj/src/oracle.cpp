#include "qcorr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

using Block = std::array<cplx, 4>;  // row-major 2x2

struct Projectors {
    Block first;
    Block second;
};

Projectors basis_projectors(double theta, double phi) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const cplx e = std::polar(1.0, phi);
    const cplx off = c * s * std::conj(e);
    return {
        Block{c * c, off, std::conj(off), s * s},
        Block{s * s, -off, -std::conj(off), c * c},
    };
}

Block bloch_block(const Vec3& r) {
    return {0.5 * (1.0 + r[2]), cplx(0.5 * r[0], -0.5 * r[1]), cplx(0.5 * r[0], 0.5 * r[1]),
            0.5 * (1.0 - r[2])};
}

// v * sin|v| / |v|: maps R^3 smoothly onto the closed unit ball.
Vec3 squash(double a, double b, double c) {
    const double len = std::sqrt(a * a + b * b + c * c);
    const double scale = len < 1e-12 ? 1.0 - len * len / 6.0 : std::sin(len) / len;
    return {a * scale, b * scale, c * scale};
}

ClassicalQuantumState decode(const std::vector<double>& z) {
    ClassicalQuantumState cq;
    cq.theta = z[0];
    cq.phi = z[1];
    cq.p1 = 0.5 * (1.0 + std::sin(z[2]));
    cq.r1 = squash(z[3], z[4], z[5]);
    cq.r2 = squash(z[6], z[7], z[8]);
    return cq;
}

void encode_ball(const Vec3& r, double* out) {
    const double len = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    if (len < 1e-15) {
        out[0] = out[1] = out[2] = 0.0;
        return;
    }
    const double radius = std::asin(std::min(1.0, len));
    for (int i = 0; i < 3; ++i) out[i] = r[i] / len * radius;
}

Vec3 uniform_in_ball(Rng& rng) {
    Vec3 dir{rng.normal(), rng.normal(), rng.normal()};
    const double len = std::sqrt(dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2]);
    const double radius = std::cbrt(rng.uniform());
    for (auto& v : dir) v *= radius / len;
    return dir;
}

std::vector<double> random_start(Rng& rng) {
    std::vector<double> z(9);
    z[0] = std::acos(1.0 - 2.0 * rng.uniform());
    z[1] = 2.0 * std::numbers::pi * rng.uniform();
    z[2] = std::asin(2.0 * rng.uniform() - 1.0);
    encode_ball(uniform_in_ball(rng), &z[3]);
    encode_ball(uniform_in_ball(rng), &z[6]);
    return z;
}

// ||rho - chi||_F^2 with chi assembled entry by entry.
double distance_sq(const std::array<cplx, 16>& rho, const ClassicalQuantumState& cq) {
    const Projectors proj = basis_projectors(cq.theta, cq.phi);
    const Block b1 = bloch_block(cq.r1);
    const Block b2 = bloch_block(cq.r2);
    const double w1 = cq.p1, w2 = 1.0 - cq.p1;
    double total = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    const cplx chi = w1 * proj.first[i * 2 + k] * b1[j * 2 + l] +
                                     w2 * proj.second[i * 2 + k] * b2[j * 2 + l];
                    total += std::norm(rho[(i * 2 + j) * 4 + k * 2 + l] - chi);
                }
    return total;
}

}  // namespace

ComplexMatrix ClassicalQuantumState::assemble() const {
    const Projectors proj = basis_projectors(theta, phi);
    const Block b1 = bloch_block(r1);
    const Block b2 = bloch_block(r2);
    auto to_matrix = [](const Block& blk) { return ComplexMatrix(2, 2, {blk[0], blk[1], blk[2], blk[3]}); };
    return p1 * kron(to_matrix(proj.first), to_matrix(b1)) +
           (1.0 - p1) * kron(to_matrix(proj.second), to_matrix(b2));
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, double step, double tol,
                             int max_iterations) {
    const std::size_t n = start.size();
    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step;
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    NelderMeadResult result;

    auto along = [&](double coeff, std::vector<double>& out, const std::vector<double>& worst) {
        for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + coeff * (worst[j] - centroid[j]);
    };

    int it = 0;
    for (; it < max_iterations; ++it) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];
        if (values[worst] - values[best] <= tol) {
            result.converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[order[i]][j] / static_cast<double>(n);

        along(-1.0, trial, simplex[worst]);
        const double reflected = f(trial);
        if (reflected < values[best]) {
            along(-2.0, trial2, simplex[worst]);
            const double expanded = f(trial2);
            if (expanded < reflected) {
                simplex[worst] = trial2;
                values[worst] = expanded;
            } else {
                simplex[worst] = trial;
                values[worst] = reflected;
            }
            continue;
        }
        if (reflected < values[second]) {
            simplex[worst] = trial;
            values[worst] = reflected;
            continue;
        }
        // contraction: outside if the reflection improved on the worst point
        const bool outside = reflected < values[worst];
        along(outside ? -0.5 : 0.5, trial2, simplex[worst]);
        const double contracted = f(trial2);
        if (contracted < (outside ? reflected : values[worst])) {
            simplex[worst] = trial2;
            values[worst] = contracted;
            continue;
        }
        for (std::size_t i = 1; i <= n; ++i) {
            auto& vertex = simplex[order[i]];
            for (std::size_t j = 0; j < n; ++j)
                vertex[j] = simplex[best][j] + 0.5 * (vertex[j] - simplex[best][j]);
            values[order[i]] = f(vertex);
        }
    }

    const auto best_it = std::min_element(values.begin(), values.end());
    result.x = simplex[static_cast<std::size_t>(best_it - values.begin())];
    result.value = *best_it;
    result.iterations = it;
    return result;
}

OracleResult discord_bruteforce(const DensityMatrix& rho, const OracleOptions& options) {
    if (rho.dims().a != 2 || rho.dims().b != 2) {
        throw Error(ErrorKind::WrongDims, "brute-force discord is implemented for two qubits");
    }
    if (options.restarts < 1) throw Error(ErrorKind::ParamOutOfRange, "restarts must be >= 1");

    std::array<cplx, 16> target{};
    std::copy(rho.matrix().entries().begin(), rho.matrix().entries().end(), target.begin());
    auto objective = [&target](const std::vector<double>& z) { return distance_sq(target, decode(z)); };

    OracleResult out;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < options.restarts; ++k) {
        Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(k)));
        std::vector<double> z = random_start(rng);

        // Re-seed the simplex around the incumbent until a fresh simplex stops
        // improving; guards against collapsed simplices.
        int budget = options.max_iterations;
        double current = objective(z);
        bool converged = false;
        while (budget > 0) {
            NelderMeadResult nm = nelder_mead(objective, z, 0.3, options.simplex_tol, budget);
            budget -= std::max(nm.iterations, 1);
            const double gain = current - nm.value;
            if (nm.value < current) {
                z = nm.x;
                current = nm.value;
            }
            if (!nm.converged) break;
            if (gain <= options.simplex_tol) {
                converged = true;
                break;
            }
        }

        out.restarts_used = k + 1;
        out.converged = out.converged || converged;
        if (current < best) {
            best = current;
            out.best_params = decode(z);
        }
    }
    out.value = normalization_scale(options.normalization) * best;
    return out;
}

void check_weyl(const ComplexMatrix& x, const ComplexMatrix& y, double slack, WeylReport& report) {
    const auto lx = eigvalsh(x);
    const auto ly = eigvalsh(y);
    const auto lxy = eigvalsh(x + y);
    const std::size_t n = lx.size();
    if (report.samples == 0) report.worst_margin = std::numeric_limits<double>::infinity();
    bool violated = false;
    for (std::size_t k = 0; k < n; ++k) {
        const double lower = lxy[k] - (lx[k] + ly.front());
        const double upper = (lx[k] + ly.back()) - lxy[k];
        report.worst_margin = std::min({report.worst_margin, lower, upper});
        if (lower < -slack || upper < -slack) violated = true;
    }
    ++report.samples;
    if (violated) ++report.violations;
}

WeylReport weyl_property_driver(std::size_t n, std::size_t samples, std::uint64_t seed, double slack) {
    if (n < 2 || n > 8) throw Error(ErrorKind::ParamOutOfRange, "Weyl driver supports 2 <= n <= 8");
    WeylReport report;
    report.n = n;
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const ComplexMatrix x = random_hermitian(n, rng);
        const ComplexMatrix y = random_hermitian(n, rng);
        check_weyl(x, y, slack, report);
    }
    return report;
}

}  // namespace qcorr
