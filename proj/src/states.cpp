#include "qcorr/states.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

void check_unit_interval(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorKind::ParamOutOfRange,
                    std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

void check_dimension(std::size_t d) {
    if (d < 2) throw Error(ErrorKind::BadDimension, "local dimension must be at least 2");
}

}  // namespace

DensityMatrix::DensityMatrix(Dims dims, const ComplexMatrix& matrix) : dims_(dims) {
    if (dims.a == 0 || dims.b == 0 || !matrix.is_square() || matrix.rows() != dims.total()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix size does not equal dA*dB = " + std::to_string(dims.total()));
    }
    const double residual = hermitian_residual(matrix);
    if (residual > kHermitianTol) {
        throw Error(ErrorKind::InvariantViolation,
                    "hermiticity residual " + std::to_string(residual), "hermiticity");
    }
    const std::size_t n = matrix.rows();
    matrix_ = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        matrix_(i, i) = matrix(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (matrix(i, j) + std::conj(matrix(j, i)));
            matrix_(i, j) = v;
            matrix_(j, i) = std::conj(v);
        }
    }
    const double tr = matrix_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "trace " << tr << " differs from 1";
        throw Error(ErrorKind::InvariantViolation, msg.str(), "trace");
    }
    const double lowest = eigvalsh(matrix_).front();
    if (lowest < -kPsdTol) {
        std::ostringstream msg;
        msg.precision(12);
        msg << "minimum eigenvalue " << lowest << " is negative";
        throw Error(ErrorKind::InvariantViolation, msg.str(), "psd");
    }
}

DensityMatrix werner2(double p) {
    check_unit_interval(p, "p");
    ComplexMatrix m(4, 4);
    const double noise = (1.0 - p) / 4.0;
    for (std::size_t i = 0; i < 4; ++i) m(i, i) = noise;
    m(1, 1) += p / 2.0;
    m(2, 2) += p / 2.0;
    m(1, 2) = -p / 2.0;
    m(2, 1) = -p / 2.0;
    return {{2, 2}, m};
}

DensityMatrix singlet() { return werner2(1.0); }

DensityMatrix rho1() {
    ComplexMatrix m(4, 4);
    for (auto& e : m.entries()) e = 0.25;
    return {{2, 2}, m};
}

DensityMatrix maximally_mixed(Dims dims) {
    const std::size_t n = dims.total();
    ComplexMatrix m = ComplexMatrix::identity(n);
    m *= 1.0 / static_cast<double>(n);
    return {dims, m};
}

ComplexMatrix phi_plus_projector(std::size_t d) {
    check_dimension(d);
    ComplexMatrix m(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) = 1.0 / static_cast<double>(d);
    return m;
}

ComplexMatrix swap_operator(std::size_t d) {
    check_dimension(d);
    ComplexMatrix m(d * d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i * d + j, j * d + i) = 1.0;
    return m;
}

ComplexMatrix antisymmetric_projector(std::size_t d) {
    ComplexMatrix m = ComplexMatrix::identity(d * d) - swap_operator(d);
    m *= 0.5;
    return m;
}

DensityMatrix bell_phi_plus(std::size_t d) {
    return {{d, d}, phi_plus_projector(d)};
}

DensityMatrix isotropic(std::size_t d, double f) {
    check_dimension(d);
    check_unit_interval(f, "f");
    const double dd = static_cast<double>(d);
    const double noise = (1.0 - f) / (dd * dd - 1.0);
    ComplexMatrix m(d * d, d * d);
    for (std::size_t k = 0; k < d * d; ++k) m(k, k) = noise;
    const double overlap = (f - noise) / dd;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i * d + i, j * d + j) += overlap;
    return {{d, d}, m};
}

DensityMatrix werner_d(std::size_t d, double w) {
    check_dimension(d);
    check_unit_interval(w, "w");
    const double dd = static_cast<double>(d);
    const double sym = 2.0 * (1.0 - w) / (dd * (dd + 1.0));
    const double anti = 2.0 * w / (dd * (dd - 1.0));
    // sym * (I + V)/2 + anti * (I - V)/2
    const double diag = 0.5 * (sym + anti);
    const double swap = 0.5 * (sym - anti);
    ComplexMatrix m(d * d, d * d);
    for (std::size_t k = 0; k < d * d; ++k) m(k, k) = diag;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i * d + j, j * d + i) += swap;
    return {{d, d}, m};
}

// ---------------------------------------------------------------------------
// State files

DensityMatrix parse_state(const std::string& text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    try {
        const auto& dims_json = doc.at("dims");
        if (!dims_json.is_array() || dims_json.size() != 2)
            throw Error(ErrorKind::ParseError, "\"dims\" must be a two-element array");
        const Dims dims{dims_json[0].get<std::size_t>(), dims_json[1].get<std::size_t>()};
        const auto& rows = doc.at("matrix");
        if (!rows.is_array()) throw Error(ErrorKind::ParseError, "\"matrix\" must be an array");
        const std::size_t n = rows.size();
        if (n != dims.total()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "matrix has " + std::to_string(n) + " rows but dims give " +
                            std::to_string(dims.total()));
        }
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!rows[i].is_array() || rows[i].size() != n)
                throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " has wrong length");
            for (std::size_t j = 0; j < n; ++j) {
                const auto& entry = rows[i][j];
                m(i, j) = cplx(entry.at("re").get<double>(), entry.value("im", 0.0));
            }
        }
        return {dims, m};
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

DensityMatrix load_state(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_state(buffer.str());
}

std::string serialize_state(const DensityMatrix& rho) {
    using nlohmann::json;
    json rows = json::array();
    const auto& m = rho.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
        rows.push_back(std::move(row));
    }
    json doc = {{"dims", {rho.dims().a, rho.dims().b}}, {"matrix", std::move(rows)}};
    return doc.dump(1);
}

void save_state(const std::filesystem::path& path, const DensityMatrix& rho) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
    out << serialize_state(rho) << '\n';
}

}  // namespace qcorr
