// Python bindings. States cross the boundary as complex numpy arrays plus a
// (dA, dB) pair; library errors surface as qcorr.QcorrError.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "qcorr/analysis.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/error.hpp"
#include "qcorr/oracle.hpp"
#include "qcorr/report_io.hpp"

namespace py = pybind11;
using namespace qcorr;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
    if (a.ndim() != 2) throw Error(ErrorKind::NonSquare, "expected a 2-D array");
    const auto rows = static_cast<std::size_t>(a.shape(0));
    const auto cols = static_cast<std::size_t>(a.shape(1));
    return ComplexMatrix(rows, cols, std::vector<cplx>(a.data(), a.data() + rows * cols));
}

CArray to_array(const ComplexMatrix& m) {
    CArray out({m.rows(), m.cols()});
    std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
    return out;
}

// Dims default to a square split of the matrix size.
DensityMatrix to_state(const CArray& a, std::optional<std::pair<std::size_t, std::size_t>> dims) {
    const ComplexMatrix m = to_matrix(a);
    Dims d;
    if (dims) {
        d = {dims->first, dims->second};
    } else {
        const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m.rows()))));
        d = {side, side};
    }
    return DensityMatrix(d, m);
}

py::object from_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::dict report_dict(const CorrelationReport& r) {
    py::dict out;
    out["d_g"] = r.d_g;
    out["d_g_min"] = r.d_g_min;
    out["d_g_max"] = r.d_g_max;
    out["m"] = r.m;
    out["u"] = r.u;
    out["fidelity"] = r.fidelity;
    out["negativity"] = r.negativity;
    out["regime"] = to_string(r.regime);
    return out;
}

py::dict audit_dict(const TheoremAudit& a) {
    auto entry = [](bool applicable, bool holds) {
        py::dict e;
        e["applicable"] = applicable;
        e["holds"] = holds;
        return e;
    };
    py::dict out;
    out["eq9"] = entry(a.eq9_applicable, a.eq9_holds);
    out["eq10"] = entry(a.eq10_applicable, a.eq10_holds);
    out["eq11"] = entry(a.eq11_applicable, a.eq11_holds);
    return out;
}

}  // namespace

PYBIND11_MODULE(_qcorr, m) {
    m.doc() = "Bipartite quantum-correlation toolkit";

    static py::handle error_type = py::exception<Error>(m, "QcorrError", PyExc_ValueError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
            exc.attr("kind") = to_string(e.kind());
            exc.attr("detail") = e.detail();
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    using OptDims = std::optional<std::pair<std::size_t, std::size_t>>;
    auto state_arg = [](const char* name = "rho") { return py::arg(name); };

    // states
    m.def("werner2", [](double p) { return to_array(werner2(p).matrix()); }, py::arg("p"));
    m.def("singlet", [] { return to_array(singlet().matrix()); });
    m.def("rho1", [] { return to_array(rho1().matrix()); });
    m.def("maximally_mixed", [](std::size_t d) { return to_array(maximally_mixed({d, d}).matrix()); }, py::arg("d") = 2);
    m.def("bell_phi_plus", [](std::size_t d) { return to_array(bell_phi_plus(d).matrix()); }, py::arg("d") = 2);
    m.def("isotropic", [](std::size_t d, double f) { return to_array(isotropic(d, f).matrix()); }, py::arg("d"),
          py::arg("f"));
    m.def("werner_d", [](std::size_t d, double w) { return to_array(werner_d(d, w).matrix()); }, py::arg("d"),
          py::arg("w"));
    m.def("random_density_matrix",
          [](std::size_t da, std::size_t db, std::size_t rank, std::uint64_t seed) {
              return to_array(random_density_matrix(da, db, rank, seed));
          },
          py::arg("da"), py::arg("db"), py::arg("rank"), py::arg("seed"));
    m.def("validate", [](const CArray& rho, OptDims dims) { to_state(rho, dims); }, state_arg(),
          py::arg("dims") = py::none(), "Raise QcorrError unless rho is a valid density matrix.");
    m.def("load_state",
          [](const std::string& path) {
              const DensityMatrix rho = load_state(path);
              return py::make_tuple(to_array(rho.matrix()), py::make_tuple(rho.dims().a, rho.dims().b));
          },
          py::arg("path"));
    m.def("save_state",
          [](const std::string& path, const CArray& rho, OptDims dims) { save_state(path, to_state(rho, dims)); },
          py::arg("path"), state_arg(), py::arg("dims") = py::none());

    // linear algebra
    m.def("eigvalsh", [](const CArray& a) { return eigvalsh(to_matrix(a)); }, py::arg("a"));
    m.def("partial_transpose",
          [](const CArray& rho, std::pair<std::size_t, std::size_t> dims, const std::string& sub) {
              return to_array(partial_transpose(to_matrix(rho), {dims.first, dims.second},
                                                sub == "B" ? Subsystem::B : Subsystem::A));
          },
          state_arg(), py::arg("dims"), py::arg("subsystem") = "A");

    // two-qubit correlations
    m.def("bloch_decompose",
          [](const CArray& rho) {
              const BlochForm f = bloch_decompose(to_state(rho, std::nullopt));
              py::dict out;
              out["x"] = f.x;
              out["y"] = f.y;
              out["t"] = f.t;
              return out;
          },
          state_arg());
    m.def("geometric_discord",
          [](const CArray& rho, const std::string& normalization) {
              return geometric_discord(to_state(rho, std::nullopt), parse_normalization(normalization));
          },
          state_arg(), py::arg("normalization") = "paper");
    m.def("discord_bounds",
          [](const CArray& rho) {
              const DiscordBounds b = discord_bounds(to_state(rho, std::nullopt));
              return py::make_tuple(b.min, b.max);
          },
          state_arg());
    m.def("horodecki_m", [](const CArray& rho) { return horodecki_m(to_state(rho, std::nullopt)); }, state_arg());
    m.def("teleportation_fidelity",
          [](const CArray& rho) { return teleportation_fidelity(to_state(rho, std::nullopt)); }, state_arg());
    m.def("negativity", [](const CArray& rho, OptDims dims) { return negativity_numeric(to_state(rho, dims)); },
          state_arg(), py::arg("dims") = py::none(), "Normalized negativity (||rho^T_A||_1 - 1) / (d - 1).");
    m.def("full_report",
          [](const CArray& rho) {
              const CorrelationReport r = full_report(to_state(rho, std::nullopt));
              py::dict out = report_dict(r);
              out["audit"] = audit_dict(audit_theorems(r));
              return out;
          },
          state_arg());

    // oracle
    m.def("discord_bruteforce",
          [](const CArray& rho, int restarts, std::uint64_t seed, const std::string& normalization) {
              OracleOptions o;
              o.restarts = restarts;
              o.seed = seed;
              o.normalization = parse_normalization(normalization);
              OracleResult r;
              const DensityMatrix state = to_state(rho, std::nullopt);
              {
                  py::gil_scoped_release release;
                  r = discord_bruteforce(state, o);
              }
              py::dict out;
              out["value"] = r.value;
              out["converged"] = r.converged;
              out["restarts_used"] = r.restarts_used;
              out["best_params"] = from_json(to_json(r.best_params));
              return out;
          },
          state_arg(), py::arg("restarts") = 64, py::arg("seed") = 0, py::arg("normalization") = "paper");
    m.def("weyl_violations",
          [](std::size_t n, std::size_t samples, std::uint64_t seed) {
              return weyl_property_driver(n, samples, seed).violations;
          },
          py::arg("n"), py::arg("samples"), py::arg("seed") = 0);

    // d x d
    m.def("isotropic_report", [](std::size_t d, double f) { return from_json(to_json(isotropic_report(d, f))); },
          py::arg("d"), py::arg("f"));
    m.def("werner_d_report", [](std::size_t d, double w) { return from_json(to_json(werner_d_report(d, w))); },
          py::arg("d"), py::arg("w"));
    m.def("witness_plan",
          [](const std::string& family, std::size_t d) {
              return from_json(to_json(witness_local_decomposition(make_witness(parse_witness_family(family), d))));
          },
          py::arg("family"), py::arg("d"));

    // dynamics
    m.def("werner_decay_trajectory",
          [](double p0, double gamma, double t_max, std::size_t steps) {
              const Trajectory traj = trajectory(Channel::werner_decay(p0, gamma), t_max, steps);
              py::list regimes;
              for (const auto& r : traj.reports) regimes.append(to_string(r.regime));
              py::dict out;
              out["times"] = traj.times;
              out["regimes"] = regimes;
              out["bell_crossing_time"] = traj.bell_crossing_time;
              out["usefulness_crossing_time"] = traj.usefulness_crossing_time;
              out["audit_violations"] = audit_trajectory(traj).violations;
              return out;
          },
          py::arg("p0"), py::arg("gamma"), py::arg("t_max"), py::arg("steps"));
}
