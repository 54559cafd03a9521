#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "osee/bessel.hpp"
#include "osee/cli.hpp"
#include "osee/ed_oracle.hpp"
#include "osee/entropy.hpp"
#include "osee/errors.hpp"
#include "osee/finite_index.hpp"
#include "osee/growth.hpp"
#include "osee/toeplitz.hpp"

#include <sstream>

namespace py = pybind11;
using namespace osee;

namespace {

// Operator strings are parsed against the chain when one is given, else in the
// thermodynamic limit.
OperatorSpec spec_for(const std::string& op, const std::optional<ChainConfig>& chain) {
    return parse_operator_spec(op, chain ? LatticeMode(*chain) : kThermodynamicLimit);
}

py::dict series_dict(const EntropySeries& s) {
    py::dict d;
    d["times"] = s.times;
    d["entropies"] = s.entropies;
    d["engine"] = engine_name(s.provenance.engine);
    d["spec"] = s.provenance.spec;
    return d;
}

}  // namespace

PYBIND11_MODULE(_osee, m) {
    m.doc() = "Operator-space entanglement entropy of the transverse Ising chain";

    auto config_error = py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);
    (void)config_error;

    py::class_<ChainConfig>(m, "ChainConfig")
        .def(py::init<int, double>(), py::arg("half_length"), py::arg("field") = 1.0)
        .def_readonly("half_length", &ChainConfig::half_length)
        .def_readonly("field", &ChainConfig::field)
        .def_property_readonly("sites", &ChainConfig::site_count)
        .def("__repr__", [](const ChainConfig& c) {
            std::ostringstream s;
            s << "ChainConfig(half_length=" << c.half_length << ", field=" << c.field << ")";
            return s.str();
        });

    py::class_<TruncationPolicy>(m, "TruncationPolicy")
        .def(py::init([](double scale, double offset) { return TruncationPolicy{scale, offset}; }),
             py::arg("pad_scale") = 10.0, py::arg("pad_offset") = 20.0)
        .def_readonly("pad_scale", &TruncationPolicy::pad_scale)
        .def_readonly("pad_offset", &TruncationPolicy::pad_offset)
        .def("pad", &TruncationPolicy::pad)
        .def("window", &TruncationPolicy::window);

    m.def(
        "parse_operator",
        [](const std::string& op, std::optional<ChainConfig> chain) {
            const auto spec = spec_for(op, chain);
            py::dict d;
            d["finite"] = spec.is_finite();
            d["flips"] = spec.flips;
            d["text"] = format_operator_spec(spec);
            return d;
        },
        py::arg("op"), py::arg("chain") = py::none(),
        "Staggered-index form of an operator string.");

    m.def("binary_entropy", &binary_entropy, py::arg("x"));
    m.def(
        "entropy_from_correlation", [](const Eigen::MatrixXd& g) { return entropy_from_correlation(g); },
        py::arg("gamma"));

    m.def(
        "evolve",
        [](const std::string& op, std::vector<double> times, int half_length, double field, int threads) {
            const ChainConfig chain(half_length, field);
            py::gil_scoped_release release;
            auto s = entropy_series(spec_for(op, chain), FiniteEngine{chain}, times, threads);
            py::gil_scoped_acquire acquire;
            return series_dict(s);
        },
        py::arg("op"), py::arg("times"), py::arg("half_length"), py::arg("field") = 1.0, py::arg("threads") = 1,
        "S(t) on an open chain of 2L sites.");

    m.def(
        "tl_evolve",
        [](const std::string& op, std::vector<double> times, TruncationPolicy policy, int threads) {
            py::gil_scoped_release release;
            auto s = entropy_series(spec_for(op, std::nullopt), TlEngine{policy, 1.0}, times, threads);
            py::gil_scoped_acquire acquire;
            return series_dict(s);
        },
        py::arg("op"), py::arg("times"), py::arg("policy") = TruncationPolicy{}, py::arg("threads") = 1,
        "S(t) in the thermodynamic limit at h = 1.");

    m.def(
        "correlation_matrix",
        [](const std::string& op, double t, std::optional<int> half_length, double field) {
            if (half_length) {
                const ChainConfig chain(*half_length, field);
                const Propagator prop(build_generator(chain));
                return correlation_matrix_finite(prop, t, occupation_profile(spec_for(op, chain)),
                                                 IndexWindow::left_half(chain))
                    .gamma;
            }
            require_critical_field(field);
            return correlation_matrix_tl(occupation_profile(spec_for(op, std::nullopt)), t).gamma;
        },
        py::arg("op"), py::arg("t"), py::arg("half_length") = py::none(), py::arg("field") = 1.0,
        "Gamma(t) on the left half; rows ordered from the deepest index up to 0.");

    m.def("bessel_row",
          [](double x, int n_min, int n_max) { return bessel_row(x, n_min, n_max).values(); },
          py::arg("x"), py::arg("n_min"), py::arg("n_max"));

    m.def(
        "saturation",
        [](const std::string& op, double t) {
            const auto spec = spec_for(op, std::nullopt);
            if (!spec.is_finite()) throw SemanticError("saturation applies to finite-index operators only");
            py::dict d;
            d["spectrum"] = saturation_spectrum(spec.flips, t);
            d["entropy"] = saturation_entropy(spec.flips, t);
            d["overlaps"] = overlap_matrix(spec.flips, t).g;
            return d;
        },
        py::arg("op"), py::arg("t") = kInfiniteTime);

    m.def("psi_overlap", [](int a, int b, double t) { return psi_overlap(a, b, t); }, py::arg("a"), py::arg("b"),
          py::arg("t"));

    m.def(
        "toeplitz",
        [](double t, int blocks, double radius) {
            if (blocks == 0) blocks = minimum_blocks(t);
            const PsiMatrix psi = build_psi(t, blocks);
            const Eigen::VectorXd lambda = psi_spectrum(psi);
            const EigenCensus c = eigen_census(t, lambda, radius);
            py::dict d;
            d["blocks"] = blocks;
            d["spectrum"] = lambda;
            d["entropy"] = spectral_entropy_from_eigenvalues(lambda);
            d["census"] = py::dict(py::arg("near_minus_one") = c.near_minus_one, py::arg("near_zero") = c.near_zero,
                                   py::arg("near_plus_one") = c.near_plus_one, py::arg("outside") = c.outside,
                                   py::arg("n_eps") = c.n_eps);
            return d;
        },
        py::arg("t"), py::arg("blocks") = 0, py::arg("radius") = kDefaultCensusRadius);

    m.def(
        "fit_log_growth",
        [](std::vector<double> times, std::vector<double> entropies, double t_min, double t_max) {
            const LogFit f = fit_log_growth(times, entropies, t_min, t_max);
            py::dict d;
            d["slope"] = f.slope;
            d["offset"] = f.offset;
            d["rms_residual"] = f.rms_residual;
            d["samples"] = f.samples;
            return d;
        },
        py::arg("times"), py::arg("entropies"), py::arg("t_min") = 5.0, py::arg("t_max") = 60.0);

    m.def(
        "ed_entropy",
        [](const std::string& op, double t, int half_length, double field, const std::string& basis) {
            const ChainConfig chain(half_length, field);
            const ed::HeisenbergEvolver evolver(ed::build_hamiltonian(chain));
            const auto a = evolver.evolve(ed::operator_from_text(op, chain), t);
            if (basis != "pauli" && basis != "majorana") throw ConfigError("basis must be 'pauli' or 'majorana'");
            return ed::operator_entropy_ed(a, basis == "pauli" ? ed::OperatorBasis::Pauli : ed::OperatorBasis::Majorana);
        },
        py::arg("op"), py::arg("t"), py::arg("half_length"), py::arg("field") = 1.0, py::arg("basis") = "pauli",
        "Exact-diagonalization entropy on a chain of at most 8 sites.");

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
