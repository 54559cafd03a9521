#include "osee/entropy.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "osee/errors.hpp"
#include "osee/parallel.hpp"

namespace osee {

double binary_entropy(double x) {
    if (!(x >= -kEntropyInputTolerance && x <= 1.0 + kEntropyInputTolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "binary_entropy argument " << x << " outside [0, 1]";
        throw NumericalError(msg.str());
    }
    x = std::clamp(x, 0.0, 1.0);
    double s = 0.0;
    if (x > 0.0) s -= x * std::log(x);
    if (x < 1.0) s -= (1.0 - x) * std::log1p(-x);
    return s;
}

double entropy_from_spectrum(std::span<const double> eigenvalues) {
    double s = 0.0;
    for (double g : eigenvalues) {
        if (!(g >= -kSpectrumTolerance && g <= 1.0 + kSpectrumTolerance)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "correlation eigenvalue " << g << " outside [0, 1]";
            throw NumericalError(msg.str());
        }
        s += binary_entropy(std::clamp(g, 0.0, 1.0));
    }
    return s;
}

Eigen::VectorXd symmetric_spectrum(const Eigen::MatrixXd& m) {
    if (m.size() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
    return solver.eigenvalues();
}

double entropy_from_correlation(const Eigen::MatrixXd& gamma) {
    if (gamma.rows() != gamma.cols()) throw NumericalError("correlation matrix is not square");
    if (gamma.size() > 0 && (gamma - gamma.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw NumericalError("correlation matrix is not symmetric");
    }
    const Eigen::VectorXd spectrum = symmetric_spectrum(gamma);
    return entropy_from_spectrum({spectrum.data(), static_cast<std::size_t>(spectrum.size())});
}

double entropy_from_correlation(const CorrelationMatrix& gamma) {
    return entropy_from_correlation(gamma.gamma);
}

std::string engine_name(Engine engine) {
    switch (engine) {
        case Engine::Finite: return "finite";
        case Engine::Tl: return "tl";
        case Engine::Analytic: return "analytic";
        case Engine::Toeplitz: return "toeplitz";
        case Engine::Ed: return "ed";
    }
    return "unknown";
}

std::vector<double> uniform_time_grid(double t_max, double dt) {
    if (!(dt > 0.0) || !(t_max >= 0.0)) throw ConfigError("time grid needs dt > 0 and t_max >= 0");
    std::vector<double> times;
    for (long k = 0;; ++k) {
        const double t = static_cast<double>(k) * dt;
        if (t > t_max + dt * 1e-6) break;
        times.push_back(t);
    }
    return times;
}

namespace {

void check_times(std::span<const double> times) {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0)) throw ConfigError("times must be nonnegative");
        if (i > 0 && !(times[i] > times[i - 1])) throw ConfigError("times must be strictly increasing");
    }
}

}  // namespace

EntropySeries entropy_series(const OperatorSpec& spec, const EngineChoice& engine,
                             std::span<const double> times, int threads) {
    check_times(times);
    const OccupationProfile occ = occupation_profile(spec);
    EntropySeries series;
    series.times.assign(times.begin(), times.end());
    series.entropies.assign(times.size(), 0.0);
    series.provenance.spec = format_operator_spec(spec);

    if (const auto* finite = std::get_if<FiniteEngine>(&engine)) {
        const ChainConfig& chain = finite->chain;
        occ.occupied_modes(chain);  // range check before spawning work
        series.provenance.engine = Engine::Finite;
        series.provenance.chain = chain;
        const Propagator propagator(build_generator(chain));
        const IndexWindow window = IndexWindow::left_half(chain);
        parallel_for(times.size(), threads, [&](std::size_t i) {
            series.entropies[i] =
                entropy_from_correlation(correlation_matrix_finite(propagator, times[i], occ, window));
        });
    } else {
        const auto& tl = std::get<TlEngine>(engine);
        require_critical_field(tl.field);
        series.provenance.engine = Engine::Tl;
        series.provenance.policy = tl.policy;
        parallel_for(times.size(), threads, [&](std::size_t i) {
            series.entropies[i] = entropy_from_correlation(correlation_matrix_tl(occ, times[i], tl.policy));
        });
    }
    return series;
}

}  // namespace osee
