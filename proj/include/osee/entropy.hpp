#pragma once

// Operator-space entanglement entropy from correlation-matrix spectra,
//   S = sum_j e(gamma_j),  e(x) = -x ln x - (1-x) ln(1-x),
// in nats, and time series of S over a grid.

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "osee/finite_propagator.hpp"
#include "osee/lattice.hpp"
#include "osee/tl_propagator.hpp"

namespace osee {

/// Round-off band accepted by binary_entropy.
inline constexpr double kEntropyInputTolerance = 1e-9;
/// Eigenvalues further than this outside [0, 1] indicate an assembly bug.
inline constexpr double kSpectrumTolerance = 1e-6;

double binary_entropy(double x);

/// Sum of e(gamma) with each gamma clamped to [0, 1].
double entropy_from_spectrum(std::span<const double> eigenvalues);

/// Eigenvalues of a symmetric matrix, ascending.
Eigen::VectorXd symmetric_spectrum(const Eigen::MatrixXd& m);

double entropy_from_correlation(const Eigen::MatrixXd& gamma);
double entropy_from_correlation(const CorrelationMatrix& gamma);

enum class Engine { Finite, Tl, Analytic, Toeplitz, Ed };

std::string engine_name(Engine engine);

struct FiniteEngine {
    ChainConfig chain;
};

struct TlEngine {
    TruncationPolicy policy;
    double field = 1.0;
};

using EngineChoice = std::variant<FiniteEngine, TlEngine>;

struct Provenance {
    Engine engine = Engine::Finite;
    std::optional<ChainConfig> chain;
    std::optional<TruncationPolicy> policy;
    std::string spec;
};

struct EntropySeries {
    std::vector<double> times;
    std::vector<double> entropies;
    Provenance provenance;
};

/// S(t) for each t in `times` (strictly increasing, >= 0). Samples are
/// independent and spread over `threads` workers; output keeps time order.
EntropySeries entropy_series(const OperatorSpec& spec, const EngineChoice& engine,
                             std::span<const double> times, int threads = 1);

/// 0, dt, 2 dt, ... up to t_max inclusive (within dt/1e6).
std::vector<double> uniform_time_grid(double t_max, double dt);

}  // namespace osee
