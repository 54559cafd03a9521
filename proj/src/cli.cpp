#include "osee/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>
#include <random>
#include <sstream>

#include "osee/ed_oracle.hpp"
#include "osee/entropy.hpp"
#include "osee/errors.hpp"
#include "osee/finite_index.hpp"
#include "osee/growth.hpp"
#include "osee/series_io.hpp"
#include "osee/toeplitz.hpp"

namespace osee {

namespace {

using nlohmann::json;

constexpr int kMaxHalfLength = 1000;

struct ExperimentConfig {
    std::string subcommand;
    std::string op;
    int length = 200;  // number of sites 2L
    double field = 1.0;
    double t_max = 50.0;
    double dt = 0.25;
    std::vector<double> times;
    double pad_scale = 10.0;
    double pad_offset = 20.0;
    std::string output = "-";
    std::string format = "csv";
    int threads = 1;

    ChainConfig chain() const {
        if (length < 2 || length % 2 != 0) {
            throw ConfigError("--length is the number of sites 2L and must be even and >= 2, got " +
                              std::to_string(length));
        }
        if (length / 2 > kMaxHalfLength) {
            throw ConfigError("--length exceeds the finite-lattice budget L <= " + std::to_string(kMaxHalfLength));
        }
        return {length / 2, field};
    }

    TruncationPolicy policy() const {
        if (!(pad_scale > 0.0) || !(pad_offset >= 0.0)) throw ConfigError("truncation pad must be positive");
        return {pad_scale, pad_offset};
    }

    std::vector<double> grid() const { return times.empty() ? uniform_time_grid(t_max, dt) : times; }

    json to_json() const {
        json j{{"subcommand", subcommand}, {"format", format}, {"threads", threads}};
        if (!op.empty()) j["op"] = op;
        return j;
    }
};

// Writes `body` to the output path, or to `out` for "-".
template <class Writer>
void emit(const std::string& path, std::ostream& out, Writer&& body) {
    if (path == "-") {
        body(out);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + path + " for writing");
    body(file);
    file.flush();
    if (!file) throw IoError("write to " + path + " failed");
}

std::string describe_target(const std::string& path) { return path == "-" ? "stdout" : path; }

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed) {
        if (format == f) return;
    }
    throw ConfigError("unsupported --format " + format);
}

void add_grid_options(CLI::App* app, ExperimentConfig& cfg) {
    app->add_option("--tmax", cfg.t_max, "Last sample time")->capture_default_str();
    app->add_option("--dt", cfg.dt, "Time step of the uniform grid")->capture_default_str();
    app->add_option("--times", cfg.times, "Explicit sample times (overrides --tmax/--dt)");
}

void add_pad_options(CLI::App* app, ExperimentConfig& cfg) {
    app->add_option("--pad-scale", cfg.pad_scale, "Pad p(x) = scale*max(1,x^(1/3)) + offset")->capture_default_str();
    app->add_option("--pad-offset", cfg.pad_offset)->capture_default_str();
}

void add_output_options(CLI::App* app, ExperimentConfig& cfg) {
    app->add_option("-o,--output", cfg.output, "Output path, '-' for stdout")->capture_default_str();
    app->add_option("--format", cfg.format, "csv or json")->capture_default_str();
}

void write_series(const ExperimentConfig& cfg, const EntropySeries& series, const json& config,
                  std::ostream& out) {
    emit(cfg.output, out, [&](std::ostream& o) {
        if (cfg.format == "json") write_series_json(o, series, config);
        else write_series_csv(o, series, config);
    });
}

std::string series_summary(const std::string& name, const EntropySeries& series, const std::string& target) {
    std::ostringstream s;
    s << name << ": " << series.provenance.spec << ", " << series.times.size() << " samples";
    if (!series.times.empty()) {
        s << ", S(" << series.times.back() << ") = " << format_double(series.entropies.back());
    }
    s << " -> " << target;
    return s.str();
}

void run_evolve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    check_format(cfg.format, {"csv", "json"});
    const ChainConfig chain = cfg.chain();
    const OperatorSpec spec = parse_operator_spec(cfg.op, chain);
    const auto times = cfg.grid();
    json config = cfg.to_json();
    config.update({{"mode", "finite"}, {"sites", cfg.length}, {"half_length", chain.half_length},
                   {"h", cfg.field}, {"times", times}});
    if (cfg.times.empty()) config.update({{"tmax", cfg.t_max}, {"dt", cfg.dt}});
    const auto series = entropy_series(spec, FiniteEngine{chain}, times, cfg.threads);
    write_series(cfg, series, config, out);
    err << series_summary("evolve", series, describe_target(cfg.output)) << '\n';
}

void run_tl_evolve(const ExperimentConfig& cfg, std::ostream& out, std::ostream& err) {
    check_format(cfg.format, {"csv", "json"});
    require_critical_field(cfg.field);
    const OperatorSpec spec = parse_operator_spec(cfg.op, kThermodynamicLimit);
    const auto times = cfg.grid();
    json config = cfg.to_json();
    config.update({{"mode", "tl"}, {"h", cfg.field}, {"pad_scale", cfg.pad_scale},
                   {"pad_offset", cfg.pad_offset}, {"times", times}});
    if (cfg.times.empty()) config.update({{"tmax", cfg.t_max}, {"dt", cfg.dt}});
    const auto series = entropy_series(spec, TlEngine{cfg.policy(), cfg.field}, times, cfg.threads);
    write_series(cfg, series, config, out);
    err << series_summary("tl-evolve", series, describe_target(cfg.output)) << '\n';
}

double parse_time_arg(const std::string& text) {
    if (text == "inf" || text == "infinity") return kInfiniteTime;
    try {
        std::size_t used = 0;
        const double t = std::stod(text, &used);
        if (used != text.size() || !(t >= 0.0)) throw std::invalid_argument(text);
        return t;
    } catch (const std::exception&) {
        throw ConfigError("--time must be a nonnegative number or 'inf', got " + text);
    }
}

json time_json(double t) { return std::isinf(t) ? json("inf") : json(t); }

void run_saturation(const ExperimentConfig& cfg, const std::string& time_text, std::ostream& out,
                    std::ostream& err) {
    check_format(cfg.format, {"json"});
    const OperatorSpec spec = parse_operator_spec(cfg.op, kThermodynamicLimit);
    if (!spec.is_finite()) throw SemanticError("saturation applies to finite-index operators only");
    const double t = parse_time_arg(time_text);
    const auto policy = cfg.policy();
    const OverlapMatrix overlaps = overlap_matrix(spec.flips, t, policy);
    const auto spectrum = saturation_spectrum(spec.flips, t, policy);
    const double entropy = entropy_from_spectrum(spectrum);

    json config = cfg.to_json();
    config.update({{"mode", "tl"}, {"h", 1.0}, {"time", time_json(t)}, {"pad_scale", cfg.pad_scale},
                   {"pad_offset", cfg.pad_offset}});
    json overlap_rows = json::array();
    for (Eigen::Index i = 0; i < overlaps.g.rows(); ++i) {
        std::vector<double> row(overlaps.g.cols());
        for (Eigen::Index k = 0; k < overlaps.g.cols(); ++k) row[k] = overlaps.g(i, k);
        overlap_rows.push_back(row);
    }
    json result{{"config", config},        {"operator", format_operator_spec(spec)},
                {"indices", spec.flips},   {"time", time_json(t)},
                {"overlaps", overlap_rows}, {"spectrum", spectrum},
                {"entropy", entropy}};
    emit(cfg.output, out, [&](std::ostream& o) { o << result.dump(2) << '\n'; });
    err << "saturation: " << format_operator_spec(spec) << ", S = " << format_double(entropy) << " -> "
        << describe_target(cfg.output) << '\n';
}

void run_toeplitz(const ExperimentConfig& cfg, int blocks, double radius, bool with_spectrum,
                  bool cross_check, std::ostream& out, std::ostream& err) {
    check_format(cfg.format, {"csv", "json"});
    const auto policy = cfg.policy();
    const auto times = cfg.grid();
    json config = cfg.to_json();
    config.update({{"mode", "tl"}, {"h", 1.0}, {"blocks", blocks}, {"eps", radius}, {"times", times},
                   {"pad_scale", cfg.pad_scale}, {"pad_offset", cfg.pad_offset}});

    json samples = json::array();
    std::ostringstream csv;
    csv << "t,blocks,S,near_minus_one,near_zero,near_plus_one,outside,n_eps"
        << (cross_check ? ",S_gamma" : "") << '\n';
    for (double t : times) {
        const int n = blocks > 0 ? blocks : minimum_blocks(t, policy);
        const PsiMatrix psi = build_psi(t, n, policy);
        const Eigen::VectorXd lambda = psi_spectrum(psi);
        const double s = spectral_entropy_from_eigenvalues(lambda);
        const EigenCensus census = eigen_census(t, lambda, radius);
        json sample{{"t", t},
                    {"blocks", n},
                    {"entropy", s},
                    {"census",
                     {{"near_minus_one", census.near_minus_one},
                      {"near_zero", census.near_zero},
                      {"near_plus_one", census.near_plus_one},
                      {"outside", census.outside},
                      {"n_eps", census.n_eps}}}};
        csv << format_double(t) << ',' << n << ',' << format_double(s) << ',' << census.near_minus_one << ','
            << census.near_zero << ',' << census.near_plus_one << ',' << census.outside << ',' << census.n_eps;
        if (cross_check) {
            const auto gamma = correlation_matrix_tl(occupation_profile(OperatorSpec::infinite({})), t, policy);
            const double s_gamma = entropy_from_correlation(reflect_window(gamma));
            sample["entropy_gamma_prime"] = s_gamma;
            csv << ',' << format_double(s_gamma);
        }
        csv << '\n';
        if (with_spectrum) sample["spectrum"] = std::vector<double>(lambda.data(), lambda.data() + lambda.size());
        samples.push_back(std::move(sample));
    }
    emit(cfg.output, out, [&](std::ostream& o) {
        if (cfg.format == "json") {
            o << json{{"config", config}, {"samples", samples}}.dump(2) << '\n';
        } else {
            o << "# config: " << config.dump() << '\n' << csv.str();
        }
    });
    err << "toeplitz: " << times.size() << " samples -> " << describe_target(cfg.output) << '\n';
}

void run_fit(const ExperimentConfig& cfg, const std::string& input, const std::vector<double>& window,
             std::ostream& out, std::ostream& err) {
    check_format(cfg.format, {"json"});
    const EntropySeries series = read_series_file(input);
    const LogFit fit = fit_log_growth(series, window.at(0), window.at(1));
    json config = cfg.to_json();
    config.update({{"input", input}, {"window", window}});
    const double critical = 1.0 / 6.0, off_critical = 1.0 / 3.0;
    json result{{"config", config},
                {"slope", fit.slope},
                {"offset", fit.offset},
                {"t_min", fit.t_min},
                {"t_max", fit.t_max},
                {"rms_residual", fit.rms_residual},
                {"samples", fit.samples},
                {"reference",
                 {{"critical", critical},
                  {"off_critical", off_critical},
                  {"relative_deviation_critical", (fit.slope - critical) / critical},
                  {"relative_deviation_off_critical", (fit.slope - off_critical) / off_critical}}}};
    emit(cfg.output, out, [&](std::ostream& o) { o << result.dump(2) << '\n'; });
    err << "fit: c = " << format_double(fit.slope) << ", c' = " << format_double(fit.offset) << " over ["
        << fit.t_min << ", " << fit.t_max << "] (" << fit.samples << " samples)\n";
}

struct OracleOptions {
    std::vector<double> fields{0.7, 1.0};
    std::vector<std::string> ops{"X1", "pauli:z@1", "pauli:x@1"};
    std::vector<double> times{0.3, 1.0, 2.7};
    double tolerance = 1e-8;
    double basis_tolerance = 1e-12;
    int random_strings = 20;
    unsigned seed = 12345;
};

bool run_oracle_check(const ExperimentConfig& cfg, const OracleOptions& opt, std::ostream& out,
                      std::ostream& err) {
    check_format(cfg.format, {"json"});
    const int half = cfg.chain().half_length;
    if (2 * half > ed::kMaxSites) throw ConfigError("oracle-check supports 2L <= 8");
    if (!(opt.tolerance >= 0.0) || opt.random_strings < 0) throw ConfigError("oracle-check tolerance and counts must be >= 0");
    bool passed = true;
    json report;
    json config = cfg.to_json();
    config.update({{"sites", 2 * half}, {"fields", opt.fields}, {"ops", opt.ops}, {"times", opt.times},
                   {"tolerance", opt.tolerance}, {"random_strings", opt.random_strings}, {"seed", opt.seed}});
    report["config"] = config;

    json generator = json::array();
    json equivalence = json::array();
    for (double h : opt.fields) {
        const ChainConfig chain(half, h);
        if (chain.site_count() <= ed::kMaxGeneratorSites) {
            const auto g = ed::verify_generator(chain);
            generator.push_back({{"h", h}, {"mismatches", g.mismatches.size()}, {"residual", g.residual},
                                 {"passed", g.passed()}});
            passed = passed && g.passed();
        }
        const ed::HeisenbergEvolver evolver(ed::build_hamiltonian(chain));
        const Propagator propagator(build_generator(chain));
        for (const auto& op : opt.ops) {
            const ed::DenseOperator a = ed::operator_from_text(op, chain);
            const OccupationProfile occ = occupation_profile(parse_operator_spec(op, chain));
            for (double t : opt.times) {
                const double s_ed = ed::operator_entropy_ed(evolver.evolve(a, t), ed::OperatorBasis::Pauli);
                const double s_ff = entropy_from_correlation(
                    correlation_matrix_finite(propagator, t, occ, IndexWindow::left_half(chain)));
                const double diff = std::abs(s_ed - s_ff);
                const bool ok = diff <= opt.tolerance;
                passed = passed && ok;
                equivalence.push_back({{"h", h}, {"op", op}, {"t", t}, {"S_ed", s_ed}, {"S_gamma", s_ff},
                                       {"residual", diff}, {"passed", ok}});
            }
        }
    }

    json basis = json::array();
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> letter(0, 3);
    std::uniform_real_distribution<double> when(0.1, 3.0);
    const ChainConfig chain(half, opt.fields.empty() ? 1.0 : opt.fields.front());
    const ed::HeisenbergEvolver evolver(ed::build_hamiltonian(chain));
    for (int k = 0; k < opt.random_strings; ++k) {
        ed::PauliString p{std::vector<int>(static_cast<std::size_t>(chain.site_count())), 0};
        for (int& l : p.letters) l = letter(rng);
        const double t = when(rng);
        const auto a = evolver.evolve(ed::to_dense(p), t);
        const double sp = ed::operator_entropy_ed(a, ed::OperatorBasis::Majorana);
        const double sq = ed::operator_entropy_ed(a, ed::OperatorBasis::Pauli);
        const bool ok = std::abs(sp - sq) <= opt.basis_tolerance;
        passed = passed && ok;
        basis.push_back({{"letters", p.letters}, {"t", t}, {"S_majorana", sp}, {"S_pauli", sq},
                         {"residual", std::abs(sp - sq)}, {"passed", ok}});
    }

    report["generator"] = generator;
    report["equivalence"] = equivalence;
    report["basis"] = basis;
    report["passed"] = passed;
    emit(cfg.output, out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
    err << "oracle-check: " << (passed ? "PASS" : "FAIL") << " (" << equivalence.size() << " equivalence cases, "
        << basis.size() << " basis cases) -> " << describe_target(cfg.output) << '\n';
    return passed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Operator-space entanglement entropy of the transverse Ising chain", "osee"};
    // `--h` is the transverse field, so help stays on the long flag only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    ExperimentConfig cfg;

    auto* evolve = app.add_subcommand("evolve", "S(t) on a finite open chain");
    evolve->add_option("--op", cfg.op, "Operator string")->required();
    evolve->add_option("--h", cfg.field, "Transverse field")->capture_default_str();
    evolve->add_option("--length", cfg.length, "Number of sites 2L")->capture_default_str();
    add_grid_options(evolve, cfg);
    add_output_options(evolve, cfg);
    evolve->add_option("--threads", cfg.threads)->capture_default_str();

    auto* tl = app.add_subcommand("tl-evolve", "S(t) in the thermodynamic limit at h = 1");
    tl->add_option("--op", cfg.op, "Operator string")->required();
    tl->add_option("--h", cfg.field, "Transverse field (must be 1)")->capture_default_str();
    add_grid_options(tl, cfg);
    add_pad_options(tl, cfg);
    add_output_options(tl, cfg);
    tl->add_option("--threads", cfg.threads)->capture_default_str();

    std::string time_text = "inf";
    auto* saturation = app.add_subcommand("saturation", "Gram-matrix spectrum and entropy of a finite-index operator");
    saturation->add_option("--op", cfg.op, "Finite-index operator string")->required();
    saturation->add_option("--time", time_text, "Time, or 'inf' for the t -> infinity limit")->capture_default_str();
    add_pad_options(saturation, cfg);
    saturation->add_option("-o,--output", cfg.output)->capture_default_str();

    int blocks = 0;
    double radius = kDefaultCensusRadius;
    bool with_spectrum = false;
    bool cross_check = false;
    auto* toeplitz = app.add_subcommand("toeplitz", "Block-Toeplitz spectrum, census and entropy for F at h = 1");
    add_grid_options(toeplitz, cfg);
    add_pad_options(toeplitz, cfg);
    add_output_options(toeplitz, cfg);
    toeplitz->add_option("--blocks", blocks, "Block count N (0: policy minimum)")->capture_default_str();
    toeplitz->add_option("--eps", radius, "Census radius")->capture_default_str();
    toeplitz->add_flag("--spectrum", with_spectrum, "Include eigenvalues in JSON output");
    toeplitz->add_flag("--cross-check", cross_check, "Also report S from the correlation matrix");

    std::string input;
    std::vector<double> window{5.0, 60.0};
    auto* fit = app.add_subcommand("fit", "Fit S = c ln t + c' to a series file");
    fit->add_option("--input", input, "Series CSV or JSON")->required();
    fit->add_option("--window", window, "t_min t_max")->expected(2)->capture_default_str();
    fit->add_option("-o,--output", cfg.output)->capture_default_str();

    OracleOptions oracle;
    int oracle_length = 6;
    auto* check = app.add_subcommand("oracle-check", "Exact-diagonalization cross-checks on a small chain");
    check->add_option("--length", oracle_length, "Number of sites 2L (<= 8)")->capture_default_str();
    check->add_option("--fields", oracle.fields)->capture_default_str();
    check->add_option("--ops", oracle.ops)->capture_default_str();
    check->add_option("--times", oracle.times)->capture_default_str();
    check->add_option("--tolerance", oracle.tolerance)->capture_default_str();
    check->add_option("--random", oracle.random_strings, "Random strings for the basis check")->capture_default_str();
    check->add_option("--seed", oracle.seed)->capture_default_str();
    check->add_option("-o,--output", cfg.output)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (cfg.threads < 1) throw ConfigError("--threads must be >= 1");
        if (evolve->parsed()) {
            cfg.subcommand = "evolve";
            run_evolve(cfg, out, err);
        } else if (tl->parsed()) {
            cfg.subcommand = "tl-evolve";
            run_tl_evolve(cfg, out, err);
        } else if (saturation->parsed()) {
            cfg.subcommand = "saturation";
            cfg.format = "json";
            run_saturation(cfg, time_text, out, err);
        } else if (toeplitz->parsed()) {
            cfg.subcommand = "toeplitz";
            if (toeplitz->count("--format") == 0) cfg.format = "json";
            run_toeplitz(cfg, blocks, radius, with_spectrum, cross_check, out, err);
        } else if (fit->parsed()) {
            cfg.subcommand = "fit";
            cfg.format = "json";
            run_fit(cfg, input, window, out, err);
        } else if (check->parsed()) {
            cfg.subcommand = "oracle-check";
            cfg.format = "json";
            cfg.length = oracle_length;
            if (!run_oracle_check(cfg, oracle, out, err)) return kExitNumerical;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace osee
