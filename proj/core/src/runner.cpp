#include "sdde/runner.hpp"

#include <cmath>
#include <iostream>
#include <ostream>

#include "sdde/csv.hpp"
#include "sdde/errors.hpp"
#include "sdde/experiments.hpp"
#include "sdde/limit.hpp"
#include "sdde/model.hpp"
#include "sdde/spectrum.hpp"

namespace sdde {

namespace {

ModelSpec model_from_config(const RunConfig& config) {
    if (config.model == "linear1d") return linear1d(config.model_a, config.model_b, config.model_c);
    if (config.model == "additive") {
        Mat sigma(config.m, config.n);
        sigma.a = config.model_sigma;
        return additive(std::move(sigma));
    }
    if (config.model == "bounded2d") {
        Mat A(2, 2), B(2, 2);
        A.a = config.model_A;
        B.a = config.model_B;
        return bounded2d(A, B);
    }
    throw ValidationError("unknown model '" + config.model + "'");
}

void write_config_comment(CsvWriter& csv, const RunConfig& config) {
    for (const auto& [key, value] : config.to_kv()) csv.comment(key + " = " + value);
}

int grid_steps(double T, double h) { return static_cast<int>(std::ceil(T / h - 1e-9)); }

void run_simulate(const RunConfig& config) {
    const ModelSpec model = model_from_config(config);
    if (!model.bounded)
        std::cerr << "warning: model '" << model.name
                  << "' violates the boundedness hypotheses; convergence is not guaranteed\n";
    const DelaySchedule sched{config.c, config.k, config.eps};
    const double h = config.eps / config.h_ratio;
    double t_minus = config.t_minus;
    if (t_minus == 0.0 && sched.max_delta() > 0.0) {
        const int steps = static_cast<int>(std::ceil(2.0 * sched.max_delta() / h - 1e-9)) + 1;
        t_minus = -steps * h;
    } else if (t_minus < 0.0) {
        t_minus = -std::ceil(-t_minus / h - 1e-9) * h;
    }
    const double t_end = grid_steps(config.T, h) * h;
    const WienerGrid wiener = build_wiener(config.seed, t_minus, t_end, h, model.n);
    const Vec x0 = config.x0.empty() ? Vec(model.m, 0.0) : config.x0;
    const PastCondition past = PastCondition::constant(x0, t_minus);
    const SddeResult result = integrate_sdde(model, sched, past, wiener, h);

    CsvWriter csv(config.out);
    write_config_comment(csv, config);
    std::vector<std::string> columns = {"t"};
    for (int i = 0; i < model.m; ++i) columns.push_back("x_" + std::to_string(i + 1));
    if (config.emit_noise)
        for (int j = 0; j < model.n; ++j) columns.push_back("y_" + std::to_string(j + 1));
    csv.header(columns);

    const int offset = result.y.size() - result.x.size();
    std::vector<double> row(columns.size());
    for (int i = 0; i < result.x.size(); ++i) {
        row[0] = result.x.times[i];
        for (int comp = 0; comp < model.m; ++comp) row[1 + comp] = result.x.value(i, comp);
        if (config.emit_noise)
            for (int j = 0; j < model.n; ++j)
                row[1 + model.m + j] = result.y.value(offset + i, j);
        csv.row(row);
    }
}

void run_converge(const RunConfig& config) {
    const ModelSpec model = model_from_config(config);
    const DelaySchedule tmpl{config.c, config.k, config.eps_list.front()};
    const ConvergenceReport report =
        convergence_experiment(model, tmpl, config.eps_list, config.trials, config.a, config.T,
                               config.seed, config.h_ratio, config.x0);
    CsvWriter csv(config.out);
    write_config_comment(csv, config);
    csv.header({"eps", "p_hat", "wilson_lo", "wilson_hi", "mean_sup_err", "se"});
    for (const ConvergenceRow& r : report.rows)
        csv.row(std::vector<double>{r.eps, r.p_hat, r.wilson_lo, r.wilson_hi, r.mean_sup_err, r.se});
}

void run_falsify(const RunConfig& config) {
    const ModelSpec model = model_from_config(config);
    CsvWriter csv(config.out);
    write_config_comment(csv, config);
    csv.header({"eps", "mean_err_exact", "se_exact", "mean_err_taylor", "se_taylor", "t_stat"});
    for (double eps : config.eps_list) {
        const DelaySchedule sched{config.c, config.k, eps};
        const FalsificationResult r = drift_falsification(model, sched, config.trials, config.T,
                                                          config.seed, config.h_ratio, config.x0);
        csv.row(std::vector<double>{r.eps, r.mean_err_exact, r.se_exact, r.mean_err_taylor,
                                    r.se_taylor, r.t_stat});
    }
}

void run_gstat(const RunConfig& config) {
    const DelaySchedule tmpl{config.c, config.k, config.eps_list.front()};
    const GStatReport report =
        g_stat_experiment(tmpl, config.j, config.l, config.p, config.eps_list, config.trials,
                          config.T, config.seed, config.h_ratio);
    CsvWriter csv(config.out);
    write_config_comment(csv, config);
    csv.header({"eps", "estimate", "se"});
    for (const GStatRow& r : report.rows) csv.row(std::vector<double>{r.eps, r.estimate, r.se});
}

void run_ydiag(const RunConfig& config) {
    CsvWriter csv(config.out);
    write_config_comment(csv, config);
    csv.header({"eps", "estimate", "se"});
    for (double eps : config.eps_list) {
        const DelaySchedule sched{config.c, config.k, eps};
        const MomentEstimate est =
            eps_y_sup_moment(sched, config.T, config.trials, config.seed, config.h_ratio);
        csv.row(std::vector<double>{eps, est.estimate, est.se});
    }
}

void run_spectrum(const RunConfig& config) {
    const int hop = config.segment_length / 2;
    const int samples = (config.segments - 1) * hop + config.segment_length;
    Path series;
    if (config.noise == "ou") {
        series = ou_exact_chain(OUParams(config.tau, 1.0), config.h, samples, config.seed);
    } else {
        series = white_noise_chain(config.h, samples, config.seed);
    }
    const Spectrum spec = spectrum_periodogram(series, config.h, 0, config.segment_length);
    CsvWriter csv(config.out);
    write_config_comment(csv, config);
    csv.header({"omega", "power", "lorentzian_ref"});
    for (std::size_t i = 0; i < spec.omega.size(); ++i) {
        const double ref = config.noise == "ou" ? lorentzian_psd(config.tau, spec.omega[i])
                                                : white_psd(config.h);
        csv.row(std::vector<double>{spec.omega[i], spec.power[i], ref});
    }
}

void run_drift_table(const RunConfig& config) {
    CsvWriter csv(config.out);
    write_config_comment(csv, config);
    csv.header({"ratio", "exact", "taylor"});
    for (double r : config.ratios)
        csv.row(std::vector<double>{r, drift_coefficient(DriftKind::exact, r, 1.0),
                                    drift_coefficient(DriftKind::taylor, r, 1.0)});
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
    const std::string ext = ".csv";
    if (path.size() > ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0)
        return path.substr(0, path.size() - ext.size()) + suffix + ext;
    return path + suffix + ext;
}

void run_fig1(const RunConfig& config) {
    const Fig1Result result = fig1_realizations(config.model_a, config.model_b, config.model_c,
                                                config.tau, config.T, config.h, config.seed);
    const auto write = [&](const Path& path, const std::string& file) {
        CsvWriter csv(file);
        write_config_comment(csv, config);
        csv.header({"t", "x"});
        for (int i = 0; i < path.size(); ++i)
            csv.row(std::vector<double>{path.times[i], path.value(i, 0)});
    };
    write(result.ou_driven, with_suffix(config.out, "_ou"));
    write(result.white_driven, with_suffix(config.out, "_white"));
}

}  // namespace

void run(const RunConfig& config) {
    validate_config(config);
    if (config.command == "simulate") run_simulate(config);
    else if (config.command == "converge") run_converge(config);
    else if (config.command == "falsify") run_falsify(config);
    else if (config.command == "gstat") run_gstat(config);
    else if (config.command == "ydiag") run_ydiag(config);
    else if (config.command == "spectrum") run_spectrum(config);
    else if (config.command == "drift-table") run_drift_table(config);
    else if (config.command == "fig1") run_fig1(config);
    else throw ValidationError("unknown command '" + config.command + "'");
}

int run_with_exit_code(const RunConfig& config, std::ostream& diag) {
    try {
        run(config);
        return 0;
    } catch (const ParseError& e) {
        diag << "config error: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError& e) {
        diag << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::ios_base::failure& e) {
        diag << "i/o error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace sdde
