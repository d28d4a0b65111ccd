#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "swcontract/certify.hpp"
#include "swcontract/json_io.hpp"
#include "swcontract/models.hpp"
#include "swcontract/norms.hpp"
#include "swcontract/repro.hpp"
#include "swcontract/simsw.hpp"
#include "swcontract/transact.hpp"

namespace {

using swc::Json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNotCertified = 2;

Json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw swc::InvalidInput("cannot open config file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw swc::InvalidInput("config '" + path + "' is not valid JSON: " + e.what());
    }
    return j;
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw swc::InvalidInput("cannot open output file '" + out_path + "'");
    out << text;
}

void emit_json(const Json& j, const std::string& out_path) {
    emit_text(j.dump(2) + "\n", out_path);
}

double opt_number(const Json& cfg, const char* key, double fallback) {
    if (!cfg.contains(key)) return fallback;
    if (!cfg[key].is_number()) throw swc::InvalidInput(std::string("at $.") + key + ": expected a number");
    return cfg[key].get<double>();
}

int cmd_measure(const Json& cfg, const std::string& out_path) {
    const swc::NormSpec norm = swc::norm_from_json(cfg.contains("norm") ? cfg["norm"] : Json(),
                                                   "$.norm");
    if (!cfg.contains("A")) throw swc::InvalidInput("at $.A: missing field");
    const swc::Mat a = swc::matrix_from_json(cfg["A"], "$.A");
    if (a.rows() != swc::norm_dimension(norm) || !a.square())
        throw swc::InvalidInput("at $.A: matrix must be square and match the norm dimension");
    emit_json(swc::measure_to_json(swc::matrix_measure(norm, a)), out_path);
    return kExitOk;
}

int cmd_beta(const Json& cfg, const std::string& out_path, uint64_t seed) {
    if (!cfg.contains("from")) throw swc::InvalidInput("at $.from: missing field");
    if (!cfg.contains("to")) throw swc::InvalidInput("at $.to: missing field");
    const swc::NormSpec from = swc::norm_from_json(cfg["from"], "$.from");
    const swc::NormSpec to = swc::norm_from_json(cfg["to"], "$.to");
    std::string method = "exact";
    if (cfg.contains("method")) {
        if (!cfg["method"].is_string()) throw swc::InvalidInput("at $.method: expected a string");
        method = cfg["method"].get<std::string>();
    }
    swc::BetaResult result;
    if (method == "exact")
        result = swc::beta_exact(from, to);
    else if (method == "fallback")
        result = swc::beta_with_fallback(from, to);
    else if (method == "sampled")
        result = swc::sampled_sup(from, to,
                                  static_cast<int>(opt_number(cfg, "samples", 2000)), seed);
    else
        throw swc::InvalidInput("at $.method: must be exact, fallback or sampled");
    emit_json(swc::beta_to_json(result), out_path);
    return kExitOk;
}

swc::ModeBounds bounds_from_json(const Json& cfg) {
    if (!cfg.contains("bounds")) throw swc::InvalidInput("at $.bounds: missing field");
    const Json& b = cfg["bounds"];
    swc::ModeBounds bounds;
    if (!b.contains("alpha") || !b["alpha"].is_object())
        throw swc::InvalidInput("at $.bounds.alpha: expected an object of mode -> measure bound");
    for (const auto& [key, val] : b["alpha"].items()) {
        if (!val.is_number())
            throw swc::InvalidInput("at $.bounds.alpha." + key + ": expected a number");
        bounds.alpha[std::stoi(key)] = val.get<double>();
    }
    if (b.contains("beta")) {
        if (!b["beta"].is_array())
            throw swc::InvalidInput("at $.bounds.beta: expected an array of [from, to, value]");
        for (size_t i = 0; i < b["beta"].size(); ++i) {
            const Json& e = b["beta"][i];
            const std::string p = "$.bounds.beta[" + std::to_string(i) + "]";
            if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
                !e[1].is_number_integer() || !e[2].is_number())
                throw swc::InvalidInput("at " + p + ": expected [from, to, value]");
            bounds.beta[{e[0].get<int>(), e[1].get<int>()}] = e[2].get<double>();
        }
    }
    return bounds;
}

int cmd_certify(const Json& cfg, const std::string& out_path) {
    std::string form = "staircase";
    if (cfg.contains("form")) {
        if (!cfg["form"].is_string()) throw swc::InvalidInput("at $.form: expected a string");
        form = cfg["form"].get<std::string>();
    }
    swc::Certificate cert;
    if (form == "staircase") {
        if (!cfg.contains("signal")) throw swc::InvalidInput("at $.signal: missing field");
        const swc::SwitchingSignal signal = swc::signal_from_json(cfg["signal"], "$.signal");
        cert = swc::certify_staircase(bounds_from_json(cfg), signal,
                                      opt_number(cfg, "t0", signal.t0()),
                                      opt_number(cfg, "T0", 0.0), opt_number(cfg, "Tmax", 0.0),
                                      opt_number(cfg, "c_min", 0.0));
    } else if (form == "ltv2") {
        for (const char* key : {"mu1", "mu2", "beta12", "beta21", "phi_r"})
            if (!cfg.contains(key))
                throw swc::InvalidInput(std::string("at $.") + key + ": missing field");
        std::optional<double> dwell;
        if (cfg.contains("dwell")) dwell = opt_number(cfg, "dwell", 0.0);
        cert = swc::certify_ltv_two_mode(opt_number(cfg, "mu1", 0), opt_number(cfg, "mu2", 0),
                                         opt_number(cfg, "beta12", 0),
                                         opt_number(cfg, "beta21", 0),
                                         opt_number(cfg, "phi_r", 0), dwell);
    } else if (form == "general") {
        if (!cfg.contains("alpha_profile") || !cfg["alpha_profile"].is_array())
            throw swc::InvalidInput("at $.alpha_profile: expected an array of [duration, alpha]");
        std::vector<swc::AlphaSegment> profile;
        for (const Json& e : cfg["alpha_profile"])
            profile.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
        std::vector<swc::LogBetaEvent> events;
        if (cfg.contains("events"))
            for (const Json& e : cfg["events"])
                events.push_back({e.at(0).get<double>(), std::log(e.at(1).get<double>())});
        cert = swc::certify_general(profile, events, opt_number(cfg, "t0", 0.0),
                                    opt_number(cfg, "T0", 0.0), opt_number(cfg, "Tmax", 1.0),
                                    opt_number(cfg, "c_min", 0.0));
    } else {
        throw swc::InvalidInput("at $.form: must be staircase, ltv2 or general");
    }
    emit_json(swc::certificate_to_json(cert), out_path);
    return cert.satisfied ? kExitOk : kExitNotCertified;
}

swc::SwitchedSystem system_from_json(const Json& cfg) {
    if (cfg.contains("model")) {
        const std::string model = cfg["model"].get<std::string>();
        swc::Vec b(2, 0.0);
        if (cfg.contains("B")) b = swc::vector_from_json(cfg["B"], "$.system.B");
        if (model == "ltv1")
            return swc::SwitchedSystem({{1, swc::linear_mode(swc::ltv1_A(1), b)},
                                        {2, swc::linear_mode(swc::ltv1_A(2), b)}},
                                       2);
        if (model == "ltv2")
            return swc::SwitchedSystem({{1, swc::linear_mode(swc::ltv2_A(1), b)},
                                        {2, swc::linear_mode(swc::ltv2_A(2), b)}},
                                       2);
        throw swc::InvalidInput("at $.system.model: unknown model '" + model + "'");
    }
    if (!cfg.contains("modes") || !cfg["modes"].is_object())
        throw swc::InvalidInput("at $.system.modes: expected an object of mode -> {A, B}");
    std::map<int, swc::ModeDynamics> modes;
    int dim = 0;
    for (const auto& [key, val] : cfg["modes"].items()) {
        const std::string p = "$.system.modes." + key;
        if (!val.contains("A")) throw swc::InvalidInput("at " + p + ".A: missing field");
        const swc::Mat a = swc::matrix_from_json(val["A"], p + ".A");
        swc::Vec b(a.rows(), 0.0);
        if (val.contains("B")) b = swc::vector_from_json(val["B"], p + ".B");
        modes[std::stoi(key)] = swc::linear_mode(a, b);
        dim = a.rows();
    }
    return swc::SwitchedSystem(std::move(modes), dim);
}

int cmd_simulate(const Json& cfg, const std::string& out_path, double dt) {
    if (!cfg.contains("system")) throw swc::InvalidInput("at $.system: missing field");
    const swc::SwitchedSystem system = system_from_json(cfg["system"]);
    if (!cfg.contains("signal")) throw swc::InvalidInput("at $.signal: missing field");
    const swc::SwitchingSignal signal = swc::signal_from_json(cfg["signal"], "$.signal");
    if (!cfg.contains("x0")) throw swc::InvalidInput("at $.x0: missing field");
    const swc::Vec x0 = swc::vector_from_json(cfg["x0"], "$.x0");
    const double t0 = opt_number(cfg, "t0", signal.t0());
    const double tf = opt_number(cfg, "tf", t0 + 10.0);
    if (cfg.contains("dt")) dt = opt_number(cfg, "dt", dt);

    if (cfg.contains("y0")) {
        const swc::Vec y0 = swc::vector_from_json(cfg["y0"], "$.y0");
        if (!cfg.contains("norms") || !cfg["norms"].is_object())
            throw swc::InvalidInput("at $.norms: pair runs need a mode -> norm object");
        std::map<int, swc::NormSpec> schedule;
        for (const auto& [key, val] : cfg["norms"].items())
            schedule.emplace(std::stoi(key), swc::norm_from_json(val, "$.norms." + key));
        const swc::PairDivergence pd =
            swc::pair_divergence(system, signal, x0, y0, schedule, t0, tf, dt);
        Json j;
        j["fitted_rate"] = swc::jnum(pd.fitted_rate);
        j["initial_error"] = swc::jnum(pd.err_active.front());
        j["final_error"] = swc::jnum(pd.err_active.back());
        j["final_error_euclid"] = swc::jnum(pd.err_euclid.back());
        j["diverged"] = pd.diverged;
        emit_json(j, out_path);
        return pd.diverged ? kExitNotCertified : kExitOk;
    }

    const swc::Trajectory traj = swc::simulate(system, signal, x0, t0, tf, dt);
    std::ostringstream csv;
    swc::write_csv(traj, csv);
    emit_text(csv.str(), out_path);
    return traj.diverged ? kExitNotCertified : kExitOk;
}

int cmd_sync(const Json& cfg, const std::string& out_path) {
    const swc::Graph graph = cfg.contains("graph")
                                 ? swc::graph_from_json(cfg["graph"], "$.graph")
                                 : swc::sample_graph10();
    const double k = opt_number(cfg, "k", 2.0);
    const swc::Mat gamma = cfg.contains("gamma") ? swc::matrix_from_json(cfg["gamma"], "$.gamma")
                                                 : swc::Mat::identity(3);
    swc::Vec xi = {1.0, 3.4042, 1.0369};
    if (cfg.contains("xi")) xi = swc::vector_from_json(cfg["xi"], "$.xi");
    const double duty_off = opt_number(cfg, "duty_off", 0.25);
    const double c_min = opt_number(cfg, "c_min", 0.0);

    const double lam2 = swc::lambda2(graph);
    const swc::ChuaParams chua;
    const auto [j_inner, j_outer] = swc::chua_jacobian_slopes(chua);
    const swc::NormSpec off_norm = swc::WeightedLp{swc::LpOrder::one, xi};
    const swc::NormSpec on_norm = swc::euclidean(3);
    const double mu0 = std::max(swc::matrix_measure_value(off_norm, j_inner),
                                swc::matrix_measure_value(off_norm, j_outer));
    const double mu1 =
        std::max(swc::matrix_measure_value(
                     on_norm, swc::variational_mode_matrix(j_inner, k, lam2, gamma, 1)),
                 swc::matrix_measure_value(
                     on_norm, swc::variational_mode_matrix(j_outer, k, lam2, gamma, 1)));
    const double beta01 = swc::beta_exact(off_norm, on_norm).value;
    const double beta10 = swc::beta_exact(on_norm, off_norm).value;
    const swc::Mat neg_gamma = -1.0 * gamma;
    const bool gamma_ok = swc::matrix_measure_value(on_norm, neg_gamma) <= 1e-12;

    Json j;
    j["lambda2"] = swc::jnum(lam2);
    j["mu0"] = swc::jnum(mu0);
    j["mu1"] = swc::jnum(mu1);
    j["beta01"] = swc::jnum(beta01);
    j["beta10"] = swc::jnum(beta10);
    j["gamma_ok"] = gamma_ok;

    bool certified = false;
    try {
        const double t_star = swc::solve_min_period(mu0, mu1, beta01, beta10, duty_off, c_min);
        j["feasible"] = true;
        j["T_star"] = swc::jnum(t_star);
        certified = gamma_ok;
    } catch (const swc::Infeasible&) {
        j["feasible"] = false;
    }
    if (cfg.contains("period")) {
        const swc::Certificate cert =
            swc::sync_certify(mu0, mu1, beta01, beta10, duty_off,
                              opt_number(cfg, "period", 1.0), c_min, gamma_ok);
        j["certificate"] = swc::certificate_to_json(cert);
        certified = cert.satisfied;
    }
    emit_json(j, out_path);
    return certified ? kExitOk : kExitNotCertified;
}

int cmd_repro(const std::string& out_path) {
    const std::vector<swc::ReproRow> rows = swc::repro_rows();
    std::cout << swc::repro_to_text(rows);
    if (!out_path.empty()) emit_json(swc::repro_to_json(rows), out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contraction certificates and simulation for switched systems"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    uint64_t seed = 0;
    double dt = 1e-3;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_path, "output file (default: standard output)");
    app.add_option("--seed", seed, "RNG seed for sampled estimators");
    app.add_option("--dt", dt, "integration step in seconds");

    auto* measure = app.add_subcommand("measure", "matrix measure of A under a norm");
    auto* beta = app.add_subcommand("beta", "transaction coefficient between two norms");
    auto* certify = app.add_subcommand("certify", "averaged contraction certificate");
    auto* simulate = app.add_subcommand("simulate", "integrate a switched system");
    auto* sync = app.add_subcommand("sync", "blinking-network synchronization analysis");
    auto* repro = app.add_subcommand("repro", "recompute the benchmark claims");
    // global options (--config, --out, ...) may also appear after the subcommand
    for (auto* sub : {measure, beta, certify, simulate, sync, repro}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (repro->parsed()) return cmd_repro(out_path);
        if (config_path.empty()) throw swc::InvalidInput("--config is required for this command");
        const Json cfg = load_config(config_path);
        if (measure->parsed()) return cmd_measure(cfg, out_path);
        if (beta->parsed()) return cmd_beta(cfg, out_path, seed);
        if (certify->parsed()) return cmd_certify(cfg, out_path);
        if (simulate->parsed()) return cmd_simulate(cfg, out_path, dt);
        if (sync->parsed()) return cmd_sync(cfg, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
