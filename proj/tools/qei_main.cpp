// qei_main.cpp — command-line front end: generate objects, run verifiers,
// emit machine-readable reports. Exit codes: 0 pass, 1 inequality violation,
// 2 usage or invariant error.
#include "qei/parallel.hpp"
#include "qei/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <iostream>
#include <optional>

namespace {

using namespace qei;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

struct VerifyOptions {
    std::string check;
    std::vector<std::string> inputs;
    std::string gen = "random";
    std::vector<int> dims;
    int dim = 2;
    int states = 3;
    int outcomes = 3;
    int kraus = 2;
    int out_dim = 0;
    int trials = 1;
    std::optional<std::uint64_t> seed;
    double tol = -1.0;
    double eq_tol = tol::eq;
    double s_param = 0.5;
    double lambda = 0.5;
    std::string format = "text";
    bool bits = false;
    std::string output;
};

double nats_to_bits(double x) { return x / std::log(2.0); }

void convert_report_to_bits(VerdictReport& v) {
    v.lhs = nats_to_bits(v.lhs);
    v.rhs = nats_to_bits(v.rhs);
    v.gap = nats_to_bits(v.gap);
}

bool is_entropy_check(const std::string& check) {
    static const std::vector<std::string> entropy_checks = {
        "ssa", "subadd", "triangle", "araki-lieb", "mpt", "jc", "mono", "holevo", "hall"};
    return std::find(entropy_checks.begin(), entropy_checks.end(), check) !=
           entropy_checks.end();
}

// --eq-tol reclassifies the equality flag from the report's own residual.
void reclassify_equality(VerdictReport& v, double eq_tol) {
    if (!v.equality || eq_tol == tol::eq) return;
    if (auto it = v.residuals.find("product_residual"); it != v.residuals.end())
        v.equality = it->second <= eq_tol;
    else if (auto it2 = v.residuals.find("markov_residual"); it2 != v.residuals.end())
        v.equality = it2->second <= eq_tol;
    else
        v.equality = v.gap <= eq_tol;
}

DensityOperator cli_full_rank_density(int dim, std::uint64_t seed) {
    Prng rng(seed);
    Matrix p = random_positive(dim, rng, 0.1);
    p /= p.trace().real();
    return DensityOperator(0.5 * (p + p.adjoint().eval()));
}

std::vector<int> dims_or(const VerifyOptions& opt, std::vector<int> fallback) {
    return opt.dims.empty() ? fallback : opt.dims;
}

// One verification trial: returns the verdict and a JSON dump of the inputs
// so violations are reproducible.
std::pair<VerdictReport, Json> run_trial(const VerifyOptions& opt, std::uint64_t trial_seed) {
    Prng rng(trial_seed);
    Json inputs = Json::object();

    if (opt.check == "ssa" || opt.check == "ssa-purified") {
        MultipartiteState s = [&] {
            if (opt.gen == "markov") {
                SystemShape shape(dims_or(opt, {2, 2, 2}));
                return make_markov_state(random_markov_distribution(shape, trial_seed), shape);
            }
            if (opt.gen == "product-split") {
                std::vector<int> d = dims_or(opt, {2, 2, 2, 2});
                if (d.size() != 4)
                    throw ParseError("product-split needs --dims d1,d2a,d2b,d3");
                MultipartiteState a(cli_full_rank_density(d[0] * d[1], rng.split(0).seed()),
                                    SystemShape({d[0], d[1]}));
                MultipartiteState b(cli_full_rank_density(d[2] * d[3], rng.split(1).seed()),
                                    SystemShape({d[2], d[3]}));
                return make_product_split_state(a, b);
            }
            SystemShape shape(dims_or(opt, {2, 2, 2}));
            return MultipartiteState(random_density(shape.total_dim(), trial_seed), shape);
        }();
        inputs["state"] = state_to_json(s);
        return {opt.check == "ssa" ? check_ssa(s, opt.tol) : check_ssa_purified(s, opt.tol),
                inputs};
    }
    if (opt.check == "subadd" || opt.check == "triangle") {
        SystemShape shape(dims_or(opt, {2, 2}));
        MultipartiteState s(random_density(shape.total_dim(), trial_seed), shape);
        inputs["state"] = state_to_json(s);
        return {opt.check == "subadd" ? check_subadditivity(s, opt.tol)
                                      : check_triangle(s, opt.tol),
                inputs};
    }
    if (opt.check == "araki-lieb") {
        SystemShape shape(dims_or(opt, {2, 2, 2}));
        MultipartiteState s(random_density(shape.total_dim(), trial_seed), shape);
        inputs["state"] = state_to_json(s);
        return {check_araki_lieb(s, opt.tol), inputs};
    }
    if (opt.check == "mpt") {
        SystemShape shape(dims_or(opt, {2, 2}));
        MultipartiteState rho(cli_full_rank_density(shape.total_dim(), rng.split(0).seed()),
                              shape);
        MultipartiteState gamma(cli_full_rank_density(shape.total_dim(), rng.split(1).seed()),
                                shape);
        inputs["rho"] = state_to_json(rho);
        inputs["gamma"] = state_to_json(gamma);
        return {check_mpt(rho, gamma, opt.tol), inputs};
    }
    if (opt.check == "jc") {
        std::vector<WeightedPair> comps;
        std::vector<double> w(3);
        double wsum = 0.0;
        for (double& x : w) {
            x = -std::log(1.0 - rng.uniform());
            wsum += x;
        }
        Json jc_inputs = Json::array();
        for (int k = 0; k < 3; ++k) {
            WeightedPair pair{w[k] / wsum, cli_full_rank_density(opt.dim, rng.split(10 + k).seed()),
                              cli_full_rank_density(opt.dim, rng.split(20 + k).seed())};
            jc_inputs.push_back({{"weight", pair.weight},
                                 {"rho", matrix_to_json(pair.rho.mat())},
                                 {"gamma", matrix_to_json(pair.gamma.mat())}});
            comps.push_back(std::move(pair));
        }
        inputs["components"] = jc_inputs;
        return {check_joint_convexity(comps, opt.tol), inputs};
    }
    if (opt.check == "mono") {
        int out = opt.out_dim > 0 ? opt.out_dim : opt.dim;
        KrausChannel phi = random_channel(opt.dim, out, opt.kraus, rng.split(0).seed());
        DensityOperator rho = cli_full_rank_density(opt.dim, rng.split(1).seed());
        DensityOperator gamma = cli_full_rank_density(opt.dim, rng.split(2).seed());
        inputs["channel"] = channel_to_json(phi);
        inputs["rho"] = matrix_to_json(rho.mat());
        inputs["gamma"] = matrix_to_json(gamma.mat());
        return {check_monotonicity(phi, rho, gamma, opt.tol), inputs};
    }
    if (opt.check == "gt") {
        HermitianOperator a(random_hermitian(opt.dim, rng));
        HermitianOperator b(random_hermitian(opt.dim, rng));
        inputs["a"] = matrix_to_json(a.mat());
        inputs["b"] = matrix_to_json(b.mat());
        return {golden_thompson_gap(a, b, opt.tol), inputs};
    }
    if (opt.check == "klein") {
        HermitianOperator a(random_positive(opt.dim, rng, 0.05));
        HermitianOperator b(random_positive(opt.dim, rng, 0.05));
        inputs["a"] = matrix_to_json(a.mat());
        inputs["b"] = matrix_to_json(b.mat());
        return {check_klein(a, b, opt.tol), inputs};
    }
    if (opt.check == "lieb3") {
        HermitianOperator r(random_positive(opt.dim, rng, 0.1));
        HermitianOperator s(random_positive(opt.dim, rng, 0.1));
        HermitianOperator t(random_positive(opt.dim, rng, 0.1));
        inputs["r"] = matrix_to_json(r.mat());
        inputs["s"] = matrix_to_json(s.mat());
        inputs["t"] = matrix_to_json(t.mat());
        return {lieb_triple_gap(r, s, t, opt.tol), inputs};
    }
    if (opt.check == "holevo" || opt.check == "hall") {
        Ensemble e = random_ensemble(opt.dim, opt.states, rng.split(0).seed());
        Povm m = random_povm(opt.dim, opt.outcomes, rng.split(1).seed());
        inputs["ensemble"] = ensemble_to_json(e);
        inputs["povm"] = povm_to_json(m);
        double tolv = opt.tol >= 0 ? opt.tol : tol::default_gap(opt.dim);
        VerdictReport v;
        v.dims = {opt.dim};
        v.tolerance = tolv;
        if (opt.check == "holevo") {
            v.name = "holevo_bound";
            v.lhs = accessible_info(e, m);
            v.rhs = holevo_chi(e);
        } else {
            InfoReport r = hall_bound(e.average(), m, e);
            v.name = "hall_bound";
            v.lhs = r.accessible_info;
            v.rhs = r.hall_bound;
            v.residuals["hall_commutator_max"] =
                r.equality_residuals.at("hall_commutator_max");
        }
        v.gap = v.rhs - v.lhs;
        v.holds = v.gap >= -tolv;
        return {v, inputs};
    }
    if (opt.check == "exp-concavity") {
        HermitianOperator k(0.5 * random_hermitian(opt.dim, rng));
        HermitianOperator a1(random_positive(opt.dim, rng, 0.1));
        HermitianOperator a2(random_positive(opt.dim, rng, 0.1));
        double lambda = 0.05 + 0.9 * rng.uniform();
        inputs["k"] = matrix_to_json(k.mat());
        inputs["a1"] = matrix_to_json(a1.mat());
        inputs["a2"] = matrix_to_json(a2.mat());
        inputs["lambda"] = lambda;
        return {exp_log_concavity_probe(k, a1, a2, lambda, opt.tol), inputs};
    }
    if (opt.check == "wyd") {
        HermitianOperator a1(random_positive(opt.dim, rng, 0.1));
        HermitianOperator b1(random_positive(opt.dim, rng, 0.1));
        HermitianOperator a2(random_positive(opt.dim, rng, 0.1));
        HermitianOperator b2(random_positive(opt.dim, rng, 0.1));
        Matrix k = gaussian_matrix(opt.dim, opt.dim, rng);
        inputs["k"] = matrix_to_json(k);
        inputs["s"] = opt.s_param;
        inputs["lambda"] = opt.lambda;
        return {wyd_concavity_probe(a1, b1, a2, b2, k, opt.s_param, opt.lambda, opt.tol),
                inputs};
    }
    if (opt.check == "herglotz") {
        HermitianOperator k(0.5 * random_hermitian(opt.dim, rng));
        HermitianOperator a(random_positive(opt.dim, rng, 0.2));
        Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat(), Eigen::EigenvaluesOnly);
        Matrix braw = random_hermitian(opt.dim, rng);
        HermitianOperator b(braw * (0.5 * es.eigenvalues().minCoeff() / braw.operatorNorm()));
        inputs["k"] = matrix_to_json(k.mat());
        inputs["a"] = matrix_to_json(a.mat());
        inputs["b"] = matrix_to_json(b.mat());
        return {epstein_herglotz_probe(k, a, b), inputs};
    }
    throw ParseError("unknown check '" + opt.check + "'");
}

// File-input mode: arity and object kinds depend on the check.
std::pair<VerdictReport, Json> run_on_files(const VerifyOptions& opt) {
    Json inputs = Json::object();
    auto need = [&](std::size_t n, const char* what) {
        if (opt.inputs.size() != n)
            throw ParseError(std::string("check '") + opt.check + "' needs " +
                             std::to_string(n) + " --input file(s): " + what);
    };
    if (opt.check == "ssa" || opt.check == "ssa-purified" || opt.check == "subadd" ||
        opt.check == "triangle" || opt.check == "araki-lieb") {
        need(1, "a multipartite state");
        MultipartiteState s = state_from_json(read_json_file(opt.inputs[0]));
        inputs["state"] = state_to_json(s);
        if (opt.check == "ssa") return {check_ssa(s, opt.tol), inputs};
        if (opt.check == "ssa-purified") return {check_ssa_purified(s, opt.tol), inputs};
        if (opt.check == "subadd") return {check_subadditivity(s, opt.tol), inputs};
        if (opt.check == "triangle") return {check_triangle(s, opt.tol), inputs};
        return {check_araki_lieb(s, opt.tol), inputs};
    }
    if (opt.check == "mpt") {
        need(2, "rho_12 and gamma_12 states");
        MultipartiteState rho = state_from_json(read_json_file(opt.inputs[0]));
        MultipartiteState gamma = state_from_json(read_json_file(opt.inputs[1]));
        return {check_mpt(rho, gamma, opt.tol), inputs};
    }
    if (opt.check == "mono") {
        need(3, "channel, rho, gamma");
        KrausChannel phi = channel_from_json(read_json_file(opt.inputs[0]));
        DensityOperator rho(matrix_from_json(read_json_file(opt.inputs[1])));
        DensityOperator gamma(matrix_from_json(read_json_file(opt.inputs[2])));
        return {check_monotonicity(phi, rho, gamma, opt.tol), inputs};
    }
    if (opt.check == "gt" || opt.check == "klein") {
        need(2, "two Hermitian matrices");
        HermitianOperator a = hermitian_from_json(read_json_file(opt.inputs[0]));
        HermitianOperator b = hermitian_from_json(read_json_file(opt.inputs[1]));
        if (opt.check == "gt") return {golden_thompson_gap(a, b, opt.tol), inputs};
        return {check_klein(a, b, opt.tol), inputs};
    }
    if (opt.check == "lieb3") {
        need(3, "R, S, T positive matrices");
        return {lieb_triple_gap(hermitian_from_json(read_json_file(opt.inputs[0])),
                                hermitian_from_json(read_json_file(opt.inputs[1])),
                                hermitian_from_json(read_json_file(opt.inputs[2])), opt.tol),
                inputs};
    }
    if (opt.check == "holevo" || opt.check == "hall") {
        need(2, "ensemble and POVM");
        Ensemble e = ensemble_from_json(read_json_file(opt.inputs[0]));
        Povm m = povm_from_json(read_json_file(opt.inputs[1]));
        double tolv = opt.tol >= 0 ? opt.tol : tol::default_gap(e.dim());
        VerdictReport v;
        v.dims = {e.dim()};
        v.tolerance = tolv;
        if (opt.check == "holevo") {
            v.name = "holevo_bound";
            v.lhs = accessible_info(e, m);
            v.rhs = holevo_chi(e);
        } else {
            InfoReport r = hall_bound(e.average(), m, e);
            v.name = "hall_bound";
            v.lhs = r.accessible_info;
            v.rhs = r.hall_bound;
        }
        v.gap = v.rhs - v.lhs;
        v.holds = v.gap >= -tolv;
        return {v, inputs};
    }
    throw ParseError("check '" + opt.check + "' does not support file input");
}

int cmd_verify(const VerifyOptions& opt) {
    if (opt.inputs.empty() && !opt.seed)
        throw ParseError("--seed is required when inputs are generated");

    int trials = opt.inputs.empty() ? opt.trials : 1;
    std::uint64_t base_seed = opt.seed.value_or(0);
    Prng base(base_seed);

    struct Trial {
        VerdictReport verdict;
        Json inputs;
    };
    auto trial_results = run_batch<Trial>(trials, [&](int i) {
        if (!opt.inputs.empty()) {
            auto [v, in] = run_on_files(opt);
            return Trial{std::move(v), std::move(in)};
        }
        auto [v, in] = run_trial(opt, base.split(i).seed());
        v.seed = base.split(i).seed();
        return Trial{std::move(v), std::move(in)};
    });

    bool all_hold = true;
    Json reports = Json::array();
    Json gaps = Json::array();
    for (int i = 0; i < trials; ++i) {
        VerdictReport v = trial_results[i].verdict;
        reclassify_equality(v, opt.eq_tol);
        if (opt.bits && is_entropy_check(opt.check)) convert_report_to_bits(v);
        all_hold = all_hold && v.holds;
        Json entry = verdict_to_json(v);
        entry["trial"] = i;
        if (!v.holds) entry["inputs"] = trial_results[i].inputs;
        reports.push_back(entry);
        gaps.push_back(v.gap);
        if (opt.format == "text") {
            std::cout << (v.holds ? "ok  " : "FAIL") << " trial " << i << "  " << v.name
                      << "  lhs=" << v.lhs << " rhs=" << v.rhs << " gap=" << v.gap
                      << (v.equality.has_value() ? (*v.equality ? "  [equality]" : "") : "")
                      << "\n";
            if (!v.holds)
                std::cerr << "violation inputs:\n"
                          << dump_json(trial_results[i].inputs) << "\n";
        }
    }

    Json ledger;
    ledger["timestamp"] = timestamp_utc();
    ledger["command"] = "verify";
    ledger["check"] = opt.check;
    ledger["config"] = {{"trials", trials},
                        {"seed", base_seed},
                        {"tol", opt.tol},
                        {"bits", opt.bits}};
    ledger["reports"] = reports;
    ledger["gaps"] = gaps;
    ledger["all_hold"] = all_hold;

    if (!opt.output.empty()) write_json_file(opt.output, ledger);
    if (opt.format == "json" && opt.output.empty()) std::cout << dump_json(ledger);
    if (opt.format == "text")
        std::cout << (all_hold ? "all hold" : "VIOLATION FOUND") << " (" << trials
                  << " trial(s))\n";
    return all_hold ? kExitPass : kExitViolation;
}

struct GenOptions {
    std::string kind;
    std::vector<int> dims;
    int dim = 2;
    int outcomes = 2;
    int states = 2;
    int kraus = 2;
    int out_dim = 0;
    std::optional<std::uint64_t> seed;
    std::string output;
};

int cmd_generate(const GenOptions& opt) {
    if (!opt.seed) throw ParseError("--seed is required for generation");
    std::uint64_t seed = *opt.seed;
    Json j;
    if (opt.kind == "state") {
        std::vector<int> dims = opt.dims.empty() ? std::vector<int>{opt.dim} : opt.dims;
        SystemShape shape(dims);
        j = state_to_json({random_density(shape.total_dim(), seed), shape});
    } else if (opt.kind == "markov") {
        std::vector<int> dims = opt.dims.empty() ? std::vector<int>{2, 2, 2} : opt.dims;
        SystemShape shape(dims);
        j = state_to_json(make_markov_state(random_markov_distribution(shape, seed), shape));
    } else if (opt.kind == "product-split") {
        std::vector<int> d = opt.dims.empty() ? std::vector<int>{2, 2, 2, 2} : opt.dims;
        if (d.size() != 4) throw ParseError("product-split needs --dims d1,d2a,d2b,d3");
        Prng rng(seed);
        MultipartiteState a(cli_full_rank_density(d[0] * d[1], rng.split(0).seed()),
                            SystemShape({d[0], d[1]}));
        MultipartiteState b(cli_full_rank_density(d[2] * d[3], rng.split(1).seed()),
                            SystemShape({d[2], d[3]}));
        j = state_to_json(make_product_split_state(a, b));
    } else if (opt.kind == "channel") {
        int out = opt.out_dim > 0 ? opt.out_dim : opt.dim;
        j = channel_to_json(random_channel(opt.dim, out, opt.kraus, seed));
    } else if (opt.kind == "povm") {
        j = povm_to_json(random_povm(opt.dim, opt.outcomes, seed));
    } else if (opt.kind == "ensemble") {
        j = ensemble_to_json(random_ensemble(opt.dim, opt.states, seed));
    } else {
        throw ParseError("unknown generator kind '" + opt.kind + "'");
    }

    if (!opt.output.empty())
        write_json_file(opt.output, j);
    else
        std::cout << dump_json(j);
    return kExitPass;
}

struct SuiteOptions {
    std::uint64_t seed = 20240601;
    double scale = 1.0;
    double tol = -1.0;
    std::string only;
    std::string output;
    std::string format = "text";
};

int cmd_suite(const SuiteOptions& opt) {
    SuiteConfig config;
    config.seed = opt.seed;
    config.scale = opt.scale;
    config.tol_override = opt.tol;
    config.only = opt.only;

    SuiteResult result = run_suite(config);
    for (const auto& c : result.criteria)
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": "
                  << c.details << "\n";
    std::cout << (result.all_passed ? "SUITE PASSED" : "SUITE FAILED") << " in "
              << result.total_seconds << " s\n";

    Json ledger = suite_to_json(result, config);
    ledger["timestamp"] = timestamp_utc();
    if (!opt.output.empty()) write_json_file(opt.output, ledger);
    if (opt.format == "json" && opt.output.empty()) std::cout << dump_json(ledger);
    return result.all_passed ? kExitPass : kExitViolation;
}

struct HolevoOptions {
    std::vector<std::string> inputs;
    int dim = 2;
    int states = 3;
    int outcomes = 3;
    std::optional<std::uint64_t> seed;
    bool bits = false;
    std::string format = "text";
    std::string output;
};

int cmd_holevo(const HolevoOptions& opt) {
    Ensemble e = [&] {
        if (!opt.inputs.empty()) return ensemble_from_json(read_json_file(opt.inputs[0]));
        if (!opt.seed) throw ParseError("--seed is required when inputs are generated");
        return random_ensemble(opt.dim, opt.states, Prng(*opt.seed).split(0).seed());
    }();
    Povm m = [&] {
        if (opt.inputs.size() >= 2) return povm_from_json(read_json_file(opt.inputs[1]));
        if (opt.inputs.empty() && opt.seed)
            return random_povm(opt.dim, opt.outcomes, Prng(*opt.seed).split(1).seed());
        throw ParseError("holevo needs two --input files (ensemble, povm) or --seed");
    }();

    InfoReport report = info_report(e, m);
    double factor = opt.bits ? 1.0 / std::log(2.0) : 1.0;
    InfoReport scaled = report;
    scaled.accessible_info *= factor;
    scaled.chi *= factor;
    scaled.hall_bound *= factor;
    for (auto& [k, v] : scaled.gaps) v *= factor;

    const char* unit = opt.bits ? "bits" : "nats";
    if (opt.format == "text") {
        std::cout << "accessible information: " << scaled.accessible_info << " " << unit << "\n"
                  << "holevo chi:             " << scaled.chi << " " << unit << "\n"
                  << "hall bound:             " << scaled.hall_bound << " " << unit << "\n";
        for (const auto& [k, v] : scaled.gaps) std::cout << k << ": " << v << " " << unit << "\n";
        for (const auto& [k, v] : scaled.equality_residuals)
            std::cout << k << ": " << v << "\n";
    }
    Json j = info_to_json(scaled);
    j["units"] = unit;
    j["timestamp"] = timestamp_utc();
    if (!opt.output.empty()) write_json_file(opt.output, j);
    if (opt.format == "json" && opt.output.empty()) std::cout << dump_json(j);

    bool bounds_ok = report.accessible_info <= report.chi + 1e-9 &&
                     report.accessible_info <= report.hall_bound + 1e-9;
    return bounds_ok ? kExitPass : kExitViolation;
}

int cmd_report(const std::string& path) {
    Json j = read_json_file(path);
    bool ok = true;
    if (j.contains("accessible_info")) {
        double info = j.value("accessible_info", 0.0);
        double chi = j.value("chi", 0.0);
        double hall = j.value("hall_bound", 0.0);
        std::cout << "accessible information: " << info << "\n"
                  << "holevo chi:             " << chi << "\n"
                  << "hall bound:             " << hall << "\n";
        ok = info <= chi + 1e-9 && info <= hall + 1e-9;
        std::cout << (ok ? "bounds hold" : "BOUND VIOLATION") << "\n";
        return ok ? kExitPass : kExitViolation;
    }
    if (j.contains("criteria")) {
        for (const auto& c : j["criteria"]) {
            bool passed = c.value("passed", false);
            ok = ok && passed;
            std::cout << (passed ? "[PASS] " : "[FAIL] ") << c.value("id", 0) << " "
                      << c.value("name", std::string("?")) << ": "
                      << c.value("details", std::string()) << "\n";
        }
    } else if (j.contains("reports")) {
        for (const auto& r : j["reports"]) {
            bool holds = r.value("holds", false);
            ok = ok && holds;
            std::cout << (holds ? "ok  " : "FAIL") << " " << r.value("name", std::string("?"))
                      << " gap=" << r.value("gap", 0.0) << "\n";
        }
    } else {
        throw ParseError("file is neither a suite ledger nor a verify report");
    }
    std::cout << (ok ? "all pass" : "FAILURES PRESENT") << "\n";
    return ok ? kExitPass : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum entropy inequality toolkit"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "run a named inequality verifier");
    verify
        ->add_option("check", vopt.check,
                     "ssa|ssa-purified|subadd|triangle|araki-lieb|mpt|jc|mono|gt|lieb3|klein|"
                     "holevo|hall|exp-concavity|wyd|herglotz")
        ->required();
    verify->add_option("--input", vopt.inputs, "input JSON file(s); order is check-specific");
    verify->add_option("--gen", vopt.gen, "generator: random|markov|product-split");
    verify->add_option("--dims", vopt.dims, "subsystem dimensions")->delimiter(',');
    verify->add_option("--dim", vopt.dim, "single dimension for matrix-level checks");
    verify->add_option("--states", vopt.states, "ensemble size");
    verify->add_option("--outcomes", vopt.outcomes, "POVM outcomes");
    verify->add_option("--kraus", vopt.kraus, "Kraus operator count");
    verify->add_option("--out-dim", vopt.out_dim, "channel output dimension");
    verify->add_option("--trials", vopt.trials, "number of generated trials")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", vopt.seed, "seed for generated inputs");
    verify->add_option("--tol", vopt.tol, "violation tolerance override");
    verify->add_option("--eq-tol", vopt.eq_tol, "equality classification tolerance");
    verify->add_option("--s", vopt.s_param, "exponent for the wyd check");
    verify->add_option("--lambda", vopt.lambda, "mixture weight for concavity checks");
    verify->add_option("--format", vopt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("--bits", vopt.bits, "report entropic quantities in bits");
    verify->add_option("-o,--output", vopt.output, "write the JSON ledger here");

    GenOptions gopt;
    CLI::App* gen = app.add_subcommand("gen", "generate seeded objects as JSON");
    gen->add_option("kind", gopt.kind, "state|markov|product-split|channel|povm|ensemble")
        ->required();
    gen->add_option("--dims", gopt.dims, "subsystem dimensions")->delimiter(',');
    gen->add_option("--dim", gopt.dim, "dimension");
    gen->add_option("--outcomes", gopt.outcomes, "POVM outcomes");
    gen->add_option("--states", gopt.states, "ensemble size");
    gen->add_option("--kraus", gopt.kraus, "Kraus operator count");
    gen->add_option("--out-dim", gopt.out_dim, "channel output dimension");
    gen->add_option("--seed", gopt.seed, "generator seed");
    gen->add_option("-o,--output", gopt.output, "output file (default stdout)");

    SuiteOptions sopt;
    CLI::App* suite = app.add_subcommand("suite", "run the full verification matrix");
    suite->add_option("--seed", sopt.seed, "suite seed");
    suite->add_option("--scale", sopt.scale, "trial-count scale factor")
        ->check(CLI::PositiveNumber);
    suite->add_option("--tol", sopt.tol, "relax gap gates uniformly to this value");
    suite->add_option("--only", sopt.only, "run only criteria whose name contains this");
    suite->add_option("--format", sopt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    suite->add_option("-o,--output", sopt.output, "write the JSON ledger here");

    HolevoOptions hopt;
    CLI::App* holevo = app.add_subcommand("holevo", "accessible information report");
    holevo->add_option("--input", hopt.inputs, "ensemble JSON then POVM JSON");
    holevo->add_option("--dim", hopt.dim, "dimension for generated inputs");
    holevo->add_option("--states", hopt.states, "ensemble size");
    holevo->add_option("--outcomes", hopt.outcomes, "POVM outcomes");
    holevo->add_option("--seed", hopt.seed, "generator seed");
    holevo->add_flag("--bits", hopt.bits, "report in bits");
    holevo->add_option("--format", hopt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    holevo->add_option("-o,--output", hopt.output, "write the JSON report here");

    std::string report_path;
    CLI::App* report = app.add_subcommand("report", "pretty-print a saved JSON report");
    report->add_option("file", report_path, "report or ledger JSON")->required();

    try {
        app.parse(argc, argv);
        if (*verify) return cmd_verify(vopt);
        if (*gen) return cmd_generate(gopt);
        if (*suite) return cmd_suite(sopt);
        if (*holevo) return cmd_holevo(hopt);
        if (*report) return cmd_report(report_path);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
