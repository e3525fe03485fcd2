#include "spiderweb/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "spiderweb/asymptotics.hpp"
#include "spiderweb/genfun.hpp"
#include "spiderweb/limits.hpp"
#include "spiderweb/moments.hpp"
#include "spiderweb/netgraph.hpp"
#include "spiderweb/simulate.hpp"

namespace spiderweb {

namespace {

std::string fmt_g(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string fmt17(double x) { return fmt_g(x, 17); }
std::string fmt15(double x) { return fmt_g(x, 15); }

std::vector<double> expand_grid(double start, double stop, double step) {
    if (!(step > 0.0))
        throw std::invalid_argument("sweep: q step must be positive");
    if (!(start > 0.0 && start < 1.0 && stop > 0.0 && stop < 1.0 && start <= stop))
        throw std::invalid_argument("sweep: q grid must lie inside (0,1)");
    double span = (stop - start) / step;
    if (span > 10000.0)
        throw std::invalid_argument("sweep: q grid too fine");
    int n = static_cast<int>(std::floor(span + 1e-9));
    std::vector<double> qs;
    qs.reserve(n + 1);
    for (int i = 0; i <= n; ++i) qs.push_back(start + i * step);
    return qs;
}

struct SweepRow {
    int b, k, l;
    double q;
    std::uint64_t samples, seed;
    double q_hat, ci_low, ci_high, q_limit;
    MomentReport mom;
    double q_c;
};

SweepRow compute_row(const SweepConfig& cfg, int k, double q) {
    SweepRow r{};
    r.b = cfg.b;
    r.k = k;
    long l = std::lround(cfg.c * k);
    if (std::abs(cfg.c * k - static_cast<double>(l)) > 1e-9)
        std::cerr << "warning: c*k = " << fmt17(cfg.c * k)
                  << " is not an integer; using l = " << l << "\n";
    r.l = static_cast<int>(l);
    r.q = q;
    r.samples = cfg.samples;
    r.seed = cfg.seed;
    NetworkParams p{cfg.b, k, r.l};
    Estimate est = estimate_Q(p, q, cfg.samples, cfg.seed, cfg.threads);
    r.q_hat = est.p_hat;
    r.ci_low = est.ci_low;
    r.ci_high = est.ci_high;
    try {
        r.q_limit = limiting_Q(cfg.b, q, cfg.c);
    } catch (const ThresholdError&) {
        r.q_limit = std::numeric_limits<double>::quiet_NaN();
        std::cerr << "warning: q = " << fmt17(q)
                  << " sits exactly at the critical vacancy; q_limit undefined\n";
    }
    r.mom = moment_report(p, q);
    r.q_c = critical_vacancy(cfg.b, cfg.c);
    return r;
}

const char* kSweepHeader =
    "b,k,l,q,samples,seed,q_hat,ci_low,ci_high,q_limit,ex_x,ex_x2_exact,"
    "ex_x2_asym,markov_upper,chebyshev_lower,q_c";

void append_csv(std::string& s, const SweepRow& r) {
    s += std::to_string(r.b) + ',' + std::to_string(r.k) + ',' + std::to_string(r.l) + ',';
    s += fmt17(r.q) + ',' + std::to_string(r.samples) + ',' + std::to_string(r.seed) + ',';
    s += fmt17(r.q_hat) + ',' + fmt17(r.ci_low) + ',' + fmt17(r.ci_high) + ',';
    s += fmt17(r.q_limit) + ',' + fmt17(r.mom.ex_x) + ',' + fmt17(r.mom.ex_x2_exact) + ',';
    s += fmt17(r.mom.ex_x2_asymptotic) + ',' + fmt17(r.mom.markov_upper) + ',';
    s += fmt17(r.mom.chebyshev_lower) + ',' + fmt17(r.q_c) + '\n';
}

nlohmann::ordered_json row_json(const SweepRow& r) {
    nlohmann::ordered_json j;
    j["b"] = r.b;
    j["k"] = r.k;
    j["l"] = r.l;
    j["q"] = r.q;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["q_hat"] = r.q_hat;
    j["ci_low"] = r.ci_low;
    j["ci_high"] = r.ci_high;
    j["q_limit"] = r.q_limit;
    j["ex_x"] = r.mom.ex_x;
    j["ex_x2_exact"] = r.mom.ex_x2_exact;
    j["ex_x2_asym"] = r.mom.ex_x2_asymptotic;
    j["markov_upper"] = r.mom.markov_upper;
    j["chebyshev_lower"] = r.mom.chebyshev_lower;
    j["q_c"] = r.q_c;
    return j;
}

int write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 2;
    }
    f << payload;
    f.flush();
    if (!f) {
        std::cerr << "error: write to " << path << " failed\n";
        return 2;
    }
    return 0;
}

}  // namespace

int cmd_sweep(const SweepConfig& cfg) {
    if (cfg.k_list.empty())
        throw std::invalid_argument("sweep: k list must be nonempty");
    if (cfg.samples < 1)
        throw std::invalid_argument("sweep: samples must be >= 1");
    if (cfg.format != "csv" && cfg.format != "json")
        throw std::invalid_argument("sweep: format must be csv or json");
    auto qs = expand_grid(cfg.q_start, cfg.q_stop, cfg.q_step);

    std::string payload;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (cfg.format == "csv") {
        payload = kSweepHeader;
        payload += '\n';
    }
    for (int k : cfg.k_list) {
        for (double q : qs) {
            SweepRow r = compute_row(cfg, k, q);
            if (cfg.format == "csv")
                append_csv(payload, r);
            else
                rows.push_back(row_json(r));
        }
    }
    if (cfg.format == "json") payload = rows.dump(2) + "\n";
    return write_output(cfg.out, payload);
}

int cmd_phi(int b, int k, int l, const std::string& mode, double q,
            const std::string& format) {
    bool json = format == "json";
    if (!json && format != "text")
        throw std::invalid_argument("phi: format must be text or json");
    nlohmann::ordered_json j;
    j["b"] = b;
    j["k"] = k;
    j["l"] = l;
    j["mode"] = mode;
    if (mode == "poly") {
        IntPoly ph = phi_poly(b, k, l);
        if (json) {
            j["coeffs"] = poly_to_decimal_strings(ph);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << ph.pretty() << "\n";
        }
        return 0;
    }
    if (mode != "eval" && mode != "residue" && mode != "asym")
        throw std::invalid_argument("phi: mode must be poly, eval, residue, or asym");
    if (!(q > 0.0 && q <= 1.0))
        throw std::invalid_argument("phi: mode needs --q in (0,1]");
    double exact = phi_eval(b, k, l, q);
    j["q"] = q;
    j["phi_eval"] = exact;
    if (mode == "eval") {
        if (json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << "phi_eval = " << fmt15(exact) << "\n";
        return 0;
    }
    if (near_threshold(b, q))
        std::cerr << "warning: bq is within 0.05 of 1; pole separation degrades\n";
    double v = (mode == "residue") ? residue_phi(b, k, l, q) : phi_asymptotic(b, k, l, q);
    double dev = std::abs(v - exact) / std::abs(exact);
    j[mode == "residue" ? "residue_phi" : "phi_asymptotic"] = v;
    j["rel_deviation"] = dev;
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "phi_eval = " << fmt15(exact) << "\n";
        std::cout << (mode == "residue" ? "residue_phi = " : "phi_asymptotic = ")
                  << fmt15(v) << "\n";
        std::cout << "rel_deviation = " << fmt15(dev) << "\n";
    }
    return 0;
}

int cmd_limits(int b, double q, double c, const std::string& format) {
    bool json = format == "json";
    if (!json && format != "text")
        throw std::invalid_argument("limits: format must be text or json");
    ThresholdReport rep;
    try {
        rep = limits_report(b, q, c);
    } catch (const ThresholdError&) {
        std::cout << "threshold: q equals q_c exactly; the limit is undefined there\n";
        return 3;
    }
    if (json) {
        nlohmann::ordered_json j;
        j["b"] = rep.b;
        j["c"] = rep.c;
        j["q"] = rep.q;
        j["q_c"] = rep.q_c;
        j["q_limit"] = rep.q_limit;
        j["xi"] = std::isnan(rep.xi) ? nlohmann::ordered_json() : nlohmann::ordered_json(rep.xi);
        j["eta"] = std::isnan(rep.eta) ? nlohmann::ordered_json() : nlohmann::ordered_json(rep.eta);
        j["alpha"] = rep.has_alpha ? nlohmann::ordered_json(rep.alpha) : nlohmann::ordered_json();
        if (c > 2.0)
            j["q_star"] = rep.has_q_star ? nlohmann::ordered_json(rep.q_star)
                                         : nlohmann::ordered_json();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "q_c = " << fmt15(rep.q_c) << "\n";
    std::cout << "q_limit = " << fmt15(rep.q_limit) << "\n";
    if (!std::isnan(rep.xi)) {
        std::cout << "xi = " << fmt15(rep.xi) << "\n";
        std::cout << "one_minus_xi_sq = " << fmt15((1.0 - rep.xi) * (1.0 - rep.xi)) << "\n";
        std::cout << "eta = " << fmt15(rep.eta) << "\n";
        if (rep.has_alpha)
            std::cout << "alpha = " << fmt15(rep.alpha) << "\n";
        else
            std::cout << "alpha = n/a (eta >= 1)\n";
    } else {
        std::cout << "xi = n/a (q <= 1/b)\n";
    }
    if (c > 2.0) {
        if (rep.has_q_star)
            std::cout << "q_star = " << fmt15(rep.q_star) << "\n";
        else
            std::cout << "q_star = n/a (out of regime)\n";
    }
    return 0;
}

namespace {

struct OracleTally {
    int passed = 0;
    int failed = 0;

    void record(bool ok, const std::string& what) {
        (ok ? passed : failed) += 1;
        std::cout << (ok ? "PASS: " : "FAIL: ") << what << "\n";
    }
};

void suite_paths(OracleTally& t) {
    for (int b : {2, 3})
        for (int k : {1, 2})
            for (int l = k; l <= k + 4; ++l) {
                NetworkParams p{b, k, l};
                VertexId v{0, zeros_label(p)};
                VertexId w{l, zeros_label(p)};
                auto paths = enumerate_paths(p, v, w);
                std::uint64_t want = 1;
                for (int i = 0; i < l - k; ++i) want *= b;
                bool ok = paths.size() == want;
                for (const auto& path : paths) ok = ok && is_valid_path(p, path);
                std::ostringstream os;
                os << "paths b=" << b << " k=" << k << " l=" << l
                   << " count=" << paths.size();
                t.record(ok, os.str());
            }
}

void suite_phi(OracleTally& t) {
    for (int b : {2, 3})
        for (int k : {1, 2, 3})
            for (int l = k; l <= k + 4; ++l) {
                double npaths = std::pow(b, l - k);
                if (npaths > 4096.0) continue;
                bool ok = phi_poly(b, k, l) == brute_phi(b, k, l);
                std::ostringstream os;
                os << "phi b=" << b << " k=" << k << " l=" << l;
                t.record(ok, os.str());
            }
}

void suite_moments(OracleTally& t) {
    for (int b : {2, 3})
        for (int k : {1, 2})
            for (int l = k; l <= k + 4; ++l)
                for (double q : {0.3, 0.5, 0.8}) {
                    NetworkParams p{b, k, l};
                    double lhs = brute_second_moment(p, q);
                    double rhs = second_moment(p, q);
                    bool ok = std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs);
                    std::ostringstream os;
                    os << "moments b=" << b << " k=" << k << " l=" << l << " q=" << q;
                    t.record(ok, os.str());
                }
}

void suite_exactQ(OracleTally& t, std::uint64_t seed) {
    const int cases[3][3] = {{2, 1, 2}, {2, 1, 3}, {2, 2, 4}};
    for (const auto& c : cases)
        for (double q : {0.3, 0.5, 0.8}) {
            NetworkParams p{c[0], c[1], c[2]};
            double ex = exact_Q(p, q);
            const std::uint64_t n = 200000;
            Estimate est = estimate_Q(p, q, n, seed);
            double sigma = std::sqrt(ex * (1.0 - ex) / static_cast<double>(n));
            bool ok = std::abs(est.p_hat - ex) <= 3.0 * sigma;
            std::ostringstream os;
            os << "exactQ b=" << p.b << " k=" << p.k << " l=" << p.l << " q=" << q
               << " exact=" << fmt15(ex) << " hat=" << fmt15(est.p_hat);
            t.record(ok, os.str());
        }
}

}  // namespace

int cmd_oracle(const std::string& suite, std::uint64_t seed) {
    OracleTally t;
    bool known = false;
    if (suite == "paths" || suite == "all") {
        suite_paths(t);
        known = true;
    }
    if (suite == "phi" || suite == "all") {
        suite_phi(t);
        known = true;
    }
    if (suite == "moments" || suite == "all") {
        suite_moments(t);
        known = true;
    }
    if (suite == "exactQ" || suite == "all") {
        suite_exactQ(t, seed);
        known = true;
    }
    if (!known)
        throw std::invalid_argument("oracle: unknown suite (use paths|phi|moments|exactQ|all)");
    std::cout << t.passed << " passed, " << t.failed << " failed\n";
    return t.failed == 0 ? 0 : 4;
}

namespace {

void parse_q_grid(const std::string& spec, SweepConfig& cfg) {
    double a = 0.0, b2 = 0.0, c2 = 0.0;
    int n = std::sscanf(spec.c_str(), "%lf:%lf:%lf", &a, &b2, &c2);
    if (n == 3) {
        cfg.q_start = a;
        cfg.q_stop = b2;
        cfg.q_step = c2;
    } else if (n == 1 && spec.find(':') == std::string::npos) {
        cfg.q_start = cfg.q_stop = a;
        cfg.q_step = 1.0;
    } else {
        throw std::invalid_argument("sweep: --q must be a value or start:stop:step");
    }
}

void apply_json_config(const std::string& path, SweepConfig& cfg) {
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("sweep: cannot read config " + path);
    nlohmann::json j;
    try {
        f >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sweep: bad config JSON: ") + e.what());
    }
    if (j.contains("b")) cfg.b = j["b"].get<int>();
    if (j.contains("c")) cfg.c = j["c"].get<double>();
    if (j.contains("k")) cfg.k_list = j["k"].get<std::vector<int>>();
    if (j.contains("q")) {
        if (j["q"].is_string()) {
            parse_q_grid(j["q"].get<std::string>(), cfg);
        } else {
            cfg.q_start = j["q"]["start"].get<double>();
            cfg.q_stop = j["q"]["stop"].get<double>();
            cfg.q_step = j["q"]["step"].get<double>();
        }
    }
    if (j.contains("samples")) cfg.samples = j["samples"].get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"linking probabilities for spider-web crossbar networks"};
    app.require_subcommand(1);
    std::uint64_t seed = 12345;
    app.add_option("--seed", seed, "global RNG seed");

    SweepConfig cfg;
    std::string qspec;
    std::string config_path;
    auto* sweep = app.add_subcommand("sweep", "phase-transition sweep table");
    sweep->add_option("--b", cfg.b, "base");
    sweep->add_option("--c", cfg.c, "aspect ratio l/k");
    sweep->add_option("--k", cfg.k_list, "scales, comma separated")->delimiter(',');
    sweep->add_option("--q", qspec, "vacancy grid, value or start:stop:step");
    sweep->add_option("--samples", cfg.samples, "Monte-Carlo samples per row");
    sweep->add_option("--out", cfg.out, "output path (default stdout)");
    sweep->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
    sweep->add_option("--config", config_path, "JSON config overriding flags");

    int pb = 2, pk = 1, pl = 1;
    std::string pmode = "poly", pformat = "text";
    double pq = std::numeric_limits<double>::quiet_NaN();
    auto* phi = app.add_subcommand("phi", "phi_l polynomial and approximations");
    phi->add_option("--b", pb);
    phi->add_option("--k", pk);
    phi->add_option("--l", pl);
    phi->add_option("--mode", pmode)->check(CLI::IsMember({"poly", "eval", "residue", "asym"}));
    phi->add_option("--q", pq, "vacancy probability");
    phi->add_option("--format", pformat)->check(CLI::IsMember({"text", "json"}));

    int lb = 2;
    double lq = 0.5, lc = 2.0;
    std::string lformat = "text";
    auto* limits = app.add_subcommand("limits", "phase-transition limit quantities");
    limits->add_option("--b", lb);
    limits->add_option("--q", lq);
    limits->add_option("--c", lc);
    limits->add_option("--format", lformat)->check(CLI::IsMember({"text", "json"}));

    std::string suite;
    auto* oracle = app.add_subcommand("oracle", "brute-force cross-check suites");
    oracle->add_option("suite", suite, "paths|phi|moments|exactQ|all")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) {
            cfg.seed = seed;
            if (!qspec.empty()) parse_q_grid(qspec, cfg);
            if (!config_path.empty()) apply_json_config(config_path, cfg);
            if (cfg.q_start <= 0.0)
                throw std::invalid_argument("sweep: --q is required");
            return cmd_sweep(cfg);
        }
        if (phi->parsed()) return cmd_phi(pb, pk, pl, pmode, pq, pformat);
        if (limits->parsed()) return cmd_limits(lb, lq, lc, lformat);
        if (oracle->parsed()) return cmd_oracle(suite, seed);
    } catch (const ThresholdError& e) {
        std::cerr << "threshold: " << e.what() << "\n";
        return 3;
    } catch (const RegimeError& e) {
        std::cerr << "regime: " << e.what() << "\n";
        return 3;
    } catch (const CapError& e) {
        std::cerr << "cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace spiderweb
