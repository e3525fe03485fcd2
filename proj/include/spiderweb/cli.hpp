#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spiderweb {

struct SweepConfig {
    int b = 2;
    double c = 2.0;
    std::vector<int> k_list;
    double q_start = 0.0;
    double q_stop = 0.0;
    double q_step = 1.0;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 12345;
    std::string out;    // empty: stdout
    std::string format = "csv";
    int threads = 1;
};

// Phase-transition sweep: one row per (k, q) with l = round(c*k).
int cmd_sweep(const SweepConfig& cfg);

// mode: poly | eval | residue | asym; q ignored in poly mode.
int cmd_phi(int b, int k, int l, const std::string& mode, double q,
            const std::string& format);

int cmd_limits(int b, double q, double c, const std::string& format);

// suite: paths | phi | moments | exactQ | all
int cmd_oracle(const std::string& suite, std::uint64_t seed);

// Exit codes: 0 success, 2 usage, 3 numeric-regime refusal, 4 oracle failure.
int run_cli(int argc, const char* const* argv);

}  // namespace spiderweb
