#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spiderweb/genfun.hpp"
#include "spiderweb/netgraph.hpp"
#include "spiderweb/rng.hpp"

namespace spiderweb {

// Idle/busy state of every link (interior vertex, ranks 1..l-1), bit-packed.
// Bit index is rank-major: (rank-1) * b^k + label index.
class LinkState {
  public:
    explicit LinkState(const NetworkParams& p);

    const NetworkParams& params() const { return params_; }
    std::uint64_t bit_count() const { return bits_; }

    bool idle(int rank, std::uint64_t label_idx) const;
    void set_idle(int rank, std::uint64_t label_idx, bool idle);
    void fill(bool idle);
    // overwrite the low bit_count() bits from a mask; requires bit_count() <= 64
    void assign_mask(std::uint64_t mask);

    std::uint64_t idle_count() const;

  private:
    std::uint64_t index(int rank, std::uint64_t label_idx) const;

    NetworkParams params_;
    std::uint64_t bits_;
    std::vector<std::uint64_t> words_;
};

// Independent idling: link bit n is idle iff rng.uniform_at(n) < q. One draw
// per link, consumed in bit-index order.
LinkState sample_state(const NetworkParams& p, double q, const CounterRng& rng);

// True iff some path from v (rank 0) to w (rank l) has all its interior
// vertices idle. Rank-sweep reachability; O(l * b^(k+1)) per call.
bool is_linked(const LinkState& s, const VertexId& v, const VertexId& w);

// Number of idle paths from v to w; always <= b^(l-k) for l >= k.
BigInt count_idle_paths(const LinkState& s, const VertexId& v, const VertexId& w);

struct Estimate {
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t successes = 0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
};

// Wilson score interval at 95% (z = 1.959963984540054).
Estimate wilson_estimate(std::uint64_t successes, std::uint64_t n, std::uint64_t seed);

// Monte-Carlo linking probability between the all-zeros input and output.
// Sample i uses RNG stream i, so any thread count gives identical output;
// threads <= 0 selects hardware concurrency.
Estimate estimate_Q(const NetworkParams& p, double q, std::uint64_t n,
                    std::uint64_t seed, int threads = 1);

struct MomentEstimate {
    double mean_x = 0.0;
    double mean_x2 = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
};

// Sample means of X and X^2 for the all-zeros endpoint pair. Tallies are
// exact integers, so results do not depend on summation order.
MomentEstimate estimate_moments(const NetworkParams& p, double q, std::uint64_t n,
                                std::uint64_t seed, int threads = 1);

// Exact linking probability by exhausting all link states (Gray-code order,
// full reachability per state). Requires (l-1) * b^k <= cap_bits.
double exact_Q(const NetworkParams& p, double q, int cap_bits = 24);

struct LinkSet {
    int rank = 0;
    std::vector<std::string> labels;
};

// Monte-Carlo probability that some vertex of V reaches some vertex of W
// through idle links; idleness is required strictly between the two ranks,
// not at them.
Estimate linkset_connect_prob(const NetworkParams& p, double q, const LinkSet& V,
                              const LinkSet& W, std::uint64_t n, std::uint64_t seed,
                              int threads = 1);

}  // namespace spiderweb
