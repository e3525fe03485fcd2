#include "spiderweb/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace spiderweb {

namespace {

constexpr double kZ95 = 1.959963984540054;

std::size_t word_count(std::uint64_t bits) {
    return static_cast<std::size_t>((bits + 63) / 64);
}

// Set of label indices, bit-packed.
struct LabelSet {
    std::vector<std::uint64_t> w;

    explicit LabelSet(std::uint64_t n) : w(word_count(n), 0) {}
    bool test(std::uint64_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint64_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::uint64_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void clear() { std::fill(w.begin(), w.end(), 0); }
};

std::uint64_t pow_u64(int b, int e) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= static_cast<std::uint64_t>(b);
    return r;
}

// One crossbar stage varying label position j: out has a label set iff some
// label agreeing with it outside position j is in `in`.
void spread(const NetworkParams& p, int j, const LabelSet& in, LabelSet& out) {
    out.clear();
    std::uint64_t stride = pow_u64(p.b, p.k - j);
    std::uint64_t groups_hi = p.rank_size() / (stride * p.b);
    for (std::uint64_t hi = 0; hi < groups_hi; ++hi) {
        std::uint64_t block = hi * stride * p.b;
        for (std::uint64_t lo = 0; lo < stride; ++lo) {
            std::uint64_t base = block + lo;
            bool any = false;
            for (int d = 0; d < p.b && !any; ++d)
                any = in.test(base + d * stride);
            if (any)
                for (int d = 0; d < p.b; ++d) out.set(base + d * stride);
        }
    }
}

void gate(const LinkState& s, int rank, LabelSet& f) {
    std::uint64_t n = s.params().rank_size();
    for (std::uint64_t i = 0; i < n; ++i)
        if (f.test(i) && !s.idle(rank, i)) f.reset(i);
}

void check_endpoints(const NetworkParams& p, const VertexId& v, const VertexId& w) {
    if (v.rank != 0 || w.rank != p.l)
        throw std::invalid_argument("simulate: endpoints must sit at ranks 0 and l");
    label_to_index(p, v.label);
    label_to_index(p, w.label);
}

void fill_from(LinkState& s, double q, const CounterRng& rng) {
    const NetworkParams& p = s.params();
    std::uint64_t n = p.rank_size();
    std::uint64_t bit = 0;
    for (int rank = 1; rank <= p.l - 1; ++rank)
        for (std::uint64_t i = 0; i < n; ++i, ++bit)
            s.set_idle(rank, i, rng.uniform_at(bit) < q);
}

void check_mc_args(const NetworkParams& p, double q, std::uint64_t n) {
    p.validate();
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("simulate: require 0 <= q <= 1");
    if (n == 0) throw std::invalid_argument("simulate: require n >= 1");
}

int resolve_threads(int threads, std::uint64_t n) {
    int t = threads;
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (static_cast<std::uint64_t>(t) > n) t = static_cast<int>(n);
    return t;
}

// Runs fn(t, lo, hi) for each chunk; chunk boundaries depend only on (n, T).
template <typename F>
void run_chunked(std::uint64_t n, int threads, F fn) {
    if (threads == 1) {
        fn(0, 0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = n * t / threads;
        std::uint64_t hi = n * (t + 1) / threads;
        pool.emplace_back(fn, t, lo, hi);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

LinkState::LinkState(const NetworkParams& p) : params_(p) {
    p.validate();
    bits_ = static_cast<std::uint64_t>(p.l - 1) * p.rank_size();
    words_.assign(word_count(bits_), 0);
}

std::uint64_t LinkState::index(int rank, std::uint64_t label_idx) const {
    SPIDERWEB_ASSERT(rank >= 1 && rank <= params_.l - 1, "link rank out of range");
    SPIDERWEB_ASSERT(label_idx < params_.rank_size(), "link label out of range");
    return static_cast<std::uint64_t>(rank - 1) * params_.rank_size() + label_idx;
}

bool LinkState::idle(int rank, std::uint64_t label_idx) const {
    std::uint64_t i = index(rank, label_idx);
    return (words_[i >> 6] >> (i & 63)) & 1u;
}

void LinkState::set_idle(int rank, std::uint64_t label_idx, bool idle) {
    std::uint64_t i = index(rank, label_idx);
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (idle) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
}

void LinkState::fill(bool idle) {
    std::fill(words_.begin(), words_.end(), idle ? ~std::uint64_t(0) : 0);
    if (idle && bits_ % 64 != 0 && !words_.empty())
        words_.back() &= (std::uint64_t(1) << (bits_ % 64)) - 1;
}

void LinkState::assign_mask(std::uint64_t mask) {
    SPIDERWEB_ASSERT(bits_ <= 64, "state does not fit one word");
    if (!words_.empty()) words_[0] = mask;
}

std::uint64_t LinkState::idle_count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

LinkState sample_state(const NetworkParams& p, double q, const CounterRng& rng) {
    LinkState s(p);
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("sample_state: require 0 <= q <= 1");
    fill_from(s, q, rng);
    return s;
}

bool is_linked(const LinkState& s, const VertexId& v, const VertexId& w) {
    const NetworkParams& p = s.params();
    check_endpoints(p, v, w);
    LabelSet cur(p.rank_size()), nxt(p.rank_size());
    cur.set(label_to_index(p, v.label));
    for (int m = 1; m <= p.l; ++m) {
        spread(p, stage_position(m, p.k), cur, nxt);
        if (m <= p.l - 1) gate(s, m, nxt);
        std::swap(cur, nxt);
    }
    return cur.test(label_to_index(p, w.label));
}

BigInt count_idle_paths(const LinkState& s, const VertexId& v, const VertexId& w) {
    const NetworkParams& p = s.params();
    check_endpoints(p, v, w);
    std::uint64_t n = p.rank_size();
    std::vector<BigInt> cur(n, BigInt(0)), nxt(n, BigInt(0));
    cur[label_to_index(p, v.label)] = 1;
    for (int m = 1; m <= p.l; ++m) {
        int j = stage_position(m, p.k);
        std::uint64_t stride = pow_u64(p.b, p.k - j);
        std::uint64_t groups_hi = n / (stride * p.b);
        for (std::uint64_t hi = 0; hi < groups_hi; ++hi) {
            std::uint64_t block = hi * stride * p.b;
            for (std::uint64_t lo = 0; lo < stride; ++lo) {
                std::uint64_t base = block + lo;
                BigInt sum(0);
                for (int d = 0; d < p.b; ++d) sum += cur[base + d * stride];
                for (int d = 0; d < p.b; ++d) {
                    std::uint64_t idx = base + d * stride;
                    if (m <= p.l - 1 && !s.idle(m, idx))
                        nxt[idx] = 0;
                    else
                        nxt[idx] = sum;
                }
            }
        }
        std::swap(cur, nxt);
    }
    return cur[label_to_index(p, w.label)];
}

Estimate wilson_estimate(std::uint64_t successes, std::uint64_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("wilson_estimate: require n >= 1");
    if (successes > n) throw std::invalid_argument("wilson_estimate: successes > n");
    double s = static_cast<double>(successes);
    double nn = static_cast<double>(n);
    double z2 = kZ95 * kZ95;
    double denom = nn + z2;
    double center = (s + z2 / 2.0) / denom;
    double half = kZ95 * std::sqrt(s * (nn - s) / nn + z2 / 4.0) / denom;
    Estimate e;
    e.p_hat = s / nn;
    e.ci_low = std::max(0.0, center - half);
    e.ci_high = std::min(1.0, center + half);
    e.successes = successes;
    e.n = n;
    e.seed = seed;
    return e;
}

Estimate estimate_Q(const NetworkParams& p, double q, std::uint64_t n,
                    std::uint64_t seed, int threads) {
    check_mc_args(p, q, n);
    int T = resolve_threads(threads, n);
    VertexId v{0, zeros_label(p)};
    VertexId w{p.l, zeros_label(p)};
    std::vector<std::uint64_t> tally(T, 0);
    run_chunked(n, T, [&](int t, std::uint64_t lo, std::uint64_t hi) {
        LinkState state(p);
        std::uint64_t cnt = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            fill_from(state, q, CounterRng(seed, i));
            if (is_linked(state, v, w)) ++cnt;
        }
        tally[t] = cnt;
    });
    std::uint64_t s = 0;
    for (std::uint64_t c : tally) s += c;
    return wilson_estimate(s, n, seed);
}

MomentEstimate estimate_moments(const NetworkParams& p, double q, std::uint64_t n,
                                std::uint64_t seed, int threads) {
    check_mc_args(p, q, n);
    int T = resolve_threads(threads, n);
    VertexId v{0, zeros_label(p)};
    VertexId w{p.l, zeros_label(p)};
    std::vector<BigInt> sx(T, BigInt(0)), sxx(T, BigInt(0));
    run_chunked(n, T, [&](int t, std::uint64_t lo, std::uint64_t hi) {
        LinkState state(p);
        for (std::uint64_t i = lo; i < hi; ++i) {
            fill_from(state, q, CounterRng(seed, i));
            BigInt x = count_idle_paths(state, v, w);
            sx[t] += x;
            sxx[t] += x * x;
        }
    });
    BigInt tot_x(0), tot_xx(0);
    for (int t = 0; t < T; ++t) {
        tot_x += sx[t];
        tot_xx += sxx[t];
    }
    MomentEstimate m;
    m.mean_x = BigRat(BigRat(tot_x) / n).convert_to<double>();
    m.mean_x2 = BigRat(BigRat(tot_xx) / n).convert_to<double>();
    m.n = n;
    m.seed = seed;
    return m;
}

double exact_Q(const NetworkParams& p, double q, int cap_bits) {
    p.validate();
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("exact_Q: require 0 <= q <= 1");
    if (cap_bits < 0 || cap_bits > 62)
        throw std::invalid_argument("exact_Q: cap_bits must be in [0, 62]");
    LinkState state(p);
    std::uint64_t bits = state.bit_count();
    if (bits > static_cast<std::uint64_t>(cap_bits))
        throw CapError("exact_Q: link state space exceeds 2^cap_bits");
    int M = static_cast<int>(bits);
    std::vector<double> qpow(M + 1, 1.0), ppow(M + 1, 1.0);
    for (int i = 1; i <= M; ++i) {
        qpow[i] = qpow[i - 1] * q;
        ppow[i] = ppow[i - 1] * (1.0 - q);
    }
    VertexId v{0, zeros_label(p)};
    VertexId w{p.l, zeros_label(p)};
    double total = 0.0;
    std::uint64_t states = std::uint64_t(1) << M;
    for (std::uint64_t i = 0; i < states; ++i) {
        std::uint64_t mask = i ^ (i >> 1);
        state.assign_mask(mask);
        if (is_linked(state, v, w)) {
            int pc = std::popcount(mask);
            total += qpow[pc] * ppow[M - pc];
        }
    }
    return total;
}

Estimate linkset_connect_prob(const NetworkParams& p, double q, const LinkSet& V,
                              const LinkSet& W, std::uint64_t n, std::uint64_t seed,
                              int threads) {
    check_mc_args(p, q, n);
    if (!(V.rank >= 0 && V.rank < W.rank && W.rank <= p.l))
        throw std::invalid_argument("linkset_connect_prob: require 0 <= V.rank < W.rank <= l");
    if (V.labels.empty() || W.labels.empty())
        throw std::invalid_argument("linkset_connect_prob: empty link set");
    LabelSet from(p.rank_size()), to(p.rank_size());
    for (const auto& s : V.labels) from.set(label_to_index(p, s));
    for (const auto& s : W.labels) to.set(label_to_index(p, s));
    int T = resolve_threads(threads, n);
    std::vector<std::uint64_t> tally(T, 0);
    run_chunked(n, T, [&](int t, std::uint64_t lo, std::uint64_t hi) {
        LinkState state(p);
        LabelSet cur(p.rank_size()), nxt(p.rank_size());
        for (std::uint64_t i = lo; i < hi; ++i) {
            fill_from(state, q, CounterRng(seed, i));
            cur.clear();
            for (std::size_t wd = 0; wd < cur.w.size(); ++wd) cur.w[wd] = from.w[wd];
            for (int m = V.rank + 1; m <= W.rank; ++m) {
                spread(p, stage_position(m, p.k), cur, nxt);
                if (m < W.rank) gate(state, m, nxt);
                std::swap(cur, nxt);
            }
            bool hit = false;
            for (std::size_t wd = 0; wd < cur.w.size() && !hit; ++wd)
                hit = (cur.w[wd] & to.w[wd]) != 0;
            if (hit) ++tally[t];
        }
    });
    std::uint64_t s = 0;
    for (std::uint64_t c : tally) s += c;
    return wilson_estimate(s, n, seed);
}

}  // namespace spiderweb
