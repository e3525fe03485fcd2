#include "spiderweb/netgraph.hpp"

#include <cstdlib>
#include <stdexcept>

namespace spiderweb {

void NetworkParams::validate() const {
    if (b < 2) throw std::invalid_argument("base b must be >= 2");
    if (k < 0) throw std::invalid_argument("scale k must be >= 0");
    if (l < 0) throw std::invalid_argument("depth l must be >= 0");
}

std::uint64_t NetworkParams::rank_size() const {
    std::uint64_t n = 1;
    for (int i = 0; i < k; ++i) n *= static_cast<std::uint64_t>(b);
    return n;
}

int stage_position(int m, int k) {
    return ((m - 1) % k + k) % k + 1;
}

int digit_of(const std::string& label, int pos) {
    return label[static_cast<std::size_t>(pos - 1)] - '0';
}

std::uint64_t label_to_index(const NetworkParams& p, const std::string& label) {
    std::uint64_t idx = 0;
    for (int j = 1; j <= p.k; ++j) idx = idx * static_cast<std::uint64_t>(p.b) + digit_of(label, j);
    return idx;
}

std::string index_to_label(const NetworkParams& p, std::uint64_t idx) {
    std::string label(static_cast<std::size_t>(p.k), '0');
    for (int j = p.k; j >= 1; --j) {
        label[static_cast<std::size_t>(j - 1)] = static_cast<char>('0' + idx % p.b);
        idx /= p.b;
    }
    return label;
}

std::string zeros_label(const NetworkParams& p) {
    return std::string(static_cast<std::size_t>(p.k), '0');
}

VertexId path_vertex(const NetworkParams& p, const PathDigits& path, int m) {
    VertexId v;
    v.rank = m;
    v.label.resize(static_cast<std::size_t>(p.k));
    for (int j = 1; j <= p.k; ++j) {
        int r = ((m - j) % p.k + p.k) % p.k;
        int mm = m - r; // t index k+mm, 1-based
        v.label[static_cast<std::size_t>(j - 1)] = path.digits[static_cast<std::size_t>(p.k + mm - 1)];
    }
    return v;
}

static bool edge_exists(const NetworkParams& p, const VertexId& x, const VertexId& y) {
    if (y.rank != x.rank + 1) return false;
    int j = stage_position(y.rank, p.k);
    for (int i = 1; i <= p.k; ++i)
        if (i != j && digit_of(x.label, i) != digit_of(y.label, i)) return false;
    return true;
}

bool is_valid_path(const NetworkParams& p, const PathDigits& path) {
    if (path.digits.size() != static_cast<std::size_t>(p.k + p.l)) return false;
    for (int m = 1; m <= p.l; ++m)
        if (!edge_exists(p, path_vertex(p, path, m - 1), path_vertex(p, path, m))) return false;
    return true;
}

std::vector<VertexId> neighbors(const NetworkParams& p, const VertexId& v, bool forward) {
    p.validate();
    if (forward && v.rank >= p.l) throw std::out_of_range("no forward stage at rank l");
    if (!forward && v.rank <= 0) throw std::out_of_range("no backward stage at rank 0");
    int m = forward ? v.rank + 1 : v.rank; // stage crossed
    int j = stage_position(m, p.k);
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(p.b));
    for (int d = 0; d < p.b; ++d) {
        VertexId u;
        u.rank = forward ? v.rank + 1 : v.rank - 1;
        u.label = v.label;
        u.label[static_cast<std::size_t>(j - 1)] = static_cast<char>('0' + d);
        out.push_back(std::move(u));
    }
    return out;
}

std::uint64_t default_enum_cap() {
    if (const char* env = std::getenv("SPIDERWEB_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1ull << 20;
}

std::vector<PathDigits> enumerate_paths(const NetworkParams& p, const VertexId& v,
                                        const VertexId& w, std::uint64_t cap) {
    p.validate();
    if (v.rank != 0 || w.rank != p.l) throw std::invalid_argument("enumerate_paths needs v at rank 0, w at rank l");

    std::vector<PathDigits> out;
    if (p.l < p.k) {
        // one path iff the labels agree in the last k-l positions
        for (int j = p.l + 1; j <= p.k; ++j)
            if (digit_of(v.label, j) != digit_of(w.label, j)) return out;
        PathDigits t;
        t.digits = v.label + w.label.substr(0, static_cast<std::size_t>(p.l));
        out.push_back(std::move(t));
        return out;
    }

    int free = p.l - p.k;
    std::uint64_t count = 1;
    for (int i = 0; i < free; ++i) {
        count *= static_cast<std::uint64_t>(p.b);
        if (count > cap) throw CapError("enumerate_paths: b^(l-k) exceeds cap");
    }

    std::string t(static_cast<std::size_t>(p.k + p.l), '0');
    for (int j = 1; j <= p.k; ++j) t[static_cast<std::size_t>(j - 1)] = v.label[static_cast<std::size_t>(j - 1)];
    // last k digits are pinned by w: t_{l+i} = w_j with j == (l+i-1) mod k + 1
    for (int i = 1; i <= p.k; ++i) {
        int j = stage_position(p.l + i, p.k);
        t[static_cast<std::size_t>(p.l + i - 1)] = w.label[static_cast<std::size_t>(j - 1)];
    }
    out.reserve(count);
    for (std::uint64_t c = 0; c < count; ++c) {
        std::uint64_t rest = c;
        for (int i = 0; i < free; ++i) {
            t[static_cast<std::size_t>(p.k + i)] = static_cast<char>('0' + rest % p.b);
            rest /= p.b;
        }
        out.push_back(PathDigits{t});
    }
    return out;
}

std::vector<VertexId> path_links(const NetworkParams& p, const PathDigits& path) {
    std::vector<VertexId> links;
    links.reserve(static_cast<std::size_t>(p.l > 0 ? p.l - 1 : 0));
    for (int m = 1; m <= p.l - 1; ++m) links.push_back(path_vertex(p, path, m));
    return links;
}

Automorphism canonical_automorphism(const NetworkParams& p, const PathDigits& path) {
    Automorphism a;
    a.shifts.reserve(static_cast<std::size_t>(p.l + 1));
    for (int m = 0; m <= p.l; ++m) {
        VertexId u = path_vertex(p, path, m);
        std::string s(static_cast<std::size_t>(p.k), '0');
        for (int j = 1; j <= p.k; ++j) {
            int d = digit_of(u.label, j);
            s[static_cast<std::size_t>(j - 1)] = static_cast<char>('0' + (p.b - d) % p.b);
        }
        a.shifts.push_back(std::move(s));
    }
    return a;
}

VertexId apply_automorphism(const NetworkParams& p, const Automorphism& a, const VertexId& v) {
    const std::string& s = a.shifts.at(static_cast<std::size_t>(v.rank));
    VertexId out;
    out.rank = v.rank;
    out.label.resize(static_cast<std::size_t>(p.k));
    for (int j = 1; j <= p.k; ++j) {
        int d = (digit_of(v.label, j) + digit_of(s, j)) % p.b;
        out.label[static_cast<std::size_t>(j - 1)] = static_cast<char>('0' + d);
    }
    return out;
}

VertexId dual_map(const NetworkParams& p, const VertexId& v) {
    VertexId out;
    out.rank = p.l - v.rank;
    out.label.resize(static_cast<std::size_t>(p.k));
    for (int i = 1; i <= p.k; ++i) {
        int j = ((p.l + 1 - i - 1) % p.k + p.k) % p.k + 1;
        out.label[static_cast<std::size_t>(i - 1)] = v.label[static_cast<std::size_t>(j - 1)];
    }
    return out;
}

VertexId window_iso(const NetworkParams& p, int m, int n, const VertexId& v) {
    if (m < 0 || n < m || n > p.l) throw std::out_of_range("window_iso: need 0 <= m <= n <= l");
    if (v.rank < 0 || v.rank > n - m) throw std::out_of_range("window_iso: vertex outside G_{b,k,n-m}");
    VertexId out;
    out.rank = m + v.rank;
    out.label.resize(static_cast<std::size_t>(p.k));
    for (int i = 1; i <= p.k; ++i) {
        int j = ((i + m - 1) % p.k + p.k) % p.k + 1;
        out.label[static_cast<std::size_t>(i - 1)] = v.label[static_cast<std::size_t>(j - 1)];
    }
    return out;
}

} // namespace spiderweb
