#pragma once

// Spider-web crossbar graphs G_{b,k,l}: vertices are (rank, label) pairs with
// labels of k digits over {0,...,b-1}; stage m edges join rank m-1 to rank m
// and may change the label only in position j, j == ((m-1) mod k) + 1.
// Label positions are 1-based, leftmost first.

#include <cstdint>
#include <string>
#include <vector>

#include "spiderweb/errors.hpp"

namespace spiderweb {

struct NetworkParams {
    int b = 2; // base: crossbar fan-out
    int k = 1; // scale: label length
    int l = 1; // depth: ranks run 0..l

    void validate() const;
    // number of vertices per rank, b^k
    std::uint64_t rank_size() const;
};

struct VertexId {
    int rank = 0;
    std::string label; // k chars, each '0'+digit

    bool operator==(const VertexId&) const = default;
};

// A path from rank 0 to rank l as the digit string t_1...t_{k+l}:
// t_1..t_k is the input label and the rank-m vertex is read off by
// path_vertex() below.
struct PathDigits {
    std::string digits;

    bool operator==(const PathDigits&) const = default;
};

// A graph automorphism: per-rank digit shifts applied mod b.
// Consecutive shifts may differ only in the position varied by that stage.
struct Automorphism {
    std::vector<std::string> shifts; // l+1 strings of k digits
};

// 1-based label position varied by stage m: ((m-1) mod k) + 1.
int stage_position(int m, int k);

int digit_of(const std::string& label, int pos);         // pos is 1-based
std::uint64_t label_to_index(const NetworkParams& p, const std::string& label);
std::string index_to_label(const NetworkParams& p, std::uint64_t idx);
std::string zeros_label(const NetworkParams& p);

// The rank-m vertex of a path. For m = 0 this is t_1..t_k; in general
// position j of the label is t_{k+m-((m-j) mod k)}, a cyclic rotation of
// the window t_{m+1}..t_{m+k}.
VertexId path_vertex(const NetworkParams& p, const PathDigits& path, int m);

bool is_valid_path(const NetworkParams& p, const PathDigits& path);

// The b neighbours of v across one stage (same-label vertex included).
std::vector<VertexId> neighbors(const NetworkParams& p, const VertexId& v, bool forward);

// Default cap for enumeration-type operations; the SPIDERWEB_ENUM_CAP
// environment variable overrides it.
std::uint64_t default_enum_cap();

// All paths from input v (rank 0) to output w (rank l). Exactly b^(l-k)
// paths when l >= k; for l < k there is one path when the labels of v and w
// agree in the last k-l positions and none otherwise.
std::vector<PathDigits> enumerate_paths(const NetworkParams& p, const VertexId& v,
                                        const VertexId& w, std::uint64_t cap = default_enum_cap());

// The links of a path: its vertices at ranks 1..l-1.
std::vector<VertexId> path_links(const NetworkParams& p, const PathDigits& path);

// The automorphism carrying path p to the all-zeros path u*.
Automorphism canonical_automorphism(const NetworkParams& p, const PathDigits& path);

VertexId apply_automorphism(const NetworkParams& p, const Automorphism& a, const VertexId& v);

// Reversal isomorphism G -> G*: rank r -> l-r with digit permutation
// a*_i = a_j, j == l+1-i (mod k). An involution.
VertexId dual_map(const NetworkParams& p, const VertexId& v);

// Embedding of G_{b,k,n-m} onto ranks m..n of G_{b,k,l}: rank h -> m+h with
// a'_i = a_j, j == i+m (mod k).
VertexId window_iso(const NetworkParams& p, int m, int n, const VertexId& v);

} // namespace spiderweb
