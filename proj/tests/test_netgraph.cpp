#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "spiderweb/netgraph.hpp"

using namespace spiderweb;

namespace {

std::vector<std::string> all_labels(int b, int k) {
    NetworkParams p{b, k, 1};
    std::vector<std::string> out;
    for (std::uint64_t i = 0; i < p.rank_size(); ++i) out.push_back(index_to_label(p, i));
    return out;
}

bool is_edge(const NetworkParams& p, const VertexId& x, const VertexId& y) {
    if (y.rank != x.rank + 1) return false;
    auto nb = neighbors(p, x, true);
    return std::find(nb.begin(), nb.end(), y) != nb.end();
}

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

TEST_CASE("stage position cycles through label positions") {
    CHECK(stage_position(1, 2) == 1);
    CHECK(stage_position(2, 2) == 2);
    CHECK(stage_position(3, 2) == 1);
    CHECK(stage_position(4, 2) == 2);
    CHECK(stage_position(5, 3) == 2);
    CHECK(stage_position(1, 1) == 1);
    CHECK(stage_position(7, 1) == 1);
}

TEST_CASE("params validate rejects bad values") {
    CHECK_THROWS_AS(NetworkParams({1, 1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(NetworkParams({2, -1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(NetworkParams({2, 1, -1}).validate(), std::invalid_argument);
    NetworkParams ok{2, 3, 6};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.rank_size() == 8);
}

TEST_CASE("label index round trip") {
    NetworkParams p{3, 2, 2};
    for (std::uint64_t i = 0; i < 9; ++i) {
        auto lab = index_to_label(p, i);
        CHECK(lab.size() == 2);
        CHECK(label_to_index(p, lab) == i);
    }
    CHECK(zeros_label(p) == "00");
    CHECK(digit_of("12", 1) == 1);
    CHECK(digit_of("12", 2) == 2);
}

TEST_CASE("neighbors: stage 1 varies position 1, stage 2 varies position 2") {
    NetworkParams p{2, 2, 2};
    auto n1 = neighbors(p, {0, "00"}, true);
    REQUIRE(n1.size() == 2);
    std::set<std::string> lab1;
    for (auto& v : n1) {
        CHECK(v.rank == 1);
        lab1.insert(v.label);
    }
    CHECK(lab1 == std::set<std::string>({"00", "10"}));

    auto n2 = neighbors(p, {1, "00"}, true);
    REQUIRE(n2.size() == 2);
    std::set<std::string> lab2;
    for (auto& v : n2) {
        CHECK(v.rank == 2);
        lab2.insert(v.label);
    }
    CHECK(lab2 == std::set<std::string>({"00", "01"}));
}

TEST_CASE("neighbors: k=1 stages are complete bipartite") {
    NetworkParams p{3, 1, 3};
    for (int r = 0; r < 3; ++r) {
        for (auto& lab : all_labels(3, 1)) {
            auto nb = neighbors(p, {r, lab}, true);
            REQUIRE(nb.size() == 3);
            std::set<std::string> got;
            for (auto& v : nb) {
                CHECK(v.rank == r + 1);
                got.insert(v.label);
            }
            CHECK(got == std::set<std::string>({"0", "1", "2"}));
        }
    }
}

TEST_CASE("neighbors: backward mirrors forward") {
    NetworkParams p{2, 2, 4};
    for (int m = 1; m <= p.l; ++m) {
        for (auto& a : all_labels(2, 2)) {
            VertexId x{m - 1, a};
            for (auto& y : neighbors(p, x, true)) {
                auto back = neighbors(p, y, false);
                CHECK(std::find(back.begin(), back.end(), x) != back.end());
            }
        }
    }
}

TEST_CASE("neighbors: rank range errors") {
    NetworkParams p{2, 1, 2};
    CHECK_THROWS_AS(neighbors(p, {2, "0"}, true), std::out_of_range);
    CHECK_THROWS_AS(neighbors(p, {0, "0"}, false), std::out_of_range);
}

TEST_CASE("every stage has b^(k+1) edges varying only the stage position") {
    for (int b = 2; b <= 3; ++b) {
        for (int k = 1; k <= 3; ++k) {
            for (int l = 1; l <= 6; l += 5) {
                NetworkParams p{b, k, l};
                auto labs = all_labels(b, k);
                CHECK(labs.size() == ipow(b, k));
                for (int m = 1; m <= l; ++m) {
                    int j = stage_position(m, k);
                    std::uint64_t edges = 0;
                    for (auto& a : labs) {
                        auto nb = neighbors(p, {m - 1, a}, true);
                        CHECK(nb.size() == (size_t)b);
                        std::set<std::string> seen;
                        for (auto& v : nb) {
                            seen.insert(v.label);
                            for (int pos = 1; pos <= k; ++pos)
                                if (pos != j) CHECK(digit_of(v.label, pos) == digit_of(a, pos));
                        }
                        CHECK(seen.size() == (size_t)b);
                        edges += nb.size();
                    }
                    CHECK(edges == ipow(b, k + 1));
                }
            }
        }
    }
}

TEST_CASE("enumerate_paths: b=2,k=1,l=3 gives the 4 digit strings 0..0") {
    NetworkParams p{2, 1, 3};
    auto paths = enumerate_paths(p, {0, "0"}, {3, "0"});
    REQUIRE(paths.size() == 4);
    std::set<std::string> got;
    for (auto& t : paths) {
        CHECK(is_valid_path(p, t));
        CHECK(path_vertex(p, t, 0).label == "0");
        CHECK(path_vertex(p, t, 3).label == "0");
        got.insert(t.digits);
    }
    CHECK(got == std::set<std::string>({"0000", "0010", "0100", "0110"}));
}

TEST_CASE("enumerate_paths: l<k connects iff labels agree in the fixed tail") {
    // stages 1..l vary positions 1..l, so positions l+1..k are pinned
    NetworkParams p{2, 2, 1};
    auto hit = enumerate_paths(p, {0, "01"}, {1, "11"});
    REQUIRE(hit.size() == 1);
    CHECK(hit[0].digits == "011");
    CHECK(path_vertex(p, hit[0], 1).label == "11");

    auto miss = enumerate_paths(p, {0, "01"}, {1, "10"});
    CHECK(miss.empty());

    for (auto& a : all_labels(2, 2))
        for (auto& c : all_labels(2, 2)) {
            auto r = enumerate_paths(p, {0, a}, {1, c});
            bool agree = a[1] == c[1];
            CHECK(r.size() == (agree ? 1u : 0u));
        }
}

TEST_CASE("enumerate_paths: l=k gives exactly one path for every pair") {
    NetworkParams p{3, 2, 2};
    for (auto& a : all_labels(3, 2))
        for (auto& c : all_labels(3, 2)) {
            auto r = enumerate_paths(p, {0, a}, {2, c});
            REQUIRE(r.size() == 1);
            CHECK(is_valid_path(p, r[0]));
            CHECK(path_vertex(p, r[0], 0).label == a);
            CHECK(path_vertex(p, r[0], 2).label == c);
        }
}

TEST_CASE("enumerate_paths: count is b^(l-k), paths distinct and valid") {
    for (int b = 2; b <= 3; ++b)
        for (int k = 1; k <= 2; ++k)
            for (int l = k; l <= k + 4; ++l) {
                NetworkParams p{b, k, l};
                auto v = VertexId{0, zeros_label(p)};
                auto w = VertexId{l, zeros_label(p)};
                auto paths = enumerate_paths(p, v, w);
                CHECK(paths.size() == ipow(b, l - k));
                std::set<std::string> uniq;
                for (auto& t : paths) {
                    CHECK(t.digits.size() == (size_t)(k + l));
                    CHECK(is_valid_path(p, t));
                    uniq.insert(t.digits);
                }
                CHECK(uniq.size() == paths.size());
            }
}

TEST_CASE("enumerate_paths: consecutive path vertices are graph edges") {
    NetworkParams p{2, 2, 5};
    for (auto& t : enumerate_paths(p, {0, "10"}, {5, "01"}))
        for (int m = 1; m <= p.l; ++m)
            CHECK(is_edge(p, path_vertex(p, t, m - 1), path_vertex(p, t, m)));
}

TEST_CASE("enumerate_paths: cap exceeded") {
    NetworkParams p{2, 1, 11};
    CHECK_THROWS_AS(enumerate_paths(p, {0, "0"}, {11, "0"}, 8), CapError);
    CHECK_THROWS_AS(enumerate_paths(p, {1, "0"}, {11, "0"}), std::invalid_argument);
}

TEST_CASE("path_links extracts ranks 1..l-1") {
    NetworkParams p1{2, 1, 1};
    CHECK(path_links(p1, {"00"}).empty());

    NetworkParams p2{2, 1, 3};
    auto links = path_links(p2, {"0110"});
    REQUIRE(links.size() == 2);
    CHECK(links[0] == VertexId{1, "1"});
    CHECK(links[1] == VertexId{2, "1"});

    NetworkParams p3{2, 2, 2};
    auto links3 = path_links(p3, {"0000"});
    REQUIRE(links3.size() == 1);
    CHECK(links3[0] == VertexId{1, "00"});
}

TEST_CASE("canonical_automorphism: identity on the all-zeros path") {
    NetworkParams p{2, 2, 4};
    PathDigits u0{std::string(6, '0')};
    auto a = canonical_automorphism(p, u0);
    REQUIRE(a.shifts.size() == 5);
    for (auto& s : a.shifts) CHECK(s == "00");
}

TEST_CASE("canonical_automorphism maps its path to the all-zeros path") {
    for (int b = 2; b <= 3; ++b) {
        NetworkParams p{b, 2, 4};
        auto labs = all_labels(b, 2);
        for (auto& a : labs)
            for (auto& c : labs)
                for (auto& t : enumerate_paths(p, {0, a}, {4, c})) {
                    auto au = canonical_automorphism(p, t);
                    REQUIRE(au.shifts.size() == (size_t)(p.l + 1));
                    for (int m = 0; m <= p.l; ++m) {
                        auto img = apply_automorphism(p, au, path_vertex(p, t, m));
                        CHECK(img.rank == m);
                        CHECK(img.label == zeros_label(p));
                    }
                    // consecutive shifts differ only in the stage position
                    for (int m = 1; m <= p.l; ++m) {
                        int j = stage_position(m, p.k);
                        for (int pos = 1; pos <= p.k; ++pos)
                            if (pos != j)
                                CHECK(au.shifts[m][pos - 1] == au.shifts[m - 1][pos - 1]);
                    }
                }
    }
}

TEST_CASE("automorphisms preserve adjacency") {
    NetworkParams p{2, 2, 4};
    auto labs = all_labels(2, 2);
    for (auto& c : labs)
        for (auto& t : enumerate_paths(p, {0, "01"}, {4, c})) {
            auto au = canonical_automorphism(p, t);
            for (int m = 1; m <= p.l; ++m)
                for (auto& a : labs) {
                    VertexId x{m - 1, a};
                    auto ix = apply_automorphism(p, au, x);
                    for (auto& y : neighbors(p, x, true))
                        CHECK(is_edge(p, ix, apply_automorphism(p, au, y)));
                }
        }
}

TEST_CASE("automorphisms preserve the link multiset size") {
    // relabeling links bijectively leaves any per-status product unchanged
    NetworkParams p{2, 2, 4};
    auto t = enumerate_paths(p, {0, "01"}, {4, "10"}).at(0);
    auto au = canonical_automorphism(p, t);
    for (int m = 1; m < p.l; ++m) {
        std::set<std::string> img;
        for (auto& a : all_labels(2, 2)) {
            auto v = apply_automorphism(p, au, {m, a});
            CHECK(v.rank == m);
            img.insert(v.label);
        }
        CHECK(img.size() == 4);
    }
}

TEST_CASE("apply_automorphism: identity and mod-2 involution") {
    NetworkParams p{2, 2, 3};
    Automorphism id;
    id.shifts.assign(4, "00");
    VertexId v{2, "10"};
    CHECK(apply_automorphism(p, id, v) == v);

    auto t = enumerate_paths(p, {0, "11"}, {3, "01"}).at(0);
    auto au = canonical_automorphism(p, t);
    for (int m = 0; m <= p.l; ++m)
        for (auto& a : all_labels(2, 2)) {
            VertexId x{m, a};
            auto once = apply_automorphism(p, au, x);
            CHECK(apply_automorphism(p, au, once) == x);
        }
}

TEST_CASE("dual_map: involution on all vertices") {
    NetworkParams p{2, 3, 6};
    for (int r = 0; r <= p.l; ++r)
        for (auto& a : all_labels(2, 3)) {
            VertexId v{r, a};
            auto d = dual_map(p, v);
            CHECK(d.rank == p.l - r);
            CHECK(dual_map(p, d) == v);
        }
    CHECK(dual_map(p, {0, "010"}).rank == 6);
}

TEST_CASE("dual_map sends edges to reversed edges") {
    NetworkParams p{2, 2, 4};
    for (int m = 1; m <= p.l; ++m)
        for (auto& a : all_labels(2, 2)) {
            VertexId x{m - 1, a};
            for (auto& y : neighbors(p, x, true))
                CHECK(is_edge(p, dual_map(p, y), dual_map(p, x)));
        }
}

TEST_CASE("window_iso: m=0 embeds identically") {
    NetworkParams host{2, 2, 6};
    for (int r = 0; r <= 6; ++r)
        for (auto& a : all_labels(2, 2))
            CHECK(window_iso(host, 0, 6, {r, a}) == VertexId{r, a});
}

TEST_CASE("window_iso: ranks 2..5 of the depth-6 graph mirror the depth-3 graph") {
    NetworkParams host{2, 2, 6};
    NetworkParams sub{2, 2, 3};
    auto labs = all_labels(2, 2);

    // bijective per rank
    for (int h = 0; h <= 3; ++h) {
        std::set<std::string> img;
        for (auto& a : labs) {
            auto v = window_iso(host, 2, 5, {h, a});
            CHECK(v.rank == 2 + h);
            img.insert(v.label);
        }
        CHECK(img.size() == labs.size());
    }

    // edge preserving in both directions
    for (int m = 1; m <= sub.l; ++m)
        for (auto& a : labs) {
            VertexId x{m - 1, a};
            auto ix = window_iso(host, 2, 5, x);
            auto nb = neighbors(sub, x, true);
            std::set<std::string> sub_img, host_lab;
            for (auto& y : nb) {
                CHECK(is_edge(host, ix, window_iso(host, 2, 5, y)));
                sub_img.insert(window_iso(host, 2, 5, y).label);
            }
            for (auto& y : neighbors(host, ix, true)) host_lab.insert(y.label);
            CHECK(sub_img == host_lab);
        }
}

TEST_CASE("window paths: b^(n-m-k) paths between window endpoints") {
    // count host paths rank 2 -> rank 5 by depth-first walk
    NetworkParams host{2, 2, 6};
    NetworkParams sub{2, 2, 3};
    for (auto& a : all_labels(2, 2))
        for (auto& c : all_labels(2, 2)) {
            auto from = window_iso(host, 2, 5, {0, a});
            auto to = window_iso(host, 2, 5, {3, c});
            std::uint64_t count = 0;
            std::vector<VertexId> cur{from};
            for (int r = from.rank; r < to.rank; ++r) {
                std::vector<VertexId> next;
                for (auto& v : cur)
                    for (auto& nb : neighbors(host, v, true)) next.push_back(nb);
                cur = std::move(next);
            }
            for (auto& v : cur)
                if (v == to) ++count;
            CHECK(count == 2); // b^(n-m-k) = 2^(3-2)
            CHECK(enumerate_paths(sub, {0, a}, {3, c}).size() == 2);
        }
}

TEST_CASE("window_iso: range errors") {
    NetworkParams host{2, 2, 6};
    CHECK_THROWS_AS(window_iso(host, 3, 2, {0, "00"}), std::out_of_range);
    CHECK_THROWS_AS(window_iso(host, 0, 7, {0, "00"}), std::out_of_range);
    CHECK_THROWS_AS(window_iso(host, 2, 5, {4, "00"}), std::out_of_range);
}

TEST_CASE("path_vertex reads the rotated window") {
    // position j of the rank-m vertex is digit k+m-((m-j) mod k)
    NetworkParams p{3, 2, 4};
    PathDigits t{"012012"};
    for (int m = 0; m <= 4; ++m) {
        auto v = path_vertex(p, t, m);
        for (int j = 1; j <= 2; ++j) {
            int idx = p.k + m - ((m - j) % p.k + p.k) % p.k;
            CHECK(digit_of(v.label, j) == t.digits[idx - 1] - '0');
        }
    }
}
