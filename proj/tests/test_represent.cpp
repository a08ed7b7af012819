#include "tddel/represent.hpp"
#include "tddel/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace tddel;

namespace {

// Worked 5-element example: three orders, sigma has facets 12 / 234 / 245.
Representation five_element() {
    return Representation({{"1", "2", "5", "4", "3"},
                           {"3", "2", "1", "4", "5"},
                           {"5", "4", "3", "2", "1"}});
}

// Triangle example: sigma is the full triangle on {a,b,c}.
Representation triangle() {
    return Representation({{"b", "c", "a"}, {"a", "c", "b"}, {"a", "b", "c"}});
}

Representation random_representation(std::mt19937_64& rng, int d, int n) {
    std::vector<VertexId> elements;
    for (int i = 0; i < n; ++i) elements.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<std::vector<VertexId>> orders;
    for (int i = 0; i < d; ++i) {
        auto ord = elements;
        std::shuffle(ord.begin(), ord.end(), rng);
        orders.push_back(std::move(ord));
    }
    return Representation(std::move(orders));
}

// Test-side oracle: every weakly increasing walk, by exhaustive depth-first
// search over the edges (no vertex revisited; monotonicity makes that safe).
bool path_oracle(const Representation& r, int i, const VertexId& x, const VertexId& y) {
    if (x == y) return true;
    const auto edges = sigma_edges(r);
    std::set<VertexId> visited;
    std::vector<VertexId> stack{x};
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        if (u == y) return true;
        if (!visited.insert(u).second) continue;
        for (const Face& e : edges) {
            if (e[0] != u && e[1] != u) continue;
            const VertexId& w = (e[0] == u) ? e[1] : e[0];
            if (r.leq(i, u, w)) stack.push_back(w);
        }
    }
    return false;
}

void check_increasing_path(const Representation& r, int i, const std::vector<VertexId>& path) {
    REQUIRE(!path.empty());
    const auto edges = sigma_edges(r);
    const std::set<Face> edge_set(edges.begin(), edges.end());
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        CHECK(edge_set.count(make_face({path[k], path[k + 1]})) == 1);
        CHECK(r.leq(i, path[k], path[k + 1]));
    }
}

} // namespace

TEST_SUITE("represent") {

TEST_CASE("domination basics") {
    const auto r = five_element();
    CHECK(!dominates(r, "2", Face{"1", "2", "3"}));
    CHECK(dominates(r, "4", Face{}));
    CHECK(dominates(r, "3", Face{"3"}));
    CHECK_THROWS_AS(dominates(r, "9", Face{"1"}), InputError);
    CHECK_THROWS_AS(dominates(r, "1", Face{"9"}), InputError);
}

TEST_CASE("sigma of the five-element example") {
    const auto s = sigma(five_element());
    CHECK(s.facets() == std::set<Face>{{"1", "2"}, {"2", "3", "4"}, {"2", "4", "5"}});
    CHECK(!s.contains(Face{"1", "2", "3"}));
}

TEST_CASE("sigma of the triangle example") {
    CHECK(sigma(triangle()).facets() == std::set<Face>{{"a", "b", "c"}});
}

TEST_CASE("sigma of a single order keeps only the minimum") {
    // With one order every element must dominate each face, and only the
    // global minimum is below everyone.
    const Representation r({{"x", "y", "z"}});
    CHECK(sigma(r).faces() == std::set<Face>{Face{}, Face{"x"}});
    CHECK(is_vertex(r, "x"));
    CHECK(!is_vertex(r, "y"));
    CHECK(!is_vertex(r, "z"));
}

TEST_CASE("is_vertex") {
    CHECK(is_vertex(five_element(), "3"));
    const Representation single({{"s"}});
    CHECK(is_vertex(single, "s"));
}

TEST_CASE("swap_consecutive rejects a face pair") {
    // {4,5} is inside the facet {2,4,5}, so the swap precondition must fail.
    CHECK_THROWS_WITH_AS(swap_consecutive(five_element(), 0, "5", "4"),
                         doctest::Contains("face"), InputError);
}

TEST_CASE("swap_consecutive on a valid pair preserves sigma") {
    const auto r = five_element();
    // 1 and 4 are consecutive in the second order and {1,4} is not a face.
    REQUIRE(!sigma(r).contains(Face{"1", "4"}));
    const auto swapped = swap_consecutive(r, 1, "1", "4");
    CHECK(swapped.order(1) == std::vector<VertexId>{"3", "2", "4", "1", "5"});
    CHECK(sigma(swapped) == sigma(r));
    // Edge endpoints keep their relative order in every order.
    for (const Face& e : sigma_edges(r))
        for (int j = 0; j < r.d(); ++j)
            CHECK(r.leq(j, e[0], e[1]) == swapped.leq(j, e[0], e[1]));
    // The operation is an involution.
    CHECK(swap_consecutive(swapped, 1, "1", "4") == r);
}

TEST_CASE("swap_consecutive names the violated condition") {
    const auto r = five_element();
    CHECK_THROWS_WITH_AS(swap_consecutive(r, 1, "1", "5"),
                         doctest::Contains("consecutive"), InputError);
    // 'y' below: a representation where an element is not a vertex.
    const Representation two({{"x", "y"}, {"x", "y"}});
    CHECK_THROWS_WITH_AS(swap_consecutive(two, 0, "x", "y"),
                         doctest::Contains("vertex"), InputError);
}

TEST_CASE("increasing paths in the five-element example") {
    const auto r = five_element();
    CHECK(increasing_path_exists(r, 0, "4", "4"));
    CHECK(increasing_path_exists(r, 0, "1", "3"));
    CHECK(!increasing_path_exists(r, 2, "1", "5"));
}

TEST_CASE("increasing paths agree with the exhaustive oracle") {
    std::mt19937_64 rng(98173);
    for (int iter = 0; iter < 25; ++iter) {
        const auto r = random_representation(rng, 2 + static_cast<int>(rng() % 3),
                                             3 + static_cast<int>(rng() % 4));
        for (int i = 0; i < r.d(); ++i)
            for (const auto& x : r.elements())
                for (const auto& y : r.elements())
                    CHECK(increasing_path_exists(r, i, x, y) == path_oracle(r, i, x, y));
    }
}

TEST_CASE("certify_face_paths") {
    const auto r = five_element();
    SUBCASE("singleton faces have length-0 paths in every order") {
        const auto paths = certify_face_paths(r, Face{"2"}, "2");
        CHECK(paths.size() == 3);
        for (const auto& [i, path] : paths) CHECK(path == std::vector<VertexId>{"2"});
    }
    SUBCASE("paths from the face maxima to a vertex") {
        const auto paths = certify_face_paths(r, Face{"1", "2"}, "3");
        REQUIRE(!paths.empty());
        CHECK(paths.count(0) == 1); // max of {1,2} in the first order is 2; 2 -> 3 ascends
        for (const auto& [i, path] : paths) {
            CHECK(path.front() == r.max_of(i, Face{"1", "2"}));
            CHECK(path.back() == "3");
            check_increasing_path(r, i, path);
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(certify_face_paths(r, Face{"1", "2", "3"}, "1"), InputError);
        CHECK_THROWS_AS(certify_face_paths(r, Face{}, "1"), InputError);
    }
}

TEST_CASE("certify_nonface") {
    const auto r = five_element();
    SUBCASE("the witness for {1,2,3} is 2") {
        const Face f{"1", "2", "3"};
        const auto cert = certify_nonface(r, f);
        CHECK(cert.witness == "2");
        CHECK(!dominates(r, cert.witness, f));
        CHECK(cert.paths.size() == 3);
        for (const auto& [i, entry] : cert.paths) {
            const auto& [target, path] = entry;
            CHECK(std::binary_search(f.begin(), f.end(), target));
            CHECK(path.front() == cert.witness);
            CHECK(path.back() == target);
            check_increasing_path(r, i, path);
        }
    }
    SUBCASE("the whole vertex set certifies trivially") {
        const Face everything{"1", "2", "3", "4", "5"};
        const auto cert = certify_nonface(r, everything);
        for (const auto& [i, entry] : cert.paths) CHECK(entry.second.front() == cert.witness);
    }
    SUBCASE("faces are rejected") {
        CHECK_THROWS_AS(certify_nonface(r, Face{"2", "4"}), InputError);
    }
}

TEST_CASE("random nonface certificates verify") {
    std::mt19937_64 rng(5544);
    for (int iter = 0; iter < 30; ++iter) {
        const auto r = random_representation(rng, 3, 5 + static_cast<int>(rng() % 3));
        const auto s = sigma(r);
        // The guarantee covers sets of vertices of sigma.
        for (const auto& x : r.elements())
            for (const auto& y : r.elements()) {
                if (x >= y) continue;
                if (!is_vertex(r, x) || !is_vertex(r, y)) continue;
                const Face f = make_face({x, y});
                if (s.contains(f)) continue;
                const auto cert = certify_nonface(r, f);
                for (int i = 0; i < r.d(); ++i) {
                    REQUIRE(cert.paths.count(i) == 1);
                    check_increasing_path(r, i, cert.paths.at(i).second);
                }
                // The witness fails domination in every single order, directly.
                for (int i = 0; i < r.d(); ++i) {
                    bool dominated_here = true;
                    for (const auto& g : f)
                        dominated_here = dominated_here && r.leq(i, g, cert.witness);
                    CHECK(!dominated_here);
                }
                CHECK(!dominates(r, cert.witness, f));
            }
    }
}

TEST_CASE("standardness of the worked examples") {
    const auto tri = standardness(triangle());
    CHECK(tri.is_standard);
    CHECK(*tri.maxima == std::vector<VertexId>{"a", "b", "c"});

    const Representation same({{"x", "y"}, {"x", "y"}});
    CHECK(!standardness(same).is_standard);

    CHECK_THROWS_AS(standardness(Representation({{"x"}, {"x"}})), InputError);
}

TEST_CASE("standardness_from_complex") {
    SUBCASE("a single edge with d = 2") {
        const auto c = SimplicialComplex::close_downward({Face{"x", "y"}});
        CHECK(standardness_from_complex(c, 2) == std::vector<VertexId>{"x", "y"});
    }
    SUBCASE("two disjoint triangles fail for d = 3") {
        const auto c = SimplicialComplex::close_downward(
            {Face{"a", "b", "c"}, Face{"x", "y", "z"}});
        CHECK(!standardness_from_complex(c, 3));
    }
    SUBCASE("declared non-face vertices disqualify") {
        const auto c = SimplicialComplex::close_downward({"x", "y", "z"}, {Face{"x", "y"}});
        CHECK(!standardness_from_complex(c, 2));
    }
}

TEST_CASE("sigma is downward closed with faces of at most d vertices") {
    std::mt19937_64 rng(4242);
    for (int iter = 0; iter < 40; ++iter) {
        const int d = 2 + static_cast<int>(rng() % 4);
        const auto r = random_representation(rng, d, 3 + static_cast<int>(rng() % 6));
        const auto s = sigma(r);
        for (const Face& f : s.faces()) {
            CHECK(f.size() <= static_cast<std::size_t>(d));
            for (std::size_t skip = 0; skip < f.size(); ++skip) {
                Face sub;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != skip) sub.push_back(f[i]);
                CHECK(s.contains(sub));
            }
        }
        // sigma_edges agrees with the complex's 1-faces.
        const auto complex_edges = s.k_faces(1);
        const auto direct_edges = sigma_edges(r);
        CHECK(std::set<Face>(complex_edges.begin(), complex_edges.end()) ==
              std::set<Face>(direct_edges.begin(), direct_edges.end()));
    }
}

TEST_CASE("standardness agrees with the complex-side condition") {
    std::mt19937_64 rng(777);
    int all_vertex_cases = 0;
    for (int iter = 0; iter < 200 && all_vertex_cases < 40; ++iter) {
        const int d = 2 + static_cast<int>(rng() % 3);
        const auto r = random_representation(rng, d, d + 1 + static_cast<int>(rng() % 3));
        bool all_vertices = true;
        for (const auto& v : r.elements()) all_vertices = all_vertices && is_vertex(r, v);
        if (!all_vertices) continue;
        ++all_vertex_cases;
        const auto report = standardness(r);
        const auto maxima = standardness_from_complex(sigma(r), d);
        CHECK(report.is_standard == maxima.has_value());
        if (report.is_standard) {
            auto sorted = *report.maxima;
            std::sort(sorted.begin(), sorted.end());
            CHECK(sorted == *maxima);
        }
    }
    CHECK(all_vertex_cases > 0);
}

} // TEST_SUITE
