#include "tddel/witness.hpp"
#include "tddel/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace tddel;

TEST_SUITE("witness") {

TEST_CASE("the pinned counterexample representation") {
    const auto r = counterexample_representation();
    REQUIRE(r.d() == 4);
    CHECK(r.order(2) ==
          std::vector<VertexId>{"a", "b", "d", "f", "g", "e", "h", "c"});
    const auto delta = sigma(r);
    CHECK(delta.contains(Face{"b", "c", "d", "e"}));
    CHECK(delta.contains(Face{"c", "e", "f", "h"}));
}

TEST_CASE("the faces driving the middle deduction are all present") {
    const auto delta = sigma(counterexample_representation());
    for (const Face& f : std::vector<Face>{
             {"b", "c", "d", "e"}, {"a", "c", "d", "e"}, {"a", "b", "d", "f"},
             {"a", "b", "c", "f"}, {"b", "e", "g"}, {"a", "e", "h"}, {"d", "f", "g"},
             {"c", "f", "h"}, {"c", "e", "f"}, {"d", "e", "f"}, {"a", "e", "f"},
             {"b", "e", "f"}})
        CHECK(delta.contains(f));
}

TEST_CASE("standardness of the counterexample, both ways") {
    const auto r = counterexample_representation();
    const auto report = standardness(r);
    REQUIRE(report.is_standard);
    CHECK(*report.maxima == std::vector<VertexId>{"a", "b", "c", "d"});
    CHECK(standardness_from_complex(sigma(r), 4) ==
          std::vector<VertexId>{"a", "b", "c", "d"});
}

TEST_CASE("the deficient 2-faces are the triples inside the maxima") {
    // Independent count: 2-faces lying in exactly one 3-face.
    const auto delta = sigma(counterexample_representation());
    std::set<Face> deficient;
    for (const Face& f : delta.k_faces(2)) {
        int extensions = 0;
        for (const auto& v : delta.vertices()) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            Face ext = f;
            ext.insert(std::upper_bound(ext.begin(), ext.end(), v), v);
            if (delta.contains(ext)) ++extensions;
        }
        REQUIRE(extensions >= 1);
        if (extensions == 1) deficient.insert(f);
    }
    CHECK(deficient == std::set<Face>{{"a", "b", "c"},
                                      {"a", "b", "d"},
                                      {"a", "c", "d"},
                                      {"b", "c", "d"}});
}

TEST_CASE("middle deduction reproduces the pinned table") {
    const auto family = deduce_family(sigma(counterexample_representation()));
    CHECK(family.maxima == std::vector<VertexId>{"a", "b", "c", "d"});
    CHECK(family.middles == std::vector<VertexId>{"e", "f", "g", "h"});
    CHECK(family.deduced_middle[0] == std::vector<VertexId>{"e", "g", "f", "h"});
    CHECK(family.deduced_middle[1] == std::vector<VertexId>{"e", "h", "f", "g"});
    CHECK(family.deduced_middle[2] == std::vector<VertexId>{"f", "g", "e", "h"});
    CHECK(family.deduced_middle[3] == std::vector<VertexId>{"f", "h", "e", "g"});
}

TEST_CASE("deduce_family rejects complexes without the standard shape") {
    const auto c = SimplicialComplex::close_downward({Face{"a", "b"}, Face{"b", "c"}});
    CHECK_THROWS_AS(deduce_family(c), InputError);
}

TEST_CASE("family sizes") {
    CHECK(family_size(false) == 31104);                  // 4! * (3!)^4
    CHECK(family_size(true) == 31104ull * 331776ull);    // times 4!^4
}

TEST_CASE("candidate 0 is the pinned representation itself") {
    const auto delta = sigma(counterexample_representation());
    const auto family = deduce_family(delta);
    CHECK(build_candidate(family, 0, false) == counterexample_representation());
    CHECK_THROWS_AS(build_candidate(family, family_size(false), false), InputError);
}

TEST_CASE("every deduced candidate generates delta") {
    const auto delta = sigma(counterexample_representation());
    // The kernel over the full family: the recorded constant is that all
    // 31104 candidates pass the sigma filter.
    const auto family = deduce_family(delta);
    const CandidateScreen screen(delta, family, false);
    const auto ids = screen.matching_ids();
    CHECK(ids.size() == family_size(false));

    // The reference path agrees on a sample of ids.
    std::mt19937_64 rng(99);
    for (int k = 0; k < 25; ++k) {
        const std::uint64_t id = rng() % family_size(false);
        CHECK(screen.matches(id) == (sigma(build_candidate(family, id, false)) == delta));
    }
}

TEST_CASE("the streaming enumeration yields matching candidates in id order") {
    const auto delta = sigma(counterexample_representation());
    std::vector<std::uint64_t> ids;
    enumerate_candidates(delta, [&](std::uint64_t id, const Representation& candidate) {
        CHECK(sigma(candidate) == delta);
        ids.push_back(id);
        return ids.size() < 40;
    });
    REQUIRE(ids.size() == 40);
    for (std::uint64_t i = 0; i < 40; ++i) CHECK(ids[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("exhaustive screening matches only the deduced arrangements") {
    const auto delta = sigma(counterexample_representation());
    const auto family = deduce_family(delta);
    const CandidateScreen screen(delta, family, true);

    // The image of a deduced candidate inside the exhaustive id space: the
    // deduced middle of each slot's role, encoded in the factorial basis.
    const auto middle_perm_index = [&](const std::vector<VertexId>& arrangement) {
        std::vector<VertexId> pool = family.middles;
        unsigned index = 0;
        const unsigned factorial[4] = {6, 2, 1, 1};
        for (std::size_t pos = 0; pos < 4; ++pos) {
            const auto it = std::find(pool.begin(), pool.end(), arrangement[pos]);
            index += static_cast<unsigned>(it - pool.begin()) *
                     (pos < 3 ? factorial[pos] : 1);
            pool.erase(it);
        }
        return index;
    };
    // Candidate 0 has the identity assignment: slot s carries maxima[s].
    std::uint64_t mid_code = 0;
    for (int s = 0; s < 4; ++s)
        mid_code = mid_code * 24 + middle_perm_index(family.deduced_middle[static_cast<std::size_t>(s)]);
    const std::uint64_t exhaustive_id = mid_code * family_size(false) + 0;
    CHECK(screen.matches(exhaustive_id));
    CHECK(sigma(build_candidate(family, exhaustive_id, true)) == delta);

    std::mt19937_64 rng(1234);
    for (int k = 0; k < 30; ++k) {
        const std::uint64_t id = rng() % family_size(true);
        CHECK(screen.matches(id) == (sigma(build_candidate(family, id, true)) == delta));
    }
}

TEST_CASE("the pinned certificate is the figure flow for the pinned representation") {
    const auto r = counterexample_representation();
    const auto family = deduce_family(sigma(r));
    const auto pinned = pinned_certificate(family, r);
    const std::map<std::tuple<int, VertexId, VertexId>, Rational> expected{
        {{0, "e", "g"}, 1}, {{0, "f", "h"}, 1}, {{1, "e", "h"}, 1}, {{1, "f", "g"}, 1},
        {{2, "e", "h"}, 1}, {{2, "f", "g"}, 1}, {{3, "e", "g"}, 1}, {{3, "f", "h"}, 1}};
    CHECK(pinned.flow == expected);
    CHECK(verify_multiflow(r, pinned).certifies());
}

TEST_CASE("a slice of the candidate sweep is fully certified") {
    const auto delta = sigma(counterexample_representation());
    const auto family = deduce_family(delta);
    std::mt19937_64 rng(404);
    for (int k = 0; k < 12; ++k) {
        const std::uint64_t id = rng() % family_size(false);
        const auto candidate = build_candidate(family, id, false);
        const auto certificate = find_multiflow(candidate);
        REQUIRE(certificate.has_value());
        CHECK(verify_multiflow(candidate, *certificate).certifies());
        CHECK(verify_multiflow(candidate, pinned_certificate(family, candidate)).certifies());
    }
}

TEST_CASE("worker_count is at least one") { CHECK(worker_count() >= 1); }

} // TEST_SUITE
