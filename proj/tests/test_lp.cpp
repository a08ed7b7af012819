#include "tddel/lp.hpp"
#include "tddel/errors.hpp"

#include <doctest.h>

#include <random>

using namespace tddel;
using namespace tddel::lp;

TEST_SUITE("lp") {

TEST_CASE("feasible equality with simple objective") {
    Problem p;
    p.vars.resize(2);
    p.vars[0].objective = 1;
    p.rows.push_back({{0, 1}, {1, 1}});
    p.rhs.emplace_back(1);
    const auto sol = solve(p);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.objective == 0);
    CHECK(sol.x[0] == 0);
    CHECK(sol.x[1] == 1);
}

TEST_CASE("upper bounds are honored") {
    Problem p;
    p.vars.resize(1);
    p.vars[0].objective = -1;
    p.vars[0].upper = Rational(5);
    const auto sol = solve(p);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.objective == -5);
    CHECK(sol.x[0] == 5);
}

TEST_CASE("infeasible systems are detected") {
    Problem p;
    p.vars.resize(2);
    p.rows.push_back({{0, 1}, {1, 1}});
    p.rhs.emplace_back(-1);
    CHECK(solve(p).status == Status::Infeasible);
}

TEST_CASE("negative right-hand sides are handled by row flips") {
    Problem p;
    p.vars.resize(2);
    p.vars[0].upper = Rational(10);
    p.vars[1].upper = Rational(10);
    p.vars[1].objective = 1;
    p.rows.push_back({{0, 1}, {1, -1}});
    p.rhs.emplace_back(-3);
    const auto sol = solve(p);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.objective == 3);
    CHECK(sol.x[1] - sol.x[0] == 3);
}

TEST_CASE("degenerate optimum at the origin") {
    Problem p;
    p.vars.resize(2);
    p.vars[0].objective = -1;
    p.vars[1].objective = -1;
    p.rows.push_back({{0, 1}, {1, 1}});
    p.rhs.emplace_back(0);
    const auto sol = solve(p);
    REQUIRE(sol.status == Status::Optimal);
    CHECK(sol.objective == 0);
}

TEST_CASE("early stop returns a strictly improving point") {
    Problem p;
    p.vars.resize(1);
    p.vars[0].objective = -1;
    p.vars[0].upper = Rational(1);
    const auto sol = solve(p, Rational(0));
    REQUIRE(sol.status == Status::TargetReached);
    CHECK(sol.objective < 0);
    CHECK(sol.x[0] > 0);
}

TEST_CASE("unbounded programs throw") {
    Problem p;
    p.vars.resize(1);
    p.vars[0].objective = -1;
    CHECK_THROWS_AS(solve(p), InternalError);
}

TEST_CASE("bad rows are rejected") {
    Problem p;
    p.vars.resize(1);
    p.rows.push_back({{3, 1}});
    p.rhs.emplace_back(0);
    CHECK_THROWS_AS(solve(p), InputError);
    Problem q;
    q.vars.resize(1);
    q.vars[0].lower = 2;
    q.vars[0].upper = Rational(1);
    CHECK_THROWS_AS(solve(q), InputError);
}

TEST_CASE("random systems built around a known point stay feasible and exact") {
    std::mt19937_64 rng(171717);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % 3);
        Problem p;
        p.vars.resize(static_cast<std::size_t>(n));
        std::vector<Rational> x0;
        for (int j = 0; j < n; ++j) {
            p.vars[static_cast<std::size_t>(j)].upper = Rational(4);
            p.vars[static_cast<std::size_t>(j)].objective =
                Rational(static_cast<long>(rng() % 7)) - 3;
            x0.emplace_back(Rational(static_cast<long>(rng() % 9)) / 2); // within [0, 4]
        }
        for (int i = 0; i < m; ++i) {
            std::vector<std::pair<int, Rational>> row;
            Rational rhs = 0;
            for (int j = 0; j < n; ++j) {
                const long coeff = static_cast<long>(rng() % 7) - 3;
                if (coeff == 0) continue;
                row.emplace_back(j, Rational(coeff));
                rhs += Rational(coeff) * x0[static_cast<std::size_t>(j)];
            }
            p.rows.push_back(std::move(row));
            p.rhs.push_back(std::move(rhs));
        }
        const auto sol = solve(p);
        REQUIRE(sol.status == Status::Optimal); // x0 is feasible by construction
        // The returned point satisfies every row exactly and sits in the box.
        for (std::size_t i = 0; i < p.rows.size(); ++i) {
            Rational lhs = 0;
            for (const auto& [j, a] : p.rows[i]) lhs += a * sol.x[static_cast<std::size_t>(j)];
            CHECK(lhs == p.rhs[i]);
        }
        Rational at_x0 = 0;
        for (int j = 0; j < n; ++j) {
            CHECK(sol.x[static_cast<std::size_t>(j)] >= 0);
            CHECK(sol.x[static_cast<std::size_t>(j)] <= 4);
            at_x0 += p.vars[static_cast<std::size_t>(j)].objective *
                     x0[static_cast<std::size_t>(j)];
        }
        CHECK(sol.objective <= at_x0); // optimal is at least as good as x0
        Rational recomputed = 0;
        for (int j = 0; j < n; ++j)
            recomputed += p.vars[static_cast<std::size_t>(j)].objective *
                          sol.x[static_cast<std::size_t>(j)];
        CHECK(recomputed == sol.objective);
    }
}

} // TEST_SUITE
