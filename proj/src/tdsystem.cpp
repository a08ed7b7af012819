#include "tddel/tdsystem.hpp"

#include "tddel/errors.hpp"
#include "tddel/lp.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tddel {

int TDSystem::vertex_index(const VertexId& v) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v) throw InputError("unknown vertex '" + v + "'");
    return static_cast<int>(it - vertices.begin());
}

TDSystem build_system(const Representation& r) {
    TDSystem s;
    s.d = r.d();
    s.vertices = r.elements();
    if (s.d < 2) throw InputError("the TD-Delaunay system needs d >= 2");

    const auto edges = sigma_edges(r); // already sorted lexicographically
    for (const Face& e : edges)
        for (int i = 0; i < s.d; ++i) s.rows.emplace_back(e, i);

    for (const auto& [edge, i] : s.rows) {
        std::map<int, int> entries;
        const VertexId& hi = r.max_of(i, edge);
        const VertexId& lo = (edge[0] == hi) ? edge[1] : edge[0];
        if (i < s.d - 1) {
            entries[s.col(s.vertex_index(hi), i)] = +1;
            entries[s.col(s.vertex_index(lo), i)] = -1;
        } else {
            for (int j = 0; j < s.d - 1; ++j) {
                entries[s.col(s.vertex_index(lo), j)] = +1;
                entries[s.col(s.vertex_index(hi), j)] = -1;
            }
        }
        s.row_entries.push_back(std::move(entries));
    }
    return s;
}

std::vector<std::string> system_inequalities(const TDSystem& s) {
    std::vector<std::string> out;
    const auto term = [&](int col) {
        const int v = col / (s.d - 1);
        const int j = col % (s.d - 1);
        return s.vertices[static_cast<std::size_t>(v)] + std::to_string(j + 1);
    };
    for (std::size_t row = 0; row < s.rows.size(); ++row) {
        std::string neg, pos;
        for (const auto& [col, sign] : s.row_entries[row]) {
            std::string& side = (sign > 0) ? pos : neg;
            if (!side.empty()) side += " + ";
            side += term(col);
        }
        out.push_back(neg + " < " + pos);
    }
    return out;
}

std::optional<std::vector<Rational>> solve_strict(const TDSystem& s) {
    // A x > 0 is homogeneous, so it has a solution iff A x >= 1 does.
    // Free x is split as x = xp - xm; surplus variables close the gap:
    //    A (xp - xm) - t = 1,   xp, xm, t >= 0.
    const int cols = s.num_cols();
    const int nrows = static_cast<int>(s.rows.size());
    lp::Problem prob;
    prob.vars.assign(static_cast<std::size_t>(2 * cols + nrows), lp::Variable{});
    for (int row = 0; row < nrows; ++row) {
        std::vector<std::pair<int, Rational>> coeffs;
        for (const auto& [col, sign] : s.row_entries[static_cast<std::size_t>(row)]) {
            coeffs.emplace_back(col, Rational(sign));
            coeffs.emplace_back(cols + col, Rational(-sign));
        }
        coeffs.emplace_back(2 * cols + row, Rational(-1));
        prob.rows.push_back(std::move(coeffs));
        prob.rhs.emplace_back(1);
    }
    const lp::Solution sol = lp::solve(prob);
    if (sol.status == lp::Status::Infeasible) return std::nullopt;

    std::vector<Rational> x(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c)
        x[static_cast<std::size_t>(c)] =
            sol.x[static_cast<std::size_t>(c)] - sol.x[static_cast<std::size_t>(cols + c)];
    return x;
}

bool MultiFlow::nonzero() const {
    for (const auto& [arc, value] : flow)
        if (sgn(value) > 0) return true;
    return false;
}

std::map<VertexId, Rational> divergences(const MultiFlow& m, int order) {
    std::map<VertexId, Rational> div;
    for (const auto& [arc, value] : m.flow) {
        const auto& [i, tail, head] = arc;
        if (i != order) continue;
        div[head] += value;
        div[tail] -= value;
    }
    return div;
}

std::optional<MultiFlow> find_multiflow(const Representation& r) {
    const TDSystem s = build_system(r);
    const int nrows = static_cast<int>(s.rows.size());
    if (nrows == 0) return std::nullopt; // no arcs: only the zero multi-flow

    // maximize sum(y)  s.t.  tA y = 0,  0 <= y <= 1
    lp::Problem prob;
    prob.vars.assign(static_cast<std::size_t>(nrows), lp::Variable{});
    for (auto& v : prob.vars) {
        v.upper = Rational(1);
        v.objective = Rational(-1); // minimize -sum(y)
    }
    std::vector<std::vector<std::pair<int, Rational>>> by_col(
        static_cast<std::size_t>(s.num_cols()));
    for (int row = 0; row < nrows; ++row)
        for (const auto& [col, sign] : s.row_entries[static_cast<std::size_t>(row)])
            by_col[static_cast<std::size_t>(col)].emplace_back(row, Rational(sign));
    for (auto& coeffs : by_col) {
        prob.rows.push_back(std::move(coeffs));
        prob.rhs.emplace_back(0);
    }

    // Any point with positive total flow certifies, so stop early.
    const lp::Solution sol = lp::solve(prob, Rational(0));
    if (sol.status == lp::Status::Infeasible)
        throw InternalError("the multi-flow polytope lost its zero point");
    if (sol.status == lp::Status::Optimal && sgn(sol.objective) == 0) return std::nullopt;

    MultiFlow m;
    m.d = s.d;
    for (int row = 0; row < nrows; ++row) {
        const Rational& value = sol.x[static_cast<std::size_t>(row)];
        if (sgn(value) <= 0) continue;
        const auto& [edge, i] = s.rows[static_cast<std::size_t>(row)];
        const VertexId& hi = r.max_of(i, edge);
        const VertexId& lo = (edge[0] == hi) ? edge[1] : edge[0];
        m.flow[{i, lo, hi}] = value;
    }
    return m;
}

MultiFlowCheck verify_multiflow(const Representation& r, const MultiFlow& m) {
    MultiFlowCheck check;
    if (m.d != r.d()) {
        check.detail = "flow count does not match the number of orders";
        return check;
    }
    std::set<Face> edges;
    for (const Face& e : sigma_edges(r)) edges.insert(e);
    for (const auto& [arc, value] : m.flow) {
        const auto& [i, tail, head] = arc;
        if (i < 0 || i >= r.d()) {
            check.detail = "flow references an order out of range";
            return check;
        }
        if (sgn(value) < 0) {
            check.detail = "negative flow on an arc";
            return check;
        }
        Face e;
        try {
            e = make_face({tail, head});
            r.element_index(tail);
            r.element_index(head);
        } catch (const InputError&) {
            check.detail = "flow references an invalid arc";
            return check;
        }
        if (!edges.count(e)) {
            check.detail = "flow supported on a pair that is not an edge of sigma";
            return check;
        }
        if (!r.leq(i, tail, head)) {
            check.detail = "arc descends its order";
            return check;
        }
    }
    const auto reference = divergences(m, r.d() - 1);
    for (int i = 0; i + 1 < r.d(); ++i) {
        auto div = divergences(m, i);
        // Compare as total functions over the vertex set.
        for (const auto& v : r.elements()) {
            const Rational a = div.count(v) ? div.at(v) : Rational(0);
            const Rational b = reference.count(v) ? reference.at(v) : Rational(0);
            if (a != b) {
                check.detail = "divergence mismatch at '" + v + "' between flows " +
                               std::to_string(i + 1) + " and " + std::to_string(r.d());
                return check;
            }
        }
    }
    check.structure_ok = true;
    check.nonzero = m.nonzero();
    if (!check.nonzero) check.detail = "flow is identically zero";
    return check;
}

namespace {

void substitute_and_check(const TDSystem& s, const std::vector<Rational>& x) {
    for (std::size_t row = 0; row < s.rows.size(); ++row) {
        Rational value = 0;
        for (const auto& [col, sign] : s.row_entries[row])
            value += Rational(sign) * x[static_cast<std::size_t>(col)];
        if (sgn(value) <= 0)
            throw InternalError("claimed solution violates a strict inequality");
    }
}

} // namespace

FeasibilityVerdict decide(const Representation& r) {
    const TDSystem s = build_system(r);
    FeasibilityVerdict verdict;
    if (auto x = solve_strict(s)) {
        substitute_and_check(s, *x);
        std::map<VertexId, std::vector<Rational>> solution;
        for (std::size_t v = 0; v < s.vertices.size(); ++v) {
            std::vector<Rational> coords;
            for (int j = 0; j < s.d - 1; ++j)
                coords.push_back((*x)[static_cast<std::size_t>(s.col(static_cast<int>(v), j))]);
            solution[s.vertices[v]] = std::move(coords);
        }
        verdict.solution = std::move(solution);
        return verdict;
    }
    auto certificate = find_multiflow(r);
    if (!certificate)
        throw InternalError("feasibility dichotomy failed: no solution and no certificate");
    if (!verify_multiflow(r, *certificate).certifies())
        throw InternalError("feasibility dichotomy produced an invalid certificate");
    verdict.certificate = std::move(certificate);
    return verdict;
}

std::optional<PointConfiguration> realize(const Representation& r) {
    for (const auto& v : r.elements())
        if (!is_vertex(r, v))
            throw InputError("element '" + v +
                             "' is not a vertex of sigma; every placed point is one, so the "
                             "representation is not realizable");

    const TDSystem s = build_system(r);
    const auto x = solve_strict(s);
    if (!x) return std::nullopt;

    const int d = s.d;
    const int n = static_cast<int>(s.vertices.size());

    // Smallest row value of the strict system; perturbations must stay below it.
    Rational min_row = 1;
    bool have_row = false;
    Rational max_row_weight = 0;
    // Distinct positive multipliers m(v,j) = v*(d-1)+j+1; their per-vertex
    // sums are also pairwise distinct, which keeps the derived d-th
    // coordinate collision-free for small enough epsilon.
    const auto multiplier = [&](int v, int j) { return Rational(v * (d - 1) + j + 1); };
    for (std::size_t row = 0; row < s.rows.size(); ++row) {
        Rational value = 0;
        Rational weight = 0;
        for (const auto& [col, sign] : s.row_entries[row]) {
            value += Rational(sign) * (*x)[static_cast<std::size_t>(col)];
            weight += multiplier(col / (d - 1), col % (d - 1));
        }
        if (!have_row || value < min_row) min_row = value;
        if (weight > max_row_weight) max_row_weight = weight;
        have_row = true;
    }
    Rational eps = have_row && sgn(max_row_weight) > 0 ? min_row / (2 * max_row_weight)
                                                       : Rational(1);

    for (int attempt = 0; attempt < 200; ++attempt, eps /= 2) {
        std::map<VertexId, std::vector<Rational>> points;
        for (int v = 0; v < n; ++v) {
            std::vector<Rational> coords;
            Rational sum = 0;
            for (int j = 0; j < d - 1; ++j) {
                Rational c = (*x)[static_cast<std::size_t>(s.col(v, j))] + multiplier(v, j) * eps;
                sum += c;
                coords.push_back(std::move(c));
            }
            coords.push_back(1 - sum);
            points[s.vertices[static_cast<std::size_t>(v)]] = std::move(coords);
        }
        auto p = PointConfiguration::create(d, std::move(points));
        if (!in_general_position(p)) continue;
        if (!(tdd(p) == sigma(r)))
            throw InternalError("realized point set does not reproduce sigma");
        return p;
    }
    throw InternalError("perturbation failed to reach general position");
}

bool is_acyclic(const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    std::map<VertexId, std::vector<VertexId>> out;
    std::map<VertexId, int> state; // 0 new, 1 open, 2 done
    for (const auto& [tail, head] : arcs) {
        out[tail].push_back(head);
        state[tail] = 0;
        state[head] = 0;
    }
    std::function<bool(const VertexId&)> has_cycle = [&](const VertexId& v) {
        state[v] = 1;
        for (const auto& w : out[v]) {
            if (state[w] == 1) return true;
            if (state[w] == 0 && has_cycle(w)) return true;
        }
        state[v] = 2;
        return false;
    };
    for (const auto& [v, st] : state)
        if (st == 0 && has_cycle(v)) return false;
    return true;
}

std::optional<std::map<std::pair<VertexId, VertexId>, Rational>>
nonzero_circulation(const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    if (arcs.empty()) return std::nullopt;
    std::map<VertexId, int> vertex_index;
    for (const auto& [tail, head] : arcs) {
        vertex_index.emplace(tail, 0);
        vertex_index.emplace(head, 0);
    }
    int next = 0;
    for (auto& [v, idx] : vertex_index) idx = next++;

    lp::Problem prob;
    prob.vars.assign(arcs.size(), lp::Variable{});
    for (auto& v : prob.vars) {
        v.upper = Rational(1);
        v.objective = Rational(-1);
    }
    std::vector<std::vector<std::pair<int, Rational>>> rows(
        static_cast<std::size_t>(next));
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        rows[static_cast<std::size_t>(vertex_index.at(arcs[a].second))].emplace_back(
            static_cast<int>(a), Rational(1));
        rows[static_cast<std::size_t>(vertex_index.at(arcs[a].first))].emplace_back(
            static_cast<int>(a), Rational(-1));
    }
    for (auto& row : rows) {
        prob.rows.push_back(std::move(row));
        prob.rhs.emplace_back(0);
    }
    const lp::Solution sol = lp::solve(prob, Rational(0));
    if (sol.status == lp::Status::Optimal && sgn(sol.objective) == 0) return std::nullopt;

    std::map<std::pair<VertexId, VertexId>, Rational> flow;
    for (std::size_t a = 0; a < arcs.size(); ++a)
        if (sgn(sol.x[a]) > 0) flow[arcs[a]] = sol.x[a];
    return flow;
}

} // namespace tddel
