#include "tddel/geom.hpp"

#include "tddel/errors.hpp"
#include "tddel/rational.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tddel {

PointConfiguration PointConfiguration::create(int d,
                                              std::map<VertexId, std::vector<Rational>> points) {
    if (d < 2) throw InputError("a point configuration needs d >= 2");
    if (points.empty()) throw InputError("a point configuration needs at least one point");
    for (const auto& [label, coords] : points) {
        if (label.empty()) throw InputError("empty point label");
        if (static_cast<int>(coords.size()) != d)
            throw InputError("point '" + label + "' does not have " + std::to_string(d) +
                             " coordinates");
        Rational sum = 0;
        for (const auto& c : coords) sum += c;
        if (sum != 1)
            throw InputError("points not on H_d: coordinate sum of '" + label + "' is " +
                             rational_to_string(sum) + ", expected 1");
    }
    return {d, std::move(points)};
}

bool in_general_position(const PointConfiguration& p) {
    for (int i = 0; i < p.d; ++i) {
        std::set<Rational> seen;
        for (const auto& [label, coords] : p.points)
            if (!seen.insert(coords[static_cast<std::size_t>(i)]).second) return false;
    }
    return true;
}

SimplexCorner corner_of(const PointConfiguration& p, const Face& face) {
    if (face.empty()) throw InputError("corner_of requires a nonempty face");
    SimplexCorner corner;
    corner.coords.assign(static_cast<std::size_t>(p.d), Rational(0));
    bool first = true;
    for (const auto& label : face) {
        const auto it = p.points.find(label);
        if (it == p.points.end()) throw InputError("unknown point '" + label + "'");
        for (int i = 0; i < p.d; ++i) {
            const auto& c = it->second[static_cast<std::size_t>(i)];
            auto& m = corner.coords[static_cast<std::size_t>(i)];
            if (first || c > m) m = c;
        }
        first = false;
    }
    return corner;
}

namespace {

void require_general_position(const PointConfiguration& p) {
    if (!in_general_position(p))
        throw InputError("points are not in general position: two points share a coordinate");
}

} // namespace

SimplicialComplex tdd(const PointConfiguration& p) {
    require_general_position(p);
    std::vector<VertexId> labels;
    for (const auto& [label, coords] : p.points) labels.push_back(label);
    const int n = static_cast<int>(labels.size());

    std::set<Face> faces;
    faces.insert(Face{});
    std::vector<int> chosen;
    std::function<void(int)> walk = [&](int from) {
        if (!chosen.empty()) {
            Face f;
            for (int v : chosen) f.push_back(labels[static_cast<std::size_t>(v)]);
            const SimplexCorner corner = corner_of(p, f);
            bool empty_interior = true;
            for (const auto& [label, coords] : p.points) {
                bool inside = true;
                for (int i = 0; i < p.d && inside; ++i)
                    inside = coords[static_cast<std::size_t>(i)] <
                             corner.coords[static_cast<std::size_t>(i)];
                if (inside) { empty_interior = false; break; }
            }
            // A blocked corner blocks every superset too (the corner simplex
            // only grows), so pruning the whole branch is exact.
            if (!empty_interior) return;
            faces.insert(std::move(f));
        }
        if (static_cast<int>(chosen.size()) == p.d) return;
        for (int v = from; v < n; ++v) {
            chosen.push_back(v);
            walk(v + 1);
            chosen.pop_back();
        }
    };
    walk(0);
    return SimplicialComplex::from_faces(labels, std::move(faces));
}

Representation representation_of(const PointConfiguration& p) {
    require_general_position(p);
    std::vector<VertexId> labels;
    for (const auto& [label, coords] : p.points) labels.push_back(label);
    std::vector<std::vector<VertexId>> orders;
    for (int i = 0; i < p.d; ++i) {
        auto ord = labels;
        std::sort(ord.begin(), ord.end(), [&](const VertexId& a, const VertexId& b) {
            return p.points.at(a)[static_cast<std::size_t>(i)] <
                   p.points.at(b)[static_cast<std::size_t>(i)];
        });
        orders.push_back(std::move(ord));
    }
    return Representation(std::move(orders));
}

Homothety homothety_decompose(const SimplexCorner& c) {
    const int d = static_cast<int>(c.coords.size());
    if (d < 2) throw InputError("a simplex corner needs at least 2 coordinates");
    Rational sum = 0;
    for (const auto& x : c.coords) sum += x;
    if (sum < 1)
        throw InputError("not a positive simplex: corner coordinates sum to " +
                         rational_to_string(sum) + " < 1");
    Homothety h;
    h.alpha = (sum - 1) / (d - 1);
    h.omega.reserve(c.coords.size());
    if (h.alpha == 1) {
        // The homothety is the identity; any center works, report the barycenter.
        for (int i = 0; i < d; ++i) h.omega.emplace_back(Rational(1, d));
    } else {
        for (const auto& x : c.coords) h.omega.push_back((x - h.alpha) / (1 - h.alpha));
    }
    return h;
}

} // namespace tddel
