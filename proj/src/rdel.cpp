#include "tddel/rdel.hpp"

#include "tddel/errors.hpp"
#include "tddel/tdsystem.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tddel {

PlanarPointSet PlanarPointSet::create(
    std::map<VertexId, std::pair<Rational, Rational>> points) {
    if (points.empty()) throw InputError("a planar point set needs at least one point");
    std::set<Rational> xs, ys;
    for (const auto& [label, xy] : points) {
        if (label.empty()) throw InputError("empty point label");
        if (!xs.insert(xy.first).second)
            throw InputError("two points share the x-coordinate " +
                             rational_to_string(xy.first));
        if (!ys.insert(xy.second).second)
            throw InputError("two points share the y-coordinate " +
                             rational_to_string(xy.second));
    }
    return {std::move(points)};
}

SimplicialComplex rdelaunay(const PlanarPointSet& p) {
    std::vector<VertexId> labels;
    for (const auto& [label, xy] : p.points) labels.push_back(label);
    const int n = static_cast<int>(labels.size());

    std::set<Face> faces;
    faces.insert(Face{});
    std::vector<int> chosen;
    std::function<void(int)> walk = [&](int from) {
        if (!chosen.empty()) {
            Rational xmin, xmax, ymin, ymax;
            bool first = true;
            for (int v : chosen) {
                const auto& [x, y] = p.points.at(labels[static_cast<std::size_t>(v)]);
                if (first || x < xmin) xmin = x;
                if (first || x > xmax) xmax = x;
                if (first || y < ymin) ymin = y;
                if (first || y > ymax) ymax = y;
                first = false;
            }
            for (const auto& [label, xy] : p.points) {
                if (xmin < xy.first && xy.first < xmax && ymin < xy.second &&
                    xy.second < ymax) {
                    // A point interior to the bounding box also blocks every
                    // superset's box, so the whole branch dies here.
                    return;
                }
            }
            Face f;
            for (int v : chosen) f.push_back(labels[static_cast<std::size_t>(v)]);
            faces.insert(std::move(f));
        }
        if (chosen.size() == 4) return; // faces of a 4-representation have <= 4 vertices
        for (int v = from; v < n; ++v) {
            chosen.push_back(v);
            walk(v + 1);
            chosen.pop_back();
        }
    };
    walk(0);
    return SimplicialComplex::from_faces(labels, std::move(faces));
}

Representation four_order_representation(const PlanarPointSet& p) {
    std::vector<VertexId> by_x, by_y;
    for (const auto& [label, xy] : p.points) {
        by_x.push_back(label);
        by_y.push_back(label);
    }
    std::sort(by_x.begin(), by_x.end(), [&](const VertexId& a, const VertexId& b) {
        return p.points.at(a).first < p.points.at(b).first;
    });
    std::sort(by_y.begin(), by_y.end(), [&](const VertexId& a, const VertexId& b) {
        return p.points.at(a).second < p.points.at(b).second;
    });
    std::vector<VertexId> by_x_rev(by_x.rbegin(), by_x.rend());
    std::vector<VertexId> by_y_rev(by_y.rbegin(), by_y.rend());
    return Representation({by_x, by_x_rev, by_y, by_y_rev});
}

PointConfiguration rdel_realize(const PlanarPointSet& p) {
    const Representation r = four_order_representation(p);
    auto q = realize(r);
    if (!q)
        throw InternalError(
            "a four-order representation with reversed pairs must be feasible");
    if (!(tdd(*q) == rdelaunay(p)))
        throw InternalError("realized point set does not reproduce the rectangular "
                            "Delaunay complex");
    return *q;
}

} // namespace tddel
