#include "tddel/complex.hpp"

#include "tddel/errors.hpp"

#include <algorithm>

namespace tddel {

Face make_face(std::vector<VertexId> vertices) {
    for (const auto& v : vertices)
        if (v.empty()) throw InputError("empty vertex label in face");
    std::sort(vertices.begin(), vertices.end());
    const auto dup = std::adjacent_find(vertices.begin(), vertices.end());
    if (dup != vertices.end())
        throw InputError("duplicate vertex '" + *dup + "' in face");
    return vertices;
}

bool is_subface(const Face& part, const Face& whole) {
    return std::includes(whole.begin(), whole.end(), part.begin(), part.end());
}

SimplicialComplex::SimplicialComplex() { faces_.insert(Face{}); }

namespace {

std::vector<VertexId> sorted_unique_vertices(std::vector<VertexId> vertices) {
    for (const auto& v : vertices)
        if (v.empty()) throw InputError("empty vertex label");
    std::sort(vertices.begin(), vertices.end());
    const auto dup = std::adjacent_find(vertices.begin(), vertices.end());
    if (dup != vertices.end())
        throw InputError("duplicate vertex label '" + *dup + "'");
    return vertices;
}

} // namespace

SimplicialComplex SimplicialComplex::close_downward(std::vector<VertexId> vertices,
                                                    const std::vector<Face>& facets) {
    SimplicialComplex c;
    c.vertices_ = sorted_unique_vertices(std::move(vertices));
    for (const Face& raw : facets) {
        const Face facet = make_face(raw);
        for (const auto& v : facet)
            if (!std::binary_search(c.vertices_.begin(), c.vertices_.end(), v))
                throw InputError("facet vertex '" + v + "' not in the declared vertex set");
        // Every subset of the facet, by bitmask over its members.
        const std::size_t k = facet.size();
        for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
            Face sub;
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (std::size_t{1} << i)) sub.push_back(facet[i]);
            c.faces_.insert(std::move(sub));
        }
    }
    c.faces_.insert(Face{});
    return c;
}

SimplicialComplex SimplicialComplex::close_downward(const std::vector<Face>& facets) {
    std::set<VertexId> all;
    for (const Face& f : facets) all.insert(f.begin(), f.end());
    return close_downward(std::vector<VertexId>(all.begin(), all.end()), facets);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<VertexId> vertices,
                                                std::set<Face> faces) {
    SimplicialComplex c;
    c.vertices_ = sorted_unique_vertices(std::move(vertices));
    faces.insert(Face{});
    for (const Face& f : faces) {
        if (!is_subface(f, c.vertices_))
            throw InternalError("face mentions a vertex outside the complex");
        // Removing any single vertex must stay inside the family; by
        // induction this checks full downward closure.
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face sub;
            sub.reserve(f.size() - 1);
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != i) sub.push_back(f[j]);
            if (!faces.count(sub))
                throw InternalError("face family is not downward closed");
        }
    }
    c.faces_ = std::move(faces);
    return c;
}

std::set<Face> SimplicialComplex::facets() const {
    std::set<Face> result;
    for (const Face& f : faces_) {
        bool maximal = true;
        for (const VertexId& v : vertices_) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            Face extended = f;
            extended.insert(std::upper_bound(extended.begin(), extended.end(), v), v);
            if (faces_.count(extended)) {
                maximal = false;
                break;
            }
        }
        if (maximal) result.insert(f);
    }
    return result;
}

std::vector<Face> SimplicialComplex::k_faces(int k) const {
    if (k < -1) throw InputError("k_faces requires k >= -1");
    const std::size_t card = static_cast<std::size_t>(k + 1);
    std::vector<Face> result;
    for (const Face& f : faces_)
        if (f.size() == card) result.push_back(f);
    return result;
}

} // namespace tddel
