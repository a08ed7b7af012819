#pragma once

#include <set>
#include <string>
#include <vector>

namespace tddel {

using VertexId = std::string;

// A face is a sorted, duplicate-free list of vertex labels.  Sorted storage
// makes equality, hashing and subset tests canonical.
using Face = std::vector<VertexId>;

// Sorts the given labels into a canonical face.  Throws InputError on a
// duplicate vertex or an empty label.
Face make_face(std::vector<VertexId> vertices);

// Subset test on canonical faces.
bool is_subface(const Face& part, const Face& whole);

// An abstract simplicial complex: a downward-closed family of subsets of a
// declared vertex set.  The empty face is always present.  Faces are stored
// explicitly; the complexes handled here are tiny.
class SimplicialComplex {
public:
    // The complex over no vertices whose only face is the empty face.
    SimplicialComplex();

    // All subsets of the given facets, plus the empty face.
    static SimplicialComplex close_downward(std::vector<VertexId> vertices,
                                            const std::vector<Face>& facets);

    // Same, with the vertex set taken to be the union of the facets.
    static SimplicialComplex close_downward(const std::vector<Face>& facets);

    // Adopts an explicit face family.  Throws InternalError if the family is
    // not downward closed or mentions unknown vertices; used by generators
    // whose output is downward closed by theorem.
    static SimplicialComplex from_faces(std::vector<VertexId> vertices,
                                        std::set<Face> faces);

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::set<Face>& faces() const { return faces_; }

    bool contains(const Face& face) const { return faces_.count(face) != 0; }

    // Inclusion-maximal faces.  For the complex with no nonempty face this
    // is {[]}: the empty face is maximal only there.
    std::set<Face> facets() const;

    // Faces of cardinality k+1; k = -1 yields the empty face.
    std::vector<Face> k_faces(int k) const;

    // Number of faces including the empty one.
    std::size_t size() const { return faces_.size(); }

    bool operator==(const SimplicialComplex&) const = default;

private:
    std::vector<VertexId> vertices_; // sorted, unique
    std::set<Face> faces_;           // downward closed, contains {}
};

} // namespace tddel
