#pragma once

#include "tddel/complex.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tddel {

// d linear orders over a common element set.  Orders are kept both as
// ascending element lists and as rank tables, so comparisons are O(1).
// Immutable after construction.
class Representation {
public:
    // Each order is listed in increasing direction and must be a permutation
    // of the same nonempty element set.
    explicit Representation(std::vector<std::vector<VertexId>> orders);

    int d() const { return static_cast<int>(orders_.size()); }
    const std::vector<VertexId>& elements() const { return elements_; }
    const std::vector<std::vector<VertexId>>& orders() const { return orders_; }
    const std::vector<VertexId>& order(int i) const { return orders_.at(i); }

    // Index of a label in the sorted element list; throws InputError on an
    // unknown label.
    int element_index(const VertexId& v) const;

    // 0-based position of v in order i (0 = smallest).
    int rank(int i, const VertexId& v) const { return ranks_.at(i)[element_index(v)]; }
    int rank_by_index(int i, int element_idx) const { return ranks_[i][element_idx]; }

    // x <=_i y
    bool leq(int i, const VertexId& x, const VertexId& y) const {
        return rank(i, x) <= rank(i, y);
    }

    // Maximum of a nonempty face in order i.
    const VertexId& max_of(int i, const Face& face) const;

    bool operator==(const Representation&) const = default;

private:
    std::vector<std::vector<VertexId>> orders_;
    std::vector<VertexId> elements_;        // sorted
    std::map<VertexId, int> index_;
    std::vector<std::vector<int>> ranks_;   // ranks_[order][element index]
};

// x dominates F: some order places every member of F at or below x.
// The empty face is dominated by convention.
bool dominates(const Representation& r, const VertexId& x, const Face& face);

// The complex of all subsets F (|F| <= d) dominated by every element.
SimplicialComplex sigma(const Representation& r);

// Whether {x} is a face of sigma(r).
bool is_vertex(const Representation& r, const VertexId& x);

// Edges of sigma(r), i.e. its 1-skeleton.
std::vector<Face> sigma_edges(const Representation& r);

// Transposes x and y in order i.  Requires: x and y are vertices of
// sigma(r), {x,y} is not a face, and they are consecutive in order i.
// The resulting representation has the same sigma.
Representation swap_consecutive(const Representation& r, int i,
                                const VertexId& x, const VertexId& y);

// Whether the 1-skeleton of sigma(r) has a weakly (<=_i)-increasing path
// from x to y; x == y counts as the length-0 path.
bool increasing_path_exists(const Representation& r, int i,
                            const VertexId& x, const VertexId& y);

// For a face F and a vertex x: every order i admitting an increasing path
// from max_i(F) to x, with one such path each.  At least one order is
// guaranteed.  Throws InputError if F is empty or not a face.
std::map<int, std::vector<VertexId>> certify_face_paths(const Representation& r,
                                                        const Face& face,
                                                        const VertexId& x);

// Witness that F is not a face: a vertex x failing domination in every
// order, together with an increasing path from x into F per order.
struct NonfaceCertificate {
    VertexId witness;
    // order -> (reached member of F, the path from witness to it)
    std::map<int, std::pair<VertexId, std::vector<VertexId>>> paths;
};
NonfaceCertificate certify_nonface(const Representation& r, const Face& face);

struct StandardnessReport {
    bool is_standard = false;
    // Maxima of the d orders, in order index, when standard.
    std::optional<std::vector<VertexId>> maxima;
};

// A representation is standard when every element is a vertex of sigma(r)
// and each order's maximum sits among the d-1 smallest elements of every
// other order.  Requires at least d elements.
StandardnessReport standardness(const Representation& r);

// Purely combinatorial counterpart on the complex: every facet must be a
// (d-1)-face, and among the (d-2)-faces exactly d may lie in a single
// (d-1)-face, those d being the (d-1)-subsets of one d-element vertex set
// {M_1..M_d}.  Returns the M's sorted, or nullopt.  Declared vertices that
// are not faces disqualify the complex.
std::optional<std::vector<VertexId>> standardness_from_complex(const SimplicialComplex& c,
                                                               int d);

} // namespace tddel
