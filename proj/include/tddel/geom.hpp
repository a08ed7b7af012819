#pragma once

#include "tddel/complex.hpp"
#include "tddel/rational.hpp"
#include "tddel/represent.hpp"

#include <map>
#include <vector>

namespace tddel {

// Labeled points with exact rational coordinates on the hyperplane H_d
// where coordinates sum to 1.
struct PointConfiguration {
    int d = 0;
    std::map<VertexId, std::vector<Rational>> points;

    // Validates d >= 2, coordinate counts, and membership in H_d.
    static PointConfiguration create(int d, std::map<VertexId, std::vector<Rational>> points);
};

// The corner c of a regular simplex S_c = { u in H_d : u_i <= c_i }.
struct SimplexCorner {
    std::vector<Rational> coords;
};

// No two points share any coordinate value.
bool in_general_position(const PointConfiguration& p);

// Componentwise maximum over a nonempty face; the smallest regular simplex
// containing it.  Its coordinate sum is always >= 1.
SimplexCorner corner_of(const PointConfiguration& p, const Face& face);

// The TD-Delaunay complex: F is a face iff the interior of the corner
// simplex of F contains no point.  Requires general position.
SimplicialComplex tdd(const PointConfiguration& p);

// The d coordinate orders of the point set, as a d-representation.
Representation representation_of(const PointConfiguration& p);

// A positive regular simplex as a homothety of the canonical simplex:
// S_c is the image of S_1 under u -> alpha*u + (1-alpha)*omega.
struct Homothety {
    Rational alpha;
    std::vector<Rational> omega;
};

// Requires sum(c) >= 1.  When alpha == 1 the homothety is the identity and
// the center is reported as the barycenter (1/d, ..., 1/d).
Homothety homothety_decompose(const SimplexCorner& c);

} // namespace tddel
