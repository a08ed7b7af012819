#pragma once

#include "tddel/complex.hpp"
#include "tddel/geom.hpp"
#include "tddel/rational.hpp"
#include "tddel/represent.hpp"

#include <map>
#include <utility>

namespace tddel {

// Planar points for rectangular Delaunay complexes.  No two points may
// share an x- or a y-coordinate.
struct PlanarPointSet {
    std::map<VertexId, std::pair<Rational, Rational>> points;

    static PlanarPointSet create(std::map<VertexId, std::pair<Rational, Rational>> points);
};

// The rectangular Delaunay complex: F is a face iff some axis-parallel
// rectangle contains exactly F with none of the points in its interior.
// Testing the tight bounding rectangle of F suffices: any witnessing
// rectangle shrinks onto it, and coordinate-distinctness puts no stray
// point on its boundary.
SimplicialComplex rdelaunay(const PlanarPointSet& p);

// The 4-representation (x ascending, x descending, y ascending,
// y descending) whose sigma equals the rectangular Delaunay complex.
Representation four_order_representation(const PlanarPointSet& p);

// Realizes the rectangular Delaunay complex as a TD-Delaunay point set in
// H_4: the four-order representation is always feasible (two mutually
// reversed order pairs leave no room for a non-zero multi-flow).
PointConfiguration rdel_realize(const PlanarPointSet& p);

} // namespace tddel
