#pragma once

#include "tddel/complex.hpp"
#include "tddel/geom.hpp"
#include "tddel/rational.hpp"
#include "tddel/represent.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace tddel {

// The strict linear system A x > 0 attached to a representation.  Rows are
// indexed by (edge of sigma(r), order); columns by (vertex, coordinate)
// with coordinates 1..d-1 (the d-th coordinate is eliminated by the H_d
// equation).  Entries are +-1:
//   order i < d:  +1 on the edge's max in order i at coordinate i,
//                 -1 on its min;
//   order d:      +1 on the min in order d at every coordinate,
//                 -1 on the max.
// Rows are sorted by (edge, order) and columns by (vertex, coordinate),
// which pins the serialized form byte-for-byte.  Order and coordinate
// indices are 0-based in memory and 1-based on the wire.
struct TDSystem {
    int d = 0;
    std::vector<VertexId> vertices;               // sorted; column blocks
    std::vector<std::pair<Face, int>> rows;       // (edge, order index)
    std::vector<std::map<int, int>> row_entries;  // per row: column -> +-1

    int num_cols() const { return static_cast<int>(vertices.size()) * (d - 1); }
    int col(int vertex_idx, int coord) const { return vertex_idx * (d - 1) + coord; }
    int vertex_index(const VertexId& v) const;
};

TDSystem build_system(const Representation& r);

// Human-readable strict inequalities, one per row, e.g. "b1 < c1" or
// "c1 + c2 < b1 + b2" (smaller side first).
std::vector<std::string> system_inequalities(const TDSystem& s);

// An exact interior point of { x : A x > 0 }, as a vector aligned with the
// system's columns, or nullopt when the open cone is empty.  Uses the
// homogeneous reduction A x > 0  <=>  exists x with A x >= 1.
std::optional<std::vector<Rational>> solve_strict(const TDSystem& s);

// d nonnegative flows, one per order digraph G^i(r) (arcs are the edges of
// sigma(r) directed upward in order i), with equal divergence at every
// vertex across the d flows.  Stored sparsely: absent arcs carry 0.
struct MultiFlow {
    int d = 0;
    std::map<std::tuple<int, VertexId, VertexId>, Rational> flow; // (order, tail, head)

    bool nonzero() const;
};

// Divergence of vertex v under flow i: inflow minus outflow.
std::map<VertexId, Rational> divergences(const MultiFlow& m, int order);

// A non-zero multi-flow iff one exists: the Farkas dual certificate that
// the TD-Delaunay system is infeasible.  Found by maximizing the total flow
// over { y : tA y = 0, 0 <= y <= 1 }; any positive point certifies.
std::optional<MultiFlow> find_multiflow(const Representation& r);

struct MultiFlowCheck {
    bool structure_ok = false; // arcs exist, values >= 0, divergences agree
    bool nonzero = false;
    std::string detail;        // first violated condition, empty when ok

    // Valid as a certificate of infeasibility.
    bool certifies() const { return structure_ok && nonzero; }
};

MultiFlowCheck verify_multiflow(const Representation& r, const MultiFlow& m);

// Exactly one branch is populated (the two cases of the dichotomy are
// exclusive); whichever is returned has been re-verified.
struct FeasibilityVerdict {
    std::optional<std::map<VertexId, std::vector<Rational>>> solution;
    std::optional<MultiFlow> certificate;

    bool feasible() const { return solution.has_value(); }
};

FeasibilityVerdict decide(const Representation& r);

// Realizes a feasible representation as a general-position point set on
// H_d whose TD-Delaunay complex equals sigma(r): lifts a strict solution to
// H_d and applies a rational perturbation that keeps every inequality
// strict.  Returns nullopt when the system is infeasible.  Requires every
// element to be a vertex of sigma(r) (a TD-Delaunay complex contains the
// singleton of every placed point, so non-vertex elements can never fit).
std::optional<PointConfiguration> realize(const Representation& r);

// --- flow helpers used by the acyclicity argument ---

// Whether the digraph on the given arcs has no directed cycle.
bool is_acyclic(const std::vector<std::pair<VertexId, VertexId>>& arcs);

// A divergence-free nonnegative flow with some positive arc value, found by
// the same bounded LP as find_multiflow, or nullopt if only the zero flow
// conserves divergence.  On an acyclic digraph this is always nullopt.
std::optional<std::map<std::pair<VertexId, VertexId>, Rational>>
nonzero_circulation(const std::vector<std::pair<VertexId, VertexId>>& arcs);

} // namespace tddel
