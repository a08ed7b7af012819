#pragma once

#include "tddel/complex.hpp"
#include "tddel/represent.hpp"
#include "tddel/tdsystem.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace tddel {

// The 4-representation on {a..h} whose sigma has Dushnik-Miller dimension 4
// but is not a TD-Delaunay complex.
Representation counterexample_representation();

// The restricted family of candidate representations for a complex shaped
// like the counterexample: 4 maxima placed on top of the 4 orders in every
// assignment, the three remaining maxima permuted freely at the bottom of
// each order, and the four middle elements in deduced positions.
//
// The middle deduction is constraint propagation: each face of delta must be
// dominated by every element, the bottom of every order consists of the
// other maxima, and whenever only a single order can host a required
// domination the implied middle-element comparisons are recorded until each
// order's middle is totally ordered.
struct CandidateFamily {
    std::vector<VertexId> maxima;  // sorted, size 4
    std::vector<VertexId> middles; // sorted, size 4
    // Per maximum (aligned with `maxima`): its order's middle, ascending.
    std::array<std::vector<VertexId>, 4> deduced_middle;
};

CandidateFamily deduce_family(const SimplicialComplex& delta);

// Number of raw candidates: 4! maxima assignments x (3!)^4 bottom
// arrangements, times 4!^4 middle arrangements in exhaustive mode.
std::uint64_t family_size(bool exhaustive);

// Candidate with the given id; ids are stable and independent of threading.
Representation build_candidate(const CandidateFamily& family, std::uint64_t id,
                               bool exhaustive);

// Streams the candidates whose sigma equals delta, in id order.  The callback
// may return false to stop.  This is the serial reference path; the sweep
// below reaches the same verdicts through a bitmask kernel.
void enumerate_candidates(const SimplicialComplex& delta,
                          const std::function<bool(std::uint64_t, const Representation&)>& yield);

// Fast screening: does sigma(candidate id) equal delta?  Shares its verdicts
// with the reference path bit for bit; compared in tests and benchmarked.
class CandidateScreen {
public:
    CandidateScreen(const SimplicialComplex& delta, const CandidateFamily& family,
                    bool exhaustive);

    bool matches(std::uint64_t id) const;

    // All matching ids, OpenMP-parallel over the id space; deterministic.
    std::vector<std::uint64_t> matching_ids() const;

private:
    bool exhaustive_;
    std::array<std::array<std::uint8_t, 8>, 4> base_rank_{}; // role-major template
    std::array<std::array<std::uint8_t, 3>, 4> bottom_slots_{};
    std::array<std::uint8_t, 4> maxima_idx_{};
    std::array<std::uint8_t, 4> middles_idx_{};
    std::array<bool, 256> in_delta_{};
    std::vector<std::uint16_t> check_masks_; // discriminating subsets first
};

// The pinned certificate: one unit of flow on two disjoint middle arcs per
// order, chosen by the order's maximum.  Valid for every candidate whose
// middles are in the deduced arrangement.
MultiFlow pinned_certificate(const CandidateFamily& family, const Representation& candidate);

struct CandidateVerdict {
    std::uint64_t id = 0;
    std::vector<std::vector<VertexId>> orders;
    MultiFlow certificate;          // found independently by the LP
    bool certificate_ok = false;    // re-verified
    bool pinned_certificate_ok = false;
};

struct CounterexampleReport {
    SimplicialComplex delta;
    bool exhaustive = false;
    std::uint64_t candidates_total = 0;
    std::uint64_t candidates_matching = 0;
    bool all_infeasible = false;        // every matching candidate certified
    bool pinned_all_ok = false;         // pinned certificate valid everywhere
    std::vector<CandidateVerdict> verdicts;
};

struct SweepOptions {
    bool exhaustive = false;
    // Screen via the serial reference path instead of the kernel (slow;
    // used for cross-checking).
    bool reference_screen = false;
};

// Full reproduction of the counterexample: builds delta from the pinned
// representation, sweeps the candidate family, and certifies every matching
// candidate as infeasible twice (independent LP + pinned certificate).
// Throws InternalError if any candidate turns out feasible.
CounterexampleReport verify_counterexample(const SweepOptions& options = {});

// Worker pool size: TDDEL_THREADS when set (clamped to the hardware),
// otherwise the OpenMP default.
int worker_count();

} // namespace tddel
