#include "tddel/witness.hpp"

#include "tddel/errors.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <set>

namespace tddel {

Representation counterexample_representation() {
    return Representation({
        {"b", "c", "d", "e", "g", "f", "h", "a"},
        {"a", "c", "d", "e", "h", "f", "g", "b"},
        {"a", "b", "d", "f", "g", "e", "h", "c"},
        {"a", "b", "c", "f", "h", "e", "g", "d"},
    });
}

namespace {

constexpr std::uint64_t kAssignments = 24;      // 4! maxima-to-order assignments
constexpr std::uint64_t kBottoms = 6 * 6 * 6 * 6; // (3!)^4 bottom arrangements
constexpr std::uint64_t kDeducedFamily = kAssignments * kBottoms;
constexpr std::uint64_t kMiddleArrangements = 24ULL * 24 * 24 * 24; // 4!^4

// Lexicographic permutation of `items` with the given index (factorial
// number system).
template <std::size_t K>
std::array<std::uint8_t, K> nth_permutation(std::array<std::uint8_t, K> items,
                                            unsigned index) {
    std::array<unsigned, K + 1> factorial{};
    factorial[0] = 1;
    for (std::size_t i = 1; i <= K; ++i)
        factorial[i] = factorial[i - 1] * static_cast<unsigned>(i);

    std::array<std::uint8_t, K> out{};
    std::size_t remaining = K;
    for (std::size_t pos = 0; pos < K; ++pos) {
        const unsigned divisor = factorial[remaining - 1];
        const unsigned pick = index / divisor;
        index %= divisor;
        out[pos] = items[pick];
        for (std::size_t i = pick; i + 1 < remaining; ++i) items[i] = items[i + 1];
        --remaining;
    }
    return out;
}

struct DecodedCandidate {
    // All entries are role indices into family.maxima / family.middles.
    std::array<std::uint8_t, 4> max_role{};             // per order slot
    std::array<std::array<std::uint8_t, 3>, 4> bottom{}; // roles of bottom maxima
    std::array<std::array<std::uint8_t, 4>, 4> middle{}; // middle element indices
};

DecodedCandidate decode_id(const CandidateFamily& family, std::uint64_t id,
                           bool exhaustive) {
    const std::uint64_t limit = exhaustive ? kDeducedFamily * kMiddleArrangements
                                           : kDeducedFamily;
    if (id >= limit) throw InputError("candidate id out of range");

    std::array<unsigned, 4> mid_digits{};
    if (exhaustive) {
        std::uint64_t m = id / kDeducedFamily;
        id %= kDeducedFamily;
        for (int s = 3; s >= 0; --s) {
            mid_digits[static_cast<std::size_t>(s)] = static_cast<unsigned>(m % 24);
            m /= 24;
        }
    }
    const auto a_idx = static_cast<unsigned>(id / kBottoms);
    std::uint64_t b = id % kBottoms;
    std::array<unsigned, 4> bottom_digits{};
    for (int s = 3; s >= 0; --s) {
        bottom_digits[static_cast<std::size_t>(s)] = static_cast<unsigned>(b % 6);
        b /= 6;
    }

    DecodedCandidate c;
    c.max_role = nth_permutation<4>({0, 1, 2, 3}, a_idx);
    for (std::size_t s = 0; s < 4; ++s) {
        const std::uint8_t role = c.max_role[s];
        std::array<std::uint8_t, 3> others{};
        std::size_t k = 0;
        for (std::uint8_t r = 0; r < 4; ++r)
            if (r != role) others[k++] = r;
        c.bottom[s] = nth_permutation<3>(others, bottom_digits[s]);
        if (exhaustive) {
            c.middle[s] = nth_permutation<4>({0, 1, 2, 3}, mid_digits[s]);
        } else {
            // Deduced arrangement for this role, as middle indices.
            for (std::size_t pos = 0; pos < 4; ++pos) {
                const VertexId& label = family.deduced_middle[role][pos];
                const auto it = std::lower_bound(family.middles.begin(),
                                                 family.middles.end(), label);
                c.middle[s][pos] =
                    static_cast<std::uint8_t>(it - family.middles.begin());
            }
        }
    }
    return c;
}

} // namespace

std::uint64_t family_size(bool exhaustive) {
    return exhaustive ? kDeducedFamily * kMiddleArrangements : kDeducedFamily;
}

CandidateFamily deduce_family(const SimplicialComplex& delta) {
    const auto maxima = standardness_from_complex(delta, 4);
    if (!maxima)
        throw InputError("the complex does not have the standard shape of a "
                         "4-representation's sigma");
    if (delta.vertices().size() != 8)
        throw InputError("the candidate family is defined for 8-vertex complexes");

    CandidateFamily family;
    family.maxima = *maxima;
    for (const auto& v : delta.vertices())
        if (!std::binary_search(family.maxima.begin(), family.maxima.end(), v))
            family.middles.push_back(v);

    const auto mid_index = [&](const VertexId& v) -> int {
        const auto it = std::lower_bound(family.middles.begin(), family.middles.end(), v);
        if (it == family.middles.end() || *it != v) return -1;
        return static_cast<int>(it - family.middles.begin());
    };
    const auto max_index = [&](const VertexId& v) -> int {
        const auto it = std::lower_bound(family.maxima.begin(), family.maxima.end(), v);
        if (it == family.maxima.end() || *it != v) return -1;
        return static_cast<int>(it - family.maxima.begin());
    };

    // below[r][i][j]: middle i is below middle j in the order whose maximum
    // is maxima[r], in every candidate with sigma == delta.
    bool below[4][4][4] = {};
    const auto add_fact = [&](int r, int lo, int hi) {
        if (below[r][hi][lo])
            throw InternalError("contradictory middle deduction");
        if (below[r][lo][hi]) return false;
        below[r][lo][hi] = true;
        return true;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        for (const Face& face : delta.faces()) {
            if (face.empty()) continue;
            // Which maxima does the face contain, and which middles.
            bool has_max[4] = {};
            std::vector<int> face_mids;
            for (const auto& v : face) {
                const int m = max_index(v);
                if (m >= 0) has_max[m] = true;
                else face_mids.push_back(mid_index(v));
            }
            if (face_mids.empty()) continue;
            for (int v = 0; v < 4; ++v) {
                // The middle element v must dominate the face in some order.
                int candidate_role = -1;
                int candidates = 0;
                for (int r = 0; r < 4; ++r) {
                    if (has_max[r]) continue; // the order's own maximum tops v
                    bool blocked = false;
                    for (int g : face_mids)
                        if (g != v && below[r][v][g]) { blocked = true; break; }
                    if (!blocked) {
                        candidate_role = r;
                        ++candidates;
                    }
                }
                if (candidates == 0)
                    throw InternalError("no order can host a required domination");
                if (candidates == 1) {
                    for (int g : face_mids)
                        if (g != v && add_fact(candidate_role, g, v)) changed = true;
                }
            }
        }
        // Transitive closure.
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k)
                for (int i = 0; i < 4; ++i)
                    for (int j = 0; j < 4; ++j)
                        if (below[r][i][k] && below[r][k][j] && i != j &&
                            !below[r][i][j]) {
                            if (below[r][j][i])
                                throw InternalError("contradictory middle deduction");
                            below[r][i][j] = true;
                            changed = true;
                        }
    }

    for (int r = 0; r < 4; ++r) {
        std::array<int, 4> above_count{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (below[r][i][j]) ++above_count[static_cast<std::size_t>(i)];
        std::array<bool, 4> seen{};
        auto& sequence = family.deduced_middle[static_cast<std::size_t>(r)];
        sequence.resize(4);
        for (int i = 0; i < 4; ++i) {
            // above_count 3 means smallest, 0 means largest.
            const int pos = 3 - above_count[static_cast<std::size_t>(i)];
            if (pos < 0 || pos > 3 || seen[static_cast<std::size_t>(pos)])
                throw InternalError("middle deduction did not yield a total order");
            seen[static_cast<std::size_t>(pos)] = true;
            sequence[static_cast<std::size_t>(pos)] =
                family.middles[static_cast<std::size_t>(i)];
        }
    }
    return family;
}

Representation build_candidate(const CandidateFamily& family, std::uint64_t id,
                               bool exhaustive) {
    const DecodedCandidate c = decode_id(family, id, exhaustive);
    std::vector<std::vector<VertexId>> orders;
    for (std::size_t s = 0; s < 4; ++s) {
        std::vector<VertexId> order;
        order.reserve(8);
        for (const std::uint8_t r : c.bottom[s])
            order.push_back(family.maxima[r]);
        for (const std::uint8_t m : c.middle[s])
            order.push_back(family.middles[m]);
        order.push_back(family.maxima[c.max_role[s]]);
        orders.push_back(std::move(order));
    }
    return Representation(std::move(orders));
}

void enumerate_candidates(
    const SimplicialComplex& delta,
    const std::function<bool(std::uint64_t, const Representation&)>& yield) {
    const CandidateFamily family = deduce_family(delta);
    for (std::uint64_t id = 0; id < kDeducedFamily; ++id) {
        Representation candidate = build_candidate(family, id, false);
        if (sigma(candidate) == delta) {
            if (!yield(id, candidate)) return;
        }
    }
}

CandidateScreen::CandidateScreen(const SimplicialComplex& delta,
                                 const CandidateFamily& family, bool exhaustive)
    : exhaustive_(exhaustive) {
    const auto& vertices = delta.vertices();
    if (vertices.size() != 8)
        throw InputError("the candidate screen expects 8 vertices");
    const auto vertex_bit = [&](const VertexId& v) {
        const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        return static_cast<unsigned>(it - vertices.begin());
    };

    for (const Face& f : delta.faces()) {
        if (f.size() > 4)
            throw InputError("the complex has a face of more than 4 vertices");
        unsigned mask = 0;
        for (const auto& v : f) mask |= 1u << vertex_bit(v);
        in_delta_[mask] = true;
    }

    for (std::size_t i = 0; i < 4; ++i) {
        maxima_idx_[i] = static_cast<std::uint8_t>(vertex_bit(family.maxima[i]));
        middles_idx_[i] = static_cast<std::uint8_t>(vertex_bit(family.middles[i]));
    }
    for (std::size_t r = 0; r < 4; ++r) {
        std::size_t k = 0;
        for (std::size_t o = 0; o < 4; ++o)
            if (o != r) bottom_slots_[r][k++] = maxima_idx_[o];
    }
    // base_rank_[role][vertex] for the deduced arrangement of that role.
    for (std::size_t r = 0; r < 4; ++r) {
        auto& rank = base_rank_[r];
        for (std::size_t pos = 0; pos < 3; ++pos) rank[bottom_slots_[r][pos]] =
            static_cast<std::uint8_t>(pos);
        for (std::size_t pos = 0; pos < 4; ++pos)
            rank[vertex_bit(family.deduced_middle[r][pos])] =
                static_cast<std::uint8_t>(3 + pos);
        rank[maxima_idx_[r]] = 7;
    }

    // Check masks: most discriminating first.  Wrong middles die fastest on
    // faces made of three maxima plus one middle, then on middle pairs.
    unsigned maxima_mask = 0, middle_mask = 0;
    for (const auto i : maxima_idx_) maxima_mask |= 1u << i;
    for (const auto i : middles_idx_) middle_mask |= 1u << i;
    std::vector<std::uint16_t> masks;
    for (unsigned mask = 1; mask < 256; ++mask)
        if (std::popcount(mask) <= 4) masks.push_back(static_cast<std::uint16_t>(mask));
    const auto priority = [&](unsigned mask) {
        const int mids = std::popcount(mask & middle_mask);
        const int maxs = std::popcount(mask & maxima_mask);
        if (maxs == 3 && mids == 1) return 0;
        if (mids >= 2) return 1;
        return 2;
    };
    std::stable_sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
        return priority(a) < priority(b);
    });
    check_masks_ = std::move(masks);
}

bool CandidateScreen::matches(std::uint64_t id) const {
    const std::uint64_t limit = family_size(exhaustive_);
    if (id >= limit) throw InputError("candidate id out of range");

    std::array<unsigned, 4> mid_digits{};
    std::uint64_t rest = id;
    if (exhaustive_) {
        std::uint64_t m = rest / kDeducedFamily;
        rest %= kDeducedFamily;
        for (int s = 3; s >= 0; --s) {
            mid_digits[static_cast<std::size_t>(s)] = static_cast<unsigned>(m % 24);
            m /= 24;
        }
    }
    const auto a_idx = static_cast<unsigned>(rest / kBottoms);
    std::uint64_t b = rest % kBottoms;
    std::array<unsigned, 4> bottom_digits{};
    for (int s = 3; s >= 0; --s) {
        bottom_digits[static_cast<std::size_t>(s)] = static_cast<unsigned>(b % 6);
        b /= 6;
    }
    const auto roles = nth_permutation<4>({0, 1, 2, 3}, a_idx);

    // rank[slot][vertex] and the per-slot suffix masks above[slot][rank].
    std::array<std::array<std::uint8_t, 8>, 4> rank{};
    for (std::size_t s = 0; s < 4; ++s) {
        const std::uint8_t role = roles[s];
        rank[s] = base_rank_[role];
        const auto bottom = nth_permutation<3>(bottom_slots_[role], bottom_digits[s]);
        for (std::size_t pos = 0; pos < 3; ++pos)
            rank[s][bottom[pos]] = static_cast<std::uint8_t>(pos);
        if (exhaustive_) {
            const auto middle = nth_permutation<4>(middles_idx_, mid_digits[s]);
            for (std::size_t pos = 0; pos < 4; ++pos)
                rank[s][middle[pos]] = static_cast<std::uint8_t>(3 + pos);
        }
    }
    std::array<std::array<std::uint8_t, 9>, 4> above{};
    for (std::size_t s = 0; s < 4; ++s) {
        std::array<std::uint8_t, 8> vertex_at{};
        for (std::uint8_t v = 0; v < 8; ++v) vertex_at[rank[s][v]] = v;
        above[s][8] = 0;
        for (int p = 7; p >= 0; --p)
            above[s][static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(
                above[s][static_cast<std::size_t>(p + 1)] |
                (1u << vertex_at[static_cast<std::size_t>(p)]));
    }

    for (const unsigned mask : check_masks_) {
        unsigned dominators = 0;
        for (std::size_t s = 0; s < 4; ++s) {
            int maxrank = 0;
            unsigned bits = mask;
            while (bits) {
                const int v = std::countr_zero(bits);
                bits &= bits - 1;
                const int rk = rank[s][static_cast<std::size_t>(v)];
                if (rk > maxrank) maxrank = rk;
            }
            dominators |= above[s][static_cast<std::size_t>(maxrank)];
        }
        if ((dominators == 0xFFu) != in_delta_[mask]) return false;
    }
    return true;
}

std::vector<std::uint64_t> CandidateScreen::matching_ids() const {
    const auto total = static_cast<long long>(family_size(exhaustive_));
    std::vector<std::uint64_t> out;
#pragma omp parallel num_threads(worker_count())
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(static)
        for (long long id = 0; id < total; ++id)
            if (matches(static_cast<std::uint64_t>(id)))
                local.push_back(static_cast<std::uint64_t>(id));
#pragma omp critical
        out.insert(out.end(), local.begin(), local.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

MultiFlow pinned_certificate(const CandidateFamily& family,
                             const Representation& candidate) {
    MultiFlow m;
    m.d = 4;
    for (int s = 0; s < 4; ++s) {
        const VertexId& top = candidate.order(s).back();
        const auto it = std::lower_bound(family.maxima.begin(), family.maxima.end(), top);
        if (it == family.maxima.end() || *it != top)
            throw InputError("candidate order does not end in a maximum");
        const auto role = static_cast<std::size_t>(it - family.maxima.begin());
        const auto& mid = family.deduced_middle[role];
        // One unit along each consecutive pair of the deduced middle; the
        // two tails and two heads are the same across all four roles, so the
        // divergences agree between the flows.
        m.flow[{s, mid[0], mid[1]}] = 1;
        m.flow[{s, mid[2], mid[3]}] = 1;
    }
    return m;
}

int worker_count() {
    const char* env = std::getenv("TDDEL_THREADS");
    const int hardware = omp_get_max_threads();
    if (env) {
        const int requested = std::atoi(env);
        if (requested >= 1) return std::min(requested, hardware);
    }
    return hardware;
}

CounterexampleReport verify_counterexample(const SweepOptions& options) {
    CounterexampleReport report;
    report.delta = sigma(counterexample_representation());
    report.exhaustive = options.exhaustive;
    report.candidates_total = family_size(options.exhaustive);

    const CandidateFamily family = deduce_family(report.delta);

    std::vector<std::uint64_t> ids;
    if (options.reference_screen) {
        if (options.exhaustive)
            throw InputError("reference screening is only available for the deduced family");
        enumerate_candidates(report.delta, [&](std::uint64_t id, const Representation&) {
            ids.push_back(id);
            return true;
        });
    } else {
        ids = CandidateScreen(report.delta, family, options.exhaustive).matching_ids();
    }
    report.candidates_matching = ids.size();
    report.verdicts.resize(ids.size());

    std::atomic<bool> any_feasible{false};
    std::atomic<bool> failed{false};
    std::string failure;
    const auto count = static_cast<long long>(ids.size());
    // Exceptions must not unwind through the parallel region.
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
    for (long long i = 0; i < count; ++i) {
        if (failed) continue;
        try {
            const std::uint64_t id = ids[static_cast<std::size_t>(i)];
            const Representation candidate =
                build_candidate(family, id, options.exhaustive);
            CandidateVerdict verdict;
            verdict.id = id;
            verdict.orders = candidate.orders();
            auto certificate = find_multiflow(candidate);
            if (!certificate) {
                any_feasible = true;
            } else {
                verdict.certificate = std::move(*certificate);
                verdict.certificate_ok =
                    verify_multiflow(candidate, verdict.certificate).certifies();
                verdict.pinned_certificate_ok =
                    verify_multiflow(candidate, pinned_certificate(family, candidate))
                        .certifies();
            }
            report.verdicts[static_cast<std::size_t>(i)] = std::move(verdict);
        } catch (const std::exception& e) {
            if (!failed.exchange(true)) failure = e.what();
        }
    }
    if (failed) throw InternalError("candidate sweep failed: " + failure);

    if (any_feasible)
        throw InternalError("a candidate representation admits a TD-Delaunay "
                            "solution; this contradicts the counterexample");
    report.all_infeasible =
        !report.verdicts.empty() &&
        std::all_of(report.verdicts.begin(), report.verdicts.end(),
                    [](const CandidateVerdict& v) { return v.certificate_ok; });
    report.pinned_all_ok =
        std::all_of(report.verdicts.begin(), report.verdicts.end(),
                    [](const CandidateVerdict& v) { return v.pinned_certificate_ok; });
    return report;
}

} // namespace tddel
