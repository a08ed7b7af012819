#include "tddel/represent.hpp"

#include "tddel/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace tddel {

Representation::Representation(std::vector<std::vector<VertexId>> orders)
    : orders_(std::move(orders)) {
    if (orders_.empty()) throw InputError("a representation needs at least one order");
    if (orders_[0].empty()) throw InputError("a representation needs at least one element");

    std::set<VertexId> element_set(orders_[0].begin(), orders_[0].end());
    if (element_set.size() != orders_[0].size())
        throw InputError("an order repeats an element");
    elements_.assign(element_set.begin(), element_set.end());
    for (const auto& v : elements_)
        if (v.empty()) throw InputError("empty element label");

    int next = 0;
    for (const auto& v : elements_) index_[v] = next++;

    const std::size_t n = elements_.size();
    for (const auto& ord : orders_) {
        if (ord.size() != n ||
            std::set<VertexId>(ord.begin(), ord.end()) != element_set)
            throw InputError("orders are not permutations of a common element set");
        std::vector<int> rank(n);
        for (std::size_t pos = 0; pos < n; ++pos)
            rank[static_cast<std::size_t>(index_.at(ord[pos]))] = static_cast<int>(pos);
        ranks_.push_back(std::move(rank));
    }
}

int Representation::element_index(const VertexId& v) const {
    const auto it = index_.find(v);
    if (it == index_.end()) throw InputError("unknown element '" + v + "'");
    return it->second;
}

const VertexId& Representation::max_of(int i, const Face& face) const {
    if (face.empty()) throw InputError("the empty face has no maximum");
    const VertexId* best = &face.front();
    for (const auto& v : face)
        if (rank(i, v) > rank(i, *best)) best = &v;
    return *best;
}

bool dominates(const Representation& r, const VertexId& x, const Face& face) {
    const int xi = r.element_index(x);
    if (face.empty()) return true;
    for (int i = 0; i < r.d(); ++i) {
        int maxrank = -1;
        for (const auto& f : face)
            maxrank = std::max(maxrank, r.rank(i, f));
        if (r.rank_by_index(i, xi) >= maxrank) return true;
    }
    return false;
}

namespace {

// Every element must dominate the subset described by per-order max ranks.
bool dominated_by_all(const Representation& r, const std::vector<int>& maxrank) {
    const int n = static_cast<int>(r.elements().size());
    const int d = r.d();
    for (int v = 0; v < n; ++v) {
        bool ok = false;
        for (int i = 0; i < d && !ok; ++i)
            ok = r.rank_by_index(i, v) >= maxrank[static_cast<std::size_t>(i)];
        if (!ok) return false;
    }
    return true;
}

void enumerate_faces(const Representation& r, int max_size,
                     const std::function<void(const std::vector<int>&)>& visit) {
    const int n = static_cast<int>(r.elements().size());
    std::vector<int> chosen;
    // Depth-first over index combinations of size <= max_size.
    std::function<void(int)> walk = [&](int from) {
        visit(chosen);
        if (static_cast<int>(chosen.size()) == max_size) return;
        for (int v = from; v < n; ++v) {
            chosen.push_back(v);
            walk(v + 1);
            chosen.pop_back();
        }
    };
    walk(0);
}

} // namespace

SimplicialComplex sigma(const Representation& r) {
    const int d = r.d();
    std::set<Face> faces;
    std::vector<int> maxrank(static_cast<std::size_t>(d));
    enumerate_faces(r, d, [&](const std::vector<int>& subset) {
        for (int i = 0; i < d; ++i) {
            int m = -1;
            for (int v : subset) m = std::max(m, r.rank_by_index(i, v));
            maxrank[static_cast<std::size_t>(i)] = m;
        }
        // The empty subset has maxrank -1 everywhere and always passes.
        if (!dominated_by_all(r, maxrank)) return;
        Face f;
        f.reserve(subset.size());
        for (int v : subset) f.push_back(r.elements()[static_cast<std::size_t>(v)]);
        faces.insert(std::move(f));
    });
    return SimplicialComplex::from_faces(r.elements(), std::move(faces));
}

bool is_vertex(const Representation& r, const VertexId& x) {
    r.element_index(x);
    // {x} is a face iff every element dominates {x}.
    for (const auto& v : r.elements())
        if (!dominates(r, v, Face{x})) return false;
    return true;
}

std::vector<Face> sigma_edges(const Representation& r) {
    const auto& elems = r.elements();
    const int n = static_cast<int>(elems.size());
    std::vector<Face> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const Face pair{elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]};
            bool all = true;
            for (const auto& v : elems)
                if (!dominates(r, v, pair)) { all = false; break; }
            if (all) edges.push_back(pair);
        }
    }
    return edges;
}

Representation swap_consecutive(const Representation& r, int i,
                                const VertexId& x, const VertexId& y) {
    if (i < 0 || i >= r.d()) throw InputError("order index out of range");
    if (!is_vertex(r, x)) throw InputError("swap_consecutive: '" + x + "' is not a vertex of sigma");
    if (!is_vertex(r, y)) throw InputError("swap_consecutive: '" + y + "' is not a vertex of sigma");
    const Face pair = make_face({x, y});
    bool pair_is_face = true;
    for (const auto& v : r.elements())
        if (!dominates(r, v, pair)) { pair_is_face = false; break; }
    if (pair_is_face)
        throw InputError("swap_consecutive: {" + pair[0] + "," + pair[1] + "} is a face of sigma");
    const int rx = r.rank(i, x);
    const int ry = r.rank(i, y);
    if (rx + 1 != ry && ry + 1 != rx)
        throw InputError("swap_consecutive: '" + x + "' and '" + y + "' are not consecutive in the order");

    auto orders = r.orders();
    auto& ord = orders[static_cast<std::size_t>(i)];
    std::swap(ord[static_cast<std::size_t>(rx)], ord[static_cast<std::size_t>(ry)]);
    return Representation(std::move(orders));
}

namespace {

// Breadth-first search along edges of sigma(r) that ascend order i, from
// `source`.  Returns the predecessor map (element index -> parent index,
// source mapped to itself).
std::vector<int> ascending_reach(const Representation& r, int i, const VertexId& source) {
    const auto edges = sigma_edges(r);
    const int n = static_cast<int>(r.elements().size());
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (const Face& e : edges) {
        const int a = r.element_index(e[0]);
        const int b = r.element_index(e[1]);
        if (r.rank_by_index(i, a) < r.rank_by_index(i, b))
            out[static_cast<std::size_t>(a)].push_back(b);
        else
            out[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    const int s = r.element_index(source);
    parent[static_cast<std::size_t>(s)] = s;
    std::deque<int> queue{s};
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        for (int w : out[static_cast<std::size_t>(u)]) {
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = u;
                queue.push_back(w);
            }
        }
    }
    return parent;
}

std::vector<VertexId> path_from_parents(const Representation& r, const std::vector<int>& parent,
                                        const VertexId& source, const VertexId& target) {
    std::vector<VertexId> path;
    int cur = r.element_index(target);
    const int s = r.element_index(source);
    while (true) {
        path.push_back(r.elements()[static_cast<std::size_t>(cur)]);
        if (cur == s) break;
        cur = parent[static_cast<std::size_t>(cur)];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool face_of_sigma(const Representation& r, const Face& face) {
    for (const auto& v : r.elements())
        if (!dominates(r, v, face)) return false;
    return true;
}

} // namespace

bool increasing_path_exists(const Representation& r, int i,
                            const VertexId& x, const VertexId& y) {
    if (i < 0 || i >= r.d()) throw InputError("order index out of range");
    r.element_index(x);
    r.element_index(y);
    if (x == y) return true;
    const auto parent = ascending_reach(r, i, x);
    return parent[static_cast<std::size_t>(r.element_index(y))] != -1;
}

std::map<int, std::vector<VertexId>> certify_face_paths(const Representation& r,
                                                        const Face& face,
                                                        const VertexId& x) {
    if (face.empty()) throw InputError("certify_face_paths: the empty face has no order maxima");
    if (!face_of_sigma(r, face))
        throw InputError("certify_face_paths: the given set is not a face of sigma");
    if (!is_vertex(r, x))
        throw InputError("certify_face_paths: '" + x + "' is not a vertex of sigma");

    std::map<int, std::vector<VertexId>> result;
    for (int i = 0; i < r.d(); ++i) {
        const VertexId& fi = r.max_of(i, face);
        const auto parent = ascending_reach(r, i, fi);
        if (parent[static_cast<std::size_t>(r.element_index(x))] != -1)
            result[i] = path_from_parents(r, parent, fi, x);
    }
    if (result.empty())
        throw InternalError("no order admits an increasing path from the face to the vertex");
    return result;
}

NonfaceCertificate certify_nonface(const Representation& r, const Face& face) {
    for (const auto& v : face) r.element_index(v);
    if (face_of_sigma(r, face))
        throw InputError("certify_nonface: the given set is a face of sigma");

    const int d = r.d();
    for (const auto& x : r.elements()) {
        if (!is_vertex(r, x)) continue;
        if (dominates(r, x, face)) continue;
        NonfaceCertificate cert;
        cert.witness = x;
        bool all = true;
        for (int i = 0; i < d && all; ++i) {
            const auto parent = ascending_reach(r, i, x);
            bool found = false;
            // Deterministic choice: smallest reachable member of F.
            for (const auto& f : face) {
                if (parent[static_cast<std::size_t>(r.element_index(f))] != -1) {
                    cert.paths[i] = {f, path_from_parents(r, parent, x, f)};
                    found = true;
                    break;
                }
            }
            all = found;
        }
        if (all) return cert;
    }
    // Over vertices of sigma the witness always exists; sets reaching into
    // non-vertex elements may be unreachable by increasing paths.
    for (const auto& v : face)
        if (!is_vertex(r, v))
            throw InputError("certify_nonface: '" + v +
                             "' is not a vertex of sigma, no path can reach it");
    throw InternalError("no vertex certifies the non-face");
}

StandardnessReport standardness(const Representation& r) {
    const int d = r.d();
    if (static_cast<int>(r.elements().size()) < d)
        throw InputError("standardness requires at least d elements");
    for (const auto& v : r.elements())
        if (!is_vertex(r, v)) return {};

    const int n = static_cast<int>(r.elements().size());
    std::vector<VertexId> maxima;
    for (int i = 0; i < d; ++i)
        maxima.push_back(r.order(i)[static_cast<std::size_t>(n - 1)]);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (j == i) continue;
            if (r.rank(j, maxima[static_cast<std::size_t>(i)]) > d - 2) return {};
        }
    }
    return {true, std::move(maxima)};
}

std::optional<std::vector<VertexId>> standardness_from_complex(const SimplicialComplex& c,
                                                               int d) {
    if (d < 1) throw InputError("standardness_from_complex requires d >= 1");
    // Every declared vertex must itself be a face.
    for (const auto& v : c.vertices())
        if (!c.contains(Face{v})) return std::nullopt;

    // Every face lies in some (d-1)-face  <=>  every facet has exactly d vertices.
    for (const Face& f : c.facets())
        if (f.size() != static_cast<std::size_t>(d)) return std::nullopt;

    // (d-2)-faces contained in exactly one (d-1)-face.
    std::vector<Face> deficient;
    for (const Face& f : c.k_faces(d - 2)) {
        int extensions = 0;
        for (const VertexId& v : c.vertices()) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            Face ext = f;
            ext.insert(std::upper_bound(ext.begin(), ext.end(), v), v);
            if (c.contains(ext)) ++extensions;
        }
        if (extensions == 0) return std::nullopt;
        if (extensions == 1) deficient.push_back(f);
    }
    if (static_cast<int>(deficient.size()) != d) return std::nullopt;

    std::set<VertexId> union_set;
    for (const Face& f : deficient) union_set.insert(f.begin(), f.end());
    if (static_cast<int>(union_set.size()) != d) return std::nullopt;

    // The deficient faces must be exactly the (d-1)-subsets of the union.
    std::set<Face> expected;
    for (const VertexId& m : union_set) {
        Face f;
        for (const VertexId& v : union_set)
            if (v != m) f.push_back(v);
        expected.insert(f);
    }
    if (expected != std::set<Face>(deficient.begin(), deficient.end())) return std::nullopt;

    return std::vector<VertexId>(union_set.begin(), union_set.end());
}

} // namespace tddel
