#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include <crystals/errors.hpp>

namespace crystals {

using VertexId = std::int32_t;
using Color = int; // 1..n

inline constexpr VertexId kNoVertex = -1;

struct Edge {
    VertexId from;
    VertexId to;
    Color color;

    friend bool operator==(const Edge&, const Edge&) = default;
};

inline bool edge_order(const Edge& a, const Edge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.color != b.color) return a.color < b.color;
    return a.to < b.to;
}

enum class Family { A, B, C, Raw };

inline const char* family_name(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    default: return "raw";
    }
}

struct Meta {
    Family family = Family::Raw;
    std::vector<int> c; // parameter: head lengths at the source
    VertexId source = 0;
    VertexId sink = 0;
};

// Tail and head lengths of the monochromatic line through a vertex.
struct MonoStats {
    int tail; // edges of the i-line before the vertex
    int head; // edges of the i-line after the vertex
};

/// Finite edge-colored directed graph with colors 1..n.
///
/// The per-color functional property (at most one incoming and one outgoing
/// i-edge per vertex) is enforced at construction; everything else (unique
/// source/sink, acyclicity, connectivity) is only guaranteed when meta is
/// attached via make_canonical_crystal.
class Crystal {
  public:
    Crystal() = default;

    int colors() const { return n_; }
    VertexId vertex_count() const { return vcount_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::optional<Meta>& meta() const { return meta_; }

    // Successor / predecessor along one color; kNoVertex when absent.
    VertexId succ(VertexId v, Color i) const { return succ_[slot(v, i)]; }
    VertexId pred(VertexId v, Color i) const { return pred_[slot(v, i)]; }

    bool has_vertex(VertexId v) const { return v >= 0 && v < vcount_; }
    bool has_color(Color i) const { return i >= 1 && i <= n_; }

    void check_vertex(VertexId v) const {
        if (!has_vertex(v)) throw input_error("unknown vertex id " + std::to_string(v));
    }
    void check_color(Color i) const {
        if (!has_color(i)) throw input_error("unknown color " + std::to_string(i));
    }

    int out_degree(VertexId v) const {
        int d = 0;
        for (Color i = 1; i <= n_; ++i) d += succ(v, i) != kNoVertex;
        return d;
    }
    int in_degree(VertexId v) const {
        int d = 0;
        for (Color i = 1; i <= n_; ++i) d += pred(v, i) != kNoVertex;
        return d;
    }

    // The unique zero-indegree vertex. From meta when present.
    VertexId source() const {
        if (meta_) return meta_->source;
        return unique_extreme(/*want_source=*/true);
    }
    VertexId sink() const {
        if (meta_) return meta_->sink;
        return unique_extreme(/*want_source=*/false);
    }

    friend Crystal make_crystal(int n, VertexId vcount, std::vector<Edge> edges);
    friend Crystal with_meta(Crystal k, Family family, std::vector<int> c);

  private:
    std::size_t slot(VertexId v, Color i) const {
        check_vertex(v);
        check_color(i);
        return static_cast<std::size_t>(v) * n_ + (i - 1);
    }

    VertexId unique_extreme(bool want_source) const {
        VertexId found = kNoVertex;
        for (VertexId v = 0; v < vcount_; ++v) {
            const int d = want_source ? in_degree(v) : out_degree(v);
            if (d == 0) {
                if (found != kNoVertex)
                    throw input_error(std::string("crystal has more than one ") +
                                      (want_source ? "source" : "sink"));
                found = v;
            }
        }
        if (found == kNoVertex)
            throw input_error(std::string("crystal has no ") + (want_source ? "source" : "sink"));
        return found;
    }

    int n_ = 0;
    VertexId vcount_ = 0;
    std::vector<Edge> edges_;     // sorted by (from, color)
    std::vector<VertexId> succ_;  // vcount * n
    std::vector<VertexId> pred_;
    std::optional<Meta> meta_;
};

/// Builds a raw crystal. Enforces the per-color functional property and sorts
/// the edge list by (from, color); attaches no meta.
inline Crystal make_crystal(int n, VertexId vcount, std::vector<Edge> edges) {
    if (n < 1) throw input_error("color count must be positive");
    if (vcount < 1) throw input_error("crystal needs at least one vertex");
    Crystal k;
    k.n_ = n;
    k.vcount_ = vcount;
    k.succ_.assign(static_cast<std::size_t>(vcount) * n, kNoVertex);
    k.pred_.assign(static_cast<std::size_t>(vcount) * n, kNoVertex);
    std::sort(edges.begin(), edges.end(), edge_order);
    for (const Edge& e : edges) {
        if (!k.has_vertex(e.from) || !k.has_vertex(e.to))
            throw input_error("edge endpoint out of range");
        if (!k.has_color(e.color)) throw input_error("edge color out of range");
        if (e.from == e.to) throw malformed_crystal_error("self-loop edge");
        auto& s = k.succ_[static_cast<std::size_t>(e.from) * n + (e.color - 1)];
        auto& p = k.pred_[static_cast<std::size_t>(e.to) * n + (e.color - 1)];
        if (s != kNoVertex)
            throw malformed_crystal_error("vertex " + std::to_string(e.from) +
                                          " has two outgoing edges of color " +
                                          std::to_string(e.color));
        if (p != kNoVertex)
            throw malformed_crystal_error("vertex " + std::to_string(e.to) +
                                          " has two incoming edges of color " +
                                          std::to_string(e.color));
        s = e.to;
        p = e.from;
    }
    k.edges_ = std::move(edges);
    return k;
}

namespace detail {

// BFS numbering from `source`: vertices are visited in order of
// (canonical id of parent, color of the tree edge). The result is the unique
// renumbering under which generated crystals serialize byte-identically.
inline std::vector<VertexId> canonical_order(const Crystal& k, VertexId source) {
    std::vector<VertexId> old_of_new;
    old_of_new.reserve(k.vertex_count());
    std::vector<VertexId> new_of_old(k.vertex_count(), kNoVertex);
    new_of_old[source] = 0;
    old_of_new.push_back(source);
    for (std::size_t head = 0; head < old_of_new.size(); ++head) {
        const VertexId u = old_of_new[head];
        for (Color i = 1; i <= k.colors(); ++i) {
            const VertexId v = k.succ(u, i);
            if (v != kNoVertex && new_of_old[v] == kNoVertex) {
                new_of_old[v] = static_cast<VertexId>(old_of_new.size());
                old_of_new.push_back(v);
            }
        }
    }
    return new_of_old; // kNoVertex marks vertices unreachable from source
}

} // namespace detail

/// Renumbers canonically from `source` (see detail::canonical_order). All
/// vertices must be reachable; meta is dropped and must be re-attached.
inline Crystal canonical_form(const Crystal& k, VertexId source) {
    k.check_vertex(source);
    const auto new_of_old = detail::canonical_order(k, source);
    for (VertexId v = 0; v < k.vertex_count(); ++v)
        if (new_of_old[v] == kNoVertex)
            throw input_error("canonical_form: vertex " + std::to_string(v) +
                              " unreachable from the source");
    std::vector<Edge> edges;
    edges.reserve(k.edge_count());
    for (const Edge& e : k.edges())
        edges.push_back({new_of_old[e.from], new_of_old[e.to], e.color});
    return make_crystal(k.colors(), k.vertex_count(), std::move(edges));
}

/// Attaches family meta after validating the crystal-shape invariants:
/// unique source and sink, acyclic, weakly connected, vertex 0 the source.
inline Crystal with_meta(Crystal k, Family family, std::vector<int> c) {
    if (static_cast<int>(c.size()) != k.colors())
        throw input_error("parameter length does not match color count");
    Meta m;
    m.family = family;
    m.c = std::move(c);
    m.source = k.unique_extreme(true);
    m.sink = k.unique_extreme(false);
    if (m.source != 0) throw input_error("with_meta: source must be vertex 0 (canonicalize first)");
    // acyclicity by Kahn's toposort
    std::vector<int> indeg(k.vertex_count());
    for (VertexId v = 0; v < k.vertex_count(); ++v) indeg[v] = k.in_degree(v);
    std::vector<VertexId> stack{m.source};
    VertexId seen = 0;
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        ++seen;
        for (Color i = 1; i <= k.colors(); ++i) {
            const VertexId v = k.succ(u, i);
            if (v != kNoVertex && --indeg[v] == 0) stack.push_back(v);
        }
    }
    if (seen != k.vertex_count())
        throw malformed_crystal_error("crystal is cyclic or not connected");
    k.meta_ = std::move(m);
    return k;
}

/// One-stop finalizer for generators: canonical renumbering from the unique
/// source, then meta attachment.
inline Crystal make_canonical_crystal(int n, VertexId vcount, std::vector<Edge> edges,
                                      Family family, std::vector<int> c) {
    Crystal raw = make_crystal(n, vcount, std::move(edges));
    const VertexId src = raw.source();
    return with_meta(canonical_form(raw, src), family, std::move(c));
}

/// Tail/head lengths of the i-line through v.
inline MonoStats head_tail(const Crystal& k, VertexId v, Color i) {
    k.check_vertex(v);
    k.check_color(i);
    MonoStats s{0, 0};
    for (VertexId u = k.pred(v, i); u != kNoVertex; u = k.pred(u, i)) {
        if (++s.tail > k.vertex_count())
            throw malformed_crystal_error("color " + std::to_string(i) + " contains a cycle");
        if (u == v) throw malformed_crystal_error("color " + std::to_string(i) + " contains a cycle");
    }
    for (VertexId u = k.succ(v, i); u != kNoVertex; u = k.succ(u, i)) {
        if (++s.head > k.vertex_count())
            throw malformed_crystal_error("color " + std::to_string(i) + " contains a cycle");
        if (u == v) throw malformed_crystal_error("color " + std::to_string(i) + " contains a cycle");
    }
    return s;
}

inline int head_len(const Crystal& k, VertexId v, Color i) { return head_tail(k, v, i).head; }
inline int tail_len(const Crystal& k, VertexId v, Color i) { return head_tail(k, v, i).tail; }

/// Label of edge e w.r.t. a neighboring color j: h_j(head) - h_j(tail).
/// In a regular A-type two-colored component this is 0 or 1; anything else is
/// reported as a malformed crystal (the verifier consumes that).
inline int edge_label(const Crystal& k, const Edge& e, Color j) {
    k.check_color(j);
    k.check_vertex(e.from);
    if (k.succ(e.from, e.color) != e.to)
        throw input_error("edge_label: no such edge");
    if (e.color - j != 1 && j - e.color != 1)
        throw input_error("edge labels are defined for neighboring colors only");
    const int label = head_len(k, e.to, j) - head_len(k, e.from, j);
    if (label != 0 && label != 1)
        throw malformed_crystal_error("label " + std::to_string(label) + " outside {0,1} on edge (" +
                                      std::to_string(e.from) + "," + std::to_string(e.to) + ") w.r.t. color " +
                                      std::to_string(j));
    return label;
}

struct RouteStep {
    Edge edge;
    bool forward; // false: the edge is traversed against its direction
};

struct GradedResult {
    bool ok = true;
    // When !ok: a closed route on which some color has unequal numbers of
    // forward and backward edges.
    std::vector<RouteStep> witness;
};

/// Checks that a weight map V -> Z^n exists under which every i-edge is a unit
/// shift in coordinate i (gradedness). BFS potential assignment over the
/// underlying undirected graph; the first conflict yields a witness route.
inline GradedResult check_graded(const Crystal& k) {
    const int n = k.colors();
    const VertexId V = k.vertex_count();
    std::vector<std::vector<int>> wt(V);
    // parent chain for witness reconstruction
    struct Link {
        VertexId parent = kNoVertex;
        Edge via{};
        bool forward = true;
    };
    std::vector<Link> link(V);
    std::vector<char> seen(V, 0);

    auto route_to_root = [&](VertexId v) {
        std::vector<RouteStep> out;
        while (link[v].parent != kNoVertex) {
            out.push_back({link[v].via, !link[v].forward}); // walk towards the root
            v = link[v].parent;
        }
        return out;
    };

    for (VertexId root = 0; root < V; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        wt[root].assign(n, 0);
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            const VertexId u = q.front();
            q.pop();
            for (Color i = 1; i <= n; ++i) {
                for (const bool fwd : {true, false}) {
                    const VertexId v = fwd ? k.succ(u, i) : k.pred(u, i);
                    if (v == kNoVertex) continue;
                    std::vector<int> w = wt[u];
                    w[i - 1] += fwd ? 1 : -1;
                    const Edge e = fwd ? Edge{u, v, i} : Edge{v, u, i};
                    if (!seen[v]) {
                        seen[v] = 1;
                        wt[v] = std::move(w);
                        link[v] = {u, e, fwd};
                        q.push(v);
                    } else if (wt[v] != w) {
                        // closed route: u -> v (this edge), v -> root, root -> u
                        GradedResult res;
                        res.ok = false;
                        res.witness.push_back({e, fwd});
                        auto down = route_to_root(v);
                        res.witness.insert(res.witness.end(), down.begin(), down.end());
                        auto up = route_to_root(u);
                        std::reverse(up.begin(), up.end());
                        for (auto& st : up) st.forward = !st.forward;
                        res.witness.insert(res.witness.end(), up.begin(), up.end());
                        return res;
                    }
                }
            }
        }
    }
    return {};
}

namespace detail {

// Color-preserving isomorphism as an explicit vertex map, or nullopt.
// Synchronized traversal from the two sources; exact because every color acts
// as a partial injective function.
inline std::optional<std::vector<VertexId>> iso_map(const Crystal& k1, const Crystal& k2) {
    if (k1.colors() != k2.colors()) return std::nullopt;
    if (k1.vertex_count() != k2.vertex_count()) return std::nullopt;
    if (k1.edge_count() != k2.edge_count()) return std::nullopt;
    const VertexId s1 = k1.source(), s2 = k2.source();
    std::vector<VertexId> to2(k1.vertex_count(), kNoVertex);
    std::vector<VertexId> to1(k2.vertex_count(), kNoVertex);
    to2[s1] = s2;
    to1[s2] = s1;
    std::vector<VertexId> stack{s1};
    VertexId matched = 1;
    while (!stack.empty()) {
        const VertexId u1 = stack.back();
        stack.pop_back();
        const VertexId u2 = to2[u1];
        for (Color i = 1; i <= k1.colors(); ++i) {
            for (const bool fwd : {true, false}) {
                const VertexId v1 = fwd ? k1.succ(u1, i) : k1.pred(u1, i);
                const VertexId v2 = fwd ? k2.succ(u2, i) : k2.pred(u2, i);
                if ((v1 == kNoVertex) != (v2 == kNoVertex)) return std::nullopt;
                if (v1 == kNoVertex) continue;
                if (to2[v1] != kNoVertex || to1[v2] != kNoVertex) {
                    if (to2[v1] != v2 || to1[v2] != v1) return std::nullopt;
                    continue;
                }
                to2[v1] = v2;
                to1[v2] = v1;
                ++matched;
                stack.push_back(v1);
            }
        }
    }
    if (matched != k1.vertex_count()) return std::nullopt; // disconnected input
    return to2;
}

} // namespace detail

/// Exact color-preserving digraph isomorphism test (linear time).
inline bool isomorphic(const Crystal& k1, const Crystal& k2) {
    return detail::iso_map(k1, k2).has_value();
}

/// Copy with every color i replaced by remap[i-1]; the remap must be a
/// permutation of 1..n. Meta is dropped.
inline Crystal relabel_colors(const Crystal& k, const std::vector<Color>& remap) {
    if (static_cast<int>(remap.size()) != k.colors())
        throw input_error("relabel_colors: remap size mismatch");
    std::vector<Edge> edges;
    edges.reserve(k.edge_count());
    for (const Edge& e : k.edges()) edges.push_back({e.from, e.to, remap[e.color - 1]});
    return make_crystal(k.colors(), k.vertex_count(), std::move(edges));
}

/// Extracted subgraph as a crystal of its own, plus the map back to the
/// ambient vertex ids. `colors` lists the ambient colors kept, in the order
/// that becomes 1..|colors| in the extract.
struct ExtractedCrystal {
    Crystal crystal;
    std::vector<VertexId> to_ambient; // by extracted id
};

inline ExtractedCrystal extract_subgraph(const Crystal& k, const std::vector<VertexId>& vertices,
                                         const std::vector<Color>& colors) {
    std::vector<VertexId> local(k.vertex_count(), kNoVertex);
    for (std::size_t idx = 0; idx < vertices.size(); ++idx) {
        k.check_vertex(vertices[idx]);
        local[vertices[idx]] = static_cast<VertexId>(idx);
    }
    std::vector<Color> cmap(k.colors() + 1, 0);
    for (std::size_t ci = 0; ci < colors.size(); ++ci) {
        k.check_color(colors[ci]);
        cmap[colors[ci]] = static_cast<Color>(ci + 1);
    }
    std::vector<Edge> edges;
    for (const Edge& e : k.edges()) {
        if (cmap[e.color] == 0) continue;
        if (local[e.from] == kNoVertex || local[e.to] == kNoVertex) continue;
        edges.push_back({local[e.from], local[e.to], cmap[e.color]});
    }
    ExtractedCrystal out;
    out.crystal = make_crystal(static_cast<int>(colors.size()),
                               static_cast<VertexId>(vertices.size()), std::move(edges));
    out.to_ambient = vertices;
    return out;
}

/// Connected components of the subgraph on the given colors (all vertices
/// kept; isolated vertices form their own components). Deterministic: each
/// component is sorted, components ordered by smallest member.
inline std::vector<std::vector<VertexId>> color_components(const Crystal& k,
                                                           const std::vector<Color>& colors) {
    std::vector<char> seen(k.vertex_count(), 0);
    std::vector<std::vector<VertexId>> comps;
    for (VertexId v0 = 0; v0 < k.vertex_count(); ++v0) {
        if (seen[v0]) continue;
        std::vector<VertexId> comp{v0};
        seen[v0] = 1;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            const VertexId u = comp[head];
            for (Color i : colors) {
                for (const bool fwd : {true, false}) {
                    const VertexId v = fwd ? k.succ(u, i) : k.pred(u, i);
                    if (v != kNoVertex && !seen[v]) {
                        seen[v] = 1;
                        comp.push_back(v);
                    }
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace crystals
