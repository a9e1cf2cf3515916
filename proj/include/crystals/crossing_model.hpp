#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include <crystals/crystal.hpp>
#include <crystals/errors.hpp>

namespace crystals {

/// Supporting graph G_n of the crossing model. Component G^k is a grid
/// isomorphic to the product of paths of lengths k-1 and n-k; we address its
/// nodes as u_m(j) with m = i-j+1 in 1..k and j in 1..n-k+1 (node v_i^k(j)).
/// Directed edges inside a component: NE (m,j)->(m-1,j) and SE (m,j)->(m,j+1).
/// The multinode V_i(j) lists the nodes v_i^k(j), k ascending.
class SupportingGraph {
  public:
    struct Node {
        int i, j, k; // level, position, component
        int m;       // i - j + 1
    };

    explicit SupportingGraph(int n) : n_(n) {
        if (n < 1) throw input_error("supporting graph needs n >= 1");
        comp_index_.assign(n + 1, {});
        for (int k = 1; k <= n; ++k) comp_index_[k].assign(static_cast<std::size_t>(k) * (n - k + 1), -1);
        level_offset_.assign(n + 2, 0);
        // fixed node order: by level i, then j, then k
        for (int i = 1; i <= n; ++i) {
            level_offset_[i] = static_cast<int>(nodes_.size());
            for (int j = 1; j <= i; ++j) {
                const int m = i - j + 1;
                for (int k = m; k <= n - j + 1; ++k) {
                    comp_index_[k][cell(k, m, j)] = static_cast<int>(nodes_.size());
                    nodes_.push_back({i, j, k, m});
                }
            }
        }
        level_offset_[n + 1] = static_cast<int>(nodes_.size());
        multinodes_.assign(n + 1, {});
        for (int i = 1; i <= n; ++i) {
            multinodes_[i].assign(i + 1, {});
            for (int j = 1; j <= i; ++j) {
                const int m = i - j + 1;
                for (int k = m; k <= n - j + 1; ++k)
                    multinodes_[i][j].push_back(node_id(k, m, j));
            }
        }
    }

    int n() const { return n_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const Node& node(int id) const { return nodes_[id]; }

    // id of u_m(j) in component k; -1 when outside the grid
    int node_id(int k, int m, int j) const {
        if (k < 1 || k > n_ || m < 1 || m > k || j < 1 || j > n_ - k + 1) return -1;
        return comp_index_[k][cell(k, m, j)];
    }

    // nodes of the multinode V_i(j), ordered by k
    const std::vector<int>& multinode(int i, int j) const { return multinodes_[i][j]; }

    int level_begin(int i) const { return level_offset_[i]; }
    int level_end(int i) const { return level_offset_[i + 1]; }

  private:
    std::size_t cell(int k, int m, int j) const {
        return static_cast<std::size_t>(m - 1) * (n_ - k + 1) + (j - 1);
    }

    int n_;
    std::vector<Node> nodes_;
    std::vector<std::vector<int>> comp_index_; // [k] -> (m,j) cell -> id
    std::vector<std::vector<std::vector<int>>> multinodes_;
    std::vector<int> level_offset_;
};

inline SupportingGraph build_supporting_graph(int n) { return SupportingGraph(n); }

/// Integer labeling of the supporting graph; the crossing-model vertex.
/// Boundary values of the extended graph are computed from c on demand and
/// never materialized.
struct FeasibleFunction {
    std::vector<int> c;      // parameter, size n
    std::vector<int> values; // per node of G_n, in graph node order
};

namespace detail {

// value of f on the extended graph at position (m, j) of component k
inline int ext_value(const SupportingGraph& g, const FeasibleFunction& f, int k, int m, int j) {
    const int id = g.node_id(k, m, j);
    if (id >= 0) return f.values[id];
    if (m >= 1 && j <= g.n() - k + 1) return f.c[k - 1]; // left of G^k
    return 0;                                            // right of G^k
}

// Room to grow at a node: the smaller increment over the two entering edges
// (NW and SW, with boundary values from the extension). Incrementing f at v
// keeps monotonicity exactly when this is positive.
inline int node_plus(const SupportingGraph& g, const FeasibleFunction& f, int id) {
    const auto& nd = g.node(id);
    return std::min(ext_value(g, f, nd.k, nd.m, nd.j - 1),
                    ext_value(g, f, nd.k, nd.m + 1, nd.j)) -
           f.values[id];
}

// Room to shrink at a node: the smaller increment over the two leaving edges
// (NE and SE).
inline int node_minus(const SupportingGraph& g, const FeasibleFunction& f, int id) {
    const auto& nd = g.node(id);
    return f.values[id] - std::max(ext_value(g, f, nd.k, nd.m - 1, nd.j),
                                   ext_value(g, f, nd.k, nd.m, nd.j + 1));
}

// Signed slack at a node; per level these cancel like a bracket word.
inline int node_slack(const SupportingGraph& g, const FeasibleFunction& f, int id) {
    return node_plus(g, f, id) - node_minus(g, f, id);
}

// The node where the level's move acts: nodes are read in (j, k) order as a
// signature word carrying node_plus pluses followed by node_minus minuses;
// every minus cancels one plus to its right, and the operator acts at the
// rightmost surviving plus. -1 when no plus survives.
inline int acting_node(const SupportingGraph& g, const FeasibleFunction& f, int level) {
    int pending = 0; // minuses still looking for a plus on their right
    int last_survivor = -1;
    for (int j = 1; j <= level; ++j)
        for (int id : g.multinode(level, j)) {
            const int plus = node_plus(g, f, id);
            if (plus > pending) {
                last_survivor = id;
                pending = 0;
            } else {
                pending -= plus;
            }
            pending += node_minus(g, f, id);
        }
    return last_survivor;
}

inline bool se_tight(const SupportingGraph& g, const FeasibleFunction& f, int id) {
    const auto& nd = g.node(id);
    return f.values[id] == ext_value(g, f, nd.k, nd.m, nd.j + 1);
}

inline bool sw_tight(const SupportingGraph& g, const FeasibleFunction& f, int id) {
    const auto& nd = g.node(id);
    return ext_value(g, f, nd.k, nd.m + 1, nd.j) == f.values[id];
}

// index of the switch-node within the multinode's k-ordered list, or -1 if
// clause (iii) fails there
inline int switch_index(const SupportingGraph& g, const FeasibleFunction& f,
                        const std::vector<int>& mnode) {
    const int r = static_cast<int>(mnode.size());
    // suffix[t]: all nodes strictly after t have a tight SW-edge
    std::vector<char> suffix(r + 1, 1);
    for (int t = r - 2; t >= 0; --t)
        suffix[t] = suffix[t + 1] && sw_tight(g, f, mnode[t + 1]);
    bool prefix = true; // all nodes strictly before t have a tight SE-edge
    for (int t = 0; t < r; ++t) {
        if (prefix && suffix[t]) return t;
        prefix = prefix && se_tight(g, f, mnode[t]);
    }
    return -1;
}

} // namespace detail

/// Checks the three clauses of the feasibility condition; nullopt when
/// feasible, otherwise a description of the violated clause.
inline std::optional<std::string> feasibility_violation(const SupportingGraph& g,
                                                        const FeasibleFunction& f) {
    const int n = g.n();
    if (static_cast<int>(f.c.size()) != n) return "parameter size mismatch";
    if (static_cast<int>(f.values.size()) != g.node_count()) return "value vector size mismatch";
    for (int id = 0; id < g.node_count(); ++id) {
        const auto& nd = g.node(id);
        const int v = f.values[id];
        if (v < 0 || v > f.c[nd.k - 1])
            return "(ii) box violated at node v_" + std::to_string(nd.i) + "^" +
                   std::to_string(nd.k) + "(" + std::to_string(nd.j) + ")";
        const int ne = g.node_id(nd.k, nd.m - 1, nd.j);
        if (ne >= 0 && v < f.values[ne]) return "(i) monotonicity violated on an NE-edge";
        const int se = g.node_id(nd.k, nd.m, nd.j + 1);
        if (se >= 0 && v < f.values[se]) return "(i) monotonicity violated on an SE-edge";
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            if (detail::switch_index(g, f, g.multinode(i, j)) < 0)
                return "(iii) switch condition violated at multinode V_" + std::to_string(i) + "(" +
                       std::to_string(j) + ")";
    return std::nullopt;
}

inline void require_feasible(const SupportingGraph& g, const FeasibleFunction& f) {
    if (auto why = feasibility_violation(g, f))
        throw input_error("infeasible function: " + *why);
}

/// The principal function f[a]: constant a_k on each component G^k.
inline FeasibleFunction principal_function(const SupportingGraph& g, const std::vector<int>& c,
                                           const std::vector<int>& a) {
    if (static_cast<int>(c.size()) != g.n() || a.size() != c.size())
        throw input_error("principal_function: size mismatch");
    FeasibleFunction f{c, std::vector<int>(g.node_count(), 0)};
    for (int id = 0; id < g.node_count(); ++id) {
        const int k = g.node(id).k;
        if (a[k - 1] < 0 || a[k - 1] > c[k - 1]) throw input_error("principal coordinate outside box");
        f.values[id] = a[k - 1];
    }
    return f;
}

/// Slack data of one level: per-node and per-multinode slacks, the active
/// multinode (j = 0 when no move is possible), and its switch node.
struct LevelSlacks {
    std::vector<std::vector<int>> node_slacks; // [j-1] -> per node of V_i(j)
    std::vector<int> total;                    // eps_i(j), j = 1..i
    std::vector<int> reduced;                  // reduced slacks
    int active_j = 0;
    int switch_node = -1; // graph node id
};

inline LevelSlacks slacks(const SupportingGraph& g, const FeasibleFunction& f, int level) {
    if (level < 1 || level > g.n()) throw input_error("level out of range");
    require_feasible(g, f);
    LevelSlacks out;
    out.total.resize(level);
    out.reduced.resize(level);
    int prefix = 0, prefix_max = 0; // running sum of eps and max over earlier prefixes
    for (int j = 1; j <= level; ++j) {
        std::vector<int> row;
        int eps = 0;
        for (int id : g.multinode(level, j)) {
            row.push_back(detail::node_slack(g, f, id));
            eps += row.back();
        }
        out.node_slacks.push_back(std::move(row));
        out.total[j - 1] = eps;
        prefix += eps;
        out.reduced[j - 1] = std::max(0, prefix - prefix_max);
        prefix_max = std::max(prefix_max, prefix);
    }
    const int act = detail::acting_node(g, f, level);
    if (act >= 0) {
        out.switch_node = act;
        out.active_j = g.node(act).j;
    }
    return out;
}

namespace detail {

// apply_move without the feasibility pre-check (generation hot path)
inline bool apply_move_unchecked(const SupportingGraph& g, int level, FeasibleFunction& f) {
    const int id = acting_node(g, f, level);
    if (id < 0) return false;
    f.values[id] += 1;
    return true;
}

} // namespace detail

/// One crystal move: if level i has an active multinode, returns f with the
/// switch-node value incremented; nullopt when the operator does not act.
inline std::optional<FeasibleFunction> apply_move(const SupportingGraph& g,
                                                  const FeasibleFunction& f, int level) {
    if (level < 1 || level > g.n()) throw input_error("level out of range");
    require_feasible(g, f);
    FeasibleFunction out = f;
    if (!detail::apply_move_unchecked(g, level, out)) return std::nullopt;
    assert(!feasibility_violation(g, out));
    return out;
}

/// The vertex f_{a,Delta} of the upper lattice of K^up[a] with deviation
/// Delta: a_k on the SW-side, a_k + Delta^-_{k-1} on the right rectangle,
/// plus Delta^+_k on the left rectangle of each component.
inline FeasibleFunction upper_lattice_vertex(const SupportingGraph& g, const std::vector<int>& c,
                                             const std::vector<int>& a,
                                             const std::vector<int>& dev) {
    const int n = g.n();
    if (static_cast<int>(c.size()) != n || static_cast<int>(a.size()) != n ||
        static_cast<int>(dev.size()) != n - 1)
        throw input_error("upper_lattice_vertex: size mismatch");
    for (int k = 1; k <= n; ++k)
        if (a[k - 1] < 0 || a[k - 1] > c[k - 1])
            throw input_error("principal coordinate outside box");
    for (int k = 1; k <= n - 1; ++k)
        if (dev[k - 1] < -a[k] || dev[k - 1] > c[k - 1] - a[k - 1])
            throw input_error("deviation outside its box");
    auto dplus = [&](int k) { return (k >= 1 && k <= n - 1) ? std::max(dev[k - 1], 0) : 0; };
    auto dminus = [&](int k) { return (k >= 1 && k <= n - 1) ? std::min(dev[k - 1], 0) : 0; };
    FeasibleFunction f{c, std::vector<int>(g.node_count(), 0)};
    for (int id = 0; id < g.node_count(); ++id) {
        const auto& nd = g.node(id);
        const int base = (nd.m == nd.k) ? a[nd.k - 1] : a[nd.k - 1] + dminus(nd.k - 1);
        f.values[id] = base + (nd.j <= n - nd.k ? dplus(nd.k) : 0);
    }
    assert(!feasibility_violation(g, f));
    return f;
}

// Debug dump: values grouped per level, in (j, k) node order.
inline nlohmann::ordered_json feasible_function_json(const SupportingGraph& g,
                                                     const FeasibleFunction& f) {
    nlohmann::ordered_json j;
    j["c"] = f.c;
    auto levels = nlohmann::ordered_json::array();
    for (int i = 1; i <= g.n(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int id = g.level_begin(i); id < g.level_end(i); ++id) row.push_back(f.values[id]);
        levels.push_back(std::move(row));
    }
    j["levels"] = std::move(levels);
    return j;
}

struct GenerateOptions {
    std::size_t max_vertices = 5'000'000;
    int threads = 1;
};

namespace detail {

inline std::string pack_values(const std::vector<int>& values, bool wide) {
    std::string key;
    if (!wide) {
        key.resize(values.size());
        for (std::size_t t = 0; t < values.size(); ++t) key[t] = static_cast<char>(values[t]);
    } else {
        key.resize(values.size() * 4);
        for (std::size_t t = 0; t < values.size(); ++t) {
            const std::uint32_t v = static_cast<std::uint32_t>(values[t]);
            key[4 * t] = static_cast<char>(v & 0xff);
            key[4 * t + 1] = static_cast<char>((v >> 8) & 0xff);
            key[4 * t + 2] = static_cast<char>((v >> 16) & 0xff);
            key[4 * t + 3] = static_cast<char>((v >> 24) & 0xff);
        }
    }
    return key;
}

inline void unpack_values(const std::string& key, bool wide, std::vector<int>& out) {
    if (!wide) {
        out.resize(key.size());
        for (std::size_t t = 0; t < key.size(); ++t)
            out[t] = static_cast<unsigned char>(key[t]);
    } else {
        out.resize(key.size() / 4);
        for (std::size_t t = 0; t < out.size(); ++t)
            out[t] = static_cast<int>(static_cast<std::uint32_t>(static_cast<unsigned char>(key[4 * t])) |
                                      (static_cast<std::uint32_t>(static_cast<unsigned char>(key[4 * t + 1])) << 8) |
                                      (static_cast<std::uint32_t>(static_cast<unsigned char>(key[4 * t + 2])) << 16) |
                                      (static_cast<std::uint32_t>(static_cast<unsigned char>(key[4 * t + 3])) << 24));
    }
}

} // namespace detail

/// Generation result with a feasible-function index into the final ids.
struct GeneratedCrystal {
    Crystal crystal;
    SupportingGraph graph;
    std::function<VertexId(const FeasibleFunction&)> locate; // kNoVertex if absent
};

/// BFS closure from f[0] under all moves, deduplicated by the value vector.
/// Layers may expand in parallel; the canonical renumbering at the end makes
/// the result independent of the thread count.
inline GeneratedCrystal generate_indexed(const std::vector<int>& c,
                                         const GenerateOptions& opts = {}) {
    const int n = static_cast<int>(c.size());
    for (int ci : c)
        if (ci < 0) throw input_error("parameter entries must be nonnegative");
    SupportingGraph g(n);
    const bool wide = *std::max_element(c.begin(), c.end()) > 255;

    std::unordered_map<std::string, VertexId> index;
    std::vector<const std::string*> key_of; // provisional id -> key
    std::vector<Edge> edges;

    FeasibleFunction f0{c, std::vector<int>(g.node_count(), 0)};
    {
        auto [it, fresh] = index.emplace(detail::pack_values(f0.values, wide), 0);
        (void)fresh;
        key_of.push_back(&it->first);
    }

    const int threads = std::max(1, opts.threads);
    struct Candidate {
        VertexId from;
        Color color;
        std::string key;
    };

    std::size_t layer_begin = 0;
    while (layer_begin < key_of.size()) {
        const std::size_t layer_end = key_of.size();
        std::vector<std::vector<Candidate>> found(threads);
        auto expand = [&](int tid) {
            FeasibleFunction f{c, {}};
            std::vector<int> scratch;
            for (std::size_t id = layer_begin + tid; id < layer_end; id += threads) {
                detail::unpack_values(*key_of[id], wide, scratch);
                for (int i = 1; i <= n; ++i) {
                    f.values = scratch;
                    if (detail::apply_move_unchecked(g, i, f))
                        found[tid].push_back({static_cast<VertexId>(id), i,
                                              detail::pack_values(f.values, wide)});
                }
            }
        };
        if (threads == 1) {
            expand(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(expand, t);
            for (auto& th : pool) th.join();
        }
        // deterministic merge: by (source id, color) regardless of thread count
        std::vector<Candidate*> merged;
        for (auto& batch : found)
            for (auto& cand : batch) merged.push_back(&cand);
        std::sort(merged.begin(), merged.end(), [](const Candidate* a, const Candidate* b) {
            return a->from != b->from ? a->from < b->from : a->color < b->color;
        });
        for (Candidate* cand : merged) {
            auto [it, fresh] = index.emplace(std::move(cand->key),
                                             static_cast<VertexId>(key_of.size()));
            if (fresh) {
                key_of.push_back(&it->first);
                if (key_of.size() > opts.max_vertices)
                    throw resource_error("vertex cap " + std::to_string(opts.max_vertices) +
                                         " exceeded while generating K(c)");
            }
            edges.push_back({cand->from, it->second, cand->color});
        }
        layer_begin = layer_end;
    }

    Crystal raw = make_crystal(n, static_cast<VertexId>(key_of.size()), std::move(edges));
    const auto renumber = detail::canonical_order(raw, 0);
    Crystal k = with_meta(canonical_form(raw, 0), Family::A, c);

    GeneratedCrystal out{std::move(k), std::move(g), nullptr};
    out.locate = [index = std::move(index), renumber, wide](const FeasibleFunction& f) {
        const auto it = index.find(detail::pack_values(f.values, wide));
        return it == index.end() ? kNoVertex : renumber[it->second];
    };
    return out;
}

/// The A_n-crystal K(c) via the crossing model.
inline Crystal generate(const std::vector<int>& c, const GenerateOptions& opts = {}) {
    return generate_indexed(c, opts).crystal;
}

} // namespace crystals
