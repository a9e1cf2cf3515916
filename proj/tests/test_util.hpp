#pragma once

// Shared helpers for the test suites. The brute-force walkers here scan the
// raw edge list on purpose: they stay independent of the succ/pred tables and
// of head_tail, so they can serve as oracles for them.

#include <algorithm>
#include <optional>
#include <vector>

#include <crystals/crystal.hpp>

namespace testutil {

using crystals::Color;
using crystals::Crystal;
using crystals::Edge;
using crystals::VertexId;

inline std::optional<VertexId> edge_list_succ(const Crystal& k, VertexId v, Color i) {
    for (const Edge& e : k.edges())
        if (e.from == v && e.color == i) return e.to;
    return std::nullopt;
}

inline std::optional<VertexId> edge_list_pred(const Crystal& k, VertexId v, Color i) {
    for (const Edge& e : k.edges())
        if (e.to == v && e.color == i) return e.from;
    return std::nullopt;
}

// head length by scanning the edge list
inline int brute_head(const Crystal& k, VertexId v, Color i) {
    int len = 0;
    for (auto next = edge_list_succ(k, v, i); next; next = edge_list_succ(k, *next, i)) ++len;
    return len;
}

inline int brute_tail(const Crystal& k, VertexId v, Color i) {
    int len = 0;
    for (auto prev = edge_list_pred(k, v, i); prev; prev = edge_list_pred(k, *prev, i)) ++len;
    return len;
}

// the edge colors along a graph that is a single directed path
inline std::vector<Color> path_color_word(const Crystal& k) {
    std::vector<Color> word;
    VertexId v = k.source();
    while (true) {
        VertexId next = crystals::kNoVertex;
        Color used = 0;
        for (Color i = 1; i <= k.colors(); ++i)
            if (k.succ(v, i) != crystals::kNoVertex) {
                if (next != crystals::kNoVertex) return {}; // not a path
                next = k.succ(v, i);
                used = i;
            }
        if (next == crystals::kNoVertex) break;
        word.push_back(used);
        v = next;
    }
    return word;
}

inline std::size_t count_edges_of_color(const Crystal& k, Color i) {
    std::size_t n = 0;
    for (const Edge& e : k.edges()) n += e.color == i;
    return n;
}

// removes one edge (by index into the sorted edge list), keeping the graph raw
inline Crystal delete_edge(const Crystal& k, std::size_t index) {
    std::vector<Edge> edges = k.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(index));
    return crystals::make_crystal(k.colors(), k.vertex_count(), std::move(edges));
}

} // namespace testutil
