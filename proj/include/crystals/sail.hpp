#pragma once

#include <array>
#include <numeric>
#include <vector>

#include <crystals/crystal.hpp>
#include <crystals/errors.hpp>

namespace crystals {

/// Closed construction of the A_2-crystal K(c1,c2) from sails.
///
/// The right sail R has vertices (i,j), 0 <= j <= i <= c1, the left sail L
/// has vertices (i,j), 0 <= i <= j <= c2; 1-edges go (i,j)->(i+1,j) and
/// 2-edges (i,j)->(i,j+1) wherever both ends exist. Take copies R_j for
/// j = 0..c2 and L_i for i = 0..c1 and identify the diagonal vertex (i,i) of
/// R_j with the diagonal vertex (j,j) of L_i; the identified vertices are the
/// critical (principal) vertices of the result.
inline Crystal sail_build(int c1, int c2) {
    if (c1 < 0 || c2 < 0) throw input_error("sail_build: parameter must be nonnegative");

    const int right_size = (c1 + 1) * (c1 + 2) / 2;
    const int left_size = (c2 + 1) * (c2 + 2) / 2;
    // triangular indexing inside one sail
    auto tri_r = [&](int i, int j) { return i * (i + 1) / 2 + j; };         // 0<=j<=i<=c1
    auto tri_l = [&](int i, int j) { return j * (j + 1) / 2 + i; };         // 0<=i<=j<=c2
    const int rights = c2 + 1, lefts = c1 + 1;
    const int total = rights * right_size + lefts * left_size;
    auto right_id = [&](int copy, int i, int j) { return copy * right_size + tri_r(i, j); };
    auto left_id = [&](int copy, int i, int j) { return rights * right_size + copy * left_size + tri_l(i, j); };

    // union-find for the diagonal identifications
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int>* pp = &parent;
    auto find = [pp](int x) {
        while ((*pp)[x] != x) x = (*pp)[x] = (*pp)[(*pp)[x]];
        return x;
    };
    for (int i = 0; i <= c1; ++i)
        for (int j = 0; j <= c2; ++j)
            parent[find(right_id(j, i, i))] = find(left_id(i, j, j));

    std::vector<VertexId> compact(total, kNoVertex);
    VertexId vcount = 0;
    for (int x = 0; x < total; ++x)
        if (find(x) == x) compact[x] = vcount++;
    auto id = [&](int x) { return compact[find(x)]; };

    std::vector<Edge> edges;
    for (int copy = 0; copy <= c2; ++copy)
        for (int i = 0; i <= c1; ++i)
            for (int j = 0; j <= i; ++j) {
                if (i + 1 <= c1) edges.push_back({id(right_id(copy, i, j)), id(right_id(copy, i + 1, j)), 1});
                if (j + 1 <= i) edges.push_back({id(right_id(copy, i, j)), id(right_id(copy, i, j + 1)), 2});
            }
    for (int copy = 0; copy <= c1; ++copy)
        for (int j = 0; j <= c2; ++j)
            for (int i = 0; i <= j; ++i) {
                if (i + 1 <= j) edges.push_back({id(left_id(copy, i, j)), id(left_id(copy, i + 1, j)), 1});
                if (j + 1 <= c2) edges.push_back({id(left_id(copy, i, j)), id(left_id(copy, i, j + 1)), 2});
            }

    return make_canonical_crystal(2, vcount, std::move(edges), Family::A, {c1, c2});
}

/// Closed-form data of the 1-path (upper subcrystal) through p[a] in an
/// A_2-crystal K(c), and of the 2-path through the i-th vertex of that 1-path.
struct A2LineData {
    int p_len;            // length |P| of the 1-path through p[a]
    int heart;            // index of p[a] in P
    std::array<int, 2> b; // locus of the 2-path's heart
    int q_len;            // length |Q| of the 2-path through v_i
    int q_heart;          // index of the 2-path's heart in Q
};

inline A2LineData a2_line_data(const std::array<int, 2>& c, const std::array<int, 2>& a, int i) {
    if (a[0] < 0 || a[0] > c[0] || a[1] < 0 || a[1] > c[1])
        throw input_error("a2_line_data: a outside the box");
    A2LineData out{};
    out.p_len = c[0] - a[0] + a[1];
    out.heart = a[1];
    if (i < 0 || i > out.p_len) throw input_error("a2_line_data: index outside the 1-path");
    if (i >= a[1]) { // deviation delta = i - a2 >= 0
        out.b = {a[0] + i - a[1], a[1]};
        out.q_len = c[1] - 2 * a[1] + a[0] + i;
        out.q_heart = out.b[0];
    } else {
        out.b = {a[0], i};
        out.q_len = c[1] - i + a[0];
        out.q_heart = a[0];
    }
    return out;
}

} // namespace crystals
