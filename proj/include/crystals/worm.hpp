#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <crystals/crystal.hpp>
#include <crystals/errors.hpp>

namespace crystals {

/// A worm: the admissible six-tuple (x', y, x''; y', x, y'') drawn as the
/// horizontal segment X'X'' (X' = (x',y), X'' = (x'',y)) and the vertical
/// segment Y'Y'' (Y' = (x,y'), Y'' = (x,y'')) in the rectangle
/// [0, 2c1] x [0, c2].
struct Worm {
    int xp, y, xpp; // x', y, x''
    int yp, x, ypp; // y', x, y''

    friend bool operator==(const Worm&, const Worm&) = default;
    friend auto operator<=>(const Worm&, const Worm&) = default;

    std::array<int, 6> tuple() const { return {xp, y, xpp, yp, x, ypp}; }
};

/// Degenerate worms belong to several sorts at once, so the sort is computed
/// on demand rather than stored.
struct WormSorts {
    bool v, vh, hv, h;
};

inline WormSorts worm_sorts(const Worm& w) {
    return {w.xp == w.xpp,                 // V: the horizontal limb is a point
            w.y == w.ypp && w.x == w.xp,   // VH: Y'' = X'
            w.y == w.yp && w.x == w.xpp,   // HV: X'' = Y'
            w.yp == w.ypp};                // H: the vertical limb is a point
}

inline std::optional<std::string> worm_violation(const Worm& w, int c1, int c2) {
    auto in = [](int v, int lo, int hi) { return lo <= v && v <= hi; };
    if (!in(w.x, 0, 2 * c1) || !in(w.xp, 0, 2 * c1) || !in(w.xpp, 0, 2 * c1) ||
        !in(w.y, 0, c2) || !in(w.yp, 0, c2) || !in(w.ypp, 0, c2))
        return "coordinate outside the rectangle";
    if (w.xp % 2 != 0 || w.xpp % 2 != 0) return "x' and x'' must be even";
    if (!(w.yp <= w.y && w.y <= w.ypp)) return "y' <= y <= y'' violated";
    if (!(w.xp <= w.x && w.x <= w.xpp)) return "x' <= x <= x'' violated";
    if (w.yp < w.y && w.xp != w.x) return "y' < y requires x' = x";
    if (w.y < w.ypp && w.x != w.xpp) return "y < y'' requires x = x''";
    return std::nullopt;
}

inline bool worm_admissible(const Worm& w, int c1, int c2) {
    return !worm_violation(w, c1, c2).has_value();
}

/// One worm move. Color 1: the farther end of the horizontal limb advances by
/// two (X'' on ties), or the crossing point climbs inside a vertical worm.
/// Color 2 is the vertical counterpart with unit steps. Returns nothing when
/// the step would leave the rectangle.
inline std::optional<Worm> worm_apply(const Worm& w, Color color, int c1, int c2) {
    if (auto why = worm_violation(w, c1, c2))
        throw input_error("worm_apply: inadmissible worm: " + *why);
    if (color != 1 && color != 2) throw input_error("worm_apply: color must be 1 or 2");
    Worm t = w;
    if (color == 1) {
        if (2 * w.x > w.xp + w.xpp) t.xp += 2;
        else if (w.x == w.xp && w.x == w.xpp && w.ypp > w.y) t.y += 1;
        else t.xpp += 2;
    } else {
        if (2 * w.y > w.yp + w.ypp) t.yp += 1;
        else if (w.ypp == w.y && w.y == w.yp && w.xpp > w.x) t.x += 1;
        else t.ypp += 1;
    }
    if (auto why = worm_violation(t, c1, c2)) {
        (void)why;
        return std::nullopt; // boundary reached; the operator does not act
    }
    return t;
}

/// The B_2-crystal with parameter (c1,c2) as the worm graph W(c1,c2):
/// vertices are all admissible six-tuples, edges come from worm_apply. The
/// vertex set is produced by direct enumeration; BFS reachability from the
/// all-zero worm is then checked against it, which doubles as a
/// connectivity test of the construction.
inline Crystal worm_generate(int c1, int c2) {
    if (c1 < 0 || c2 < 0) throw input_error("worm_generate: parameter must be nonnegative");
    std::map<std::array<int, 6>, VertexId> index;
    std::vector<Worm> worms;
    for (int xp = 0; xp <= 2 * c1; xp += 2)
        for (int xpp = xp; xpp <= 2 * c1; xpp += 2)
            for (int x = xp; x <= xpp; ++x)
                for (int y = 0; y <= c2; ++y) {
                    // y' < y only allowed when x = x'; same for y'' above
                    const int yp_min = (x == xp) ? 0 : y;
                    const int ypp_max = (x == xpp) ? c2 : y;
                    for (int yp = yp_min; yp <= y; ++yp)
                        for (int ypp = y; ypp <= ypp_max; ++ypp) {
                            Worm w{xp, y, xpp, yp, x, ypp};
                            assert(worm_admissible(w, c1, c2));
                            index.emplace(w.tuple(), static_cast<VertexId>(worms.size()));
                            worms.push_back(w);
                        }
                }

    std::vector<Edge> edges;
    for (std::size_t from = 0; from < worms.size(); ++from)
        for (Color color : {1, 2})
            if (auto next = worm_apply(worms[from], color, c1, c2)) {
                const auto it = index.find(next->tuple());
                if (it == index.end())
                    throw malformed_crystal_error("worm move left the enumerated vertex set");
                edges.push_back({static_cast<VertexId>(from), it->second, color});
            }

    Crystal raw = make_crystal(2, static_cast<VertexId>(worms.size()), std::move(edges));
    const auto zero_it = index.find(std::array<int, 6>{0, 0, 0, 0, 0, 0});
    assert(zero_it != index.end());
    const auto order = detail::canonical_order(raw, zero_it->second);
    for (VertexId v = 0; v < raw.vertex_count(); ++v)
        if (order[v] == kNoVertex)
            throw malformed_crystal_error("worm graph is not connected from the zero worm");
    return with_meta(canonical_form(raw, zero_it->second), Family::B, {c1, c2});
}

} // namespace crystals
