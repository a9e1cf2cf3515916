#pragma once

#include <optional>
#include <vector>

#include <crystals/crystal.hpp>
#include <crystals/errors.hpp>
#include <crystals/lattice.hpp>
#include <crystals/worm.hpp>

namespace crystals {

namespace detail {

inline void require_palindromic(const std::vector<int>& c, const char* who) {
    for (std::size_t t = 0; t < c.size(); ++t)
        if (c[t] != c[c.size() - 1 - t])
            throw input_error(std::string(who) + ": parameter is not palindromic");
}

} // namespace detail

/// A palindromic-parameter A-crystal together with its complementarity
/// involution sigma (color i maps to i' = m+1-i, where m is the color count).
struct SymmetricCrystal {
    Crystal base;
    std::vector<VertexId> sigma;

    int color_count() const { return base.colors(); }
    int pair_count() const { return (base.colors() + 1) / 2; } // colors of the extract
    Color complement(Color i) const { return base.colors() + 1 - i; }
    bool self_complementary(VertexId v) const { return sigma[v] == v; }
};

/// Computes sigma by synchronized traversal of K against its
/// color-complemented self: the vertex reached by a word from the source maps
/// to the vertex reached by the complementary word.
inline SymmetricCrystal complementarity(const Crystal& k) {
    const Meta& m = detail::require_family_A(k, "complementarity");
    detail::require_palindromic(m.c, "complementarity");
    const int nc = k.colors();
    std::vector<VertexId> sigma(k.vertex_count(), kNoVertex);
    sigma[m.source] = m.source;
    std::vector<VertexId> stack{m.source};
    while (!stack.empty()) {
        const VertexId u = stack.back();
        stack.pop_back();
        for (Color i = 1; i <= nc; ++i) {
            const VertexId v = k.succ(u, i);
            if (v == kNoVertex) continue;
            const VertexId w = k.succ(sigma[u], nc + 1 - i);
            if (w == kNoVertex)
                throw malformed_crystal_error("complementarity: complementary edge missing");
            if (sigma[v] == kNoVertex) {
                sigma[v] = w;
                stack.push_back(v);
            } else if (sigma[v] != w) {
                throw malformed_crystal_error("complementarity: traversal is inconsistent");
            }
        }
    }
    for (VertexId v = 0; v < k.vertex_count(); ++v)
        if (sigma[v] == kNoVertex || sigma[sigma[v]] != v)
            throw malformed_crystal_error("complementarity: sigma is not a total involution");
    return {k, std::move(sigma)};
}

/// Cross-check route for sigma: relabel every color by its complement and ask
/// for the isomorphism onto the original crystal.
inline std::vector<VertexId> sigma_by_relabel(const Crystal& k) {
    const Meta& m = detail::require_family_A(k, "sigma_by_relabel");
    detail::require_palindromic(m.c, "sigma_by_relabel");
    std::vector<Color> remap(k.colors());
    for (Color i = 1; i <= k.colors(); ++i) remap[i - 1] = k.colors() + 1 - i;
    Crystal flipped = relabel_colors(k, remap);
    auto map = detail::iso_map(k, with_meta(canonical_form(flipped, m.source), Family::A, m.c));
    if (!map) throw malformed_crystal_error("sigma_by_relabel: crystal is not symmetric");
    // the relabeled copy was canonicalized from the same source, so compose
    // with that renumbering to land back in the original ids
    const auto renumber = detail::canonical_order(flipped, m.source);
    std::vector<VertexId> inverse(k.vertex_count());
    for (VertexId v = 0; v < k.vertex_count(); ++v) inverse[renumber[v]] = v;
    std::vector<VertexId> sigma(k.vertex_count());
    for (VertexId v = 0; v < k.vertex_count(); ++v) sigma[v] = inverse[(*map)[v]];
    return sigma;
}

/// An extract together with the map from its vertex ids back to the ids of
/// the symmetric base crystal.
struct ExtractResult {
    Crystal crystal;
    std::vector<VertexId> to_base;
};

namespace detail {

// Shared edge construction for both extracts. The color-n edge rule is the
// only difference: B uses the plain n-edge, C the degree-4 word F_n F_{n'}^2 F_n.
inline ExtractResult extract_symmetric(const SymmetricCrystal& sym, Family family) {
    const Crystal& k = sym.base;
    const int n = sym.pair_count();
    std::vector<VertexId> extract_id(k.vertex_count(), kNoVertex);
    std::vector<VertexId> members;
    for (VertexId v = 0; v < k.vertex_count(); ++v)
        if (sym.self_complementary(v)) {
            extract_id[v] = static_cast<VertexId>(members.size());
            members.push_back(v);
        }

    std::vector<Edge> edges;
    for (VertexId u : members) {
        for (Color i = 1; i < n; ++i) {
            const Color ic = sym.complement(i);
            const VertexId x = k.succ(u, i);
            if (x == kNoVertex) continue;
            const VertexId y = k.succ(u, ic);
            // both orders must land on the same self-complementary vertex
            if (y == kNoVertex)
                throw malformed_crystal_error("extract: complementary operator does not act");
            const VertexId v1 = k.succ(x, ic);
            const VertexId v2 = k.succ(y, i);
            if (v1 == kNoVertex || v1 != v2)
                throw malformed_crystal_error("extract: paired operators do not commute");
            if (extract_id[v1] == kNoVertex)
                throw malformed_crystal_error("extract: paired move left the symmetric set");
            edges.push_back({extract_id[u], extract_id[v1], i});
        }
        if (family == Family::B) {
            const VertexId v = k.succ(u, n);
            if (v != kNoVertex && extract_id[v] != kNoVertex)
                edges.push_back({extract_id[u], extract_id[v], n});
        } else {
            VertexId v = k.succ(u, n);
            if (v != kNoVertex) v = k.succ(v, n + 1);
            if (v != kNoVertex) v = k.succ(v, n + 1);
            if (v != kNoVertex) v = k.succ(v, n);
            if (v != kNoVertex && extract_id[v] != kNoVertex)
                edges.push_back({extract_id[u], extract_id[v], n});
        }
    }
    std::vector<int> par(k.meta()->c.begin(), k.meta()->c.begin() + n);
    Crystal raw = make_crystal(n, static_cast<VertexId>(members.size()), std::move(edges));
    const VertexId raw_source = extract_id[k.meta()->source];
    const auto renumber = canonical_order(raw, raw_source);
    ExtractResult out;
    out.crystal = with_meta(canonical_form(raw, raw_source), family, std::move(par));
    out.to_base.assign(members.size(), kNoVertex);
    for (std::size_t t = 0; t < members.size(); ++t) out.to_base[renumber[t]] = members[t];
    return out;
}

} // namespace detail

/// The symmetric extract from a symmetric A_{2n-1}-crystal: vertices are the
/// self-complementary ones; color i < n pairs F_i with F_{i'}, color n keeps
/// the plain n-edges inside S. The result is the B_n-crystal B(c_1..c_n).
inline ExtractResult extract_B_indexed(const SymmetricCrystal& sym) {
    if (sym.color_count() % 2 != 1)
        throw input_error("extract_B needs an odd number of colors (A_{2n-1})");
    return detail::extract_symmetric(sym, Family::B);
}

inline Crystal extract_B(const SymmetricCrystal& sym) { return extract_B_indexed(sym).crystal; }

/// The symmetric extract from a symmetric A_{2n}-crystal; the n-colored edges
/// come from the word F_n F_{n+1}^2 F_n between self-complementary vertices.
/// The result is the C_n-crystal C(c_1..c_n).
inline ExtractResult extract_C_indexed(const SymmetricCrystal& sym) {
    if (sym.color_count() % 2 != 0)
        throw input_error("extract_C needs an even number of colors (A_{2n})");
    return detail::extract_symmetric(sym, Family::C);
}

inline Crystal extract_C(const SymmetricCrystal& sym) { return extract_C_indexed(sym).crystal; }

// --- descriptions of self-complementary vertices (n = 2 cases) -------------

/// Locus data of a self-complementary vertex v of a symmetric A_3-crystal:
/// a = locus of the upper subcrystal containing v, delta = Delta_1 of the
/// middle 2-path's deviation, ell = position of v along that path.
struct BDescription {
    int a1, a2, delta, ell;

    friend bool operator==(const BDescription&, const BDescription&) = default;
    friend auto operator<=>(const BDescription&, const BDescription&) = default;
};

/// Same for a symmetric A_4-crystal; rho is the diagonal index of v in its
/// middle subcrystal's principal lattice.
struct CDescription {
    int a1, a2, delta, rho;

    friend bool operator==(const CDescription&, const CDescription&) = default;
    friend auto operator<=>(const CDescription&, const CDescription&) = default;
};

namespace detail {

// locus + deviation of the middle subcrystal containing each vertex of S,
// derived from the decomposition machinery (not from worms)
struct MiddleLocation {
    std::vector<int> a;     // upper locus in B(c)
    std::vector<int> delta; // deviation of the middle's lattice vertex
    // the middle component, as local ids of the upper subcrystal extract,
    // plus the extract's map back to ambient ids
    std::vector<VertexId> component_local;
    std::vector<VertexId> to_ambient;
};

template <typename Fn>
void for_each_symmetric_vertex_location(const SymmetricCrystal& sym, Fn&& fn) {
    const Crystal& k = sym.base;
    const int m = k.colors();
    const auto uppers = decompose(k, Side::Upper);
    std::vector<Color> upper_colors, middle_colors;
    for (Color i = 1; i <= m - 1; ++i) upper_colors.push_back(i);
    for (Color i = 2; i <= m - 1; ++i) middle_colors.push_back(i);

    for (const auto& h : uppers) {
        bool any = false;
        for (VertexId v : h.vertices) any = any || sym.self_complementary(v);
        if (!any) continue;
        auto sub = extract_subgraph(k, h.vertices, upper_colors);
        LatticeMap lattice(sub.crystal, h.parameter, sub.crystal.source());
        // components on the middle colors (extracted ids coincide with colors 1..m-1)
        auto comps = color_components(sub.crystal, middle_colors);
        for (auto& comp : comps) {
            bool holds_s = false;
            for (VertexId lv : comp) holds_s = holds_s || sym.self_complementary(sub.to_ambient[lv]);
            if (!holds_s) continue;
            std::optional<std::vector<int>> coord;
            for (VertexId lv : comp)
                if (auto cc = lattice.coordinate(lv)) {
                    if (coord) throw malformed_crystal_error("middle with two lattice vertices");
                    coord = *cc;
                }
            if (!coord) throw malformed_crystal_error("middle without a lattice vertex");
            MiddleLocation loc;
            loc.a = h.locus;
            loc.delta.resize(m - 1);
            for (int t = 0; t < m - 1; ++t) loc.delta[t] = (*coord)[t] - h.heart_coord[t];
            loc.component_local = comp;
            loc.to_ambient = sub.to_ambient;
            fn(loc);
        }
    }
}

} // namespace detail

/// Descriptions for every self-complementary vertex of a symmetric
/// A_3-crystal, indexed by ambient vertex id (nullopt off S).
inline std::vector<std::optional<BDescription>> describe_all_B(const SymmetricCrystal& sym) {
    if (sym.color_count() != 3) throw input_error("describe_B expects a symmetric A_3-crystal");
    const Crystal& k = sym.base;
    std::vector<std::optional<BDescription>> out(k.vertex_count());
    detail::for_each_symmetric_vertex_location(sym, [&](const detail::MiddleLocation& loc) {
        const int delta = loc.delta[0];
        if (loc.delta[1] != -delta)
            throw malformed_crystal_error("describe_B: deviation is not (delta,-delta)");
        for (VertexId lv : loc.component_local) {
            const VertexId v = loc.to_ambient[lv];
            if (!sym.self_complementary(v)) continue;
            const int ell = head_tail(k, v, 2).tail;
            out[v] = BDescription{loc.a[0], loc.a[1], delta, ell};
        }
    });
    return out;
}

inline BDescription describe_B(const SymmetricCrystal& sym, VertexId v) {
    sym.base.check_vertex(v);
    if (!sym.self_complementary(v)) throw input_error("describe_B: vertex is not self-complementary");
    const auto all = describe_all_B(sym);
    return *all[v];
}

/// Descriptions for every self-complementary vertex of a symmetric
/// A_4-crystal.
inline std::vector<std::optional<CDescription>> describe_all_C(const SymmetricCrystal& sym) {
    if (sym.color_count() != 4) throw input_error("describe_C expects a symmetric A_4-crystal");
    const Crystal& k = sym.base;
    std::vector<std::optional<CDescription>> out(k.vertex_count());
    detail::for_each_symmetric_vertex_location(sym, [&](const detail::MiddleLocation& loc) {
        const int delta = loc.delta[0];
        if (loc.delta[1] != 0 || loc.delta[2] != -delta)
            throw malformed_crystal_error("describe_C: deviation is not (delta,0,-delta)");
        // the middle subcrystal is a symmetric A_2-crystal on ambient colors
        // 2,3; self-complementary vertices sit on the diagonal of its lattice
        std::vector<VertexId> ambient;
        for (VertexId lv : loc.component_local) ambient.push_back(loc.to_ambient[lv]);
        std::sort(ambient.begin(), ambient.end());
        auto mid = extract_subgraph(k, ambient, {2, 3});
        const auto par = middle_params(k.meta()->c, loc.a, loc.delta).parameter; // (c2+delta, c2+delta)
        LatticeMap lattice(mid.crystal, par, mid.crystal.source());
        for (VertexId lv = 0; lv < mid.crystal.vertex_count(); ++lv) {
            const VertexId v = mid.to_ambient[lv];
            if (!sym.self_complementary(v)) continue;
            const auto coord = lattice.coordinate(lv);
            if (!coord || (*coord)[0] != (*coord)[1])
                throw malformed_crystal_error("describe_C: S-vertex off the middle diagonal");
            out[v] = CDescription{loc.a[0], loc.a[1], delta, (*coord)[0]};
        }
    });
    return out;
}

inline CDescription describe_C(const SymmetricCrystal& sym, VertexId v) {
    sym.base.check_vertex(v);
    if (!sym.self_complementary(v)) throw input_error("describe_C: vertex is not self-complementary");
    const auto all = describe_all_C(sym);
    return *all[v];
}

/// Integer solutions of the B-description polytope
/// 0<=a1<=c1, 0<=a2<=c2, -a2,-c2+a2 <= delta <= c1-a1, 0 <= ell <= c2+2*delta.
inline std::vector<BDescription> enumerate_B(int c1, int c2) {
    if (c1 < 0 || c2 < 0) throw input_error("enumerate_B: negative parameter");
    std::vector<BDescription> out;
    for (int a1 = 0; a1 <= c1; ++a1)
        for (int a2 = 0; a2 <= c2; ++a2)
            for (int delta = std::max(-a2, -c2 + a2); delta <= c1 - a1; ++delta)
                for (int ell = 0; ell <= c2 + 2 * delta; ++ell)
                    out.push_back({a1, a2, delta, ell});
    return out;
}

/// Integer solutions of the C-description polytope
/// 0<=a1<=c1, 0<=a2<=c2, -a2 <= delta <= c1-a1, 0 <= rho <= c2+delta.
inline std::vector<CDescription> enumerate_C(int c1, int c2) {
    if (c1 < 0 || c2 < 0) throw input_error("enumerate_C: negative parameter");
    std::vector<CDescription> out;
    for (int a1 = 0; a1 <= c1; ++a1)
        for (int a2 = 0; a2 <= c2; ++a2)
            for (int delta = -a2; delta <= c1 - a1; ++delta)
                for (int rho = 0; rho <= c2 + delta; ++rho)
                    out.push_back({a1, a2, delta, rho});
    return out;
}

inline void check_description(const BDescription& d, int c1, int c2) {
    if (d.a1 < 0 || d.a1 > c1 || d.a2 < 0 || d.a2 > c2 ||
        d.delta < std::max(-d.a2, -c2 + d.a2) || d.delta > c1 - d.a1 || d.ell < 0 ||
        d.ell > c2 + 2 * d.delta)
        throw input_error("invalid B-description");
}

inline void check_description(const CDescription& d, int c1, int c2) {
    if (d.a1 < 0 || d.a1 > c1 || d.a2 < 0 || d.a2 > c2 || d.delta < -d.a2 ||
        d.delta > c1 - d.a1 || d.rho < 0 || d.rho > c2 + d.delta)
        throw input_error("invalid C-description");
}

/// The worm of a B-description in W(c1,c2). The horizontal limb connects
/// (2a1,a2) and (2a3,a2) with a3 = a1 + delta^+; the vertical part depends on
/// where ell sits relative to a2 and a2 + 2*delta.
inline Worm worm_of_B(const BDescription& d, int c1, int c2) {
    check_description(d, c1, c2);
    const int a3 = d.a1 + std::max(d.delta, 0);
    Worm w{};
    w.xp = 2 * d.a1;
    w.xpp = 2 * a3;
    w.y = d.a2;
    if (d.delta >= 0) {
        if (d.ell < d.a2) { // VH: lower limb from (2a1, ell) up to X'
            w.x = 2 * d.a1;
            w.yp = d.ell;
            w.ypp = d.a2;
        } else if (d.ell <= d.a2 + 2 * d.delta) { // H: Y inside the horizontal limb
            w.x = 2 * d.a1 + d.ell - d.a2;
            w.yp = w.ypp = d.a2;
        } else { // HV: upper limb from X'' up to (2a3, ell - 2delta)
            w.x = 2 * a3;
            w.yp = d.a2;
            w.ypp = d.ell - 2 * d.delta;
        }
    } else { // V-worm at x = 2a1
        w.x = 2 * d.a1;
        if (d.ell <= d.a2 + d.delta) {
            w.yp = d.ell;
            w.ypp = d.a2 - d.delta;
        } else {
            w.yp = d.a2 + d.delta;
            w.ypp = d.ell - 2 * d.delta;
        }
    }
    if (auto why = worm_violation(w, c1, c2))
        throw malformed_crystal_error("worm_of_B produced an inadmissible worm: " + *why);
    return w;
}

/// The worm of a C-description, living in the swapped rectangle W(c2,c1):
/// Y' = (a2+a3, a1), Y'' = (a2+a3, a4), and the horizontal limb given by
/// X' = (2 min(rho,a3), y), X'' = (2a2 + 2(rho-a2-delta)^+, y) with
/// y = a1 + min((rho-a3)^+, delta^+).
inline Worm worm_of_C(const CDescription& d, int c1, int c2) {
    check_description(d, c1, c2);
    const int a3 = d.a2 + std::min(d.delta, 0);
    const int a4 = d.a1 + std::max(d.delta, 0);
    Worm w{};
    w.x = d.a2 + a3;
    w.yp = d.a1;
    w.ypp = a4;
    w.y = d.a1 + std::min(std::max(d.rho - a3, 0), std::max(d.delta, 0));
    w.xp = 2 * std::min(d.rho, a3);
    w.xpp = 2 * d.a2 + 2 * std::max(d.rho - d.a2 - d.delta, 0);
    if (auto why = worm_violation(w, c2, c1))
        throw malformed_crystal_error("worm_of_C produced an inadmissible worm: " + *why);

    // equivalent case form, kept as a cross-check of the formulas
    Worm cases{};
    const int j0 = 2 * a3, j1 = 2 * d.a2;
    if (d.delta <= 0) { // H-worm on the line y = a1
        cases.y = cases.yp = cases.ypp = d.a1;
        cases.x = (j0 + j1) / 2;
        if (d.rho <= a3) {
            cases.xp = 2 * d.rho;
            cases.xpp = j1;
        } else {
            cases.xp = j0;
            cases.xpp = j1 + 2 * (d.rho - a3);
        }
    } else { // vertical limb J0J1 at x = 2a3
        cases.x = 2 * a3;
        cases.yp = d.a1;
        cases.ypp = a4;
        if (d.rho <= a3) { // HV
            cases.xp = 2 * d.rho;
            cases.xpp = 2 * a3;
            cases.y = d.a1;
        } else if (d.rho <= a3 + d.delta) { // V
            cases.xp = cases.xpp = 2 * a3;
            cases.y = d.a1 + d.rho - a3;
        } else { // VH
            cases.xp = 2 * a3;
            cases.xpp = 2 * a3 + 2 * (d.rho - a3 - d.delta);
            cases.y = a4;
        }
    }
    if (!(w == cases))
        throw malformed_crystal_error("worm_of_C: closed form and case form disagree");
    return w;
}

/// Maximal 1-colored head length of a self-complementary vertex in the
/// B-extract, in closed form; the operator acts iff the value is positive.
inline int omega(const BDescription& d, int c1, int c2) {
    check_description(d, c1, c2);
    return c1 - d.a1 - d.delta + d.ell - std::min(d.ell, d.a2 + d.delta);
}

/// The C-extract counterpart.
inline int omega_prime(const CDescription& d, int c1, int c2) {
    check_description(d, c1, c2);
    const int phi = d.rho - d.a2 - d.delta;
    const int psi = d.rho - d.a2 - std::min(d.delta, 0);
    return c1 - d.a1 - d.delta + std::max(phi, 0) +
           std::max(std::min(phi, 0) + std::max(psi, 0), 0);
}

} // namespace crystals
