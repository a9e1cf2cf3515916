#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include <crystals/crystal.hpp>
#include <crystals/errors.hpp>

namespace crystals {

// --- integer boxes ---------------------------------------------------------

inline void check_in_box(const std::vector<int>& a, const std::vector<int>& c,
                         const char* what = "coordinate") {
    if (a.size() != c.size()) throw input_error(std::string(what) + ": size mismatch");
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t] < 0 || a[t] > c[t])
            throw input_error(std::string(what) + " outside the box 0..c");
}

inline std::size_t box_size(const std::vector<int>& c) {
    std::size_t s = 1;
    for (int ci : c) s *= static_cast<std::size_t>(ci) + 1;
    return s;
}

// Runs fn over every integer point of [lo, hi], lexicographically ascending.
template <typename Fn>
void for_each_box_point(const std::vector<int>& lo, const std::vector<int>& hi, Fn&& fn) {
    std::vector<int> a = lo;
    for (std::size_t t = 0; t < lo.size(); ++t)
        if (lo[t] > hi[t]) return;
    while (true) {
        fn(const_cast<const std::vector<int>&>(a));
        std::size_t t = a.size();
        while (t > 0) {
            --t;
            if (a[t] < hi[t]) {
                ++a[t];
                for (std::size_t r = t + 1; r < a.size(); ++r) a[r] = lo[r];
                break;
            }
            if (t == 0) return;
        }
        if (a.size() == 0) return;
    }
}

// --- operator strings ------------------------------------------------------

/// The principal string S_{n,k} as the sequence of colors in application
/// order (front() acts first). S_{n,k} is the concatenation of the substrings
/// w_{n,k,j} = F_j F_{j+1} ... F_{j+k-1} for j = 1..n-k+1, each substring
/// acting from its highest color down.
inline std::vector<Color> principal_string(int n, int k) {
    if (n < 1) throw input_error("principal_string: n must be positive");
    if (k < 1 || k > n) throw input_error("principal_string: k out of range");
    std::vector<Color> word;
    word.reserve(static_cast<std::size_t>(k) * (n - k + 1));
    for (int j = 1; j <= n - k + 1; ++j)
        for (int t = j + k - 1; t >= j; --t) word.push_back(t);
    return word;
}

/// Follows a word of forward operators; malformed-crystal error on a missing
/// edge (the caller promised the word is applicable).
inline VertexId apply_word(const Crystal& k, VertexId v, const std::vector<Color>& word) {
    for (Color i : word) {
        const VertexId next = k.succ(v, i);
        if (next == kNoVertex)
            throw malformed_crystal_error("operator string not applicable: F_" + std::to_string(i) +
                                          " undefined at vertex " + std::to_string(v));
        v = next;
    }
    return v;
}

// --- principal lattice -----------------------------------------------------

/// The map a -> p[a] over the box B(c), with its inverse.
class LatticeMap {
  public:
    LatticeMap() = default;

    /// Builds the lattice of a crystal with the given parameter, walking
    /// principal strings from `source`. Works on raw extracted subcrystals,
    /// which is why the parameter is passed explicitly.
    LatticeMap(const Crystal& k, std::vector<int> c, VertexId source) : c_(std::move(c)) {
        const int n = static_cast<int>(c_.size());
        if (n != k.colors()) throw input_error("lattice: parameter/color count mismatch");
        strides_.assign(n, 1);
        for (int t = n - 2; t >= 0; --t) strides_[t] = strides_[t + 1] * (c_[t + 1] + 1);
        vertex_.assign(box_size(c_), kNoVertex);
        std::vector<std::vector<Color>> strings;
        for (int kk = 1; kk <= n; ++kk) strings.push_back(principal_string(n, kk));
        std::vector<int> lo(n, 0);
        for_each_box_point(lo, c_, [&](const std::vector<int>& a) {
            VertexId v;
            int first = -1;
            for (int t = 0; t < n && first < 0; ++t)
                if (a[t] > 0) first = t;
            if (first < 0) {
                v = source;
            } else {
                std::vector<int> prev = a;
                --prev[first];
                v = apply_word(k, vertex_[flat(prev)], strings[first]);
            }
            vertex_[flat(a)] = v;
            coord_of_.emplace(v, a);
        });
    }

    const std::vector<int>& box() const { return c_; }

    VertexId at(const std::vector<int>& a) const {
        check_in_box(a, c_, "principal coordinate");
        return vertex_[flat(a)];
    }

    std::optional<std::vector<int>> coordinate(VertexId v) const {
        const auto it = coord_of_.find(v);
        if (it == coord_of_.end()) return std::nullopt;
        return it->second;
    }

    bool contains(VertexId v) const { return coord_of_.count(v) > 0; }
    std::size_t size() const { return vertex_.size(); }

  private:
    std::size_t flat(const std::vector<int>& a) const {
        std::size_t idx = 0;
        for (std::size_t t = 0; t < a.size(); ++t) idx += static_cast<std::size_t>(a[t]) * strides_[t];
        return idx;
    }

    std::vector<int> c_;
    std::vector<std::size_t> strides_;
    std::vector<VertexId> vertex_;
    std::unordered_map<VertexId, std::vector<int>> coord_of_;
};

namespace detail {

inline const Meta& require_family_A(const Crystal& k, const char* who) {
    if (!k.meta() || k.meta()->family != Family::A)
        throw input_error(std::string(who) + ": crystal must carry A-family meta");
    return *k.meta();
}

} // namespace detail

inline LatticeMap build_lattice_map(const Crystal& k) {
    const Meta& m = detail::require_family_A(k, "build_lattice_map");
    return LatticeMap(k, m.c, m.source);
}

/// p[a], reached from the source by the commuting strings S_{n,k}^{a_k}.
inline VertexId principal_vertex(const Crystal& k, const std::vector<int>& a) {
    const Meta& m = detail::require_family_A(k, "principal_vertex");
    check_in_box(a, m.c, "principal coordinate");
    const int n = k.colors();
    VertexId v = m.source;
    for (int kk = 1; kk <= n; ++kk) {
        const auto word = principal_string(n, kk);
        for (int rep = 0; rep < a[kk - 1]; ++rep) v = apply_word(k, v, word);
    }
    return v;
}

// --- subcrystals -----------------------------------------------------------

enum class Side { Upper, Lower };

struct SubcrystalHandle {
    enum class Kind { Upper, Lower, Middle, Interval, CI } kind;
    int color_lo = 1, color_hi = 1;   // contiguous ambient color interval
    std::vector<VertexId> vertices;   // ambient ids, sorted
    std::vector<int> parameter;       // head lengths at the subcrystal source
    VertexId heart = kNoVertex;       // the unique principal vertex inside
    std::vector<int> locus;           // a (upper) or b (lower)
    std::vector<int> heart_coord;     // coordinate of the heart inside the subcrystal
};

/// Parameter and heart coordinate of an upper/lower subcrystal at `locus`.
/// Upper: (c_i - a_i + a_{i+1}; a_{i+1}) for i = 1..n-1.
/// Lower: (c_i - b_i + b_{i-1}; b_{i-1}) for i = 2..n.
inline std::pair<std::vector<int>, std::vector<int>>
subcrystal_params(const std::vector<int>& c, const std::vector<int>& locus, Side side) {
    check_in_box(locus, c, "locus");
    const int n = static_cast<int>(c.size());
    std::vector<int> par(n - 1), heart(n - 1);
    for (int t = 0; t < n - 1; ++t) {
        if (side == Side::Upper) { // entry t is color t+1
            par[t] = c[t] - locus[t] + locus[t + 1];
            heart[t] = locus[t + 1];
        } else { // entry t is color t+2
            par[t] = c[t + 1] - locus[t + 1] + locus[t];
            heart[t] = locus[t];
        }
    }
    return {par, heart};
}

/// Maximal connected subgraphs on colors 1..n-1 (upper) or 2..n (lower); each
/// contains exactly one principal vertex, its heart. Ordered by locus.
inline std::vector<SubcrystalHandle> decompose(const Crystal& k, Side side) {
    const Meta& m = detail::require_family_A(k, "decompose");
    const int n = k.colors();
    if (n < 1) throw input_error("decompose: empty crystal");
    std::vector<Color> colors;
    for (Color i = (side == Side::Upper ? 1 : 2); i <= (side == Side::Upper ? n - 1 : n); ++i)
        colors.push_back(i);
    const LatticeMap lattice = build_lattice_map(k);
    auto comps = color_components(k, colors);
    std::map<std::vector<int>, SubcrystalHandle> by_locus;
    for (auto& comp : comps) {
        SubcrystalHandle h;
        h.kind = side == Side::Upper ? SubcrystalHandle::Kind::Upper : SubcrystalHandle::Kind::Lower;
        h.color_lo = side == Side::Upper ? 1 : 2;
        h.color_hi = side == Side::Upper ? n - 1 : n;
        for (VertexId v : comp) {
            if (auto coord = lattice.coordinate(v)) {
                if (h.heart != kNoVertex)
                    throw malformed_crystal_error("component with two principal vertices");
                h.heart = v;
                h.locus = *coord;
            }
        }
        if (h.heart == kNoVertex)
            throw malformed_crystal_error("component without a principal vertex");
        auto [par, hc] = subcrystal_params(m.c, h.locus, side);
        h.parameter = std::move(par);
        h.heart_coord = std::move(hc);
        h.vertices = std::move(comp);
        by_locus.emplace(h.locus, std::move(h));
    }
    if (by_locus.size() != box_size(m.c))
        throw malformed_crystal_error("subcrystal count does not match the principal box");
    std::vector<SubcrystalHandle> out;
    out.reserve(by_locus.size());
    for (auto& [locus, h] : by_locus) out.push_back(std::move(h));
    return out;
}

/// The interval of K from p[a] to p[a']: the subgraph of vertices and edges
/// on directed paths between them, extracted as a crystal of its own
/// (isomorphic to K(a'-a)).
inline std::pair<SubcrystalHandle, Crystal> interval(const Crystal& k, const std::vector<int>& a,
                                                     const std::vector<int>& a2) {
    const Meta& m = detail::require_family_A(k, "interval");
    check_in_box(a, m.c, "a");
    check_in_box(a2, m.c, "a'");
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t] > a2[t]) throw input_error("interval requires a <= a'");
    const VertexId lo = principal_vertex(k, a);
    const VertexId hi = principal_vertex(k, a2);

    auto reach = [&](VertexId start, bool forward) {
        std::vector<char> seen(k.vertex_count(), 0);
        std::vector<VertexId> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const VertexId u = stack.back();
            stack.pop_back();
            for (Color i = 1; i <= k.colors(); ++i) {
                const VertexId v = forward ? k.succ(u, i) : k.pred(u, i);
                if (v != kNoVertex && !seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        return seen;
    };
    const auto fwd = reach(lo, true);
    const auto bwd = reach(hi, false);
    std::vector<VertexId> vertices;
    for (VertexId v = 0; v < k.vertex_count(); ++v)
        if (fwd[v] && bwd[v]) vertices.push_back(v);

    std::vector<Color> colors;
    for (Color i = 1; i <= k.colors(); ++i) colors.push_back(i);
    auto sub = extract_subgraph(k, vertices, colors);
    // local id of lo is its position in the sorted vertex list
    const VertexId local_lo =
        static_cast<VertexId>(std::lower_bound(vertices.begin(), vertices.end(), lo) - vertices.begin());
    std::vector<int> par(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) par[t] = a2[t] - a[t];
    Crystal out = with_meta(canonical_form(sub.crystal, local_lo), Family::A, par);

    SubcrystalHandle h;
    h.kind = SubcrystalHandle::Kind::Interval;
    h.color_lo = 1;
    h.color_hi = k.colors();
    h.vertices = std::move(vertices);
    h.parameter = std::move(par);
    h.heart = lo;
    h.locus = a;
    return {std::move(h), std::move(out)};
}

// --- the zeta map ----------------------------------------------------------

/// Deviation boxes: an upper deviation (indexed 1..n-1) lives in
/// -a_{i+1} <= Delta_i <= c_i - a_i; a lower deviation (indexed 2..n, stored
/// at position i-2) lives in -b_{i-1} <= nabla_i <= c_i - b_i.
inline void check_upper_deviation(const std::vector<int>& c, const std::vector<int>& a,
                                  const std::vector<int>& dev) {
    const int n = static_cast<int>(c.size());
    check_in_box(a, c, "a");
    if (static_cast<int>(dev.size()) != n - 1) throw input_error("deviation size mismatch");
    for (int i = 1; i <= n - 1; ++i)
        if (dev[i - 1] < -a[i] || dev[i - 1] > c[i - 1] - a[i - 1])
            throw input_error("deviation outside its box");
}

inline void check_lower_deviation(const std::vector<int>& c, const std::vector<int>& b,
                                  const std::vector<int>& nab) {
    const int n = static_cast<int>(c.size());
    check_in_box(b, c, "b");
    if (static_cast<int>(nab.size()) != n - 1) throw input_error("deviation size mismatch");
    for (int i = 2; i <= n; ++i)
        if (nab[i - 2] < -b[i - 2] || nab[i - 2] > c[i - 1] - b[i - 1])
            throw input_error("deviation outside its box");
}

struct LowerLocus {
    std::vector<int> b;
    std::vector<int> nabla; // indexed 2..n, stored from position 0
};

struct UpperLocus {
    std::vector<int> a;
    std::vector<int> delta; // indexed 1..n-1
};

/// The middle-subcrystal identification (a, Delta) -> (b, nabla):
/// b_i = a_i + Delta^+_i + Delta^-_{i-1} and nabla_i = -Delta_{i-1}.
inline LowerLocus zeta(const std::vector<int>& c, const std::vector<int>& a,
                       const std::vector<int>& dev) {
    check_upper_deviation(c, a, dev);
    const int n = static_cast<int>(c.size());
    auto dp = [&](int i) { return (i >= 1 && i <= n - 1) ? std::max(dev[i - 1], 0) : 0; };
    auto dm = [&](int i) { return (i >= 1 && i <= n - 1) ? std::min(dev[i - 1], 0) : 0; };
    LowerLocus out;
    out.b.resize(n);
    for (int i = 1; i <= n; ++i) out.b[i - 1] = a[i - 1] + dp(i) + dm(i - 1);
    out.nabla.resize(n - 1);
    for (int i = 2; i <= n; ++i) out.nabla[i - 2] = -dev[i - 2];
    return out;
}

/// Inverse of zeta: a_i = b_i + nabla^+_i + nabla^-_{i+1}, Delta_{i-1} = -nabla_i.
inline UpperLocus zeta_inv(const std::vector<int>& c, const std::vector<int>& b,
                           const std::vector<int>& nab) {
    check_lower_deviation(c, b, nab);
    const int n = static_cast<int>(c.size());
    auto np = [&](int i) { return (i >= 2 && i <= n) ? std::max(nab[i - 2], 0) : 0; };
    auto nm = [&](int i) { return (i >= 2 && i <= n) ? std::min(nab[i - 2], 0) : 0; };
    UpperLocus out;
    out.a.resize(n);
    for (int i = 1; i <= n; ++i) out.a[i - 1] = b[i - 1] + np(i) + nm(i + 1);
    out.delta.resize(n - 1);
    for (int i = 2; i <= n; ++i) out.delta[i - 2] = -nab[i - 2];
    return out;
}

/// Parameter and heart coordinates (middle colors 2..n-1, stored from 0) of
/// the middle subcrystal at deviation Delta inside K^up[a]:
/// c^{ud}_i = c_i - Delta_i + Delta_{i-1}, heart w.r.t. K^up[a] at
/// a_i + Delta_{i-1}.
struct MiddleParams {
    std::vector<int> parameter;
    std::vector<int> heart_coord;
};

inline MiddleParams middle_params(const std::vector<int>& c, const std::vector<int>& a,
                                  const std::vector<int>& dev) {
    check_upper_deviation(c, a, dev);
    const int n = static_cast<int>(c.size());
    auto d = [&](int i) { return (i >= 1 && i <= n - 1) ? dev[i - 1] : 0; };
    MiddleParams out;
    for (int i = 2; i <= n - 1; ++i) {
        out.parameter.push_back(c[i - 1] - d(i) + d(i - 1));
        out.heart_coord.push_back(a[i - 1] + d(i - 1));
    }
    return out;
}

/// Same middle subcrystal described from the lower side:
/// c^{ud}_i = c_i - nabla_i + nabla_{i+1}, heart w.r.t. K^low[b] at
/// b_i + nabla_{i+1}.
inline MiddleParams middle_params_lower(const std::vector<int>& c, const std::vector<int>& b,
                                        const std::vector<int>& nab) {
    check_lower_deviation(c, b, nab);
    const int n = static_cast<int>(c.size());
    auto nv = [&](int i) { return (i >= 2 && i <= n) ? nab[i - 2] : 0; };
    MiddleParams out;
    for (int i = 2; i <= n - 1; ++i) {
        out.parameter.push_back(c[i - 1] - nv(i) + nv(i + 1));
        out.heart_coord.push_back(b[i - 1] + nv(i + 1));
    }
    return out;
}

/// Number of middle subcrystals shared by K^up[a] and K^low[b], by direct
/// enumeration of the deviation box.
inline int count_common_middles(const std::vector<int>& c, const std::vector<int>& a,
                                const std::vector<int>& b) {
    check_in_box(a, c, "a");
    check_in_box(b, c, "b");
    const int n = static_cast<int>(c.size());
    std::vector<int> lo(n - 1), hi(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        lo[i - 1] = -a[i];
        hi[i - 1] = c[i - 1] - a[i - 1];
    }
    int count = 0;
    for_each_box_point(lo, hi, [&](const std::vector<int>& dev) {
        if (zeta(c, a, dev).b == b) ++count;
    });
    return count;
}

} // namespace crystals
