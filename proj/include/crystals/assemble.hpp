#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <vector>

#include <crystals/crystal.hpp>
#include <crystals/errors.hpp>
#include <crystals/lattice.hpp>
#include <crystals/sail.hpp>

namespace crystals {

/// A fully built color-interval subcrystal, memoized by parameter (crystals
/// are parameter-determined, so one build serves every interval of the same
/// length). Template colors are 1..len; the instance decides what ambient
/// colors they stand for.
class CITemplate {
  public:
    CITemplate(std::vector<int> parameter, Crystal crystal)
        : parameter_(std::move(parameter)), crystal_(std::move(crystal)),
          lattice_(crystal_, parameter_, crystal_.meta()->source) {}

    const std::vector<int>& parameter() const { return parameter_; }
    const Crystal& crystal() const { return crystal_; }
    const LatticeMap& lattice() const { return lattice_; }

    /// Components after deleting one template color, each with the coordinate
    /// of its unique lattice vertex and a canonical vertex order used to
    /// align two instances of the same middle subcrystal.
    struct MiddleSet {
        std::vector<std::vector<VertexId>> order;   // component -> aligned order
        std::map<std::vector<int>, int> by_coord;   // lattice coordinate -> component
    };

    // middles for use as an upper instance: delete template color 1
    const MiddleSet& middles_without_first() const {
        if (!minus_first_) minus_first_ = compute_middles(1);
        return *minus_first_;
    }
    // middles for use as a lower instance: delete the last template color
    const MiddleSet& middles_without_last() const {
        if (!minus_last_) minus_last_ = compute_middles(static_cast<Color>(parameter_.size()));
        return *minus_last_;
    }

  private:
    MiddleSet compute_middles(Color deleted) const {
        const int len = static_cast<int>(parameter_.size());
        std::vector<Color> kept;
        for (Color i = 1; i <= len; ++i)
            if (i != deleted) kept.push_back(i);
        MiddleSet out;
        for (auto& comp : color_components(crystal_, kept)) {
            std::optional<std::vector<int>> coord;
            for (VertexId v : comp) {
                if (auto cv = lattice_.coordinate(v)) {
                    if (coord)
                        throw malformed_crystal_error("middle component with two lattice vertices");
                    coord = *cv;
                }
            }
            if (!coord)
                throw malformed_crystal_error("middle component without a lattice vertex");
            out.by_coord.emplace(*coord, static_cast<int>(out.order.size()));
            out.order.push_back(aligned_order(comp, kept));
        }
        return out;
    }

    // BFS from the component's source, frontier by (parent position, color):
    // the unique color-preserving isomorphism between two copies of the same
    // middle subcrystal maps this order to itself, so positional pairing is
    // exact.
    std::vector<VertexId> aligned_order(const std::vector<VertexId>& comp,
                                        const std::vector<Color>& kept) const {
        VertexId src = kNoVertex;
        for (VertexId v : comp) {
            bool has_in = false;
            for (Color i : kept) has_in = has_in || crystal_.pred(v, i) != kNoVertex;
            if (!has_in) {
                if (src != kNoVertex)
                    throw malformed_crystal_error("middle component with two sources");
                src = v;
            }
        }
        std::vector<VertexId> order{src};
        std::vector<char> seen(crystal_.vertex_count(), 0);
        seen[src] = 1;
        for (std::size_t head = 0; head < order.size(); ++head)
            for (Color i : kept) {
                const VertexId v = crystal_.succ(order[head], i);
                if (v != kNoVertex && !seen[v]) {
                    seen[v] = 1;
                    order.push_back(v);
                }
            }
        if (order.size() != comp.size())
            throw malformed_crystal_error("middle component traversal incomplete");
        return order;
    }

    std::vector<int> parameter_;
    Crystal crystal_;
    LatticeMap lattice_;
    mutable std::optional<MiddleSet> minus_first_;
    mutable std::optional<MiddleSet> minus_last_;
};

struct AssembleStats {
    std::size_t templates_built = 0;
    std::size_t cache_hits = 0;
    std::size_t peak_vertices = 0; // largest instance total seen in one step
};

struct AssembleOptions {
    std::size_t max_vertices = 5'000'000;
};

class TemplateCache;

namespace detail {
inline Crystal assemble_impl(TemplateCache& cache, const std::vector<int>& c);
}

/// Memoization table for CI-subcrystal templates.
class TemplateCache {
  public:
    explicit TemplateCache(AssembleOptions opts = {}) : opts_(opts) {}

    std::shared_ptr<const CITemplate> get(const std::vector<int>& parameter) {
        auto it = cache_.find(parameter);
        if (it != cache_.end()) {
            ++stats_.cache_hits;
            return it->second;
        }
        ++stats_.templates_built;
        auto tpl = std::make_shared<CITemplate>(parameter, detail::assemble_impl(*this, parameter));
        cache_.emplace(parameter, tpl);
        return tpl;
    }

    const AssembleStats& stats() const { return stats_; }
    const AssembleOptions& options() const { return opts_; }
    void note_peak(std::size_t vertices) { stats_.peak_vertices = std::max(stats_.peak_vertices, vertices); }

  private:
    AssembleOptions opts_;
    std::map<std::vector<int>, std::shared_ptr<const CITemplate>> cache_;
    AssembleStats stats_;
};

/// The memoized template for a color-interval subcrystal. The interval only
/// fixes the number of colors; the build is shared across intervals.
inline std::shared_ptr<const CITemplate> ci_template(TemplateCache& cache, int color_lo,
                                                     int color_hi,
                                                     const std::vector<int>& parameter) {
    if (color_lo > color_hi) throw input_error("ci_template: empty color interval");
    if (color_hi - color_lo + 1 != static_cast<int>(parameter.size()))
        throw input_error("ci_template: interval length does not match the parameter");
    return cache.get(parameter);
}

namespace detail {

// disjoint-set over the stamped instance vertices
class Dsu {
  public:
    explicit Dsu(std::size_t size) : parent_(size) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

  private:
    std::vector<std::size_t> parent_;
};

inline Crystal assemble_impl(TemplateCache& cache, const std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    if (n < 1) throw input_error("assemble: parameter must be nonempty");
    for (int ci : c)
        if (ci < 0) throw input_error("assemble: parameter entries must be nonnegative");

    if (n == 1) { // base case: a path
        std::vector<Edge> edges;
        for (int t = 0; t < c[0]; ++t) edges.push_back({t, t + 1, 1});
        return make_canonical_crystal(1, c[0] + 1, std::move(edges), Family::A, c);
    }
    if (n == 2) // base case: the sail model
        return sail_build(c[0], c[1]);

    // Upper instances K(c_up(a)), a over B(c): colors 1..n-1.
    // Lower instances K(c_low(b)): colors 2..n, template color t = color t+1.
    std::vector<std::vector<int>> loci;
    for_each_box_point(std::vector<int>(n, 0), c,
                       [&](const std::vector<int>& a) { loci.push_back(a); });
    std::map<std::vector<int>, std::size_t> locus_index;
    for (std::size_t t = 0; t < loci.size(); ++t) locus_index.emplace(loci[t], t);

    std::vector<std::shared_ptr<const CITemplate>> upper(loci.size()), lower(loci.size());
    std::vector<std::size_t> upper_offset(loci.size() + 1, 0), lower_offset(loci.size() + 1, 0);
    for (std::size_t t = 0; t < loci.size(); ++t) {
        auto [pu, hu] = subcrystal_params(c, loci[t], Side::Upper);
        auto [pl, hl] = subcrystal_params(c, loci[t], Side::Lower);
        upper[t] = cache.get(pu);
        lower[t] = cache.get(pl);
        upper_offset[t + 1] = upper_offset[t] + upper[t]->crystal().vertex_count();
        lower_offset[t + 1] = lower_offset[t] + lower[t]->crystal().vertex_count();
    }
    const std::size_t total_upper = upper_offset.back();
    const std::size_t total_lower = lower_offset.back();
    if (total_upper != total_lower)
        throw malformed_crystal_error("assemble: upper and lower instance totals differ");
    if (total_upper > cache.options().max_vertices)
        throw resource_error("vertex cap exceeded while assembling K(c)");
    cache.note_peak(total_upper + total_lower);

    Dsu dsu(total_upper + total_lower);
    std::vector<int> lower_matches(total_lower, 0); // per lower middle, via its first vertex

    for (std::size_t ia = 0; ia < loci.size(); ++ia) {
        const auto& a = loci[ia];
        const auto& ms = upper[ia]->middles_without_first();
        for (const auto& [p, comp] : ms.by_coord) {
            // deviation of this middle inside Pi_up[a]
            std::vector<int> dev(n - 1);
            for (int t = 0; t < n - 1; ++t) dev[t] = p[t] - a[t + 1];
            const LowerLocus low = zeta(c, a, dev);
            const auto bit = locus_index.find(low.b);
            if (bit == locus_index.end())
                throw malformed_crystal_error("assemble: zeta image outside the principal box");
            const std::size_t ib = bit->second;
            // lattice coordinate of the same middle inside the lower template
            std::vector<int> q(n - 1);
            for (int t = 0; t < n - 1; ++t) q[t] = low.b[t] - dev[t];
            const auto& ls = lower[ib]->middles_without_last();
            const auto lit = ls.by_coord.find(q);
            if (lit == ls.by_coord.end())
                throw malformed_crystal_error("assemble: middle subcrystal missing on the lower side");
            const auto& uorder = ms.order[comp];
            const auto& lorder = ls.order[lit->second];
            if (uorder.size() != lorder.size())
                throw malformed_crystal_error("assemble: matched middles have different sizes");
            ++lower_matches[lower_offset[ib] + lorder.front()];
            for (std::size_t t = 0; t < uorder.size(); ++t)
                dsu.unite(upper_offset[ia] + uorder[t], total_upper + lower_offset[ib] + lorder[t]);
        }
    }
    for (std::size_t ib = 0; ib < loci.size(); ++ib)
        for (const auto& [q, comp] : lower[ib]->middles_without_last().by_coord)
            if (lower_matches[lower_offset[ib] +
                              lower[ib]->middles_without_last().order[comp].front()] != 1)
                throw malformed_crystal_error("assemble: a lower middle was not matched exactly once");

    // quotient: each class must pair one upper with one lower vertex
    std::vector<VertexId> class_id(total_upper + total_lower, kNoVertex);
    VertexId vcount = 0;
    for (std::size_t x = 0; x < total_upper; ++x) {
        const std::size_t root = dsu.find(x);
        if (class_id[root] != kNoVertex)
            throw malformed_crystal_error("assemble: two upper vertices identified");
        class_id[root] = vcount++;
    }
    std::vector<Edge> edges;
    auto uid = [&](std::size_t ia, VertexId v) { return class_id[dsu.find(upper_offset[ia] + v)]; };
    auto lid = [&](std::size_t ib, VertexId v) {
        return class_id[dsu.find(total_upper + lower_offset[ib] + v)];
    };
    for (std::size_t ia = 0; ia < loci.size(); ++ia)
        for (const Edge& e : upper[ia]->crystal().edges())
            edges.push_back({uid(ia, e.from), uid(ia, e.to), e.color}); // colors 1..n-1
    for (std::size_t ib = 0; ib < loci.size(); ++ib)
        for (const Edge& e : lower[ib]->crystal().edges())
            if (e.color == n - 1) // the template's last color carries color n
                edges.push_back({lid(ib, e.from), lid(ib, e.to), n});

    return make_canonical_crystal(n, vcount, std::move(edges), Family::A, c);
}

} // namespace detail

/// Builds K(c) recursively: upper and lower subcrystal instances are stamped
/// from memoized CI-templates and glued along their middle subcrystals via
/// the zeta identification.
inline Crystal assemble(const std::vector<int>& c, TemplateCache& cache) {
    return detail::assemble_impl(cache, c);
}

inline Crystal assemble(const std::vector<int>& c, AssembleOptions opts = {},
                        AssembleStats* stats = nullptr) {
    TemplateCache cache(opts);
    Crystal out = detail::assemble_impl(cache, c);
    if (stats) *stats = cache.stats();
    return out;
}

} // namespace crystals
