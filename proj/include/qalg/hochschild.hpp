#ifndef QALG_HOCHSCHILD_HPP
#define QALG_HOCHSCHILD_HPP

// Generators of HH*(Λ) modulo nilpotents for a (D,A)-stacked monomial
// algebra with D = dA. There is one generator per qualifying closed path C
// (C^d a relation overlapping no other relation) and one per qualifying
// closed A-trail (a cyclic word of distinct length-A segments whose length-D
// windows are relations, each segment overlapping no other relation).
// Distinct generators multiply to zero.

#include <qalg/algebra.hpp>
#include <qalg/chains.hpp>
#include <qalg/error.hpp>
#include <qalg/overlaps.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace qalg {

struct ClosedPathGenerator {
    std::size_t index = 0;
    Path cycle;          // primitive, closed at `vertex`, of length A
    VertexId vertex = 0;
    std::size_t degree = 2;
    Path power_relation;  // cycle^d
    bool vertex_not_internal = false;  // reported, not required
};

struct TrailGenerator {
    std::size_t index = 0;
    std::vector<Path> segments;   // canonical rotation
    std::vector<Path> rotations;  // rotations[k] starts at segments[k]
    std::vector<Path> relations;  // the m associated relations
    std::size_t m = 0;
    std::size_t mu = 0;
    std::size_t degree = 0;
};

using Generator = std::variant<ClosedPathGenerator, TrailGenerator>;

inline std::size_t degree_of(const Generator& g) {
    return std::visit([](const auto& x) { return x.degree; }, g);
}

/// Vertices a generator is attached to: the base of a closed path, or the
/// origins of all rotations of a trail.
inline std::vector<VertexId> base_vertices(const Generator& g) {
    if (auto c = std::get_if<ClosedPathGenerator>(&g)) return {c->vertex};
    std::set<VertexId> vs;
    for (const auto& t : std::get<TrailGenerator>(g).rotations) vs.insert(t.origin());
    return {vs.begin(), vs.end()};
}

struct HHPresentation {
    std::vector<Generator> generators;
    std::size_t d = 0;
    std::size_t A = 0;

    std::size_t rank() const noexcept { return generators.size(); }
    bool is_trivial_ring() const noexcept { return generators.empty(); }

    /// "K", "K[x]/()", "K[x,y]/(xy)", "K[x1,x2,x3]/(x1x2,x1x3,x2x3)", ...
    std::string ring_string() const {
        const std::size_t r = generators.size();
        if (r == 0) return "K";
        std::vector<std::string> names;
        if (r == 1) names = {"x"};
        else if (r == 2) names = {"x", "y"};
        else
            for (std::size_t i = 1; i <= r; ++i) names.push_back("x" + std::to_string(i));
        std::string out = "K[";
        for (std::size_t i = 0; i < r; ++i) out += (i ? "," : "") + names[i];
        out += "]/(";
        bool first = true;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a + 1; b < r; ++b) {
                out += (first ? "" : ",") + names[a] + names[b];
                first = false;
            }
        return out + ")";
    }
};

/// Relations attached to a closed trail: with d = Nm + l, W = T^N α_0⋯α_{l-1}
/// and the result is {σ^k(W) : 0 <= k < m}, σ shifting segment indices.
inline std::vector<Path> rho_T(const std::vector<Path>& segments, std::size_t d) {
    const std::size_t m = segments.size();
    if (m == 0) throw NotClosedError("rho_T: empty segment list");
    for (std::size_t k = 0; k < m; ++k) {
        const Path& s = segments[k];
        const Path& n = segments[(k + 1) % m];
        if (s.is_trivial() || s.terminus() != n.origin())
            throw CompositionError("rho_T: segments do not form a closed trail at segment " + std::to_string(k));
    }
    std::vector<Path> out;
    for (std::size_t k = 0; k < m; ++k) {
        Path w = segments[k];
        for (std::size_t i = 1; i < d; ++i) w = Path::concat(w, segments[(k + i) % m]);
        out.push_back(std::move(w));
    }
    return out;
}

namespace detail {

/// A length-A segment clashes with a relation if a proper nonempty suffix of
/// the segment starts the relation, a proper nonempty prefix ends it, or the
/// segment occurs inside it.
inline bool segment_clashes(const Path& seg, const Path& r) {
    if (is_subpath(seg, r)) return true;
    for (std::size_t k = 1; k < seg.length(); ++k) {
        if (k <= r.length() && r.starts_with(seg.suffix(k))) return true;
        if (k <= r.length() && r.ends_with(seg.prefix(k))) return true;
    }
    return false;
}

inline std::vector<Path> split_segments(const Path& p, std::size_t A) {
    std::vector<Path> out;
    for (std::size_t i = 0; i + A <= p.length(); i += A) out.push_back(p.subpath(i, A));
    return out;
}

inline std::vector<Path> least_rotation(const std::vector<Path>& segs) {
    std::vector<Path> best = segs;
    for (std::size_t k = 1; k < segs.size(); ++k) {
        std::vector<Path> rot(segs.begin() + static_cast<std::ptrdiff_t>(k), segs.end());
        rot.insert(rot.end(), segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(k));
        if (rot < best) best = std::move(rot);
    }
    return best;
}

}  // namespace detail

/// Enumerates the generators. Closed paths are read off relations that are
/// d-th powers; trails are simple cycles in the graph on relations where
/// r -> r' when r minus its first segment is r' minus its last segment.
inline HHPresentation find_generators(const MonomialAlgebra& alg, const StackedVerdict& verdict) {
    if (!verdict.is_stacked) throw PreconditionError("NotStacked", "algebra is not (D,A)-stacked");
    if (!verdict.A || !verdict.d || *verdict.d < 2) {
        HHPresentation p;
        if (verdict.A) p.A = *verdict.A;
        return p;  // no odd-degree chains, or A does not divide D: nothing qualifies
    }
    const std::size_t A = *verdict.A, d = *verdict.d;
    const auto& rels = alg.relations();
    HHPresentation pres;
    pres.d = d;
    pres.A = A;

    std::vector<ClosedPathGenerator> closed;
    for (const auto& r : rels) {
        Path c = r.prefix(A);
        if (!c.is_closed() || !is_primitive(c) || !(power(c, d) == r)) continue;
        bool isolated = true;
        for (const auto& o : rels)
            if (!(o == r) && have_overlap(r, o)) {
                isolated = false;
                break;
            }
        if (!isolated) continue;
        ClosedPathGenerator g;
        g.cycle = c;
        g.vertex = c.origin();
        g.power_relation = r;
        g.vertex_not_internal = vertex_not_internal(c, c.origin());
        closed.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i + 1; j < closed.size(); ++j)
            if (closed[i].vertex == closed[j].vertex)
                throw PreconditionError("DistinctVertexViolation",
                                        "closed paths " + alg.format(closed[i].cycle) + " and " +
                                            alg.format(closed[j].cycle) + " share the vertex " +
                                            alg.quiver().vertex_name(closed[i].vertex));

    // Relation graph for trails.
    const std::size_t n = rels.size();
    std::vector<std::vector<std::size_t>> next(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && rels[i].suffix((d - 1) * A) == rels[j].prefix((d - 1) * A)) next[i].push_back(j);

    std::set<std::vector<Path>> seen;
    std::vector<TrailGenerator> trails;
    auto consider = [&](const std::vector<std::size_t>& cyc) {
        std::vector<Path> segs;
        for (auto i : cyc) segs.push_back(rels[i].prefix(A));
        std::set<Path> distinct(segs.begin(), segs.end());
        if (distinct.size() != segs.size()) return;
        auto canon = detail::least_rotation(segs);
        if (seen.contains(canon)) return;
        auto assoc = rho_T(canon, d);
        for (const auto& w : assoc)
            if (!alg.relation_index(w)) return;
        for (const auto& r : rels) {
            if (std::find(assoc.begin(), assoc.end(), r) != assoc.end()) continue;
            for (const auto& s : canon)
                if (detail::segment_clashes(s, r)) return;
        }
        seen.insert(canon);
        TrailGenerator t;
        t.m = canon.size();
        t.segments = canon;
        for (std::size_t k = 0; k < t.m; ++k) {
            Path rot = canon[k];
            for (std::size_t i = 1; i < t.m; ++i) rot = Path::concat(rot, canon[(k + i) % t.m]);
            t.rotations.push_back(std::move(rot));
        }
        t.relations = assoc;
        t.mu = t.m / std::gcd(d, t.m);
        t.degree = 2 * t.mu;
        trails.push_back(std::move(t));
    };
    // Simple cycles of length >= 2, each found once from its smallest index.
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> path{s};
        std::vector<bool> on(n, false);
        on[s] = true;
        std::vector<std::size_t> pos{0};
        while (!path.empty()) {
            std::size_t u = path.back();
            if (pos.back() == next[u].size()) {
                on[u] = false;
                path.pop_back();
                pos.pop_back();
                continue;
            }
            std::size_t w = next[u][pos.back()++];
            if (w == s && path.size() >= 2) {
                consider(path);
                continue;
            }
            if (w <= s || on[w]) continue;
            on[w] = true;
            path.push_back(w);
            pos.push_back(0);
        }
    }
    std::sort(trails.begin(), trails.end(),
              [](const TrailGenerator& a, const TrailGenerator& b) { return a.segments < b.segments; });

    for (const auto& c : closed)
        for (const auto& t : trails)
            for (const auto& rot : t.rotations)
                if (rot == c.cycle)
                    throw InternalConsistencyError("GeneratorFamiliesOverlap",
                                                   "closed path " + alg.format(c.cycle) + " is also a trail");

    std::sort(closed.begin(), closed.end(),
              [](const ClosedPathGenerator& a, const ClosedPathGenerator& b) { return a.vertex < b.vertex; });
    std::size_t idx = 0;
    for (auto& c : closed) {
        c.index = idx++;
        pres.generators.emplace_back(std::move(c));
    }
    for (auto& t : trails) {
        t.index = idx++;
        pres.generators.emplace_back(std::move(t));
    }
    return pres;
}

/// Chains on which the generator's representing cocycle is nonzero, with the
/// vertex idempotent it takes there. Each predicted chain is checked against
/// R^{degree}.
inline std::map<Path, VertexId> cocycle_support(const MonomialAlgebra& alg, const Generator& g,
                                                const ChainTable& table, std::size_t d) {
    std::map<Path, VertexId> out;
    const std::size_t deg = degree_of(g);
    if (deg > table.max_degree())
        throw PreconditionError("ChainsTooShallow", "chains up to degree " + std::to_string(deg) + " are required");
    auto require = [&](const Path& c, VertexId v) {
        if (!table.contains(deg, c))
            throw InternalConsistencyError("MissingChain",
                                           "predicted support chain " + alg.format(c) + " is not in R^" +
                                               std::to_string(deg));
        out.emplace(c, v);
    };
    if (auto c = std::get_if<ClosedPathGenerator>(&g)) {
        require(c->power_relation, c->vertex);
        return out;
    }
    const auto& t = std::get<TrailGenerator>(g);
    const std::size_t reps = d / std::gcd(d, t.m);
    for (const auto& rot : t.rotations) require(power(rot, reps), rot.origin());
    return out;
}

inline std::map<Path, VertexId> cocycle_support(const MonomialAlgebra& alg, const Generator& g, std::size_t d) {
    return cocycle_support(alg, g, chains(alg, degree_of(g)), d);
}

}  // namespace qalg

#endif
