#ifndef QALG_HOMOLOGY_HPP
#define QALG_HOMOLOGY_HPP

// Right Λ-modules as quiver representations over Q: an arrow a acts as a
// matrix M_{o(a)} -> M_{t(a)}, and a path acts by the product of its arrow
// matrices in reverse order. Left modules are right modules over the
// opposite algebra.

#include <qalg/algebra.hpp>
#include <qalg/chains.hpp>
#include <qalg/error.hpp>
#include <qalg/hochschild.hpp>
#include <qalg/linalg.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qalg {

using Vector = std::vector<Rational>;

struct Representation {
    const MonomialAlgebra* algebra = nullptr;
    std::vector<std::size_t> dims;  // per vertex
    std::vector<Matrix> maps;       // per arrow, dims[target] x dims[source]

    std::size_t total_dimension() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
    bool is_zero() const { return total_dimension() == 0; }

    Vector act(const Vector& x, ArrowId a) const { return maps.at(a).apply(x); }
    Vector act(Vector x, const Path& p) const {
        for (ArrowId a : p.arrows()) x = maps.at(a).apply(x);
        return x;
    }

    /// Shapes match and every relation acts as zero.
    void check() const {
        const Quiver& q = algebra->quiver();
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
            const auto& arr = q.arrow(a);
            if (maps[a].rows() != dims[arr.target] || maps[a].cols() != dims[arr.source])
                throw InternalConsistencyError("BadRepresentation", "arrow matrix has the wrong shape");
        }
        for (const auto& r : algebra->relations()) {
            const std::size_t n = dims[r.origin()];
            for (std::size_t i = 0; i < n; ++i) {
                Vector e(n);
                e[i] = 1;
                for (const auto& x : act(e, r))
                    if (sgn(x) != 0)
                        throw InternalConsistencyError("BadRepresentation",
                                                       "relation " + algebra->format(r) + " acts nontrivially");
            }
        }
    }
};

namespace detail {

inline bool is_zero_vector(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

/// Representation whose basis at each vertex is a list of labels, with each
/// arrow sending a label to at most one label.
template <class Label, class Step>
Representation from_labels(const MonomialAlgebra& alg, const std::vector<std::vector<Label>>& labels, Step step) {
    const Quiver& q = alg.quiver();
    Representation m;
    m.algebra = &alg;
    for (const auto& l : labels) m.dims.push_back(l.size());
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const auto& arr = q.arrow(a);
        Matrix mat(m.dims[arr.target], m.dims[arr.source]);
        for (std::size_t j = 0; j < labels[arr.source].size(); ++j) {
            auto img = step(labels[arr.source][j], a);
            if (!img) continue;
            const auto& tgt = labels[arr.target];
            auto it = std::find(tgt.begin(), tgt.end(), *img);
            if (it == tgt.end()) throw InternalConsistencyError("BadRepresentation", "image label missing");
            mat(static_cast<std::size_t>(it - tgt.begin()), j) = 1;
        }
        m.maps.push_back(std::move(mat));
    }
    return m;
}

inline void check_vertex(const MonomialAlgebra& alg, VertexId v) {
    if (v >= alg.vertex_count()) throw UnknownNameError("unknown vertex index " + std::to_string(v));
}

}  // namespace detail

/// e_vΛ: basis at w is the nonzero paths v -> w.
inline Representation projective(const MonomialAlgebra& alg, VertexId v) {
    detail::check_vertex(alg, v);
    std::vector<std::vector<Path>> labels(alg.vertex_count());
    for (const auto& p : alg.paths_from(v)) labels[p.terminus()].push_back(p);
    return detail::from_labels(alg, labels, [&alg](const Path& p, ArrowId a) {
        return multiply(alg, p, Path::arrow(alg.quiver(), a));
    });
}

/// D(Λe_v): basis at w is dual to the nonzero paths w -> v; an arrow a
/// strips itself from the front of a path and kills paths not starting with a.
inline Representation injective(const MonomialAlgebra& alg, VertexId v) {
    detail::check_vertex(alg, v);
    std::vector<std::vector<Path>> labels(alg.vertex_count());
    for (const auto& p : alg.paths_into(v)) labels[p.origin()].push_back(p);
    return detail::from_labels(alg, labels, [](const Path& p, ArrowId a) -> std::optional<Path> {
        if (p.is_trivial() || p[0] != a) return std::nullopt;
        if (p.length() == 1) return Path::trivial(p.terminus());
        return p.suffix(p.length() - 1);
    });
}

inline Representation simple(const MonomialAlgebra& alg, VertexId v) {
    detail::check_vertex(alg, v);
    Representation m;
    m.algebra = &alg;
    m.dims.assign(alg.vertex_count(), 0);
    m.dims[v] = 1;
    for (const auto& arr : alg.quiver().arrows()) m.maps.emplace_back(m.dims[arr.target], m.dims[arr.source]);
    return m;
}

/// Result of one projective cover step. The kernel is stored both as a
/// representation and as its embedding in the cover, whose basis at w is
/// the pairs (generator, path from the generator's vertex to w).
struct Cover {
    std::map<VertexId, std::size_t> multiplicities;
    std::vector<VertexId> generator_vertices;
    Representation kernel;
    std::vector<std::vector<std::pair<std::size_t, Path>>> cover_basis;  // per vertex
    std::vector<Matrix> embedding;  // per vertex, cover_basis[w].size() x kernel.dims[w]
};

inline Cover projective_cover(const Representation& m) {
    const MonomialAlgebra& alg = *m.algebra;
    const Quiver& q = alg.quiver();
    const std::size_t nv = alg.vertex_count();
    Cover cov;

    // Top: standard basis vectors completing the radical to the whole space.
    std::vector<std::pair<VertexId, Vector>> gens;
    for (VertexId u = 0; u < nv; ++u) {
        const std::size_t n = m.dims[u];
        if (n == 0) continue;
        std::size_t rad_cols = 0;
        for (ArrowId a : q.arrows_into(u)) rad_cols += m.maps[a].cols();
        Matrix aug(n, rad_cols + n);
        std::size_t col = 0;
        for (ArrowId a : q.arrows_into(u))
            for (std::size_t j = 0; j < m.maps[a].cols(); ++j, ++col)
                for (std::size_t i = 0; i < n; ++i) aug(i, col) = m.maps[a](i, j);
        for (std::size_t i = 0; i < n; ++i) aug(i, rad_cols + i) = 1;
        for (auto p : rref(aug))
            if (p >= rad_cols) {
                Vector g(n);
                g[p - rad_cols] = 1;
                gens.emplace_back(u, std::move(g));
                ++cov.multiplicities[u];
                cov.generator_vertices.push_back(u);
            }
    }

    // Images of (generator, path) in M.
    cov.cover_basis.assign(nv, {});
    std::vector<std::vector<Vector>> images(nv);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& [u, g] = gens[i];
        std::map<Path, Vector> cache{{Path::trivial(u), g}};
        for (const auto& p : alg.paths_from(u)) {
            if (!p.is_trivial()) {
                const Path parent = p.prefix(p.length() - 1);
                cache[p] = m.act(cache.at(parent), p[p.length() - 1]);
            }
            cov.cover_basis[p.terminus()].emplace_back(i, p);
            images[p.terminus()].push_back(cache.at(p));
        }
    }

    std::vector<NullSpace> kernels;
    cov.kernel.algebra = &alg;
    for (VertexId w = 0; w < nv; ++w) {
        const std::size_t cols = cov.cover_basis[w].size();
        Matrix phi(m.dims[w], cols);
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < m.dims[w]; ++r) phi(r, c) = images[w][c][r];
        if (rank(phi) != m.dims[w])
            throw InternalConsistencyError("CoverNotSurjective", "projective cover map is not onto");
        kernels.push_back(null_space(phi));
        cov.kernel.dims.push_back(kernels.back().dim());
        cov.embedding.push_back(kernels.back().basis);
    }

    std::vector<std::map<std::pair<std::size_t, Path>, std::size_t>> index(nv);
    for (VertexId w = 0; w < nv; ++w)
        for (std::size_t c = 0; c < cov.cover_basis[w].size(); ++c) index[w].emplace(cov.cover_basis[w][c], c);
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const auto& arr = q.arrow(a);
        const Path step = Path::arrow(q, a);
        Matrix mat(cov.kernel.dims[arr.target], cov.kernel.dims[arr.source]);
        for (std::size_t k = 0; k < cov.kernel.dims[arr.source]; ++k) {
            Vector y(cov.cover_basis[arr.target].size());
            for (std::size_t c = 0; c < cov.cover_basis[arr.source].size(); ++c) {
                const Rational& x = kernels[arr.source].basis(c, k);
                if (sgn(x) == 0) continue;
                const auto& [gi, p] = cov.cover_basis[arr.source][c];
                if (auto pa = multiply(alg, p, step)) y[index[arr.target].at({gi, *pa})] += x;
            }
            auto coords = kernels[arr.target].coordinates(y);
            for (std::size_t r = 0; r < coords.size(); ++r) mat(r, k) = coords[r];
        }
        cov.kernel.maps.push_back(std::move(mat));
    }

    std::size_t cover_dim = 0;
    for (const auto& b : cov.cover_basis) cover_dim += b.size();
    if (cov.kernel.total_dimension() + m.total_dimension() != cover_dim)
        throw InternalConsistencyError("RankNullity", "syzygy dimension does not match the cover");
    return cov;
}

/// Isomorphism type of a cyclic module e_uΛ/J with J spanned by paths,
/// recorded by u and the minimal paths of J.
struct MonomialType {
    VertexId vertex = 0;
    std::vector<Path> minimal_zero_paths;
    friend auto operator<=>(const MonomialType&, const MonomialType&) = default;
    friend bool operator==(const MonomialType&, const MonomialType&) = default;
};

inline std::string format_type(const MonomialAlgebra& alg, const MonomialType& t) {
    std::string out = "e_" + alg.quiver().vertex_name(t.vertex) + "/(";
    for (std::size_t i = 0; i < t.minimal_zero_paths.size(); ++i)
        out += (i ? ", " : "") + alg.format(t.minimal_zero_paths[i]);
    return out + ")";
}

/// Tries to write a syzygy as a direct sum of cyclic modules with monomial
/// annihilators. Generators are chosen from a reduced basis of the kernel in
/// which coordinates on longer cover paths are eliminated first, so that
/// radical tails are stripped from top elements. Returns the multiset of
/// summand types, or nullopt when this choice does not exhibit such a sum.
inline std::optional<std::multiset<MonomialType>> recognise_monomial_sum(const Cover& cov) {
    const Representation& k = cov.kernel;
    const MonomialAlgebra& alg = *k.algebra;
    const Quiver& q = alg.quiver();
    const std::size_t nv = alg.vertex_count();
    std::multiset<MonomialType> types;
    std::vector<std::vector<Vector>> all_images(nv);

    for (VertexId u = 0; u < nv; ++u) {
        const std::size_t n = k.dims[u];
        if (n == 0) continue;
        const auto& labels = cov.cover_basis[u];
        std::vector<std::size_t> order(labels.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (labels[a].second.length() != labels[b].second.length())
                return labels[a].second.length() > labels[b].second.length();
            return labels[a] < labels[b];
        });
        // Rows: kernel basis vectors in permuted cover coordinates, followed by
        // the kernel coordinates so the reduction carries them along.
        Matrix rows(n, labels.size() + n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < order.size(); ++c) rows(i, c) = cov.embedding[u](order[c], i);
            rows(i, labels.size() + i) = 1;
        }
        rref(rows);

        std::size_t rad_cols = 0;
        for (ArrowId a : q.arrows_into(u)) rad_cols += k.maps[a].cols();
        Matrix span(n, rad_cols);
        std::size_t col = 0;
        for (ArrowId a : q.arrows_into(u))
            for (std::size_t j = 0; j < k.maps[a].cols(); ++j, ++col)
                for (std::size_t i = 0; i < n; ++i) span(i, col) = k.maps[a](i, j);
        std::size_t current = rank(span);
        std::vector<Vector> gens;
        for (std::size_t r = 0; r < n && current < n; ++r) {
            Vector g(n);
            for (std::size_t i = 0; i < n; ++i) g[i] = rows(r, labels.size() + i);
            if (detail::is_zero_vector(g)) continue;
            Matrix trial(n, span.cols() + 1);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t c = 0; c < span.cols(); ++c) trial(i, c) = span(i, c);
                trial(i, span.cols()) = g[i];
            }
            std::size_t rk = rank(trial);
            if (rk > current) {
                span = std::move(trial);
                current = rk;
                gens.push_back(std::move(g));
            }
        }
        if (current != n) return std::nullopt;

        for (const auto& g : gens) {
            MonomialType t;
            t.vertex = u;
            std::map<Path, Vector> img{{Path::trivial(u), g}};
            std::set<Path> zero;
            std::vector<std::vector<Vector>> local(nv);
            for (const auto& p : alg.paths_from(u)) {
                if (!p.is_trivial()) {
                    const Path parent = p.prefix(p.length() - 1);
                    img[p] = k.act(img.at(parent), p[p.length() - 1]);
                }
                if (detail::is_zero_vector(img[p])) {
                    bool minimal = true;
                    for (std::size_t len = 0; len < p.length(); ++len)
                        if (zero.contains(p.prefix(len))) minimal = false;
                    zero.insert(p);
                    if (minimal) t.minimal_zero_paths.push_back(p);
                } else {
                    local[p.terminus()].push_back(img[p]);
                }
            }
            // Nonzero images must be independent for the annihilator to be monomial.
            for (VertexId w = 0; w < nv; ++w) {
                if (local[w].empty()) continue;
                Matrix mat(k.dims[w], local[w].size());
                for (std::size_t c = 0; c < local[w].size(); ++c)
                    for (std::size_t r = 0; r < k.dims[w]; ++r) mat(r, c) = local[w][c][r];
                if (rank(mat) != local[w].size()) return std::nullopt;
                for (auto& v : local[w]) all_images[w].push_back(std::move(v));
            }
            std::sort(t.minimal_zero_paths.begin(), t.minimal_zero_paths.end());
            types.insert(std::move(t));
        }
    }
    // Direct sum: the summands' bases together form a basis.
    for (VertexId w = 0; w < nv; ++w) {
        if (all_images[w].size() != k.dims[w]) return std::nullopt;
        if (k.dims[w] == 0) continue;
        Matrix mat(k.dims[w], all_images[w].size());
        for (std::size_t c = 0; c < all_images[w].size(); ++c)
            for (std::size_t r = 0; r < k.dims[w]; ++r) mat(r, c) = all_images[w][c][r];
        if (rank(mat) != k.dims[w]) return std::nullopt;
    }
    return types;
}

struct PeriodicityCertificate {
    std::size_t first_degree = 0;   // i: syzygy Ω^i
    std::size_t repeat_degree = 0;  // j > i with the same set of summand types
    std::vector<MonomialType> types;
};

struct ResolutionTrace {
    enum class Outcome { TerminatedAt, ReachedBound, Periodic };
    std::string module;
    std::vector<std::map<VertexId, std::size_t>> terms;  // terms[n] = multiplicities of P_n
    Outcome outcome = Outcome::ReachedBound;
    std::size_t bound = 0;  // TerminatedAt(n) or ReachedBound(n_max)
    std::optional<PeriodicityCertificate> certificate;
};

inline const char* to_string(ResolutionTrace::Outcome o) {
    switch (o) {
    case ResolutionTrace::Outcome::TerminatedAt: return "TerminatedAt";
    case ResolutionTrace::Outcome::ReachedBound: return "ReachedBound";
    case ResolutionTrace::Outcome::Periodic: return "PeriodicityCertificate";
    }
    return "?";
}

/// Minimal projective resolution P_0 .. P_{n_max}. Stops early on a zero
/// syzygy. Syzygies recognised as sums of monomial cyclic modules are
/// compared by their sets of summand types: if Ω^j and Ω^i (i < j) use the
/// same set, Krull-Schmidt gives Ω^{i+k(j-i)} != 0 for every k, so the
/// projective dimension is infinite.
/// With `stop_at_certificate`, the trace ends at the degree where the
/// certificate is found.
inline ResolutionTrace resolve(const Representation& m, std::size_t n_max, std::string description = {},
                               bool stop_at_certificate = false) {
    ResolutionTrace tr;
    tr.module = std::move(description);
    std::vector<std::pair<std::size_t, std::set<MonomialType>>> seen;
    Representation cur = m;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (cur.is_zero()) {
            if (tr.certificate)
                throw InternalConsistencyError("CertificateContradicted", "a certified resolution terminated");
            if (n == 0) tr.terms.emplace_back();
            tr.outcome = ResolutionTrace::Outcome::TerminatedAt;
            tr.bound = n == 0 ? 0 : n - 1;
            return tr;
        }
        Cover cov = projective_cover(cur);
        tr.terms.push_back(cov.multiplicities);
        if (!tr.certificate && !cov.kernel.is_zero()) {
            if (auto types = recognise_monomial_sum(cov)) {
                std::set<MonomialType> set(types->begin(), types->end());
                for (const auto& [i, s] : seen)
                    if (s == set) {
                        tr.certificate = PeriodicityCertificate{i, n + 1, {set.begin(), set.end()}};
                        break;
                    }
                seen.emplace_back(n + 1, std::move(set));
            }
        }
        if (tr.certificate && stop_at_certificate) {
            tr.outcome = ResolutionTrace::Outcome::Periodic;
            tr.bound = n;
            return tr;
        }
        cur = std::move(cov.kernel);
    }
    if (cur.is_zero()) {
        if (tr.certificate)
            throw InternalConsistencyError("CertificateContradicted", "a certified resolution terminated");
        tr.outcome = ResolutionTrace::Outcome::TerminatedAt;
        tr.bound = n_max;
    } else if (tr.certificate) {
        tr.outcome = ResolutionTrace::Outcome::Periodic;
        tr.bound = n_max;
    } else {
        tr.bound = n_max;
    }
    return tr;
}

enum class DimensionKind { Finite, AtLeast, Infinite };

inline const char* to_string(DimensionKind k) {
    switch (k) {
    case DimensionKind::Finite: return "Finite";
    case DimensionKind::AtLeast: return "AtLeast";
    case DimensionKind::Infinite: return "Infinite";
    }
    return "?";
}

struct DimensionVerdict {
    DimensionKind kind = DimensionKind::Finite;
    std::size_t value = 0;  // the dimension, or the lower bound
    std::optional<VertexId> witness_vertex;
    std::optional<PeriodicityCertificate> certificate;
};

enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

/// Injective dimension of Λ as a right (resp. left) module: the largest
/// projective dimension of an indecomposable injective on the other side.
/// Right-side injectives over the opposite algebra are the left injectives.
inline DimensionVerdict injective_dimension(const MonomialAlgebra& alg, Side side, std::size_t n_max) {
    std::optional<MonomialAlgebra> op;
    if (side == Side::Right) op = opposite(alg);
    const MonomialAlgebra& base = op ? *op : alg;
    DimensionVerdict out;
    bool bounded = false;
    for (VertexId v = 0; v < base.vertex_count(); ++v) {
        auto tr = resolve(injective(base, v), n_max, {}, true);
        if (tr.outcome == ResolutionTrace::Outcome::Periodic) {
            out.kind = DimensionKind::Infinite;
            out.value = 0;
            out.witness_vertex = v;
            out.certificate = tr.certificate;
            return out;
        }
        const bool reached = tr.outcome == ResolutionTrace::Outcome::ReachedBound;
        const std::size_t val = reached ? n_max : tr.bound;
        if (!out.witness_vertex || val > out.value) {
            out.value = val;
            out.witness_vertex = v;
        }
        bounded = bounded || reached;
    }
    out.kind = bounded ? DimensionKind::AtLeast : DimensionKind::Finite;
    return out;
}

struct GorensteinVerdict {
    enum class Kind { Gorenstein, NotGorenstein, Inconclusive };
    DimensionVerdict left;
    DimensionVerdict right;
    Kind kind = Kind::Inconclusive;
};

inline const char* to_string(GorensteinVerdict::Kind k) {
    switch (k) {
    case GorensteinVerdict::Kind::Gorenstein: return "Gorenstein";
    case GorensteinVerdict::Kind::NotGorenstein: return "NotGorenstein";
    case GorensteinVerdict::Kind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

inline GorensteinVerdict gorenstein_probe(const MonomialAlgebra& alg, std::size_t n_max) {
    GorensteinVerdict g;
    g.left = injective_dimension(alg, Side::Left, n_max);
    g.right = injective_dimension(alg, Side::Right, n_max);
    if (g.left.kind == DimensionKind::Infinite || g.right.kind == DimensionKind::Infinite)
        g.kind = GorensteinVerdict::Kind::NotGorenstein;
    else if (g.left.kind == DimensionKind::Finite && g.right.kind == DimensionKind::Finite)
        g.kind = GorensteinVerdict::Kind::Gorenstein;
    return g;
}

/// Degree-n basis of the Ext algebra of Λ/r: the chains R^n.
inline std::vector<Path> ext_basis(const ChainTable& table, std::size_t n) { return table.paths(n); }

/// Product of basis elements: the concatenation when it is a chain of the
/// summed degree, otherwise zero.
inline std::optional<Path> ext_product(const ChainTable& table, std::size_t m, const Path& c1, std::size_t n,
                                       const Path& c2) {
    if (c1.terminus() != c2.origin()) return std::nullopt;
    Path p = Path::concat(c1, c2);
    if (!table.contains(m + n, p)) return std::nullopt;
    return p;
}

struct FgEvidence {
    enum class Kind { Positive, Negative, Vacuous };
    Kind kind = Kind::Vacuous;
    std::size_t window_low = 0;
    std::size_t window_high = 0;
    std::size_t max_generator_degree = 0;
    /// Every chain above this degree (inside the window) factors through a
    /// generator's support chain.
    std::optional<std::size_t> generation_bound;
    std::optional<std::pair<std::size_t, Path>> non_factoring;  // highest-degree failure
    std::size_t chains_checked = 0;
    static constexpr const char* caveat = "heuristic: not a proof of finite generation";
};

inline const char* to_string(FgEvidence::Kind k) {
    switch (k) {
    case FgEvidence::Kind::Positive: return "Positive";
    case FgEvidence::Kind::Negative: return "Negative";
    case FgEvidence::Kind::Vacuous: return "Vacuous";
    }
    return "?";
}

/// Default window: one generator period beyond the top generator degree,
/// where a period is twice the lcm of the generator degrees.
inline std::pair<std::size_t, std::size_t> default_fg_window(const HHPresentation& pres) {
    std::size_t top = 0, l = 1;
    for (const auto& g : pres.generators) {
        top = std::max(top, degree_of(g));
        l = std::lcm(l, degree_of(g));
    }
    return {top, top + 2 * l};
}

/// Checks, degree by degree inside [lo, hi], whether each chain c splits as
/// g·c' with g a support chain of some generator and c' a chain of the
/// complementary degree. The evidence is positive when the last failure
/// leaves at least one full generator degree of clean chains at the top of
/// the window.
inline FgEvidence fg2_factorization_probe(const MonomialAlgebra& alg, const HHPresentation& pres,
                                          const ChainTable& table, std::size_t lo, std::size_t hi) {
    FgEvidence ev;
    ev.window_low = lo;
    ev.window_high = hi;
    if (hi > table.max_degree())
        throw PreconditionError("ChainsTooShallow", "chains up to degree " + std::to_string(hi) + " are required");
    if (pres.generators.empty()) {
        ev.kind = FgEvidence::Kind::Vacuous;
        return ev;
    }
    std::vector<std::pair<std::size_t, Path>> supports;
    for (const auto& g : pres.generators) {
        ev.max_generator_degree = std::max(ev.max_generator_degree, degree_of(g));
        for (const auto& [c, v] : cocycle_support(alg, g, table, pres.d)) supports.emplace_back(degree_of(g), c);
    }
    std::optional<std::size_t> last_failure;
    for (std::size_t n = lo; n <= hi; ++n)
        for (const auto& chain : table.level(n)) {
            ++ev.chains_checked;
            bool factors = false;
            for (const auto& [deg, s] : supports) {
                if (deg > n || !chain.path.starts_with(s)) continue;
                Path rest = chain.path.suffix(chain.path.length() - s.length());
                if (rest.is_trivial()) rest = Path::trivial(s.terminus());
                if (table.contains(n - deg, rest)) {
                    factors = true;
                    break;
                }
            }
            if (!factors) {
                last_failure = n;
                ev.non_factoring = std::make_pair(n, chain.path);
            }
        }
    const std::size_t bound = last_failure ? *last_failure : (lo == 0 ? 0 : lo - 1);
    ev.generation_bound = bound;
    ev.kind = hi >= bound + ev.max_generator_degree ? FgEvidence::Kind::Positive : FgEvidence::Kind::Negative;
    return ev;
}

}  // namespace qalg

#endif
