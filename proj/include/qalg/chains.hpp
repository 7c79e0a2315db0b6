#ifndef QALG_CHAINS_HPP
#define QALG_CHAINS_HPP

// The sets R^n indexing the minimal projective resolution of Λ/r over a
// monomial algebra. R^0 are the vertices, R^1 the arrows, R^2 the relations;
// a degree-n chain (n >= 2) extends its parent c by a nonempty path s such
// that some relation r is a suffix of tail(c)·s starting inside tail(c), and
// no proper prefix of s already has that property. The new tail is s.

#include <qalg/algebra.hpp>
#include <qalg/error.hpp>
#include <qalg/paths.hpp>

#include <algorithm>
#include <cstddef>
#include <future>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace qalg {

struct Chain {
    std::size_t degree = 0;
    Path path;
    Path tail;
    std::optional<std::size_t> parent;            // index into the degree-1 level (n >= 2)
    std::optional<std::size_t> closing_relation;  // index into relations() (n >= 2)
};

/// Chains by degree; each level is sorted by path.
class ChainTable {
public:
    std::size_t max_degree() const noexcept { return levels_.empty() ? 0 : levels_.size() - 1; }
    const std::vector<Chain>& level(std::size_t n) const { return levels_.at(n); }
    std::vector<Path> paths(std::size_t n) const {
        std::vector<Path> out;
        for (const auto& c : levels_.at(n)) out.push_back(c.path);
        return out;
    }
    bool contains(std::size_t n, const Path& p) const {
        if (n >= levels_.size()) return false;
        const auto& lv = levels_[n];
        auto it = std::lower_bound(lv.begin(), lv.end(), p, [](const Chain& c, const Path& x) { return c.path < x; });
        return it != lv.end() && it->path == p;
    }
    /// The parent ladder of a chain, from degree 1 up to the chain itself.
    std::vector<const Chain*> ladder(std::size_t n, std::size_t index) const {
        std::vector<const Chain*> out;
        const Chain* c = &levels_.at(n).at(index);
        out.push_back(c);
        while (c->parent) {
            c = &levels_.at(c->degree - 1).at(*c->parent);
            out.push_back(c);
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    std::vector<std::vector<Chain>>& levels() noexcept { return levels_; }
    const std::vector<std::vector<Chain>>& levels() const noexcept { return levels_; }

private:
    std::vector<std::vector<Chain>> levels_;
};

struct Extension {
    Path path;
    std::size_t relation = 0;
};

namespace detail {

/// Extensions of a tail found by searching quiver paths directly: grow s one
/// arrow at a time and stop a branch as soon as a relation closes.
inline std::vector<Extension> extensions_by_search(const MonomialAlgebra& alg, const Path& tail) {
    const Quiver& q = alg.quiver();
    const std::size_t max_len = alg.max_relation_length() - 1;
    std::vector<Extension> out;
    std::vector<Path> stack{Path::trivial(tail.terminus())};
    while (!stack.empty()) {
        Path s = std::move(stack.back());
        stack.pop_back();
        for (ArrowId a : q.arrows_from(s.terminus())) {
            Path next = s;
            next.push_back(q, a);
            Path joined = Path::concat(tail, next);
            std::vector<std::size_t> closing;
            for (std::size_t i = 0; i < alg.relations().size(); ++i) {
                const Path& r = alg.relations()[i];
                if (next.length() < r.length() && r.length() <= joined.length() && joined.ends_with(r))
                    closing.push_back(i);
            }
            if (closing.size() > 1)
                throw InternalConsistencyError("AmbiguousExtension",
                                               "two relations close the same extension " + alg.format(joined));
            if (closing.size() == 1) {
                out.push_back({next, closing[0]});
                continue;
            }
            if (next.length() < max_len) stack.push_back(std::move(next));
        }
    }
    std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) { return a.path < b.path; });
    return out;
}

/// The same extensions read off the relations: r closes at k arrows into
/// the tail when the length-k suffix of the tail is a prefix of r.
inline std::vector<Extension> extensions_by_relations(const MonomialAlgebra& alg, const Path& tail) {
    std::vector<Extension> cand;
    for (std::size_t i = 0; i < alg.relations().size(); ++i) {
        const Path& r = alg.relations()[i];
        const std::size_t kmax = std::min(tail.length(), r.length() - 1);
        for (std::size_t k = 1; k <= kmax; ++k)
            if (std::equal(tail.arrows().end() - static_cast<std::ptrdiff_t>(k), tail.arrows().end(),
                           r.arrows().begin()))
                cand.push_back({r.suffix(r.length() - k), i});
    }
    std::vector<Extension> out;
    for (const auto& c : cand) {
        bool minimal = true;
        for (const auto& o : cand) {
            if (o.path.length() < c.path.length() && c.path.starts_with(o.path)) {
                minimal = false;
                break;
            }
            if (o.path == c.path && o.relation != c.relation)
                throw InternalConsistencyError("AmbiguousExtension", "two relations close the same extension");
        }
        if (minimal && std::none_of(out.begin(), out.end(), [&](const Extension& e) { return e.path == c.path; }))
            out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Extension& a, const Extension& b) { return a.path < b.path; });
    return out;
}

}  // namespace detail

/// R^0 .. R^{n_max} by direct recursion on chain ladders. With `parallel`,
/// each starting vertex is expanded on its own task; output order is the
/// same either way.
inline ChainTable chains(const MonomialAlgebra& alg, std::size_t n_max, bool parallel = false) {
    const Quiver& q = alg.quiver();
    ChainTable table;
    auto& levels = table.levels();
    levels.emplace_back();
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        Path e = Path::trivial(v);
        levels[0].push_back({0, e, e, std::nullopt, std::nullopt});
    }
    if (n_max >= 1) {
        levels.emplace_back();
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
            Path p = Path::arrow(q, a);
            levels[1].push_back({1, p, p, std::nullopt, std::nullopt});
        }
        std::sort(levels[1].begin(), levels[1].end(), [](const Chain& x, const Chain& y) { return x.path < y.path; });
    }

    auto expand = [&alg](const std::vector<Chain>& prev, std::size_t n, std::size_t lo, std::size_t hi,
                         std::optional<VertexId> only) {
        std::vector<Chain> out;
        for (std::size_t i = lo; i < hi; ++i) {
            const Chain& c = prev[i];
            if (only && c.path.origin() != *only) continue;
            for (auto& ext : detail::extensions_by_search(alg, c.tail))
                out.push_back({n, Path::concat(c.path, ext.path), ext.path, i, ext.relation});
        }
        return out;
    };

    for (std::size_t n = 2; n <= n_max; ++n) {
        const auto& prev = levels[n - 1];
        std::vector<Chain> next;
        if (parallel && q.vertex_count() > 1) {
            std::vector<std::future<std::vector<Chain>>> jobs;
            for (VertexId v = 0; v < q.vertex_count(); ++v)
                jobs.push_back(std::async(std::launch::async, expand, std::cref(prev), n, 0, prev.size(), v));
            for (auto& j : jobs) {
                auto part = j.get();
                next.insert(next.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
            }
        } else {
            next = expand(prev, n, 0, prev.size(), std::nullopt);
        }
        std::sort(next.begin(), next.end(), [](const Chain& x, const Chain& y) { return x.path < y.path; });
        levels.push_back(std::move(next));
        if (levels.back().empty()) {
            // Every later level is empty as well; keep the table rectangular.
            for (std::size_t m = n + 1; m <= n_max; ++m) levels.emplace_back();
            break;
        }
    }
    return table;
}

struct TailTransition {
    std::size_t target = 0;
    Path extension;
    std::size_t relation = 0;
};

/// Finite transition system on chain tails. States are arrows (degree-1
/// tails) and proper suffixes of relations; a walk of n-1 transitions from
/// the state of an arrow leaving v spells a degree-n chain starting at v.
class TailAutomaton {
public:
    std::size_t state_count() const noexcept { return states_.size(); }
    const Path& state(std::size_t i) const { return states_.at(i); }
    const std::vector<TailTransition>& transitions(std::size_t i) const { return out_.at(i); }
    std::size_t arrow_state(ArrowId a) const { return arrow_state_.at(a); }
    std::optional<std::size_t> find(const Path& tail) const {
        auto it = index_.find(tail);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Number of degree-n chains starting at v, grouped by terminus.
    std::map<VertexId, std::size_t> count_by_terminus(const Quiver& q, VertexId v, std::size_t n) const {
        std::map<VertexId, std::size_t> out;
        if (n == 0) {
            out[v] = 1;
            return out;
        }
        std::vector<std::size_t> cur(states_.size(), 0);
        for (ArrowId a : q.arrows_from(v)) ++cur[arrow_state_[a]];
        for (std::size_t step = 1; step < n; ++step) {
            std::vector<std::size_t> nxt(states_.size(), 0);
            for (std::size_t s = 0; s < states_.size(); ++s)
                if (cur[s])
                    for (const auto& t : out_[s]) nxt[t.target] += cur[s];
            cur.swap(nxt);
        }
        for (std::size_t s = 0; s < states_.size(); ++s)
            if (cur[s]) out[states_[s].terminus()] += cur[s];
        return out;
    }

    std::size_t count(const Quiver& q, VertexId v, std::size_t n) const {
        std::size_t total = 0;
        for (const auto& [w, k] : count_by_terminus(q, v, n)) total += k;
        return total;
    }

    /// Degree-n chain paths starting at v, sorted.
    std::vector<Path> enumerate(const Quiver& q, VertexId v, std::size_t n) const {
        if (n == 0) return {Path::trivial(v)};
        std::vector<std::pair<Path, std::size_t>> cur;
        for (ArrowId a : q.arrows_from(v)) cur.emplace_back(Path::arrow(q, a), arrow_state_[a]);
        for (std::size_t step = 1; step < n; ++step) {
            std::vector<std::pair<Path, std::size_t>> nxt;
            for (const auto& [p, s] : cur)
                for (const auto& t : out_[s]) nxt.emplace_back(Path::concat(p, t.extension), t.target);
            cur.swap(nxt);
        }
        std::vector<Path> out;
        for (auto& [p, s] : cur) out.push_back(std::move(p));
        std::sort(out.begin(), out.end());
        return out;
    }

    friend TailAutomaton build_tail_automaton(const MonomialAlgebra& alg);

private:
    std::vector<Path> states_;
    std::map<Path, std::size_t> index_;
    std::vector<std::vector<TailTransition>> out_;
    std::vector<std::size_t> arrow_state_;
};

inline TailAutomaton build_tail_automaton(const MonomialAlgebra& alg) {
    const Quiver& q = alg.quiver();
    TailAutomaton aut;
    auto intern = [&aut](const Path& p) {
        auto [it, inserted] = aut.index_.emplace(p, aut.states_.size());
        if (inserted) {
            aut.states_.push_back(p);
            aut.out_.emplace_back();
        }
        return it->second;
    };
    std::queue<std::size_t> work;
    std::vector<bool> expanded;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        std::size_t s = intern(Path::arrow(q, a));
        aut.arrow_state_.push_back(s);
        work.push(s);
    }
    std::set<std::size_t> done;
    while (!work.empty()) {
        std::size_t s = work.front();
        work.pop();
        if (!done.insert(s).second) continue;
        Path tail = aut.states_[s];
        std::vector<TailTransition> trans;
        for (auto& ext : detail::extensions_by_relations(alg, tail)) {
            std::size_t t = intern(ext.path);
            trans.push_back({t, ext.path, ext.relation});
            if (!done.contains(t)) work.push(t);
        }
        aut.out_[s] = std::move(trans);
    }
    return aut;
}

namespace detail {

/// Iterative DFS over automaton states reachable from `starts`. Returns a
/// cycle (as a list of states, first repeated implicitly) if one exists,
/// otherwise the length (in transitions) of the longest walk.
struct ReachAnalysis {
    std::optional<std::vector<std::size_t>> cycle;
    std::vector<std::size_t> path_to_cycle;  // states from a start to cycle.front()
    std::size_t longest_walk = 0;
};

inline ReachAnalysis analyse_reach(const TailAutomaton& aut, const std::vector<std::size_t>& starts) {
    ReachAnalysis res;
    const std::size_t n = aut.state_count();
    std::vector<int> color(n, 0);
    std::vector<std::size_t> depth(n, 0);  // longest walk from state (valid when color == 2)
    for (std::size_t start : starts) {
        if (color[start] != 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        color[start] = 1;
        while (!stack.empty()) {
            auto& [s, next] = stack.back();
            const auto& trans = aut.transitions(s);
            if (next == trans.size()) {
                std::size_t best = 0;
                for (const auto& t : trans) best = std::max(best, depth[t.target] + 1);
                depth[s] = best;
                color[s] = 2;
                stack.pop_back();
                continue;
            }
            std::size_t t = trans[next++].target;
            if (color[t] == 1) {
                std::vector<std::size_t> cyc;
                std::size_t i = stack.size();
                while (i > 0 && stack[i - 1].first != t) --i;
                for (std::size_t j = i - 1; j < stack.size(); ++j) cyc.push_back(stack[j].first);
                for (std::size_t j = 0; j + 1 < i; ++j) res.path_to_cycle.push_back(stack[j].first);
                res.cycle = std::move(cyc);
                return res;
            }
            if (color[t] == 0) {
                color[t] = 1;
                stack.emplace_back(t, 0);
            }
        }
    }
    for (std::size_t s : starts) res.longest_walk = std::max(res.longest_walk, depth[s]);
    return res;
}

}  // namespace detail

/// Projective dimension of the simple module at a vertex, decided exactly
/// from the tail automaton.
struct ProjectiveDimension {
    bool finite = true;
    std::size_t value = 0;  // pd when finite
    /// When infinite: tails of a reachable automaton cycle and a chain that
    /// enters it.
    std::vector<Path> cycle_tails;
    Path entry_chain;
};

inline ProjectiveDimension proj_dim_simple(const MonomialAlgebra& alg, const TailAutomaton& aut, VertexId v) {
    const Quiver& q = alg.quiver();
    ProjectiveDimension pd;
    std::vector<std::size_t> starts;
    for (ArrowId a : q.arrows_from(v)) starts.push_back(aut.arrow_state(a));
    if (starts.empty()) return pd;
    auto res = detail::analyse_reach(aut, starts);
    if (res.cycle) {
        pd.finite = false;
        for (auto s : *res.cycle) pd.cycle_tails.push_back(aut.state(s));
        // Rebuild the chain spelled by the walk into the cycle.
        std::vector<std::size_t> walk = res.path_to_cycle;
        walk.push_back(res.cycle->front());
        Path chain = aut.state(walk.front());
        for (std::size_t i = 1; i < walk.size(); ++i) chain = Path::concat(chain, aut.state(walk[i]));
        pd.entry_chain = chain;
        return pd;
    }
    pd.value = res.longest_walk + 1;
    return pd;
}

inline ProjectiveDimension proj_dim_simple(const MonomialAlgebra& alg, VertexId v) {
    return proj_dim_simple(alg, build_tail_automaton(alg), v);
}

/// Degree-indexed multisets {t(c) : c in R^n, o(c) = v}, n = 0..n_max.
inline std::vector<std::map<VertexId, std::size_t>> resolution_shape(const MonomialAlgebra& alg,
                                                                     const TailAutomaton& aut, VertexId v,
                                                                     std::size_t n_max) {
    std::vector<std::map<VertexId, std::size_t>> out;
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(aut.count_by_terminus(alg.quiver(), v, n));
    return out;
}

inline std::vector<std::map<VertexId, std::size_t>> resolution_shape(const MonomialAlgebra& alg, VertexId v,
                                                                     std::size_t n_max) {
    return resolution_shape(alg, build_tail_automaton(alg), v, n_max);
}

/// Length that a degree-n chain must have in a (D,A)-stacked algebra.
inline std::size_t stacked_length(std::size_t n, std::size_t D, std::size_t A) {
    if (n == 0) return 0;
    if (n == 1) return 1;
    return n % 2 == 0 ? (n / 2) * D : ((n - 1) / 2) * D + A;
}

struct StackedVerdict {
    bool is_stacked = false;
    std::optional<std::size_t> D;
    std::optional<std::size_t> A;
    std::optional<std::size_t> d;  // D / A when integral

    bool finite_global_dimension = false;
    std::optional<std::size_t> global_dimension;

    struct Counterexample {
        std::size_t degree = 0;
        Path chain;
        std::size_t length = 0;
        std::size_t expected_length = 0;
    };
    std::optional<Counterexample> counterexample;

    /// Every reachable (tail, degree class) pair and every transition out of
    /// it was checked against the length formula.
    struct Certificate {
        std::size_t reachable_nodes = 0;
        std::size_t transitions_checked = 0;
    };
    std::optional<Certificate> certificate;

    std::vector<std::string> notes;
};

/// Exact (D,A)-stacked decision. The degree classes {1, 2, odd >= 3,
/// even >= 4} make the reachable part of automaton × class finite; the
/// formula holds for all n iff every transition out of a reachable node has
/// the extension length its class demands (D-1, A, D-A, A respectively).
inline StackedVerdict classify_stacked(const MonomialAlgebra& alg, const TailAutomaton& aut) {
    const Quiver& q = alg.quiver();
    StackedVerdict v;
    const auto& rels = alg.relations();
    if (rels.empty()) throw PreconditionError("NoRelations", "stacked classification needs at least one relation");

    // Global dimension from reachability.
    std::vector<std::size_t> all_arrows;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) all_arrows.push_back(aut.arrow_state(a));
    auto reach = detail::analyse_reach(aut, all_arrows);
    if (!reach.cycle) {
        v.finite_global_dimension = true;
        v.global_dimension = q.arrow_count() == 0 ? 0 : reach.longest_walk + 1;
        v.notes.push_back("finite global dimension: chains stop at degree " + std::to_string(*v.global_dimension) +
                          "; every module has trivial variety and the variety machinery is degenerate");
    }

    const std::size_t D = rels.front().length();
    for (const auto& r : rels)
        if (r.length() != D) {
            v.counterexample = StackedVerdict::Counterexample{2, r, r.length(), D};
            v.notes.push_back("relations of unequal length");
            return v;
        }
    v.D = D;

    enum Phase : std::size_t { One = 0, Two = 1, Odd = 2, Even = 3 };
    auto next_phase = [](std::size_t p) -> std::size_t { return p == One ? Two : p == Two ? Odd : p == Odd ? Even : Odd; };
    const std::size_t S = aut.state_count();
    auto node = [S](std::size_t s, std::size_t p) { return p * S + s; };
    std::vector<bool> seen(4 * S, false);
    std::vector<std::size_t> degree(4 * S, 0);
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> pred(4 * S);  // (node, transition idx)
    std::queue<std::size_t> bfs;
    for (std::size_t s : all_arrows)
        if (!seen[node(s, One)]) {
            seen[node(s, One)] = true;
            degree[node(s, One)] = 1;
            bfs.push(node(s, One));
        }

    auto rebuild = [&](std::size_t nd, std::size_t trans_idx) {
        std::vector<Path> pieces;
        std::size_t cur = nd;
        const auto& last = aut.transitions(nd % S)[trans_idx];
        pieces.push_back(last.extension);
        while (pred[cur]) {
            auto [p, t] = *pred[cur];
            pieces.push_back(aut.transitions(p % S)[t].extension);
            cur = p;
        }
        pieces.push_back(aut.state(cur % S));
        Path chain = pieces.back();
        for (auto it = pieces.rbegin() + 1; it != pieces.rend(); ++it) chain = Path::concat(chain, *it);
        return chain;
    };

    std::optional<std::size_t> A;
    std::size_t checked = 0, reachable = 0;
    while (!bfs.empty()) {
        std::size_t nd = bfs.front();
        bfs.pop();
        ++reachable;
        const std::size_t s = nd % S, ph = nd / S;
        const auto& trans = aut.transitions(s);
        for (std::size_t ti = 0; ti < trans.size(); ++ti) {
            const auto& t = trans[ti];
            const std::size_t len = t.extension.length();
            const std::size_t nph = next_phase(ph);
            const std::size_t ndeg = degree[nd] + 1;
            if (nph == Odd && !A) A = len;
            std::size_t want = nph == Two ? D - 1 : nph == Odd ? *A : (A && D > *A ? D - *A : 0);
            ++checked;
            if (len != want) {
                Path chain = rebuild(nd, ti);
                std::size_t expected = A ? stacked_length(ndeg, D, *A) : chain.length() - len + want;
                v.counterexample = StackedVerdict::Counterexample{ndeg, chain, chain.length(), expected};
                v.A = A;
                return v;
            }
            std::size_t nn = node(t.target, nph);
            if (!seen[nn]) {
                seen[nn] = true;
                degree[nn] = ndeg;
                pred[nn] = std::make_pair(nd, ti);
                bfs.push(nn);
            }
        }
    }
    v.is_stacked = true;
    v.A = A;
    if (A && *A > 0 && D % *A == 0) v.d = D / *A;
    if (!A) v.notes.push_back("no degree-3 chains: A is unconstrained");
    v.certificate = StackedVerdict::Certificate{reachable, checked};
    if (!v.finite_global_dimension && (!v.d || *v.d < 2))
        throw InternalConsistencyError("StackedDivisibility",
                                       "stacked algebra of infinite global dimension with A not dividing D");
    return v;
}

inline StackedVerdict classify_stacked(const MonomialAlgebra& alg) {
    return classify_stacked(alg, build_tail_automaton(alg));
}

}  // namespace qalg

#endif
