#ifndef QALG_ALGEBRA_HPP
#define QALG_ALGEBRA_HPP

#include <qalg/error.hpp>
#include <qalg/linalg.hpp>
#include <qalg/overlaps.hpp>
#include <qalg/parser.hpp>
#include <qalg/paths.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qalg {

/// Recorded, not enforced: every computation here is field independent.
inline constexpr const char* kFieldAssumption =
    "K algebraically closed, char K != 2 (recorded assumption; all computations are over Q and field independent)";

class ValidationError : public Error {
public:
    enum class Kind { NotMinimal, InfiniteDimensional, NoRelations, BadRelation };

    ValidationError(Kind kind, const std::string& what, std::vector<Path> witness = {})
        : Error(what), kind_(kind), witness_(std::move(witness)) {}

    Kind kind() const noexcept { return kind_; }
    /// NotMinimal: {divisor, multiple}; InfiniteDimensional: {cycle}.
    const std::vector<Path>& witness() const noexcept { return witness_; }

private:
    Kind kind_;
    std::vector<Path> witness_;
};

inline const char* to_string(ValidationError::Kind k) {
    switch (k) {
    case ValidationError::Kind::NotMinimal: return "NotMinimal";
    case ValidationError::Kind::InfiniteDimensional: return "InfiniteDimensional";
    case ValidationError::Kind::NoRelations: return "NoRelations";
    case ValidationError::Kind::BadRelation: return "BadRelation";
    }
    return "?";
}

/// Sparse linear combination of basis paths.
using Element = std::map<Path, Rational>;

/// Λ = KQ/I for I generated by the paths in ρ. Immutable once validated.
class MonomialAlgebra {
public:
    const std::string& name() const noexcept { return name_; }
    const Quiver& quiver() const noexcept { return *quiver_; }
    std::shared_ptr<const Quiver> quiver_ptr() const noexcept { return quiver_; }
    const std::vector<Path>& relations() const noexcept { return relations_; }
    const std::vector<Path>& basis() const noexcept { return basis_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    std::size_t max_relation_length() const noexcept { return max_relation_length_; }

    std::size_t vertex_count() const noexcept { return quiver_->vertex_count(); }

    bool is_nonzero(const Path& p) const { return basis_index_.contains(p); }
    std::optional<std::size_t> basis_index(const Path& p) const {
        auto it = basis_index_.find(p);
        if (it == basis_index_.end()) return std::nullopt;
        return it->second;
    }

    /// True iff some relation occurs inside p.
    bool contains_relation(const Path& p) const {
        for (const auto& r : relations_)
            if (is_subpath(r, p)) return true;
        return false;
    }

    std::optional<std::size_t> relation_index(const Path& p) const {
        for (std::size_t i = 0; i < relations_.size(); ++i)
            if (relations_[i] == p) return i;
        return std::nullopt;
    }

    /// Basis paths starting (resp. ending) at v, in basis order.
    std::vector<Path> paths_from(VertexId v) const {
        std::vector<Path> out;
        for (const auto& p : basis_)
            if (p.origin() == v) out.push_back(p);
        return out;
    }
    std::vector<Path> paths_into(VertexId v) const {
        std::vector<Path> out;
        for (const auto& p : basis_)
            if (p.terminus() == v) out.push_back(p);
        return out;
    }

    std::string format(const Path& p) const { return format_path(*quiver_, p); }

    friend MonomialAlgebra validate(const AlgebraSpec& spec);
    friend MonomialAlgebra make_algebra(std::string name, std::shared_ptr<const Quiver> quiver,
                                        std::vector<Path> relations);

private:
    std::string name_;
    std::shared_ptr<const Quiver> quiver_;
    std::vector<Path> relations_;
    std::vector<Path> basis_;
    std::map<Path, std::size_t> basis_index_;
    std::vector<std::string> warnings_;
    std::size_t max_relation_length_ = 0;
};

namespace detail {

/// Automaton recognising relation-free paths: a state is the longest suffix
/// of the current path that is a proper prefix of some relation.
class NonzeroPathAutomaton {
public:
    NonzeroPathAutomaton(const Quiver& q, const std::vector<Path>& relations) : q_(q), relations_(relations) {
        for (const auto& r : relations)
            for (std::size_t k = 1; k < r.length(); ++k) prefixes_.insert(r.prefix(k));
    }

    /// Next state after appending arrow a, or nullopt if a relation appears.
    std::optional<Path> step(const Path& state, ArrowId a) const {
        Path w = state;
        w.push_back(q_, a);
        for (const auto& r : relations_)
            if (w.ends_with(r)) return std::nullopt;
        for (std::size_t k = std::min(w.length(), max_prefix_len()); k >= 1; --k) {
            Path s = w.suffix(k);
            if (prefixes_.contains(s)) return s;
        }
        return Path::trivial(w.terminus());
    }

private:
    std::size_t max_prefix_len() const {
        std::size_t m = 0;
        for (const auto& r : relations_) m = std::max(m, r.length());
        return m == 0 ? 0 : m - 1;
    }

    const Quiver& q_;
    const std::vector<Path>& relations_;
    std::set<Path> prefixes_;
};

/// Finds a cycle of relation-free extensions; returns its arrow labels.
inline std::optional<Path> find_infinite_witness(const Quiver& q, const std::vector<Path>& relations) {
    NonzeroPathAutomaton aut(q, relations);
    std::map<Path, int> color;  // 0 unseen, 1 on stack, 2 done
    struct Frame {
        Path state;
        std::size_t next_arrow = 0;
        ArrowId via = 0;
    };
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        Path start = Path::trivial(v);
        if (color[start] != 0) continue;
        std::vector<Frame> stack{{start, 0, 0}};
        color[start] = 1;
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto out = q.arrows_from(f.state.terminus());
            if (f.next_arrow == out.size()) {
                color[f.state] = 2;
                stack.pop_back();
                continue;
            }
            ArrowId a = out[f.next_arrow++];
            auto next = aut.step(f.state, a);
            if (!next) continue;
            int c = color[*next];
            if (c == 1) {
                // Cycle: arrows from the frame holding *next to the top, then a.
                std::vector<ArrowId> cyc;
                std::size_t i = stack.size();
                while (i > 0 && !(stack[i - 1].state == *next)) --i;
                for (std::size_t j = i; j < stack.size(); ++j) cyc.push_back(stack[j].via);
                cyc.push_back(a);
                return Path::from_arrows(q, cyc);
            }
            if (c == 0) {
                color[*next] = 1;
                stack.push_back({*next, 0, a});
            }
        }
    }
    return std::nullopt;
}

inline std::vector<Path> enumerate_basis(const Quiver& q, const std::vector<Path>& relations) {
    NonzeroPathAutomaton aut(q, relations);
    std::vector<Path> out;
    struct Item {
        Path path;
        Path state;
    };
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
        std::vector<Item> stack{{Path::trivial(v), Path::trivial(v)}};
        while (!stack.empty()) {
            Item it = std::move(stack.back());
            stack.pop_back();
            for (ArrowId a : q.arrows_from(it.path.terminus())) {
                auto next = aut.step(it.state, a);
                if (!next) continue;
                Path p = it.path;
                p.push_back(q, a);
                stack.push_back({p, *next});
            }
            out.push_back(std::move(it.path));
        }
    }
    std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a < b;
    });
    return out;
}

}  // namespace detail

/// Builds an algebra from paths directly (used for the opposite algebra and
/// by generators); performs the same checks as validate.
inline MonomialAlgebra make_algebra(std::string name, std::shared_ptr<const Quiver> quiver, std::vector<Path> relations) {
    const Quiver& q = *quiver;
    for (const auto& r : relations)
        if (r.length() < 2)
            throw ValidationError(ValidationError::Kind::BadRelation, "relation of length < 2", {r});
    for (std::size_t i = 0; i < relations.size(); ++i)
        for (std::size_t j = 0; j < relations.size(); ++j) {
            if (i == j) continue;
            if (relations[i] == relations[j])
                throw ValidationError(ValidationError::Kind::BadRelation, "duplicate relation", {relations[i]});
            if (is_subpath(relations[i], relations[j]))
                throw ValidationError(ValidationError::Kind::NotMinimal,
                                      "relation set is not minimal: " + format_path(q, relations[i]) + " divides " +
                                          format_path(q, relations[j]),
                                      {relations[i], relations[j]});
        }
    if (auto cyc = detail::find_infinite_witness(q, relations))
        throw ValidationError(ValidationError::Kind::InfiniteDimensional,
                              "algebra is infinite dimensional: the cycle " + format_path(q, *cyc) +
                                  " can be repeated without meeting a relation",
                              {*cyc});
    if (relations.empty())
        throw ValidationError(ValidationError::Kind::NoRelations, "monomial algebra needs at least one relation");

    MonomialAlgebra alg;
    alg.name_ = std::move(name);
    alg.quiver_ = std::move(quiver);
    alg.relations_ = std::move(relations);
    for (const auto& r : alg.relations_) alg.max_relation_length_ = std::max(alg.max_relation_length_, r.length());
    alg.basis_ = detail::enumerate_basis(*alg.quiver_, alg.relations_);
    for (std::size_t i = 0; i < alg.basis_.size(); ++i) alg.basis_index_.emplace(alg.basis_[i], i);
    auto comps = alg.quiver_->components();
    if (comps.size() > 1) {
        std::string msg = "quiver is disconnected (" + std::to_string(comps.size()) + " components:";
        for (const auto& c : comps) {
            msg += " {";
            for (std::size_t i = 0; i < c.size(); ++i) msg += (i ? "," : "") + alg.quiver_->vertex_name(c[i]);
            msg += "}";
        }
        msg += "); the algebra is decomposable";
        alg.warnings_.push_back(msg);
    }
    return alg;
}

inline MonomialAlgebra validate(const AlgebraSpec& spec) {
    auto quiver = std::make_shared<const Quiver>(spec.quiver);
    std::vector<Path> relations;
    for (const auto& names : spec.relations) relations.push_back(Path::from_names(*quiver, names));
    return make_algebra(spec.name, std::move(quiver), std::move(relations));
}

/// The opposite algebra: every arrow and relation reversed. Names are kept.
inline MonomialAlgebra opposite(const MonomialAlgebra& alg) {
    auto q = std::make_shared<Quiver>();
    for (const auto& v : alg.quiver().vertex_names()) q->add_vertex(v);
    for (const auto& a : alg.quiver().arrows()) q->add_arrow(a.name, a.target, a.source);
    std::vector<Path> rels;
    for (const auto& r : alg.relations()) {
        std::vector<ArrowId> rev(r.arrows().rbegin(), r.arrows().rend());
        rels.push_back(Path::from_arrows(*q, rev));
    }
    return make_algebra(alg.name() + "_op", std::move(q), std::move(rels));
}

/// Product of two basis paths; nullopt stands for zero.
inline std::optional<Path> multiply(const MonomialAlgebra& alg, const Path& a, const Path& b) {
    if (a.terminus() != b.origin()) return std::nullopt;
    Path p = Path::concat(a, b);
    if (!alg.is_nonzero(p)) return std::nullopt;
    return p;
}

inline Element multiply(const MonomialAlgebra& alg, const Element& x, const Element& y) {
    Element out;
    for (const auto& [p, cp] : x)
        for (const auto& [q, cq] : y)
            if (auto pq = multiply(alg, p, q)) {
                Rational& slot = out[*pq];
                slot += cp * cq;
                if (sgn(slot) == 0) out.erase(*pq);
            }
    return out;
}

inline Element identity_element(const MonomialAlgebra& alg) {
    Element e;
    for (VertexId v = 0; v < alg.vertex_count(); ++v) e[Path::trivial(v)] = 1;
    return e;
}

/// Z(Λ) with a K-basis: the identity first, then the idempotents of all but
/// the first connected component, then a basis of Z(Λ) ∩ rad Λ.
struct CenterPresentation {
    std::size_t k_dimension = 0;
    std::vector<Element> generators;
    /// Smallest k with g^k = 0 for radical generators; 0 for idempotents.
    std::vector<std::size_t> nilpotency;
    /// products[i][j] = coordinates of generators[i]*generators[j] in the
    /// generator basis, for i, j >= 1.
    std::vector<std::vector<std::vector<Rational>>> products;
};

inline CenterPresentation center(const MonomialAlgebra& alg) {
    const Quiver& q = alg.quiver();
    CenterPresentation out;
    out.generators.push_back(identity_element(alg));
    out.nilpotency.push_back(0);

    auto comps = q.components();
    for (std::size_t c = 1; c < comps.size(); ++c) {
        Element e;
        for (VertexId v : comps[c]) e[Path::trivial(v)] = 1;
        out.generators.push_back(e);
        out.nilpotency.push_back(0);
    }

    // Unknowns: coefficients of closed basis paths of positive length.
    std::vector<Path> closed;
    for (const auto& p : alg.basis())
        if (p.is_closed()) closed.push_back(p);
    std::map<std::pair<ArrowId, std::size_t>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, int>>> rows;
    auto add = [&](ArrowId a, const Path& target, std::size_t unknown, int sign) {
        auto key = std::make_pair(a, *alg.basis_index(target));
        auto [it, inserted] = row_of.emplace(key, rows.size());
        if (inserted) rows.emplace_back();
        rows[it->second].emplace_back(unknown, sign);
    };
    for (std::size_t i = 0; i < closed.size(); ++i) {
        const Path& p = closed[i];
        for (ArrowId a = 0; a < q.arrow_count(); ++a) {
            Path pa_arrow = Path::arrow(q, a);
            if (auto pa = multiply(alg, p, pa_arrow)) add(a, *pa, i, +1);
            if (auto ap = multiply(alg, pa_arrow, p)) add(a, *ap, i, -1);
        }
    }
    Matrix system(rows.size(), closed.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto [col, sign] : rows[r]) system(r, col) += sign;
    NullSpace ns = null_space(system);
    for (std::size_t k = 0; k < ns.dim(); ++k) {
        Element z;
        for (std::size_t i = 0; i < closed.size(); ++i)
            if (sgn(ns.basis(i, k)) != 0) z[closed[i]] = ns.basis(i, k);
        out.generators.push_back(z);
        std::size_t exp = 1;
        Element power = z;
        while (!power.empty()) {
            power = multiply(alg, power, z);
            ++exp;
        }
        out.nilpotency.push_back(exp);
    }
    out.k_dimension = out.generators.size();

    // Express products in the generator basis.
    std::vector<Path> support;
    for (const auto& g : out.generators)
        for (const auto& [p, c] : g) support.push_back(p);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    Matrix gen_matrix(support.size(), out.k_dimension);
    for (std::size_t j = 0; j < out.k_dimension; ++j)
        for (const auto& [p, c] : out.generators[j]) {
            auto pos = std::lower_bound(support.begin(), support.end(), p) - support.begin();
            gen_matrix(static_cast<std::size_t>(pos), j) = c;
        }
    out.products.assign(out.k_dimension, std::vector<std::vector<Rational>>(out.k_dimension));
    for (std::size_t i = 1; i < out.k_dimension; ++i)
        for (std::size_t j = 1; j < out.k_dimension; ++j) {
            Element prod = multiply(alg, out.generators[i], out.generators[j]);
            std::vector<Rational> rhs(support.size());
            bool inside = true;
            for (const auto& [p, c] : prod) {
                auto it = std::lower_bound(support.begin(), support.end(), p);
                if (it == support.end() || !(*it == p)) {
                    inside = false;
                    break;
                }
                rhs[static_cast<std::size_t>(it - support.begin())] = c;
            }
            std::vector<Rational> coords;
            if (!inside || !solve(gen_matrix, rhs, coords))
                throw InternalConsistencyError("CenterNotClosed", "product of central elements left the center");
            out.products[i][j] = coords;
        }
    return out;
}

/// Checks that z commutes with every basis path.
inline bool is_central(const MonomialAlgebra& alg, const Element& z) {
    for (const auto& p : alg.basis()) {
        Element ep{{p, Rational(1)}};
        if (multiply(alg, z, ep) != multiply(alg, ep, z)) return false;
    }
    return true;
}

}  // namespace qalg

#endif
