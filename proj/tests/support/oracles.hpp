#ifndef QALG_TESTS_ORACLES_HPP
#define QALG_TESTS_ORACLES_HPP

// Deliberately naive reference computations used to cross-check the
// library: they share no code with the automata and reductions they test.

#include <qalg/algebra.hpp>
#include <qalg/chains.hpp>
#include <qalg/linalg.hpp>

#include <set>
#include <vector>

namespace qalg::testing {

/// All paths of length <= max_len containing no relation, by breadth-first
/// extension and substring search.
inline std::set<Path> brute_force_basis(const Quiver& q, const std::vector<Path>& rels, std::size_t max_len) {
    std::set<Path> out;
    std::vector<Path> layer;
    for (VertexId v = 0; v < q.vertex_count(); ++v) layer.push_back(Path::trivial(v));
    for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
        std::vector<Path> next;
        for (const auto& p : layer) {
            bool zero = false;
            for (const auto& r : rels) zero = zero || p.find(r).has_value();
            if (zero) continue;
            out.insert(p);
            for (ArrowId a : q.arrows_from(p.terminus())) {
                Path x = p;
                x.push_back(q, a);
                next.push_back(std::move(x));
            }
        }
        layer = std::move(next);
    }
    return out;
}

/// dim Z(Λ) from the full commutation system over every basis path.
inline std::size_t brute_force_center_dimension(const MonomialAlgebra& alg) {
    const auto& basis = alg.basis();
    const Quiver& q = alg.quiver();
    std::vector<Path> gens;
    for (VertexId v = 0; v < q.vertex_count(); ++v) gens.push_back(Path::trivial(v));
    for (ArrowId a = 0; a < q.arrow_count(); ++a) gens.push_back(Path::arrow(q, a));
    const std::size_t n = basis.size();
    Matrix sys(gens.size() * n, n);
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
        for (std::size_t j = 0; j < n; ++j) {
            if (auto zx = multiply(alg, basis[j], gens[gi])) sys(gi * n + *alg.basis_index(*zx), j) += 1;
            if (auto xz = multiply(alg, gens[gi], basis[j])) sys(gi * n + *alg.basis_index(*xz), j) -= 1;
        }
    return n - rank(sys);
}

/// Length a degree-n chain must have in a (D,A)-stacked algebra.
inline std::size_t stacked_formula(std::size_t n, std::size_t D, std::size_t A) {
    if (n == 0) return 0;
    if (n == 1) return 1;
    return n % 2 == 0 ? n / 2 * D : (n - 1) / 2 * D + A;
}

}  // namespace qalg::testing

#endif
