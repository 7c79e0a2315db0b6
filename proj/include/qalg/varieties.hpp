#ifndef QALG_VARIETIES_HPP
#define QALG_VARIETIES_HPP

#include <qalg/chains.hpp>
#include <qalg/hochschild.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace qalg {

enum class VarietyStatus { Trivial, Nontrivial };

inline const char* to_string(VarietyStatus s) { return s == VarietyStatus::Trivial ? "Trivial" : "Nontrivial"; }

/// Symbolic support variety of one simple module. A nontrivial variety is
/// the union of the coordinate lines of its witness generators.
struct SimpleVarietyReport {
    VertexId vertex = 0;
    VarietyStatus status = VarietyStatus::Trivial;
    std::vector<std::size_t> witnesses;  // generator indices
    std::size_t lines_in_variety() const noexcept { return witnesses.size(); }
    /// Set for trivial varieties: the variety is the single graded maximal ideal.
    std::string trivial_point_note;
};

inline std::vector<SimpleVarietyReport> classify_simples(const MonomialAlgebra& alg, const HHPresentation& pres) {
    std::vector<SimpleVarietyReport> out;
    for (VertexId v = 0; v < alg.vertex_count(); ++v) {
        SimpleVarietyReport rep;
        rep.vertex = v;
        for (std::size_t i = 0; i < pres.generators.size(); ++i) {
            auto bases = base_vertices(pres.generators[i]);
            if (std::find(bases.begin(), bases.end(), v) != bases.end()) rep.witnesses.push_back(i);
        }
        if (rep.witnesses.empty()) {
            std::string coords;
            for (std::size_t i = 1; i <= pres.rank(); ++i) coords += (i > 1 ? "," : "") + std::string("x") + std::to_string(i);
            rep.trivial_point_note = "V(S) = {(" + coords + ")}";
        } else {
            rep.status = VarietyStatus::Nontrivial;
        }
        out.push_back(std::move(rep));
    }
    return out;
}

enum class PropertyOutcome { Pass, VacuouslyTrue, Fail };

inline const char* to_string(PropertyOutcome p) {
    switch (p) {
    case PropertyOutcome::Pass: return "Pass";
    case PropertyOutcome::VacuouslyTrue: return "VacuouslyTrue";
    case PropertyOutcome::Fail: return "Fail";
    }
    return "?";
}

/// If every simple has a nontrivial variety then A must be 1.
inline PropertyOutcome check_all_nontrivial_implies_A1(const StackedVerdict& verdict,
                                                       const std::vector<SimpleVarietyReport>& reports) {
    for (const auto& r : reports)
        if (r.status == VarietyStatus::Trivial) return PropertyOutcome::VacuouslyTrue;
    return verdict.A && *verdict.A == 1 ? PropertyOutcome::Pass : PropertyOutcome::Fail;
}

struct FgConsistency {
    VertexId vertex = 0;
    bool trivial_variety = false;
    bool finite_pd = false;
    bool consistent() const noexcept { return trivial_variety == finite_pd; }
};

struct FgConsequenceReport {
    std::vector<FgConsistency> vertices;
    bool all_consistent() const {
        return std::all_of(vertices.begin(), vertices.end(), [](const auto& v) { return v.consistent(); });
    }
    /// A mismatch shows the finite generation conditions cannot both hold.
    bool negative_evidence() const { return !all_consistent(); }
};

inline FgConsequenceReport fg_consequence_report(const std::vector<SimpleVarietyReport>& reports,
                                                 const std::vector<ProjectiveDimension>& pds) {
    FgConsequenceReport out;
    for (const auto& r : reports)
        out.vertices.push_back({r.vertex, r.status == VarietyStatus::Trivial, pds.at(r.vertex).finite});
    return out;
}

}  // namespace qalg

#endif
