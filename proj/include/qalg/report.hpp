#ifndef QALG_REPORT_HPP
#define QALG_REPORT_HPP

// JSON and plain-text renderings shared by the command-line tool and the
// golden tests. Every object is built in a fixed key order so that output is
// byte-stable for a given input.

#include <qalg/algebra.hpp>
#include <qalg/chains.hpp>
#include <qalg/hochschild.hpp>
#include <qalg/homology.hpp>
#include <qalg/varieties.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace qalg::report {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

inline std::string vname(const MonomialAlgebra& alg, VertexId v) { return alg.quiver().vertex_name(v); }

inline Json path_json(const MonomialAlgebra& alg, const Path& p) { return alg.format(p); }

inline Json algebra_json(const MonomialAlgebra& alg) {
    Json j;
    j["name"] = alg.name();
    j["vertices"] = alg.quiver().vertex_names();
    Json arrows = Json::array();
    for (const auto& a : alg.quiver().arrows())
        arrows.push_back({{"name", a.name}, {"source", vname(alg, a.source)}, {"target", vname(alg, a.target)}});
    j["arrows"] = arrows;
    Json rels = Json::array();
    for (const auto& r : alg.relations()) rels.push_back(path_json(alg, r));
    j["relations"] = rels;
    j["dimension"] = alg.dimension();
    j["warnings"] = alg.warnings();
    return j;
}

inline Json chains_json(const MonomialAlgebra& alg, const ChainTable& table) {
    Json out = Json::array();
    for (std::size_t n = 0; n <= table.max_degree(); ++n) {
        Json lv = Json::array();
        for (const auto& c : table.level(n)) lv.push_back(path_json(alg, c.path));
        out.push_back({{"degree", n}, {"count", table.level(n).size()}, {"chains", lv}});
    }
    return out;
}

inline Json stacked_json(const MonomialAlgebra& alg, const StackedVerdict& v) {
    Json j;
    j["is_stacked"] = v.is_stacked;
    j["D"] = v.D ? Json(*v.D) : Json(nullptr);
    j["A"] = v.A ? Json(*v.A) : Json(nullptr);
    j["d"] = v.d ? Json(*v.d) : Json(nullptr);
    j["finite_global_dimension"] = v.finite_global_dimension;
    j["global_dimension"] = v.global_dimension ? Json(*v.global_dimension) : Json(nullptr);
    if (v.counterexample)
        j["counterexample"] = {{"degree", v.counterexample->degree},
                               {"chain", path_json(alg, v.counterexample->chain)},
                               {"length", v.counterexample->length},
                               {"expected_length", v.counterexample->expected_length}};
    else
        j["counterexample"] = nullptr;
    if (v.certificate)
        j["certificate"] = {{"reachable_nodes", v.certificate->reachable_nodes},
                            {"transitions_checked", v.certificate->transitions_checked}};
    else
        j["certificate"] = nullptr;
    j["notes"] = v.notes;
    return j;
}

inline Json presentation_json(const MonomialAlgebra& alg, const HHPresentation& pres, const ChainTable* table) {
    Json j;
    j["ring"] = pres.ring_string();
    j["rank"] = pres.rank();
    j["is_trivial_ring"] = pres.is_trivial_ring();
    Json gens = Json::array();
    for (const auto& g : pres.generators) {
        Json gj;
        std::vector<std::string> bases;
        for (auto v : base_vertices(g)) bases.push_back(vname(alg, v));
        if (auto c = std::get_if<ClosedPathGenerator>(&g)) {
            gj["kind"] = "closed_path";
            gj["degree"] = c->degree;
            gj["path"] = path_json(alg, c->cycle);
            gj["power_relation"] = path_json(alg, c->power_relation);
            gj["vertex_not_internal"] = c->vertex_not_internal;
        } else {
            const auto& t = std::get<TrailGenerator>(g);
            gj["kind"] = "trail";
            gj["degree"] = t.degree;
            Json segs = Json::array();
            for (const auto& s : t.segments) segs.push_back(path_json(alg, s));
            gj["segments"] = segs;
            gj["m"] = t.m;
            gj["mu"] = t.mu;
            Json rels = Json::array();
            for (const auto& r : t.relations) rels.push_back(path_json(alg, r));
            gj["associated_relations"] = rels;
        }
        gj["base_vertices"] = bases;
        if (table && degree_of(g) <= table->max_degree()) {
            Json sup = Json::array();
            for (const auto& [c, v] : cocycle_support(alg, g, *table, pres.d))
                sup.push_back({{"chain", path_json(alg, c)}, {"vertex", vname(alg, v)}});
            gj["support_chains"] = sup;
        }
        gens.push_back(gj);
    }
    j["generators"] = gens;
    return j;
}

inline Json varieties_json(const MonomialAlgebra& alg, const std::vector<SimpleVarietyReport>& reps) {
    Json list = Json::array();
    for (const auto& r : reps) {
        // Generators are numbered from 1, matching x1, x2, ... in the ring.
        std::vector<std::size_t> w;
        for (auto i : r.witnesses) w.push_back(i + 1);
        list.push_back({{"vertex", vname(alg, r.vertex)},
                        {"status", to_string(r.status)},
                        {"witnesses", w},
                        {"lines_in_variety", r.lines_in_variety()}});
    }
    return list;
}

inline Json classification_json(const MonomialAlgebra& alg, const std::vector<SimpleVarietyReport>& reps) {
    Json j = Json::object();
    for (const auto& r : reps) j[vname(alg, r.vertex)] = to_string(r.status);
    return j;
}

inline Json pd_json(const MonomialAlgebra& alg, VertexId v, const ProjectiveDimension& pd) {
    Json j{{"vertex", vname(alg, v)}, {"kind", pd.finite ? "Finite" : "Infinite"}};
    if (pd.finite) {
        j["value"] = pd.value;
    } else {
        Json cyc = Json::array();
        for (const auto& t : pd.cycle_tails) cyc.push_back(path_json(alg, t));
        j["cycle_tails"] = cyc;
        j["entry_chain"] = path_json(alg, pd.entry_chain);
    }
    return j;
}

inline Json multiplicities_json(const MonomialAlgebra& alg, const std::map<VertexId, std::size_t>& m) {
    Json j = Json::object();
    for (const auto& [v, k] : m) j[vname(alg, v)] = k;
    return j;
}

inline Json trace_json(const MonomialAlgebra& alg, const ResolutionTrace& tr) {
    Json j;
    j["module"] = tr.module;
    Json terms = Json::array();
    for (std::size_t n = 0; n < tr.terms.size(); ++n)
        terms.push_back({{"degree", n}, {"multiplicities", multiplicities_json(alg, tr.terms[n])}});
    j["terms"] = terms;
    j["outcome"] = to_string(tr.outcome);
    j["bound"] = tr.bound;
    if (tr.certificate) {
        Json types = Json::array();
        for (const auto& t : tr.certificate->types) types.push_back(format_type(alg, t));
        j["certificate"] = {{"first_syzygy", tr.certificate->first_degree},
                            {"repeat_syzygy", tr.certificate->repeat_degree},
                            {"summand_types", types}};
    } else {
        j["certificate"] = nullptr;
    }
    return j;
}

inline Json dimension_json(const MonomialAlgebra& alg, const DimensionVerdict& d) {
    Json j{{"kind", to_string(d.kind)}};
    j["value"] = d.kind == DimensionKind::Infinite ? Json(nullptr) : Json(d.value);
    j["witness_vertex"] = d.witness_vertex ? Json(vname(alg, *d.witness_vertex)) : Json(nullptr);
    return j;
}

inline Json gorenstein_json(const MonomialAlgebra& alg, const GorensteinVerdict& g) {
    return {{"left", dimension_json(alg, g.left)}, {"right", dimension_json(alg, g.right)}, {"verdict", to_string(g.kind)}};
}

inline std::string format_element(const MonomialAlgebra& alg, const Element& e) {
    if (e.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : e) {
        if (!first) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        Rational a = abs(c);
        if (a != 1) out += a.get_str() + "*";
        out += p.is_trivial() ? "e_" + vname(alg, p.origin()) : "(" + alg.format(p) + ")";
        first = false;
    }
    return out;
}

inline Json center_json(const MonomialAlgebra& alg, const CenterPresentation& z) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < z.generators.size(); ++i)
        gens.push_back({{"element", format_element(alg, z.generators[i])}, {"nilpotency", z.nilpotency[i]}});
    Json zero_products = Json::array();
    for (std::size_t i = 1; i < z.k_dimension; ++i)
        for (std::size_t k = i; k < z.k_dimension; ++k) {
            const auto& c = z.products[i][k];
            if (std::all_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) == 0; }))
                zero_products.push_back({i, k});
        }
    return {{"dimension", z.k_dimension}, {"generators", gens}, {"zero_products", zero_products}};
}

inline Json fg_evidence_json(const MonomialAlgebra& alg, const FgEvidence& ev) {
    Json j{{"kind", to_string(ev.kind)},
           {"window", {ev.window_low, ev.window_high}},
           {"max_generator_degree", ev.max_generator_degree},
           {"chains_checked", ev.chains_checked}};
    j["generation_bound"] = ev.generation_bound ? Json(*ev.generation_bound) : Json(nullptr);
    if (ev.non_factoring)
        j["last_non_factoring"] = {{"degree", ev.non_factoring->first}, {"chain", path_json(alg, ev.non_factoring->second)}};
    else
        j["last_non_factoring"] = nullptr;
    j["caveat"] = FgEvidence::caveat;
    return j;
}

inline Json fg_consequence_json(const MonomialAlgebra& alg, const FgConsequenceReport& r) {
    Json list = Json::array();
    for (const auto& v : r.vertices)
        list.push_back({{"vertex", vname(alg, v.vertex)},
                        {"trivial_variety", v.trivial_variety},
                        {"finite_pd", v.finite_pd},
                        {"consistent", v.consistent()}});
    return {{"vertices", list},
            {"all_consistent", r.all_consistent()},
            {"evidence", r.negative_evidence() ? "negative: the finite generation conditions cannot both hold"
                                               : "consistent"}};
}

// Plain-text helpers.

inline std::string multiplicities_text(const MonomialAlgebra& alg, const std::map<VertexId, std::size_t>& m) {
    if (m.empty()) return "0";
    std::string out;
    for (const auto& [v, k] : m) out += (out.empty() ? "" : " + ") + std::to_string(k) + "*P" + vname(alg, v);
    return out;
}

inline std::string stacked_text(const MonomialAlgebra& alg, const StackedVerdict& v) {
    std::ostringstream o;
    o << "stacked: " << (v.is_stacked ? "yes" : "no") << '\n';
    if (v.D) o << "  D = " << *v.D << '\n';
    if (v.A) o << "  A = " << *v.A << '\n';
    if (v.d) o << "  d = " << *v.d << '\n';
    if (v.global_dimension) o << "  global dimension = " << *v.global_dimension << '\n';
    if (v.counterexample)
        o << "  counterexample: degree " << v.counterexample->degree << " chain " << alg.format(v.counterexample->chain)
          << " has length " << v.counterexample->length << ", expected " << v.counterexample->expected_length << '\n';
    for (const auto& n : v.notes) o << "  note: " << n << '\n';
    return o.str();
}

inline std::string presentation_text(const MonomialAlgebra& alg, const HHPresentation& pres) {
    std::ostringstream o;
    o << "HH*/N = " << pres.ring_string() << '\n';
    for (std::size_t i = 0; i < pres.generators.size(); ++i) {
        const auto& g = pres.generators[i];
        o << "  x" << i + 1 << ": degree " << degree_of(g) << ", ";
        if (auto c = std::get_if<ClosedPathGenerator>(&g)) {
            o << "closed path " << alg.format(c->cycle) << " at " << vname(alg, c->vertex);
        } else {
            const auto& t = std::get<TrailGenerator>(g);
            o << "trail";
            for (const auto& s : t.segments) o << " [" << alg.format(s) << "]";
            o << " (m = " << t.m << ", mu = " << t.mu << ")";
        }
        o << '\n';
    }
    return o.str();
}

inline std::string varieties_text(const MonomialAlgebra& alg, const std::vector<SimpleVarietyReport>& reps) {
    std::ostringstream o;
    o << "vertex  variety     witnesses\n";
    for (const auto& r : reps) {
        std::string name = vname(alg, r.vertex);
        o << name << std::string(name.size() < 8 ? 8 - name.size() : 1, ' ') << to_string(r.status)
          << (r.status == VarietyStatus::Trivial ? "     " : "  ");
        if (r.witnesses.empty()) o << "-";
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) o << (i ? "," : "") << "x" << r.witnesses[i] + 1;
        o << '\n';
    }
    return o.str();
}

}  // namespace qalg::report

#endif
