#include <qalg/algebra.hpp>
#include <qalg/chains.hpp>
#include <qalg/hochschild.hpp>
#include <qalg/homology.hpp>
#include <qalg/parser.hpp>
#include <qalg/report.hpp>
#include <qalg/varieties.hpp>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using qalg::report::Json;

enum Exit { kOk = 0, kInvalid = 1, kPrecondition = 2, kInternal = 3 };

struct Options {
    bool json = false;
    bool parallel = false;
    bool timing = false;
    std::string file;
    std::size_t max_degree = 12;
    std::size_t resolve_max = 20;
    std::optional<std::string> vertex;
    std::string module;
    std::string window;
};

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<std::size_t> env_bound() {
    const char* s = std::getenv("QALG_MAX_DEGREE");
    if (!s || !*s) return std::nullopt;
    try {
        std::size_t pos = 0;
        unsigned long v = std::stoul(s, &pos);
        if (pos != std::string(s).size()) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw InputError(std::string("QALG_MAX_DEGREE: not a nonnegative integer: ") + s);
    }
}

struct Loaded {
    std::string text;
    std::string hash;
    qalg::MonomialAlgebra alg;
};

Loaded load(const std::string& path) {
    std::string text = read_file(path);
    std::string hash = sha256_hex(text);
    auto spec = qalg::parse(text);
    return {std::move(text), std::move(hash), qalg::validate(spec)};
}

Json header(const std::string& command, const Options& o, const std::string& hash) {
    Json j;
    j["schema"] = qalg::report::kSchema;
    j["command"] = command;
    j["input"] = {{"file", o.file}, {"sha256", hash}, {"assumption", qalg::kFieldAssumption}};
    return j;
}

qalg::VertexId vertex_arg(const qalg::MonomialAlgebra& alg, const std::string& name) {
    auto v = alg.quiver().find_vertex(name);
    if (!v) throw qalg::PreconditionError("UnknownVertex", "unknown vertex '" + name + "'");
    return *v;
}

qalg::HHPresentation presentation_or_throw(const qalg::MonomialAlgebra& alg, const qalg::StackedVerdict& v) {
    if (!v.is_stacked) {
        std::string why = "algebra is not (D,A)-stacked";
        if (v.counterexample)
            why += ": degree-" + std::to_string(v.counterexample->degree) + " chain " +
                   alg.format(v.counterexample->chain) + " has length " + std::to_string(v.counterexample->length) +
                   ", expected " + std::to_string(v.counterexample->expected_length);
        throw qalg::PreconditionError("NotStacked", why);
    }
    return qalg::find_generators(alg, v);
}

std::size_t top_degree(const qalg::HHPresentation& pres) {
    std::size_t top = 0;
    for (const auto& g : pres.generators) top = std::max(top, qalg::degree_of(g));
    return top;
}

std::pair<std::size_t, std::size_t> parse_window(const std::string& w) {
    auto dots = w.find("..");
    if (dots == std::string::npos) throw InputError("window must look like a..b, got '" + w + "'");
    try {
        std::size_t a = std::stoul(w.substr(0, dots)), b = std::stoul(w.substr(dots + 2));
        if (a > b) throw InputError("window lower end exceeds upper end");
        return {a, b};
    } catch (const std::logic_error&) {
        throw InputError("window must look like a..b, got '" + w + "'");
    }
}

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

int cmd_validate(const Options& o) {
    auto in = load(o.file);
    const auto& alg = in.alg;
    Json j = header("validate", o, in.hash);
    j["valid"] = true;
    j["algebra"] = qalg::report::algebra_json(alg);
    std::ostringstream t;
    t << "algebra " << alg.name() << ": valid\n"
      << "  vertices " << alg.vertex_count() << ", arrows " << alg.quiver().arrow_count() << ", relations "
      << alg.relations().size() << ", dimension " << alg.dimension() << '\n';
    for (const auto& w : alg.warnings()) t << "  warning: " << w << '\n';
    t << "  assumption: " << qalg::kFieldAssumption << '\n';
    emit(o, j, t.str());
    return kOk;
}

int cmd_chains(const Options& o) {
    auto in = load(o.file);
    auto table = qalg::chains(in.alg, o.max_degree, o.parallel);
    Json j = header("chains", o, in.hash);
    j["max_degree"] = o.max_degree;
    j["degrees"] = qalg::report::chains_json(in.alg, table);
    std::ostringstream t;
    for (std::size_t n = 0; n <= table.max_degree(); ++n) {
        t << "R^" << n << " (" << table.level(n).size() << "):";
        for (const auto& c : table.level(n)) t << " [" << in.alg.format(c.path) << "]";
        t << '\n';
    }
    emit(o, j, t.str());
    return kOk;
}

int cmd_stacked(const Options& o) {
    auto in = load(o.file);
    auto v = qalg::classify_stacked(in.alg);
    Json j = header("stacked", o, in.hash);
    j["stacked"] = qalg::report::stacked_json(in.alg, v);
    emit(o, j, qalg::report::stacked_text(in.alg, v));
    return kOk;
}

int cmd_hh(const Options& o) {
    auto in = load(o.file);
    auto v = qalg::classify_stacked(in.alg);
    auto pres = presentation_or_throw(in.alg, v);
    auto table = qalg::chains(in.alg, std::max<std::size_t>(top_degree(pres), 2), o.parallel);
    Json j = header("hh", o, in.hash);
    j["presentation"] = qalg::report::presentation_json(in.alg, pres, &table);
    std::ostringstream t;
    t << qalg::report::presentation_text(in.alg, pres);
    for (std::size_t i = 0; i < pres.generators.size(); ++i) {
        t << "  support of x" << i + 1 << ":";
        for (const auto& [c, vx] : qalg::cocycle_support(in.alg, pres.generators[i], table, pres.d))
            t << " [" << in.alg.format(c) << " -> e_" << in.alg.quiver().vertex_name(vx) << "]";
        t << '\n';
    }
    emit(o, j, t.str());
    return kOk;
}

int cmd_classify(const Options& o) {
    auto in = load(o.file);
    auto v = qalg::classify_stacked(in.alg);
    auto pres = presentation_or_throw(in.alg, v);
    auto reps = qalg::classify_simples(in.alg, pres);
    auto a1 = qalg::check_all_nontrivial_implies_A1(v, reps);
    if (a1 == qalg::PropertyOutcome::Fail)
        throw qalg::InternalConsistencyError("A1Violation", "all simples are nontrivial but A != 1");
    Json j = header("classify-simples", o, in.hash);
    j["ring"] = pres.ring_string();
    j["classification"] = qalg::report::classification_json(in.alg, reps);
    j["varieties"] = qalg::report::varieties_json(in.alg, reps);
    j["all_nontrivial_implies_A1"] = qalg::to_string(a1);
    emit(o, j, qalg::report::varieties_text(in.alg, reps));
    return kOk;
}

int cmd_pd(const Options& o) {
    auto in = load(o.file);
    auto aut = qalg::build_tail_automaton(in.alg);
    std::vector<qalg::VertexId> vs;
    if (o.vertex)
        vs.push_back(vertex_arg(in.alg, *o.vertex));
    else
        for (qalg::VertexId v = 0; v < in.alg.vertex_count(); ++v) vs.push_back(v);
    Json list = Json::array();
    std::ostringstream t;
    for (auto v : vs) {
        auto pd = qalg::proj_dim_simple(in.alg, aut, v);
        list.push_back(qalg::report::pd_json(in.alg, v, pd));
        t << "pd S_" << in.alg.quiver().vertex_name(v) << " = ";
        if (pd.finite)
            t << pd.value << '\n';
        else
            t << "infinite (chain " << in.alg.format(pd.entry_chain) << " enters a cycle of "
              << pd.cycle_tails.size() << " tails)\n";
    }
    Json j = header("pd", o, in.hash);
    j["projective_dimensions"] = list;
    emit(o, j, t.str());
    return kOk;
}

int cmd_resolve(const Options& o) {
    auto in = load(o.file);
    auto colon = o.module.find(':');
    if (colon == std::string::npos) throw InputError("--module must be simple:<v>, proj:<v> or inj:<v>");
    std::string kind = o.module.substr(0, colon);
    auto v = vertex_arg(in.alg, o.module.substr(colon + 1));
    qalg::Representation m;
    if (kind == "simple")
        m = qalg::simple(in.alg, v);
    else if (kind == "proj")
        m = qalg::projective(in.alg, v);
    else if (kind == "inj")
        m = qalg::injective(in.alg, v);
    else
        throw InputError("unknown module kind '" + kind + "'");
    auto tr = qalg::resolve(m, o.resolve_max, o.module);
    Json j = header("resolve", o, in.hash);
    j["resolution"] = qalg::report::trace_json(in.alg, tr);
    std::ostringstream t;
    t << "resolution of " << o.module << '\n';
    for (std::size_t n = 0; n < tr.terms.size(); ++n)
        t << "  P_" << n << " = " << qalg::report::multiplicities_text(in.alg, tr.terms[n]) << '\n';
    t << "  outcome: " << qalg::to_string(tr.outcome) << "(" << tr.bound << ")\n";
    if (tr.certificate)
        t << "  certificate: syzygies " << tr.certificate->first_degree << " and " << tr.certificate->repeat_degree
          << " have the same summand types\n";
    emit(o, j, t.str());
    return kOk;
}

int cmd_center(const Options& o) {
    auto in = load(o.file);
    auto z = qalg::center(in.alg);
    Json j = header("center", o, in.hash);
    j["center"] = qalg::report::center_json(in.alg, z);
    std::ostringstream t;
    t << "dim Z = " << z.k_dimension << '\n';
    for (std::size_t i = 0; i < z.generators.size(); ++i)
        t << "  z" << i << " = " << qalg::report::format_element(in.alg, z.generators[i]) << '\n';
    emit(o, j, t.str());
    return kOk;
}

int cmd_ext(const Options& o) {
    auto in = load(o.file);
    auto table = qalg::chains(in.alg, o.max_degree, o.parallel);
    Json j = header("ext", o, in.hash);
    Json degs = Json::array();
    std::ostringstream t;
    for (std::size_t n = 0; n <= table.max_degree(); ++n) {
        Json basis = Json::array();
        for (const auto& p : qalg::ext_basis(table, n)) basis.push_back(in.alg.format(p));
        degs.push_back({{"degree", n}, {"dimension", basis.size()}, {"basis", basis}});
        t << "dim Ext^" << n << " = " << basis.size() << '\n';
    }
    j["max_degree"] = o.max_degree;
    j["degrees"] = degs;
    emit(o, j, t.str());
    return kOk;
}

int cmd_fg(const Options& o) {
    auto in = load(o.file);
    auto v = qalg::classify_stacked(in.alg);
    auto pres = presentation_or_throw(in.alg, v);
    auto [lo, hi] = o.window.empty() ? qalg::default_fg_window(pres) : parse_window(o.window);
    auto table = qalg::chains(in.alg, std::max({hi, top_degree(pres), std::size_t{2}}), o.parallel);
    auto ev = qalg::fg2_factorization_probe(in.alg, pres, table, lo, hi);
    Json j = header("fg-probe", o, in.hash);
    j["fg_evidence"] = qalg::report::fg_evidence_json(in.alg, ev);
    std::ostringstream t;
    t << "fg2 factorization probe on [" << lo << "," << hi << "]: " << qalg::to_string(ev.kind) << '\n';
    if (ev.generation_bound) t << "  chains above degree " << *ev.generation_bound << " factor through generators\n";
    if (ev.non_factoring)
        t << "  last non-factoring chain: degree " << ev.non_factoring->first << " "
          << in.alg.format(ev.non_factoring->second) << '\n';
    t << "  " << qalg::FgEvidence::caveat << '\n';
    emit(o, j, t.str());
    return kOk;
}

int cmd_report(const Options& o) {
    auto start = std::chrono::steady_clock::now();
    auto in = load(o.file);
    const auto& alg = in.alg;
    Json j = header("report", o, in.hash);
    j["algebra"] = qalg::report::algebra_json(alg);
    j["validation"] = {{"ok", true}};
    std::ostringstream t;
    t << "algebra " << alg.name() << " (dimension " << alg.dimension() << ")\n";
    t << "assumption: " << qalg::kFieldAssumption << '\n';
    for (const auto& w : alg.warnings()) t << "warning: " << w << '\n';

    auto aut = qalg::build_tail_automaton(alg);
    auto verdict = qalg::classify_stacked(alg, aut);
    j["stacked"] = qalg::report::stacked_json(alg, verdict);
    t << qalg::report::stacked_text(alg, verdict);

    std::vector<qalg::ProjectiveDimension> pds;
    Json pd_list = Json::array();
    for (qalg::VertexId v = 0; v < alg.vertex_count(); ++v) {
        pds.push_back(qalg::proj_dim_simple(alg, aut, v));
        pd_list.push_back(qalg::report::pd_json(alg, v, pds.back()));
    }

    if (verdict.is_stacked) {
        auto pres = qalg::find_generators(alg, verdict);
        auto [lo, hi] = qalg::default_fg_window(pres);
        auto table = qalg::chains(alg, std::max({hi, top_degree(pres), std::size_t{2}}), o.parallel);
        j["presentation"] = qalg::report::presentation_json(alg, pres, &table);
        t << qalg::report::presentation_text(alg, pres);
        auto reps = qalg::classify_simples(alg, pres);
        auto a1 = qalg::check_all_nontrivial_implies_A1(verdict, reps);
        if (a1 == qalg::PropertyOutcome::Fail)
            throw qalg::InternalConsistencyError("A1Violation", "all simples are nontrivial but A != 1");
        j["classification"] = qalg::report::classification_json(alg, reps);
        j["varieties"] = qalg::report::varieties_json(alg, reps);
        j["all_nontrivial_implies_A1"] = qalg::to_string(a1);
        t << qalg::report::varieties_text(alg, reps);
        auto fgc = qalg::fg_consequence_report(reps, pds);
        j["fg_consequence"] = qalg::report::fg_consequence_json(alg, fgc);
        auto ev = qalg::fg2_factorization_probe(alg, pres, table, lo, hi);
        j["fg_evidence"] = qalg::report::fg_evidence_json(alg, ev);
        t << "trivial variety <=> finite pd: " << (fgc.all_consistent() ? "consistent" : "mismatch") << '\n';
        t << "fg2 factorization probe [" << lo << "," << hi << "]: " << qalg::to_string(ev.kind) << '\n';
    } else {
        j["presentation"] = nullptr;
        j["classification"] = nullptr;
        j["varieties"] = nullptr;
        j["all_nontrivial_implies_A1"] = nullptr;
        j["fg_consequence"] = nullptr;
        j["fg_evidence"] = nullptr;
        t << "presentation: not computed (algebra is not stacked)\n";
    }

    j["projective_dimensions"] = pd_list;
    for (qalg::VertexId v = 0; v < alg.vertex_count(); ++v)
        t << "pd S_" << alg.quiver().vertex_name(v) << " = "
          << (pds[v].finite ? std::to_string(pds[v].value) : std::string("infinite")) << '\n';

    auto z = qalg::center(alg);
    j["center"] = qalg::report::center_json(alg, z);
    j["center"]["candidate_note"] = "candidate only: Z(Λ) together with the polynomial part of the presentation";
    t << "dim Z = " << z.k_dimension << '\n';

    auto g = qalg::gorenstein_probe(alg, o.resolve_max);
    j["homology"] = {{"injective_dimension", qalg::report::gorenstein_json(alg, g)}};
    auto dim_text = [](const qalg::DimensionVerdict& d) {
        if (d.kind == qalg::DimensionKind::Infinite) return std::string("infinite");
        return std::string(d.kind == qalg::DimensionKind::AtLeast ? ">= " : "") + std::to_string(d.value);
    };
    t << "injective dimension: left " << dim_text(g.left) << ", right " << dim_text(g.right) << '\n';
    t << "gorenstein: " << qalg::to_string(g.kind) << '\n';

    if (o.timing) {
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        j["timing_ms"] = ms;
        t << "time: " << ms << " ms\n";
    }
    emit(o, j, t.str());
    return kOk;
}

void diagnose(const Options& o, const std::string& code, const std::string& msg) {
    std::cerr << o.file << ": error " << code << ": " << msg << '\n';
    if (o.json) {
        Json j;
        j["schema"] = qalg::report::kSchema;
        j["error"] = {{"code", code}, {"message", msg}};
        std::cout << j.dump(2) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qalg: homological invariants of finite dimensional monomial algebras"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Emit JSON instead of text");
    app.add_flag("--parallel", o.parallel, "Expand chains on one task per vertex");
    app.add_flag("--timing", o.timing, "Include wall-clock timing in report output");

    auto add = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.file, ".qalg input")->required();
        return sub;
    };
    auto* validate = add("validate", "Parse and validate an algebra");
    auto* chains = add("chains", "List the chains R^n");
    chains->add_option("--max-degree", o.max_degree, "Highest degree");
    auto* stacked = add("stacked", "Decide the stacked property");
    auto* hh = add("hh", "Hochschild cohomology modulo nilpotents");
    auto* classify = add("classify-simples", "Support varieties of the simple modules");
    auto* pd = add("pd", "Projective dimensions of simple modules");
    pd->add_option("--vertex", o.vertex, "Single vertex");
    auto* resolve = add("resolve", "Minimal projective resolution of a standard module");
    resolve->add_option("--module", o.module, "simple:<v>, proj:<v> or inj:<v>")->required();
    resolve->add_option("--max", o.resolve_max, "Number of terms");
    auto* center = add("center", "Centre of the algebra");
    auto* ext = add("ext", "Ext algebra basis");
    ext->add_option("--max-degree", o.max_degree, "Highest degree");
    auto* fg = add("fg-probe", "Factorization probe for finite generation");
    fg->add_option("--window", o.window, "Degree window a..b");
    auto* report = add("report", "Full pipeline");

    try {
        if (auto b = env_bound()) {
            o.max_degree = *b;
            o.resolve_max = *b;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInvalid;
    }

    try {
        if (validate->parsed()) return cmd_validate(o);
        if (chains->parsed()) return cmd_chains(o);
        if (stacked->parsed()) return cmd_stacked(o);
        if (hh->parsed()) return cmd_hh(o);
        if (classify->parsed()) return cmd_classify(o);
        if (pd->parsed()) return cmd_pd(o);
        if (resolve->parsed()) return cmd_resolve(o);
        if (center->parsed()) return cmd_center(o);
        if (ext->parsed()) return cmd_ext(o);
        if (fg->parsed()) return cmd_fg(o);
        if (report->parsed()) return cmd_report(o);
    } catch (const qalg::ParseError& e) {
        std::cerr << o.file << ":" << e.what() << '\n';
        if (o.json) {
            Json j;
            j["schema"] = qalg::report::kSchema;
            j["error"] = {{"code", e.code()}, {"line", e.line()}, {"column", e.column()}, {"message", e.message()}};
            std::cout << j.dump(2) << '\n';
        }
        return kInvalid;
    } catch (const qalg::ValidationError& e) {
        diagnose(o, qalg::to_string(e.kind()), e.what());
        return kInvalid;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const qalg::PreconditionError& e) {
        diagnose(o, e.code(), e.what());
        return kPrecondition;
    } catch (const qalg::InternalConsistencyError& e) {
        diagnose(o, e.code(), e.what());
        return kInternal;
    } catch (const std::exception& e) {
        diagnose(o, "Internal", e.what());
        return kInternal;
    }
    return kOk;
}
