#ifndef QALG_TESTS_FIXTURES_HPP
#define QALG_TESTS_FIXTURES_HPP

#include <qalg/algebra.hpp>
#include <qalg/parser.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace qalg::testing {

inline std::string fixture_path(const std::string& name) { return std::string(QALG_FIXTURES) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline MonomialAlgebra load_fixture(const std::string& name) { return validate(parse(read_fixture(name))); }

inline const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names{"four_cycle_trail.qalg", "example1.qalg", "example2.qalg",
                                                "example3.qalg",         "example4.qalg", "nonstacked.qalg"};
    return names;
}

/// Path from space-separated arrow names.
inline Path P(const MonomialAlgebra& alg, const std::string& names) {
    std::istringstream in(names);
    std::vector<std::string> parts;
    for (std::string s; in >> s;) parts.push_back(s);
    return Path::from_names(alg.quiver(), parts);
}

inline Path E(const MonomialAlgebra& alg, const std::string& vertex) {
    return Path::trivial(alg.quiver().vertex(vertex));
}

/// Formatted paths, for order-free comparisons.
inline std::set<std::string> formatted(const MonomialAlgebra& alg, const std::vector<Path>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(alg.format(p));
    return out;
}

inline VertexId V(const MonomialAlgebra& alg, const std::string& name) { return alg.quiver().vertex(name); }

}  // namespace qalg::testing

#endif
