#ifndef QALG_PARSER_HPP
#define QALG_PARSER_HPP

// Reader and canonical printer for the line-oriented `.qalg` format:
//
//   algebra <name>
//   vertices <id> <id> ...          (one or more lines)
//   arrow <id> <source> <target>    (one per line)
//   rel <arrow> <arrow> ...         (one per line, composed left to right)
//
// `#` starts a comment; tokens are separated by ASCII whitespace.

#include <qalg/error.hpp>
#include <qalg/paths.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace qalg {

struct AlgebraSpec {
    std::string name;
    Quiver quiver;
    std::vector<std::vector<std::string>> relations;
};

/// Stable diagnostic codes; the numeric part never changes meaning.
namespace parse_code {
inline constexpr const char* lexical = "E001";
inline constexpr const char* syntax = "E002";
inline constexpr const char* unknown_vertex = "E003";
inline constexpr const char* unknown_arrow = "E004";
inline constexpr const char* not_composable = "E005";
inline constexpr const char* short_relation = "E006";
inline constexpr const char* duplicate_name = "E007";
inline constexpr const char* duplicate_relation = "E008";
inline constexpr const char* no_vertices = "E009";
}  // namespace parse_code

class ParseError : public Error {
public:
    ParseError(std::string code, std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": error " + code + ": " + message),
          code_(std::move(code)), line_(line), column_(column), message_(message) {}

    const std::string& code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string code_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

namespace detail {

struct Token {
    std::string text;
    std::size_t column;  // 1-based
};

inline bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    const auto c0 = static_cast<unsigned char>(s[0]);
    if (std::isdigit(c0))
        return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (!(std::isalpha(c0) || s[0] == '_') || c0 >= 0x80) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return u < 0x80 && (std::isalnum(u) || c == '_');
    });
}

inline std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != '#' && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '\f' && line[i] != '\v')
            ++i;
        out.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return out;
}

/// Integers sort numerically and before names; names sort bytewise.
inline bool vertex_name_less(const std::string& a, const std::string& b) {
    const bool na = !a.empty() && std::isdigit(static_cast<unsigned char>(a[0]));
    const bool nb = !b.empty() && std::isdigit(static_cast<unsigned char>(b[0]));
    if (na != nb) return na;
    if (na) {
        auto strip = [](const std::string& s) {
            auto pos = s.find_first_not_of('0');
            return pos == std::string::npos ? std::string("0") : s.substr(pos);
        };
        std::string sa = strip(a), sb = strip(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
    }
    return a < b;
}

}  // namespace detail

inline AlgebraSpec parse(std::string_view text) {
    AlgebraSpec spec;
    bool have_header = false;
    bool have_vertices = false;
    std::set<std::vector<std::string>> seen_relations;
    std::size_t line_no = 0;
    std::size_t pos = 0;

    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        auto tokens = detail::tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }
        for (const auto& t : tokens)
            if (!detail::is_identifier(t.text))
                throw ParseError(parse_code::lexical, line_no, t.column, "invalid token '" + t.text + "'");

        const std::string& kw = tokens[0].text;
        const std::size_t kw_col = tokens[0].column;

        if (!have_header) {
            if (kw != "algebra")
                throw ParseError(parse_code::syntax, line_no, kw_col, "expected 'algebra <name>' as the first line");
            if (tokens.size() != 2)
                throw ParseError(parse_code::syntax, line_no, kw_col, "'algebra' takes exactly one name");
            spec.name = tokens[1].text;
            have_header = true;
        } else if (kw == "algebra") {
            throw ParseError(parse_code::syntax, line_no, kw_col, "duplicate 'algebra' header");
        } else if (kw == "vertices") {
            if (tokens.size() < 2)
                throw ParseError(parse_code::no_vertices, line_no, kw_col, "at least one vertex required");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                if (spec.quiver.find_vertex(tokens[i].text))
                    throw ParseError(parse_code::duplicate_name, line_no, tokens[i].column,
                                     "duplicate vertex '" + tokens[i].text + "'");
                spec.quiver.add_vertex(tokens[i].text);
            }
            have_vertices = true;
        } else if (kw == "arrow") {
            if (tokens.size() != 4)
                throw ParseError(parse_code::syntax, line_no, kw_col, "'arrow' takes a name, a source and a target");
            if (spec.quiver.find_arrow(tokens[1].text))
                throw ParseError(parse_code::duplicate_name, line_no, tokens[1].column,
                                 "duplicate arrow '" + tokens[1].text + "'");
            auto src = spec.quiver.find_vertex(tokens[2].text);
            if (!src)
                throw ParseError(parse_code::unknown_vertex, line_no, tokens[2].column,
                                 "unknown vertex '" + tokens[2].text + "'");
            auto tgt = spec.quiver.find_vertex(tokens[3].text);
            if (!tgt)
                throw ParseError(parse_code::unknown_vertex, line_no, tokens[3].column,
                                 "unknown vertex '" + tokens[3].text + "'");
            spec.quiver.add_arrow(tokens[1].text, *src, *tgt);
        } else if (kw == "rel") {
            std::vector<std::string> rel;
            std::optional<VertexId> prev_target;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                auto a = spec.quiver.find_arrow(tokens[i].text);
                if (!a)
                    throw ParseError(parse_code::unknown_arrow, line_no, tokens[i].column,
                                     "unknown arrow '" + tokens[i].text + "'");
                const Arrow& arr = spec.quiver.arrow(*a);
                if (prev_target && *prev_target != arr.source)
                    throw ParseError(parse_code::not_composable, line_no, tokens[i].column,
                                     "relation does not compose at junction " + std::to_string(i - 1) + " ('" +
                                         tokens[i - 1].text + "' then '" + tokens[i].text + "')");
                prev_target = arr.target;
                rel.push_back(tokens[i].text);
            }
            if (rel.size() < 2)
                throw ParseError(parse_code::short_relation, line_no, kw_col, "relations must have length at least 2");
            if (!seen_relations.insert(rel).second)
                throw ParseError(parse_code::duplicate_relation, line_no, kw_col, "duplicate relation");
            spec.relations.push_back(std::move(rel));
        } else {
            throw ParseError(parse_code::syntax, line_no, kw_col, "unknown keyword '" + kw + "'");
        }
        if (end == text.size()) break;
    }

    if (!have_header) throw ParseError(parse_code::syntax, line_no == 0 ? 1 : line_no, 1, "missing 'algebra <name>' header");
    if (!have_vertices || spec.quiver.vertex_count() == 0)
        throw ParseError(parse_code::no_vertices, line_no, 1, "at least one vertex required");
    return spec;
}

/// Canonical text: sorted vertices on one line, arrows in declaration order,
/// one relation per line.
inline std::string print(const AlgebraSpec& spec) {
    std::vector<std::string> vertices = spec.quiver.vertex_names();
    std::sort(vertices.begin(), vertices.end(), detail::vertex_name_less);
    std::ostringstream out;
    out << "algebra " << spec.name << '\n';
    out << "vertices";
    for (const auto& v : vertices) out << ' ' << v;
    out << '\n';
    for (const auto& a : spec.quiver.arrows())
        out << "arrow " << a.name << ' ' << spec.quiver.vertex_name(a.source) << ' ' << spec.quiver.vertex_name(a.target)
            << '\n';
    for (const auto& r : spec.relations) {
        out << "rel";
        for (const auto& a : r) out << ' ' << a;
        out << '\n';
    }
    return out.str();
}

/// Structural equality: same name, same vertex set, same arrows (by name and
/// endpoint names, in order) and the same relation list.
inline bool structurally_equal(const AlgebraSpec& a, const AlgebraSpec& b) {
    if (a.name != b.name || a.relations != b.relations) return false;
    std::set<std::string> va(a.quiver.vertex_names().begin(), a.quiver.vertex_names().end());
    std::set<std::string> vb(b.quiver.vertex_names().begin(), b.quiver.vertex_names().end());
    if (va != vb || a.quiver.arrow_count() != b.quiver.arrow_count()) return false;
    for (std::size_t i = 0; i < a.quiver.arrow_count(); ++i) {
        const Arrow& x = a.quiver.arrow(static_cast<ArrowId>(i));
        const Arrow& y = b.quiver.arrow(static_cast<ArrowId>(i));
        if (x.name != y.name || a.quiver.vertex_name(x.source) != b.quiver.vertex_name(y.source) ||
            a.quiver.vertex_name(x.target) != b.quiver.vertex_name(y.target))
            return false;
    }
    return true;
}

}  // namespace qalg

#endif
