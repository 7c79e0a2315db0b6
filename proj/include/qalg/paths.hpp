#ifndef QALG_PATHS_HPP
#define QALG_PATHS_HPP

#include <qalg/error.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qalg {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

struct Arrow {
    std::string name;
    VertexId source;
    VertexId target;
};

/// A finite quiver with named vertices and arrows. Names are case-sensitive
/// and unique; internally everything is addressed by dense indices.
class Quiver {
public:
    VertexId add_vertex(const std::string& name) {
        if (vertex_index_.contains(name))
            throw Error("duplicate vertex name '" + name + "'");
        VertexId id = static_cast<VertexId>(vertices_.size());
        vertices_.push_back(name);
        vertex_index_.emplace(name, id);
        out_.emplace_back();
        in_.emplace_back();
        return id;
    }

    ArrowId add_arrow(const std::string& name, VertexId source, VertexId target) {
        if (arrow_index_.contains(name))
            throw Error("duplicate arrow name '" + name + "'");
        if (source >= vertices_.size() || target >= vertices_.size())
            throw UnknownNameError("arrow '" + name + "' uses an undeclared vertex");
        ArrowId id = static_cast<ArrowId>(arrows_.size());
        arrows_.push_back({name, source, target});
        arrow_index_.emplace(name, id);
        out_[source].push_back(id);
        in_[target].push_back(id);
        return id;
    }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t arrow_count() const noexcept { return arrows_.size(); }

    const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
    const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }

    std::optional<VertexId> find_vertex(const std::string& name) const {
        auto it = vertex_index_.find(name);
        if (it == vertex_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<ArrowId> find_arrow(const std::string& name) const {
        auto it = arrow_index_.find(name);
        if (it == arrow_index_.end()) return std::nullopt;
        return it->second;
    }
    VertexId vertex(const std::string& name) const {
        if (auto v = find_vertex(name)) return *v;
        throw UnknownNameError("unknown vertex '" + name + "'");
    }
    ArrowId arrow_id(const std::string& name) const {
        if (auto a = find_arrow(name)) return *a;
        throw UnknownNameError("unknown arrow '" + name + "'");
    }

    std::span<const ArrowId> arrows_from(VertexId v) const { return out_.at(v); }
    std::span<const ArrowId> arrows_into(VertexId v) const { return in_.at(v); }

    /// Connected components of the underlying undirected graph, each sorted.
    std::vector<std::vector<VertexId>> components() const {
        std::vector<int> comp(vertices_.size(), -1);
        std::vector<std::vector<VertexId>> result;
        for (VertexId start = 0; start < vertices_.size(); ++start) {
            if (comp[start] >= 0) continue;
            int c = static_cast<int>(result.size());
            result.emplace_back();
            std::vector<VertexId> stack{start};
            comp[start] = c;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                result[c].push_back(v);
                auto visit = [&](VertexId w) {
                    if (comp[w] < 0) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
                };
                for (ArrowId a : out_[v]) visit(arrows_[a].target);
                for (ArrowId a : in_[v]) visit(arrows_[a].source);
            }
            std::sort(result[c].begin(), result[c].end());
        }
        return result;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, VertexId> vertex_index_;
    std::map<std::string, ArrowId> arrow_index_;
    std::vector<std::vector<ArrowId>> out_;
    std::vector<std::vector<ArrowId>> in_;
};

/// A path in a quiver: either the trivial path at a vertex or a composable
/// arrow sequence read left to right. Paths are plain values; they carry
/// their vertex sequence so endpoint queries need no quiver.
class Path {
public:
    Path() = default;

    static Path trivial(VertexId v) {
        Path p;
        p.vertices_.push_back(v);
        return p;
    }

    static Path arrow(const Quiver& q, ArrowId a) {
        const Arrow& arr = q.arrow(a);
        Path p;
        p.vertices_ = {arr.source, arr.target};
        p.arrows_ = {a};
        return p;
    }

    /// Builds a path from a nonempty arrow sequence; throws CompositionError
    /// naming the first junction that does not compose.
    static Path from_arrows(const Quiver& q, std::span<const ArrowId> arrows) {
        if (arrows.empty()) throw CompositionError("empty arrow sequence has no base vertex");
        Path p;
        p.vertices_.push_back(q.arrow(arrows[0]).source);
        for (std::size_t i = 0; i < arrows.size(); ++i) {
            const Arrow& arr = q.arrow(arrows[i]);
            if (arr.source != p.vertices_.back())
                throw CompositionError("arrows do not compose at junction " + std::to_string(i) + ": '" +
                                       q.arrow(arrows[i - 1]).name + "' then '" + arr.name + "'");
            p.arrows_.push_back(arrows[i]);
            p.vertices_.push_back(arr.target);
        }
        return p;
    }

    static Path from_names(const Quiver& q, std::span<const std::string> names) {
        std::vector<ArrowId> ids;
        ids.reserve(names.size());
        for (const auto& n : names) ids.push_back(q.arrow_id(n));
        return from_arrows(q, ids);
    }

    bool valid() const noexcept { return !vertices_.empty(); }
    bool is_trivial() const noexcept { return arrows_.empty(); }
    std::size_t length() const noexcept { return arrows_.size(); }
    VertexId origin() const { return vertices_.front(); }
    VertexId terminus() const { return vertices_.back(); }
    bool is_closed() const { return !arrows_.empty() && origin() == terminus(); }

    const std::vector<ArrowId>& arrows() const noexcept { return arrows_; }
    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    ArrowId operator[](std::size_t i) const { return arrows_[i]; }

    /// The subpath of `len` arrows starting after `pos` arrows.
    Path subpath(std::size_t pos, std::size_t len) const {
        Path p;
        p.vertices_.assign(vertices_.begin() + static_cast<std::ptrdiff_t>(pos),
                           vertices_.begin() + static_cast<std::ptrdiff_t>(pos + len + 1));
        p.arrows_.assign(arrows_.begin() + static_cast<std::ptrdiff_t>(pos),
                         arrows_.begin() + static_cast<std::ptrdiff_t>(pos + len));
        return p;
    }
    Path prefix(std::size_t len) const { return subpath(0, len); }
    Path suffix(std::size_t len) const { return subpath(length() - len, len); }

    bool starts_with(const Path& p) const {
        if (p.is_trivial()) return p.origin() == origin();
        return p.length() <= length() && std::equal(p.arrows_.begin(), p.arrows_.end(), arrows_.begin());
    }
    bool ends_with(const Path& p) const {
        if (p.is_trivial()) return p.origin() == terminus();
        return p.length() <= length() && std::equal(p.arrows_.rbegin(), p.arrows_.rend(), arrows_.rbegin());
    }
    /// Position of the first occurrence of nonempty `p` as a subpath.
    std::optional<std::size_t> find(const Path& p) const {
        if (p.is_trivial() || p.length() > length()) return std::nullopt;
        auto it = std::search(arrows_.begin(), arrows_.end(), p.arrows_.begin(), p.arrows_.end());
        if (it == arrows_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - arrows_.begin());
    }
    bool contains(const Path& p) const {
        if (p.is_trivial()) return std::find(vertices_.begin(), vertices_.end(), p.origin()) != vertices_.end();
        return find(p).has_value();
    }

    /// Concatenation without the endpoint check; `compose` is the checked form.
    static Path concat(const Path& p, const Path& q) {
        if (p.is_trivial()) return q;
        if (q.is_trivial()) return p;
        Path r = p;
        r.arrows_.insert(r.arrows_.end(), q.arrows_.begin(), q.arrows_.end());
        r.vertices_.insert(r.vertices_.end(), q.vertices_.begin() + 1, q.vertices_.end());
        return r;
    }

    /// Appends a single arrow; the caller guarantees composability.
    void push_back(const Quiver& q, ArrowId a) {
        arrows_.push_back(a);
        vertices_.push_back(q.arrow(a).target);
    }

    friend bool operator==(const Path& a, const Path& b) {
        return a.arrows_ == b.arrows_ && (!a.arrows_.empty() || a.vertices_ == b.vertices_);
    }
    /// Trivial paths first (by vertex), then lexicographic by arrow index.
    friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
        if (a.is_trivial() != b.is_trivial()) return a.is_trivial() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.is_trivial()) return a.origin() <=> b.origin();
        return a.arrows_ <=> b.arrows_;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<ArrowId> arrows_;
};

/// Formats a path with arrow names separated by spaces; trivial paths
/// print as e_<vertex>.
inline std::string format_path(const Quiver& q, const Path& p) {
    if (p.is_trivial()) return "e_" + q.vertex_name(p.origin());
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) out += ' ';
        out += q.arrow(p[i]).name;
    }
    return out;
}

/// pq; trivial paths act as identities at their vertex.
inline Path compose(const Path& p, const Path& q) {
    if (p.terminus() != q.origin())
        throw CompositionError("cannot compose paths: terminus " + std::to_string(p.terminus()) +
                               " differs from origin " + std::to_string(q.origin()));
    return Path::concat(p, q);
}

/// As above, with both paths spelled out by arrow name in the error.
inline Path compose(const Quiver& quiver, const Path& p, const Path& q) {
    if (p.terminus() != q.origin())
        throw CompositionError("cannot compose '" + format_path(quiver, p) + "' with '" + format_path(quiver, q) +
                               "': '" + quiver.vertex_name(p.terminus()) + "' differs from '" +
                               quiver.vertex_name(q.origin()) + "'");
    return Path::concat(p, q);
}

/// Arrow names of a path; empty for trivial paths.
inline std::vector<std::string> arrow_names(const Quiver& q, const Path& p) {
    std::vector<std::string> out;
    for (ArrowId a : p.arrows()) out.push_back(q.arrow(a).name);
    return out;
}

}  // namespace qalg

#endif
