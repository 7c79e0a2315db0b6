#ifndef QALG_OVERLAPS_HPP
#define QALG_OVERLAPS_HPP

#include <qalg/paths.hpp>

#include <algorithm>
#include <vector>

namespace qalg {

/// One way in which q overlaps p: p·u = v·q with l(u) < l(q) and l(v) >= 1.
/// The shared segment is the suffix of p (equivalently the prefix of q) of
/// length `shared_length`; when u is trivial, q is a suffix of p.
struct OverlapWitness {
    Path u;
    Path v;
    Path shared;
    std::size_t shared_length = 0;
    bool u_trivial = false;
};

/// All witnesses of "q overlaps p", ordered by increasing shared length.
inline std::vector<OverlapWitness> proper_overlaps(const Path& p, const Path& q) {
    std::vector<OverlapWitness> out;
    if (p.is_trivial() || q.is_trivial()) return out;
    const std::size_t max_k = std::min(q.length(), p.length() - 1);
    for (std::size_t k = 1; k <= max_k; ++k) {
        if (!std::equal(p.arrows().end() - static_cast<std::ptrdiff_t>(k), p.arrows().end(), q.arrows().begin()))
            continue;
        OverlapWitness w;
        w.shared_length = k;
        w.shared = q.prefix(k);
        w.u = q.suffix(q.length() - k);
        w.v = p.prefix(p.length() - k);
        w.u_trivial = w.u.is_trivial();
        out.push_back(std::move(w));
    }
    return out;
}

/// `small` occurs inside `big` (trivial paths never count).
inline bool is_subpath(const Path& small, const Path& big) {
    return !small.is_trivial() && big.find(small).has_value();
}

/// The symmetric, inclusive overlap predicate: q overlaps p, p overlaps q,
/// or one is a subpath of the other.
inline bool have_overlap(const Path& p, const Path& q) {
    if (p.is_trivial() || q.is_trivial()) return false;
    return !proper_overlaps(p, q).empty() || !proper_overlaps(q, p).empty() || is_subpath(p, q) ||
           is_subpath(q, p);
}

/// Arrow-granularity cyclic rotations of a closed path, starting with p.
inline std::vector<Path> rotations(const Path& p) {
    if (!p.is_closed()) throw NotClosedError("rotations: path is not closed");
    std::vector<Path> out;
    out.reserve(p.length());
    for (std::size_t k = 0; k < p.length(); ++k)
        out.push_back(Path::concat(p.suffix(p.length() - k), p.prefix(k)));
    return out;
}

/// p^r for a closed path p (r = 0 gives the trivial path at o(p)).
inline Path power(const Path& p, std::size_t r) {
    if (r == 0) return Path::trivial(p.origin());
    if (!p.is_closed()) throw NotClosedError("power: path is not closed");
    Path out = p;
    for (std::size_t i = 1; i < r; ++i) out = Path::concat(out, p);
    return out;
}

/// True iff p is not q^r for any path q and r >= 2.
inline bool is_primitive(const Path& p) {
    if (!p.is_closed()) throw NotClosedError("is_primitive: path is not closed");
    const std::size_t n = p.length();
    for (std::size_t len = 1; len < n; ++len) {
        if (n % len != 0) continue;
        bool periodic = true;
        for (std::size_t i = len; i < n && periodic; ++i) periodic = p[i] == p[i - len];
        if (periodic) return false;
    }
    return true;
}

/// v is not internal to the closed path C at v: v occurs only at the two ends
/// of the vertex sequence of C.
inline bool vertex_not_internal(const Path& c, VertexId v) {
    if (!c.is_closed() || c.origin() != v) throw NotClosedError("vertex_not_internal: path is not closed at the vertex");
    const auto& vs = c.vertices();
    return std::count(vs.begin(), vs.end(), v) == 2;
}

}  // namespace qalg

#endif
