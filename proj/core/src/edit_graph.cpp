#include "tracerec/edit_graph.hpp"

#include <algorithm>

#include "tracerec/error.hpp"

namespace tracerec {

EditGraph::EditGraph(std::vector<Seq> traces) : traces_(std::move(traces)) {
    if (traces_.empty()) throw InvalidArgument("edit graph needs at least one trace");
    if (traces_.size() > kMaxTraces) throw InvalidArgument("edit graph supports at most 16 traces");
    const std::size_t t = traces_.size();
    dims_.resize(t);
    strides_.resize(t);
    for (std::size_t l = 0; l < t; ++l) dims_[l] = traces_[l].size() + 1;
    for (std::size_t l = t; l-- > 0;) {
        strides_[l] = vertex_count_;
        if (vertex_count_ > kMaxVertices / dims_[l]) throw GuardExceeded("edit graph exceeds 1e8 vertices");
        vertex_count_ *= dims_[l];
    }
    offsets_.assign(std::size_t{1} << t, 0);
    for (std::size_t mask = 1; mask < offsets_.size(); ++mask) {
        const auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
        offsets_[mask] = offsets_[mask & (mask - 1)] + strides_[low];
    }
}

std::size_t EditGraph::index(std::span<const std::size_t> coord) const {
    if (coord.size() != dimension()) throw InvalidArgument("coordinate has wrong dimension");
    std::size_t idx = 0;
    for (std::size_t l = 0; l < coord.size(); ++l) {
        if (coord[l] >= dims_[l]) throw InvalidArgument("coordinate out of range");
        idx += coord[l] * strides_[l];
    }
    return idx;
}

Coord EditGraph::coord(std::size_t index) const {
    if (index >= vertex_count_) throw InvalidArgument("vertex index out of range");
    Coord c(dimension());
    for (std::size_t l = 0; l < c.size(); ++l) {
        c[l] = index / strides_[l];
        index %= strides_[l];
    }
    return c;
}

bool EditGraph::has_edge(std::span<const std::size_t> u, std::span<const std::size_t> v) const {
    if (u.size() != dimension() || v.size() != dimension()) return false;
    bool any = false;
    int symbol = -1;
    for (std::size_t l = 0; l < u.size(); ++l) {
        if (v[l] >= dims_[l] || u[l] >= dims_[l]) return false;
        if (v[l] == u[l]) continue;
        if (v[l] != u[l] + 1) return false;
        const Symbol s = traces_[l][v[l] - 1];
        if (symbol >= 0 && s != symbol) return false;
        symbol = s;
        any = true;
    }
    return any;
}

Symbol EditGraph::edge_symbol(std::span<const std::size_t> u, std::span<const std::size_t> v) const {
    if (!has_edge(u, v)) throw InvalidArgument("edge_symbol: not an edge");
    for (std::size_t l = 0; l < u.size(); ++l) {
        if (v[l] != u[l]) return traces_[l][v[l] - 1];
    }
    return 0;
}

void EditGraph::advance(Coord& c) const {
    for (std::size_t l = c.size(); l-- > 0;) {
        if (++c[l] < dims_[l]) return;
        c[l] = 0;
    }
}

void EditGraph::retreat(Coord& c) const {
    for (std::size_t l = c.size(); l-- > 0;) {
        if (c[l]-- > 0) return;
        c[l] = dims_[l] - 1;
    }
}

BigCount PathPoly::coefficient(std::size_t k) const {
    if (k < low_ || k >= end()) return 0;
    return coeffs_[k - low_];
}

EditGraph build_edit_graph(std::vector<Seq> traces) { return EditGraph(std::move(traces)); }

namespace {

// Largest degree worth keeping at a vertex whose complementary path needs at least `slack` edges.
std::ptrdiff_t degree_cap(std::size_t n_cap, Trim trim, std::size_t slack) {
    if (trim == Trim::none) return static_cast<std::ptrdiff_t>(n_cap);
    return static_cast<std::ptrdiff_t>(n_cap) - static_cast<std::ptrdiff_t>(slack);
}

// Pulls lambda * sum of neighbour polynomials into a fresh polynomial capped at `cap`.
template <class ForEachNeighbour>
PathPoly pull(const std::vector<PathPoly>& polys, std::ptrdiff_t cap, ForEachNeighbour&& neighbours) {
    std::size_t lo = SIZE_MAX;
    std::size_t hi = 0;
    neighbours([&](std::size_t u) {
        const PathPoly& p = polys[u];
        if (p.empty()) return;
        lo = std::min(lo, p.low() + 1);
        hi = std::max(hi, p.end() + 1);
    });
    if (lo == SIZE_MAX || cap < 0) return {};
    hi = std::min(hi, static_cast<std::size_t>(cap) + 1);
    if (lo >= hi) return {};
    std::vector<BigCount> acc(hi - lo);
    neighbours([&](std::size_t u) {
        const PathPoly& p = polys[u];
        if (p.empty()) return;
        const std::size_t first = p.low() + 1;
        const std::size_t last = std::min(p.end() + 1, hi);
        for (std::size_t k = first; k < last; ++k) acc[k - lo] += p.stored(k - 1);
    });
    return PathPoly(lo, std::move(acc));
}

} // namespace

Potentials forward_potentials(const EditGraph& g, std::size_t n_cap, Trim trim) {
    Potentials out{n_cap, trim, std::vector<PathPoly>(g.vertex_count())};
    const auto dims = g.dims();
    g.for_each_vertex([&](std::size_t v, std::span<const std::size_t> c) {
        if (v == g.origin()) {
            out.polys[v] = PathPoly(0, {BigCount(1)});
            return;
        }
        std::size_t to_go = 0;
        for (std::size_t l = 0; l < c.size(); ++l) to_go = std::max(to_go, dims[l] - 1 - c[l]);
        out.polys[v] = pull(out.polys, degree_cap(n_cap, trim, to_go), [&](auto&& visit) {
            g.for_each_predecessor(v, c, [&](std::size_t u, Symbol) { visit(u); });
        });
    });
    return out;
}

Potentials reverse_potentials(const EditGraph& g, std::size_t n_cap, Trim trim) {
    Potentials out{n_cap, trim, std::vector<PathPoly>(g.vertex_count())};
    g.for_each_vertex_reverse([&](std::size_t v, std::span<const std::size_t> c) {
        if (v == g.destination()) {
            out.polys[v] = PathPoly(0, {BigCount(1)});
            return;
        }
        const std::size_t done = c.empty() ? 0 : *std::max_element(c.begin(), c.end());
        out.polys[v] = pull(out.polys, degree_cap(n_cap, trim, done), [&](auto&& visit) {
            g.for_each_successor(v, c, [&](std::size_t u, Symbol) { visit(u); });
        });
    });
    return out;
}

MarkedCounts marked_path_counts(const EditGraph& g, const Potentials& fwd, const Potentials& rev,
                                std::size_t n_cap, Symbol symbol) {
    MarkedCounts m(n_cap);
    std::vector<BigCount> s;
    g.for_each_vertex([&](std::size_t v, std::span<const std::size_t> c) {
        const PathPoly& rv = rev.at(v);
        if (rv.empty()) return;
        // s[a] = number of a-edge origin paths that reach v through a `symbol` edge, shifted by one.
        std::size_t lo = SIZE_MAX;
        std::size_t hi = 0;
        g.for_each_predecessor(v, c, [&](std::size_t u, Symbol sym) {
            const PathPoly& p = fwd.at(u);
            if (sym != symbol || p.empty()) return;
            lo = std::min(lo, p.low());
            hi = std::max(hi, p.end());
        });
        if (lo == SIZE_MAX) return;
        if (hi > n_cap) hi = n_cap;
        if (lo >= hi) return;
        s.assign(hi - lo, BigCount(0));
        g.for_each_predecessor(v, c, [&](std::size_t u, Symbol sym) {
            const PathPoly& p = fwd.at(u);
            if (sym != symbol || p.empty()) return;
            const std::size_t last = std::min(p.end(), hi);
            for (std::size_t a = p.low(); a < last; ++a) s[a - lo] += p.stored(a);
        });
        for (std::size_t a = lo; a < hi; ++a) {
            const BigCount& left = s[a - lo];
            if (left == 0) continue;
            const std::size_t j = a + 1;
            for (std::size_t b = rv.low(); b < rv.end() && j + b <= n_cap; ++b) {
                mpz_addmul(m.at(j, j + b).get_mpz_t(), left.get_mpz_t(), rv.stored(b).get_mpz_t());
            }
        }
    });
    return m;
}

} // namespace tracerec
