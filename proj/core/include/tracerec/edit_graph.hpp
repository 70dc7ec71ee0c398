#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tracerec/seq.hpp"

namespace tracerec {

using Coord = std::vector<std::size_t>;

/// The t-dimensional edit graph G(y^1, ..., y^t).
///
/// Vertices are grid points (i_1, ..., i_t) with 0 <= i_l <= |y^l|, stored by
/// row-major flat index so that increasing index is lexicographic order.
/// u -> v is an edge iff v - u is a nonzero 0/1 vector and every incremented
/// coordinate l carries the same symbol y^l_{v_l} (1-based). Edges are never
/// stored; they are generated from the increment masks of each vertex.
class EditGraph {
public:
    static constexpr std::size_t kMaxVertices = 100'000'000;
    static constexpr std::size_t kMaxTraces = 16;

    explicit EditGraph(std::vector<Seq> traces);

    std::size_t dimension() const noexcept { return traces_.size(); }
    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Seq>& traces() const noexcept { return traces_; }
    std::span<const std::size_t> dims() const noexcept { return dims_; }

    std::size_t origin() const noexcept { return 0; }
    std::size_t destination() const noexcept { return vertex_count_ - 1; }

    std::size_t index(std::span<const std::size_t> coord) const;
    Coord coord(std::size_t index) const;

    bool has_edge(std::span<const std::size_t> u, std::span<const std::size_t> v) const;
    /// Common symbol of the incremented coordinates. Throws InvalidArgument if u -> v is not an edge.
    Symbol edge_symbol(std::span<const std::size_t> u, std::span<const std::size_t> v) const;

    /// Calls fn(successor_index, symbol) for every edge leaving the vertex at `coord`.
    template <class Fn>
    void for_each_successor(std::size_t index, std::span<const std::size_t> coord, Fn&& fn) const {
        SymbolGroups groups;
        for (std::size_t l = 0; l < dimension(); ++l) {
            if (coord[l] < dims_[l] - 1) groups.add(traces_[l][coord[l]], l);
        }
        for (std::size_t g = 0; g < groups.count; ++g) {
            const std::uint32_t all = groups.masks[g];
            for (std::uint32_t sub = all; sub != 0; sub = (sub - 1) & all) {
                fn(index + offsets_[sub], groups.symbols[g]);
            }
        }
    }

    /// Calls fn(predecessor_index, symbol) for every edge entering the vertex at `coord`.
    template <class Fn>
    void for_each_predecessor(std::size_t index, std::span<const std::size_t> coord, Fn&& fn) const {
        SymbolGroups groups;
        for (std::size_t l = 0; l < dimension(); ++l) {
            if (coord[l] > 0) groups.add(traces_[l][coord[l] - 1], l);
        }
        for (std::size_t g = 0; g < groups.count; ++g) {
            const std::uint32_t all = groups.masks[g];
            for (std::uint32_t sub = all; sub != 0; sub = (sub - 1) & all) {
                fn(index - offsets_[sub], groups.symbols[g]);
            }
        }
    }

    /// Visits every vertex in lexicographic order as fn(index, coord).
    template <class Fn>
    void for_each_vertex(Fn&& fn) const {
        Coord c(dimension(), 0);
        for (std::size_t idx = 0; idx < vertex_count_; ++idx) {
            fn(idx, std::span<const std::size_t>(c));
            advance(c);
        }
    }

    /// Visits every vertex in reverse lexicographic order.
    template <class Fn>
    void for_each_vertex_reverse(Fn&& fn) const {
        Coord c(dims_.begin(), dims_.end());
        for (auto& x : c) --x;
        for (std::size_t idx = vertex_count_; idx-- > 0;) {
            fn(idx, std::span<const std::size_t>(c));
            retreat(c);
        }
    }

private:
    struct SymbolGroups {
        std::size_t count = 0;
        Symbol symbols[kMaxTraces];
        std::uint32_t masks[kMaxTraces];

        void add(Symbol s, std::size_t l) {
            for (std::size_t g = 0; g < count; ++g) {
                if (symbols[g] == s) {
                    masks[g] |= 1u << l;
                    return;
                }
            }
            symbols[count] = s;
            masks[count] = 1u << l;
            ++count;
        }
    };

    void advance(Coord& c) const;
    void retreat(Coord& c) const;

    std::vector<Seq> traces_;
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> strides_;
    std::vector<std::size_t> offsets_;
    std::size_t vertex_count_ = 1;
};

/// Polynomial in lambda with nonnegative BigCount coefficients; only the
/// degree window [low, high] is stored.
class PathPoly {
public:
    PathPoly() = default;
    PathPoly(std::size_t low, std::vector<BigCount> coeffs) : low_(low), coeffs_(std::move(coeffs)) {}

    bool empty() const noexcept { return coeffs_.empty(); }
    std::size_t low() const noexcept { return low_; }
    /// One past the highest stored degree.
    std::size_t end() const noexcept { return low_ + coeffs_.size(); }
    BigCount coefficient(std::size_t k) const;
    const BigCount& stored(std::size_t k) const { return coeffs_[k - low_]; }

private:
    std::size_t low_ = 0;
    std::vector<BigCount> coeffs_;
};

/// Truncation policy for potentials.
enum class Trim {
    /// Every coefficient of degree <= n_cap is exact at every vertex.
    none,
    /// Coefficients are kept only where they can still lie on an
    /// origin-to-destination path of total length <= n_cap. All full-path
    /// counts (destination / origin polynomials, marked counts) stay exact.
    to_budget,
};

struct Potentials {
    std::size_t n_cap = 0;
    Trim trim = Trim::none;
    std::vector<PathPoly> polys;

    const PathPoly& at(std::size_t vertex) const { return polys[vertex]; }
};

EditGraph build_edit_graph(std::vector<Seq> traces);

/// p_for(v) = sum over u -> v of lambda * p_for(u), p_for(origin) = 1.
Potentials forward_potentials(const EditGraph& g, std::size_t n_cap, Trim trim = Trim::none);
/// p_rev(v) = sum over v -> u of lambda * p_rev(u), p_rev(destination) = 1.
Potentials reverse_potentials(const EditGraph& g, std::size_t n_cap, Trim trim = Trim::none);

/// M(j, k): number of k-edge origin-to-destination paths whose j-th edge carries `symbol`.
class MarkedCounts {
public:
    explicit MarkedCounts(std::size_t n_cap) : n_cap_(n_cap), table_((n_cap + 1) * (n_cap + 1), 0) {}

    std::size_t n_cap() const noexcept { return n_cap_; }
    /// 1 <= j <= k <= n_cap; zero elsewhere.
    const BigCount& at(std::size_t j, std::size_t k) const { return table_[j * (n_cap_ + 1) + k]; }
    BigCount& at(std::size_t j, std::size_t k) { return table_[j * (n_cap_ + 1) + k]; }

private:
    std::size_t n_cap_;
    std::vector<BigCount> table_;
};

MarkedCounts marked_path_counts(const EditGraph& g, const Potentials& fwd, const Potentials& rev,
                                std::size_t n_cap, Symbol symbol = 1);

} // namespace tracerec
