#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parared/budget.hpp"

namespace parared {

// Adjacency-matrix graph. Matrix entries are 0, 1 or Hole; holes occur only
// in graphs standing for union templates, and the decision oracles reject
// them.
class Graph {
public:
    static constexpr std::uint8_t Hole = 2;

    Graph() = default;
    Graph(int n, bool directed) : n_(n), directed_(directed), adj_(std::size_t(n) * n, 0) {}

    int n() const { return n_; }
    bool directed() const { return directed_; }

    std::uint8_t at(int a, int b) const { return adj_[std::size_t(a) * n_ + b]; }
    void set(int a, int b, std::uint8_t v) {
        adj_[std::size_t(a) * n_ + b] = v;
        if (!directed_) adj_[std::size_t(b) * n_ + a] = v;
    }
    void add_edge(int a, int b) { set(a, b, 1); }
    bool has_edge(int a, int b) const { return at(a, b) == 1; }

    bool has_holes() const {
        for (auto v : adj_) if (v == Hole) return true;
        return false;
    }

    std::optional<int> s, t;
    // layer index per vertex; empty when the graph is not layered
    std::vector<int> layers;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && directed_ == o.directed_ && adj_ == o.adj_ && s == o.s &&
               t == o.t && layers == o.layers;
    }

private:
    int n_ = 0;
    bool directed_ = true;
    std::vector<std::uint8_t> adj_;
};

}  // namespace parared
