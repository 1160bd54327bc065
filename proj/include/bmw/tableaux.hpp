#pragma once

#include "bmw/params.hpp"

#include <compare>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace bmw {

/// Box (s, i, j): component s, row i, column j, all 1-based.
struct Node {
    int s = 1;
    int i = 1;
    int j = 1;
    auto operator<=>(const Node&) const = default;
    std::string to_string() const;
};

/// An r-tuple of partitions.
class RPartition {
public:
    explicit RPartition(int r = 1);
    RPartition(std::vector<std::vector<int>> components);
    RPartition(std::initializer_list<std::vector<int>> components) : RPartition(std::vector<std::vector<int>>(components)) {}

    int r() const { return static_cast<int>(comps_.size()); }
    int size() const;
    const std::vector<std::vector<int>>& components() const { return comps_; }
    const std::vector<int>& component(int s) const { return comps_.at(static_cast<std::size_t>(s - 1)); }

    bool has_box(const Node& b) const;
    bool is_addable(const Node& b) const;
    bool is_removable(const Node& b) const;
    /// Sorted by (component, row).
    std::vector<Node> addable() const;
    std::vector<Node> removable() const;

    RPartition added(const Node& b) const;
    RPartition removed(const Node& b) const;

    /// All boxes, component by component and row by row.
    std::vector<Node> boxes() const;

    auto operator<=>(const RPartition&) const = default;
    bool operator==(const RPartition&) const = default;

    /// "(2,1|-|1)"
    std::string to_string() const;

private:
    std::vector<std::vector<int>> comps_;
};

/// All r-partitions of m in a fixed order.
std::vector<RPartition> multipartitions(int m, int r);

/// Λ^+_{r,n}: pairs (f, λ) with |λ| = n − 2f, ordered by f then λ.
struct Shape {
    int f = 0;
    RPartition lambda;
    auto operator<=>(const Shape&) const = default;
    bool operator==(const Shape&) const = default;
};
std::vector<Shape> shapes(int n, int r);

/// λ ⊵ μ for equal sizes, comparing concatenated partial row sums.
bool dominates(const RPartition& lambda, const RPartition& mu);
/// (f, λ) ⊵ (g, μ): larger f wins; equal f falls back to dominance of λ.
bool dominates(const Shape& a, const Shape& b);

struct Step {
    int sign = 1;  // +1 adds the node, −1 removes it
    Node node;
    auto operator<=>(const Step&) const = default;
};

/// Walk from ∅ adding or removing one box per step.
class UpDownTableau {
public:
    UpDownTableau(int r, std::vector<Step> steps);

    int r() const { return r_; }
    int n() const { return static_cast<int>(steps_.size()); }
    const std::vector<Step>& steps() const { return steps_; }
    /// Step k (1-based).
    const Step& step(int k) const { return steps_.at(static_cast<std::size_t>(k - 1)); }
    /// t_k for 0 ≤ k ≤ n.
    RPartition shape(int k) const;
    std::vector<RPartition> shapes() const;

    auto operator<=>(const UpDownTableau&) const = default;
    bool operator==(const UpDownTableau&) const = default;

    std::string to_string() const;

private:
    int r_ = 1;
    std::vector<Step> steps_;
};

/// T^ud_n(λ), sorted lexicographically on the step sequence.
std::vector<UpDownTableau> enumerate_updown(int n, const RPartition& lambda);

/// s ∼_k t, including t itself.
std::vector<UpDownTableau> neighbors_k(const UpDownTableau& t, int k);

/// s_k t, or nullopt when the two boxes share a row or a column.
std::optional<UpDownTableau> sk_action(const UpDownTableau& t, int k);

template <class F>
F node_content(const Node& b, bool addable, const GroundParams<F>& p) {
    const F c = p.u(b.s) * ipow(p.q(), 2L * (b.j - b.i));
    return addable ? c : F(1) / c;
}

template <class F>
F step_content(const Step& st, const GroundParams<F>& p) {
    return node_content(st.node, st.sign > 0, p);
}

/// c_t(1..n)
template <class F>
std::vector<F> content_seq(const UpDownTableau& t, const GroundParams<F>& p) {
    std::vector<F> out;
    out.reserve(t.steps().size());
    for (const Step& st : t.steps()) out.push_back(step_content(st, p));
    return out;
}

/// Addable nodes (sign +1) followed by removable ones (sign −1), as the steps
/// that leave the given shape.
std::vector<Step> exits(const RPartition& mu);

/// Filling of λ by 1..|λ|: entry e sits at node_of[e − 1].
struct StdTableau {
    RPartition shape;
    std::vector<Node> node_of;
    int entry_at(const Node& b) const;
    auto operator<=>(const StdTableau&) const = default;
    bool operator==(const StdTableau&) const = default;
    std::string to_string() const;
};

std::vector<StdTableau> std_tableaux(const RPartition& lambda);

/// The row-reading filling, component by component.
StdTableau superstandard(const RPartition& lambda);

/// Permutation images w[1..m] (w[0] unused) with e·d(t) = entry of t at the
/// box holding e in the superstandard tableau.
std::vector<int> tableau_perm(const StdTableau& t);

}  // namespace bmw
