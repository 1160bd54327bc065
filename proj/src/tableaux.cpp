#include "bmw/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bmw {

std::string Node::to_string() const {
    return "(" + std::to_string(s) + "," + std::to_string(i) + "," + std::to_string(j) + ")";
}

RPartition::RPartition(int r) : comps_(static_cast<std::size_t>(r)) {
    if (r < 1) throw std::invalid_argument("RPartition: r must be positive");
}

RPartition::RPartition(std::vector<std::vector<int>> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw std::invalid_argument("RPartition: r must be positive");
    for (auto& c : comps_) {
        while (!c.empty() && c.back() == 0) c.pop_back();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] <= 0 || (i > 0 && c[i] > c[i - 1]))
                throw std::invalid_argument("RPartition: component is not a partition");
        }
    }
}

int RPartition::size() const {
    int total = 0;
    for (const auto& c : comps_)
        for (int x : c) total += x;
    return total;
}

namespace {

int row_len(const std::vector<int>& c, int i) {
    return i >= 1 && i <= static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i - 1)] : 0;
}

}  // namespace

bool RPartition::has_box(const Node& b) const {
    if (b.s < 1 || b.s > r() || b.i < 1 || b.j < 1) return false;
    return row_len(component(b.s), b.i) >= b.j;
}

bool RPartition::is_addable(const Node& b) const {
    if (b.s < 1 || b.s > r() || b.i < 1 || b.j < 1 || has_box(b)) return false;
    const auto& c = component(b.s);
    return row_len(c, b.i) == b.j - 1 && (b.i == 1 || row_len(c, b.i - 1) >= b.j);
}

bool RPartition::is_removable(const Node& b) const {
    if (!has_box(b)) return false;
    const auto& c = component(b.s);
    return row_len(c, b.i) == b.j && row_len(c, b.i + 1) < b.j;
}

std::vector<Node> RPartition::addable() const {
    std::vector<Node> out;
    for (int s = 1; s <= r(); ++s) {
        const auto& c = component(s);
        for (int i = 1; i <= static_cast<int>(c.size()) + 1; ++i) {
            const int j = row_len(c, i) + 1;
            if (i == 1 || row_len(c, i - 1) >= j) out.push_back({s, i, j});
        }
    }
    return out;
}

std::vector<Node> RPartition::removable() const {
    std::vector<Node> out;
    for (int s = 1; s <= r(); ++s) {
        const auto& c = component(s);
        for (int i = 1; i <= static_cast<int>(c.size()); ++i)
            if (row_len(c, i) > row_len(c, i + 1)) out.push_back({s, i, row_len(c, i)});
    }
    return out;
}

RPartition RPartition::added(const Node& b) const {
    if (!is_addable(b)) throw std::invalid_argument("RPartition: node " + b.to_string() + " is not addable to " + to_string());
    RPartition out = *this;
    auto& c = out.comps_[static_cast<std::size_t>(b.s - 1)];
    if (b.i > static_cast<int>(c.size())) c.push_back(1);
    else ++c[static_cast<std::size_t>(b.i - 1)];
    return out;
}

RPartition RPartition::removed(const Node& b) const {
    if (!is_removable(b)) throw std::invalid_argument("RPartition: node " + b.to_string() + " is not removable from " + to_string());
    RPartition out = *this;
    auto& c = out.comps_[static_cast<std::size_t>(b.s - 1)];
    if (--c[static_cast<std::size_t>(b.i - 1)] == 0) c.pop_back();
    return out;
}

std::vector<Node> RPartition::boxes() const {
    std::vector<Node> out;
    for (int s = 1; s <= r(); ++s) {
        const auto& c = component(s);
        for (int i = 1; i <= static_cast<int>(c.size()); ++i)
            for (int j = 1; j <= c[static_cast<std::size_t>(i - 1)]; ++j) out.push_back({s, i, j});
    }
    return out;
}

std::string RPartition::to_string() const {
    std::string out = "(";
    for (int s = 1; s <= r(); ++s) {
        if (s > 1) out += "|";
        const auto& c = component(s);
        if (c.empty()) out += "-";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i > 0) out += ",";
            out += std::to_string(c[i]);
        }
    }
    return out + ")";
}

namespace {

void partitions_of(int m, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(m, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(m - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<RPartition> multipartitions(int m, int r) {
    if (m < 0 || r < 1) throw std::invalid_argument("multipartitions: need m >= 0 and r >= 1");
    std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        std::vector<int> cur;
        partitions_of(k, k, cur, by_size[static_cast<std::size_t>(k)]);
    }
    std::vector<RPartition> out;
    std::vector<std::vector<int>> comps(static_cast<std::size_t>(r));
    std::function<void(int, int)> rec = [&](int s, int left) {
        if (s == r - 1) {
            for (const auto& p : by_size[static_cast<std::size_t>(left)]) {
                comps[static_cast<std::size_t>(s)] = p;
                out.emplace_back(comps);
            }
            return;
        }
        for (int k = left; k >= 0; --k) {
            for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
                comps[static_cast<std::size_t>(s)] = p;
                rec(s + 1, left - k);
            }
        }
    };
    rec(0, m);
    return out;
}

std::vector<Shape> shapes(int n, int r) {
    std::vector<Shape> out;
    for (int f = 0; 2 * f <= n; ++f)
        for (auto& lam : multipartitions(n - 2 * f, r)) out.push_back({f, std::move(lam)});
    return out;
}

bool dominates(const RPartition& lambda, const RPartition& mu) {
    if (lambda.r() != mu.r() || lambda.size() != mu.size()) return false;
    const int rows = std::max(lambda.size(), 1);
    int sl = 0;
    int sm = 0;
    for (int s = 1; s <= lambda.r(); ++s) {
        for (int i = 1; i <= rows; ++i) {
            sl += row_len(lambda.component(s), i);
            sm += row_len(mu.component(s), i);
            if (sl < sm) return false;
        }
    }
    return true;
}

bool dominates(const Shape& a, const Shape& b) {
    if (a.f != b.f) return a.f > b.f;
    return dominates(a.lambda, b.lambda);
}

UpDownTableau::UpDownTableau(int r, std::vector<Step> steps) : r_(r), steps_(std::move(steps)) {
    RPartition mu(r_);
    for (const Step& st : steps_) mu = st.sign > 0 ? mu.added(st.node) : mu.removed(st.node);
}

RPartition UpDownTableau::shape(int k) const {
    if (k < 0 || k > n()) throw std::out_of_range("UpDownTableau::shape: index " + std::to_string(k));
    RPartition mu(r_);
    for (int i = 0; i < k; ++i) {
        const Step& st = steps_[static_cast<std::size_t>(i)];
        mu = st.sign > 0 ? mu.added(st.node) : mu.removed(st.node);
    }
    return mu;
}

std::vector<RPartition> UpDownTableau::shapes() const {
    std::vector<RPartition> out{RPartition(r_)};
    for (const Step& st : steps_) out.push_back(st.sign > 0 ? out.back().added(st.node) : out.back().removed(st.node));
    return out;
}

std::string UpDownTableau::to_string() const {
    std::string out = "[";
    for (std::size_t k = 0; k < steps_.size(); ++k) {
        if (k > 0) out += ",";
        out += (steps_[k].sign > 0 ? "+" : "-") + steps_[k].node.to_string();
    }
    return out + "]";
}

std::vector<Step> exits(const RPartition& mu) {
    std::vector<Step> out;
    for (const Node& b : mu.addable()) out.push_back({+1, b});
    for (const Node& b : mu.removable()) out.push_back({-1, b});
    return out;
}

namespace {

int distance(const RPartition& a, const RPartition& b) {
    int d = 0;
    for (int s = 1; s <= a.r(); ++s) {
        const auto& ca = a.component(s);
        const auto& cb = b.component(s);
        const int rows = static_cast<int>(std::max(ca.size(), cb.size()));
        for (int i = 1; i <= rows; ++i) d += std::abs(row_len(ca, i) - row_len(cb, i));
    }
    return d;
}

}  // namespace

std::vector<UpDownTableau> enumerate_updown(int n, const RPartition& lambda) {
    if (n < 0) throw std::invalid_argument("enumerate_updown: negative n");
    if (lambda.size() > n || (n - lambda.size()) % 2 != 0)
        throw std::invalid_argument("enumerate_updown: |lambda| = " + std::to_string(lambda.size()) +
                                    " is not n - 2f for n = " + std::to_string(n));
    std::vector<UpDownTableau> out;
    std::vector<Step> cur;
    std::function<void(const RPartition&)> rec = [&](const RPartition& mu) {
        const int left = n - static_cast<int>(cur.size());
        if (left == 0) {
            out.emplace_back(lambda.r(), cur);
            return;
        }
        for (const Step& st : exits(mu)) {
            RPartition next = st.sign > 0 ? mu.added(st.node) : mu.removed(st.node);
            if (distance(next, lambda) > left - 1) continue;
            cur.push_back(st);
            rec(next);
            cur.pop_back();
        }
    };
    rec(RPartition(lambda.r()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<UpDownTableau> neighbors_k(const UpDownTableau& t, int k) {
    if (k < 1 || k > t.n()) throw std::out_of_range("neighbors_k: k = " + std::to_string(k) + " outside 1.." + std::to_string(t.n()));
    if (k == t.n() || t.shape(k - 1) != t.shape(k + 1)) return {t};
    std::vector<UpDownTableau> out;
    for (const Step& st : exits(t.shape(k - 1))) {
        std::vector<Step> steps = t.steps();
        steps[static_cast<std::size_t>(k - 1)] = st;
        steps[static_cast<std::size_t>(k)] = Step{-st.sign, st.node};
        out.emplace_back(t.r(), std::move(steps));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<UpDownTableau> sk_action(const UpDownTableau& t, int k) {
    if (k < 1 || k >= t.n()) throw std::out_of_range("sk_action: k = " + std::to_string(k) + " outside 1.." + std::to_string(t.n() - 1));
    if (t.shape(k - 1) == t.shape(k + 1)) throw std::invalid_argument("sk_action: t_{k-1} = t_{k+1}");
    const Step& x = t.step(k);
    const Step& y = t.step(k + 1);
    if (x.node.s == y.node.s && (x.node.i == y.node.i || x.node.j == y.node.j)) return std::nullopt;
    std::vector<Step> steps = t.steps();
    std::swap(steps[static_cast<std::size_t>(k - 1)], steps[static_cast<std::size_t>(k)]);
    try {
        return UpDownTableau(t.r(), std::move(steps));
    } catch (const std::invalid_argument& e) {
        throw std::logic_error(std::string("sk_action: swapped walk is invalid: ") + e.what());
    }
}

int StdTableau::entry_at(const Node& b) const {
    for (std::size_t e = 0; e < node_of.size(); ++e)
        if (node_of[e] == b) return static_cast<int>(e) + 1;
    throw std::invalid_argument("StdTableau: no box " + b.to_string());
}

std::string StdTableau::to_string() const {
    std::string out = "[";
    for (std::size_t e = 0; e < node_of.size(); ++e) {
        if (e > 0) out += ",";
        out += node_of[e].to_string();
    }
    return out + "]";
}

std::vector<StdTableau> std_tableaux(const RPartition& lambda) {
    std::vector<StdTableau> out;
    std::vector<Node> cur;
    std::function<void(const RPartition&)> rec = [&](const RPartition& mu) {
        if (mu.size() == lambda.size()) {
            out.push_back({lambda, cur});
            return;
        }
        for (const Node& b : mu.addable()) {
            if (!lambda.has_box(b)) continue;
            cur.push_back(b);
            rec(mu.added(b));
            cur.pop_back();
        }
    };
    rec(RPartition(lambda.r()));
    std::sort(out.begin(), out.end());
    return out;
}

StdTableau superstandard(const RPartition& lambda) { return {lambda, lambda.boxes()}; }

std::vector<int> tableau_perm(const StdTableau& t) {
    const StdTableau sup = superstandard(t.shape);
    std::vector<int> w(sup.node_of.size() + 1, 0);
    for (std::size_t e = 0; e < sup.node_of.size(); ++e) w[e + 1] = t.entry_at(sup.node_of[e]);
    return w;
}

}  // namespace bmw
