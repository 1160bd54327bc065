#include "bmw/cosets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bmw {

Perm identity_perm(int m) {
    Perm w(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) w[static_cast<std::size_t>(i)] = i;
    return w;
}

Perm perm_from_word(const std::vector<int>& word, int m) {
    Perm w = identity_perm(m);
    for (int a : word) {
        if (a < 1 || a >= m) throw std::out_of_range("perm_from_word: generator s_" + std::to_string(a) + " outside S_" + std::to_string(m));
        for (int i = 1; i <= m; ++i) {
            if (w[i] == a) w[i] = a + 1;
            else if (w[i] == a + 1) w[i] = a;
        }
    }
    return w;
}

std::vector<int> reduced_word(Perm w) {
    std::vector<int> word;
    const int m = static_cast<int>(w.size()) - 1;
    for (;;) {
        int a = 1;
        while (a < m && w[a] < w[a + 1]) ++a;
        if (a >= m) break;
        word.push_back(a);
        std::swap(w[a], w[a + 1]);
    }
    return word;
}

int inversions(const Perm& w) {
    int count = 0;
    for (std::size_t i = 1; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++count;
    return count;
}

Perm inverse_perm(const Perm& w) {
    Perm v(w.size(), 0);
    for (std::size_t i = 1; i < w.size(); ++i) v[static_cast<std::size_t>(w[i])] = static_cast<int>(i);
    return v;
}

std::vector<int> s_range(int i, int j) {
    std::vector<int> out;
    if (i > j) {
        for (int a = i - 1; a >= j; --a) out.push_back(a);
    } else {
        for (int a = i; a < j; ++a) out.push_back(a);
    }
    return out;
}

std::string CosetRep::to_string() const {
    std::string out;
    for (const auto& [i, j] : pairs) {
        if (!out.empty()) out += ";";
        out += std::to_string(i) + "," + std::to_string(j);
    }
    return "{" + out + "}";
}

std::vector<CosetRep> enumerate_cosets(int f, int n) {
    if (f < 0 || 2 * f > n) throw std::invalid_argument("enumerate_cosets: need 0 <= 2f <= n");
    std::vector<CosetRep> out;
    std::vector<std::pair<int, int>> pairs;
    // choose (i_k, j_k) for k = f, f−1, …, 1 with i_f < … < i_1
    std::function<void(int, int)> rec = [&](int k, int prev_i) {
        if (k == 0) {
            CosetRep c;
            c.pairs = pairs;
            for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
                const int kk = f - static_cast<int>(idx);
                for (int a : s_range(n - 2 * kk + 1, pairs[idx].first)) c.word.push_back(a);
                for (int a : s_range(n - 2 * kk + 2, pairs[idx].second)) c.word.push_back(a);
            }
            c.perm = perm_from_word(c.word, n);
            out.push_back(std::move(c));
            return;
        }
        const int jmax = n - 2 * k + 2;
        for (int i = prev_i + 1; i < jmax; ++i) {
            for (int j = i + 1; j <= jmax; ++j) {
                pairs.emplace_back(i, j);
                rec(k - 1, i);
                pairs.pop_back();
            }
        }
    };
    rec(f, 0);
    return out;
}

long long coset_count(int f, int n) {
    if (f < 0 || 2 * f > n) throw std::invalid_argument("coset_count: need 0 <= 2f <= n");
    // n!/((n−2f)! f! 2^f) = Π_{i=n−2f+1}^{n} i / (f! 2^f)
    long long num = 1;
    for (int i = n - 2 * f + 1; i <= n; ++i) num *= i;
    long long den = 1;
    for (int i = 1; i <= f; ++i) den *= 2LL * i;
    return num / den;
}

std::vector<KappaVector> enumerate_kappa(int f, int n, int r) {
    if (r < 1 || r % 2 == 0) throw std::invalid_argument("enumerate_kappa: r must be odd");
    if (f < 0 || 2 * f > n) throw std::invalid_argument("enumerate_kappa: need 0 <= 2f <= n");
    const int p = (r - 1) / 2;
    std::vector<KappaVector> out;
    KappaVector cur(static_cast<std::size_t>(n), 0);
    std::function<void(int)> rec = [&](int j) {
        if (j > f) {
            out.push_back(cur);
            return;
        }
        for (int v = -p; v <= p; ++v) {
            cur[static_cast<std::size_t>(n - 2 * j)] = v;  // position n − 2j + 1
            rec(j + 1);
        }
        cur[static_cast<std::size_t>(n - 2 * j)] = 0;
    };
    rec(1);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bmw
