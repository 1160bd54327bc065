#include "bmw/cellular.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace bmw {

Token tok_T(int i) { return Token{TokKind::T, i, 0, {}}; }
Token tok_Tinv(int i) { return Token{TokKind::Tinv, i, 0, {}}; }
Token tok_E(int i) { return Token{TokKind::E, i, 0, {}}; }
Token tok_X(int i, int exponent) { return Token{TokKind::X, i, exponent, {}}; }
Token tok_XminusU(int i, int s) { return Token{TokKind::XminusU, i, s, {}}; }

namespace {

std::string t_string(const std::vector<int>& w) {
    if (w.empty()) return "1";
    std::string out;
    for (int a : w) out += "T" + std::to_string(a);
    return out;
}

}  // namespace

std::string to_string(const GenWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const Token& t : w) {
        if (!first) os << ' ';
        first = false;
        switch (t.kind) {
            case TokKind::T: os << 'T' << t.index; break;
            case TokKind::Tinv: os << 'T' << t.index << "^-1"; break;
            case TokKind::E: os << 'E' << t.index; break;
            case TokKind::X:
                os << 'X' << t.index;
                if (t.param != 1) os << '^' << t.param;
                break;
            case TokKind::XminusU: os << "(X" << t.index << "-u" << t.param << ')'; break;
            case TokKind::WordSum: {
                os << "sum(";
                for (std::size_t i = 0; i < t.words.size(); ++i) os << (i ? "+" : "") << t_string(t.words[i]);
                os << ')';
                break;
            }
        }
    }
    return os.str();
}

GenWord concat(const GenWord& a, const GenWord& b) {
    GenWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

GenWord star(const GenWord& w) {
    GenWord out(w.rbegin(), w.rend());
    for (Token& t : out)
        if (t.kind == TokKind::WordSum)
            for (auto& word : t.words) std::reverse(word.begin(), word.end());
    return out;
}

GenWord t_word(const std::vector<int>& word) {
    GenWord out;
    for (int a : word) out.push_back(tok_T(a));
    return out;
}

GenWord e_power(int f, int n) {
    GenWord out;
    for (int j = 1; j <= f; ++j) out.push_back(tok_E(n - 2 * j + 1));
    return out;
}

GenWord x_kappa(const KappaVector& kappa) {
    GenWord out;
    const int n = static_cast<int>(kappa.size());
    for (int i = n - 1; i >= 1; --i) {
        const int k = kappa[static_cast<std::size_t>(i - 1)];
        if (k != 0) out.push_back(tok_X(i, k));
    }
    return out;
}

std::vector<std::vector<int>> row_stabilizer_words(const RPartition& lambda) {
    const int m = lambda.size();
    std::vector<std::pair<int, int>> rows;  // (offset, length)
    int offset = 0;
    for (const auto& comp : lambda.components())
        for (int len : comp) {
            rows.emplace_back(offset, len);
            offset += len;
        }
    std::vector<std::vector<int>> blocks;
    for (const auto& [o, len] : rows) {
        std::vector<int> b(static_cast<std::size_t>(len));
        std::iota(b.begin(), b.end(), o + 1);
        blocks.push_back(std::move(b));
    }
    std::vector<std::vector<int>> out;
    std::function<void(std::size_t, Perm&)> rec = [&](std::size_t bi, Perm& w) {
        if (bi == blocks.size()) {
            out.push_back(reduced_word(w));
            return;
        }
        std::vector<int> images = blocks[bi];
        do {
            for (std::size_t i = 0; i < images.size(); ++i) w[static_cast<std::size_t>(blocks[bi][i])] = images[i];
            rec(bi + 1, w);
        } while (std::next_permutation(images.begin(), images.end()));
    };
    Perm w = identity_perm(m);
    rec(0, w);
    std::sort(out.begin(), out.end());
    return out;
}

GenWord m_word(const StdTableau& s, const StdTableau& t) {
    if (!(s.shape == t.shape)) throw std::invalid_argument("m_word: tableaux of different shapes");
    const RPartition& lambda = s.shape;
    std::vector<int> ds = reduced_word(tableau_perm(s));
    std::reverse(ds.begin(), ds.end());
    GenWord out = t_word(ds);
    int a = 0;
    for (int comp = 2; comp <= lambda.r(); ++comp) {
        for (int len : lambda.component(comp - 1)) a += len;
        for (int i = 1; i <= a; ++i) out.push_back(tok_XminusU(i, comp));
    }
    const auto sum = row_stabilizer_words(lambda);
    if (sum.size() > 1) out.push_back(Token{TokKind::WordSum, 0, 0, sum});
    return concat(out, t_word(reduced_word(tableau_perm(t))));
}

std::vector<CellIndex> cell_indices(const Shape& shape, int n, int r) {
    std::vector<CellIndex> out;
    const auto tabs = std_tableaux(shape.lambda);
    const auto kappas = enumerate_kappa(shape.f, n, r);
    const auto cosets = enumerate_cosets(shape.f, n);
    for (const auto& t : tabs)
        for (const auto& k : kappas)
            for (const auto& d : cosets) out.push_back(CellIndex{t, k, d});
    return out;
}

GenWord cell_word(const Shape& shape, int n, const CellIndex& left, const CellIndex& right) {
    GenWord w = star(t_word(left.d.word));
    w = concat(w, x_kappa(left.kappa));
    w = concat(w, e_power(shape.f, n));
    w = concat(w, m_word(left.t, right.t));
    w = concat(w, x_kappa(right.kappa));
    return concat(w, t_word(right.d.word));
}

std::vector<BasisCount> basis_counts(int n, int r) {
    std::vector<BasisCount> out;
    for (const Shape& sh : shapes(n, r)) {
        BasisCount c;
        c.shape = sh;
        c.std_tableaux = static_cast<long long>(std_tableaux(sh.lambda).size());
        c.r_pow_f = 1;
        for (int i = 0; i < sh.f; ++i) c.r_pow_f *= r;
        c.cosets = coset_count(sh.f, n);
        c.delta = c.std_tableaux * c.r_pow_f * c.cosets;
        out.push_back(c);
    }
    return out;
}

long long bmw_dimension(int n, int r) {
    long long v = 1;
    for (int i = 0; i < n; ++i) v *= r;
    for (int k = 2 * n - 1; k > 1; k -= 2) v *= k;
    return v;
}

std::size_t FaithfulRep::total_dim() const {
    std::size_t s = 0;
    for (const auto& b : blocks) s += b.dim() * b.dim();
    return s;
}

FaithfulRep build_faithful(int n, const GroundParams<Rational>& p, mpfr_prec_t precision) {
    FaithfulRep rep;
    rep.n = n;
    rep.r = p.r();
    rep.precision = precision;
    rep.delta = p.delta();
    rep.u = p.u();
    rep.blocks = build_all(n, p, precision);
    return rep;
}

namespace {

Matrix<Ball> t_product(const SeminormalModule& m, const std::vector<int>& word) {
    Matrix<Ball> out = m.identity();
    for (int a : word) out = out * m.T.at(static_cast<std::size_t>(a - 1));
    return out;
}

void check_index(const Token& t, int n) {
    const bool gen = t.kind == TokKind::T || t.kind == TokKind::Tinv || t.kind == TokKind::E;
    const int hi = gen ? n - 1 : n;
    if (t.kind == TokKind::WordSum) {
        for (const auto& w : t.words)
            for (int a : w)
                if (a < 1 || a > n - 1) throw std::out_of_range("eval_word: T index " + std::to_string(a) + " out of range");
        return;
    }
    if (t.index < 1 || t.index > hi)
        throw std::out_of_range("eval_word: index " + std::to_string(t.index) + " out of range for n=" + std::to_string(n));
}

Matrix<Ball> token_matrix(const Token& t, const SeminormalModule& m, const FaithfulRep& rep) {
    const mpfr_prec_t prec = rep.precision;
    switch (t.kind) {
        case TokKind::T: return m.T[static_cast<std::size_t>(t.index - 1)];
        case TokKind::E: return m.E[static_cast<std::size_t>(t.index - 1)];
        case TokKind::Tinv: {
            const Ball d(rep.delta, prec);
            const auto i = static_cast<std::size_t>(t.index - 1);
            return m.T[i] - m.identity().scaled(d) + m.E[i].scaled(d);
        }
        case TokKind::X:
        case TokKind::XminusU: {
            Matrix<Ball> out = m.zero();
            for (std::size_t s = 0; s < m.dim(); ++s) {
                const Rational& c = m.content[s][static_cast<std::size_t>(t.index - 1)];
                const Rational v = t.kind == TokKind::X ? c.pow(t.param) : c - rep.u.at(static_cast<std::size_t>(t.param - 1));
                out(s, s) = Ball(v, prec);
            }
            return out;
        }
        case TokKind::WordSum: {
            Matrix<Ball> out = m.zero();
            for (const auto& w : t.words) out = out + t_product(m, w);
            return out;
        }
    }
    throw std::logic_error("token_matrix: unknown token");
}

}  // namespace

std::vector<Matrix<Ball>> eval_word(const GenWord& w, const FaithfulRep& rep) {
    for (const Token& t : w) check_index(t, rep.n);
    std::vector<Matrix<Ball>> out;
    for (const auto& m : rep.blocks) {
        Matrix<Ball> acc = m.identity();
        for (const Token& t : w) acc = acc * token_matrix(t, m, rep);
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Ball> flatten(const std::vector<Matrix<Ball>>& blocks) {
    std::vector<Ball> out;
    for (const auto& b : blocks) out.insert(out.end(), b.data().begin(), b.data().end());
    return out;
}

bool blocks_agree(const std::vector<Matrix<Ball>>& a, const std::vector<Matrix<Ball>>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        long scale = 0;
        for (const auto* m : {&a[i], &b[i]})
            for (const Ball& x : m->data())
                if (!mpfr_zero_p(x.mid())) scale = std::max(scale, static_cast<long>(mpfr_get_exp(x.mid())));
        const Matrix<Ball> d = a[i] - b[i];
        for (const Ball& x : d.data())
            if (!x.contains_zero() || !x.width_below_pow2(scale - static_cast<long>(x.precision() / 2))) return false;
    }
    return true;
}

long long certified_rank(std::vector<std::vector<Ball>> rows) {
    const std::size_t nr = rows.size();
    if (nr == 0) return 0;
    const std::size_t nc = rows[0].size();
    std::vector<std::size_t> cols(nc);
    std::iota(cols.begin(), cols.end(), 0);
    const std::size_t steps = std::min(nr, nc);
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pr = nr;
        std::size_t pc = nc;
        for (std::size_t i = k; i < nr; ++i)
            for (std::size_t jj = k; jj < nc; ++jj) {
                const Ball& x = rows[i][cols[jj]];
                if (x.contains_zero()) continue;
                if (pr == nr || mpfr_cmpabs(x.mid(), rows[pr][cols[pc]].mid()) > 0) {
                    pr = i;
                    pc = jj;
                }
            }
        if (pr == nr) return static_cast<long long>(k);
        std::swap(rows[k], rows[pr]);
        std::swap(cols[k], cols[pc]);
        const Ball& piv = rows[k][cols[k]];
        for (std::size_t i = k + 1; i < nr; ++i) {
            const Ball& lead = rows[i][cols[k]];
            if (lead.is_exact() && lead.contains_zero()) continue;
            const Ball f = lead / piv;
            for (std::size_t jj = k; jj < nc; ++jj) {
                const Ball& y = rows[k][cols[jj]];
                if (y.is_exact() && y.contains_zero()) continue;
                rows[i][cols[jj]] -= f * y;
            }
        }
    }
    return static_cast<long long>(steps);
}

RankReport rank_certify(int n, const GroundParams<Rational>& p, mpfr_prec_t precision, mpfr_prec_t max_precision) {
    const auto start = std::chrono::steady_clock::now();
    RankReport rep;
    rep.n = n;
    rep.r = p.r();
    std::vector<GenWord> words;
    for (const Shape& sh : shapes(n, p.r())) {
        const auto idx = cell_indices(sh, n, p.r());
        for (const auto& a : idx)
            for (const auto& b : idx) words.push_back(cell_word(sh, n, a, b));
    }
    rep.words = static_cast<long long>(words.size());
    for (mpfr_prec_t prec = precision;; prec *= 2) {
        const FaithfulRep fr = build_faithful(n, p, prec);
        rep.D = static_cast<long long>(fr.total_dim());
        std::vector<std::vector<Ball>> rows;
        rows.reserve(words.size());
        for (const auto& w : words) rows.push_back(flatten(eval_word(w, fr)));
        rep.rank_certified = certified_rank(std::move(rows));
        rep.precision_bits = prec;
        rep.certified = rep.rank_certified == rep.words && rep.words == rep.D;
        if (rep.certified || prec * 2 > max_precision) break;
    }
    if (!rep.certified) {
        rep.detail = "rank uncertified: " + std::to_string(rep.rank_certified) + " certified pivots of " +
                     std::to_string(rep.words) + " words, D = " + std::to_string(rep.D);
    }
    rep.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

GramReport gram_half(int n, int ell, const GroundParams<Rational>& p, const std::function<Rational(int)>& omega,
                     mpfr_prec_t precision) {
    if (n <= 0 || n % 2 != 0) throw std::invalid_argument("gram_half: n must be even and positive");
    if (std::abs(ell) > p.r() - 1) throw std::invalid_argument("gram_half: need |l| <= r - 1");
    const auto om = omega ? omega : std::function<Rational(int)>([&p](int a) { return p.omega(a); });
    GramReport g;
    g.n = n;
    g.ell = ell;
    g.value = om(ell).pow(n / 2);
    g.vanishes = true;
    for (int i = 0; i <= p.r() - 1; ++i) g.vanishes = g.vanishes && om(i).is_zero();
    if (!omega && n <= 4) {
        KappaVector kappa(static_cast<std::size_t>(n), 0);
        for (int i = 1; i < n; i += 2) kappa[static_cast<std::size_t>(i - 1)] = ell;
        const GenWord ef = e_power(n / 2, n);
        const GenWord word = concat(concat(ef, x_kappa(kappa)), ef);
        g.cross_checked = true;
        for (mpfr_prec_t prec = precision;; prec *= 2) {
            FaithfulRep rep;
            rep.n = n;
            rep.r = p.r();
            rep.precision = prec;
            rep.delta = p.delta();
            rep.u = p.u();
            rep.blocks.push_back(build_module(Shape{n / 2, RPartition(p.r())}, n, p, prec));
            auto rhs = eval_word(ef, rep);
            rhs[0] = rhs[0].scaled(Ball(g.value, prec));
            g.cross_check_pass = blocks_agree(eval_word(word, rep), rhs);
            if (g.cross_check_pass || prec * 2 > 4096) break;
        }
    }
    return g;
}

std::vector<Shape> classify(int n, int r, const std::function<Rational(int)>& omega) {
    bool all_zero = true;
    for (int i = 0; i <= r - 1; ++i) all_zero = all_zero && omega(i).is_zero();
    std::vector<Shape> out;
    for (const Shape& sh : shapes(n, r)) {
        if (n % 2 == 0 && 2 * sh.f == n && all_zero) continue;
        out.push_back(sh);
    }
    return out;
}

}  // namespace bmw
