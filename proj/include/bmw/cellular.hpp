#pragma once

#include "bmw/cosets.hpp"
#include "bmw/seminormal.hpp"

#include <functional>

namespace bmw {

enum class TokKind { T, Tinv, E, X, XminusU, WordSum };

/// One factor of a generator word. X carries an exponent in `param`;
/// XminusU is X_index − u_param; WordSum is Σ over `words` of T_{a_1}T_{a_2}⋯.
struct Token {
    TokKind kind = TokKind::T;
    int index = 0;
    int param = 0;
    std::vector<std::vector<int>> words;
    bool operator==(const Token&) const = default;
};

using GenWord = std::vector<Token>;

Token tok_T(int i);
Token tok_Tinv(int i);
Token tok_E(int i);
Token tok_X(int i, int exponent = 1);
Token tok_XminusU(int i, int s);

std::string to_string(const GenWord& w);
GenWord concat(const GenWord& a, const GenWord& b);
/// The anti-involution: reverse the word (T, E and X are fixed).
GenWord star(const GenWord& w);

/// T_{a_1}⋯T_{a_k} for a generator index word.
GenWord t_word(const std::vector<int>& word);

/// E_{n−1}E_{n−3}⋯E_{n−2f+1}
GenWord e_power(int f, int n);
/// X_{n−1}^{k_{n−1}} X_{n−3}^{k_{n−3}} ⋯, skipping zero exponents.
GenWord x_kappa(const KappaVector& kappa);

/// All elements of the row stabiliser of the superstandard λ-tableau, as
/// reduced words.
std::vector<std::vector<int>> row_stabilizer_words(const RPartition& lambda);

/// T_{d(s)^{-1}} Π_{s=2}^{r} Π_{i ≤ a_{s−1}} (X_i − u_s) Σ_{w∈S_λ} T_w T_{d(t)}
GenWord m_word(const StdTableau& s, const StdTableau& t);

/// (t, κ, d) ∈ δ(f, λ)
struct CellIndex {
    StdTableau t;
    KappaVector kappa;
    CosetRep d;
};

std::vector<CellIndex> cell_indices(const Shape& shape, int n, int r);

/// T_e^* X^ρ E^f M_st X^κ T_d
GenWord cell_word(const Shape& shape, int n, const CellIndex& left, const CellIndex& right);

struct BasisCount {
    Shape shape;
    long long std_tableaux = 0;
    long long r_pow_f = 0;
    long long cosets = 0;
    long long delta = 0;
};

std::vector<BasisCount> basis_counts(int n, int r);

/// r^n (2n − 1)!!
long long bmw_dimension(int n, int r);

/// Direct sum of every seminormal module of Λ^+_{r,n}.
struct FaithfulRep {
    int n = 0;
    int r = 1;
    mpfr_prec_t precision = kDefaultPrecision;
    Rational delta;
    std::vector<Rational> u;
    std::vector<SeminormalModule> blocks;
    std::size_t total_dim() const;  // Σ dim²
};

FaithfulRep build_faithful(int n, const GroundParams<Rational>& p, mpfr_prec_t precision = kDefaultPrecision);

/// Image of the word in every block; throws std::out_of_range on a bad index.
std::vector<Matrix<Ball>> eval_word(const GenWord& w, const FaithfulRep& rep);
std::vector<Ball> flatten(const std::vector<Matrix<Ball>>& blocks);

/// Every entry of a − b contains 0 with width below 2^(−precision/2) times
/// the largest entry magnitude of the block (at least 1).
bool blocks_agree(const std::vector<Matrix<Ball>>& a, const std::vector<Matrix<Ball>>& b);

struct RankReport {
    int n = 0;
    int r = 1;
    long long D = 0;
    long long words = 0;
    long long rank_certified = 0;  // certified pivots at the final precision
    bool certified = false;
    mpfr_prec_t precision_bits = 0;
    double elapsed = 0;
    std::string detail;
};

/// Number of certified-nonzero pivots of full-pivoting ball LU on the rows.
long long certified_rank(std::vector<std::vector<Ball>> rows);

/// Evaluate every cellular word and certify that the images are linearly
/// independent, doubling the precision up to `max_precision`.
RankReport rank_certify(int n, const GroundParams<Rational>& p, mpfr_prec_t precision = kDefaultPrecision,
                        mpfr_prec_t max_precision = 4096);

struct GramReport {
    int n = 0;
    int ell = 0;
    Rational value;           // ω_ℓ^{n/2}
    bool vanishes = false;    // every ω_i with 0 ≤ i ≤ r − 1 is zero
    bool cross_checked = false;
    bool cross_check_pass = true;
};

/// φ_{n/2,0}(E^{n/2}, E^{n/2} X_{n−1}^ℓ ⋯ X_3^ℓ X_1^ℓ). With `omega` the values
/// come from the override and no block computation is attempted.
GramReport gram_half(int n, int ell, const GroundParams<Rational>& p,
                     const std::function<Rational(int)>& omega = {}, mpfr_prec_t precision = kDefaultPrecision);

/// Labels (f, λ) of the irreducible modules; ω_0..ω_{r−1} decide whether
/// f = n/2 survives for even n.
std::vector<Shape> classify(int n, int r, const std::function<Rational(int)>& omega);

}  // namespace bmw
