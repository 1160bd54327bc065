#include "bmw/params.hpp"

#include <sstream>

namespace bmw {

GenericChoice generic_choice(int r, int n, int seed, int alpha) {
    if (r <= 0 || r % 2 == 0) throw std::invalid_argument("generic_choice: r must be odd");
    if (n < 1) n = 1;
    if (alpha != 1 && alpha != -1) throw std::invalid_argument("generic_choice: alpha must be +1 or -1");
    if (seed < 0) throw std::invalid_argument("generic_choice: seed must be non-negative");
    GenericChoice c;
    c.alpha = alpha;
    c.q = alpha == 1 ? Rational(2 + seed) : Rational(BigInt(1), BigInt(2 + seed));
    for (int i = 1; i <= r; ++i) {
        const long mag = n + 2L * n * (r - i);
        const bool positive = (i % 2 == 1) == (alpha == 1);
        c.k.push_back(positive ? mag : -mag);
    }
    return c;
}

bool is_generic(const std::vector<Rational>& u, const Rational& q, int n) {
    for (int m = 1; m <= 2 * n; ++m)
        if (q.pow(2 * m) == Rational(1)) return false;
    const int r = static_cast<int>(u.size());
    for (int d = -(2 * n - 1); d <= 2 * n - 1; ++d) {
        const Rational q2d = q.pow(2 * d);
        const Rational qd = q.pow(d);
        for (int i = 0; i < r; ++i) {
            if (u[i] == qd || u[i] == -qd) return false;
            for (int j = 0; j < r; ++j) {
                if (i == j) continue;
                if (u[i] * u[j] == q2d || u[i] / u[j] == q2d) return false;
            }
        }
    }
    return true;
}

GroundParams<Rational> make_params(const GenericChoice& choice) {
    std::vector<Rational> u;
    for (long k : choice.k) u.push_back(choice.q.pow(2 * k));
    return GroundParams<Rational>(std::move(u), choice.q, choice.alpha);
}

GroundParams<Rational> generic_specialization(int r, int n, int seed, int alpha) {
    const GenericChoice c = generic_choice(r, n, seed, alpha);
    GroundParams<Rational> p = make_params(c);
    if (!is_generic(p.u(), p.q(), n)) throw std::logic_error("generic_specialization: certification failed");
    return p;
}

GroundParams<RatFunc> symbolic_params(int r, int alpha) {
    std::vector<RatFunc> u;
    for (int i = 1; i <= r; ++i) u.push_back(RatFunc::var("u" + std::to_string(i)));
    return GroundParams<RatFunc>(std::move(u), RatFunc::var("q"), alpha);
}

GenericChoice parse_preset(const std::string& text) {
    GenericChoice c;
    int r = -1;
    bool have_q = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const auto eq = line.find('=');
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        if (trim(line).empty()) continue;
        if (eq == std::string::npos) throw std::invalid_argument("preset line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "r") {
            r = std::stoi(value);
        } else if (key == "q") {
            c.q = Rational::parse(value);
            have_q = true;
        } else if (key == "alpha") {
            c.alpha = std::stoi(value);
        } else if (key == "k") {
            std::istringstream ks(value);
            std::string item;
            while (std::getline(ks, item, ',')) c.k.push_back(std::stol(trim(item)));
        } else {
            throw std::invalid_argument("preset line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!have_q) throw std::invalid_argument("preset: missing q");
    if (r < 0) r = static_cast<int>(c.k.size());
    if (static_cast<int>(c.k.size()) != r) throw std::invalid_argument("preset: r does not match the number of exponents");
    if (c.alpha != 1 && c.alpha != -1) throw std::invalid_argument("preset: alpha must be 1 or -1");
    return c;
}

}  // namespace bmw
