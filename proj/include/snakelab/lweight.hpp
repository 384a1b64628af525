#pragma once

// Exact arithmetic in the l-weight lattice of type A_n: sparse Laurent
// monomials in the generators Y[i,a] (node i in [1,n], integer spectral
// shift a), the classical weight lattice, affine root elements and the
// triangular decomposition of a monomial as a product of roots.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace snakelab {

class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Global guards against runaway enumerations. Set once at startup.
struct Limits {
    int max_rank = 12;
    std::size_t max_character_terms = 1'000'000;
};

inline Limits& limits() {
    static Limits l;
    return l;
}

inline void check_rank(int n) {
    if (n < 1)
        throw error("rank out of range: n = " + std::to_string(n));
    if (n > limits().max_rank)
        throw error("cap exceeded: rank " + std::to_string(n) + " > max_rank " +
                    std::to_string(limits().max_rank));
}

inline void check_node(int i, int n) {
    check_rank(n);
    if (i < 1 || i > n)
        throw error("node out of range: i = " + std::to_string(i) + ", n = " + std::to_string(n));
}

struct Generator {
    int node = 0;
    int shift = 0;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

// Element of the additive weight lattice P_n, coordinates in the
// fundamental weights.
struct Weight {
    int rank = 0;
    std::vector<long long> coeffs;

    Weight() = default;
    explicit Weight(int n) : rank(n), coeffs(static_cast<std::size_t>(n), 0) { check_rank(n); }

    static Weight fundamental(int n, int i) {
        check_node(i, n);
        Weight w(n);
        w.coeffs[static_cast<std::size_t>(i - 1)] = 1;
        return w;
    }

    // alpha_i = 2 omega_i - omega_{i-1} - omega_{i+1}
    static Weight simple_root(int n, int i) {
        check_node(i, n);
        Weight w(n);
        w.coeffs[static_cast<std::size_t>(i - 1)] = 2;
        if (i - 1 >= 1) w.coeffs[static_cast<std::size_t>(i - 2)] -= 1;
        if (i + 1 <= n) w.coeffs[static_cast<std::size_t>(i)] -= 1;
        return w;
    }

    long long operator[](int i) const { return coeffs.at(static_cast<std::size_t>(i - 1)); }

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        if (a.rank != b.rank) throw error("rank mismatch: weight addition");
        Weight w(a.rank);
        for (std::size_t k = 0; k < w.coeffs.size(); ++k) w.coeffs[k] = a.coeffs[k] + b.coeffs[k];
        return w;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        if (a.rank != b.rank) throw error("rank mismatch: weight subtraction");
        Weight w(a.rank);
        for (std::size_t k = 0; k < w.coeffs.size(); ++k) w.coeffs[k] = a.coeffs[k] - b.coeffs[k];
        return w;
    }
    friend bool operator==(const Weight&, const Weight&) = default;
};

// Writes w = sum_j s_j alpha_j if the (rational) solution is integral,
// using the closed form of the inverse A_n Cartan matrix,
// s_j = sum_k min(j,k) (n+1-max(j,k)) w_k / (n+1).
inline std::optional<std::vector<long long>> root_coordinates(const Weight& w) {
    const int n = w.rank;
    std::vector<long long> s(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        long long num = 0;
        for (int k = 1; k <= n; ++k)
            num += static_cast<long long>(std::min(j, k)) * (n + 1 - std::max(j, k)) * w[k];
        if (num % (n + 1) != 0) return std::nullopt;
        s[static_cast<std::size_t>(j - 1)] = num / (n + 1);
    }
    return s;
}

inline bool weight_in_Qplus(const Weight& w) {
    auto s = root_coordinates(w);
    if (!s) return false;
    return std::all_of(s->begin(), s->end(), [](long long c) { return c >= 0; });
}

// A Laurent monomial in the generators Y[i,a]; factors are kept sorted by
// (node, shift) with zero exponents dropped, so equality and ordering are
// structural.
class LWeight {
  public:
    struct Factor {
        int node;
        int shift;
        int exp;
        friend auto operator<=>(const Factor&, const Factor&) = default;
    };

    LWeight() = default;
    explicit LWeight(int n) : rank_(n) { check_rank(n); }

    static LWeight identity(int n) { return LWeight(n); }

    // Y[i,a]^e, with the convention that nodes outside [1,n] give 1.
    static LWeight generator(int n, int i, int a, int e = 1) {
        check_rank(n);
        LWeight x(n);
        if (i >= 1 && i <= n && e != 0) x.factors_.push_back({i, a, e});
        return x;
    }

    int rank() const { return rank_; }
    const std::vector<Factor>& factors() const { return factors_; }
    bool is_identity() const { return factors_.empty(); }

    int exponent(int i, int a) const {
        for (const auto& f : factors_)
            if (f.node == i && f.shift == a) return f.exp;
        return 0;
    }

    bool is_dominant() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const Factor& f) { return f.exp > 0; });
    }

    friend LWeight operator*(const LWeight& x, const LWeight& y) {
        if (x.rank_ != y.rank_) throw error("rank mismatch: monomial product");
        LWeight z(x.rank_);
        z.factors_.reserve(x.factors_.size() + y.factors_.size());
        auto a = x.factors_.begin(), ae = x.factors_.end();
        auto b = y.factors_.begin(), be = y.factors_.end();
        while (a != ae && b != be) {
            const auto ka = std::pair{a->node, a->shift};
            const auto kb = std::pair{b->node, b->shift};
            if (ka < kb) {
                z.factors_.push_back(*a++);
            } else if (kb < ka) {
                z.factors_.push_back(*b++);
            } else {
                int e = a->exp + b->exp;
                if (e != 0) z.factors_.push_back({a->node, a->shift, e});
                ++a;
                ++b;
            }
        }
        z.factors_.insert(z.factors_.end(), a, ae);
        z.factors_.insert(z.factors_.end(), b, be);
        return z;
    }

    LWeight inverse() const {
        LWeight z(rank_);
        z.factors_ = factors_;
        for (auto& f : z.factors_) f.exp = -f.exp;
        return z;
    }

    LWeight pow(int e) const {
        if (e == 0) return LWeight(rank_);
        LWeight z(rank_);
        z.factors_ = factors_;
        for (auto& f : z.factors_) f.exp *= e;
        return z;
    }

    Weight wt() const {
        Weight w(rank_);
        for (const auto& f : factors_) w.coeffs[static_cast<std::size_t>(f.node - 1)] += f.exp;
        return w;
    }

    // Spectral translation a -> a+s on every generator.
    LWeight shifted(int s) const {
        LWeight z(rank_);
        z.factors_ = factors_;
        for (auto& f : z.factors_) f.shift += s;
        return z;
    }

    // omega*_{i,a} = omega_{n+1-i, a+n+1}
    LWeight dual_star() const { return node_flip(rank_ + 1); }
    // *omega_{i,a} = omega_{n+1-i, a-n-1}
    LWeight left_dual_star() const { return node_flip(-rank_ - 1); }
    // Omega(omega_{i,a}) = omega_{n+1-i, -a}
    LWeight omega_involution() const {
        LWeight z(rank_);
        for (const auto& f : factors_) z.factors_.push_back({rank_ + 1 - f.node, -f.shift, f.exp});
        z.sort_factors();
        return z;
    }

    // Kills generators outside J=[lo,hi] and renumbers node k -> k-lo+1.
    LWeight restrict_to_interval(int lo, int hi) const {
        if (lo < 1 || lo > hi || hi > rank_)
            throw error("bad interval: [" + std::to_string(lo) + "," + std::to_string(hi) +
                        "] in rank " + std::to_string(rank_));
        LWeight z(hi - lo + 1);
        for (const auto& f : factors_)
            if (f.node >= lo && f.node <= hi) z.factors_.push_back({f.node - lo + 1, f.shift, f.exp});
        z.sort_factors();
        return z;
    }

    // Expands a dominant monomial into the multiset of its generator
    // factors, sorted by (shift, node).
    std::vector<Generator> factor_multiset() const {
        if (!is_dominant()) throw error("factor_multiset requires a dominant monomial");
        std::vector<Generator> out;
        for (const auto& f : factors_)
            for (int c = 0; c < f.exp; ++c) out.push_back({f.node, f.shift});
        std::sort(out.begin(), out.end(), [](const Generator& a, const Generator& b) {
            return std::pair{a.shift, a.node} < std::pair{b.shift, b.node};
        });
        return out;
    }

    std::string str() const {
        if (factors_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& f : factors_) {
            if (!first) os << "·";
            first = false;
            os << "Y[" << f.node << "," << f.shift << "]";
            if (f.exp != 1) os << "^" << f.exp;
        }
        return os.str();
    }

    friend auto operator<=>(const LWeight& x, const LWeight& y) {
        if (auto c = x.rank_ <=> y.rank_; c != 0) return c;
        return x.factors_ <=> y.factors_;
    }
    friend bool operator==(const LWeight&, const LWeight&) = default;

  private:
    LWeight node_flip(int shift_by) const {
        LWeight z(rank_);
        for (const auto& f : factors_)
            z.factors_.push_back({rank_ + 1 - f.node, f.shift + shift_by, f.exp});
        z.sort_factors();
        return z;
    }

    void sort_factors() {
        std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) {
            return std::pair{a.node, a.shift} < std::pair{b.node, b.shift};
        });
    }

    int rank_ = 1;
    std::vector<Factor> factors_;
};

// alpha_{i,a} = Y[i-1,a]^-1 Y[i,a-1] Y[i,a+1] Y[i+1,a]^-1, nodes outside
// [1,n] dropped.
inline LWeight simple_affine_root(int n, int i, int a) {
    check_node(i, n);
    LWeight x = LWeight::generator(n, i, a - 1) * LWeight::generator(n, i, a + 1);
    x = x * LWeight::generator(n, i - 1, a, -1);
    x = x * LWeight::generator(n, i + 1, a, -1);
    return x;
}

// Multiplicities of the alpha_{i,a} in a Q+ decomposition.
struct RootDecomposition {
    std::map<Generator, long long> exponents;

    LWeight reassemble(int n) const {
        LWeight x = LWeight::identity(n);
        for (const auto& [g, m] : exponents)
            x = x * simple_affine_root(n, g.node, g.shift).pow(static_cast<int>(m));
        return x;
    }
    friend bool operator==(const RootDecomposition&, const RootDecomposition&) = default;
};

// Solves x = prod alpha_{i,a}^{m_{i,a}} with m >= 0 if possible.
//
// Triangular elimination on the maximal spectral shift: a used root at
// shift A would contribute Y[.,A+1] with no cancellation from other roots
// at shift <= A, so at the top level c of the remaining support only
// alpha_{j,c-1} can produce Y[j,c], pinning its multiplicity. The
// classical image bounds the total number of eliminations.
inline std::optional<RootDecomposition> decompose_in_Qplus(const LWeight& x) {
    const int n = x.rank();
    auto classical = root_coordinates(x.wt());
    if (!classical) return std::nullopt;
    long long budget = 0;
    for (long long s : *classical) {
        if (s < 0) return std::nullopt;
        budget += s;
    }

    RootDecomposition dec;
    LWeight rem = x;
    while (!rem.is_identity()) {
        int top = rem.factors().front().shift;  // maximal shift in the support
        for (const auto& f : rem.factors()) top = std::max(top, f.shift);
        bool progressed = false;
        for (const auto& f : rem.factors()) {
            if (f.shift != top) continue;
            if (f.exp < 0) return std::nullopt;
            budget -= f.exp;
            if (budget < 0) return std::nullopt;
            dec.exponents[{f.node, top - 1}] += f.exp;
            rem = rem * simple_affine_root(n, f.node, top - 1).pow(-f.exp);
            progressed = true;
            break;  // factor list changed; rescan
        }
        if (!progressed) return std::nullopt;
    }
    return dec;
}

}  // namespace snakelab
