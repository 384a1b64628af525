#pragma once

// The Mukhin--Young path model: +-1-step lattice paths on [0,n+1] from
// i+a to n+1-i+a, their corner monomials, the distinguished lowest/dual
// and g/p families, and strictly non-crossing tuples attached to prime
// snakes.

#include <optional>

#include "snakelab/segments.hpp"

namespace snakelab {

class Path {
  public:
    Path(int n, int i, int a, std::vector<int> values)
        : rank_(n), node_(i), shift_(a), v_(std::move(values)) {
        check_node(i, n);
        if (static_cast<int>(v_.size()) != n + 2) throw error("path has wrong length");
        if (v_.front() != i + a || v_.back() != n + 1 - i + a)
            throw error("path endpoints do not match (i,a)");
        for (std::size_t r = 0; r + 1 < v_.size(); ++r)
            if (std::abs(v_[r + 1] - v_[r]) != 1) throw error("path step is not +-1");
    }

    int rank() const { return rank_; }
    int node() const { return node_; }
    int shift() const { return shift_; }
    const std::vector<int>& values() const { return v_; }
    int operator()(int r) const { return v_.at(static_cast<std::size_t>(r)); }

    bool same_family(const Path& other) const {
        return rank_ == other.rank_ && node_ == other.node_ && shift_ == other.shift_;
    }

    friend auto operator<=>(const Path& x, const Path& y) {
        if (auto c = x.rank_ <=> y.rank_; c != 0) return c;
        if (auto c = x.node_ <=> y.node_; c != 0) return c;
        if (auto c = x.shift_ <=> y.shift_; c != 0) return c;
        return x.v_ <=> y.v_;
    }
    friend bool operator==(const Path&, const Path&) = default;

  private:
    int rank_, node_, shift_;
    std::vector<int> v_;
};

struct CornerData {
    std::vector<int> plus;   // local minima: positive corners
    std::vector<int> minus;  // local maxima: inverse corners
};

inline CornerData corners(const Path& p) {
    CornerData c;
    for (int r = 1; r <= p.rank(); ++r) {
        if (p(r - 1) == p(r) + 1 && p(r + 1) == p(r) + 1) c.plus.push_back(r);
        if (p(r - 1) == p(r) - 1 && p(r + 1) == p(r) - 1) c.minus.push_back(r);
    }
    return c;
}

// omega(p) = prod_{r in c+} Y[r,p(r)] prod_{r in c-} Y[r,p(r)]^-1
inline LWeight path_monomial(const Path& p) {
    LWeight x = LWeight::identity(p.rank());
    CornerData c = corners(p);
    for (int r : c.plus) x = x * LWeight::generator(p.rank(), r, p(r));
    for (int r : c.minus) x = x * LWeight::generator(p.rank(), r, p(r), -1);
    return x;
}

// All of P_{i,a}, ordered lexicographically on value sequences
// (equivalently on step signs, with a down-step first).
inline std::vector<Path> enumerate_paths(int i, int a, int n) {
    check_node(i, n);
    std::vector<Path> out;
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n) + 2);
    v.push_back(i + a);
    const int target = n + 1 - i + a;
    auto rec = [&](auto&& self) -> void {
        const int r = static_cast<int>(v.size()) - 1;
        if (r == n + 1) {
            if (v.back() == target) out.emplace_back(n, i, a, v);
            return;
        }
        // remaining steps must still be able to reach the endpoint
        const int left = n + 1 - r;
        for (int step : {-1, +1}) {
            const int next = v.back() + step;
            if (std::abs(target - next) <= left - 1) {
                v.push_back(next);
                self(self);
                v.pop_back();
            }
        }
    };
    rec(rec);
    return out;
}

namespace detail {

// Piecewise-linear path through interior turning points.
inline Path path_through(int n, int i, int a, std::vector<std::pair<int, int>> pts) {
    std::vector<std::pair<int, int>> stops;
    stops.emplace_back(0, i + a);
    for (auto& pt : pts)
        if (pt.first > 0 && pt.first < n + 1) stops.push_back(pt);
    stops.emplace_back(n + 1, n + 1 - i + a);
    std::vector<int> v;
    v.push_back(stops.front().second);
    for (std::size_t k = 1; k < stops.size(); ++k) {
        auto [r0, y0] = stops[k - 1];
        auto [r1, y1] = stops[k];
        if (r1 < r0 || std::abs(y1 - y0) != r1 - r0)
            throw error("internal: invalid path turning points");
        const int step = y1 > y0 ? 1 : -1;
        for (int r = r0 + 1; r <= r1; ++r) v.push_back(v.back() + step);
    }
    return Path(n, i, a, std::move(v));
}

}  // namespace detail

// p_{i,a}: straight down to (i,a) then up; omega = Y[i,a].
inline Path lowest_path(int i, int a, int n) {
    check_node(i, n);
    return detail::path_through(n, i, a, {{i, a}});
}

// p*_{i,a}: up to (n+1-i, a+n+1) then down; omega = Y[n+1-i,a+n+1]^-1.
inline Path dual_path(int i, int a, int n) {
    check_node(i, n);
    return detail::path_through(n, i, a, {{n + 1 - i, a + n + 1}});
}

// g^m_{j,a}: the unique path in P_{j,a} whose only lower corner is at
// n+1-j (depth m); g^0 is the lowest path.
inline Path g_path(int j, int a, int m, int n) {
    check_node(j, n);
    if (m < 0 || m > std::min(j, n + 1 - j))
        throw error("g_path: m out of range [0," +
                    std::to_string(std::min(j, n + 1 - j)) + "]");
    if (m == 0) return lowest_path(j, a, n);
    if (2 * j <= n + 1)
        return detail::path_through(
            n, j, a,
            {{j - m, a + m}, {n + 1 - j, a + n + 1 - 2 * j + 2 * m}, {n + 1 - j + m, a + n + 1 - 2 * j + m}});
    return detail::path_through(
        n, j, a,
        {{n + 1 - j - m, a - n - 1 + 2 * j + m}, {n + 1 - j, a - n - 1 + 2 * j + 2 * m}, {j + m, a + m}});
}

// p^m_{j,a}: the unique path in P_{j,a} whose only lower corner is at j.
inline Path p_path(int j, int a, int m, int n) {
    check_node(j, n);
    if (m < 0 || m > std::min(j, n + 1 - j))
        throw error("p_path: m out of range [0," +
                    std::to_string(std::min(j, n + 1 - j)) + "]");
    if (m == 0) return lowest_path(j, a, n);
    return detail::path_through(n, j, a, {{j - m, a + m}, {j, a + 2 * m}, {j + m, a + m}});
}

inline bool strictly_below(const Path& p, const Path& q) {
    if (p.rank() != q.rank()) throw error("rank mismatch: path comparison");
    for (int r = 0; r <= p.rank() + 1; ++r)
        if (p(r) >= q(r)) return false;
    return true;
}

// dominates(p,q) <=> q >= p pointwise <=> omega(p) in omega(q) Q+.
inline bool dominates(const Path& p, const Path& q) {
    if (!p.same_family(q)) throw error("mismatched path families");
    for (int r = 0; r <= p.rank() + 1; ++r)
        if (q(r) < p(r)) return false;
    return true;
}

// Factors of a prime snake sorted by shift, or nullopt. A dominant
// monomial is a prime snake when consecutive factors (sorted by shift)
// satisfy a_p - a_{p-1} in S_{i_p, i_{p-1}, n}; gaps of 0 never qualify.
inline std::optional<std::vector<Generator>> snake_factors(const LWeight& x) {
    if (!x.is_dominant()) return std::nullopt;
    std::vector<Generator> f = x.factor_multiset();
    for (std::size_t p = 1; p < f.size(); ++p) {
        const int gap = f[p].shift - f[p - 1].shift;
        if (gap <= 0) return std::nullopt;
        if (!s_mrn(f[p].node, f[p - 1].node, x.rank()).count(gap)) return std::nullopt;
    }
    return f;
}

using PathTuple = std::vector<Path>;

// All strictly non-crossing tuples over the path families of a prime
// snake, depth-first with the pointwise-above pruning bound; the result
// order is deterministic (lexicographic per position).
inline std::vector<PathTuple> enumerate_tuples(const LWeight& omega) {
    auto factors = snake_factors(omega);
    if (!factors) throw error("not a prime snake: " + omega.str());
    const int n = omega.rank();

    std::vector<std::vector<Path>> families;
    for (const auto& g : *factors) families.push_back(enumerate_paths(g.node, g.shift, n));

    std::vector<PathTuple> out;
    PathTuple cur;
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == families.size()) {
            out.push_back(cur);
            return;
        }
        for (const Path& p : families[k]) {
            if (!cur.empty() && !strictly_below(cur.back(), p)) continue;
            cur.push_back(p);
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline LWeight tuple_monomial(const PathTuple& t, int n) {
    LWeight x = LWeight::identity(n);
    for (const Path& p : t) x = x * path_monomial(p);
    return x;
}

}  // namespace snakelab
