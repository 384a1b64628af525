#pragma once

// (i,n)-segments: strictly increasing integer tuples whose consecutive
// gaps lie in S_{i,n}. Segments index the higher-order KR modules; two of
// them are in special position exactly when their union supports a longer
// segment, and that is where tensor products become reducible.

#include <optional>
#include <set>

#include "snakelab/lweight.hpp"

namespace snakelab {

using Segment = std::vector<int>;

// S_{m,r,n} = {2p+2-m-r : max(m,r) <= p <= min(m+r-1, n)}
inline std::set<int> s_mrn(int m, int r, int n) {
    check_node(m, n);
    check_node(r, n);
    std::set<int> out;
    for (int p = std::max(m, r); p <= std::min(m + r - 1, n); ++p) out.insert(2 * p + 2 - m - r);
    return out;
}

// S_{i,n} = {2j : 1 <= j <= min(i, n+1-i)} = S_{i,i,n}
inline std::set<int> s_set(int i, int n) {
    check_node(i, n);
    std::set<int> out;
    for (int j = 1; j <= std::min(i, n + 1 - i); ++j) out.insert(2 * j);
    return out;
}

struct SegmentContext {
    int i = 1;
    int n = 1;
    SegmentContext(int i_, int n_) : i(i_), n(n_) { check_node(i, n); }

    int gap_bound() const { return 2 * std::min(i, n + 1 - i); }
    bool gap_ok(int g) const { return g >= 2 && g % 2 == 0 && g <= gap_bound(); }
    SegmentContext dual() const { return {n + 1 - i, n}; }
};

inline bool is_segment(const SegmentContext& ctx, const Segment& a) {
    if (a.empty()) return false;
    for (std::size_t p = 1; p < a.size(); ++p)
        if (!ctx.gap_ok(a[p] - a[p - 1])) return false;
    return true;
}

inline void require_segment(const SegmentContext& ctx, const Segment& a, const char* which) {
    if (!is_segment(ctx, a)) {
        std::string s = "invalid segment";
        s += " (";
        s += which;
        s += ") for (i,n)=(" + std::to_string(ctx.i) + "," + std::to_string(ctx.n) + ")";
        throw error(s);
    }
}

// a* = a + (n+1) entrywise, an (n+1-i,n)-segment.
inline Segment star(const SegmentContext& ctx, const Segment& a) {
    require_segment(ctx, a, "star");
    Segment out = a;
    for (int& v : out) v += ctx.n + 1;
    return out;
}

inline Segment left_star(const SegmentContext& ctx, const Segment& a) {
    require_segment(ctx, a, "left_star");
    Segment out = a;
    for (int& v : out) v -= ctx.n + 1;
    return out;
}

// omega_{i,a_1}...omega_{i,a_r} as an l-weight.
inline LWeight segment_lweight(const SegmentContext& ctx, const Segment& a) {
    LWeight x = LWeight::identity(ctx.n);
    for (int v : a) x = x * LWeight::generator(ctx.n, ctx.i, v);
    return x;
}

// Longest (i,n)-segment using values from the given set; used both for
// special-position evidence and by the factorization step when anchored
// at the minimum.
inline Segment longest_segment_in(const SegmentContext& ctx, const std::set<int>& values,
                                  std::optional<int> anchor_start = std::nullopt) {
    std::vector<int> v(values.begin(), values.end());
    const int t = static_cast<int>(v.size());
    std::vector<int> len(static_cast<std::size_t>(t), 1), nxt(static_cast<std::size_t>(t), -1);
    for (int j = t - 1; j >= 0; --j) {
        for (int k = j + 1; k < t; ++k) {
            if (!ctx.gap_ok(v[static_cast<std::size_t>(k)] - v[static_cast<std::size_t>(j)]))
                continue;
            // prefer longer chains, then the smallest next value
            if (len[static_cast<std::size_t>(k)] + 1 > len[static_cast<std::size_t>(j)]) {
                len[static_cast<std::size_t>(j)] = len[static_cast<std::size_t>(k)] + 1;
                nxt[static_cast<std::size_t>(j)] = k;
            }
        }
    }
    int best = -1;
    for (int j = 0; j < t; ++j) {
        if (anchor_start && v[static_cast<std::size_t>(j)] != *anchor_start) continue;
        if (best == -1 || len[static_cast<std::size_t>(j)] > len[static_cast<std::size_t>(best)])
            best = j;
    }
    Segment out;
    for (int j = best; j != -1; j = nxt[static_cast<std::size_t>(j)])
        out.push_back(v[static_cast<std::size_t>(j)]);
    return out;
}

enum class Position { General, Special };

struct PositionVerdict {
    Position kind = Position::General;
    // For General: which clause of the criterion fired ("gap-right",
    // "gap-left", "parity", "containment"). For Special: a witnessing
    // longer segment inside the union.
    std::string clause;
    Segment evidence;

    bool general() const { return kind == Position::General; }
};

// Criterion for general position: with len(a) >= len(b), either
//   (a) b_1 - a_r > 2 min(i,n+1-i), or a_1 - b_m > 2 min(i,n+1-i),
//       or b_1 - a_1 odd, or
//   (b) set(b) subset of set(a).
inline PositionVerdict position(const SegmentContext& ctx, const Segment& a0, const Segment& b0) {
    require_segment(ctx, a0, "A");
    require_segment(ctx, b0, "B");
    const Segment& a = a0.size() >= b0.size() ? a0 : b0;
    const Segment& b = a0.size() >= b0.size() ? b0 : a0;

    PositionVerdict v;
    if ((b.front() - a.front()) % 2 != 0) {
        v.clause = "parity";
        return v;
    }
    if (b.front() - a.back() > ctx.gap_bound()) {
        v.clause = "gap-right";
        return v;
    }
    if (a.front() - b.back() > ctx.gap_bound()) {
        v.clause = "gap-left";
        return v;
    }
    if (std::includes(a.begin(), a.end(), b.begin(), b.end())) {
        v.clause = "containment";
        return v;
    }

    v.kind = Position::Special;
    std::set<int> un(a.begin(), a.end());
    un.insert(b.begin(), b.end());
    v.evidence = longest_segment_in(ctx, un);
    if (v.evidence.size() <= std::max(a.size(), b.size()))
        throw error("internal: special verdict without longer segment in the union");
    return v;
}

// Unique factorization of an integer multiset into segments in pairwise
// general position: repeatedly strip a maximal segment anchored at the
// minimum of what remains. Output sorted by (min, length desc, lex).
inline std::vector<Segment> factorize(const SegmentContext& ctx, std::vector<int> values) {
    std::multiset<int> pool(values.begin(), values.end());
    std::vector<Segment> out;
    while (!pool.empty()) {
        std::set<int> distinct(pool.begin(), pool.end());
        Segment seg = longest_segment_in(ctx, distinct, *distinct.begin());
        for (int x : seg) pool.erase(pool.find(x));
        out.push_back(std::move(seg));
    }
    std::sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
        if (x.front() != y.front()) return x.front() < y.front();
        if (x.size() != y.size()) return x.size() > y.size();
        return x < y;
    });
    return out;
}

// Extended T-system overlap data (Lemma "tsys" shape): runs
// a_j..a_{j+p} and b_m..b_{m+p} that interlock so that inserting one
// element of b into a yields a segment one longer. Indices are 1-based
// relative to the scanned pair; `swapped` records that the roles of the
// inputs were exchanged to get len(A) >= len(B).
struct OverlapPattern {
    int j = 1;
    int m = 1;
    int p = 0;
    // 1: the tail b_{m+p} is the new element (a_{j+k} = b_{m+k-1});
    // 2: the head b_m is the new element (a_{j+k-1} = b_{m+k}).
    int orientation = 1;
    bool swapped = false;
    Segment merged;  // the longer segment witnessing special position
};

namespace detail {

inline bool minmax_ok(const Segment& a, const Segment& b, int j, int m, int p) {
    // paper convention: entries beyond the ends are -inf / +inf
    auto at = [](const Segment& s, int q) -> long long {
        if (q < 1) return std::numeric_limits<long long>::min() / 2;
        if (q > static_cast<int>(s.size())) return std::numeric_limits<long long>::max() / 2;
        return s[static_cast<std::size_t>(q - 1)];
    };
    long long lo = std::max(at(a, j - 1), at(b, m - 1));
    long long hi = std::min(at(a, j + p + 1), at(b, m + p + 1));
    return lo < std::min(at(a, j), at(b, m)) && hi > std::max(at(a, j + p), at(b, m + p));
}

inline std::optional<Segment> merged_if_valid(const SegmentContext& ctx, const Segment& a,
                                              int insert_value, int after_index) {
    Segment merged;
    merged.reserve(a.size() + 1);
    for (int q = 1; q <= after_index; ++q) merged.push_back(a[static_cast<std::size_t>(q - 1)]);
    merged.push_back(insert_value);
    for (int q = after_index + 1; q <= static_cast<int>(a.size()); ++q)
        merged.push_back(a[static_cast<std::size_t>(q - 1)]);
    if (!std::is_sorted(merged.begin(), merged.end()) ||
        std::adjacent_find(merged.begin(), merged.end()) != merged.end())
        return std::nullopt;
    if (!is_segment(ctx, merged)) return std::nullopt;
    return merged;
}

}  // namespace detail

// Scans (j,m,p) lexicographically and returns the first pattern that
// satisfies the min/max window, the equality chain, and whose insertion
// really produces a longer segment.
inline std::optional<OverlapPattern> tsys_overlap(const SegmentContext& ctx, const Segment& a0,
                                                  const Segment& b0) {
    require_segment(ctx, a0, "A");
    require_segment(ctx, b0, "B");
    const bool swapped = a0.size() < b0.size();
    const Segment& a = swapped ? b0 : a0;
    const Segment& b = swapped ? a0 : b0;
    if ((b.front() - a.front()) % 2 != 0) return std::nullopt;

    const int r = static_cast<int>(a.size());
    const int s = static_cast<int>(b.size());
    auto av = [&](int q) { return a[static_cast<std::size_t>(q - 1)]; };
    auto bv = [&](int q) { return b[static_cast<std::size_t>(q - 1)]; };

    for (int j = 1; j <= r; ++j) {
        for (int m = 1; m <= s; ++m) {
            const int pmax = std::min(r - j, s - m);
            for (int p = 0; p <= pmax; ++p) {
                if (!detail::minmax_ok(a, b, j, m, p)) continue;
                bool tail_new = true, head_new = true;
                for (int k = 1; k <= p; ++k) {
                    if (av(j + k) != bv(m + k - 1)) tail_new = false;
                    if (av(j + k - 1) != bv(m + k)) head_new = false;
                }
                if (tail_new) {
                    if (auto merged = detail::merged_if_valid(ctx, a, bv(m + p), j + p)) {
                        OverlapPattern pat{j, m, p, 1, swapped, *merged};
                        return pat;
                    }
                }
                if (head_new && p > 0) {
                    if (auto merged = detail::merged_if_valid(ctx, a, bv(m), j - 1)) {
                        OverlapPattern pat{j, m, p, 2, swapped, *merged};
                        return pat;
                    }
                }
                if (p == 0) {
                    // degenerate run: try inserting before a_j as well
                    if (auto merged = detail::merged_if_valid(ctx, a, bv(m), j - 1)) {
                        OverlapPattern pat{j, m, 0, 2, swapped, *merged};
                        return pat;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace snakelab
