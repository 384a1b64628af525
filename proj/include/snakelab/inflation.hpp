#pragma once

// Rank inflation: for n+1 = i(ibar+1) the generator map
// Phi(Y[j,a]) = Y[ij,ia] embeds the rank-ibar combinatorics into rank n.
// This header carries the lattice maps, path inflation/deflation, the
// H-subgroup membership tests, the distinguished monomials of the
// inflated categories, and the verification routines for the inflation
// propositions.

#include "snakelab/qcharacter.hpp"

namespace snakelab {

struct InflationTriple {
    int ibar = 1;
    int i = 1;
    int n = 1;

    InflationTriple(int ibar_, int i_, int n_) : ibar(ibar_), i(i_), n(n_) {
        check_rank(ibar);
        check_rank(n);
        if (i < 1 || n + 1 != i * (ibar + 1))
            throw error("invalid inflation triple: need n+1 = i(ibar+1), got (" +
                        std::to_string(ibar) + "," + std::to_string(i) + "," + std::to_string(n) +
                        ")");
    }

    // I_{ibar,n} = {i, 2i, ..., i*ibar}
    std::vector<int> index_set() const {
        std::vector<int> out;
        for (int j = 1; j <= ibar; ++j) out.push_back(i * j);
        return out;
    }
    bool in_index_set(int j) const { return j >= i && j <= i * ibar && j % i == 0; }
};

inline LWeight phi(const InflationTriple& t, const LWeight& x) {
    if (x.rank() != t.ibar) throw error("rank mismatch: phi expects rank " + std::to_string(t.ibar));
    LWeight out = LWeight::identity(t.n);
    for (const auto& f : x.factors())
        out = out * LWeight::generator(t.n, t.i * f.node, t.i * f.shift, f.exp);
    return out;
}

// Preimage under phi when every generator is of the form Y[ij, ia].
inline std::optional<LWeight> phi_preimage(const InflationTriple& t, const LWeight& x) {
    if (x.rank() != t.n) return std::nullopt;
    LWeight out = LWeight::identity(t.ibar);
    for (const auto& f : x.factors()) {
        if (f.node % t.i != 0 || f.shift % t.i != 0) return std::nullopt;
        const int j = f.node / t.i;
        if (j < 1 || j > t.ibar) return std::nullopt;
        out = out * LWeight::generator(t.ibar, j, f.shift / t.i, f.exp);
    }
    return out;
}

inline bool in_phi_image(const InflationTriple& t, const LWeight& x) {
    return phi_preimage(t, x).has_value();
}

inline Weight phi_weight(const InflationTriple& t, const Weight& w) {
    if (w.rank != t.ibar) throw error("rank mismatch: phi_weight");
    Weight out(t.n);
    for (int j = 1; j <= t.ibar; ++j) out.coeffs[static_cast<std::size_t>(t.i * j - 1)] = w[j];
    return out;
}

// phi(alpha_j) = sum_{p=1}^{i} sum_{s=p-i}^{i-p} alpha_{ij+s}
inline Weight phi_classical_root(const InflationTriple& t, int j) {
    check_node(j, t.ibar);
    Weight out(t.n);
    for (int p = 1; p <= t.i; ++p)
        for (int s = p - t.i; s <= t.i - p; ++s)
            out = out + Weight::simple_root(t.n, t.i * j + s);
    return out;
}

inline LWeight phi_root(const InflationTriple& t, int j, int a) {
    return phi(t, simple_affine_root(t.ibar, j, a));
}

// Product formula for Phi(alpha_{j,a}); the double product over k covers
// the off-diagonal nodes, the last product the node ij itself.
inline LWeight phi_root_formula(const InflationTriple& t, int j, int a) {
    check_node(j, t.ibar);
    const int i = t.i, n = t.n;
    LWeight out = LWeight::identity(n);
    for (int k = 1; k <= i - 1; ++k) {
        for (int p = 1; p <= k; ++p) {
            const int shift = i * a + 1 - k + 2 * p - 2;
            out = out * simple_affine_root(n, i * (j - 1) + k, shift);
            out = out * simple_affine_root(n, i * (j + 1) - k, shift);
        }
    }
    for (int p = 1; p <= i; ++p) out = out * simple_affine_root(n, i * j, i * a + 1 - i + 2 * p - 2);
    return out;
}

inline bool verify_phi_root(const InflationTriple& t, int j, int a) {
    return phi_root(t, j, a) == phi_root_formula(t, j, a);
}

// Phi on paths: P_{k,a} of rank ibar -> P_{ik,ia} of rank n, stretching
// each step of p into i unit steps in the same direction.
inline Path inflate_path(const InflationTriple& t, const Path& p) {
    if (p.rank() != t.ibar) throw error("rank mismatch: inflate_path");
    std::vector<int> v(static_cast<std::size_t>(t.n) + 2, 0);
    for (int r = 0; r <= t.n + 1; ++r) {
        const int j = r / t.i, jp = r % t.i;
        if (jp == 0) {
            v[static_cast<std::size_t>(r)] = t.i * p(j);
        } else {
            const bool up = p(j + 1) - p(j) == 1;
            v[static_cast<std::size_t>(r)] = t.i * p(j) + (up ? jp : -jp);
        }
    }
    return Path(t.n, t.i * p.node(), t.i * p.shift(), std::move(v));
}

// Inverse on the image: defined when all corners and endpoints sit at
// positions and heights divisible by i, equivalently omega(g) lies in the
// image of Phi.
inline std::optional<Path> deflate_path(const InflationTriple& t, const Path& g) {
    if (g.rank() != t.n) return std::nullopt;
    if (g.node() % t.i != 0 || g.shift() % t.i != 0) return std::nullopt;
    CornerData c = corners(g);
    auto aligned = [&](int r) { return r % t.i == 0 && g(r) % t.i == 0; };
    for (int r : c.plus)
        if (!aligned(r)) return std::nullopt;
    for (int r : c.minus)
        if (!aligned(r)) return std::nullopt;

    std::vector<int> v;
    for (int r = 0; r <= t.ibar + 1; ++r) {
        if (g(t.i * r) % t.i != 0) return std::nullopt;
        v.push_back(g(t.i * r) / t.i);
    }
    for (std::size_t r = 0; r + 1 < v.size(); ++r)
        if (std::abs(v[r + 1] - v[r]) != 1) return std::nullopt;
    return Path(t.ibar, g.node() / t.i, g.shift() / t.i, std::move(v));
}

// H_{ibar,n}: generated by Y[ij, ia] with j in [1,ibar], j-a even, a <= 0.
inline bool in_H(const InflationTriple& t, const LWeight& x) {
    if (x.rank() != t.n) return false;
    for (const auto& f : x.factors()) {
        if (f.node % t.i != 0 || f.shift % t.i != 0) return false;
        const int j = f.node / t.i, a = f.shift / t.i;
        if (j < 1 || j > t.ibar) return false;
        if ((j - a) % 2 != 0 || a > 0) return false;
    }
    return true;
}

// H^1: the generators additionally satisfy a >= -3.
inline bool in_H1(const InflationTriple& t, const LWeight& x) {
    if (!in_H(t, x)) return false;
    for (const auto& f : x.factors())
        if (f.shift / t.i < -3) return false;
    return true;
}

inline int epsilon(const InflationTriple& t, int j) {
    if (!t.in_index_set(j))
        throw error("index not in I_{ibar,n}: j = " + std::to_string(j));
    return (j / t.i) % 2 == 0 ? 0 : -t.i;
}

// f_j = Y[j, 3 eps_j] Y[j, -eps_j - 2i]
inline LWeight f_weight(const InflationTriple& t, int j) {
    const int e = epsilon(t, j);
    return LWeight::generator(t.n, j, 3 * e) * LWeight::generator(t.n, j, -e - 2 * t.i);
}

// omega(j,k) = Y[j,3eps_j] Y[j+i,3eps_{j+i}] ... Y[k,3eps_k]; 1 for j > k.
inline LWeight interval_weight(const InflationTriple& t, int j, int k) {
    if (j > k) {
        if (!t.in_index_set(j - t.i) && j - t.i != 0) throw error("index not in I_{ibar,n}");
        return LWeight::identity(t.n);
    }
    LWeight out = LWeight::identity(t.n);
    for (int l = j; l <= k; l += t.i) out = out * LWeight::generator(t.n, l, 3 * epsilon(t, l));
    return out;
}

// wt_l correspondence for prime snakes: the monomials of chi(V(Phi(w)))
// lying in the image of Phi are exactly the Phi-images of the monomials
// of chi(V(w)).
inline bool verify_inflpaths(const InflationTriple& t, const PrimeSnake& w) {
    if (w.rank() != t.ibar) throw error("rank mismatch: verify_inflpaths");
    const Character small = snake_char(w);
    const Character big = snake_char(PrimeSnake(phi(t, w.lweight())));

    std::set<LWeight> inflated;
    for (const auto& [m, mult] : small.terms()) inflated.insert(phi(t, m));
    std::set<LWeight> image_terms;
    for (const auto& [m, mult] : big.terms())
        if (in_phi_image(t, m)) image_terms.insert(m);
    return inflated == image_terms;
}

// Grothendieck-ring identity of Prop. indstep(i):
// [V(Y[p,3e])][V(Y[p,-2i-e])] = [V(f_p)] + [V(Y[p-i,e-i])][V(Y[p+i,e-i])]
inline bool verify_indstep_i(const InflationTriple& t, int p) {
    const int e = epsilon(t, p);
    const int n = t.n;
    auto cls = [&](int node, int shift) { return PrimeSnake(LWeight::generator(n, node, shift)); };

    RingExpression lhs = RingExpression::product(n, {cls(p, 3 * e), cls(p, -2 * t.i - e)});
    RingExpression rhs = RingExpression::product(n, {PrimeSnake(f_weight(t, p))});
    rhs.add({cls(p - t.i, e - t.i), cls(p + t.i, e - t.i)});
    return verify_identity(lhs, rhs);
}

// Parts (ii)/(iii) involve classes like f_{j+i} omega(j+2i,k) that leave
// the snake class once omega(j,k) has three or more factors; they are
// attempted only when every class is certifiable.
struct IndstepResult {
    bool attempted = false;
    bool verified = false;
    std::string reason;
};

namespace detail {

inline std::optional<std::vector<PrimeSnake>> try_certify(const LWeight& x) {
    try {
        return certified_prime_factors(x);
    } catch (const error&) {
        return std::nullopt;
    }
}

}  // namespace detail

inline IndstepResult verify_indstep_ii(const InflationTriple& t, int j, int k) {
    const int i = t.i, n = t.n;
    const int e = epsilon(t, j);
    std::vector<std::pair<const char*, LWeight>> classes = {
        {"Y[j,-2i-eps]", LWeight::generator(n, j, -2 * i - e)},
        {"omega(j,k)", interval_weight(t, j, k)},
        {"f_j", f_weight(t, j)},
        {"omega(j+i,k)", interval_weight(t, j + i, k)},
        {"Y[j-i,eps-i]", LWeight::generator(n, j - i, e - i)},
        {"f_{j+i} omega(j+2i,k)", f_weight(t, j + i) * interval_weight(t, j + 2 * i, k)},
    };
    std::vector<std::vector<PrimeSnake>> certified;
    for (const auto& [name, x] : classes) {
        auto c = detail::try_certify(x);
        if (!c) return {false, false, std::string("skipped: non-snake class ") + name};
        certified.push_back(std::move(*c));
    }
    RingExpression lhs = RingExpression::product(n, {});
    for (auto& s : certified[0]) lhs.terms[0].classes.push_back(s);
    for (auto& s : certified[1]) lhs.terms[0].classes.push_back(s);
    RingExpression rhs = RingExpression::product(n, {});
    for (auto& s : certified[2]) rhs.terms[0].classes.push_back(s);
    for (auto& s : certified[3]) rhs.terms[0].classes.push_back(s);
    rhs.add({});
    for (auto& s : certified[4]) rhs.terms[1].classes.push_back(s);
    for (auto& s : certified[5]) rhs.terms[1].classes.push_back(s);
    return {true, verify_identity(lhs, rhs), ""};
}

inline IndstepResult verify_indstep_iii(const InflationTriple& t, int j, int k) {
    const int i = t.i, n = t.n;
    const int e = epsilon(t, j);
    const int ejpi = j + i <= i * t.ibar ? epsilon(t, j + i) : 0;
    std::vector<std::pair<const char*, LWeight>> classes = {
        {"Y[j,3eps]", LWeight::generator(n, j, 3 * e)},
        {"omega(j+i,k)", interval_weight(t, j + i, k)},
        {"omega(j,k)", interval_weight(t, j, k)},
        {"Y[j-i,eps_j-i]", LWeight::generator(n, j - i, e - i)},
    };
    // [V(pi)] tail factor depends on whether k = j+i
    if (k == j + i) {
        classes.push_back({"Y[j+2i,eps_{j+i}-i]", LWeight::generator(n, j + 2 * i, ejpi - i)});
    } else {
        classes.push_back(
            {"f_{j+2i} omega(j+3i,k)", f_weight(t, j + 2 * i) * interval_weight(t, j + 3 * i, k)});
    }
    std::vector<std::vector<PrimeSnake>> certified;
    for (const auto& [name, x] : classes) {
        auto c = detail::try_certify(x);
        if (!c) return {false, false, std::string("skipped: non-snake class ") + name};
        certified.push_back(std::move(*c));
    }
    RingExpression lhs = RingExpression::product(n, {});
    for (auto& s : certified[0]) lhs.terms[0].classes.push_back(s);
    for (auto& s : certified[1]) lhs.terms[0].classes.push_back(s);
    RingExpression rhs = RingExpression::product(n, {});
    for (auto& s : certified[2]) rhs.terms[0].classes.push_back(s);
    rhs.add({});
    for (auto& s : certified[3]) rhs.terms[1].classes.push_back(s);
    for (auto& s : certified[4]) rhs.terms[1].classes.push_back(s);
    return {true, verify_identity(lhs, rhs), ""};
}

// The distinguished prime monomials of the inflated level-one category.
struct PRElement {
    enum class Kind { F, Interval, Single } kind;
    int j = 0;
    int k = 0;  // Interval only

    static PRElement f(const InflationTriple& t, int j) {
        if (!t.in_index_set(j)) throw error("PR element: index not in I");
        return {Kind::F, j, j};
    }
    static PRElement interval(const InflationTriple& t, int j, int k) {
        if (!t.in_index_set(j) || !t.in_index_set(k) || j > k)
            throw error("PR element: bad interval");
        return {Kind::Interval, j, k};
    }
    static PRElement single(const InflationTriple& t, int m) {
        if (!t.in_index_set(m)) throw error("PR element: index not in I");
        return {Kind::Single, m, m};
    }

    LWeight lweight(const InflationTriple& t) const {
        switch (kind) {
            case Kind::F: return f_weight(t, j);
            case Kind::Interval: return interval_weight(t, j, k);
            default: return LWeight::generator(t.n, j, -2 * t.i - epsilon(t, j));
        }
    }
};

inline std::vector<PRElement> pr_elements(const InflationTriple& t) {
    std::vector<PRElement> out;
    for (int j : t.index_set()) out.push_back(PRElement::f(t, j));
    for (int j : t.index_set())
        for (int k = j; k <= t.i * t.ibar; k += t.i) out.push_back(PRElement::interval(t, j, k));
    for (int m : t.index_set()) out.push_back(PRElement::single(t, m));
    return out;
}

// Sufficient irreducibility test for [V(pi1)][V(pi2)] = [V(pi1 pi2)] on
// PR elements: clause (i) f_j against anything, clause (ii) interval vs
// interval, clause (iii) the short singles.
inline bool irredcrit_predicate(const InflationTriple& t, const PRElement& p1,
                                const PRElement& p2) {
    using K = PRElement::Kind;
    if (p1.kind == K::F) return true;
    if (p1.kind == K::Interval && p2.kind == K::Interval) {
        const int j = p1.j, k = p1.k, m = p2.j, r = p2.k;
        if (m == k + t.i) return false;
        if (j == m) return true;
        if (k <= m) return true;
        if (k == r) return true;
        if (j < m && m < k && k < r && epsilon(t, k - m + t.i * 0) == 0) {
            // eps_{k-m}: k-m is a positive multiple of i inside the index range
            if (t.in_index_set(k - m) && epsilon(t, k - m) == 0) return true;
        }
        if (j < m && m < r && r < k && t.in_index_set(r - m) && epsilon(t, r - m) == -t.i)
            return true;
        return false;
    }
    if (p1.kind == K::Single) {
        if (p2.kind == K::Single) return true;
        if (p2.kind == K::Interval) return p1.j < p2.j || p1.j > p2.k;
    }
    return false;
}

// Prop. lweights2: for w in H+_{ibar,ibar}, any factored monomial of
// chi(W(Phi(w))) that lands in H_{ibar,n} or P_n^+ has every path factor
// in the image of Phi.
inline bool weyl_monomial_factor_check(const InflationTriple& t, const LWeight& w) {
    if (w.rank() != t.ibar) throw error("rank mismatch: weyl_monomial_factor_check");
    if (!w.is_dominant()) throw error("weyl_monomial_factor_check requires dominant input");
    InflationTriple self(t.ibar, 1, t.ibar);
    if (!in_H(self, w)) throw error("input not in H+_{ibar,ibar}");

    const auto factors = w.factor_multiset();
    std::vector<std::vector<LWeight>> monomials;  // per-factor path monomials
    for (const auto& g : factors) {
        std::vector<LWeight> ms;
        for (const Path& p : enumerate_paths(t.i * g.node, t.i * g.shift, t.n))
            ms.push_back(path_monomial(p));
        monomials.push_back(std::move(ms));
    }

    bool ok = true;
    std::vector<std::size_t> idx(monomials.size(), 0);
    auto rec = [&](auto&& self_, std::size_t level, const LWeight& acc) -> void {
        if (!ok) return;
        if (level == monomials.size()) {
            if (in_H(t, acc) || acc.is_dominant()) {
                for (std::size_t l = 0; l < monomials.size(); ++l)
                    if (!in_phi_image(t, monomials[l][idx[l]])) {
                        ok = false;
                        return;
                    }
            }
            return;
        }
        for (std::size_t x = 0; x < monomials[level].size(); ++x) {
            idx[level] = x;
            self_(self_, level + 1, acc * monomials[level][x]);
        }
    };
    rec(rec, 0, LWeight::identity(t.n));
    return ok;
}

}  // namespace snakelab
