#pragma once

// q-characters of prime snake modules via the path model, Weyl-module
// characters as products of fundamentals, and identity checking in the
// Grothendieck ring. Characters of non-snake simples are never computed;
// operations that would need one refuse loudly.

#include "snakelab/character.hpp"
#include "snakelab/paths.hpp"

namespace snakelab {

// A dominant monomial whose sorted factors have gaps in the S-sets. The
// simple module it labels has a multiplicity-free path-model character.
class PrimeSnake {
  public:
    PrimeSnake(int n, std::vector<Generator> factors) : rank_(n) {
        LWeight x = LWeight::identity(n);
        for (const auto& g : factors) x = x * LWeight::generator(n, g.node, g.shift);
        init(x);
    }
    explicit PrimeSnake(const LWeight& x) : rank_(x.rank()) { init(x); }

    int rank() const { return rank_; }
    const std::vector<Generator>& factors() const { return factors_; }
    const LWeight& lweight() const { return lweight_; }
    bool trivial() const { return factors_.empty(); }
    std::size_t length() const { return factors_.size(); }

    PrimeSnake left_dual_star() const { return PrimeSnake(lweight_.left_dual_star()); }
    PrimeSnake dual_star() const { return PrimeSnake(lweight_.dual_star()); }

    friend auto operator<=>(const PrimeSnake& x, const PrimeSnake& y) {
        return x.lweight_ <=> y.lweight_;
    }
    friend bool operator==(const PrimeSnake&, const PrimeSnake&) = default;

  private:
    void init(const LWeight& x) {
        auto f = snake_factors(x);
        if (!f) throw error("not a prime snake: " + x.str());
        factors_ = *f;
        lweight_ = x;
    }

    int rank_;
    std::vector<Generator> factors_;
    LWeight lweight_;
};

inline bool is_prime_snake(const LWeight& x) { return snake_factors(x).has_value(); }

// chi(V(omega)) for a prime snake: multiplicity-1 monomials of the
// non-crossing path tuples. Memoized; chars recur constantly in the
// identity checks.
inline Character snake_char(const PrimeSnake& s) {
    static std::map<LWeight, Character> memo;
    if (s.trivial()) return Character::one(s.rank());
    if (auto it = memo.find(s.lweight()); it != memo.end()) return it->second;

    Character chi(s.rank());
    for (const auto& t : enumerate_tuples(s.lweight())) chi.add_term(tuple_monomial(t, s.rank()), 1);
    memo.emplace(s.lweight(), chi);
    return chi;
}

inline Character snake_char(const LWeight& omega) { return snake_char(PrimeSnake(omega)); }

inline Character fundamental_char(int n, int i, int a) {
    return snake_char(PrimeSnake(LWeight::generator(n, i, a)));
}

// chi(W(omega)) = prod of fundamental characters over the factors.
inline Character weyl_char(const LWeight& omega) {
    if (!omega.is_dominant()) throw error("weyl_char requires a dominant monomial");
    Character chi = Character::one(omega.rank());
    for (const auto& g : omega.factor_multiset())
        chi = chi * fundamental_char(omega.rank(), g.node, g.shift);
    return chi;
}

// Signed sum of products of prime snake classes.
struct RingExpression {
    struct Term {
        long long coeff = 1;
        std::vector<PrimeSnake> classes;
    };
    int rank = 1;
    std::vector<Term> terms;

    static RingExpression product(int n, std::vector<PrimeSnake> classes, long long c = 1) {
        RingExpression e;
        e.rank = n;
        e.terms.push_back({c, std::move(classes)});
        return e;
    }

    RingExpression& add(std::vector<PrimeSnake> classes, long long c = 1) {
        terms.push_back({c, std::move(classes)});
        return *this;
    }

    Character expand() const {
        Character total(rank);
        for (const auto& t : terms) {
            Character prod = Character::one(rank);
            for (const auto& s : t.classes) prod = prod * snake_char(s);
            total = total + prod * t.coeff;
        }
        return total;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms) {
            if (!first) os << " + ";
            first = false;
            if (t.coeff != 1) os << t.coeff << "·";
            for (const auto& s : t.classes) os << "[V(" << s.lweight().str() << ")]";
            if (t.classes.empty()) os << "1";
        }
        return os.str();
    }
};

// Injectivity of the q-character homomorphism turns character equality
// into an identity certificate in the Grothendieck ring.
inline bool verify_identity(const RingExpression& lhs, const RingExpression& rhs) {
    if (lhs.rank != rhs.rank) throw error("rank mismatch: ring identity");
    return lhs.expand() == rhs.expand();
}

// Certified factorization of the class [V(x)] into prime snake classes.
// Either x is itself a prime snake, or it is concentrated at one node and
// the unique factorization theorem applies, or its fundamental factors
// pass the both-ways highest-weight criterion so the tensor product of
// fundamentals is irreducible. Anything else is refused: no uncertified
// characters.
inline bool hw_order_admissible(const std::vector<Generator>& list, int n);
inline bool hw_irreducible(const std::vector<Generator>& list, int n);

inline std::vector<PrimeSnake> certified_prime_factors(const LWeight& x) {
    const int n = x.rank();
    if (x.is_identity()) return {};
    if (is_prime_snake(x)) return {PrimeSnake(x)};
    if (!x.is_dominant()) throw error("simple class label must be dominant: " + x.str());

    const auto factors = x.factor_multiset();
    const bool one_node = std::all_of(factors.begin(), factors.end(),
                                      [&](const Generator& g) { return g.node == factors[0].node; });
    if (one_node) {
        SegmentContext ctx(factors[0].node, n);
        Segment values;
        for (const auto& g : factors) values.push_back(g.shift);
        std::vector<PrimeSnake> out;
        for (const Segment& part : factorize(ctx, values))
            out.emplace_back(segment_lweight(ctx, part));
        return out;
    }
    if (hw_irreducible(factors, n)) {
        std::vector<PrimeSnake> out;
        for (const auto& g : factors) out.emplace_back(LWeight::generator(n, g.node, g.shift));
        return out;
    }
    throw error("cannot certify a prime factorization of V(" + x.str() + ")");
}

// Extended T-system (overlapping prime snakes of equal length k):
//   [V(w)][V(w')] = [V(w Y[jk,bk])][V(w' Y[jk,bk]^-1)] + [V(w+)][V(w-)]
// with w'_s = w_{s+1} for s < k and the appended factor adjacent to the
// last factor of w.
struct TSystem {
    RingExpression lhs, rhs;
    LWeight omega_plus, omega_minus;
};

inline TSystem ext_tsystem(const PrimeSnake& w, const PrimeSnake& wp) {
    const int n = w.rank();
    if (wp.rank() != n) throw error("rank mismatch: T-system");
    const auto& A = w.factors();
    const auto& B = wp.factors();
    const std::size_t k = A.size();
    if (k == 0 || B.size() != k) throw error("T-system hypothesis: equal nonzero lengths");
    for (std::size_t s = 0; s + 1 < k; ++s)
        if (B[s] != A[s + 1]) throw error("T-system hypothesis: factors must overlap (b_s = a_{s+1})");
    const Generator last_a = A[k - 1];
    const Generator last_b = B[k - 1];
    if (!s_mrn(last_b.node, last_a.node, n).count(last_b.shift - last_a.shift))
        throw error("T-system hypothesis: appended factor not adjacent");

    // omega^(+/-) with i_{k+1} = j_k, a_{k+1} = b_k
    auto extended = [&](std::size_t p) { return p < k ? A[p] : last_b; };
    LWeight plus = LWeight::identity(n), minus = LWeight::identity(n);
    for (std::size_t p = 0; p < k; ++p) {
        const Generator x = extended(p), y = extended(p + 1);
        plus = plus * LWeight::generator(n, (x.node + y.node + (x.shift - y.shift)) / 2,
                                         (x.shift + y.shift + (x.node - y.node)) / 2);
        minus = minus * LWeight::generator(n, (x.node + y.node - (x.shift - y.shift)) / 2,
                                           (x.shift + y.shift - (x.node - y.node)) / 2);
    }

    std::vector<Generator> big = A;
    big.push_back(last_b);
    std::vector<Generator> small(B.begin(), B.end() - 1);

    // [V(w+)][V(w-)] through certified prime factors; the monomials can
    // degenerate out of the snake class when middle factors hit node 0 or
    // n+1.
    std::vector<PrimeSnake> tail = certified_prime_factors(plus);
    for (auto& f : certified_prime_factors(minus)) tail.push_back(std::move(f));

    TSystem t;
    t.lhs = RingExpression::product(n, {w, wp});
    t.rhs = RingExpression::product(n, {PrimeSnake(n, big), PrimeSnake(n, small)});
    t.rhs.add(std::move(tail));
    t.omega_plus = plus;
    t.omega_minus = minus;
    return t;
}

// l-highest-weight criterion for an ordered product of fundamentals:
// a_j - a_{j-1} must avoid S_{i_j, i_{j-1}, n}.
inline bool hw_order_admissible(const std::vector<Generator>& list, int n) {
    for (std::size_t j = 1; j < list.size(); ++j)
        if (s_mrn(list[j].node, list[j - 1].node, n).count(list[j].shift - list[j - 1].shift))
            return false;
    return true;
}

// Sufficient criterion for irreducibility of the tensor product in either
// order: admissible both ways.
inline bool hw_irreducible(const std::vector<Generator>& list, int n) {
    if (!hw_order_admissible(list, n)) return false;
    for (std::size_t j = 1; j < list.size(); ++j)
        if (s_mrn(list[j].node, list[j - 1].node, n).count(list[j - 1].shift - list[j].shift))
            return false;
    return true;
}

// Tensor product of KR modules of type (i,n) is irreducible iff the
// segments are in pairwise general position.
inline bool tensor_irreducible_kr(const SegmentContext& ctx, const std::vector<Segment>& segs) {
    for (std::size_t x = 0; x < segs.size(); ++x)
        for (std::size_t y = x + 1; y < segs.size(); ++y)
            if (!position(ctx, segs[x], segs[y]).general()) return false;
    return true;
}

// Dominant candidates pi for Hom(W(pi), V(pi1) (x) V(pi2)) != 0 per the
// two necessary monomial conditions:
//   pi pi1^-1 in wt_l V(pi2)   and   (pi*)^-1 pi2* in wt_l V(pi1).
inline std::vector<LWeight> hom_candidates(const PrimeSnake& pi1, const PrimeSnake& pi2) {
    const int n = pi1.rank();
    if (pi2.rank() != n) throw error("rank mismatch: hom_candidates");
    const Character chi1 = snake_char(pi1);
    const Character chi2 = snake_char(pi2);
    const LWeight dual2 = pi2.lweight().dual_star();

    std::vector<LWeight> out;
    for (const auto& [m, mult] : chi2.terms()) {
        const LWeight pi = pi1.lweight() * m;
        if (!pi.is_dominant()) continue;
        if (chi1.coefficient(pi.dual_star().inverse() * dual2) <= 0) continue;
        out.push_back(pi);
    }
    return out;
}

// chi(V(omega_{i,A} omega_{i,B})) for the interlocking pair of an overlap
// pattern: the union segment and the repeated core are in general
// position (one contains the other), so the simple factors as their
// tensor product.
inline Character special_pair_simple_char(const SegmentContext& ctx, const Segment& x1,
                                          const Segment& y1) {
    std::multiset<int> all(x1.begin(), x1.end());
    all.insert(y1.begin(), y1.end());
    Segment uni, rest;
    std::set<int> seen;
    for (int v : all) {
        if (seen.insert(v).second)
            uni.push_back(v);
        else
            rest.push_back(v);
    }
    require_segment(ctx, uni, "overlap union");
    Character chi = snake_char(PrimeSnake(segment_lweight(ctx, uni)));
    if (!rest.empty()) {
        require_segment(ctx, rest, "overlap core");
        chi = chi * snake_char(PrimeSnake(segment_lweight(ctx, rest)));
    }
    return chi;
}

// Witness construction for reducibility of V(w_{i,A}) (x) V(w_{i,B}) when
// A,B are in special position: reduce to the overlap runs via the T-system
// pattern, take pi = w+ w- there, and pad by the outer factors,
//   w = w_{i,A0} w_{i,B0} pi w_{n+1-i,A2*}^-1 w_{n+1-i,B2*}^-1.
struct WitnessData {
    LWeight witness;
    OverlapPattern pattern;
    Segment a0, a1, a2, b0, b1, b2;  // splits of the scanned pair
};

inline WitnessData reducibility_witness_data(const SegmentContext& ctx, const Segment& A,
                                             const Segment& B) {
    auto pat = tsys_overlap(ctx, A, B);
    if (!pat) throw error("pair not in special position");
    const Segment& a = pat->swapped ? B : A;
    const Segment& b = pat->swapped ? A : B;

    WitnessData w;
    w.pattern = *pat;
    auto split = [](const Segment& s, int lo, int p) {
        // runs: [1, lo-1], [lo, lo+p], [lo+p+1, end] (1-based)
        Segment s0(s.begin(), s.begin() + lo - 1);
        Segment s1(s.begin() + lo - 1, s.begin() + lo + p);
        Segment s2(s.begin() + lo + p, s.end());
        return std::tuple{s0, s1, s2};
    };
    std::tie(w.a0, w.a1, w.a2) = split(a, pat->j, pat->p);
    std::tie(w.b0, w.b1, w.b2) = split(b, pat->m, pat->p);

    // T-system pair over the runs, oriented so the primed snake trails.
    const Segment& lead = pat->orientation == 1 ? w.a1 : w.b1;
    const Segment& trail = pat->orientation == 1 ? w.b1 : w.a1;
    auto to_factors = [&](const Segment& s) {
        std::vector<Generator> f;
        for (int v : s) f.push_back({ctx.i, v});
        return f;
    };
    TSystem ts = ext_tsystem(PrimeSnake(ctx.n, to_factors(lead)), PrimeSnake(ctx.n, to_factors(trail)));
    LWeight pi = ts.omega_plus * ts.omega_minus;

    const int dual_node = ctx.n + 1 - ctx.i;
    LWeight x = segment_lweight(ctx, w.a0) * segment_lweight(ctx, w.b0) * pi;
    for (int v : w.a2) x = x * LWeight::generator(ctx.n, dual_node, v + ctx.n + 1, -1);
    for (int v : w.b2) x = x * LWeight::generator(ctx.n, dual_node, v + ctx.n + 1, -1);
    w.witness = x;
    return w;
}

inline LWeight reducibility_witness(const SegmentContext& ctx, const Segment& A, const Segment& B) {
    return reducibility_witness_data(ctx, A, B).witness;
}

// The two membership checks certifying the witness: positive coefficient
// in chi(V(A)) chi(V(B)), zero coefficient in the Jordan-Holder triple
//   W(w_{i,A0} w_{i,B0}) (x) V(w_{i,A1} w_{i,B1}) (x) W(w_{i,A2} w_{i,B2}).
struct WitnessCheck {
    long long pair_coefficient = 0;
    long long triple_coefficient = 0;
    bool passed() const { return pair_coefficient > 0 && triple_coefficient == 0; }
};

inline WitnessCheck check_reducibility_witness(const SegmentContext& ctx, const Segment& A,
                                               const Segment& B) {
    WitnessData w = reducibility_witness_data(ctx, A, B);
    Character chiA = snake_char(PrimeSnake(segment_lweight(ctx, A)));
    Character chiB = snake_char(PrimeSnake(segment_lweight(ctx, B)));

    WitnessCheck c;
    c.pair_coefficient = coefficient_in_product({&chiA, &chiB}, w.witness);

    Character outer0 = weyl_char(segment_lweight(ctx, w.a0) * segment_lweight(ctx, w.b0));
    Character mid = special_pair_simple_char(ctx, w.a1, w.b1);
    Character outer2 = weyl_char(segment_lweight(ctx, w.a2) * segment_lweight(ctx, w.b2));
    c.triple_coefficient = coefficient_in_product({&outer0, &mid, &outer2}, w.witness);
    return c;
}

}  // namespace snakelab
