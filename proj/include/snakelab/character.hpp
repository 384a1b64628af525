#pragma once

// Formal integer-linear combinations of l-weights: the ambient ring for
// q-characters and Grothendieck-ring identity checks. Terms are kept in a
// sorted map so iteration and rendering are deterministic.

#include <functional>
#include <map>

#include "snakelab/lweight.hpp"

namespace snakelab {

class Character {
  public:
    using TermMap = std::map<LWeight, long long>;

    Character() = default;
    explicit Character(int n) : rank_(n) { check_rank(n); }

    static Character one(int n) {
        Character c(n);
        c.terms_[LWeight::identity(n)] = 1;
        return c;
    }
    static Character of(const LWeight& m, long long mult = 1) {
        Character c(m.rank());
        c.add_term(m, mult);
        return c;
    }

    int rank() const { return rank_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const LWeight& m, long long mult) {
        if (m.rank() != rank_) throw error("rank mismatch: character term");
        if (mult == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, mult);
            if (terms_.size() > limits().max_character_terms)
                throw error("cap exceeded: character has more than " +
                            std::to_string(limits().max_character_terms) + " terms");
        } else {
            it->second += mult;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long coefficient(const LWeight& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? 0 : it->second;
    }

    friend Character operator+(const Character& a, const Character& b) {
        if (a.rank_ != b.rank_) throw error("rank mismatch: character sum");
        Character c = a;
        for (const auto& [m, k] : b.terms_) c.add_term(m, k);
        return c;
    }
    friend Character operator-(const Character& a, const Character& b) {
        if (a.rank_ != b.rank_) throw error("rank mismatch: character difference");
        Character c = a;
        for (const auto& [m, k] : b.terms_) c.add_term(m, -k);
        return c;
    }
    friend Character operator*(const Character& a, long long s) {
        Character c(a.rank_);
        if (s != 0)
            for (const auto& [m, k] : a.terms_) c.terms_.emplace(m, k * s);
        return c;
    }
    friend Character operator*(long long s, const Character& a) { return a * s; }

    friend Character operator*(const Character& a, const Character& b) {
        if (a.rank_ != b.rank_) throw error("rank mismatch: character product");
        Character c(a.rank_);
        const Character& big = a.size() >= b.size() ? a : b;
        const Character& small = a.size() >= b.size() ? b : a;
        for (const auto& [ms, ks] : small.terms_)
            for (const auto& [mb, kb] : big.terms_) c.add_term(ms * mb, ks * kb);
        return c;
    }

    friend bool operator==(const Character&, const Character&) = default;

    std::vector<LWeight> dominant_monomials() const {
        std::vector<LWeight> out;
        for (const auto& [m, k] : terms_)
            if (m.is_dominant()) out.push_back(m);
        return out;
    }

    Character truncate(const std::function<bool(const LWeight&)>& keep) const {
        Character c(rank_);
        for (const auto& [m, k] : terms_)
            if (keep(m)) c.terms_.emplace(m, k);
        return c;
    }

    // Largest exponent of Y[node,shift] over all terms (0 for empty).
    int max_exponent(int node, int shift) const {
        int e = 0;
        for (const auto& [m, k] : terms_) e = std::max(e, m.exponent(node, shift));
        return e;
    }

  private:
    int rank_ = 1;
    TermMap terms_;
};

// coefficient(prod chars, target) without forming the full product: all
// but the largest factor are expanded term-by-term.
inline long long coefficient_in_product(const std::vector<const Character*>& chars,
                                        const LWeight& target) {
    if (chars.empty()) return target.is_identity() ? 1 : 0;
    std::size_t last = 0;
    for (std::size_t k = 1; k < chars.size(); ++k)
        if (chars[k]->size() > chars[last]->size()) last = k;

    // Reorder so the largest factor is resolved last by a single lookup.
    std::vector<const Character*> ordered;
    for (std::size_t k = 0; k < chars.size(); ++k)
        if (k != last) ordered.push_back(chars[k]);
    ordered.push_back(chars[last]);

    std::function<long long(std::size_t, const LWeight&)> run =
        [&](std::size_t k, const LWeight& remaining) -> long long {
        if (k + 1 == ordered.size()) return ordered[k]->coefficient(remaining);
        long long total = 0;
        for (const auto& [m, c] : ordered[k]->terms())
            total += c * run(k + 1, remaining * m.inverse());
        return total;
    };
    return run(0, target);
}

}  // namespace snakelab
