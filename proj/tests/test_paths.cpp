#include <catch2/catch_amalgamated.hpp>

#include "snakelab/paths.hpp"

using namespace snakelab;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

}  // namespace

TEST_CASE("path families have binomial size") {
    auto two = enumerate_paths(1, 0, 1);
    REQUIRE(two.size() == 2);
    CHECK(two[0].values() == std::vector<int>{1, 0, 1});
    CHECK(two[1].values() == std::vector<int>{1, 2, 1});

    CHECK(enumerate_paths(2, 0, 3).size() == 6);
    for (int n = 1; n <= 10; ++n)
        for (int i = 1; i <= n; ++i)
            CHECK(enumerate_paths(i, 0, n).size() == static_cast<std::size_t>(binom(n + 1, i)));

    // size independent of the spectral shift
    for (int a : {-3, 2, 11}) CHECK(enumerate_paths(2, a, 4).size() == enumerate_paths(2, 0, 4).size());
    CHECK_THROWS_AS(enumerate_paths(4, 0, 3), error);
}

TEST_CASE("corner monomials") {
    CHECK(path_monomial(Path(1, 1, 2, {3, 2, 3})) == LWeight::generator(1, 1, 2));
    CHECK(path_monomial(Path(1, 1, 0, {1, 2, 1})) == LWeight::generator(1, 1, 2, -1));
    for (int n = 1; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int a : {-2, 0, 3}) {
                CHECK(path_monomial(lowest_path(i, a, n)) == LWeight::generator(n, i, a));
                CHECK(path_monomial(dual_path(i, a, n)) ==
                      LWeight::generator(n, n + 1 - i, a + n + 1, -1));
            }
        }
    }
}

TEST_CASE("monomials use only shifts in [a, a+n+1]") {
    for (int n = 1; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (const Path& p : enumerate_paths(i, 2, n)) {
                const LWeight m = path_monomial(p);
                for (const auto& f : m.factors()) {
                    CHECK(f.shift >= 2);
                    CHECK(f.shift <= 2 + n + 1);
                }
            }
        }
    }
}

TEST_CASE("explicit lowest and dual paths at n=1") {
    CHECK(lowest_path(1, 0, 1).values() == std::vector<int>{1, 0, 1});
    CHECK(dual_path(1, 0, 1).values() == std::vector<int>{1, 2, 1});
}

TEST_CASE("g and p path monomial formulas") {
    for (int n = 1; n <= 6; ++n) {
        for (int j = 1; j <= n; ++j) {
            const int mmax = std::min(j, n + 1 - j);
            for (int a : {-1, 0, 4}) {
                CHECK(path_monomial(g_path(j, a, 0, n)) == LWeight::generator(n, j, a));
                CHECK(g_path(j, a, 0, n) == lowest_path(j, a, n));
                for (int m = 1; m <= mmax; ++m) {
                    LWeight gm = path_monomial(g_path(j, a, m, n));
                    LWeight expect =
                        2 * j > n + 1
                            ? LWeight::generator(n, n + 1 - j - m, a - n - 1 + 2 * j + m) *
                                  LWeight::generator(n, n + 1 - j, a - n - 1 + 2 * j + 2 * m, -1) *
                                  LWeight::generator(n, j + m, a + m)
                            : LWeight::generator(n, j - m, a + m) *
                                  LWeight::generator(n, n + 1 - j, a + n + 1 - 2 * j + 2 * m, -1) *
                                  LWeight::generator(n, n + 1 - j + m, a + n + 1 - 2 * j + m);
                    CHECK(gm == expect);

                    LWeight pm = path_monomial(p_path(j, a, m, n));
                    CHECK(pm == LWeight::generator(n, j - m, a + m) *
                                    LWeight::generator(n, j, a + 2 * m, -1) *
                                    LWeight::generator(n, j + m, a + m));
                }
                // the maximal g-path is the dual path
                CHECK(path_monomial(g_path(j, a, mmax, n)) ==
                      LWeight::generator(n, n + 1 - j, a + n + 1, -1));
                CHECK(g_path(j, a, mmax, n) == dual_path(j, a, n));
            }
            CHECK_THROWS_AS(g_path(j, 0, mmax + 1, n), error);
            CHECK_THROWS_AS(p_path(j, 0, -1, n), error);
        }
    }
}

TEST_CASE("corner-set characterizations of the g and p families") {
    for (int n = 1; n <= 6; ++n) {
        for (int j = 1; j <= n; ++j) {
            const int a = 0;
            const int mmax = std::min(j, n + 1 - j);
            std::set<Path> gset, pset;
            for (int m = 1; m <= mmax; ++m) {
                gset.insert(g_path(j, a, m, n));
                pset.insert(p_path(j, a, m, n));
            }
            std::set<Path> gfilter, pfilter;
            for (const Path& p : enumerate_paths(j, a, n)) {
                CornerData c = corners(p);
                if (c.minus == std::vector<int>{n + 1 - j}) gfilter.insert(p);
                if (c.minus == std::vector<int>{j}) pfilter.insert(p);
            }
            CHECK(gset == gfilter);
            CHECK(pset == pfilter);
        }
    }
    // spec instance: filter of P_{2,0} (n=3) by c- = {2} is {p^1, p^2}
    std::set<Path> expect{p_path(2, 0, 1, 3), p_path(2, 0, 2, 3)};
    std::set<Path> got;
    for (const Path& p : enumerate_paths(2, 0, 3))
        if (corners(p).minus == std::vector<int>{2}) got.insert(p);
    CHECK(got == expect);
}

TEST_CASE("strict sandwich between lowest and dual paths") {
    for (int n = 1; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int m1 = 1; m1 <= 3; ++m1) {
                for (int m2 = 1; m2 <= 3; ++m2) {
                    const int a = 0, b = a + 2 * m1, c = b + 2 * m2;
                    Path low = lowest_path(i, a, n), high = dual_path(i, c, n);
                    for (const Path& p : enumerate_paths(i, b, n)) {
                        for (int r = 0; r <= n + 1; ++r) {
                            REQUIRE(low(r) < p(r));
                            REQUIRE(p(r) < high(r));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("pointwise dominance matches the Q+ order on monomials") {
    for (int n = 1; n <= 4; ++n) {
        for (int i = 1; i <= n; ++i) {
            auto fam = enumerate_paths(i, 0, n);
            for (const Path& p : fam) {
                CHECK(dominates(p, p));
                for (const Path& q : fam) {
                    const bool dom = dominates(p, q);
                    const bool alg =
                        decompose_in_Qplus(path_monomial(p) * path_monomial(q).inverse()).has_value();
                    REQUIRE(dom == alg);
                }
            }
            // the lowest path is the pointwise minimum of its family
            Path low = lowest_path(i, 0, n);
            for (const Path& q : fam)
                for (int r = 0; r <= n + 1; ++r) REQUIRE(low(r) <= q(r));
        }
    }
    CHECK_THROWS_AS(dominates(lowest_path(1, 0, 2), lowest_path(2, 0, 2)), error);
}

TEST_CASE("tuple enumeration for prime snakes") {
    // single fundamental: every path is a singleton tuple
    auto t1 = enumerate_tuples(LWeight::generator(1, 1, 0));
    CHECK(t1.size() == 2);
    auto t2 = enumerate_tuples(LWeight::generator(3, 2, 0));
    CHECK(t2.size() == 6);

    // the 3-dimensional KR module at n=1
    auto t3 = enumerate_tuples(LWeight::generator(1, 1, 0) * LWeight::generator(1, 1, 2));
    CHECK(t3.size() == 3);

    CHECK_THROWS_AS(enumerate_tuples(LWeight::generator(1, 1, 0) * LWeight::generator(1, 1, 1)),
                    error);
    CHECK_THROWS_AS(enumerate_tuples(LWeight::generator(1, 1, 0, -1)), error);
}

TEST_CASE("snake factor recognition") {
    auto f = snake_factors(LWeight::generator(3, 2, 0) * LWeight::generator(3, 1, 3) *
                           LWeight::generator(3, 2, 6));
    REQUIRE(f.has_value());
    CHECK((*f)[0] == Generator{2, 0});
    CHECK((*f)[1] == Generator{1, 3});
    CHECK((*f)[2] == Generator{2, 6});

    // two factors at the same shift can never be a snake (0 is in no S-set),
    // e.g. the imaginary-family monomials sit outside the snake class
    CHECK_FALSE(snake_factors(LWeight::generator(3, 2, 6) * LWeight::generator(3, 1, 3) *
                              LWeight::generator(3, 3, 3) * LWeight::generator(3, 2, 0))
                    .has_value());
    CHECK_FALSE(snake_factors(LWeight::generator(3, 1, 0, 2)).has_value());
    CHECK_FALSE(
        snake_factors(LWeight::generator(3, 1, 0) * LWeight::generator(3, 1, 3)).has_value());
}

TEST_CASE("sub-tuples and padded tuples stay in the tuple sets") {
    for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
            for (int g1 : s_set(i, n)) {
                for (int g2 : s_set(i, n)) {
                    const int a1 = 0, a2 = g1, a3 = a2 + g2;
                    LWeight omega = LWeight::generator(n, i, a1) * LWeight::generator(n, i, a2) *
                                    LWeight::generator(n, i, a3);
                    auto tuples = enumerate_tuples(omega);
                    LWeight sub = LWeight::generator(n, i, a2);

                    for (const auto& t : tuples) {
                        // part (i): restriction of a tuple is a tuple of the sub-snake
                        for (std::size_t lo = 0; lo < t.size(); ++lo)
                            for (std::size_t hi = lo; hi < t.size(); ++hi)
                                for (std::size_t x = lo; x < hi; ++x)
                                    REQUIRE(strictly_below(t[x], t[x + 1]));
                    }

                    // part (ii): pad a middle tuple with lowest paths on the
                    // left and dual paths on the right
                    for (const Path& mid : enumerate_paths(i, a2, n)) {
                        PathTuple padded{lowest_path(i, a1, n), mid, dual_path(i, a3, n)};
                        REQUIRE(strictly_below(padded[0], padded[1]));
                        REQUIRE(strictly_below(padded[1], padded[2]));
                    }
                }
            }
        }
    }
}
