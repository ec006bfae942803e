#include <doctest.h>

#include <random>

#include "sextic/upoly.hpp"

using namespace sextic;

namespace {

MPoly X() { return MPoly::var(Var::x); }
MPoly T() { return MPoly::var(Var::t); }

UPoly ux(std::vector<long> c) {
    std::vector<MPoly> m;
    for (long v : c) m.emplace_back(v);
    return UPoly(Var::x, m);
}

UPoly random_monic(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> coef(-6, 6);
    std::vector<MPoly> c;
    for (int k = 0; k < deg; ++k) c.emplace_back(coef(rng));
    c.emplace_back(1);
    return UPoly(Var::x, c);
}

UPoly times(const UPoly& p, const UPoly& q) { return UPoly::from_mpoly(p.to_mpoly() * q.to_mpoly(), Var::x); }

}  // namespace

TEST_CASE("resultant examples") {
    CHECK(resultant(X() - MPoly(1), X() + MPoly(1), Var::x) == MPoly(2));
    CHECK(resultant(X().pow(2) - MPoly(2), X().pow(2) - MPoly(2), Var::x).is_zero());

    // Char poly of alpha^2 for x^3 - 3x - 1 from Newton identities on
    // e1 = 0, e2 = -3, e3 = 1: power sums of the squares are e1^2 - 2e2, e2^2 - 2e1e3, e3^2.
    const long e1 = 0, e2 = -3, e3 = 1;
    const long s1 = e1 * e1 - 2 * e2, s2 = e2 * e2 - 2 * e1 * e3, s3 = e3 * e3;
    MPoly expected = T().pow(3) - Int(s1) * T().pow(2) + Int(s2) * T() - MPoly(s3);
    MPoly r = resultant(X().pow(3) - Int(3) * X() - MPoly(1), T() - X().pow(2), Var::x);
    CHECK((r == expected || r == -expected));
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(X().pow(2) + X() + MPoly(1), Var::x) == MPoly(-3));
    MPoly a = MPoly::var(Var::a);
    MPoly f = X().pow(3) - a * X().pow(2) - (a + MPoly(3)) * X() - MPoly(1);
    CHECK(discriminant(f, Var::x) == (a.pow(2) + Int(3) * a + MPoly(9)).pow(2));
    MPoly g = (X() - MPoly(1)) * (X() - MPoly(2)) * (X() - MPoly(3));
    long prod = 1;
    for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) prod *= (i - j) * (i - j);
    CHECK(discriminant(g, Var::x) == MPoly(prod));
    CHECK_THROWS_AS(discriminant(Int(2) * X().pow(2) + MPoly(1), Var::x), Error);
}

TEST_CASE("integer_roots examples") {
    CHECK(integer_roots(IntPoly{0, -1, 0, 1}) == std::set<Int>{-1, 0, 1});
    CHECK(integer_roots(IntPoly{8, 3, 1}).empty());
    CHECK(integer_roots(IntPoly{2, 2}) == std::set<Int>{-1});
    CHECK_THROWS_AS(integer_roots(IntPoly{0, 0}), Error);
    // Large roots through the factoring path.
    Int r1 = ipow(Int(10), 9) + 7, r2 = -Int(999983);
    IntPoly big{r1 * r2, -(r1 + r2), 1};
    CHECK(integer_roots(big) == std::set<Int>{r2, r1});
}

TEST_CASE("integer_roots agrees with direct evaluation") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-12, 12);
    for (int i = 0; i < 200; ++i) {
        IntPoly p;
        for (int k = 0; k < 4; ++k) p.emplace_back(coef(rng));
        p.emplace_back(1 + (i % 3));
        auto roots = integer_roots(p);
        Int b = root_bound(p);
        for (Int n = -b - 2; n <= b + 2; ++n) CHECK((sgn(evaluate(p, n)) == 0) == (roots.count(n) == 1));
    }
}

TEST_CASE("factor") {
    Int n = Int(2) * 2 * 3 * 1000003 * 999983;
    Int back = 1;
    for (auto [p, e] : factor(n)) back *= ipow(p, e);
    CHECK(back == n);
}

TEST_CASE("resultant sign law") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> deg(1, 3);
    for (int i = 0; i < 200; ++i) {
        UPoly p = random_monic(rng, deg(rng)), q = random_monic(rng, deg(rng));
        int sign = (p.degree() * q.degree()) % 2 ? -1 : 1;
        CHECK(resultant(p, q) == Int(sign) * resultant(q, p));
    }
}

TEST_CASE("discriminant of a product") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> deg(1, 3);
    int done = 0;
    while (done < 100) {
        UPoly p = random_monic(rng, deg(rng)), q = random_monic(rng, deg(rng));
        MPoly res = resultant(p, q);
        if (res.is_zero()) continue;
        ++done;
        auto disc = [](const UPoly& u) { return u.degree() >= 2 ? discriminant(u) : MPoly(1); };
        CHECK(discriminant(times(p, q)) == disc(p) * disc(q) * res * res);
    }
}

TEST_CASE("Bareiss and cofactor minors agree") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> deg(1, 3), coef(-9, 9);
    MPoly a = MPoly::var(Var::a);
    for (int i = 0; i < 50; ++i) {
        std::vector<MPoly> pc, qc;
        int dp = deg(rng), dq = deg(rng);
        for (int k = 0; k <= dp; ++k) pc.push_back(MPoly(coef(rng)) + Int(coef(rng)) * a);
        for (int k = 0; k <= dq; ++k) qc.push_back(MPoly(coef(rng)) + Int(coef(rng)) * a);
        if (pc.back().is_zero()) pc.back() = MPoly(1);
        if (qc.back().is_zero()) qc.back() = MPoly(1);
        UPoly p(Var::x, pc), q(Var::x, qc);
        CHECK(resultant(p, q, DetMethod::Bareiss) == resultant(p, q, DetMethod::Minors));
    }
}
