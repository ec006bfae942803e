#include <doctest.h>

#include <algorithm>
#include <random>

#include "sextic/quadring.hpp"

using namespace sextic;

namespace {

QuadInt random_elem(std::mt19937_64& rng, const RingDesc& r) {
    std::uniform_int_distribution<int> c(-20, 20);
    return r.make(c(rng), c(rng));
}

bool contains(const std::vector<QuadInt>& v, const QuadInt& q) {
    return std::find(v.begin(), v.end(), q) != v.end();
}

}  // namespace

TEST_CASE("make_ring") {
    RingDesc r1 = make_ring(1);
    CHECK(r1.branch() == Branch::A);
    CHECK(r1.field_disc() == -4);
    CHECK(r1.omega() * r1.omega() == r1.make(-1));
    RingDesc r3 = make_ring(3);
    CHECK(r3.branch() == Branch::B);
    CHECK(r3.e() == 1);
    CHECK(r3.field_disc() == -3);
    CHECK(make_ring(7).field_disc() == -7);
    CHECK(make_ring(2).field_disc() == -8);
    CHECK_THROWS_AS(make_ring(4), Error);
    CHECK_THROWS_AS(make_ring(0), Error);
}

TEST_CASE("arithmetic examples") {
    RingDesc r1 = make_ring(1), r3 = make_ring(3);
    CHECK(r1.make(3, 4).norm() == 25);
    CHECK(r3.omega().conj() == r3.make(1, -1));
    CHECK(r3.omega() * r3.omega() == r3.make(-1, 1));
    CHECK(r3.make(2, 5).norm() == 4 + 10 + 25);
    CHECK_THROWS_AS(r1.omega() + r3.omega(), Error);
    CHECK(exact_div(r1.make(3, 4) * r1.make(1, -2), r1.make(1, -2)) == r1.make(3, 4));
}

TEST_CASE("units") {
    CHECK(units(make_ring(1)).size() == 4);
    CHECK(units(make_ring(3)).size() == 6);
    auto u7 = units(make_ring(7));
    CHECK(u7.size() == 2);
    CHECK(contains(u7, make_ring(7).one()));
    for (int d : {1, 2, 3, 7, 11}) {
        auto us = units(make_ring(d));
        for (const auto& u : us) {
            CHECK(u.norm() == 1);
            CHECK(contains(us, -u));
            CHECK(contains(us, u.conj()));
        }
    }
}

TEST_CASE("unit predicate matches the unit list") {
    for (int d : {1, 2, 3, 7}) {
        RingDesc r = make_ring(d);
        auto us = units(r);
        for (int u = -3; u <= 3; ++u)
            for (int v = -3; v <= 3; ++v) {
                QuadInt q = r.make(u, v);
                CHECK(is_unit(q) == (q.norm() == 1));
                CHECK(is_unit(q) == contains(us, q));
            }
    }
}

TEST_CASE("norm and conjugation laws") {
    std::mt19937_64 rng(3);
    for (int d : {1, 2, 3, 7, 11}) {
        RingDesc r = make_ring(d);
        for (int i = 0; i < 500; ++i) {
            QuadInt p = random_elem(rng, r), q = random_elem(rng, r);
            CHECK((p * q).norm() == p.norm() * q.norm());
            CHECK(p.conj().conj() == p);
            CHECK((p * q).conj() == p.conj() * q.conj());
            CHECK(sgn(p.norm()) >= 0);
            QuadInt n = p * p.conj();
            CHECK(sgn(n.v()) == 0);
        }
    }
}

TEST_CASE("symbolic ring agrees with integer ring") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-6, 6);
    MPoly a = MPoly::var(Var::a);
    for (auto sym : {SymbolicRing::branch_a(), SymbolicRing::branch_b()}) {
        for (int i = 0; i < 100; ++i) {
            int p0 = c(rng), p1 = c(rng), q0 = c(rng), q1 = c(rng);
            QuadSym p = sym.make(a + MPoly(p0), MPoly(p1) * a);
            QuadSym q = sym.make(MPoly(q0), a - MPoly(q1));
            Int av = c(rng);
            const std::vector<long> ds = sym.kind() == SymbolicKind::BranchA ? std::vector<long>{2, 5, 6}
                                                                             : std::vector<long>{7, 11, 19};
            RingDesc r = make_ring(ds[static_cast<std::size_t>(i % 3)]);
            std::map<Var, Int> vals{{Var::a, av}};
            QuadInt pe = evaluate(p, vals, r), qe = evaluate(q, vals, r);
            CHECK(evaluate(p * q, vals, r) == pe * qe);
            CHECK(evaluate(p.conj(), vals, r) == pe.conj());
            CHECK(evaluate(p + q, vals, r) == pe + qe);
            MPoly n = p.norm();
            MPoly nv = n.evaluate(Var::a, av);
            nv = sym.kind() == SymbolicKind::BranchA ? nv.evaluate(Var::d, r.d()) : nv.evaluate(Var::e, r.e());
            CHECK(nv.constant_value() == pe.norm());
        }
    }
}

TEST_CASE("text form") {
    RingDesc r = make_ring(3);
    for (auto q : {r.make(2, -3), r.make(0, 1), r.make(-4, 0), r.make(0, -1)}) CHECK(parse_quad(to_string(q), r) == q);
    CHECK(parse_quad("w", r) == r.omega());
    CHECK(parse_quad("-w", r) == -r.omega());
    CHECK(parse_quad("1-2*w", r) == r.make(1, -2));
    CHECK_THROWS_AS(parse_quad("1+2*z", r), Error);
}
