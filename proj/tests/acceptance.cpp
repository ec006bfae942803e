// Acceptance criteria 1-10. One PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "sextic/search.hpp"

using namespace sextic;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

UPoly random_monic(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<int> coef(-6, 6);
    std::vector<MPoly> c;
    for (int k = 0; k < deg; ++k) c.emplace_back(coef(rng));
    c.emplace_back(1);
    return UPoly(Var::x, c);
}

void c1(Check& c) {
    c.expect(family_discriminant_defect().is_zero(), "symbolic defect is nonzero");
    for (long a = -100; a <= 100; ++a) {
        auto cd = simplest_cubic_and_disc(a);
        Int k = Int(a * a + 3 * a + 9);
        c.expect(cd.disc == k * k, "a=" + std::to_string(a));
        c.expect(discriminant(cd.f) == MPoly(k * k), "bigpoly discriminant a=" + std::to_string(a));
    }
    c.detail << "symbolic identity and a in [-100,100]";
}

void c2(Check& c) {
    MPoly a = MPoly::var(Var::a);
    c.expect(thue_form(a, MPoly(1), MPoly(0)) == MPoly(1), "F(1,0)");
    c.expect(thue_form(a, MPoly(0), MPoly(1)) == MPoly(-1), "F(0,1)");
    c.expect(thue_form(a, MPoly(1), MPoly(-1)) == MPoly(-1), "F(1,-1)");
    std::mt19937_64 rng(2002);
    std::uniform_int_distribution<int> v(-20, 20);
    const std::vector<long> ds{1, 2, 3, 7, 11};
    for (int i = 0; i < 500; ++i) {
        RingDesc r = make_ring(ds[static_cast<std::size_t>(i) % ds.size()]);
        QuadInt y1 = r.make(v(rng), v(rng)), y2 = r.make(v(rng), v(rng));
        Int av = v(rng);
        c.expect(thue_form(av, -y1, -y2) == -thue_form(av, y1, y2), "sign law");
    }
    c.detail << "3 polynomial identities, 500 sign-law pairs";
}

void c3(Check& c) {
    auto t0 = Clock::now();
    VerificationReport r = verify_theorem2();
    double s = seconds_since(t0);
    c.expect(r.rows.size() == 24, "24 rows");
    for (const auto& row : r.rows) c.expect(row.index.index == 1, row.entry.label);
    c.expect(s < 10.0, "runtime");
    c.detail << "24/24 index 1 in " << s << " s";
}

void c4(Check& c) {
    auto t0 = Clock::now();
    std::set<std::pair<Int, ThetaCoords>> got;
    for (long a = -3; a <= 0; ++a)
        for (const auto& g : generator_search(a, make_ring(1), 3).generators) got.emplace(g.a, g.coords);
    c.expect(got == theorem2_classes(), "d=1, a in [-3,0] differs from Theorem 2");
    std::size_t slices = 4, stray = 0;
    for (long a = 1; a <= 5; ++a, ++slices) stray += generator_search(a, make_ring(1), 3).generators.size();
    for (long d : {2, 3, 5, 7})
        for (long a = -6; a <= 6; ++a, ++slices) stray += generator_search(a, make_ring(d), 3).generators.size();
    c.expect(stray == 0, "generators outside Theorem 2");
    double s = seconds_since(t0);
    c.expect(s < 180.0, "runtime");
    c.detail << got.size() << " classes on d=1, a in [-3,0]; " << stray << " elsewhere; " << slices << " slices in "
             << s << " s";
}

void c5(Check& c) {
    std::mt19937_64 rng(5005);
    std::uniform_int_distribution<int> ai(-5, 5), x(-4, 4);
    const std::vector<long> ds{1, 2, 3, 7};
    for (int i = 0; i < 200; ++i) {
        FamilyParams p = make_params(ai(rng), ds[static_cast<std::size_t>(i) % 4]);
        ThetaCoords th;
        for (auto& v : th.c) v = x(rng);
        IndexBreakdown b = abs_index_detail(p, th);
        c.expect(b.index == b.rel_index * b.j_factor, "I = I_rel * J at " + th.to_string());
        c.expect(b.index * b.index * abs(order_disc(p)) == abs(b.product_disc), "I^2 |D_O| at " + th.to_string());
    }
    c.detail << "200 seeded vectors";
}

void c6(Check& c) {
    std::mt19937_64 rng(6006);
    std::uniform_int_distribution<int> ai(-10, 10), y(-8, 8);
    const std::vector<long> ds{1, 2, 3, 5, 7, 11};
    for (int i = 0; i < 300; ++i) {
        FamilyParams p = make_params(ai(rng), ds[static_cast<std::size_t>(i) % ds.size()]);
        QuadInt y1 = p.ring.make(y(rng), y(rng)), y2 = p.ring.make(y(rng), y(rng));
        auto [x1, x2] = xy_transform(p.a, y1, y2);
        c.expect(rel_index(p, x1, x2) == thue_form(p.a, y1, y2).norm(), "bridge");
    }
    c.detail << "300 seeded pairs";
}

const AuditItem* find_audit(const CaseReport& r, const std::string& name) {
    for (const auto& a : r.audits)
        if (a.name == name) return &a;
    return nullptr;
}

void c7(Check& c) {
    CaseReport i1 = case_I_analysis(CaseId::I1), i2 = case_I_analysis(CaseId::I2);
    for (const auto* r : {&i1, &i2}) {
        c.expect(r->derivations.size() == 6, "six derivations");
        for (const auto& d : r->derivations) c.expect(d.y0_cube_divides, "y0^3 divides J");
        for (const auto& d : r->discriminants) c.expect(d.negative_for_all_admissible, d.equation);
        c.expect(r->matches_published, "conclusion");
    }
    MPoly e = MPoly::var(Var::e), d = Int(4) * e - MPoly(1), K = MPoly::var(Var::K);
    MPoly printed = (d + MPoly(1)) * K.pow(2) + Int(2) * d.pow(2) * K + d.pow(3);
    for (const auto& der : i2.derivations) c.expect(der.j2_in_k && *der.j2_in_k == printed, "I.2 J2 in K");
    bool disc_ok = false;
    for (const auto& da : i2.discriminants)
        if (da.equation == "J2 - 1 = 0") disc_ok = da.discriminant == Int(4) * (-d.pow(3) + d + MPoly(1));
    c.expect(disc_ok, "I.2 discriminant 4(-d^3+d+1)");
    c.expect(i1.conclusion == "no power integral basis in case I.1 for any d", "I.1 conclusion");
    for (const char* name : {"J2 as a polynomial in K", "K-discriminant of J2-1", "printed polynomial vs printed discriminant"})
        c.expect(find_audit(i1, name) != nullptr, std::string("I.1 audit ") + name);
    const AuditItem* poly = find_audit(i1, "J2 as a polynomial in K");
    c.detail << "I.1 derived " << (poly ? poly->derived : "?") << "; I.2 matches printed J2";
}

void c8(Check& c) {
    CaseReport ii = case_d1_d3_analysis(CaseId::II, 10);
    std::set<std::pair<Int, ThetaCoords>> got;
    for (const auto& g : ii.solutions) {
        got.emplace(g.a, g.coords);
        c.expect(abs_index(make_params(g.a, g.d), g.coords) == 1, "re-verification");
    }
    c.expect(got == theorem2_classes() && got.size() == 24, "case II differs from Theorem 2");
    c.detail << "II: " << got.size() << " classes;";
    for (CaseId id : {CaseId::II1, CaseId::III, CaseId::III1, CaseId::IV}) {
        CaseReport r = case_d1_d3_analysis(id, 10);
        c.expect(r.solutions.empty(), std::string(to_string(id)) + " not empty");
        c.detail << " " << to_string(id) << ": " << r.solutions.size() << " new";
        if (!r.covered.empty()) c.detail << " (" << r.covered.size() << " already in " << r.covered_by << ")";
        c.detail << ";";
    }
}

void c9(Check& c) {
    AuditReport audit = audit_lemma1();
    c.expect(audit.independent.size() == 12, "12 independent rows");
    for (const auto& row : audit.independent) c.expect(row.verdict == Verdict::Pass, "independent " + row.entry.label);
    c.expect(audit.dependent.size() == 24, "24 dependent rows");
    std::size_t flagged = 0;
    for (const auto& row : audit.dependent) {
        c.expect(row.cells.size() == default_hypotheses().size(), "full hypothesis table");
        flagged += row.verdict == Verdict::Flagged;
    }
    for (long a = -5; a <= 5; ++a)
        for (long d : {1, 2, 3, 7, 11}) {
            RingDesc ring = make_ring(d);
            auto found = thue_solutions(a, ring, 10).solutions;
            for (const auto& p : found) c.expect(thue_form(Int(a), p.y1.in(ring), p.y2.in(ring)).norm() == 1, "unit norm");
            for (const auto& e : lemma1_entries().independent) {
                auto need = e.required_d();
                if (need && *need != d) continue;
                SolutionPair n = e.pair.normalized();
                bool hit = false;
                for (const auto& p : found) hit = hit || (p.y1 == n.y1 && p.y2 == n.y2);
                c.expect(hit, "missing " + e.label + " at a=" + std::to_string(a) + " d=" + std::to_string(d));
            }
        }
    c.detail << "12/12 independent units; dependent identity reading flags " << flagged << "/24; uniform readings:";
    for (const auto& h : audit.uniform_hypotheses) c.detail << " " << h;
    c.detail << "; 55 Thue slices at B=10";
}

void c10(Check& c) {
    std::mt19937_64 rng(1010);
    std::uniform_int_distribution<int> deg(1, 3);
    for (int i = 0; i < 200; ++i) {
        UPoly p = random_monic(rng, deg(rng)), q = random_monic(rng, deg(rng));
        Int sign = (p.degree() * q.degree()) % 2 ? -1 : 1;
        c.expect(resultant(p, q) == sign * resultant(q, p), "resultant sign law");
    }
    for (int done = 0; done < 100;) {
        UPoly p = random_monic(rng, deg(rng)), q = random_monic(rng, deg(rng));
        MPoly res = resultant(p, q);
        if (res.is_zero()) continue;
        ++done;
        auto disc = [](const UPoly& u) { return u.degree() >= 2 ? discriminant(u) : MPoly(1); };
        UPoly pq = UPoly::from_mpoly(p.to_mpoly() * q.to_mpoly(), Var::x);
        c.expect(discriminant(pq) == disc(p) * disc(q) * res * res, "disc(PQ)");
    }
    for (int i = 0; i < 50; ++i) {
        UPoly p = random_monic(rng, deg(rng)), q = random_monic(rng, deg(rng));
        c.expect(resultant(p, q, DetMethod::Bareiss) == resultant(p, q, DetMethod::Minors), "Bareiss vs minors");
    }
    std::uniform_int_distribution<int> v(-20, 20);
    for (long d : {1, 2, 3, 7, 11}) {
        RingDesc r = make_ring(d);
        for (int i = 0; i < 500; ++i) {
            QuadInt p = r.make(v(rng), v(rng)), q = r.make(v(rng), v(rng));
            c.expect((p * q).norm() == p.norm() * q.norm(), "norm multiplicativity");
            c.expect(p.conj().conj() == p, "conj involution");
            c.expect((p * q).conj() == p.conj() * q.conj(), "conj multiplicativity");
        }
    }
    c.detail << "200 sign-law pairs, 100 disc(PQ), 50 Bareiss/minors, 2500 ring pairs";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
        {"discriminant identity", c1},
        {"Thue form identities", c2},
        {"Theorem 2 reproduction", c3},
        {"desk-scale completeness", c4},
        {"index factorization", c5},
        {"relative index vs Thue norm", c6},
        {"case I.1/I.2 analysis", c7},
        {"case II/III/IV reproduction", c8},
        {"Lemma 1 audit", c9},
        {"kernel properties", c10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        auto t0 = Clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        std::cout << "criterion " << (i + 1) << ": " << (c.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
                  << c.detail.str() << "] " << seconds_since(t0) << " s" << std::endl;
        failed += !c.ok;
    }
    return failed == 0 ? 0 : 1;
}
