#include "sextic/catalog.hpp"

#include <sstream>

namespace sextic {

namespace {

Lemma1Entry independent(long u1, long v1, long u2, long v2, Applicability ring, const char* label) {
    return {SolutionPair{{u1, v1}, {u2, v2}, std::nullopt, Provenance::Lemma1Independent}, ring, label};
}

Lemma1Entry dependent(long a, long y1, long y2) {
    std::ostringstream label;
    label << "(" << a << "," << y1 << "," << y2 << ")";
    return {SolutionPair{{y1, 0}, {y2, 0}, Int(a), Provenance::Lemma1Dependent}, Applicability::Rational,
            label.str()};
}

Lemma1Catalog build_lemma1() {
    using A = Applicability;
    Lemma1Catalog c;
    // Eisenstein coordinates are in the basis (1, w3), w3 = (1 + i sqrt 3)/2.
    c.independent = {
        independent(1, 0, 0, 0, A::Rational, "(1,0)"),
        independent(0, 0, 1, 0, A::Rational, "(0,1)"),
        independent(1, 0, -1, 0, A::Rational, "(1,-1)"),
        independent(0, 1, 0, -1, A::Gaussian, "(i,-i)"),
        independent(0, 1, 0, 0, A::Gaussian, "(i,0)"),
        independent(0, 0, 0, 1, A::Gaussian, "(0,i)"),
        independent(0, 1, 0, -1, A::Eisenstein, "(w3,-w3)"),
        independent(0, 0, 0, 1, A::Eisenstein, "(0,w3)"),
        independent(0, 1, 0, 0, A::Eisenstein, "(w3,0)"),
        independent(1, -1, 0, 0, A::Eisenstein, "(1-w3,0)"),
        independent(0, 0, 1, -1, A::Eisenstein, "(0,1-w3)"),
        independent(1, -1, -1, 1, A::Eisenstein, "(1-w3,-1+w3)"),
    };
    c.dependent = {
        dependent(-3, 9, -2), dependent(-3, 7, -9), dependent(-3, 2, 7),  dependent(-1, 3, -1),
        dependent(-1, 2, -3), dependent(-1, 1, 2),  dependent(0, 9, -4),  dependent(0, 5, -9),
        dependent(0, 4, 5),   dependent(0, 2, -1),  dependent(0, 1, 1),   dependent(0, 1, -2),
        dependent(1, 9, -5),  dependent(1, 5, 4),   dependent(1, 4, -9),  dependent(1, 2, -1),
        dependent(1, 1, 1),   dependent(1, 1, -2),  dependent(2, 3, -2),  dependent(2, 2, 1),
        dependent(2, 1, -3),  dependent(4, 9, -7),  dependent(4, 7, 2),   dependent(4, 2, -9),
    };
    return c;
}

Theorem2Entry t2(long a, long y, LinearQuad x1, LinearQuad x2, const char* x1_label, const char* x2_label) {
    std::ostringstream label;
    label << "(" << a << "," << y << "," << x1_label << "," << x2_label << ")";
    return {Int(a), Int(y), x1, x2, label.str()};
}

std::vector<Theorem2Entry> build_theorem2() {
    const LinearQuad i_plus_ai{0, 0, 1, 1}, minus_i{0, 0, -1, 0}, i{0, 0, 1, 0}, zero{0, 0, 0, 0},
        minus_ia{0, 0, 0, -1};
    return {
        t2(-3, 1, i_plus_ai, minus_i, "i+ai", "-i"), t2(-2, 1, i_plus_ai, minus_i, "i+ai", "-i"),
        t2(-1, 1, i_plus_ai, minus_i, "i+ai", "-i"), t2(0, 1, i_plus_ai, minus_i, "i+ai", "-i"),
        t2(-3, 2, i_plus_ai, minus_i, "i+ai", "-i"), t2(-2, 2, i_plus_ai, minus_i, "i+ai", "-i"),
        t2(-1, 2, i_plus_ai, minus_i, "i+ai", "-i"), t2(0, 2, i_plus_ai, minus_i, "i+ai", "-i"),
        t2(-3, 1, i, zero, "i", "0"),                t2(-2, 1, i, zero, "i", "0"),
        t2(-1, 1, i, zero, "i", "0"),                t2(0, 1, i, zero, "i", "0"),
        t2(-3, 0, i, zero, "i", "0"),                t2(-2, 0, i, zero, "i", "0"),
        t2(-1, 0, i, zero, "i", "0"),                t2(0, 0, i, zero, "i", "0"),
        t2(-2, 0, minus_ia, i, "-ia", "i"),          t2(-1, -1, minus_ia, i, "-ia", "i"),
        t2(0, -2, minus_ia, i, "-ia", "i"),          t2(-3, 1, minus_ia, i, "-ia", "i"),
        t2(0, -3, minus_ia, i, "-ia", "i"),          t2(-3, 0, minus_ia, i, "-ia", "i"),
        t2(-1, -2, minus_ia, i, "-ia", "i"),         t2(-2, -1, minus_ia, i, "-ia", "i"),
    };
}

std::string render(const QuadSym& q) {
    if (q.u().is_constant() && q.v().is_constant())
        return to_string(QuadCoord{q.u().constant_value(), q.v().constant_value()});
    if (q.v().is_zero()) return q.u().to_string();
    return "(" + q.u().to_string() + ")+(" + q.v().to_string() + ")*w";
}

}  // namespace

std::pair<QuadCoord, QuadCoord> apply_hypothesis(const Hypothesis& h, const SolutionPair& p) {
    QuadCoord y1 = h.swap ? p.y2 : p.y1;
    QuadCoord y2 = h.swap ? p.y1 : p.y2;
    if (h.flip_y1) y1 = -y1;
    if (h.flip_y2) y2 = -y2;
    return {y1, y2};
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Flagged: return "FLAGGED";
        case Verdict::Failed: return "FAILED";
    }
    return "FAILED";
}

std::string_view to_string(Applicability a) {
    switch (a) {
        case Applicability::Rational: return "rational";
        case Applicability::Gaussian: return "gaussian";
        case Applicability::Eisenstein: return "eisenstein";
    }
    return "rational";
}

std::optional<Int> Lemma1Entry::required_d() const {
    switch (ring) {
        case Applicability::Gaussian: return Int(1);
        case Applicability::Eisenstein: return Int(3);
        default: return std::nullopt;
    }
}

const Lemma1Catalog& lemma1_entries() {
    static const Lemma1Catalog catalog = build_lemma1();
    return catalog;
}

const std::vector<Theorem2Entry>& theorem2_entries() {
    static const std::vector<Theorem2Entry> entries = build_theorem2();
    return entries;
}

ThetaCoords Theorem2Entry::coords() const {
    QuadCoord c1 = x1.at(a), c2 = x2.at(a);
    return ThetaCoords{{Int(0), c1.u, c2.u, y, c1.v, c2.v}};
}

std::string Hypothesis::name() const {
    if (is_identity()) return "identity";
    std::string s;
    auto add = [&s](const std::string& part) { s += (s.empty() ? "" : "+") + part; };
    if (shift > 0) add("a+" + std::to_string(shift));
    if (shift < 0) add("a" + std::to_string(shift));
    if (swap) add("swap");
    if (flip_y1) add("flipY1");
    if (flip_y2) add("flipY2");
    return s;
}

std::vector<Hypothesis> default_hypotheses() {
    std::vector<Hypothesis> out;
    for (int shift : {0, 1, -1, 2, -2})
        for (bool swap : {false, true})
            for (int flip = 0; flip < 3; ++flip) out.push_back({shift, swap, flip == 1, flip == 2});
    return out;
}

AuditCell audit_cell(const Lemma1Entry& entry, const Hypothesis& h) {
    auto [y1, y2] = apply_hypothesis(h, entry.pair);
    AuditCell cell{h, {}, false};
    if (entry.pair.fixed_a) {
        Int a = *entry.pair.fixed_a + h.shift;
        MPoly f = thue_form(MPoly(a), MPoly(y1.u), MPoly(y2.u));
        Int value = f.constant_value();
        cell.value = value.get_str();
        cell.unit = abs(value) == 1;
        return cell;
    }
    const MPoly a = MPoly::var(Var::a) + MPoly(h.shift);
    if (entry.ring == Applicability::Rational) {
        MPoly f = thue_form(a, MPoly(y1.u), MPoly(y2.u));
        cell.value = f.to_string();
        cell.unit = f.is_constant() && abs(f.constant_value()) == 1;
        return cell;
    }
    const SymbolicRing ring = SymbolicRing::fixed(make_ring(*entry.required_d()));
    QuadSym f = thue_form(ring.make(a), ring.make(MPoly(y1.u), MPoly(y1.v)), ring.make(MPoly(y2.u), MPoly(y2.v)));
    cell.value = render(f);
    cell.unit = f.u().is_constant() && f.v().is_constant() && f.norm().is_constant() &&
                f.norm().constant_value() == 1;
    return cell;
}

Verdict AuditReport::overall() const {
    for (const auto* rows : {&independent, &dependent})
        for (const auto& r : *rows)
            if (r.verdict != Verdict::Pass) return Verdict::Flagged;
    return Verdict::Pass;
}

AuditReport audit_lemma1(const std::vector<Hypothesis>& hypotheses) {
    AuditReport report;
    auto audit_rows = [&](const std::vector<Lemma1Entry>& entries, std::vector<AuditRow>& out) {
        for (const auto& entry : entries) {
            AuditRow row;
            row.entry = entry;
            row.symbolic_a = !entry.pair.fixed_a.has_value();
            bool identity_unit = false;
            for (const auto& h : hypotheses) {
                AuditCell cell = audit_cell(entry, h);
                if (cell.unit) row.validating.push_back(h.name());
                if (h.is_identity()) identity_unit = cell.unit;
                row.cells.push_back(std::move(cell));
            }
            row.verdict = identity_unit ? Verdict::Pass : Verdict::Flagged;
            out.push_back(std::move(row));
        }
    };
    const Lemma1Catalog& catalog = lemma1_entries();
    audit_rows(catalog.independent, report.independent);
    audit_rows(catalog.dependent, report.dependent);

    for (const auto& h : hypotheses) {
        bool all = !report.dependent.empty();
        for (const auto& row : report.dependent) {
            bool hit = false;
            for (const auto& cell : row.cells)
                if (cell.hypothesis == h) hit = cell.unit;
            all = all && hit;
        }
        if (all) report.uniform_hypotheses.push_back(h.name());
    }
    return report;
}

VerificationRow verify_theorem2_entry(const Theorem2Entry& entry) {
    VerificationRow row;
    row.entry = entry;
    row.coords = entry.coords();
    row.index = abs_index_detail(make_params(entry.a, Int(1)), row.coords);
    row.verdict = row.index.index == 1 ? Verdict::Pass : Verdict::Failed;
    return row;
}

VerificationReport verify_theorem2() {
    VerificationReport report;
    for (const auto& entry : theorem2_entries()) report.rows.push_back(verify_theorem2_entry(entry));
    return report;
}

Verdict VerificationReport::overall() const {
    for (const auto& r : rows)
        if (r.verdict != Verdict::Pass) return Verdict::Failed;
    return rows.empty() ? Verdict::Failed : Verdict::Pass;
}

std::string catalog_csv() {
    std::ostringstream os;
    os << "catalog,kind,a,y,first,second,ring,label\n";
    const Lemma1Catalog& l = lemma1_entries();
    for (const auto& e : l.independent)
        os << "lemma1,independent,all,," << to_string(e.pair.y1) << ',' << to_string(e.pair.y2) << ','
           << to_string(e.ring) << ",\"" << e.label << "\"\n";
    for (const auto& e : l.dependent)
        os << "lemma1,dependent," << e.pair.fixed_a->get_str() << ",," << to_string(e.pair.y1) << ','
           << to_string(e.pair.y2) << ',' << to_string(e.ring) << ",\"" << e.label << "\"\n";
    for (const auto& e : theorem2_entries())
        os << "theorem2,generator," << e.a.get_str() << ',' << e.y.get_str() << ',' << to_string(e.x1.at(e.a))
           << ',' << to_string(e.x2.at(e.a)) << ",gaussian,\"" << e.label << "\"\n";
    return os.str();
}

}  // namespace sextic
