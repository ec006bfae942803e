#include "sextic/report.hpp"

#include <sstream>

namespace sextic {

namespace {

std::string s(const Int& x) { return x.get_str(); }

std::string verdict_str(Verdict v) { return std::string(to_string(v)); }

Json strings(const std::vector<std::string>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x);
    return out;
}

Json lemma1_json(const Lemma1Entry& e) {
    Json j;
    j["label"] = e.label;
    j["ring"] = std::string(to_string(e.ring));
    j["pair"] = to_json(e.pair);
    return j;
}

Json audit_row_json(const AuditRow& row) {
    Json j = lemma1_json(row.entry);
    j["symbolic_a"] = row.symbolic_a;
    Json cells = Json::array();
    for (const auto& c : row.cells) {
        Json cell;
        cell["hypothesis"] = c.hypothesis.name();
        cell["value"] = c.value;
        cell["unit"] = c.unit;
        cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
    j["validating"] = strings(row.validating);
    j["verdict"] = verdict_str(row.verdict);
    return j;
}

std::string quote(const std::string& x) {
    std::string out = "\"";
    for (char c : x) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

const char* version() { return SEXTIC_VERSION; }

Json to_json(const QuadCoord& q) { return Json::array({s(q.u), s(q.v)}); }

Json to_json(const ThetaCoords& c) {
    Json out = Json::array();
    for (const auto& x : c.c) out.push_back(s(x));
    return out;
}

Json to_json(const SolutionPair& p) {
    Json j;
    j["y1"] = to_json(p.y1);
    j["y2"] = to_json(p.y2);
    j["a"] = p.fixed_a ? Json(s(*p.fixed_a)) : Json(nullptr);
    j["provenance"] = std::string(to_string(p.provenance));
    return j;
}

Json to_json(const GeneratorRecord& g) {
    Json j;
    j["a"] = s(g.a);
    j["d"] = s(g.d);
    j["y0"] = s(g.y0);
    j["x1"] = to_json(g.x1);
    j["x2"] = to_json(g.x2);
    j["epsilon"] = to_json(g.epsilon);
    j["index"] = s(g.index);
    j["coords"] = to_json(g.coords);
    return j;
}

Json to_json(const IndexBreakdown& b) {
    Json j;
    j["rel_index"] = s(b.rel_index);
    j["j_factor"] = s(b.j_factor);
    j["index"] = s(b.index);
    j["product_disc"] = s(b.product_disc);
    j["order_disc"] = s(b.order_disc);
    return j;
}

Json to_json(const AuditReport& r) {
    Json j;
    Json ind = Json::array(), dep = Json::array();
    for (const auto& row : r.independent) ind.push_back(audit_row_json(row));
    for (const auto& row : r.dependent) dep.push_back(audit_row_json(row));
    j["independent"] = std::move(ind);
    j["dependent"] = std::move(dep);
    j["uniform_hypotheses"] = strings(r.uniform_hypotheses);
    return j;
}

Json to_json(const VerificationReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json j;
        j["label"] = row.entry.label;
        j["a"] = s(row.entry.a);
        j["coords"] = to_json(row.coords);
        j["index"] = to_json(row.index);
        j["verdict"] = verdict_str(row.verdict);
        rows.push_back(std::move(j));
    }
    Json out;
    out["rows"] = std::move(rows);
    return out;
}

Json to_json(const CaseReport& r) {
    Json j;
    j["case"] = std::string(to_string(r.id));
    j["bound"] = r.bound_label;
    Json ders = Json::array();
    for (const auto& d : r.derivations) {
        Json dj;
        dj["pair"] = d.pair;
        dj["epsilon"] = d.epsilon;
        dj["setting"] = d.setting;
        dj["J"] = d.j.to_string();
        dj["y0_cube_divides"] = d.y0_cube_divides;
        if (d.j1) dj["J1"] = d.j1->to_string();
        if (d.j2) dj["J2"] = d.j2->to_string();
        if (d.j2_in_k) dj["J2_in_K"] = d.j2_in_k->to_string();
        if (!d.note.empty()) dj["note"] = d.note;
        ders.push_back(std::move(dj));
    }
    j["derivations"] = std::move(ders);
    Json audits = Json::array();
    for (const auto& a : r.audits) {
        Json aj;
        aj["name"] = a.name;
        aj["printed"] = a.printed;
        aj["derived"] = a.derived;
        aj["verdict"] = verdict_str(a.verdict);
        if (!a.note.empty()) aj["note"] = a.note;
        audits.push_back(std::move(aj));
    }
    j["audits"] = std::move(audits);
    Json discs = Json::array();
    for (const auto& d : r.discriminants) {
        Json dj;
        dj["equation"] = d.equation;
        dj["variable"] = d.variable;
        dj["discriminant"] = d.discriminant.to_string();
        dj["first_checked"] = s(d.first_admissible);
        dj["threshold"] = s(d.threshold);
        dj["negative_for_all_admissible"] = d.negative_for_all_admissible;
        dj["exceptions"] = strings(d.exceptions);
        discs.push_back(std::move(dj));
    }
    j["discriminants"] = std::move(discs);
    if (!r.residues.empty()) {
        Json res = Json::array();
        for (const auto& c : r.residues) res.push_back(Json::array({c.a_mod4, c.d_mod4, c.j2_mod4}));
        j["residues_mod4"] = std::move(res);
    }
    Json sols = Json::array();
    for (const auto& g : r.solutions) sols.push_back(to_json(g));
    j["solutions"] = std::move(sols);
    if (!r.covered_by.empty()) {
        Json cov = Json::array();
        for (const auto& g : r.covered) cov.push_back(to_json(g));
        j["covered_by"] = r.covered_by;
        j["covered"] = std::move(cov);
    }
    j["rejected"] = strings(r.rejected);
    j["notes"] = strings(r.notes);
    j["matches_published"] = r.matches_published;
    j["conclusion"] = r.conclusion;
    return j;
}

Json to_json(const ThueSearchResult& r) {
    Json j;
    j["evaluated"] = std::to_string(r.evaluated);
    Json sols = Json::array();
    for (const auto& p : r.solutions) sols.push_back(to_json(p));
    j["solutions"] = std::move(sols);
    return j;
}

Json to_json(const GeneratorSearchResult& r) {
    Json j;
    j["evaluated"] = std::to_string(r.evaluated);
    j["relative_generators"] = std::to_string(r.relative_generators);
    Json gens = Json::array();
    for (const auto& g : r.generators) gens.push_back(to_json(g));
    j["generators"] = std::move(gens);
    return j;
}

Json catalog_json() {
    Json j;
    const Lemma1Catalog& l = lemma1_entries();
    Json ind = Json::array(), dep = Json::array(), t2 = Json::array();
    for (const auto& e : l.independent) ind.push_back(lemma1_json(e));
    for (const auto& e : l.dependent) dep.push_back(lemma1_json(e));
    for (const auto& e : theorem2_entries()) {
        Json row;
        row["label"] = e.label;
        row["a"] = s(e.a);
        row["y"] = s(e.y);
        row["x1"] = to_json(e.x1.at(e.a));
        row["x2"] = to_json(e.x2.at(e.a));
        row["coords"] = to_json(e.coords());
        t2.push_back(std::move(row));
    }
    j["lemma1_independent"] = std::move(ind);
    j["lemma1_dependent"] = std::move(dep);
    j["theorem2"] = std::move(t2);
    return j;
}

Json envelope(const std::string& command, Json parameters, Json result, Verdict verdict) {
    Json j;
    j["tool"] = "sextic";
    j["version"] = version();
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    j["result"] = std::move(result);
    j["verdict"] = verdict_str(verdict);
    return j;
}

std::string solutions_csv(const std::vector<SolutionPair>& rows) {
    std::ostringstream os;
    os << "y1_u,y1_v,y2_u,y2_v,a,provenance\n";
    for (const auto& p : rows)
        os << s(p.y1.u) << ',' << s(p.y1.v) << ',' << s(p.y2.u) << ',' << s(p.y2.v) << ','
           << (p.fixed_a ? s(*p.fixed_a) : std::string()) << ',' << to_string(p.provenance) << '\n';
    return os.str();
}

std::string generators_csv(const std::vector<GeneratorRecord>& rows) {
    std::ostringstream os;
    os << "a,d,x0,x1,x2,y0,y1,y2,index\n";
    for (const auto& g : rows) {
        os << s(g.a) << ',' << s(g.d);
        for (const auto& x : g.coords.c) os << ',' << s(x);
        os << ',' << s(g.index) << '\n';
    }
    return os.str();
}

std::string audit_csv(const AuditReport& r) {
    std::ostringstream os;
    os << "kind,label,ring,hypothesis,value,unit,verdict\n";
    auto rows = [&](const char* kind, const std::vector<AuditRow>& v) {
        for (const auto& row : v)
            for (const auto& c : row.cells)
                os << kind << ',' << quote(row.entry.label) << ',' << to_string(row.entry.ring) << ','
                   << c.hypothesis.name() << ',' << quote(c.value) << ',' << (c.unit ? "true" : "false") << ','
                   << to_string(row.verdict) << '\n';
    };
    rows("independent", r.independent);
    rows("dependent", r.dependent);
    return os.str();
}

std::string verification_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "label,a,x0,x1,x2,y0,y1,y2,rel_index,j_factor,index,verdict\n";
    for (const auto& row : r.rows) {
        os << quote(row.entry.label) << ',' << s(row.entry.a);
        for (const auto& x : row.coords.c) os << ',' << s(x);
        os << ',' << s(row.index.rel_index) << ',' << s(row.index.j_factor) << ',' << s(row.index.index) << ','
           << to_string(row.verdict) << '\n';
    }
    return os.str();
}

}  // namespace sextic
