#include "sextic/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "sextic/report.hpp"

namespace sextic {

namespace {

struct Options {
    std::string a = "0";
    std::string d = "1";
    std::string coords;
    int bound = 0;
    int y0_bound = 0;
    std::string scope;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 1;
    int random = 0;
    std::string method = "exhaustive";
    std::string source = "thue";
};

struct Outcome {
    Json result;
    Json parameters;
    Verdict verdict = Verdict::Pass;
    std::string csv;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json ad_params(const Options& o) {
    Json p;
    p["a"] = o.a;
    p["d"] = o.d;
    return p;
}

FamilyParams family(const Options& o) { return make_params(parse_int(o.a), parse_int(o.d)); }

std::string index_csv_header() { return "a,d,x0,x1,x2,y0,y1,y2,rel_index,j_factor,index\n"; }

std::string index_csv_row(const Options& o, const ThetaCoords& c, const IndexBreakdown& b) {
    std::ostringstream os;
    os << o.a << ',' << o.d;
    for (const auto& x : c.c) os << ',' << x.get_str();
    os << ',' << b.rel_index.get_str() << ',' << b.j_factor.get_str() << ',' << b.index.get_str() << '\n';
    return os.str();
}

Outcome cmd_audit(const Options&) {
    AuditReport r = audit_lemma1();
    return {to_json(r), Json::object(), r.overall(), audit_csv(r)};
}

Outcome cmd_verify(const Options&) {
    VerificationReport r = verify_theorem2();
    return {to_json(r), Json::object(), r.overall(), verification_csv(r)};
}

Outcome cmd_rel_index(const Options& o) {
    if (o.coords.empty()) throw UsageError("--coords is required");
    FamilyParams params = family(o);
    ThetaCoords c = parse_coords(o.coords);
    auto rel = c.relative(params.ring);
    Int value = rel_index(params, rel[1], rel[2]);
    Json p = ad_params(o);
    p["coords"] = o.coords;
    Json r;
    r["coords"] = to_json(c);
    r["rel_index"] = value.get_str();
    std::ostringstream csv;
    csv << "a,d,x0,x1,x2,y0,y1,y2,rel_index\n" << o.a << ',' << o.d;
    for (const auto& x : c.c) csv << ',' << x.get_str();
    csv << ',' << value.get_str() << '\n';
    return {r, p, Verdict::Pass, csv.str()};
}

Outcome cmd_abs_index(const Options& o) {
    FamilyParams params = family(o);
    Json p = ad_params(o);
    if (o.random > 0) {
        p["random"] = std::to_string(o.random);
        p["seed"] = std::to_string(o.seed);
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> dist(-5, 5);
        Json rows = Json::array();
        std::string csv = index_csv_header();
        Verdict verdict = Verdict::Pass;
        for (int k = 0; k < o.random; ++k) {
            ThetaCoords c;
            for (auto& x : c.c) x = dist(rng);
            Json row;
            row["coords"] = to_json(c);
            try {
                IndexBreakdown b = abs_index_detail(params, c);
                row["index"] = to_json(b);
                csv += index_csv_row(o, c, b);
            } catch (const Error& e) {
                row["error"] = e.what();
                verdict = Verdict::Failed;
            }
            rows.push_back(std::move(row));
        }
        Json r;
        r["rows"] = std::move(rows);
        return {r, p, verdict, csv};
    }
    if (o.coords.empty()) throw UsageError("--coords or --random is required");
    p["coords"] = o.coords;
    ThetaCoords c = parse_coords(o.coords);
    Json r;
    r["coords"] = to_json(c);
    try {
        IndexBreakdown b = abs_index_detail(params, c);
        r["index"] = to_json(b);
        return {r, p, Verdict::Pass, index_csv_header() + index_csv_row(o, c, b)};
    } catch (const Error& e) {
        r["error"] = e.what();
        return {r, p, Verdict::Failed, index_csv_header()};
    }
}

Outcome cmd_thue(const Options& o) {
    const int bound = o.bound > 0 ? o.bound : kDefaultThueBound;
    FamilyParams params = family(o);
    ThueSearchResult r = thue_solutions(params.a, params.ring, bound);
    Json p = ad_params(o);
    p["bound"] = std::to_string(bound);
    return {to_json(r), p, Verdict::Pass, solutions_csv(r.solutions)};
}

Outcome cmd_gen(const Options& o) {
    FamilyParams params = family(o);
    Json p = ad_params(o);
    p["method"] = o.method;
    if (o.method == "pipeline") {
        PipelineOptions opts;
        opts.y0_bound = o.y0_bound > 0 ? o.y0_bound : opts.y0_bound;
        opts.thue_bound = o.bound > 0 ? o.bound : opts.thue_bound;
        opts.source = o.source == "catalog" ? SolutionSource::Catalog : SolutionSource::ThueSearch;
        p["source"] = o.source;
        p["bound"] = std::to_string(opts.thue_bound);
        p["y0_bound"] = std::to_string(opts.y0_bound);
        auto gens = generators_from_solutions(params.a, params.ring, opts);
        Json r;
        Json list = Json::array();
        for (const auto& g : gens) list.push_back(to_json(g));
        r["generators"] = std::move(list);
        return {r, p, Verdict::Pass, generators_csv(gens)};
    }
    const int bound = o.bound > 0 ? o.bound : kDefaultGeneratorBound;
    p["bound"] = std::to_string(bound);
    GeneratorSearchResult r = generator_search(params.a, params.ring, bound);
    return {to_json(r), p, Verdict::Pass, generators_csv(r.generators)};
}

Outcome cmd_case(const Options& o) {
    if (o.scope.empty()) throw UsageError("--scope is required");
    CaseId id = parse_case(o.scope);
    const int y_max = o.y0_bound > 0 ? o.y0_bound : kDefaultCaseYMax;
    CaseReport r = case_analysis(id, y_max);
    Json p;
    p["scope"] = std::string(to_string(id));
    p["y0_bound"] = std::to_string(y_max);
    return {to_json(r), p, r.verdict(), generators_csv(r.solutions)};
}

Outcome cmd_export(const Options&) { return {catalog_json(), Json::object(), Verdict::Pass, catalog_csv()}; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Index computations and monogenity checks for the sextic family"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1, 1);
    Options o;

    auto add_ad = [&](CLI::App* sub) {
        sub->add_option("--a", o.a, "family parameter a")->capture_default_str();
        sub->add_option("--d", o.d, "square-free d >= 1")->capture_default_str();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "write the report to this file");
        sub->add_option("--format", o.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };

    struct Entry {
        CLI::App* sub;
        Outcome (*fn)(const Options&);
    };
    std::vector<Entry> cmds;

    auto* audit = app.add_subcommand("audit-lemma1", "audit the Lemma 1 catalog under normalization hypotheses");
    add_common(audit);
    cmds.push_back({audit, cmd_audit});

    auto* verify = app.add_subcommand("verify-theorem2", "recompute the index of every Theorem 2 generator");
    add_common(verify);
    cmds.push_back({verify, cmd_verify});

    auto* rel = app.add_subcommand("rel-index", "relative index of theta");
    add_ad(rel);
    rel->add_option("--coords", o.coords, "x0,x1,x2,y0,y1,y2");
    add_common(rel);
    cmds.push_back({rel, cmd_rel_index});

    auto* absi = app.add_subcommand("abs-index", "absolute index of theta with its factorization");
    add_ad(absi);
    absi->add_option("--coords", o.coords, "x0,x1,x2,y0,y1,y2");
    absi->add_option("--random", o.random, "check N seeded random coordinate vectors")->check(CLI::PositiveNumber);
    absi->add_option("--seed", o.seed, "seed for --random")->capture_default_str();
    add_common(absi);
    cmds.push_back({absi, cmd_abs_index});

    auto* thue = app.add_subcommand("thue-search", "unit values of the relative Thue form in a box");
    add_ad(thue);
    thue->add_option("--bound", o.bound, "box bound B (default 10)")->check(CLI::PositiveNumber);
    add_common(thue);
    cmds.push_back({thue, cmd_thue});

    auto* gen = app.add_subcommand("gen-search", "generators of power integral bases");
    add_ad(gen);
    gen->add_option("--bound", o.bound, "coordinate bound (default 3) or Thue bound for the pipeline")
        ->check(CLI::PositiveNumber);
    gen->add_option("--y0-bound", o.y0_bound, "y0 range of the pipeline (default 5)")->check(CLI::PositiveNumber);
    gen->add_option("--method", o.method, "exhaustive or pipeline")
        ->check(CLI::IsMember({"exhaustive", "pipeline"}))
        ->capture_default_str();
    gen->add_option("--source", o.source, "pipeline input: thue or catalog")
        ->check(CLI::IsMember({"thue", "catalog"}))
        ->capture_default_str();
    add_common(gen);
    cmds.push_back({gen, cmd_gen});

    auto* cases = app.add_subcommand("case-analysis", "case analysis I1, I2, II, II1, III, III1 or IV");
    cases->add_option("--scope", o.scope, "case id")->required();
    cases->add_option("--y0-bound", o.y0_bound, "y0 range for cases II to III.1 (default 100)")
        ->check(CLI::PositiveNumber);
    add_common(cases);
    cmds.push_back({cases, cmd_case});

    auto* exp = app.add_subcommand("export-catalog", "both published tables");
    add_common(exp);
    cmds.push_back({exp, cmd_export});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        for (const auto& c : cmds) {
            if (!c.sub->parsed()) continue;
            Outcome res = c.fn(o);
            std::string text;
            if (o.format == "csv") {
                text = res.csv;
            } else {
                text = envelope(c.sub->get_name(), std::move(res.parameters), std::move(res.result), res.verdict)
                           .dump(2) +
                       "\n";
            }
            if (o.out.empty()) {
                out << text;
            } else {
                std::ofstream f(o.out, std::ios::binary);
                if (!f) {
                    err << "error: cannot open " << o.out << "\n";
                    return 2;
                }
                f << text;
            }
            return res.verdict == Verdict::Pass ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::ParseError:
            case ErrorKind::InvalidArgument:
            case ErrorKind::NotSquareFree:
            case ErrorKind::NegativeInput:
                err << "error: " << e.what() << "\n";
                return 2;
            default:
                err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
                return 1;
        }
    }
    return 2;
}

}  // namespace sextic
