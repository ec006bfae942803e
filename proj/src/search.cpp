#include "sextic/search.hpp"

#include <algorithm>
#include <tuple>

namespace sextic {

namespace {

// All ring elements u + v w with |u|, |v| <= bound, in lexicographic (u, v) order.
std::vector<QuadInt> box_elements(const RingDesc& ring, int bound) {
    std::vector<QuadInt> out;
    for (int u = -bound; u <= bound; ++u)
        for (int v = -bound; v <= bound; ++v) out.push_back(ring.make(u, v));
    return out;
}

bool is_orbit_representative(const QuadInt& y1, const QuadInt& y2) {
    for (const Int* x : {&y1.u(), &y1.v(), &y2.u(), &y2.v()})
        if (sgn(*x) != 0) return sgn(*x) > 0;
    return false;
}

auto pair_key(const SolutionPair& p) { return std::tie(p.y1, p.y2); }

}  // namespace

ThueSearchResult thue_solutions(const Int& a, const RingDesc& ring, int bound) {
    if (bound < 1) throw Error(ErrorKind::InvalidArgument, "box bound must be >= 1");
    const std::vector<QuadInt> elems = box_elements(ring, bound);
    std::vector<QuadInt> squares, cubes;
    for (const auto& y : elems) {
        squares.push_back(y * y);
        cubes.push_back(squares.back() * y);
    }
    const Int a3 = a + 3;
    ThueSearchResult result;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
            ++result.evaluated;
            // F = Y1^3 - a Y1^2 Y2 - (a+3) Y1 Y2^2 - Y2^3
            QuadInt f = cubes[i] - squares[i] * elems[j] * a - elems[i] * squares[j] * a3 - cubes[j];
            if (f.norm() != 1) continue;
            if (!is_orbit_representative(elems[i], elems[j])) continue;
            result.solutions.push_back(
                SolutionPair{QuadCoord::of(elems[i]), QuadCoord::of(elems[j]), a, Provenance::BruteForce});
        }
    }
    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const SolutionPair& l, const SolutionPair& r) { return pair_key(l) < pair_key(r); });
    return result;
}

GeneratorSearchResult generator_search(const Int& a, const RingDesc& ring, int bound) {
    if (bound < 1) throw Error(ErrorKind::InvalidArgument, "box bound must be >= 1");
    const FamilyParams params{a, ring};
    const std::vector<QuadInt> elems = box_elements(ring, bound);
    const std::uint64_t side = static_cast<std::uint64_t>(2 * bound + 1);
    GeneratorSearchResult result;
    std::set<GeneratorRecord> found;
    for (const auto& c1 : elems) {
        for (const auto& c2 : elems) {
            // The relative index does not involve c0; I = rel * J so rel != 1 rules out every y0.
            result.evaluated += side;
            if (rel_index(params, c1, c2) != 1) continue;
            for (int y0 = -bound; y0 <= bound; ++y0) {
                ++result.relative_generators;
                ThetaCoords coords = ThetaCoords::from_relative(ring.make(0, y0), c1, c2);
                if (coords.canonical() != coords) continue;
                if (j_factor(params, coords) != 1) continue;
                GeneratorRecord rec = make_generator_record(params, coords);
                if (rec.index == 1) found.insert(rec);
            }
        }
    }
    result.generators.assign(found.begin(), found.end());
    return result;
}

std::vector<GeneratorRecord> generators_from_solutions(const Int& a, const RingDesc& ring,
                                                       const PipelineOptions& options) {
    const FamilyParams params{a, ring};
    std::vector<SolutionPair> pairs;
    if (options.source == SolutionSource::ThueSearch) {
        pairs = thue_solutions(a, ring, options.thue_bound).solutions;
    } else {
        const Lemma1Catalog& catalog = lemma1_entries();
        for (const auto& e : catalog.independent) {
            auto need = e.required_d();
            if (!need || *need == ring.d()) pairs.push_back(e.pair);
        }
        for (const auto& e : catalog.dependent)
            if (*e.pair.fixed_a == a) pairs.push_back(e.pair);
    }
    std::set<GeneratorRecord> found;
    const auto unit_list = units(ring);
    for (const auto& pair : pairs) {
        auto [x1, x2] = xy_transform(a, pair.y1.in(ring), pair.y2.in(ring));
        for (const auto& eps : unit_list) {
            QuadInt c1 = eps * x1, c2 = eps * x2;
            for (int y0 = -options.y0_bound; y0 <= options.y0_bound; ++y0) {
                ThetaCoords coords = ThetaCoords::from_relative(ring.make(0, y0), c1, c2);
                if (j_factor(params, coords) != 1) continue;
                GeneratorRecord rec = make_generator_record(params, Int(y0), x1, x2, eps);
                if (rec.index == 1) found.insert(rec);
            }
        }
    }
    return {found.begin(), found.end()};
}

PmOneSolutions solve_poly_pm1(const IntPoly& p) {
    IntPoly minus = p, plus = p;
    if (minus.empty()) minus.push_back(0), plus.push_back(0);
    minus[0] -= 1;
    plus[0] += 1;
    return {integer_roots(minus), integer_roots(plus)};
}

std::set<std::pair<Int, ThetaCoords>> theorem2_classes(std::optional<Int> a) {
    std::set<std::pair<Int, ThetaCoords>> out;
    for (const auto& e : theorem2_entries())
        if (!a || e.a == *a) out.emplace(e.a, e.coords().canonical());
    return out;
}

}  // namespace sextic
