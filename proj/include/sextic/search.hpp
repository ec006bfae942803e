#ifndef SEXTIC_SEARCH_HPP
#define SEXTIC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sextic/catalog.hpp"
#include "sextic/sextic_core.hpp"

namespace sextic {

struct SearchBox {
    int coord_bound = 3;  // |u|, |v| <= B per QuadInt, |xi|, |yi| <= B per integer coordinate
    int y0_bound = 100;
};

inline constexpr int kDefaultThueBound = 10;
inline constexpr int kDefaultGeneratorBound = 3;
inline constexpr int kDefaultCaseYMax = 100;

struct ThueSearchResult {
    std::vector<SolutionPair> solutions;  // sign-orbit representatives, sorted
    std::uint64_t evaluated = 0;          // (2B+1)^4
};

/// Every (Y1, Y2) in the box with N(F(Y1, Y2)) = 1, one per sign orbit.
ThueSearchResult thue_solutions(const Int& a, const RingDesc& ring, int bound);

struct GeneratorSearchResult {
    std::vector<GeneratorRecord> generators;  // canonical, sorted
    std::uint64_t evaluated = 0;              // (2B+1)^5
    std::uint64_t relative_generators = 0;    // points with rel_index = 1
};

/// Exhaustive: x0 = 0, the other five coordinates in [-B, B], abs_index = 1.
GeneratorSearchResult generator_search(const Int& a, const RingDesc& ring, int bound);

enum class SolutionSource { ThueSearch, Catalog };

struct PipelineOptions {
    int y0_bound = 5;
    SolutionSource source = SolutionSource::ThueSearch;
    int thue_bound = kDefaultThueBound;
};

/// Thue solutions -> xy_transform -> unit twist -> y0 scan keeping J = 1,
/// every kept record re-verified with abs_index = 1.
std::vector<GeneratorRecord> generators_from_solutions(const Int& a, const RingDesc& ring,
                                                       const PipelineOptions& options);

struct PmOneSolutions {
    std::set<Int> plus_one;   // p(n) = 1
    std::set<Int> minus_one;  // p(n) = -1
};

/// Integer solutions of p(n) = +-1 via integer_roots(p -+ 1).
PmOneSolutions solve_poly_pm1(const IntPoly& p);

// ---------------------------------------------------------------------------
// Case analyses

enum class CaseId { I1, I2, II, II1, III, III1, IV };
std::string_view to_string(CaseId c);
CaseId parse_case(std::string_view s);

struct AuditItem {
    std::string name;
    std::string printed;
    std::string derived;
    Verdict verdict = Verdict::Pass;
    std::string note;
};

struct Derivation {
    std::string pair;      // printed label of (Y1, Y2)
    std::string epsilon;   // unit, "u+v*w"
    std::string setting;   // symbolic ring / fixed parameters
    MPoly j;               // J(theta) as a polynomial
    bool y0_cube_divides = false;
    std::optional<MPoly> j1;  // J / y0^3
    std::optional<MPoly> j2;  // J1 at y0 = 1
    std::optional<MPoly> j2_in_k;
    std::string note;
};

struct DiscriminantAnalysis {
    std::string equation;   // e.g. "J2 - 1 = 0"
    std::string variable;   // d or e
    MPoly discriminant;     // in d (or e), quadratic formula b^2 - 4ac
    Int threshold;          // beyond it the leading term dominates
    Int first_admissible;   // smallest parameter value checked directly
    bool negative_for_all_admissible = false;
    std::vector<std::string> exceptions;  // admissible values with disc >= 0
};

struct ResidueCell {
    int a_mod4;
    int d_mod4;
    int j2_mod4;
};

struct CaseReport {
    CaseId id = CaseId::I1;
    std::string bound_label;
    std::vector<Derivation> derivations;
    std::vector<AuditItem> audits;
    std::vector<DiscriminantAnalysis> discriminants;
    std::vector<ResidueCell> residues;
    std::vector<GeneratorRecord> solutions;  // each re-verified with abs_index = 1
    std::vector<std::string> rejected;       // J = 1 points whose absolute index is not 1
    // II.1 and III.1: classes already produced by case II or III, kept apart from `solutions`.
    std::vector<GeneratorRecord> covered;
    std::string covered_by;
    std::vector<std::string> notes;
    bool matches_published = false;
    std::string conclusion;

    Verdict verdict() const;
};

CaseReport case_I_analysis(CaseId which);

/// Cases II, II.1, III, III.1 scan y0 in [-y_max, y_max]; case IV needs no bound.
CaseReport case_d1_d3_analysis(CaseId scope, int y_max = kDefaultCaseYMax);

CaseReport case_analysis(CaseId id, int y_max = kDefaultCaseYMax);

/// Equivalence classes of Theorem 2 rows, restricted to the given a (all when nullopt).
std::set<std::pair<Int, ThetaCoords>> theorem2_classes(std::optional<Int> a = std::nullopt);

}  // namespace sextic

#endif
