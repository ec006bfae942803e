#ifndef SEXTIC_CATALOG_HPP
#define SEXTIC_CATALOG_HPP

// Published solution tables, transcribed verbatim, plus the audits that
// recompute them. Transcription lives in catalog.cpp only; nothing here
// corrects an entry, mismatches surface as FLAGGED verdicts.

#include <string>
#include <vector>

#include "sextic/sextic_core.hpp"

namespace sextic {

enum class Verdict { Pass, Flagged, Failed };
std::string_view to_string(Verdict v);

enum class Applicability { Rational, Gaussian, Eisenstein };
std::string_view to_string(Applicability a);

struct Lemma1Entry {
    SolutionPair pair;
    Applicability ring = Applicability::Rational;
    std::string label;  // as printed

    // d = 1 for Gaussian, d = 3 for Eisenstein entries, nullopt for rational ones.
    std::optional<Int> required_d() const;
};

struct Lemma1Catalog {
    std::vector<Lemma1Entry> independent;  // 12 entries valid for every a
    std::vector<Lemma1Entry> dependent;    // 24 (a, Y1, Y2) triples
};

const Lemma1Catalog& lemma1_entries();

// (u0 + u1 a) + (v0 + v1 a) i, the shape of the printed X1, X2.
struct LinearQuad {
    Int u0, u1, v0, v1;
    QuadCoord at(const Int& a) const { return {u0 + u1 * a, v0 + v1 * a}; }
};

struct Theorem2Entry {
    Int a;
    Int y;
    LinearQuad x1;
    LinearQuad x2;
    std::string label;  // as printed

    // theta = y i + X1 al + X2 al^2 in the d = 1 order, x0 = 0.
    ThetaCoords coords() const;
};

const std::vector<Theorem2Entry>& theorem2_entries();

// A reading of a printed triple: evaluate F at a + shift on the possibly
// swapped and sign-flipped pair.
struct Hypothesis {
    int shift = 0;
    bool swap = false;
    bool flip_y1 = false;
    bool flip_y2 = false;

    bool is_identity() const { return shift == 0 && !swap && !flip_y1 && !flip_y2; }
    std::string name() const;
    friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// The pair the hypothesis reads from a printed entry (swap, then flips).
std::pair<QuadCoord, QuadCoord> apply_hypothesis(const Hypothesis& h, const SolutionPair& p);

/// Shifts {0, +-1, +-2} x swap x {no flip, flip Y1, flip Y2}; identity first.
std::vector<Hypothesis> default_hypotheses();

struct AuditCell {
    Hypothesis hypothesis;
    std::string value;  // exact evaluated F (polynomial in a for symbolic entries)
    bool unit = false;
};

struct AuditRow {
    Lemma1Entry entry;
    bool symbolic_a = false;
    std::vector<AuditCell> cells;
    std::vector<std::string> validating;  // hypotheses under which F is a unit
    Verdict verdict = Verdict::Flagged;   // PASS iff the identity reading gives a unit
};

struct AuditReport {
    std::vector<AuditRow> independent;
    std::vector<AuditRow> dependent;
    // Hypotheses that validate every dependent triple.
    std::vector<std::string> uniform_hypotheses;
    Verdict overall() const;
};

AuditReport audit_lemma1(const std::vector<Hypothesis>& hypotheses = default_hypotheses());

/// F evaluated for one entry under one hypothesis. Symbolic in a for entries
/// without a fixed a; returns the rendered value and the unit verdict.
AuditCell audit_cell(const Lemma1Entry& entry, const Hypothesis& h);

struct VerificationRow {
    Theorem2Entry entry;
    ThetaCoords coords;
    IndexBreakdown index;
    Verdict verdict = Verdict::Failed;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    Verdict overall() const;
};

VerificationReport verify_theorem2();
VerificationRow verify_theorem2_entry(const Theorem2Entry& entry);

/// Both catalogs, one row per entry.
std::string catalog_csv();

}  // namespace sextic

#endif
