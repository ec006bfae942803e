#ifndef SEXTIC_SEXTIC_CORE_HPP
#define SEXTIC_SEXTIC_CORE_HPP

#include <array>
#include <compare>
#include <tuple>
#include <optional>
#include <string>
#include <utility>

#include "sextic/elimination.hpp"
#include "sextic/quadring.hpp"
#include "sextic/upoly.hpp"

namespace sextic {

// Family member K = Q(i sqrt d)(alpha), f(alpha) = 0, f = x^3 - a x^2 - (a+3) x - 1.
struct FamilyParams {
    Int a;
    RingDesc ring;

    // a^2 + 3a + 9; D(f) is its square.
    Int k_value() const { return a * a + 3 * a + 9; }
};

FamilyParams make_params(const Int& a, const Int& d);

// Integer coordinates of theta = x0 + x1 al + x2 al^2 + y0 w + y1 w al + y2 w al^2.
struct ThetaCoords {
    std::array<Int, 6> c{};  // x0, x1, x2, y0, y1, y2

    const Int& x0() const { return c[0]; }
    const Int& x1() const { return c[1]; }
    const Int& x2() const { return c[2]; }
    const Int& y0() const { return c[3]; }
    const Int& y1() const { return c[4]; }
    const Int& y2() const { return c[5]; }

    // (c0, c1, c2) with ck = xk + w yk.
    std::array<QuadInt, 3> relative(const RingDesc& ring) const;
    static ThetaCoords from_relative(const QuadInt& c0, const QuadInt& c1, const QuadInt& c2);

    ThetaCoords translated(const Int& t) const;
    ThetaCoords negated() const;
    // x0 dropped and the first nonzero remaining coordinate made positive.
    ThetaCoords canonical() const;

    std::string to_string() const;

    friend std::strong_ordering operator<=>(const ThetaCoords& l, const ThetaCoords& r) {
        for (std::size_t k = 0; k < 6; ++k)
            if (int c = cmp(l.c[k], r.c[k]); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const ThetaCoords&, const ThetaCoords&) = default;
};

/// Parses "x0,x1,x2,y0,y1,y2".
ThetaCoords parse_coords(std::string_view text);

// Ring-independent integer pair (u, v) meaning u + v w.
struct QuadCoord {
    Int u;
    Int v;

    QuadInt in(const RingDesc& ring) const { return ring.make(u, v); }
    static QuadCoord of(const QuadInt& q) { return {q.u(), q.v()}; }
    bool is_zero() const { return sgn(u) == 0 && sgn(v) == 0; }
    QuadCoord operator-() const { return {-u, -v}; }

    friend std::strong_ordering operator<=>(const QuadCoord& l, const QuadCoord& r) {
        if (int c = cmp(l.u, r.u); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp(l.v, r.v);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    friend bool operator==(const QuadCoord&, const QuadCoord&) = default;
};

std::string to_string(const QuadCoord& q);

enum class Provenance { Lemma1Independent, Lemma1Dependent, BruteForce };
std::string_view to_string(Provenance p);

struct SolutionPair {
    QuadCoord y1;
    QuadCoord y2;
    std::optional<Int> fixed_a;  // nullopt: valid for all a
    Provenance provenance = Provenance::BruteForce;

    // Sign-orbit representative: (u1, v1, u2, v2) has a positive first nonzero entry.
    SolutionPair normalized() const;
};

struct GeneratorRecord {
    Int a;
    Int d;
    Int y0;
    QuadCoord x1;
    QuadCoord x2;
    QuadCoord epsilon;
    Int index;
    ThetaCoords coords;  // canonical

    // Ordering and equality follow the equivalence class (a, d, canonical coords).
    friend bool operator<(const GeneratorRecord& l, const GeneratorRecord& r) {
        return std::tie(l.a, l.d, l.coords) < std::tie(r.a, r.d, r.coords);
    }
    friend bool operator==(const GeneratorRecord& l, const GeneratorRecord& r) {
        return l.a == r.a && l.d == r.d && l.coords == r.coords;
    }
};

/// theta = w y0 + eps (X1 al + X2 al^2); index computed with abs_index.
GeneratorRecord make_generator_record(const FamilyParams& params, const Int& y0, const QuadInt& x1,
                                      const QuadInt& x2, const QuadInt& epsilon);
/// Record for arbitrary coordinates (x0 is dropped); X1, X2 read off the coordinates, eps = 1.
GeneratorRecord make_generator_record(const FamilyParams& params, const ThetaCoords& coords);

// ---------------------------------------------------------------------------
// Family polynomial

UPoly simplest_cubic(const MPoly& a);  // in Var::x

struct CubicAndDisc {
    UPoly f;
    Int disc;
};

/// f for a concrete a with disc(f); the disc is checked against (a^2+3a+9)^2.
CubicAndDisc simplest_cubic_and_disc(const Int& a);

/// discriminant(f) - (a^2+3a+9)^2 with a symbolic (the zero polynomial).
MPoly family_discriminant_defect();

// ---------------------------------------------------------------------------
// Relative Thue form F(Y1, Y2) = Y1^3 - a Y1^2 Y2 - (a+3) Y1 Y2^2 - Y2^3,
// the homogenization of f. It equals N_{K/M}(Y1 - alpha Y2).

template <class R>
R thue_form(const R& a, const R& y1, const R& y2) {
    R y1sq = y1 * y1, y2sq = y2 * y2;
    R a3 = a + a.one_like() * Int(3);
    return y1sq * y1 - a * y1sq * y2 - a3 * y1 * y2sq - y2sq * y2;
}

QuadInt thue_form(const Int& a, const QuadInt& y1, const QuadInt& y2);
MPoly thue_form(const MPoly& a, const MPoly& y1, const MPoly& y2);

// ---------------------------------------------------------------------------
// Relative characteristic polynomial prod_j (t - theta^(j)) of
// theta = c0 + c1 alpha + c2 alpha^2 over Z_M, from the multiplication matrix
// of theta on (1, alpha, alpha^2). Returns monic coefficients low to high.

template <class R>
std::array<R, 4> char_poly_rel(const R& a, const R& c0, const R& c1, const R& c2) {
    const R a3 = a + a.one_like() * Int(3);
    // theta * alpha expressed in (1, alpha, alpha^2) using alpha^3 = a al^2 + (a+3) al + 1.
    auto times_alpha = [&](const std::array<R, 3>& v) {
        return std::array<R, 3>{v[2], v[0] + a3 * v[2], v[1] + a * v[2]};
    };
    const std::array<R, 3> col0{c0, c1, c2};
    const std::array<R, 3> col1 = times_alpha(col0);
    const std::array<R, 3> col2 = times_alpha(col1);
    // m[row][col]
    auto m = [&](int r, int c) -> const R& {
        return c == 0 ? col0[static_cast<std::size_t>(r)]
                      : c == 1 ? col1[static_cast<std::size_t>(r)] : col2[static_cast<std::size_t>(r)];
    };
    R trace = m(0, 0) + m(1, 1) + m(2, 2);
    R minors = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) + (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) +
               (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1));
    R det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
            m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
            m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return {-det, minors, -trace, a.one_like()};
}

template <class T>
std::array<Quad<T>, 4> conjugate_coeffs(const std::array<Quad<T>, 4>& p) {
    return {p[0].conj(), p[1].conj(), p[2].conj(), p[3].conj()};
}

/// Res_t(P, conj P) = prod_{j1, j2} (theta^(1,j1) - theta^(2,j2)).
template <class T>
Quad<T> conjugate_resultant(const std::array<Quad<T>, 4>& p, DetMethod method = DetMethod::Bareiss) {
    const auto q = conjugate_coeffs(p);
    return resultant(std::span<const Quad<T>>(p), std::span<const Quad<T>>(q), p[3].one_like(), method);
}

std::array<QuadInt, 4> char_poly_rel(const Int& a, const QuadInt& c0, const QuadInt& c1,
                                     const QuadInt& c2);

// ---------------------------------------------------------------------------
// Indices

/// (O+ : Z_M[theta]+) = sqrt(N(disc_t P)) / D(f); independent of c0.
Int rel_index(const FamilyParams& params, const QuadInt& c1, const QuadInt& c2);

/// (Z_M[theta]+ : Z[theta]+) = sqrt(N(Res_t(P, conj P)) / |D_M|^3).
Int j_factor(const FamilyParams& params, const ThetaCoords& coords);

struct IndexBreakdown {
    Int rel_index;
    Int j_factor;
    Int index;
    Int product_disc;  // disc_t(P * conj P), rational integer
    Int order_disc;
};

/// Index via rel_index * j_factor, cross-checked with index^2 |D_O| = |disc(P conj P)|.
/// Throws CrossCheckFailed on disagreement.
IndexBreakdown abs_index_detail(const FamilyParams& params, const ThetaCoords& coords);
Int abs_index(const FamilyParams& params, const ThetaCoords& coords);

/// D(f)^2 * D_M^3.
Int order_disc(const FamilyParams& params);

// X1 = Y1 - a Y2, X2 = Y2 and back.
template <class R>
std::pair<R, R> xy_transform(const R& a, const R& y1, const R& y2) {
    return {y1 - a * y2, y2};
}
template <class R>
std::pair<R, R> xy_inverse(const R& a, const R& x1, const R& x2) {
    return {x1 + a * x2, x2};
}
std::pair<QuadInt, QuadInt> xy_transform(const Int& a, const QuadInt& y1, const QuadInt& y2);
std::pair<QuadInt, QuadInt> xy_inverse(const Int& a, const QuadInt& x1, const QuadInt& x2);

// ---------------------------------------------------------------------------
// Symbolic J

struct SymbolicSetup {
    SymbolicRing ring;
    std::optional<Int> fixed_a;  // nullopt keeps a free

    static SymbolicSetup branch_a() { return {SymbolicRing::branch_a(), std::nullopt}; }
    static SymbolicSetup branch_b() { return {SymbolicRing::branch_b(), std::nullopt}; }
    static SymbolicSetup fixed_d(const RingDesc& ring) { return {SymbolicRing::fixed(ring), std::nullopt}; }
};

/// J(theta) for theta = w y0 + eps (X1 al + X2 al^2), (X1, X2) = xy_transform(Y1, Y2),
/// as a polynomial in the free symbols (a unless fixed; d or e per branch; y0).
/// Normalized to a positive leading coefficient, so J(theta) = |result|.
/// Throws NotAPolynomialSquare / InternalInconsistency on pipeline failures.
MPoly symbolic_j(const SymbolicSetup& setup, const QuadCoord& y1, const QuadCoord& y2,
                 const QuadCoord& epsilon, DetMethod method = DetMethod::Bareiss);

}  // namespace sextic

#endif
