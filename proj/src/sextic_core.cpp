#include "sextic/sextic_core.hpp"

#include <sstream>
#include <tuple>

namespace sextic {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
    throw Error(ErrorKind::InternalInconsistency, what);
}

}  // namespace

FamilyParams make_params(const Int& a, const Int& d) { return FamilyParams{a, make_ring(d)}; }

std::array<QuadInt, 3> ThetaCoords::relative(const RingDesc& ring) const {
    return {ring.make(c[0], c[3]), ring.make(c[1], c[4]), ring.make(c[2], c[5])};
}

ThetaCoords ThetaCoords::from_relative(const QuadInt& c0, const QuadInt& c1, const QuadInt& c2) {
    return ThetaCoords{{c0.u(), c1.u(), c2.u(), c0.v(), c1.v(), c2.v()}};
}

ThetaCoords ThetaCoords::translated(const Int& t) const {
    ThetaCoords r = *this;
    r.c[0] += t;
    return r;
}

ThetaCoords ThetaCoords::negated() const {
    ThetaCoords r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

ThetaCoords ThetaCoords::canonical() const {
    ThetaCoords r = *this;
    r.c[0] = 0;
    for (std::size_t i = 1; i < 6; ++i) {
        if (sgn(r.c[i]) == 0) continue;
        return sgn(r.c[i]) < 0 ? r.negated() : r;
    }
    return r;
}

std::string ThetaCoords::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << c[i].get_str();
    return os.str();
}

ThetaCoords parse_coords(std::string_view text) {
    ThetaCoords r;
    std::size_t i = 0, start = 0;
    for (std::size_t pos = 0; pos <= text.size(); ++pos) {
        if (pos < text.size() && text[pos] != ',') continue;
        if (i == 6) throw Error(ErrorKind::ParseError, "expected 6 coordinates in '" + std::string(text) + "'");
        r.c[i++] = parse_int(text.substr(start, pos - start));
        start = pos + 1;
    }
    if (i != 6) throw Error(ErrorKind::ParseError, "expected 6 coordinates in '" + std::string(text) + "'");
    return r;
}

std::string to_string(const QuadCoord& q) {
    std::string s = q.u.get_str();
    if (sgn(q.v) < 0) return s + "-" + Int(-q.v).get_str() + "*w";
    return s + "+" + q.v.get_str() + "*w";
}

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::Lemma1Independent: return "lemma1_independent";
        case Provenance::Lemma1Dependent: return "lemma1_dependent";
        case Provenance::BruteForce: return "brute_force";
    }
    return "unknown";
}

SolutionPair SolutionPair::normalized() const {
    for (const Int* x : {&y1.u, &y1.v, &y2.u, &y2.v}) {
        if (sgn(*x) == 0) continue;
        if (sgn(*x) > 0) return *this;
        SolutionPair r = *this;
        r.y1 = -y1;
        r.y2 = -y2;
        return r;
    }
    return *this;
}

GeneratorRecord make_generator_record(const FamilyParams& params, const Int& y0, const QuadInt& x1,
                                      const QuadInt& x2, const QuadInt& epsilon) {
    const RingDesc& ring = params.ring;
    QuadInt c1 = epsilon * x1, c2 = epsilon * x2;
    ThetaCoords coords = ThetaCoords::from_relative(ring.make(0, y0), c1, c2);
    GeneratorRecord rec;
    rec.a = params.a;
    rec.d = ring.d();
    rec.y0 = y0;
    rec.x1 = QuadCoord::of(x1);
    rec.x2 = QuadCoord::of(x2);
    rec.epsilon = QuadCoord::of(epsilon);
    rec.index = abs_index(params, coords);
    rec.coords = coords.canonical();
    return rec;
}

GeneratorRecord make_generator_record(const FamilyParams& params, const ThetaCoords& coords) {
    auto rel = coords.relative(params.ring);
    return make_generator_record(params, coords.y0(), rel[1], rel[2], params.ring.one());
}

UPoly simplest_cubic(const MPoly& a) {
    return UPoly(Var::x, {MPoly(-1), -(a + MPoly(3)), -a, MPoly(1)});
}

CubicAndDisc simplest_cubic_and_disc(const Int& a) {
    UPoly f = simplest_cubic(MPoly(a));
    Int disc = discriminant(f).constant_value();
    Int k = a * a + 3 * a + 9;
    if (disc != k * k) inconsistent("disc(f) != (a^2+3a+9)^2 at a = " + a.get_str());
    return {std::move(f), disc};
}

MPoly family_discriminant_defect() {
    MPoly a = MPoly::var(Var::a);
    MPoly k = a * a + Int(3) * a + MPoly(9);
    return discriminant(simplest_cubic(a)) - k * k;
}

QuadInt thue_form(const Int& a, const QuadInt& y1, const QuadInt& y2) {
    if (!y1.same_ring(y2)) throw Error(ErrorKind::RingMismatch, "thue_form operands");
    return thue_form(y1.scalar(a), y1, y2);
}

MPoly thue_form(const MPoly& a, const MPoly& y1, const MPoly& y2) {
    MPoly y1sq = y1 * y1, y2sq = y2 * y2;
    return y1sq * y1 - a * y1sq * y2 - (a + MPoly(3)) * y1 * y2sq - y2sq * y2;
}

std::array<QuadInt, 4> char_poly_rel(const Int& a, const QuadInt& c0, const QuadInt& c1,
                                     const QuadInt& c2) {
    return char_poly_rel(c0.scalar(a), c0, c1, c2);
}

Int rel_index(const FamilyParams& params, const QuadInt& c1, const QuadInt& c2) {
    const QuadInt zero = params.ring.zero();
    auto p = char_poly_rel(params.a, zero, c1, c2);
    QuadInt disc = monic_cubic_discriminant(p[2], p[1], p[0]);
    Int n = disc.norm();
    Int root;
    try {
        root = isqrt_exact(n);
    } catch (const Error&) {
        inconsistent("norm of relative discriminant is not a square: " + n.get_str());
    }
    Int k = params.k_value();
    Int df = k * k;
    if (!mpz_divisible_p(root.get_mpz_t(), df.get_mpz_t()))
        inconsistent("relative discriminant root " + root.get_str() + " not divisible by D(f)");
    return root / df;
}

Int j_factor(const FamilyParams& params, const ThetaCoords& coords) {
    const RingDesc& ring = params.ring;
    auto [c0, c1, c2] = coords.relative(ring);
    auto p = char_poly_rel(params.a, c0, c1, c2);
    QuadInt r = conjugate_resultant(p);
    if (!(r.conj() == -r)) inconsistent("conjugate resultant is not purely imaginary: " + to_string(r));
    // Branch A: R = w r; branch B: R = (2w - 1) r.
    bool shape = ring.branch() == Branch::A ? sgn(r.u()) == 0 : r.v() == -2 * r.u();
    if (!shape) inconsistent("conjugate resultant has unexpected shape: " + to_string(r));
    Int disc3 = ipow(abs(ring.field_disc()), 3);
    Int n = r.norm();
    if (!mpz_divisible_p(n.get_mpz_t(), disc3.get_mpz_t()))
        inconsistent("N(R) = " + n.get_str() + " not divisible by |D_M|^3");
    try {
        return isqrt_exact(n / disc3);
    } catch (const Error&) {
        inconsistent("N(R)/|D_M|^3 is not a square: " + Int(n / disc3).get_str());
    }
}

Int order_disc(const FamilyParams& params) {
    Int k = params.k_value();
    return k * k * k * k * ipow(params.ring.field_disc(), 3);
}

IndexBreakdown abs_index_detail(const FamilyParams& params, const ThetaCoords& coords) {
    const RingDesc& ring = params.ring;
    IndexBreakdown out;
    auto rel = coords.relative(ring);
    out.rel_index = rel_index(params, rel[1], rel[2]);
    out.j_factor = j_factor(params, coords);
    out.index = out.rel_index * out.j_factor;
    out.order_disc = order_disc(params);

    // P * conj(P) has rational integer coefficients.
    auto p = char_poly_rel(params.a, rel[0], rel[1], rel[2]);
    auto q = conjugate_coeffs(p);
    std::vector<Int> product;
    for (std::size_t k = 0; k < 7; ++k) {
        QuadInt acc = ring.zero();
        for (std::size_t i = 0; i < 4; ++i)
            if (k >= i && k - i < 4) acc += p[i] * q[k - i];
        if (sgn(acc.v()) != 0) inconsistent("P * conj(P) has a non-rational coefficient");
        product.push_back(acc.u());
    }
    out.product_disc = monic_discriminant_resultant(std::span<const Int>(product), Int(1));
    Int lhs = out.index * out.index * abs(out.order_disc);
    if (lhs != abs(out.product_disc))
        throw Error(ErrorKind::CrossCheckFailed,
                    "I^2 |D_O| = " + lhs.get_str() + " but |disc(P conj P)| = " + Int(abs(out.product_disc)).get_str() +
                        " for coords " + coords.to_string());
    return out;
}

Int abs_index(const FamilyParams& params, const ThetaCoords& coords) {
    return abs_index_detail(params, coords).index;
}

std::pair<QuadInt, QuadInt> xy_transform(const Int& a, const QuadInt& y1, const QuadInt& y2) {
    return xy_transform(y1.scalar(a), y1, y2);
}

std::pair<QuadInt, QuadInt> xy_inverse(const Int& a, const QuadInt& x1, const QuadInt& x2) {
    return xy_inverse(x1.scalar(a), x1, x2);
}

}  // namespace sextic
