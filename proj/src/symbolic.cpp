#include "sextic/sextic_core.hpp"

namespace sextic {

MPoly symbolic_j(const SymbolicSetup& setup, const QuadCoord& y1, const QuadCoord& y2,
                 const QuadCoord& epsilon, DetMethod method) {
    const SymbolicRing& ring = setup.ring;
    const MPoly a_value = setup.fixed_a ? MPoly(*setup.fixed_a) : MPoly::var(Var::a);
    auto lift = [&](const QuadCoord& q) { return ring.make(MPoly(q.u), MPoly(q.v)); };

    const QuadSym a = ring.make(a_value);
    const QuadSym eps = lift(epsilon);
    auto [x1, x2] = xy_transform(a, lift(y1), lift(y2));
    const QuadSym c0 = ring.make(MPoly(0), MPoly::var(Var::y0));
    const QuadSym c1 = eps * x1, c2 = eps * x2;

    auto p = char_poly_rel(a, c0, c1, c2);
    QuadSym r = conjugate_resultant(p, method);
    if (!(r.conj() == -r))
        throw Error(ErrorKind::InternalInconsistency, "symbolic conjugate resultant is not purely imaginary");

    MPoly disc3 = ring.abs_field_disc().pow(3);
    MPoly j_squared;
    try {
        j_squared = exact_div(r.norm(), disc3);
    } catch (const Error&) {
        throw Error(ErrorKind::InternalInconsistency, "N(R) not divisible by |D_M|^3");
    }
    return poly_sqrt(j_squared);
}

}  // namespace sextic
