#ifndef SEXTIC_UPOLY_HPP
#define SEXTIC_UPOLY_HPP

#include <set>
#include <vector>

#include "sextic/elimination.hpp"
#include "sextic/mpoly.hpp"

namespace sextic {

// Dense polynomial in one distinguished variable with MPoly coefficients.
// coeffs[k] multiplies var^k; the leading coefficient is nonzero unless the
// polynomial is zero (empty coefficient list).
struct UPoly {
    Var var = Var::x;
    std::vector<MPoly> coeffs;

    UPoly() = default;
    UPoly(Var v, std::vector<MPoly> c);

    static UPoly from_mpoly(const MPoly& p, Var v);
    MPoly to_mpoly() const;

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const MPoly& leading() const { return coeffs.back(); }
    UPoly derivative() const;

    friend bool operator==(const UPoly&, const UPoly&) = default;
};

MPoly resultant(const UPoly& p, const UPoly& q, DetMethod method = DetMethod::Bareiss);
MPoly resultant(const MPoly& p, const MPoly& q, Var v, DetMethod method = DetMethod::Bareiss);

/// Discriminant of a monic polynomial of degree >= 2; NonMonic otherwise.
MPoly discriminant(const UPoly& p);
MPoly discriminant(const MPoly& p, Var v);

/// Univariate integer polynomial, coefficients low to high.
using IntPoly = std::vector<Int>;

IntPoly to_int_poly(const UPoly& p);
IntPoly to_int_poly(const MPoly& p, Var v);
Int evaluate(const IntPoly& p, const Int& x);

/// All integer roots of p. Candidates are the divisors of the trailing
/// coefficient (after stripping powers of the variable) inside a root bound;
/// each candidate is confirmed by evaluation. Throws ZeroPolynomial.
std::set<Int> integer_roots(IntPoly p);
std::set<Int> integer_roots(const UPoly& p);

/// Upper bound on the absolute value of every complex root (Fujiwara).
Int root_bound(const IntPoly& p);

/// Prime factorization by trial division and Pollard-Brent; |n| >= 1.
std::vector<std::pair<Int, unsigned>> factor(const Int& n);

}  // namespace sextic

#endif
