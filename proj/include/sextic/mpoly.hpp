#ifndef SEXTIC_MPOLY_HPP
#define SEXTIC_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "sextic/bigint.hpp"

namespace sextic {

// The fixed variable universe. Order here is also the lex tie-break order
// of the graded term order (a > d > e > y0 > t > x > K).
enum class Var : std::uint8_t { a, d, e, y0, t, x, K };

inline constexpr std::size_t kNumVars = 7;

std::string_view var_name(Var v);
Var parse_var(std::string_view name);

using Exponents = std::array<std::uint16_t, kNumVars>;

unsigned total_degree(const Exponents& e);

// Descending graded-lex comparison: the leading term sorts first.
struct GrlexGreater {
    bool operator()(const Exponents& lhs, const Exponents& rhs) const;
};

/*
 * Sparse polynomial over the integers in the variables of Var.
 * Terms are kept in descending graded-lex order; zero coefficients are never stored.
 */
class MPoly {
public:
    using TermMap = std::map<Exponents, Int, GrlexGreater>;

    MPoly() = default;
    MPoly(const Int& c);
    MPoly(long c) : MPoly(Int(c)) {}
    MPoly(int c) : MPoly(Int(c)) {}

    static MPoly var(Var v, unsigned power = 1);
    static MPoly monomial(const Int& coeff, const Exponents& exps);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term value; throws InvalidArgument if the polynomial is not constant.
    Int constant_value() const;
    Int constant_term() const;

    // Leading term under the graded order; undefined for the zero polynomial.
    const Exponents& leading_exponents() const { return terms_.begin()->first; }
    const Int& leading_coeff() const { return terms_.begin()->second; }

    unsigned degree(Var v) const;
    unsigned total_degree() const;
    bool depends_on(Var v) const { return degree(v) > 0; }

    // Coefficient of v^k, as a polynomial in the remaining variables.
    MPoly coeff(Var v, unsigned k) const;

    MPoly substitute(Var v, const MPoly& value) const;
    MPoly evaluate(Var v, const Int& value) const;

    MPoly& operator+=(const MPoly& rhs);
    MPoly& operator-=(const MPoly& rhs);
    MPoly& operator*=(const MPoly& rhs);
    MPoly& operator*=(const Int& rhs);

    friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
    friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
    friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
    friend MPoly operator*(MPoly lhs, const Int& rhs) { return lhs *= rhs; }
    friend MPoly operator*(const Int& lhs, MPoly rhs) { return rhs *= lhs; }
    MPoly operator-() const;

    friend bool operator==(const MPoly& lhs, const MPoly& rhs) { return lhs.terms_ == rhs.terms_; }

    MPoly pow(unsigned n) const;

    // Canonical rendering, e.g. "3*a^2*d - y0 + 1".
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Int& c);

    TermMap terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }

/// Exact quotient p / q by multivariate division; throws NonDivisible.
MPoly exact_div(const MPoly& p, const MPoly& q);

/// Polynomial square root with positive leading coefficient, verified by squaring.
/// Throws NotAPolynomialSquare.
MPoly poly_sqrt(const MPoly& p);

/// Largest k with v^k dividing p (p nonzero).
unsigned var_valuation(const MPoly& p, Var v);

// Parses the canonical rendering (and ordinary infix input with parentheses).
MPoly parse_mpoly(std::string_view text);

class NotExpressible : public Error {
public:
    explicit NotExpressible(MPoly residual)
        : Error(ErrorKind::NotExpressible, "residual coefficient of a: " + residual.to_string()),
          residual_(std::move(residual)) {}
    const MPoly& residual() const { return residual_; }

private:
    MPoly residual_;
};

/// Rewrites p in terms of K = a^2 + 3a + 9 by reducing a^2 -> K - 3a - 9.
/// Throws NotExpressible when a linear-in-a part survives.
MPoly rewrite_in_K(const MPoly& p);

}  // namespace sextic

#endif
