#ifndef SEXTIC_BIGINT_HPP
#define SEXTIC_BIGINT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sextic {

using Int = mpz_class;

enum class ErrorKind {
    NonDivisible,
    NonMonic,
    ZeroPolynomial,
    NotPerfectSquare,
    NegativeInput,
    NotExpressible,
    NotSquareFree,
    RingMismatch,
    InternalInconsistency,
    CrossCheckFailed,
    NotAPolynomialSquare,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Ring primitives shared by the generic determinant / resultant templates.
inline bool is_zero(const Int& x) { return sgn(x) == 0; }

/// Exact quotient p / q; throws NonDivisible when q does not divide p.
Int exact_div(const Int& p, const Int& q);

/// s with s*s == n; NegativeInput for n < 0, NotPerfectSquare otherwise.
Int isqrt_exact(const Int& n);

bool is_perfect_square(const Int& n);

Int ipow(const Int& base, unsigned long exp);

Int parse_int(std::string_view text);

// Square-freeness by trial division; meant for desk-scale inputs.
bool is_square_free(const Int& n);

}  // namespace sextic

#endif
