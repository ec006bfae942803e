#include "sextic/bigint.hpp"

#include <cctype>

namespace sextic {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonDivisible: return "NonDivisible";
        case ErrorKind::NonMonic: return "NonMonic";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::NotPerfectSquare: return "NotPerfectSquare";
        case ErrorKind::NegativeInput: return "NegativeInput";
        case ErrorKind::NotExpressible: return "NotExpressible";
        case ErrorKind::NotSquareFree: return "NotSquareFree";
        case ErrorKind::RingMismatch: return "RingMismatch";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
        case ErrorKind::NotAPolynomialSquare: return "NotAPolynomialSquare";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Int exact_div(const Int& p, const Int& q) {
    if (sgn(q) == 0) throw Error(ErrorKind::NonDivisible, "division by zero");
    if (!mpz_divisible_p(p.get_mpz_t(), q.get_mpz_t()))
        throw Error(ErrorKind::NonDivisible, p.get_str() + " / " + q.get_str());
    Int r;
    mpz_divexact(r.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    return r;
}

Int isqrt_exact(const Int& n) {
    if (sgn(n) < 0) throw Error(ErrorKind::NegativeInput, n.get_str());
    Int s, rem;
    mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (sgn(rem) != 0) throw Error(ErrorKind::NotPerfectSquare, n.get_str());
    return s;
}

bool is_perfect_square(const Int& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Int ipow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Int parse_int(std::string_view text) {
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
    s = s.substr(start);
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    bool ok = !s.empty();
    for (size_t i = 0; i < s.size() && ok; ++i) {
        char c = s[i];
        ok = std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && s.size() > 1);
    }
    if (!ok) throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
    return Int(s, 10);
}

bool is_square_free(const Int& n) {
    Int m = abs(n);
    if (sgn(m) == 0) return false;
    for (Int p = 2; p * p <= m; ++p) {
        if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            if (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) return false;
        }
    }
    return true;
}

}  // namespace sextic
