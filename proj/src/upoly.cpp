#include "sextic/upoly.hpp"

#include <algorithm>

namespace sextic {

namespace {

void trim(std::vector<MPoly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void trim(IntPoly& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

Int ceil_div(const Int& n, const Int& d) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

// Smallest r >= 0 with r^k >= q.
Int ceil_root(const Int& q, unsigned long k) {
    Int r;
    mpz_root(r.get_mpz_t(), q.get_mpz_t(), k);
    if (ipow(r, k) < q) ++r;
    return r;
}

Int pollard_brent(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, g = 1, q = 1, ys;
        auto step = [&](const Int& v) {
            Int r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        unsigned long r = 1;
        const unsigned long m = 128;
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = q * abs(x - y);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                Int diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Int& n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

UPoly::UPoly(Var v, std::vector<MPoly> c) : var(v), coeffs(std::move(c)) { trim(coeffs); }

UPoly UPoly::from_mpoly(const MPoly& p, Var v) {
    std::vector<MPoly> c;
    for (unsigned k = 0, deg = p.degree(v); k <= deg && !p.is_zero(); ++k) c.push_back(p.coeff(v, k));
    return UPoly(v, std::move(c));
}

MPoly UPoly::to_mpoly() const {
    MPoly r;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        r += coeffs[k] * MPoly::var(var, static_cast<unsigned>(k));
    return r;
}

UPoly UPoly::derivative() const {
    return UPoly(var, sextic::derivative(std::span<const MPoly>(coeffs)));
}

MPoly resultant(const UPoly& p, const UPoly& q, DetMethod method) {
    if (p.var != q.var) throw Error(ErrorKind::InvalidArgument, "resultant in mismatched variables");
    return resultant(std::span<const MPoly>(p.coeffs), std::span<const MPoly>(q.coeffs), MPoly(1), method);
}

MPoly resultant(const MPoly& p, const MPoly& q, Var v, DetMethod method) {
    return resultant(UPoly::from_mpoly(p, v), UPoly::from_mpoly(q, v), method);
}

MPoly discriminant(const UPoly& p) {
    if (p.degree() < 2) throw Error(ErrorKind::InvalidArgument, "discriminant needs degree >= 2");
    if (p.leading() != MPoly(1)) throw Error(ErrorKind::NonMonic, p.to_mpoly().to_string());
    return monic_discriminant_resultant(std::span<const MPoly>(p.coeffs), MPoly(1));
}

MPoly discriminant(const MPoly& p, Var v) { return discriminant(UPoly::from_mpoly(p, v)); }

IntPoly to_int_poly(const UPoly& p) {
    IntPoly r;
    for (const auto& c : p.coeffs) r.push_back(c.constant_value());
    return r;
}

IntPoly to_int_poly(const MPoly& p, Var v) { return to_int_poly(UPoly::from_mpoly(p, v)); }

Int evaluate(const IntPoly& p, const Int& x) {
    Int r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

Int root_bound(const IntPoly& p) {
    IntPoly q = p;
    trim(q);
    if (q.size() < 2) return Int(0);
    const std::size_t n = q.size() - 1;
    const Int lead = abs(q.back());
    Int best = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        Int c = abs(q[n - k]);
        if (sgn(c) == 0) continue;
        Int ratio = k == n ? ceil_div(c, 2 * lead) : ceil_div(c, lead);
        best = std::max(best, ceil_root(ratio, k));
    }
    return 2 * best;
}

std::vector<std::pair<Int, unsigned>> factor(const Int& n) {
    Int m = abs(n);
    if (sgn(m) == 0) throw Error(ErrorKind::InvalidArgument, "factor(0)");
    std::vector<Int> primes;
    for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1);
    }
    return out;
}

std::set<Int> integer_roots(IntPoly p) {
    trim(p);
    if (p.empty()) throw Error(ErrorKind::ZeroPolynomial, "integer roots of the zero polynomial");
    std::set<Int> roots;
    std::size_t low = 0;
    while (sgn(p[low]) == 0) ++low;
    if (low > 0) {
        roots.insert(Int(0));
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
    }
    if (p.size() < 2) return roots;

    const Int trailing = abs(p.front());
    const Int bound = std::min(root_bound(p), trailing);
    auto test = [&](const Int& n) {
        if (sgn(evaluate(p, n)) == 0) roots.insert(n);
        if (sgn(evaluate(p, -n)) == 0) roots.insert(-n);
    };
    if (bound <= 200000) {
        for (unsigned long n = 1; n <= bound.get_ui(); ++n)
            if (mpz_divisible_ui_p(trailing.get_mpz_t(), n)) test(Int(n));
        return roots;
    }
    std::vector<Int> divisors{Int(1)};
    for (const auto& [prime, mult] : factor(trailing)) {
        std::size_t count = divisors.size();
        Int pk = 1;
        for (unsigned e = 1; e <= mult; ++e) {
            pk *= prime;
            if (pk > bound) break;
            for (std::size_t i = 0; i < count; ++i) {
                Int dv = divisors[i] * pk;
                if (dv <= bound) divisors.push_back(dv);
            }
        }
    }
    for (const auto& dv : divisors) test(dv);
    return roots;
}

std::set<Int> integer_roots(const UPoly& p) { return integer_roots(to_int_poly(p)); }

}  // namespace sextic
