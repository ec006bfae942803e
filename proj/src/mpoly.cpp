#include "sextic/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <vector>
#include <sstream>

namespace sextic {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"a", "d", "e", "y0", "t", "x", "K"};

bool divides(const Exponents& lhs, const Exponents& rhs) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (lhs[i] > rhs[i]) return false;
    return true;
}

Exponents add_exps(const Exponents& lhs, const Exponents& rhs) {
    Exponents r{};
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(lhs[i] + rhs[i]);
    return r;
}

Exponents sub_exps(const Exponents& lhs, const Exponents& rhs) {
    Exponents r{};
    for (std::size_t i = 0; i < kNumVars; ++i) r[i] = static_cast<std::uint16_t>(lhs[i] - rhs[i]);
    return r;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

Var parse_var(std::string_view name) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    throw Error(ErrorKind::ParseError, "unknown variable '" + std::string(name) + "'");
}

unsigned total_degree(const Exponents& e) {
    unsigned s = 0;
    for (auto x : e) s += x;
    return s;
}

bool GrlexGreater::operator()(const Exponents& lhs, const Exponents& rhs) const {
    unsigned dl = total_degree(lhs), dr = total_degree(rhs);
    if (dl != dr) return dl > dr;
    return lhs > rhs;
}

MPoly::MPoly(const Int& c) {
    if (sgn(c) != 0) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::var(Var v, unsigned power) {
    Exponents e{};
    e[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(power);
    return monomial(Int(1), e);
}

MPoly MPoly::monomial(const Int& coeff, const Exponents& exps) {
    MPoly p;
    if (sgn(coeff) != 0) p.terms_.emplace(exps, coeff);
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && sextic::total_degree(terms_.begin()->first) == 0);
}

Int MPoly::constant_value() const {
    if (!is_constant()) throw Error(ErrorKind::InvalidArgument, "not a constant: " + to_string());
    return constant_term();
}

Int MPoly::constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? Int(0) : it->second;
}

unsigned MPoly::degree(Var v) const {
    unsigned d = 0;
    auto i = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[i]);
    return d;
}

unsigned MPoly::total_degree() const {
    return terms_.empty() ? 0 : sextic::total_degree(terms_.begin()->first);
}

MPoly MPoly::coeff(Var v, unsigned k) const {
    MPoly r;
    auto i = static_cast<std::size_t>(v);
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Exponents f = e;
        f[i] = 0;
        r.terms_.emplace(f, c);
    }
    return r;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
    auto i = static_cast<std::size_t>(v);
    unsigned deg = degree(v);
    std::vector<MPoly> powers{MPoly(1)};
    for (unsigned k = 1; k <= deg; ++k) powers.push_back(powers.back() * value);
    MPoly r;
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[i] = 0;
        r += monomial(c, f) * powers[e[i]];
    }
    return r;
}

MPoly MPoly::evaluate(Var v, const Int& value) const {
    auto i = static_cast<std::size_t>(v);
    MPoly r;
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[i] = 0;
        r.add_term(f, c * ipow(value, e[i]));
    }
    return r;
}

void MPoly::add_term(const Exponents& e, const Int& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
    MPoly r;
    for (const auto& [el, cl] : lhs.terms_)
        for (const auto& [er, cr] : rhs.terms_) r.add_term(add_exps(el, er), cl * cr);
    return r;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly& MPoly::operator*=(const Int& rhs) {
    if (sgn(rhs) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= rhs;
    return *this;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::pow(unsigned n) const {
    MPoly result(1), base = *this;
    while (n > 0) {
        if (n & 1u) result *= base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative = sgn(c) < 0;
        Int mag = abs(c);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool constant = sextic::total_degree(e) == 0;
        bool wrote = false;
        if (constant || mag != 1) {
            os << mag.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << '*';
            os << kVarNames[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

MPoly exact_div(const MPoly& p, const MPoly& q) {
    if (q.is_zero()) throw Error(ErrorKind::NonDivisible, "division by the zero polynomial");
    if (q.is_constant()) {
        const Int& c = q.leading_coeff();
        MPoly r;
        for (const auto& [e, v] : p.terms()) r += MPoly::monomial(exact_div(v, c), e);
        return r;
    }
    const Exponents& lq = q.leading_exponents();
    const Int& cq = q.leading_coeff();
    MPoly rem = p, quot;
    while (!rem.is_zero()) {
        const Exponents& lr = rem.leading_exponents();
        if (!divides(lq, lr) || !mpz_divisible_p(rem.leading_coeff().get_mpz_t(), cq.get_mpz_t()))
            throw Error(ErrorKind::NonDivisible, "(" + p.to_string() + ") / (" + q.to_string() + ")");
        MPoly term = MPoly::monomial(exact_div(rem.leading_coeff(), cq), sub_exps(lr, lq));
        quot += term;
        rem -= term * q;
    }
    return quot;
}

MPoly poly_sqrt(const MPoly& p) {
    if (p.is_zero()) return p;
    auto fail = [&p]() { return Error(ErrorKind::NotAPolynomialSquare, p.to_string()); };
    const Exponents& lp = p.leading_exponents();
    Exponents half{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (lp[i] % 2 != 0) throw fail();
        half[i] = static_cast<std::uint16_t>(lp[i] / 2);
    }
    if (!is_perfect_square(p.leading_coeff())) throw fail();
    MPoly lead = MPoly::monomial(isqrt_exact(p.leading_coeff()), half);
    MPoly twice_lead = lead * Int(2);
    const Exponents& trailing = p.terms().rbegin()->first;
    GrlexGreater greater;

    MPoly root = lead;
    MPoly rem = p - lead * lead;
    while (!rem.is_zero()) {
        const Exponents& lr = rem.leading_exponents();
        const Exponents& lt = twice_lead.leading_exponents();
        if (!divides(lt, lr) ||
            !mpz_divisible_p(rem.leading_coeff().get_mpz_t(), twice_lead.leading_coeff().get_mpz_t()))
            throw fail();
        Exponents te = sub_exps(lr, lt);
        // The smallest root term squared is the trailing term of p.
        if (greater(trailing, add_exps(te, te))) throw fail();
        MPoly term = MPoly::monomial(exact_div(rem.leading_coeff(), twice_lead.leading_coeff()), te);
        rem -= (root * Int(2) + term) * term;
        root += term;
    }
    if (sgn(root.leading_coeff()) < 0) root = -root;
    return root;
}

unsigned var_valuation(const MPoly& p, Var v) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "valuation of zero polynomial");
    auto i = static_cast<std::size_t>(v);
    unsigned k = ~0u;
    for (const auto& [e, c] : p.terms()) k = std::min<unsigned>(k, e[i]);
    return k;
}

MPoly rewrite_in_K(const MPoly& p) {
    const MPoly a = MPoly::var(Var::a);
    const MPoly reduction = MPoly::var(Var::K) - Int(3) * a - Int(9);
    MPoly r = p;
    for (unsigned deg = r.degree(Var::a); deg >= 2; deg = r.degree(Var::a)) {
        MPoly c = r.coeff(Var::a, deg);
        r -= c * MPoly::var(Var::a, deg);
        r += c * MPoly::var(Var::a, deg - 2) * reduction;
    }
    MPoly linear = r.coeff(Var::a, 1);
    if (!linear.is_zero()) throw NotExpressible(linear);
    return r;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    MPoly parse() {
        MPoly r = expr();
        skip();
        if (pos_ != s_.size()) error("trailing input");
        return r;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        throw Error(ErrorKind::ParseError,
                    msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    MPoly expr() {
        MPoly r = term();
        for (;;) {
            if (accept('+')) r += term();
            else if (accept('-')) r -= term();
            else return r;
        }
    }
    MPoly term() {
        MPoly r = unary();
        while (accept('*')) r *= unary();
        return r;
    }
    MPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }
    MPoly power() {
        MPoly base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }
    MPoly atom() {
        skip();
        if (accept('(')) {
            MPoly r = expr();
            if (!accept(')')) error("expected ')'");
            return r;
        }
        std::size_t start = pos_;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MPoly(Int(std::string(s_.substr(start, pos_ - start)), 10));
        }
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("expected operand");
        return MPoly::var(parse_var(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(std::string_view text) { return Parser(text).parse(); }

}  // namespace sextic
