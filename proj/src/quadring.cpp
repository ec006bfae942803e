#include "sextic/quadring.hpp"

#include <cctype>

namespace sextic {

RingDesc make_ring(const Int& d) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "d must be positive, got " + d.get_str());
    if (!is_square_free(d)) throw Error(ErrorKind::NotSquareFree, d.get_str());
    RingDesc r;
    r.d_ = d;
    Int minus_d_mod4 = -d;
    mpz_fdiv_r_ui(minus_d_mod4.get_mpz_t(), minus_d_mod4.get_mpz_t(), 4);
    if (minus_d_mod4 == 1) {
        r.branch_ = Branch::B;
        r.e_ = (1 + d) / 4;
        r.field_disc_ = -d;
        r.rule_ = std::make_shared<const OmegaRule<Int>>(OmegaRule<Int>{Int(1), r.e_});
    } else {
        r.branch_ = Branch::A;
        r.e_ = 0;
        r.field_disc_ = -4 * d;
        r.rule_ = std::make_shared<const OmegaRule<Int>>(OmegaRule<Int>{Int(0), d});
    }
    return r;
}

std::string_view to_string(Branch b) { return b == Branch::A ? "A" : "B"; }

std::vector<QuadInt> units(const RingDesc& ring) {
    if (ring.d() == 1)
        return {ring.make(1), ring.make(0, 1), ring.make(-1), ring.make(0, -1)};
    if (ring.d() == 3) {
        std::vector<QuadInt> out;
        QuadInt w = ring.omega(), p = ring.one();
        for (int k = 0; k < 6; ++k, p *= w) out.push_back(p);
        return out;
    }
    return {ring.make(1), ring.make(-1)};
}

bool is_unit(const QuadInt& q) { return q.norm() == 1; }

std::string to_string(const QuadInt& q) {
    std::string s = q.u().get_str();
    if (sgn(q.v()) < 0) s += "-" + Int(-q.v()).get_str() + "*w";
    else s += "+" + q.v().get_str() + "*w";
    return s;
}

QuadInt parse_quad(std::string_view text, const RingDesc& ring) {
    // Accepts "u", "v*w", "w", "-w", "u+v*w", "u-w", "u+w" (whitespace ignored).
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto fail = [&]() { return Error(ErrorKind::ParseError, "bad quadratic integer '" + std::string(text) + "'"); };
    if (s.empty()) throw fail();

    Int u = 0, v = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t start = pos;
        if (s[pos] == '+' || s[pos] == '-') ++pos;
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string sign = s.substr(start, pos - start);
        std::string body = s.substr(pos, end - pos);
        if (body.empty()) throw fail();
        if (body.back() == 'w') {
            body.pop_back();
            if (!body.empty()) {
                if (body.back() != '*') throw fail();
                body.pop_back();
                if (body.empty()) throw fail();
            }
            Int coeff = body.empty() ? Int(1) : parse_int(body);
            v += sign == "-" ? -coeff : coeff;
        } else {
            Int coeff = parse_int(body);
            u += sign == "-" ? -coeff : coeff;
        }
        pos = end;
    }
    return ring.make(u, v);
}

SymbolicRing SymbolicRing::branch_a() {
    SymbolicRing r;
    r.kind_ = SymbolicKind::BranchA;
    r.abs_disc_ = Int(4) * MPoly::var(Var::d);
    r.rule_ = std::make_shared<const OmegaRule<MPoly>>(OmegaRule<MPoly>{MPoly(0), MPoly::var(Var::d)});
    return r;
}

SymbolicRing SymbolicRing::branch_b() {
    SymbolicRing r;
    r.kind_ = SymbolicKind::BranchB;
    r.abs_disc_ = Int(4) * MPoly::var(Var::e) - MPoly(1);
    r.rule_ = std::make_shared<const OmegaRule<MPoly>>(OmegaRule<MPoly>{MPoly(1), MPoly::var(Var::e)});
    return r;
}

SymbolicRing SymbolicRing::fixed(const RingDesc& ring) {
    SymbolicRing r;
    r.kind_ = SymbolicKind::Fixed;
    r.abs_disc_ = MPoly(abs(ring.field_disc()));
    r.rule_ = std::make_shared<const OmegaRule<MPoly>>(
        OmegaRule<MPoly>{MPoly(ring.rule()->trace), MPoly(ring.rule()->norm)});
    return r;
}

QuadInt evaluate(const QuadSym& q, const std::map<Var, Int>& values, const RingDesc& ring) {
    auto eval = [&](MPoly p) {
        for (const auto& [var, value] : values) p = p.evaluate(var, value);
        p = p.evaluate(Var::d, ring.d()).evaluate(Var::e, ring.e());
        return p.constant_value();
    };
    return ring.make(eval(q.u()), eval(q.v()));
}

}  // namespace sextic
