#ifndef SEXTIC_QUADRING_HPP
#define SEXTIC_QUADRING_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sextic/bigint.hpp"
#include "sextic/mpoly.hpp"

namespace sextic {

// Minimal polynomial data of omega: omega^2 = trace*omega - norm.
template <class T>
struct OmegaRule {
    T trace;
    T norm;

    friend bool operator==(const OmegaRule&, const OmegaRule&) = default;
};

/*
 * u + v*omega in an imaginary quadratic ring, coordinates in the (1, omega)
 * basis. T is Int for concrete rings and MPoly for the symbolic variant.
 * Elements of one ring share the same rule object.
 */
template <class T>
class Quad {
public:
    using Rule = OmegaRule<T>;

    Quad(T u, T v, std::shared_ptr<const Rule> rule)
        : u_(std::move(u)), v_(std::move(v)), rule_(std::move(rule)) {}

    const T& u() const { return u_; }
    const T& v() const { return v_; }
    const std::shared_ptr<const Rule>& rule() const { return rule_; }

    Quad zero_like() const { return Quad(T(0), T(0), rule_); }
    Quad one_like() const { return Quad(T(1), T(0), rule_); }
    Quad scalar(T s) const { return Quad(std::move(s), T(0), rule_); }

    bool same_ring(const Quad& o) const { return rule_ == o.rule_ || *rule_ == *o.rule_; }

    friend Quad operator+(const Quad& p, const Quad& q) {
        p.check(q);
        return Quad(p.u_ + q.u_, p.v_ + q.v_, p.rule_);
    }
    friend Quad operator-(const Quad& p, const Quad& q) {
        p.check(q);
        return Quad(p.u_ - q.u_, p.v_ - q.v_, p.rule_);
    }
    Quad operator-() const { return Quad(-u_, -v_, rule_); }

    friend Quad operator*(const Quad& p, const Quad& q) {
        p.check(q);
        T vv = p.v_ * q.v_;
        T u = p.u_ * q.u_ - p.rule_->norm * vv;
        T v = p.u_ * q.v_ + p.v_ * q.u_;
        if (!is_zero(p.rule_->trace)) v += p.rule_->trace * vv;
        return Quad(std::move(u), std::move(v), p.rule_);
    }
    friend Quad operator*(const Quad& p, const Int& s) { return Quad(p.u_ * s, p.v_ * s, p.rule_); }
    friend Quad operator*(const Int& s, const Quad& p) { return p * s; }

    Quad& operator+=(const Quad& q) { return *this = *this + q; }
    Quad& operator-=(const Quad& q) { return *this = *this - q; }
    Quad& operator*=(const Quad& q) { return *this = *this * q; }

    // Coordinate-wise equality; ring identity is not compared.
    friend bool operator==(const Quad& p, const Quad& q) { return p.u_ == q.u_ && p.v_ == q.v_; }

    Quad conj() const { return Quad(u_ + rule_->trace * v_, -v_, rule_); }
    T norm() const { return u_ * u_ + rule_->trace * u_ * v_ + rule_->norm * v_ * v_; }

    Quad pow(unsigned n) const {
        Quad r = one_like(), b = *this;
        for (; n > 0; n >>= 1) {
            if (n & 1u) r *= b;
            if (n > 1) b *= b;
        }
        return r;
    }

private:
    void check(const Quad& o) const {
        if (!same_ring(o)) throw Error(ErrorKind::RingMismatch, "operands from different rings");
    }

    T u_;
    T v_;
    std::shared_ptr<const Rule> rule_;
};

template <class T>
bool is_zero(const Quad<T>& q) {
    return is_zero(q.u()) && is_zero(q.v());
}

/// Exact quotient in the ring: p * conj(q) / norm(q), componentwise exact.
template <class T>
Quad<T> exact_div(const Quad<T>& p, const Quad<T>& q) {
    T n = q.norm();
    Quad<T> num = p * q.conj();
    return Quad<T>(exact_div(num.u(), n), exact_div(num.v(), n), p.rule());
}

using QuadInt = Quad<Int>;
using QuadSym = Quad<MPoly>;

enum class Branch { A, B };

// Ring of integers of Q(i*sqrt(d)).
// Branch A (-d = 2,3 mod 4): omega = i*sqrt(d), omega^2 = -d, D_M = -4d.
// Branch B (-d = 1 mod 4): omega = (1+i*sqrt(d))/2, omega^2 = omega - e, e = (1+d)/4, D_M = -d.
class RingDesc {
public:
    const Int& d() const { return d_; }
    Branch branch() const { return branch_; }
    const Int& e() const { return e_; }
    const Int& field_disc() const { return field_disc_; }
    const std::shared_ptr<const OmegaRule<Int>>& rule() const { return rule_; }

    QuadInt make(Int u, Int v = 0) const { return QuadInt(std::move(u), std::move(v), rule_); }
    QuadInt zero() const { return make(0, 0); }
    QuadInt one() const { return make(1, 0); }
    QuadInt omega() const { return make(0, 1); }

    bool operator==(const RingDesc& o) const { return d_ == o.d_; }

    friend RingDesc make_ring(const Int& d);

private:
    Int d_;
    Branch branch_ = Branch::A;
    Int e_;
    Int field_disc_;
    std::shared_ptr<const OmegaRule<Int>> rule_;
};

/// Throws NotSquareFree or InvalidArgument (d < 1).
RingDesc make_ring(const Int& d);

std::string_view to_string(Branch b);

/// {1, i, -1, -i} for d = 1, the six powers of omega for d = 3, {1, -1} otherwise.
std::vector<QuadInt> units(const RingDesc& ring);
bool is_unit(const QuadInt& q);

// "u+v*w" form with w standing for omega.
std::string to_string(const QuadInt& q);
QuadInt parse_quad(std::string_view text, const RingDesc& ring);

// Symbolic rings: components are MPoly. Branch A keeps d free, branch B keeps e free
// (d = 4e - 1), the fixed variant embeds a concrete ring.
enum class SymbolicKind { BranchA, BranchB, Fixed };

class SymbolicRing {
public:
    static SymbolicRing branch_a();
    static SymbolicRing branch_b();
    static SymbolicRing fixed(const RingDesc& ring);

    SymbolicKind kind() const { return kind_; }
    // |D_M| as a polynomial: 4d, 4e - 1, or a constant.
    const MPoly& abs_field_disc() const { return abs_disc_; }
    const std::shared_ptr<const OmegaRule<MPoly>>& rule() const { return rule_; }

    QuadSym make(MPoly u, MPoly v = MPoly()) const { return QuadSym(std::move(u), std::move(v), rule_); }
    QuadSym lift(const QuadInt& q) const { return make(MPoly(q.u()), MPoly(q.v())); }
    QuadSym omega() const { return make(MPoly(0), MPoly(1)); }

private:
    SymbolicKind kind_ = SymbolicKind::Fixed;
    MPoly abs_disc_;
    std::shared_ptr<const OmegaRule<MPoly>> rule_;
};

/// Fully evaluates a symbolic element into `ring`. Every variable of the
/// components must be bound in `values`; d and e are bound from the ring.
QuadInt evaluate(const QuadSym& q, const std::map<Var, Int>& values, const RingDesc& ring);

}  // namespace sextic

#endif
