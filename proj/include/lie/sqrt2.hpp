#pragma once

#include <iosfwd>
#include <string>

#include "lie/rational.hpp"

namespace lie {

// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2). Used by the
// fermionic oscillator layer, where psi_i(0) = c_i/sqrt(2) cannot be a
// rational matrix. Arithmetic is exact.
struct Rat2 {
    Rat a, b; // value a + b*sqrt(2)

    Rat2() = default;
    Rat2(long n) : a(n) {}
    Rat2(Rat r) : a(std::move(r)) {}
    Rat2(Rat r, Rat s) : a(std::move(r)), b(std::move(s)) {}

    static Rat2 sqrt2() { return Rat2(Rat(0), Rat(1)); }
    static Rat2 inv_sqrt2() { return Rat2(Rat(0), Rat(1, 2)); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return b.is_zero(); }

    Rat2 conj() const { return Rat2(a, -b); } // a - b*sqrt(2)
    Rat norm() const { return a * a - Rat(2) * b * b; }

    Rat2 operator-() const { return Rat2(-a, -b); }
    Rat2& operator+=(const Rat2& o) { a += o.a; b += o.b; return *this; }
    Rat2& operator-=(const Rat2& o) { a -= o.a; b -= o.b; return *this; }
    Rat2& operator*=(const Rat2& o) {
        Rat na = a * o.a + Rat(2) * b * o.b;
        Rat nb = a * o.b + b * o.a;
        a = std::move(na);
        b = std::move(nb);
        return *this;
    }
    Rat2& operator/=(const Rat2& o) {
        Rat n = o.norm();
        if (n.is_zero()) fail(Error::Kind::invalid_argument, "Rat2: division by zero");
        *this *= o.conj();
        a /= n;
        b /= n;
        return *this;
    }

    friend Rat2 operator+(Rat2 x, const Rat2& y) { x += y; return x; }
    friend Rat2 operator-(Rat2 x, const Rat2& y) { x -= y; return x; }
    friend Rat2 operator*(Rat2 x, const Rat2& y) { x *= y; return x; }
    friend Rat2 operator/(Rat2 x, const Rat2& y) { x /= y; return x; }
    friend bool operator==(const Rat2& x, const Rat2& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Rat2& x, const Rat2& y) { return !(x == y); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Rat2& x);
};

} // namespace lie
