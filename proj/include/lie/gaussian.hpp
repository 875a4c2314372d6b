#pragma once

#include <iosfwd>
#include <string>

#include "lie/rational.hpp"

namespace lie {

// Complex number with exact rational real and imaginary parts.
struct CRat {
    Rat re, im;

    CRat() = default;
    CRat(long n) : re(n) {}
    CRat(Rat r) : re(std::move(r)) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static CRat i() { return CRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    CRat conj() const { return CRat(re, -im); }
    Rat norm2() const { return re * re + im * im; }

    CRat operator-() const { return CRat(-re, -im); }
    CRat& operator+=(const CRat& o) { re += o.re; im += o.im; return *this; }
    CRat& operator-=(const CRat& o) { re -= o.re; im -= o.im; return *this; }
    CRat& operator*=(const CRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    CRat& operator/=(const CRat& o) {
        Rat n = o.norm2();
        if (n.is_zero()) fail(Error::Kind::invalid_argument, "CRat: division by zero");
        CRat c = o.conj();
        *this *= c;
        re /= n;
        im /= n;
        return *this;
    }

    friend CRat operator+(CRat a, const CRat& b) { a += b; return a; }
    friend CRat operator-(CRat a, const CRat& b) { a -= b; return a; }
    friend CRat operator*(CRat a, const CRat& b) { a *= b; return a; }
    friend CRat operator/(CRat a, const CRat& b) { a /= b; return a; }
    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const CRat& c);
};

} // namespace lie
