#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>

namespace enr7 {

using Rat = mpq_class;
using Cd = std::complex<double>;

std::string rat_str(const Rat& r);
Rat parse_rat(const std::string& s);

// Exact nonnegative square root in Q, if one exists.
std::optional<Rat> rat_sqrt(const Rat& r);

// Gaussian rational a + b*i. All arithmetic exact.
struct Qi {
    Rat re, im;

    Qi() : re(0), im(0) {}
    Qi(int n) : re(n), im(0) {}
    Qi(long n) : re(n), im(0) {}
    Qi(const Rat& r) : re(r), im(0) {}
    Qi(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Qi conj() const { return {re, -im}; }
    // Field norm re^2 + im^2; doubles as the exact size key for chart selection.
    Rat norm() const { return re * re + im * im; }

    Qi& operator+=(const Qi& o) { re += o.re; im += o.im; return *this; }
    Qi& operator-=(const Qi& o) { re -= o.re; im -= o.im; return *this; }
    Qi& operator*=(const Qi& o) {
        Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Qi& operator/=(const Qi& o);

    friend Qi operator+(Qi a, const Qi& b) { a += b; return a; }
    friend Qi operator-(Qi a, const Qi& b) { a -= b; return a; }
    friend Qi operator*(Qi a, const Qi& b) { a *= b; return a; }
    friend Qi operator/(Qi a, const Qi& b) { a /= b; return a; }
    friend Qi operator-(const Qi& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Qi& a, const Qi& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Qi& a, const Qi& b) { return !(a == b); }
};

// Square root in Q(i), if one exists.
std::optional<Qi> qi_sqrt(const Qi& z);

// Human-readable form like "1/2", "-i", "3+1/2i". Deterministic.
std::string qi_str(const Qi& z);

// Accepts the forms produced by qi_str: "[rat]", "[rat]i", "[rat]+[rat]i", "[rat]-[rat]i",
// with "i"/"-i" shorthand for the unit imaginary part.
Qi parse_qi(const std::string& s);

Cd to_cd(const Qi& z);

std::ostream& operator<<(std::ostream& os, const Qi& z);

} // namespace enr7
