#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace spantree {

// Exact arithmetic everywhere counting happens; MPFR only in the
// asymptotics layer. All three types are GMP-backed.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

inline int digits10_for_bits(int bits) {
    // 1 bit ~ log10(2) decimal digits, plus slack so conversions round-trip
    return static_cast<int>(bits * 0.30103) + 4;
}

// Scoped override of the thread-default mpfr precision. The library's
// public entry points take precision in bits and install one of these
// before doing any floating-point work.
class PrecisionGuard {
public:
    explicit PrecisionGuard(int bits)
        : saved_(Real::thread_default_precision()) {
        Real::thread_default_precision(digits10_for_bits(bits));
    }
    ~PrecisionGuard() { Real::thread_default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

inline Real to_real(const Int& v) { return Real(v); }

inline Real to_real(const Rat& v) {
    return Real(boost::multiprecision::numerator(v)) /
           Real(boost::multiprecision::denominator(v));
}

// Minimal complex type over Real. std::complex is only specified for
// builtin floating types, so we carry our own; only the operations the
// root finder needs.
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Complex(const Real& r) : re(r), im(0) {}

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator/(const Complex& o) const {
        Real d = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
    }
    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }

    friend Complex operator*(const Real& s, const Complex& c) {
        return {s * c.re, s * c.im};
    }

    Real norm() const { return re * re + im * im; }
    Real abs() const { return sqrt(norm()); }
};

}  // namespace spantree
