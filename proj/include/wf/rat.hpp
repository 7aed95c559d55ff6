#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wf {

// Exact rational on 64-bit words. All pipeline quantities are tiny
// (alcove coordinates, root pairings); every multiply is range-checked so
// silent wraparound is impossible.
struct Rat {
    long long num = 0;
    long long den = 1;  // > 0, gcd(|num|, den) == 1

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static long long checked_mul(long long a, long long b) {
        __int128 p = static_cast<__int128>(a) * b;
        if (p > INT64_MAX || p < INT64_MIN) throw std::overflow_error("Rat overflow");
        return static_cast<long long>(p);
    }
    static long long checked_add(long long a, long long b) {
        __int128 s = static_cast<__int128>(a) + b;
        if (s > INT64_MAX || s < INT64_MIN) throw std::overflow_error("Rat overflow");
        return static_cast<long long>(s);
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        long long g = std::gcd(a.den, b.den);
        long long lhs = checked_mul(a.num, b.den / g);
        long long rhs = checked_mul(b.num, a.den / g);
        return Rat(checked_add(lhs, rhs), checked_mul(a.den, b.den / g));
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
    friend Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rat(checked_mul(a.num / g1, b.num / g2),
                   checked_mul(a.den / g2, b.den / g1));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw std::domain_error("Rat: division by zero");
        return a * Rat(b.den, b.num);
    }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// True iff q is an integer multiple of m (m > 0 integer).
inline bool divides(long long m, const Rat& q) {
    if (!q.is_integer()) return false;
    return q.num % m == 0;
}

}  // namespace wf
