#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hstats {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Rat rat(long long n) { return Rat(Int(n)); }
inline Rat rat(long long n, long long d) { return Rat(Int(n), Int(d)); }

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

// q^e for integer e of either sign (q != 0 when e < 0).
inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    Rat base = e > 0 ? q : Rat(q.denominator(), q.numerator());
    long k = e > 0 ? e : -e;
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline Int int_pow(Int base, unsigned long e) {
    Int acc(1);
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Int factorial(int n) {
    Int acc(1);
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

// binom(n, k) for integer n >= 0.
inline Int binomial(const Int& n, int k) {
    if (k < 0) return Int(0);
    Int acc(1);
    for (int i = 0; i < k; ++i) acc *= (n - i);
    return acc / factorial(k);
}

// binom(x, k) for rational x (falling factorial over k!).
inline Rat binomial_rat(const Rat& x, int k) {
    if (k < 0) return Rat(0);
    Rat acc(1);
    for (int i = 0; i < k; ++i) acc *= (x - i);
    return acc / Rat(factorial(k));
}

inline std::vector<int> divisors(int n) {
    std::vector<int> ds;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            ds.push_back(d);
            if (d != n / d) ds.push_back(n / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace hstats
