#ifndef RWGRAPH_RATIONAL_HPP
#define RWGRAPH_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace rwg {

// Exact rational scalar used throughout. All arithmetic is exact; floating
// point input is rejected at the parsing layer.
using Rat = mpq_class;

inline std::string rat_to_string(const Rat& r) {
    return r.get_str();  // "p/q", or "p" when q == 1
}

// Reduced fraction. The two-argument mpq_class constructor keeps num/den as
// given, so every computed quotient must pass through here.
inline Rat frac(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    if (s.find_first_of(".eE") != std::string::npos &&
        s.find_first_not_of("0123456789+-/") != std::string::npos)
        throw std::invalid_argument("rational must be p/q or integer: " + s);
    for (char c : s)
        if (!(c == '+' || c == '-' || c == '/' || (c >= '0' && c <= '9')))
            throw std::invalid_argument("bad character in rational: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("0^negative");
        return 1 / rat_pow(base, -e);
    }
    Rat acc = 1, b = base;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Rat factorial(long n) {
    Rat acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

inline Rat binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Rat acc = 1;
    for (long i = 0; i < k; ++i) acc *= Rat(n - i) / Rat(i + 1);
    return acc;
}

}  // namespace rwg

#endif
