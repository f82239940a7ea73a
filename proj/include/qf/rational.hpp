#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <string>

namespace qf {

// All library arithmetic is exact: rationals everywhere a paper formula
// compares or combines values, big integers for Smith normal form.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);
std::string show_rational(const Rational& r);

inline int sign_of(const Rational& r) { return r.sign(); }

// Deterministic source for every sampled check. mt19937_64 and explicit
// modulo reduction keep the streams identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform-ish integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return eng_() % n; }

    long range(long lo, long hi) { // inclusive bounds
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // rational in [0,1): p/q with 1 <= q <= max_den
    Rational unit_rational(long max_den = 60) {
        long q = range(1, max_den);
        long p = range(0, q - 1);
        return Rational(p, q);
    }

    // small signed rational, |num| <= span, 1 <= den <= max_den
    Rational small_rational(long span = 50, long max_den = 12) {
        long q = range(1, max_den);
        long p = range(-span, span);
        return Rational(p, q);
    }

    // integer-valued rational in [-span, span]
    Rational integer_rational(long span = 50) { return Rational(range(-span, span)); }

    // rational from a large domain; repeated values are astronomically rare
    Rational big_rational() {
        long num = static_cast<long>(below(std::uint64_t(1) << 49)) - (long(1) << 48);
        long den = 1 + static_cast<long>(below(std::uint64_t(1) << 20));
        return Rational(num, den);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace qf
