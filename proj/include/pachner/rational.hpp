#ifndef PACHNER_RATIONAL_HPP
#define PACHNER_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace pachner {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator), so operator== is exact equality of rationals.
using Rational = mpq_class;
using Integer = mpz_class;

inline int sign_of(const Rational& q) { return sgn(q); }

// Parses "p/q", "p" or "-p/q". Throws parse_error on malformed input.
Rational parse_rational(const std::string& s);

// "p/q" when the denominator is not 1, otherwise just "p".
std::string to_string(const Rational& q);

// Deterministic 64-bit generator (splitmix64); used for jitter and random tests.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform integer in [lo, hi].
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Rational in [-1, 1] with denominator 2^16.
    Rational next_unit() {
        long num = next_in(-65536, 65536);
        Rational r(num, 65536);
        r.canonicalize();
        return r;
    }

  private:
    std::uint64_t state_;
};

} // namespace pachner

#endif
