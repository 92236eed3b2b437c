#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace stubborn {

using Q = mpq_class;
using Z = mpz_class;

inline Q q_of(long n, long d = 1) { Q q(n, d); q.canonicalize(); return q; }

// "p/q" or plain "p" when the denominator is 1.
inline std::string q_str(const Q& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Q q_parse(const std::string& s) {
    Q q(s);
    q.canonicalize();
    return q;
}

inline int q_sign(const Q& q) { return sgn(q); }

inline double q_double(const Q& q) { return q.get_d(); }

// floor(sqrt(n)) for n >= 0.
inline Z z_isqrt(const Z& n) {
    Z r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool z_is_square(const Z& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// Deterministic 64-bit splitmix generator for seeded randomized choices.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi] inclusive
    long range(long lo, long hi) {
        return lo + long(next() % uint64_t(hi - lo + 1));
    }
};

} // namespace stubborn
