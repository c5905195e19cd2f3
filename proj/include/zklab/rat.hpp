#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace zklab {

// Exact arithmetic everywhere a probability lives. mpq_class keeps values
// canonical (lowest terms, positive denominator) as long as they are built
// through arithmetic or the helpers below.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "num/den" and plain integers; the format emitted by rat_str.
inline Rat rat_parse(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline bool is_probability(const Rat& q) { return q >= 0 && q <= 1; }

}  // namespace zklab
