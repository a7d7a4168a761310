#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfc {

// Exact rational scalar.  GMP keeps the canonical-form invariants
// (gcd(|num|,den)=1, den>0) after every arithmetic operation.
using Rat = mpq_class;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw precondition_error("rational with zero denominator");
    Rat q(n, d);
    q.canonicalize();
    return q;
}

// Accepts "p", "-p/q", with optional whitespace padding.
inline Rat rat_parse(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) throw parse_error("empty rational literal");
    std::string t = s.substr(a, b - a + 1);
    try {
        Rat q(t);
        if (q.get_den() == 0) throw parse_error("zero denominator in '" + t + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational literal '" + t + "'");
    }
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline int rat_sign(const Rat& q) { return sgn(q); }

inline Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0) {
        if (e < 0) throw precondition_error("0 raised to a negative power");
        return Rat(0);
    }
    mpz_class num = q.get_num(), den = q.get_den();
    unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), ae);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), ae);
    Rat r = (e > 0) ? Rat(pn, pd) : Rat(pd, pn);
    r.canonicalize();
    return r;
}

// Exact square root; fails unless the argument is the square of a rational.
inline Rat rat_sqrt_exact(const Rat& q) {
    if (q < 0) throw precondition_error("square root of a negative rational");
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class rn, rd;
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        throw precondition_error("rational is not a perfect square: " + rat_str(q));
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace pfc
