#pragma once

#include "pfcohom/rational.hpp"

#include <vector>

namespace pfc {

// Element of Q(zeta_N) in the power basis of Q[x]/Phi_N(x).
// coeffs.size() == phi(N) always; values are kept Phi_N-reduced.
class Cyclo {
  public:
    Cyclo() : n_(1), c_(1, Rat(0)) {}
    explicit Cyclo(const Rat& r) : n_(1), c_(1, r) {}
    Cyclo(int conductor, std::vector<Rat> coeffs);

    static Cyclo zeta(int conductor, long power = 1);
    static Cyclo from_rat(const Rat& r) { return Cyclo(r); }

    int conductor() const { return n_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Throws unless the value lies in Q.
    Rat to_rational() const;

    Cyclo operator-() const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
    Cyclo& operator+=(const Cyclo& b) { return *this = *this + b; }
    Cyclo& operator-=(const Cyclo& b) { return *this = *this - b; }
    Cyclo& operator*=(const Cyclo& b) { return *this = *this * b; }
    Cyclo& operator/=(const Cyclo& b) { return *this = *this / b; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    Cyclo inverse() const;
    // Image under zeta_N -> zeta_N^{-1} (complex conjugation on the canonical embedding).
    Cyclo conj() const;
    bool is_real() const { return conj() == *this; }

    // Re-expresses the value in Q(zeta_M); requires conductor() | M.
    Cyclo embedded(int m) const;

    std::string str() const;

    // Guard against Phi_N degree blowup.  Default ceiling is 64.
    static int conductor_ceiling();
    static void set_conductor_ceiling(int n);

  private:
    int n_;
    std::vector<Rat> c_;
};

inline Cyclo operator*(const Rat& r, const Cyclo& z) { return Cyclo(r) * z; }

// phi(N) and Phi_N as an integer-coefficient polynomial (low-to-high).
int euler_phi(int n);
const std::vector<Rat>& cyclotomic_polynomial(int n);

// Sign of a conjugation-fixed cyclotomic number under zeta_N -> e^{2 pi i/N}.
// Exact-zero short-circuit first, then rational interval refinement.
// Throws precondition_error on non-real input.
int sign_of_real(const Cyclo& a);

}  // namespace pfc
