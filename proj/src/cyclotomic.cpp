#include "pfcohom/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pfc {

namespace {

using Poly = std::vector<Rat>;  // low-to-high, no trailing zeros except poly 0 = {}

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// Exact division; remainder must vanish.
Poly poly_div_exact(Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        poly_trim(a);
    }
    if (!a.empty()) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

Poly poly_mod(Poly a, const Poly& m) {
    while (a.size() >= m.size() && !a.empty()) {
        Rat f = a.back() / m.back();
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] -= f * m[i];
        poly_trim(a);
    }
    return a;
}

Poly x_pow_minus_one(int d) {
    Poly p(d + 1, Rat(0));
    p[0] = -1;
    p[d] = 1;
    return p;
}

int mobius(int n) {
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

struct ConductorTables {
    Poly phi_poly;                       // Phi_N
    int degree = 0;                      // phi(N)
    std::vector<std::vector<Rat>> xpow;  // x^k mod Phi_N for k = 0 .. kmax
    std::vector<std::vector<Rat>> conj;  // image of x^j under x -> x^{N-1}
};

std::mutex table_mutex;
std::map<int, ConductorTables> tables;

std::vector<Rat> padded(const Poly& p, int len) {
    std::vector<Rat> r(len, Rat(0));
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[i];
    return r;
}

const ConductorTables& conductor_tables(int n) {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;

    ConductorTables t;
    // Mobius product Phi_N = prod_{d | N} (x^d - 1)^{mu(N/d)}
    Poly num = {Rat(1)}, den = {Rat(1)};
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        if (mu == 1) num = poly_mul(num, x_pow_minus_one(d));
        if (mu == -1) den = poly_mul(den, x_pow_minus_one(d));
    }
    t.phi_poly = poly_div_exact(num, den);
    t.degree = static_cast<int>(t.phi_poly.size()) - 1;

    int kmax = std::max(n - 1, 2 * t.degree - 2);
    t.xpow.resize(kmax + 1);
    Poly cur = {Rat(1)};
    for (int k = 0; k <= kmax; ++k) {
        t.xpow[k] = padded(cur, t.degree);
        cur.insert(cur.begin(), Rat(0));
        cur = poly_mod(std::move(cur), t.phi_poly);
    }
    t.conj.resize(t.degree);
    for (int j = 0; j < t.degree; ++j) {
        int e = static_cast<int>((static_cast<long>(j) * (n - 1)) % n);
        t.conj[j] = t.xpow[e];
    }
    return tables.emplace(n, std::move(t)).first->second;
}

int g_ceiling = 64;

void check_conductor(int n) {
    if (n < 1) throw precondition_error("conductor must be positive");
    if (n > g_ceiling)
        throw precondition_error("conductor " + std::to_string(n) + " exceeds ceiling " +
                                 std::to_string(g_ceiling));
}

}  // namespace

int euler_phi(int n) { return conductor_tables(n).degree; }

const std::vector<Rat>& cyclotomic_polynomial(int n) { return conductor_tables(n).phi_poly; }

int Cyclo::conductor_ceiling() { return g_ceiling; }
void Cyclo::set_conductor_ceiling(int n) {
    if (n < 1) throw precondition_error("conductor ceiling must be positive");
    g_ceiling = n;
}

Cyclo::Cyclo(int conductor, std::vector<Rat> coeffs) : n_(conductor), c_(std::move(coeffs)) {
    check_conductor(n_);
    const auto& t = conductor_tables(n_);
    if (static_cast<int>(c_.size()) != t.degree)
        throw precondition_error("coefficient vector length != phi(conductor)");
}

Cyclo Cyclo::zeta(int conductor, long power) {
    check_conductor(conductor);
    const auto& t = conductor_tables(conductor);
    long e = power % conductor;
    if (e < 0) e += conductor;
    return Cyclo(conductor, t.xpow[static_cast<int>(e)]);
}

bool Cyclo::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclo::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat Cyclo::to_rational() const {
    if (!is_rational()) throw precondition_error("cyclotomic value is not rational: " + str());
    return c_[0];
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo Cyclo::embedded(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw precondition_error("embedding requires conductor divisibility");
    check_conductor(m);
    const auto& t = conductor_tables(m);
    int stride = m / n_;
    std::vector<Rat> out(t.degree, Rat(0));
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& img = t.xpow[(j * stride) % m];
        for (int k = 0; k < t.degree; ++k) out[k] += c_[j] * img[k];
    }
    return Cyclo(m, std::move(out));
}

namespace {
int common_conductor(const Cyclo& a, const Cyclo& b) {
    return static_cast<int>(std::lcm(a.conductor(), b.conductor()));
}
}  // namespace

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    int n = common_conductor(a, b);
    Cyclo x = a.embedded(n), y = b.embedded(n);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    int n = common_conductor(a, b);
    Cyclo x = a.embedded(n), y = b.embedded(n);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    int n = common_conductor(a, b);
    Cyclo x = a.embedded(n), y = b.embedded(n);
    const auto& t = conductor_tables(n);
    std::vector<Rat> conv(2 * t.degree - 1, Rat(0));
    for (int i = 0; i < t.degree; ++i) {
        if (x.c_[i] == 0) continue;
        for (int j = 0; j < t.degree; ++j) {
            if (y.c_[j] == 0) continue;
            conv[i + j] += x.c_[i] * y.c_[j];
        }
    }
    std::vector<Rat> out(t.degree, Rat(0));
    for (int k = 0; k < static_cast<int>(conv.size()); ++k) {
        if (conv[k] == 0) continue;
        const auto& img = t.xpow[k];
        for (int d = 0; d < t.degree; ++d) out[d] += conv[k] * img[d];
    }
    return Cyclo(n, std::move(out));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw precondition_error("division by zero in Q(zeta)");
    const auto& t = conductor_tables(n_);
    // Extended Euclid in Q[x]: u*this + v*Phi_N = 1.
    Poly r0 = t.phi_poly, r1(c_.begin(), c_.end());
    poly_trim(r1);
    Poly s0 = {}, s1 = {Rat(1)};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rat(0));
        Poly r2 = r0;
        while (r2.size() >= r1.size() && !r2.empty()) {
            Rat f = r2.back() / r1.back();
            std::size_t shift = r2.size() - r1.size();
            q[shift] = f;
            for (std::size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= f * r1[i];
            poly_trim(r2);
        }
        Poly s2 = s0;
        Poly qs = poly_mul(q, s1);
        s2.resize(std::max(s2.size(), qs.size()), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        poly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a nonzero constant gcd (Phi_N irreducible over Q).
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
    for (auto& x : s0) x /= r0[0];
    return Cyclo(n_, padded(s0, t.degree));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) {
    int n = common_conductor(a, b);
    return a.embedded(n) * b.embedded(n).inverse();
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    int n = common_conductor(a, b);
    return a.embedded(n).coeffs() == b.embedded(n).coeffs();
}

Cyclo Cyclo::conj() const {
    const auto& t = conductor_tables(n_);
    std::vector<Rat> out(t.degree, Rat(0));
    for (int j = 0; j < t.degree; ++j) {
        if (c_[j] == 0) continue;
        for (int k = 0; k < t.degree; ++k) out[k] += c_[j] * t.conj[j][k];
    }
    return Cyclo(n_, std::move(out));
}

std::string Cyclo::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        os << rat_str(c_[j]);
        if (j >= 1) os << "*z" << n_ << (j > 1 ? "^" + std::to_string(j) : "");
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// Sign determination by rational interval refinement.

namespace {

struct Interval {
    Rat lo, hi;
};

Interval iv_add(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval iv_scale(const Rat& c, const Interval& a) {
    if (c >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

// Dyadic rounding keeps interval endpoint denominators bounded across refinements.
Rat dyadic_down(const Rat& x, unsigned prec) {
    mpz_class scaled;
    mpz_class num = x.get_num() << prec;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(scaled, mpz_class(1) << prec);
    r.canonicalize();
    return r;
}
Rat dyadic_up(const Rat& x, unsigned prec) {
    mpz_class scaled;
    mpz_class num = x.get_num() << prec;
    mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(scaled, mpz_class(1) << prec);
    r.canonicalize();
    return r;
}
Interval iv_round(const Interval& a, unsigned prec) {
    return {dyadic_down(a.lo, prec), dyadic_up(a.hi, prec)};
}

// Alternating arctan series at rational 0 < x <= 1; error below first omitted term.
Interval arctan_iv(const Rat& x, int terms) {
    Rat s(0), xp = x, x2 = x * x;
    for (int k = 0; k < terms; ++k) {
        Rat term = xp / Rat(2 * k + 1);
        s += (k % 2 == 0) ? term : -term;
        xp *= x2;
    }
    Rat bound = xp / Rat(2 * terms + 1);
    return {s - bound, s + bound};
}

// Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
Interval pi_iv(int terms) {
    Interval a = arctan_iv(rat(1, 5), terms);
    Interval b = arctan_iv(rat(1, 239), terms);
    return iv_add(iv_scale(Rat(16), a), iv_scale(Rat(-4), b));
}

// cos over a thin interval [t.lo, t.hi]: Taylor at a dyadic midpoint with
// Lagrange remainder plus the Lipschitz-1 width correction.
Interval cos_iv(const Interval& t, int taylor_terms, unsigned prec) {
    Rat mid = dyadic_down((t.lo + t.hi) / 2, prec);
    Rat s(0), tp(1);
    Rat m2 = mid * mid;
    mpz_class fact(1);
    for (int m = 0; m < taylor_terms; ++m) {
        Rat term = tp / Rat(fact);
        s += (m % 2 == 0) ? term : -term;
        tp *= m2;
        fact *= (2 * m + 1);
        fact *= (2 * m + 2);
    }
    Rat lagrange = tp / Rat(fact);
    if (lagrange < 0) lagrange = -lagrange;
    Rat width = t.hi - mid;
    Rat width2 = mid - t.lo;
    if (width2 > width) width = width2;
    Rat err = lagrange + width;
    return iv_round({s - err, s + err}, prec);
}

}  // namespace

int sign_of_real(const Cyclo& a) {
    if (!(a.conj() == a)) throw precondition_error("sign_of_real: input is not real");
    if (a.is_zero()) return 0;
    if (a.is_rational()) return rat_sign(a.coeffs()[0]);

    const int n = a.conductor();
    for (int level = 0; level < 40; ++level) {
        int terms = 24 + 16 * level;
        unsigned prec = 96 * (level + 1);
        Interval pi = pi_iv(terms);
        Interval acc{Rat(0), Rat(0)};
        for (std::size_t j = 0; j < a.coeffs().size(); ++j) {
            const Rat& c = a.coeffs()[j];
            if (c == 0) continue;
            Rat f = rat(2 * static_cast<long>(j), n);
            Interval angle = iv_scale(f, pi);
            Interval cj = cos_iv(angle, terms, prec);
            acc = iv_add(acc, iv_scale(c, cj));
        }
        if (acc.lo > 0) return 1;
        if (acc.hi < 0) return -1;
    }
    throw std::logic_error("sign_of_real: interval refinement failed to separate from zero");
}

}  // namespace pfc
