#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace braidlift {

using Int = mpz_class;
using Rat = mpq_class;

Rat rat(long num, long den = 1);
Rat rat_parse(const std::string& s);  // "p" or "p/q"
std::string rat_str(const Rat& r);

/// Dense integer polynomial, little-endian coefficients, no trailing zeros.
using ZPoly = std::vector<Int>;

int euler_phi(int n);

/// N-th cyclotomic polynomial, computed by exact division of x^N - 1
/// by the product of the cyclotomic polynomials of the proper divisors.
const ZPoly& cyclotomic_poly(int n);

/// Gaussian binomial coefficient as a polynomial in an indeterminate t.
/// Computed over Z[t]; no division by t-integers ever happens.
ZPoly gauss_binom_poly(int n, int k);

/// Element of the cyclotomic field Q(zeta_N), reduced modulo Phi_N.
class Cyc {
  public:
    Cyc() : order_(1) {}
    static Cyc zero(int order);
    static Cyc one(int order);
    static Cyc from_rat(int order, const Rat& r);
    static Cyc from_int(int order, long v) { return from_rat(order, rat(v)); }
    /// zeta_N^e (e may be negative).
    static Cyc zeta(int order, long e);

    int order() const { return order_; }
    bool is_zero() const;
    bool is_one() const;
    /// True when the element lies in Q; then *out is the value.
    bool is_rational(Rat* out = nullptr) const;

    Cyc operator-() const;
    Cyc& operator+=(const Cyc& o);
    Cyc& operator-=(const Cyc& o);
    friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
    friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// modulo Phi_N. Throws on zero.
    Cyc inverse() const;
    Cyc pow(long e) const;

    bool operator==(const Cyc& o) const { return order_ == o.order_ && c_ == o.c_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    /// Multiplicative order when the element is a root of unity, 0 otherwise.
    int root_of_unity_order() const;

    const std::vector<Rat>& coords() const { return c_; }

    /// "1 - 2*q^2 + 1/2*q^3"; the zero element prints as "0".
    std::string str(const std::string& var = "q") const;

    size_t hash() const;

  private:
    int order_;
    std::vector<Rat> c_;  // size euler_phi(order_), zero-padded

    void reduce_(std::vector<Rat>& raw) const;
    static void check_same_order(const Cyc& a, const Cyc& b);
};

/// Evaluate an integer polynomial at a Cyc point.
Cyc eval_zpoly(const ZPoly& p, const Cyc& q);

/// Gaussian binomial (n, k)_q evaluated exactly at q.
Cyc gaussian_binomial(int n, int k, const Cyc& q);

}  // namespace braidlift
