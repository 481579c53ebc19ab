// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// Elements are stored in the power basis 1, z, ..., z^(phi(N)-1) reduced
// modulo the N-th cyclotomic polynomial, so equality of values at a common
// conductor is coefficient equality. Operands at different conductors are
// embedded into the lcm conductor first.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

long long euler_phi(long long n);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// Coefficients of Phi_N, constant term first, monic, degree phi(N).
const std::vector<long long>& cyclotomic_polynomial(long long n);

// Per-conductor reduction data, cached and immutable once built.
struct CycloBasis {
    long long n = 1;
    long long phi = 1;
    std::vector<long long> poly;  // Phi_n, size phi+1
    // power_red[e], e in [0, max(2*phi, n)): coordinates of z^e in the basis.
    std::vector<std::vector<long long>> power_red;
};

const CycloBasis& cyclo_basis(long long n);

class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Rational(0)) {}

    static Cyclotomic zero(long long n = 1);
    static Cyclotomic one();
    static Cyclotomic from_rational(const Rational& r);
    // zeta_N^e in canonical form; e is taken mod N. N = 0 is rejected.
    static Cyclotomic root_of_unity(long long n, long long e);
    static Cyclotomic make(long long n, std::vector<Rational> coeffs);  // reduced input

    long long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Value as a rational; throws NotRationalError when any non-constant
    // coordinate is nonzero.
    Rational to_rational() const;

    Cyclotomic embed(long long m) const;  // requires n | m
    Cyclotomic conjugate() const;         // zeta -> zeta^(N-1)

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    // Field-value equality; cross-conductor operands are embedded first.
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    // Structural order (conductor, then coefficients); used for map keys.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

    // Polynomial rendering like "1/2 + 3*z12^2"; parse() accepts it back.
    std::string to_string() const;
    static Cyclotomic parse(const std::string& s);

private:
    long long n_;
    std::vector<Rational> c_;  // size phi(n_)

    explicit Cyclotomic(long long n) : n_(n), c_(cyclo_basis(n).phi, Rational(0)) {}
};

struct NotRationalError : std::domain_error {
    explicit NotRationalError(const std::string& what) : std::domain_error(what) {}
};

// Sparse sum of rational multiples of roots of unity, exponents mod n.
// Cheap to multiply; reduce to a canonical Cyclotomic at the end.
class ZetaSum {
public:
    explicit ZetaSum(long long n = 1) : n_(n) {}
    static ZetaSum monomial(long long n, long long e, Rational coeff);
    static ZetaSum from(const Cyclotomic& x);

    long long conductor() const { return n_; }
    const std::map<long long, Rational>& terms() const { return terms_; }

    ZetaSum embed(long long m) const;
    ZetaSum conj() const;
    friend ZetaSum operator+(const ZetaSum& a, const ZetaSum& b);
    friend ZetaSum operator*(const ZetaSum& a, const ZetaSum& b);
    ZetaSum& operator+=(const ZetaSum& b) { return *this = *this + b; }
    ZetaSum& operator*=(const ZetaSum& b) { return *this = *this * b; }

    Cyclotomic canonical() const;

private:
    long long n_;
    std::map<long long, Rational> terms_;  // exponent in [0, n) -> coefficient

    void add_term(long long e, const Rational& c);
};

}  // namespace mckay
