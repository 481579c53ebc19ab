#include <doctest.h>

#include <complex>
#include <random>

#include "mckay/cyclotomic.hpp"

using namespace mckay;

namespace {

Cyclotomic zeta(long long n, long long e = 1) { return Cyclotomic::root_of_unity(n, e); }

// Independent numeric check: evaluate the canonical coefficients at
// exp(2*pi*i/n) and compare against the expected complex value.
std::complex<long double> numeric(const Cyclotomic& x) {
    const long double pi = 3.14159265358979323846264338327950288L;
    std::complex<long double> z = 0;
    long long n = x.conductor();
    for (std::size_t e = 0; e < x.coeffs().size(); ++e) {
        const Rational& c = x.coeffs()[e];
        long double v = std::strtold(c.num().to_string().c_str(), nullptr) /
                        std::strtold(c.den().to_string().c_str(), nullptr);
        long double arg = 2.0L * pi * static_cast<long double>(e) / static_cast<long double>(n);
        z += v * std::complex<long double>(std::cos(arg), std::sin(arg));
    }
    return z;
}

Cyclotomic random_value(std::mt19937& rng, long long n) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    ZetaSum s(n);
    for (int t = 0; t < 3; ++t) {
        std::uniform_int_distribution<long long> expo(0, n - 1);
        s += ZetaSum::monomial(n, expo(rng), Rational(coeff(rng), den(rng)));
    }
    return s.canonical();
}

}  // namespace

TEST_CASE("bigint and rational basics") {
    BigInt a(123456789012345LL), b(-987654321LL);
    CHECK((a * b).to_string() == "-121932631124827861592745");
    CHECK((a + b).to_string() == "123455801358024");
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(BigInt::gcd(BigInt(48), BigInt(-18)) == BigInt(6));

    Rational x(3, -6);
    CHECK(x.to_string() == "-1/2");
    CHECK((x + Rational(1, 2)).is_zero());
    CHECK(Rational::parse("-7/21") == Rational(-1, 3));
    CHECK(Rational(10, 5).is_integer());

    // random cross-check against int64 arithmetic
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> d(-1000000, 1000000);
    for (int i = 0; i < 200; ++i) {
        long long u = d(rng), v = d(rng);
        CHECK((BigInt(u) * BigInt(v)).to_int64() == u * v);
        CHECK((BigInt(u) + BigInt(v)).to_int64() == u + v);
        if (v != 0) {
            BigInt q2, r2;
            BigInt::divmod(BigInt(u), BigInt(v), q2, r2);
            CHECK(q2.to_int64() == u / v);
            CHECK(r2.to_int64() == u % v);
        }
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<long long>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    for (long long n : {3, 5, 8, 9, 12, 15, 30, 36, 105}) {
        CHECK(static_cast<long long>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
        // Phi_n(zeta_n) = 0 numerically at high precision
        ZetaSum s(n);
        const auto& poly = cyclotomic_polynomial(n);
        for (std::size_t e = 0; e < poly.size(); ++e)
            s += ZetaSum::monomial(n, static_cast<long long>(e) % n, Rational(poly[e]));
        // The sum above uses zeta^e with e mod n, valid since zeta^n = 1.
        CHECK(std::abs(numeric(s.canonical())) < 1e-12L);
    }
}

TEST_CASE("roots of unity") {
    CHECK(zeta(1, 0) == Cyclotomic::one());
    CHECK(zeta(4, 2) == Cyclotomic::from_rational(Rational(-1)));
    CHECK_THROWS_AS(Cyclotomic::root_of_unity(0, 1), std::invalid_argument);

    // zeta_{2r+1}^{-q} = zeta_{2r+1}^{2r+1-q}
    for (long long r = 1; r <= 4; ++r)
        for (long long q = 1; q <= 2 * r; ++q)
            CHECK(zeta(2 * r + 1, -q) == zeta(2 * r + 1, 2 * r + 1 - q));

    // multiplicative order of zeta_N^e is N/gcd(N,e)
    for (long long n = 1; n <= 60; ++n) {
        for (long long e = 1; e < n; ++e) {
            long long expected = n / gcd_ll(n, e);
            Cyclotomic z = zeta(n, e), p = z;
            long long order = 1;
            while (!(p == Cyclotomic::one())) {
                p *= z;
                ++order;
                REQUIRE(order <= n);
            }
            CHECK(order == expected);
        }
    }
}

TEST_CASE("root-of-unity power sums") {
    // sum_{q=0}^{n-1} zeta_n^{tq} = n when n | t, else 0
    for (long long n = 1; n <= 40; ++n) {
        for (long long t = 0; t < 2 * n; ++t) {
            Cyclotomic sum = Cyclotomic::zero(n);
            for (long long q = 0; q < n; ++q) sum += zeta(n, t * q);
            if (t % n == 0)
                CHECK(sum.to_rational() == Rational(n));
            else
                CHECK(sum.is_zero());
        }
    }
    CHECK((Cyclotomic::one() + zeta(3, 1) + zeta(3, 2)).is_zero());
}

TEST_CASE("ring axioms at mixed conductors") {
    std::mt19937 rng(42);
    const long long conductors[] = {1, 2, 3, 4, 6, 8, 9, 12, 15};
    std::uniform_int_distribution<int> pick(0, 8);
    for (int it = 0; it < 120; ++it) {
        Cyclotomic a = random_value(rng, conductors[pick(rng)]);
        Cyclotomic b = random_value(rng, conductors[pick(rng)]);
        Cyclotomic c = random_value(rng, conductors[pick(rng)]);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * Cyclotomic::one() == a);
        // numeric sanity on the product
        CHECK(std::abs(numeric(a.embed(lcm_ll(a.conductor(), b.conductor()))) *
                           numeric(b.embed(lcm_ll(a.conductor(), b.conductor()))) -
                       numeric(a * b)) < 1e-9L);
    }
}

TEST_CASE("conjugation") {
    CHECK(zeta(4, 1).conjugate() == -zeta(4, 1));
    CHECK(Cyclotomic::from_rational(Rational(5, 3)).conjugate() ==
          Cyclotomic::from_rational(Rational(5, 3)));
    for (long long r = 1; r <= 3; ++r)
        for (long long q = 1; q <= r; ++q) {
            Cyclotomic real_part = zeta(2 * r + 1, q) + zeta(2 * r + 1, -q);
            CHECK(real_part.conjugate() == real_part);
        }
    std::mt19937 rng(5);
    for (int it = 0; it < 60; ++it) {
        Cyclotomic a = random_value(rng, 12), b = random_value(rng, 8);
        CHECK(a.conjugate().conjugate() == a);
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    }
}

TEST_CASE("embedding is a ring homomorphism") {
    std::mt19937 rng(9);
    for (int it = 0; it < 60; ++it) {
        Cyclotomic a = random_value(rng, 6), b = random_value(rng, 6);
        CHECK(a.embed(24) + b.embed(24) == (a + b).embed(24));
        CHECK(a.embed(24) * b.embed(24) == (a * b).embed(24));
        if (!(a == b)) CHECK(!(a.embed(24) == b.embed(24)));
    }
}

TEST_CASE("to_rational") {
    CHECK(Cyclotomic::zero().to_rational() == Rational(0));
    CHECK((zeta(3, 1) + zeta(3, 2)).to_rational() == Rational(-1));
    CHECK_THROWS_AS(zeta(5, 1).to_rational(), NotRationalError);
}

TEST_CASE("textual rendering round-trips") {
    std::mt19937 rng(11);
    for (long long n : {1, 4, 8, 12, 45}) {
        for (int it = 0; it < 25; ++it) {
            Cyclotomic x = random_value(rng, n);
            CHECK(Cyclotomic::parse(x.to_string()) == x);
        }
    }
    Cyclotomic sample = Cyclotomic::parse("1/2 + 3*z12^2");
    CHECK(sample == Cyclotomic::from_rational(Rational(1, 2)) + Cyclotomic::from_rational(Rational(3)) * zeta(12, 2));
    CHECK(Cyclotomic::parse("-z8 + 2") == Cyclotomic::from_rational(Rational(2)) - zeta(8, 1));
}
