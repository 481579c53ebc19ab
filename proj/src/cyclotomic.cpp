#include "mckay/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace mckay {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lcm_ll(long long a, long long b) { return a / gcd_ll(a, b) * b; }

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, used to build Phi_N recursively.
std::vector<long long> poly_div_exact(std::vector<long long> num, const std::vector<long long>& den) {
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        long long c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (long long v : num)
        if (v != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return q;
}

std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::mutex cache_mutex;

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(long long n) {
    static std::unordered_map<long long, std::vector<long long>> cache;
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: conductor must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by the product of Phi_d over proper divisors d | n.
    std::vector<long long> result;
    if (n == 1) {
        result = {-1, 1};
    } else {
        std::vector<long long> den = {1};
        for (long long d = 1; d < n; ++d)
            if (n % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
        std::vector<long long> num(n + 1, 0);
        num[0] = -1;
        num[n] = 1;
        result = poly_div_exact(std::move(num), den);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(n, std::move(result));
    return it->second;
}

const CycloBasis& cyclo_basis(long long n) {
    static std::unordered_map<long long, CycloBasis> cache;
    if (n < 1) throw std::invalid_argument("cyclotomic conductor must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    CycloBasis b;
    b.n = n;
    b.poly = cyclotomic_polynomial(n);
    b.phi = static_cast<long long>(b.poly.size()) - 1;
    long long count = std::max(2 * b.phi, n);
    b.power_red.reserve(count);
    std::vector<long long> cur(b.phi, 0);
    for (long long e = 0; e < count; ++e) {
        if (e == 0) {
            cur[0] = 1;
        } else {
            // multiply by x, then reduce the overflowing top coefficient
            long long top = cur[b.phi - 1];
            for (long long i = b.phi - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            if (top != 0)
                for (long long i = 0; i < b.phi; ++i) {
                    long long delta;
                    if (__builtin_mul_overflow(top, b.poly[i], &delta) ||
                        __builtin_sub_overflow(cur[i], delta, &cur[i]))
                        throw std::overflow_error("cyclotomic reduction overflow");
                }
        }
        b.power_red.push_back(cur);
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(n, std::move(b));
    return it->second;
}

Cyclotomic Cyclotomic::zero(long long n) { return Cyclotomic(n); }

Cyclotomic Cyclotomic::one() {
    Cyclotomic r(1);
    r.c_[0] = Rational(1);
    return r;
}

Cyclotomic Cyclotomic::from_rational(const Rational& r) {
    Cyclotomic x(1);
    x.c_[0] = r;
    return x;
}

Cyclotomic Cyclotomic::root_of_unity(long long n, long long e) {
    if (n < 1) throw std::invalid_argument("root_of_unity: invalid conductor 0");
    const CycloBasis& b = cyclo_basis(n);
    e %= n;
    if (e < 0) e += n;
    Cyclotomic r(n);
    for (long long i = 0; i < b.phi; ++i) r.c_[i] = Rational(b.power_red[e][i]);
    return r;
}

Cyclotomic Cyclotomic::make(long long n, std::vector<Rational> coeffs) {
    const CycloBasis& b = cyclo_basis(n);
    if (static_cast<long long>(coeffs.size()) != b.phi)
        throw std::invalid_argument("Cyclotomic::make: coefficient count must equal phi(n)");
    Cyclotomic r(n);
    r.c_ = std::move(coeffs);
    return r;
}

bool Cyclotomic::is_zero() const {
    for (const auto& v : c_)
        if (!v.is_zero()) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational Cyclotomic::to_rational() const {
    if (!is_rational())
        throw NotRationalError("cyclotomic value is not rational: " + to_string());
    return c_[0];
}

Cyclotomic Cyclotomic::embed(long long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("Cyclotomic::embed: target conductor not a multiple");
    const CycloBasis& b = cyclo_basis(m);
    long long step = m / n_;
    Cyclotomic r(m);
    for (long long e = 0; e < static_cast<long long>(c_.size()); ++e) {
        if (c_[e].is_zero()) continue;
        const auto& row = b.power_red[e * step];
        for (long long i = 0; i < b.phi; ++i)
            if (row[i] != 0) r.c_[i] += c_[e] * Rational(row[i]);
    }
    return r;
}

Cyclotomic Cyclotomic::conjugate() const {
    const CycloBasis& b = cyclo_basis(n_);
    Cyclotomic r(n_);
    for (long long e = 0; e < b.phi; ++e) {
        if (c_[e].is_zero()) continue;
        long long me = (n_ - e) % n_;
        const auto& row = b.power_red[me];
        for (long long i = 0; i < b.phi; ++i)
            if (row[i] != 0) r.c_[i] += c_[e] * Rational(row[i]);
    }
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long long m = lcm_ll(a.n_, b.n_);
    if (a.n_ != m) return a.embed(m) + b.embed(m);
    if (b.n_ != m) return a + b.embed(m);
    Cyclotomic r(m);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long long m = lcm_ll(a.n_, b.n_);
    if (a.n_ != m || b.n_ != m) return a.embed(m) * b.embed(m);
    const CycloBasis& basis = cyclo_basis(m);
    std::vector<Rational> conv(2 * basis.phi - 1, Rational(0));
    for (long long i = 0; i < basis.phi; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (long long j = 0; j < basis.phi; ++j) {
            if (b.c_[j].is_zero()) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    Cyclotomic r(m);
    for (long long e = 0; e < static_cast<long long>(conv.size()); ++e) {
        if (conv[e].is_zero()) continue;
        if (e < basis.phi) {
            r.c_[e] += conv[e];
        } else {
            const auto& row = basis.power_red[e];
            for (long long i = 0; i < basis.phi; ++i)
                if (row[i] != 0) r.c_[i] += conv[e] * Rational(row[i]);
        }
    }
    return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    long long m = lcm_ll(a.n_, b.n_);
    return a.embed(m).c_ == b.embed(m).c_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == b.c_[i]) continue;
        return a.c_[i] < b.c_[i];
    }
    return false;
}

std::string Cyclotomic::to_string() const {
    if (is_rational()) return c_[0].to_string();
    std::ostringstream out;
    bool first = true;
    for (std::size_t e = 0; e < c_.size(); ++e) {
        if (c_[e].is_zero()) continue;
        Rational v = c_[e];
        if (first) {
            if (v.sign() < 0) {
                out << "-";
                v = -v;
            }
            first = false;
        } else {
            out << (v.sign() < 0 ? " - " : " + ");
            if (v.sign() < 0) v = -v;
        }
        if (e == 0) {
            out << v.to_string();
            continue;
        }
        if (!(v == Rational(1))) out << v.to_string() << "*";
        out << "z" << n_;
        if (e > 1) out << "^" << e;
    }
    return out.str();
}

Cyclotomic Cyclotomic::parse(const std::string& s) {
    // value := ['-'] term (('+'|'-') term)* ; term := rat ['*' pow] | pow
    // pow := 'z' N ['^' e]
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    struct Term {
        Rational coeff;
        long long n = 1;
        long long e = 0;
    };
    std::vector<Term> terms;
    skip_ws();
    if (i == s.size()) throw std::invalid_argument("Cyclotomic::parse: empty input");
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') {
        neg = s[i] == '-';
        ++i;
    }
    while (true) {
        skip_ws();
        Term t;
        bool have_coeff = false;
        if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])))) {
            std::size_t start = i;
            while (i < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
                ++i;
            t.coeff = Rational::parse(s.substr(start, i - start));
            have_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        } else {
            t.coeff = Rational(1);
        }
        if (i < s.size() && s[i] == 'z') {
            ++i;
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (start == i) throw std::invalid_argument("Cyclotomic::parse: missing conductor after z");
            t.n = std::stoll(s.substr(start, i - start));
            t.e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                start = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (start == i) throw std::invalid_argument("Cyclotomic::parse: missing exponent after ^");
                t.e = std::stoll(s.substr(start, i - start));
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("Cyclotomic::parse: expected term at position " +
                                        std::to_string(i));
        }
        if (neg) t.coeff = -t.coeff;
        terms.push_back(t);
        skip_ws();
        if (i == s.size()) break;
        if (s[i] != '+' && s[i] != '-')
            throw std::invalid_argument("Cyclotomic::parse: expected '+' or '-' at position " +
                                        std::to_string(i));
        neg = s[i] == '-';
        ++i;
    }
    long long n = 1;
    for (const auto& t : terms) n = lcm_ll(n, t.n);
    ZetaSum sum(n);
    for (const auto& t : terms) {
        long long e = t.e * (n / t.n) % n;
        sum += ZetaSum::monomial(n, e, t.coeff);
    }
    return sum.canonical();
}

ZetaSum ZetaSum::monomial(long long n, long long e, Rational coeff) {
    ZetaSum z(n);
    e %= n;
    if (e < 0) e += n;
    if (!coeff.is_zero()) z.terms_[e] = std::move(coeff);
    return z;
}

ZetaSum ZetaSum::from(const Cyclotomic& x) {
    ZetaSum z(x.conductor());
    const auto& c = x.coeffs();
    for (std::size_t e = 0; e < c.size(); ++e)
        if (!c[e].is_zero()) z.terms_[static_cast<long long>(e)] = c[e];
    return z;
}

void ZetaSum::add_term(long long e, const Rational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

ZetaSum ZetaSum::embed(long long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("ZetaSum::embed: target conductor not a multiple");
    ZetaSum r(m);
    long long step = m / n_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * step, c);
    return r;
}

ZetaSum ZetaSum::conj() const {
    ZetaSum r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace((n_ - e) % n_, c);
    return r;
}

ZetaSum operator+(const ZetaSum& a, const ZetaSum& b) {
    long long m = lcm_ll(a.n_, b.n_);
    if (a.n_ != m || b.n_ != m) return a.embed(m) + b.embed(m);
    ZetaSum r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

ZetaSum operator*(const ZetaSum& a, const ZetaSum& b) {
    long long m = lcm_ll(a.n_, b.n_);
    if (a.n_ != m || b.n_ != m) return a.embed(m) * b.embed(m);
    ZetaSum r(m);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term((ea + eb) % m, ca * cb);
    return r;
}

Cyclotomic ZetaSum::canonical() const {
    const CycloBasis& b = cyclo_basis(n_);
    std::vector<Rational> coeffs(b.phi, Rational(0));
    for (const auto& [e, c] : terms_) {
        const auto& row = b.power_red[e];
        for (long long i = 0; i < b.phi; ++i)
            if (row[i] != 0) coeffs[i] += c * Rational(row[i]);
    }
    return Cyclotomic::make(n_, std::move(coeffs));
}

}  // namespace mckay
