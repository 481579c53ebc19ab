// The McKay-matrix kernels. Character values are algebraic integers, so in
// the power basis of Q(zeta_N) every coordinate is an integer; each entry
// a_ij is a weighted sum of products of three roots of unity, accumulated as
// an int64 exponent vector and reduced modulo Phi_N once at the end.
//
// mckay_matrix() is the production path (OpenMP over rows); the dense
// rational reference below it computes the same numbers one inner product at
// a time and exists for the tests and the benchmark.

#include <atomic>

#include "mckay/quiver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mckay {

namespace {

// per class: list of (exponent, integer coefficient) at conductor N
using Monomials = std::vector<std::vector<std::pair<long long, long long>>>;

Monomials integer_monomials(const Character& chi, long long n) {
    Monomials out;
    out.reserve(chi.values.size());
    for (const auto& value : chi.values) {
        Cyclotomic v = value.embed(n);
        std::vector<std::pair<long long, long long>> terms;
        const auto& c = v.coeffs();
        for (std::size_t e = 0; e < c.size(); ++e) {
            if (c[e].is_zero()) continue;
            if (!c[e].is_integer())
                throw std::logic_error("character value is not an algebraic integer: " +
                                       v.to_string());
            terms.emplace_back(static_cast<long long>(e), c[e].to_int64());
        }
        out.push_back(std::move(terms));
    }
    return out;
}

// <w-weighted sum over classes of a * b * conj(c)> accumulated into acc;
// touched exponents recorded for cheap reset.
void accumulate_triple(const Monomials& a, const Monomials& b, const Monomials& c,
                       const std::vector<long long>& weights, long long n,
                       std::vector<long long>& acc, std::vector<long long>& touched) {
    const std::size_t classes = weights.size();
    for (std::size_t cl = 0; cl < classes; ++cl) {
        long long w = weights[cl];
        for (const auto& [ea, ca] : a[cl])
            for (const auto& [eb, cb] : b[cl]) {
                long long e_ab = ea + eb;
                long long c_ab = w * ca * cb;
                for (const auto& [ec, cc] : c[cl]) {
                    long long e = (e_ab + n - ec) % n;
                    if (acc[e] == 0) touched.push_back(e);
                    acc[e] += c_ab * cc;
                }
            }
    }
}

// reduce mod Phi_N; the value must be a rational integer divisible by order.
// Zeroes acc as it sweeps, which also skips duplicate entries in touched.
long long extract_integer(const CycloBasis& basis, std::vector<long long>& acc,
                          std::vector<long long>& touched, long long order, bool& ok) {
    std::vector<long long> coords(basis.phi, 0);
    for (long long e : touched) {
        if (acc[e] == 0) continue;
        const auto& row = basis.power_red[e];
        for (long long t = 0; t < basis.phi; ++t) coords[t] += acc[e] * row[t];
        acc[e] = 0;
    }
    touched.clear();
    for (long long t = 1; t < basis.phi; ++t)
        if (coords[t] != 0) ok = false;
    if (coords[0] % order != 0 || coords[0] < 0) ok = false;
    return coords[0] / order;
}

std::vector<long long> class_sizes(const CharacterTable& table) {
    std::vector<long long> w;
    w.reserve(table.classes.size());
    for (const auto& c : table.classes) w.push_back(c.size);
    return w;
}

}  // namespace

std::vector<std::vector<long long>> mckay_matrix(const CharacterTable& table,
                                                 const Character& rho) {
    const long long n = table.conductor;
    const CycloBasis& basis = cyclo_basis(n);
    const int count = table.num_irreps();
    const auto weights = class_sizes(table);
    const Monomials rho_mono = integer_monomials(rho, n);
    std::vector<Monomials> chars;
    chars.reserve(count);
    for (const auto& chi : table.chars) chars.push_back(integer_monomials(chi, n));

    std::vector<std::vector<long long>> result(count, std::vector<long long>(count, 0));
    std::atomic<bool> all_ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < count; ++i) {
        std::vector<long long> acc(n, 0), touched;
        for (int j = 0; j < count; ++j) {
            accumulate_triple(rho_mono, chars[i], chars[j], weights, n, acc, touched);
            bool ok = true;
            result[i][j] = extract_integer(basis, acc, touched, table.order, ok);
            if (!ok) all_ok = false;
        }
    }
    if (!all_ok)
        throw NotRationalError("McKay multiplicities of " + table.spec.to_string() +
                               " are not nonnegative integers; table is inconsistent");
    return result;
}

std::vector<std::vector<long long>> mckay_matrix_reference(const CharacterTable& table,
                                                           const Character& rho) {
    const int count = table.num_irreps();
    std::vector<std::vector<long long>> result(count, std::vector<long long>(count, 0));
    for (int i = 0; i < count; ++i) {
        Character product = char_mul(rho, table.chars[i]);
        for (int j = 0; j < count; ++j) {
            Rational a = inner_product(table, product, table.chars[j]);
            if (!a.is_integer() || a.sign() < 0)
                throw NotRationalError("McKay multiplicity is not a nonnegative integer: " +
                                       a.to_string());
            result[i][j] = a.to_int64();
        }
    }
    return result;
}

std::vector<std::vector<long long>> gram_matrix(const CharacterTable& table) {
    Character one;
    one.spec = table.spec;
    one.values.assign(table.classes.size(), Cyclotomic::one());
    return mckay_matrix(table, one);
}

bool column_orthogonality_holds(const CharacterTable& table) {
    const long long n = table.conductor;
    const CycloBasis& basis = cyclo_basis(n);
    const int classes = table.num_classes();
    std::vector<Monomials> chars;
    for (const auto& chi : table.chars) chars.push_back(integer_monomials(chi, n));

    std::atomic<bool> ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int c = 0; c < classes; ++c) {
        std::vector<long long> acc(n, 0), touched;
        for (int c2 = 0; c2 < classes; ++c2) {
            for (std::size_t i = 0; i < chars.size(); ++i)
                for (const auto& [ea, ca] : chars[i][c])
                    for (const auto& [eb, cb] : chars[i][c2]) {
                        long long e = (ea + n - eb) % n;
                        if (acc[e] == 0) touched.push_back(e);
                        acc[e] += ca * cb;
                    }
            long long expected = c == c2 ? table.order / table.classes[c].size : 0;
            std::vector<long long> coords(basis.phi, 0);
            for (long long e : touched) {
                if (acc[e] == 0) continue;
                const auto& row = basis.power_red[e];
                for (long long t = 0; t < basis.phi; ++t) coords[t] += acc[e] * row[t];
                acc[e] = 0;
            }
            touched.clear();
            for (long long t = 1; t < basis.phi; ++t)
                if (coords[t] != 0) ok = false;
            if (coords[0] != expected) ok = false;
        }
    }
    return ok;
}

}  // namespace mckay
