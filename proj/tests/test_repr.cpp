#include <doctest.h>

#include "mckay/repr.hpp"

using namespace mckay;

namespace {

Cyclotomic zeta(long long n, long long e) { return Cyclotomic::root_of_unity(n, e); }

bool chars_equal(const Character& a, const Character& b) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!(a.values[i] == b.values[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("irrep inventories") {
    CHECK(irreps(GroupSpec::dihedral(4, 1)).size() == 24);  // 16 one-dim + 8 two-dim
    CHECK(irreps(GroupSpec::pprime(2)).size() == 21);       // 9 + 9 + 3
    CHECK(irreps(GroupSpec::pprime(2).times_cyclic(5)).size() == 105);
    CHECK(irreps(GroupSpec::cyclic(8, 3)).size() == 8);
    CHECK_THROWS_AS(irreps(GroupSpec::binary_tetrahedral()), UnsupportedError);
    CHECK_THROWS_AS(character_table(GroupSpec::binary_icosahedral()), UnsupportedError);
    CHECK_THROWS_AS(character_table(GroupSpec::binary_dihedral(4).times_cyclic(3)),
                    UnsupportedError);
}

TEST_CASE("irrep id canonicalization") {
    GroupSpec d = GroupSpec::dihedral(4, 2);  // k=4, r=2: t in 1..4, s in 0..3
    CHECK(canonicalize(d, IrrepId::d_two(1, 4)) == IrrepId::d_two(4, 0));  // s >= 2^{k-2} flips t
    CHECK(canonicalize(d, IrrepId::d_two(2, 7)) == IrrepId::d_two(3, 3));
    CHECK(canonicalize(d, IrrepId::d_two(3, 11)) == IrrepId::d_two(3, 3));  // s mod 2^{k-1}
    CHECK(canonicalize(d, IrrepId::d_one(17)) == IrrepId::d_one(1));
    CHECK_THROWS_AS(canonicalize(d, IrrepId::d_two(0, 1)), InvalidIdError);
    CHECK_THROWS_AS(canonicalize(d, IrrepId::d_two(5, 1)), InvalidIdError);
    // idempotent on every canonical id
    for (const auto& id : irreps(d)) CHECK(canonicalize(d, id) == id);

    GroupSpec p = GroupSpec::pprime(2);
    CHECK(canonicalize(p, IrrepId::p_two(13)) == IrrepId::p_two(4));
    CHECK(canonicalize(p, IrrepId::p_three(5)) == IrrepId::p_three(2));
}

TEST_CASE("representation matrices satisfy the presentations") {
    GroupSpec d = GroupSpec::dihedral(3, 2);
    for (const auto& id : irreps(d)) {
        Representation rep = rep_matrices(d, id);
        const CycMatrix& x = rep.gen_images[0];
        const CycMatrix& y = rep.gen_images[1];
        CHECK(x.pow(8).is_identity());
        CHECK(y.pow(5).is_identity());
        CHECK(x * y == y.pow(4) * x);  // xyx^-1 = y^-1
    }
    // alpha_j(x) = zeta_{2^k}^j, alpha_j(y) = 1
    Representation a3 = rep_matrices(d, IrrepId::d_one(3));
    CHECK(a3.gen_images[0].at(0, 0) == zeta(8, 3));
    CHECK(a3.gen_images[1].at(0, 0) == Cyclotomic::one());

    GroupSpec p = GroupSpec::pprime(2);
    for (const auto& id : irreps(p)) {
        Representation rep = rep_matrices(p, id);
        const CycMatrix& x = rep.gen_images[0];
        const CycMatrix& y = rep.gen_images[1];
        const CycMatrix& z = rep.gen_images[2];
        CHECK(x * x == y * y);                    // x^2 = y^2
        CHECK((x * y) * (x * y) == y * y);        // (xy)^2 = y^2
        CHECK(z * x == y * z);                    // zxz^-1 = y
        CHECK(z * y == (x * y) * z);              // zyz^-1 = xy
        CHECK(z.pow(9).is_identity());            // z^{3^k} = 1
    }
    // the printed 3x3 z-matrix cubes to the identity
    Representation s0 = rep_matrices(p, IrrepId::p_three(0));
    CHECK(s0.gen_images[2].pow(3).is_identity());
}

TEST_CASE("trace route equals closed form") {
    for (const char* text : {"C(8,3)", "C(5,2)", "D(3,1)", "D(3,2)", "D(4,1)", "P(2)",
                             "D(3,1)xC(5)", "P(2)xC(5)"}) {
        CAPTURE(text);
        GroupSpec spec = GroupSpec::parse(text);
        for (const auto& id : irreps(spec)) {
            Character closed = closed_form_character(spec, id);
            Character traced = character_of(spec, id);
            CHECK(chars_equal(closed, traced));
        }
    }
}

TEST_CASE("product tables against brute element enumeration") {
    // tables of direct products are built as pointwise products of the
    // factor tables; the oracle evaluates the representation on every
    // realized group element and compares traces class by class
    GroupSpec spec = GroupSpec::dihedral(3, 1).times_cyclic(5);
    auto table = character_table(spec);
    auto g = Group::get(spec);
    for (int i = 0; i < table->num_irreps(); i += 7) {
        Representation rep = rep_matrices(spec, table->ids[i]);
        for (int e = 0; e < g->order(); ++e) {
            Cyclotomic trace = rep.evaluate(g->words()[e]).trace();
            CHECK(trace == table->chars[i].values[g->class_of(e)]);
        }
    }
}

TEST_CASE("character table invariants") {
    for (const char* text : {"C(8,3)", "D(3,1)", "D(4,2)", "P(2)", "D(3,1)xC(5)"}) {
        CAPTURE(text);
        auto table = character_table(GroupSpec::parse(text));
        // number of irreducibles = number of classes
        CHECK(table->num_irreps() == table->num_classes());
        // sum of squared dimensions = |G|
        long long sum = 0;
        for (const auto& chi : table->chars) sum += chi.dim() * chi.dim();
        CHECK(sum == table->order);
        // row orthonormality
        for (int i = 0; i < table->num_irreps(); ++i)
            for (int j = i; j < table->num_irreps(); ++j) {
                Rational ip = inner_product(*table, table->chars[i], table->chars[j]);
                CHECK(ip == Rational(i == j ? 1 : 0));
            }
        // column orthogonality: sum_i chi_i(g) conj(chi_i(h)) = |C(g)| [g ~ h]
        for (int c = 0; c < table->num_classes(); ++c)
            for (int c2 = c; c2 < table->num_classes(); ++c2) {
                Cyclotomic sum2 = Cyclotomic::zero();
                for (const auto& chi : table->chars)
                    sum2 += chi.values[c] * chi.values[c2].conjugate();
                if (c == c2)
                    CHECK(sum2.to_rational() == Rational(table->order / table->classes[c].size));
                else
                    CHECK(sum2.is_zero());
            }
    }
}

TEST_CASE("table entries match the closed formulas cell by cell") {
    // C(n,q): entry (j,l) = zeta_n^{lj}
    auto c = character_table(GroupSpec::cyclic(8, 3));
    for (int j = 0; j < 8; ++j)
        for (int l = 0; l < 8; ++l) CHECK(c->chars[j].values[l] == zeta(8, l * j));

    // chi_{t,s}(x^{2l+1}) = 0 for D
    auto d = character_table(GroupSpec::dihedral(4, 1));
    for (int i = 0; i < d->num_irreps(); ++i) {
        if (d->ids[i].kind != IrrepId::Kind::DTwo) continue;
        for (int cl = 0; cl < d->num_classes(); ++cl)
            if (d->classes[cl].key[0] == 2) CHECK(d->chars[i].values[cl].is_zero());
    }

    // P': phi_s(x z^{3l}) = -zeta_{3^{k-1}}^{ls} on class 6_l
    auto p = character_table(GroupSpec::pprime(2));
    for (int i = 0; i < p->num_irreps(); ++i) {
        if (p->ids[i].kind != IrrepId::Kind::PThree) continue;
        long long s = p->ids[i].a;
        for (int cl = 0; cl < p->num_classes(); ++cl)
            if (p->classes[cl].key[0] == 6) {
                long long l = p->classes[cl].key[1];
                CHECK(p->chars[i].values[cl] == -zeta(3, l * s));
            }
    }

    // trivial character: 1 everywhere
    for (const auto& v : p->chars[p->index_of(IrrepId::p_one(0))].values)
        CHECK(v == Cyclotomic::one());
}

TEST_CASE("irreducibility inner products") {
    GroupSpec d = GroupSpec::dihedral(4, 2);
    auto table = character_table(d);
    for (long long t = 1; t <= 4; ++t)
        for (long long s = 0; s < 4; ++s) {
            Character chi = closed_form_character(d, IrrepId::d_two(t, s));
            CHECK(inner_product(*table, chi, chi) == Rational(1));
        }
    // the reducible boundary cases
    for (long long s = 0; s < 4; ++s) {
        Character chi0 = closed_form_character(d, IrrepId::d_two(0, s));
        CHECK(inner_product(*table, chi0, chi0) == Rational(2));
        Character chi5 = closed_form_character(d, IrrepId::d_two(2 * d.r + 1, s));
        CHECK(inner_product(*table, chi5, chi5) == Rational(2));
    }
}

TEST_CASE("decompositions") {
    GroupSpec d = GroupSpec::dihedral(4, 1);
    auto table = character_table(d);
    long long half = 1LL << (d.k - 1), quarter = 1LL << (d.k - 2);

    // rho_{0,s} = alpha_s + alpha_{2^{k-1}+s}
    for (long long s = 0; s < quarter; ++s) {
        auto mult = decompose(*table, closed_form_character(d, IrrepId::d_two(0, s)));
        for (int i = 0; i < table->num_irreps(); ++i) {
            long long expect = (table->ids[i] == IrrepId::d_one(s) ||
                                table->ids[i] == IrrepId::d_one(half + s))
                                   ? 1
                                   : 0;
            CHECK(mult[i] == expect);
        }
    }
    // rho_{2r+1,s} = alpha_{2^{k-2}+s} + alpha_{2^{k-1}+2^{k-2}+s}
    for (long long s = 0; s < quarter; ++s) {
        auto mult = decompose(*table, closed_form_character(d, IrrepId::d_two(2 * d.r + 1, s)));
        for (int i = 0; i < table->num_irreps(); ++i) {
            long long expect = (table->ids[i] == IrrepId::d_one(quarter + s) ||
                                table->ids[i] == IrrepId::d_one(half + quarter + s))
                                   ? 1
                                   : 0;
            CHECK(mult[i] == expect);
        }
    }

    // natural x sigma_s = rho_{s+1} + rho_{3^{k-1}+s+1} + rho_{2*3^{k-1}+s+1}
    GroupSpec p = GroupSpec::pprime(2);
    auto pt = character_table(p);
    for (long long s = 0; s < 3; ++s) {
        Character prod = char_mul(natural_character(p),
                                  closed_form_character(p, IrrepId::p_three(s)));
        auto mult = decompose(*pt, prod);
        for (int i = 0; i < pt->num_irreps(); ++i) {
            long long expect = (pt->ids[i] == IrrepId::p_two((s + 1) % 9) ||
                                pt->ids[i] == IrrepId::p_two((3 + s + 1) % 9) ||
                                pt->ids[i] == IrrepId::p_two((6 + s + 1) % 9))
                                   ? 1
                                   : 0;
            CHECK(mult[i] == expect);
        }
    }

    // decompose(chi_i) is the i-th unit vector
    for (int i = 0; i < pt->num_irreps(); ++i) {
        auto mult = decompose(*pt, pt->chars[i]);
        for (int j = 0; j < pt->num_irreps(); ++j) CHECK(mult[j] == (i == j ? 1 : 0));
    }

    // a class function that is not a character: natural minus trivial has a
    // negative multiplicity at the trivial irrep
    Character triv = closed_form_character(p, IrrepId::p_one(0));
    Character fake = natural_character(p);
    for (std::size_t i = 0; i < fake.values.size(); ++i) fake.values[i] -= triv.values[i];
    CHECK_THROWS_AS(decompose(*pt, fake), NotACharacterError);
}

TEST_CASE("isomorphism identities as character equalities") {
    GroupSpec d = GroupSpec::dihedral(4, 2);
    for (long long t = 1; t <= 2 * d.r; ++t)
        for (long long s = 0; s < 4; ++s) {
            CHECK(chars_equal(closed_form_character(d, IrrepId::d_two(t, s)),
                              closed_form_character(d, IrrepId::d_two(t, s + 8))));
            CHECK(chars_equal(closed_form_character(d, IrrepId::d_two(2 * d.r + 1 - t, s)),
                              closed_form_character(d, IrrepId::d_two(t, s + 4))));
        }
    GroupSpec p = GroupSpec::pprime(2);
    for (long long s = 0; s < 3; ++s)
        CHECK(chars_equal(closed_form_character(p, IrrepId::p_three(s + 3)),
                          closed_form_character(p, IrrepId::p_three(s))));
}

TEST_CASE("natural characters and faithfulness") {
    // C(8,3): values 2, z8 + z8^3, ... at classes g^0, g^1, ...
    GroupSpec c = GroupSpec::cyclic(8, 3);
    Character nat = natural_character(c);
    CHECK(nat.dim() == 2);
    for (int l = 0; l < 8; ++l) CHECK(nat.values[l] == zeta(8, l) + zeta(8, 3 * l));
    CHECK(is_faithful(*character_table(c), nat));

    // D: dimension 2, zero on odd-power classes
    GroupSpec d = GroupSpec::dihedral(4, 1);
    Character dn = natural_character(d);
    CHECK(dn.dim() == 2);
    auto dt = character_table(d);
    for (int cl = 0; cl < dt->num_classes(); ++cl)
        if (dt->classes[cl].key[0] == 2) CHECK(dn.values[cl].is_zero());
    CHECK(is_faithful(*dt, dn));

    // P': dimension 2, zero on 6_l
    GroupSpec p = GroupSpec::pprime(2);
    Character pn = natural_character(p);
    CHECK(pn.dim() == 2);
    auto pt = character_table(p);
    for (int cl = 0; cl < pt->num_classes(); ++cl)
        if (pt->classes[cl].key[0] == 6) CHECK(pn.values[cl].is_zero());
    CHECK(is_faithful(*pt, pn));

    // products
    GroupSpec pc = GroupSpec::pprime(2).times_cyclic(5);
    CHECK(is_faithful(*character_table(pc), natural_character(pc)));

    // trivial character of a nontrivial group is not faithful
    Character triv = closed_form_character(p, IrrepId::p_one(0));
    CHECK(!is_faithful(*pt, triv));

    // beta_2 on C(4,1) has zeta_4^2 in its kernel
    GroupSpec c41 = GroupSpec::cyclic(4, 1);
    CHECK(!is_faithful(*character_table(c41),
                       closed_form_character(c41, IrrepId::cyclic_beta(2))));
}
