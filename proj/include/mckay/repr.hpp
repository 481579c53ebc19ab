// Irreducible representations, characters and character tables for the
// table-supported catalog families: C(n,q), D(k,r), P(k), and their products
// with coprime cyclic groups. The binary polyhedral groups route through
// embedded Dynkin data instead (see quiver.hpp).
//
// Tables carry closed-form values; character_of() recomputes the same values
// as traces of explicit representation matrices, which gives the tests two
// independent derivations to compare.

#pragma once

#include <memory>

#include "mckay/groups.hpp"

namespace mckay {

struct IrrepId {
    enum class Kind {
        CyclicBeta,  // beta_j of C(n,q)
        DOne,        // alpha_j of D(k,r), 0 <= j < 2^k
        DTwo,        // rho_{t,s} of D(k,r), 1 <= t <= 2r, 0 <= s < 2^{k-2}
        POne,        // alpha_j of P(k), 0 <= j < 3^k
        PTwo,        // rho_j of P(k)
        PThree       // sigma_s of P(k), 0 <= s < 3^{k-1}
    };
    Kind kind = Kind::CyclicBeta;
    long long a = 0, b = 0;  // index, or (t, s) for DTwo
    long long j = -1;        // cyclic cofactor pairing; -1 when not a product

    static IrrepId cyclic_beta(long long jj) { return {Kind::CyclicBeta, jj, 0, -1}; }
    static IrrepId d_one(long long jj) { return {Kind::DOne, jj, 0, -1}; }
    static IrrepId d_two(long long t, long long s) { return {Kind::DTwo, t, s, -1}; }
    static IrrepId p_one(long long jj) { return {Kind::POne, jj, 0, -1}; }
    static IrrepId p_two(long long jj) { return {Kind::PTwo, jj, 0, -1}; }
    static IrrepId p_three(long long s) { return {Kind::PThree, s, 0, -1}; }
    IrrepId paired(long long jj) const {
        IrrepId id = *this;
        id.j = jj;
        return id;
    }

    long long dim() const {
        switch (kind) {
            case Kind::DTwo:
            case Kind::PTwo: return 2;
            case Kind::PThree: return 3;
            default: return 1;
        }
    }

    std::string label() const;

    friend bool operator==(const IrrepId& x, const IrrepId& y) {
        return x.kind == y.kind && x.a == y.a && x.b == y.b && x.j == y.j;
    }
    friend bool operator<(const IrrepId& x, const IrrepId& y) {
        auto key = [](const IrrepId& i) {
            return std::tuple<int, long long, long long, long long>(static_cast<int>(i.kind), i.a,
                                                                    i.b, i.j);
        };
        return key(x) < key(y);
    }
};

// Reduce indices into canonical ranges; for DTwo this applies
// rho_{t,s} ~ rho_{t,s+2^{k-1}} and rho_{t,s} ~ rho_{2r+1-t,s-2^{k-2}}.
// Idempotent. Reducible boundary ids (t = 0 or t = 2r+1) are rejected.
IrrepId canonicalize(const GroupSpec& spec, IrrepId id);

struct Representation {
    GroupSpec spec;
    IrrepId id;
    int dim = 1;
    // generator images, aligned with the group's generator order
    std::vector<CycMatrix> gen_images;

    CycMatrix evaluate(const Word& w) const;
};

struct Character {
    GroupSpec spec;
    std::vector<Cyclotomic> values;  // per conjugacy class, class order of the table

    const Cyclotomic& at(int cls) const { return values[cls]; }
    // dimension = value at the identity class (index 0)
    long long dim() const { return values.at(0).to_rational().to_int64(); }
};

class CharacterTable {
public:
    GroupSpec spec;
    long long order = 0;
    long long conductor = 1;  // all stored values live at this conductor
    std::vector<ConjugacyClass> classes;
    std::vector<IrrepId> ids;
    std::vector<Character> chars;

    int num_classes() const { return static_cast<int>(classes.size()); }
    int num_irreps() const { return static_cast<int>(ids.size()); }
    int index_of(const IrrepId& id) const;  // InvalidId when absent
};

bool has_character_table(const GroupSpec& spec);

// Cached; throws UnsupportedError for BD/BT/BO/BI and their products.
std::shared_ptr<const CharacterTable> character_table(const GroupSpec& spec);

std::vector<IrrepId> irreps(const GroupSpec& spec);

// Generator images exactly as printed in the source tables; for products the
// cyclic generator maps to zeta_m^j * I.
Representation rep_matrices(const GroupSpec& spec, const IrrepId& id);

// Closed-form character value; accepts the reducible boundary ids too
// (DTwo with t = 0 or t = 2r+1), which the decomposition propositions split.
Character closed_form_character(const GroupSpec& spec, const IrrepId& id);

// Trace of rep_matrices at each class representative.
Character character_of(const GroupSpec& spec, const IrrepId& id);

Rational inner_product(const CharacterTable& table, const Character& a, const Character& b);

// Multiplicities of chi over the table's irreducibles; NotACharacter when a
// multiplicity is negative or non-integral.
std::vector<long long> decompose(const CharacterTable& table, const Character& chi);

Character natural_character(const GroupSpec& spec);

bool is_faithful(const CharacterTable& table, const Character& chi);

// Pointwise character algebra (tensor product / direct sum).
Character char_mul(const Character& a, const Character& b);
Character char_add(const Character& a, const Character& b);

}  // namespace mckay
