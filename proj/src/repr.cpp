#include "mckay/repr.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace mckay {

namespace {

long long pow_ll(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long long mod_ll(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

// zeta_base^e expressed at conductor tc (base | tc)
ZetaSum zs(long long tc, long long base, long long e, Rational coeff = Rational(1)) {
    return ZetaSum::monomial(tc, mod_ll(e, base) * (tc / base), std::move(coeff));
}

}  // namespace

std::string IrrepId::label() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::CyclicBeta: out << "b" << a; break;
        case Kind::DOne:
        case Kind::POne: out << "a" << a; break;
        case Kind::DTwo: out << "r(" << a << "," << b << ")"; break;
        case Kind::PTwo: out << "r" << a; break;
        case Kind::PThree: out << "s" << a; break;
    }
    if (j >= 0) out << ";" << j;
    return out.str();
}

IrrepId canonicalize(const GroupSpec& spec, IrrepId id) {
    if (spec.is_product()) {
        if (id.j < 0) throw InvalidIdError("product irrep requires a cyclic index");
        long long jj = mod_ll(id.j, spec.m);
        IrrepId base = id;
        base.j = -1;
        base = canonicalize(spec.inner(), base);
        return base.paired(jj);
    }
    if (id.j >= 0) throw InvalidIdError("cyclic pairing on a non-product spec");
    switch (spec.family) {
        case Family::Cyclic:
            if (id.kind != IrrepId::Kind::CyclicBeta)
                throw InvalidIdError("irrep " + id.label() + " does not belong to " +
                                     spec.to_string());
            id.a = mod_ll(id.a, spec.n);
            return id;
        case Family::Dihedral: {
            if (id.kind == IrrepId::Kind::DOne) {
                id.a = mod_ll(id.a, 1LL << spec.k);
                return id;
            }
            if (id.kind != IrrepId::Kind::DTwo)
                throw InvalidIdError("irrep " + id.label() + " does not belong to " +
                                     spec.to_string());
            if (id.a < 1 || id.a > 2 * spec.r)
                throw InvalidIdError("rho_{t,s} with t = " + std::to_string(id.a) +
                                     " is reducible or out of range");
            long long t = id.a;
            long long s = mod_ll(id.b, 1LL << (spec.k - 1));
            long long half = 1LL << (spec.k - 2);
            if (s >= half) {
                t = 2 * spec.r + 1 - t;
                s -= half;
            }
            id.a = t;
            id.b = s;
            return id;
        }
        case Family::PPrime: {
            long long t3 = pow_ll(3, spec.k);
            switch (id.kind) {
                case IrrepId::Kind::POne:
                case IrrepId::Kind::PTwo: id.a = mod_ll(id.a, t3); return id;
                case IrrepId::Kind::PThree: id.a = mod_ll(id.a, t3 / 3); return id;
                default:
                    throw InvalidIdError("irrep " + id.label() + " does not belong to " +
                                         spec.to_string());
            }
        }
        default:
            throw UnsupportedError("no irreducible representation ids for " + spec.to_string());
    }
}

bool has_character_table(const GroupSpec& spec) {
    switch (spec.inner().family) {
        case Family::Cyclic:
        case Family::Dihedral:
        case Family::PPrime: return true;
        default: return false;
    }
}

std::vector<IrrepId> irreps(const GroupSpec& spec) {
    if (!has_character_table(spec))
        throw UnsupportedError("character tables of " + spec.to_string() +
                               " are out of scope (quiver comes from Dynkin data)");
    if (spec.is_product()) {
        std::vector<IrrepId> out;
        for (const auto& base : irreps(spec.inner()))
            for (long long j = 0; j < spec.m; ++j) out.push_back(base.paired(j));
        return out;
    }
    std::vector<IrrepId> out;
    switch (spec.family) {
        case Family::Cyclic:
            for (long long j = 0; j < spec.n; ++j) out.push_back(IrrepId::cyclic_beta(j));
            break;
        case Family::Dihedral:
            for (long long j = 0; j < (1LL << spec.k); ++j) out.push_back(IrrepId::d_one(j));
            for (long long t = 1; t <= 2 * spec.r; ++t)
                for (long long s = 0; s < (1LL << (spec.k - 2)); ++s)
                    out.push_back(IrrepId::d_two(t, s));
            break;
        case Family::PPrime: {
            long long t3 = pow_ll(3, spec.k);
            for (long long j = 0; j < t3; ++j) out.push_back(IrrepId::p_one(j));
            for (long long j = 0; j < t3; ++j) out.push_back(IrrepId::p_two(j));
            for (long long s = 0; s < t3 / 3; ++s) out.push_back(IrrepId::p_three(s));
            break;
        }
        default: break;
    }
    return out;
}

CycMatrix Representation::evaluate(const Word& w) const {
    CycMatrix m = CycMatrix::identity(dim);
    for (const auto& [g, e] : w) {
        if (g < 0 || g >= static_cast<int>(gen_images.size()))
            throw InvalidIdError("word uses generator outside the representation");
        m = m * gen_images[g].pow(e);
    }
    return m;
}

Representation rep_matrices(const GroupSpec& spec, const IrrepId& id) {
    if (!(canonicalize(spec, id) == id))
        throw InvalidIdError("irrep id " + id.label() + " is not canonical for " +
                             spec.to_string());
    if (spec.is_product()) {
        IrrepId base = id;
        base.j = -1;
        Representation inner = rep_matrices(spec.inner(), base);
        Representation rep;
        rep.spec = spec;
        rep.id = id;
        rep.dim = inner.dim;
        rep.gen_images = inner.gen_images;
        rep.gen_images.push_back(
            CycMatrix::scalar(inner.dim, Cyclotomic::root_of_unity(spec.m, id.j)));
        return rep;
    }
    Representation rep;
    rep.spec = spec;
    rep.id = id;
    rep.dim = static_cast<int>(id.dim());
    auto z = [](long long n, long long e) { return Cyclotomic::root_of_unity(n, e); };
    switch (spec.family) {
        case Family::Cyclic: {
            CycMatrix g(1, 1);
            g.at(0, 0) = z(spec.n, id.a);
            rep.gen_images = {g};
            break;
        }
        case Family::Dihedral: {
            if (id.kind == IrrepId::Kind::DOne) {
                CycMatrix x(1, 1), y(1, 1);
                x.at(0, 0) = z(1LL << spec.k, id.a);
                y.at(0, 0) = Cyclotomic::one();
                rep.gen_images = {x, y};
            } else {
                long long t = id.a, s = id.b;
                CycMatrix x(2, 2), y(2, 2);
                x.at(0, 1) = z(1LL << spec.k, s);
                x.at(1, 0) = (t % 2 ? -Cyclotomic::one() : Cyclotomic::one()) *
                             z(1LL << spec.k, s);
                y.at(0, 0) = z(2 * spec.r + 1, t);
                y.at(1, 1) = z(2 * spec.r + 1, -t);
                rep.gen_images = {x, y};
            }
            break;
        }
        case Family::PPrime: {
            long long t3 = pow_ll(3, spec.k);
            if (id.kind == IrrepId::Kind::POne) {
                CycMatrix x = CycMatrix::identity(1), y = CycMatrix::identity(1), zz(1, 1);
                zz.at(0, 0) = z(t3, id.a);
                rep.gen_images = {x, y, zz};
            } else if (id.kind == IrrepId::Kind::PTwo) {
                CycMatrix x(2, 2), y(2, 2), zz(2, 2);
                x.at(0, 1) = z(3, 2);
                x.at(1, 0) = -z(3, 1);
                y.at(0, 0) = z(3, 2);
                y.at(0, 1) = Cyclotomic::one();
                y.at(1, 0) = z(3, 2);
                y.at(1, 1) = -z(3, 2);
                zz.at(0, 1) = z(3, 1);
                zz.at(1, 0) = -z(3, 2);
                zz.at(1, 1) = -Cyclotomic::one();
                zz = z(t3, id.a) * zz;
                rep.gen_images = {x, y, zz};
            } else {
                auto fill = [](std::initializer_list<int> vals) {
                    CycMatrix m(3, 3);
                    int idx = 0;
                    for (int v : vals) {
                        m.at(idx / 3, idx % 3) = Cyclotomic::from_rational(Rational(v));
                        ++idx;
                    }
                    return m;
                };
                CycMatrix x = fill({-1, -1, -1, 0, 0, 1, 0, 1, 0});
                CycMatrix y = fill({0, 0, 1, -1, -1, -1, 1, 0, 0});
                CycMatrix zz = fill({-1, -1, -1, 0, 1, 0, 1, 0, 0});
                zz = z(t3, id.a) * zz;
                rep.gen_images = {x, y, zz};
            }
            break;
        }
        default:
            throw UnsupportedError("no representation matrices for " + spec.to_string());
    }
    return rep;
}

Character closed_form_character(const GroupSpec& spec, const IrrepId& id) {
    auto table_conductor = [](const GroupSpec& s) -> long long {
        switch (s.family) {
            case Family::Cyclic: return s.n;
            case Family::Dihedral: return lcm_ll(1LL << s.k, 2 * s.r + 1);
            case Family::PPrime: return pow_ll(3, s.k);
            default: throw UnsupportedError("no character table for " + s.to_string());
        }
    };
    const auto classes = conjugacy_classes(spec);
    Character chi;
    chi.spec = spec;
    chi.values.reserve(classes.size());

    if (spec.is_product()) {
        GroupSpec in = spec.inner();
        IrrepId base = id;
        base.j = -1;
        Character inner = closed_form_character(in, base);
        long long tc = lcm_ll(table_conductor(in), spec.m);
        for (const auto& cls : classes) {
            long long ci = cls.key.at(0), jc = cls.key.at(1);
            Cyclotomic v = inner.values[ci] * Cyclotomic::root_of_unity(spec.m, id.j * jc);
            chi.values.push_back(v.embed(tc));
        }
        return chi;
    }

    long long tc = table_conductor(spec);
    for (const auto& cls : classes) {
        ZetaSum v(tc);
        switch (spec.family) {
            case Family::Cyclic: {
                long long l = cls.key.at(0);
                v = zs(tc, spec.n, l * id.a);
                break;
            }
            case Family::Dihedral: {
                long long two_k = 1LL << spec.k, nn = 2 * spec.r + 1;
                long long kind = cls.key.at(0), l = cls.key.at(1);
                if (id.kind == IrrepId::Kind::DOne) {
                    long long jj = id.a;
                    if (kind == 0 || kind == 1)
                        v = zs(tc, two_k, 2 * l * jj);
                    else
                        v = zs(tc, two_k, (2 * l + 1) * jj);
                } else {
                    long long t = id.a, s = id.b;
                    Rational sign((t * l) % 2 ? -1 : 1);
                    if (kind == 0) {
                        v = zs(tc, two_k, 2 * l * s, sign * Rational(2));
                    } else if (kind == 1) {
                        long long qq = cls.key.at(2);
                        v = zs(tc, two_k, 2 * l * s, sign) *
                            (zs(tc, nn, t * qq) + zs(tc, nn, -t * qq));
                    }  // kind == 2: zero
                }
                break;
            }
            case Family::PPrime: {
                long long t3 = pow_ll(3, spec.k);
                long long kind = cls.key.at(0), l = cls.key.at(1);
                long long jj = id.a;
                if (id.kind == IrrepId::Kind::POne) {
                    switch (kind) {
                        case 0:
                        case 1:
                        case 6: v = zs(tc, t3, 3 * l * jj); break;
                        case 2:
                        case 4: v = zs(tc, t3, (3 * l + 1) * jj); break;
                        default: v = zs(tc, t3, (3 * l + 2) * jj); break;
                    }
                } else if (id.kind == IrrepId::Kind::PTwo) {
                    switch (kind) {
                        case 0: v = zs(tc, t3, 3 * l * jj, Rational(2)); break;
                        case 1: v = zs(tc, t3, 3 * l * jj, Rational(-2)); break;
                        case 2: v = zs(tc, t3, (3 * l + 1) * jj, Rational(-1)); break;
                        case 3: v = zs(tc, t3, (3 * l + 2) * jj, Rational(-1)); break;
                        case 4: v = zs(tc, t3, (3 * l + 1) * jj); break;
                        case 5: v = zs(tc, t3, (3 * l + 2) * jj); break;
                        default: break;  // 6_l: zero
                    }
                } else {
                    switch (kind) {
                        case 0:
                        case 1: v = zs(tc, t3, 3 * l * jj, Rational(3)); break;
                        case 6: v = zs(tc, t3, 3 * l * jj, Rational(-1)); break;
                        default: break;
                    }
                }
                break;
            }
            default:
                throw UnsupportedError("no character table for " + spec.to_string());
        }
        chi.values.push_back(v.canonical().embed(tc));
    }
    return chi;
}

Character character_of(const GroupSpec& spec, const IrrepId& id) {
    Character chi;
    chi.spec = spec;
    if (spec.is_product()) {
        // trace of (inner rep) x beta_j is the inner trace scaled by zeta_m^{j c}
        IrrepId base = id;
        base.j = -1;
        Character inner = character_of(spec.inner(), base);
        for (const auto& cls : conjugacy_classes(spec)) {
            long long ci = cls.key.at(0), jc = cls.key.at(1);
            chi.values.push_back(inner.values[ci] *
                                 Cyclotomic::root_of_unity(spec.m, id.j * jc));
        }
        return chi;
    }
    Representation rep = rep_matrices(spec, id);
    for (const auto& cls : conjugacy_classes(spec))
        chi.values.push_back(rep.evaluate(cls.representative).trace());
    return chi;
}

int CharacterTable::index_of(const IrrepId& id) const {
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return static_cast<int>(i);
    throw InvalidIdError("irrep " + id.label() + " not in table of " + spec.to_string());
}

std::shared_ptr<const CharacterTable> character_table(const GroupSpec& spec) {
    static std::map<GroupSpec, std::shared_ptr<const CharacterTable>> cache;
    static std::mutex mutex;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(spec);
        if (it != cache.end()) return it->second;
    }
    if (!has_character_table(spec))
        throw UnsupportedError("character tables of " + spec.to_string() +
                               " are out of scope (quiver comes from Dynkin data)");
    auto table = std::make_shared<CharacterTable>();
    table->spec = spec;
    table->order = group_order(spec);
    table->classes = conjugacy_classes(spec);
    table->ids = irreps(spec);
    if (table->ids.size() != table->classes.size())
        throw std::logic_error("irrep count != class count for " + spec.to_string());
    if (table->classes.front().size != 1 || !table->classes.front().representative.empty())
        throw std::logic_error("identity class must sort first for " + spec.to_string());
    long long conductor = 1;
    for (const auto& id : table->ids) {
        table->chars.push_back(closed_form_character(spec, id));
        for (const auto& v : table->chars.back().values)
            conductor = lcm_ll(conductor, v.conductor());
    }
    table->conductor = conductor;
    for (auto& chi : table->chars)
        for (auto& v : chi.values) v = v.embed(conductor);
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(spec, std::move(table));
    return it->second;
}

Rational inner_product(const CharacterTable& table, const Character& a, const Character& b) {
    if (!(a.spec == table.spec) || !(b.spec == table.spec))
        throw SpecMismatchError("inner_product: characters of different groups");
    Cyclotomic sum = Cyclotomic::zero();
    for (int c = 0; c < table.num_classes(); ++c) {
        Cyclotomic term = a.values[c] * b.values[c].conjugate();
        sum += Cyclotomic::from_rational(Rational(table.classes[c].size)) * term;
    }
    return sum.to_rational() / Rational(table.order);
}

std::vector<long long> decompose(const CharacterTable& table, const Character& chi) {
    std::vector<long long> mult;
    mult.reserve(table.ids.size());
    for (int i = 0; i < table.num_irreps(); ++i) {
        Rational m = inner_product(table, chi, table.chars[i]);
        if (!m.is_integer() || m.sign() < 0)
            throw NotACharacterError("multiplicity of " + table.ids[i].label() +
                                     " is not a nonnegative integer: " + m.to_string());
        mult.push_back(m.to_int64());
    }
    return mult;
}

Character natural_character(const GroupSpec& spec) {
    if (!has_character_table(spec))
        throw UnsupportedError("natural character of " + spec.to_string() +
                               " requires a character table");
    if (spec.is_product()) {
        GroupSpec in = spec.inner();
        IrrepId base = in.family == Family::Dihedral ? IrrepId::d_two(1, in.k > 2 ? 1 : 0)
                                                     : IrrepId::p_two(1);
        return closed_form_character(spec, base.paired(1));
    }
    switch (spec.family) {
        case Family::Cyclic:
            return char_add(closed_form_character(spec, IrrepId::cyclic_beta(1)),
                            closed_form_character(spec, IrrepId::cyclic_beta(spec.q)));
        case Family::Dihedral:
            return closed_form_character(spec, IrrepId::d_two(1, spec.k > 2 ? 1 : 0));
        case Family::PPrime: return closed_form_character(spec, IrrepId::p_two(1));
        default:
            throw UnsupportedError("natural character of " + spec.to_string() +
                                   " requires a character table");
    }
}

bool is_faithful(const CharacterTable& table, const Character& chi) {
    const Cyclotomic& dim = chi.values.at(0);
    for (int c = 1; c < table.num_classes(); ++c)
        if (chi.values[c] == dim) return false;
    return true;
}

Character char_mul(const Character& a, const Character& b) {
    if (!(a.spec == b.spec)) throw SpecMismatchError("char_mul: different groups");
    Character r;
    r.spec = a.spec;
    for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] * b.values[i]);
    return r;
}

Character char_add(const Character& a, const Character& b) {
    if (!(a.spec == b.spec)) throw SpecMismatchError("char_add: different groups");
    Character r;
    r.spec = a.spec;
    for (std::size_t i = 0; i < a.values.size(); ++i) r.values.push_back(a.values[i] + b.values[i]);
    return r;
}

}  // namespace mckay
