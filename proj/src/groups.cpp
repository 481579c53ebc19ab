#include "mckay/groups.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace mckay {

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i]));
        bool db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            long long va = std::stoll(a.substr(i, i2 - i));
            long long vb = std::stoll(b.substr(j, j2 - j));
            if (va != vb) return va < vb;
            i = i2;
            j = j2;
            continue;
        }
        if (a[i] != b[j]) return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::cyclic(long long n, long long q) {
    GroupSpec s;
    s.family = Family::Cyclic;
    s.n = n;
    s.q = q;
    s.validate();
    return s;
}

GroupSpec GroupSpec::binary_dihedral(long long q) {
    GroupSpec s;
    s.family = Family::BinaryDihedral;
    s.q = q;
    s.validate();
    return s;
}

GroupSpec GroupSpec::binary_tetrahedral() {
    GroupSpec s;
    s.family = Family::BinaryTetrahedral;
    return s;
}

GroupSpec GroupSpec::binary_octahedral() {
    GroupSpec s;
    s.family = Family::BinaryOctahedral;
    return s;
}

GroupSpec GroupSpec::binary_icosahedral() {
    GroupSpec s;
    s.family = Family::BinaryIcosahedral;
    return s;
}

GroupSpec GroupSpec::dihedral(long long k, long long r) {
    GroupSpec s;
    s.family = Family::Dihedral;
    s.k = k;
    s.r = r;
    s.validate();
    return s;
}

GroupSpec GroupSpec::pprime(long long k) {
    GroupSpec s;
    s.family = Family::PPrime;
    s.k = k;
    s.validate();
    return s;
}

GroupSpec GroupSpec::times_cyclic(long long m) const {
    GroupSpec s = *this;
    if (m < 1) throw InvalidSpecError("xC(m) requires m >= 1");
    if (m == 1) return s;
    s.m = this->m * m;
    s.validate();
    return s;
}

GroupSpec GroupSpec::inner() const {
    GroupSpec s = *this;
    s.m = 1;
    return s;
}

void GroupSpec::validate() const {
    switch (family) {
        case Family::Cyclic:
            if (n <= 1) throw InvalidSpecError("C(n,q) requires n > 1");
            if (q <= 0 || q >= n) throw InvalidSpecError("C(n,q) requires 0 < q < n");
            if (gcd_ll(n, q) != 1) throw InvalidSpecError("C(n,q) requires gcd(n,q) = 1");
            break;
        case Family::BinaryDihedral:
            if (q < 2) throw InvalidSpecError("BD(q) requires q >= 2");
            break;
        case Family::Dihedral:
            if (k <= 2) throw InvalidSpecError("D(k,r) requires k > 2 (k = 2 is BD(2r+1))");
            if (r < 1) throw InvalidSpecError("D(k,r) requires r >= 1");
            break;
        case Family::PPrime:
            if (k < 2) throw InvalidSpecError("P(k) requires k >= 2");
            break;
        default:
            break;
    }
    if (m < 1) throw InvalidSpecError("xC(m) requires m >= 1");
    if (m > 1) {
        if (family == Family::Cyclic)
            throw InvalidSpecError("product inner group must not be cyclic");
        if (gcd_ll(m, group_order(inner())) != 1)
            throw InvalidSpecError("xC(m) requires gcd(m, |inner|) = 1, violated for m = " +
                                   std::to_string(m));
    }
}

long long group_order(const GroupSpec& spec) {
    long long base = 0;
    switch (spec.family) {
        case Family::Cyclic: base = spec.n; break;
        case Family::BinaryDihedral: base = 4 * spec.q; break;
        case Family::BinaryTetrahedral: base = 24; break;
        case Family::BinaryOctahedral: base = 48; break;
        case Family::BinaryIcosahedral: base = 120; break;
        case Family::Dihedral: base = (1LL << spec.k) * (2 * spec.r + 1); break;
        case Family::PPrime: {
            base = 8;
            for (long long i = 0; i < spec.k; ++i) base *= 3;
            break;
        }
    }
    return base * spec.m;
}

std::string GroupSpec::to_string() const {
    std::ostringstream out;
    switch (family) {
        case Family::Cyclic: out << "C(" << n << "," << q << ")"; break;
        case Family::BinaryDihedral: out << "BD(" << q << ")"; break;
        case Family::BinaryTetrahedral: out << "BT"; break;
        case Family::BinaryOctahedral: out << "BO"; break;
        case Family::BinaryIcosahedral: out << "BI"; break;
        case Family::Dihedral: out << "D(" << k << "," << r << ")"; break;
        case Family::PPrime: out << "P(" << k << ")"; break;
    }
    if (m > 1) out << "xC(" << m << ")";
    return out.str();
}

GroupSpec GroupSpec::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    long long cofactor = 1;
    auto xc = s.find("xC(");
    if (xc != std::string::npos) {
        if (s.back() != ')') throw InvalidSpecError("spec '" + text + "': missing ')' in xC(m)");
        std::string inner = s.substr(xc + 3, s.size() - xc - 4);
        try {
            cofactor = std::stoll(inner);
        } catch (const std::exception&) {
            throw InvalidSpecError("spec '" + text + "': bad cyclic factor '" + inner + "'");
        }
        s = s.substr(0, xc);
    }
    auto args = [&](const std::string& head, int count) {
        if (s.size() < head.size() + 2 || s.compare(0, head.size(), head) != 0 ||
            s[head.size()] != '(' || s.back() != ')')
            throw InvalidSpecError("spec '" + text + "': expected " + head + "(...)");
        std::string body = s.substr(head.size() + 1, s.size() - head.size() - 2);
        std::vector<long long> vals;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                vals.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw InvalidSpecError("spec '" + text + "': bad integer '" + tok + "'");
            }
        }
        if (static_cast<int>(vals.size()) != count)
            throw InvalidSpecError("spec '" + text + "': " + head + " takes " +
                                   std::to_string(count) + " parameter(s)");
        return vals;
    };
    GroupSpec base;
    if (s == "BT")
        base = binary_tetrahedral();
    else if (s == "BO")
        base = binary_octahedral();
    else if (s == "BI")
        base = binary_icosahedral();
    else if (s.rfind("BD", 0) == 0) {
        auto v = args("BD", 1);
        base = binary_dihedral(v[0]);
    } else if (s.rfind("C", 0) == 0) {
        auto v = args("C", 2);
        base = cyclic(v[0], v[1]);
    } else if (s.rfind("D", 0) == 0) {
        auto v = args("D", 2);
        base = dihedral(v[0], v[1]);
    } else if (s.rfind("P", 0) == 0) {
        auto v = args("P", 1);
        base = pprime(v[0]);
    } else {
        throw InvalidSpecError("spec '" + text + "': unknown family");
    }
    return base.times_cyclic(cofactor);
}

bool operator<(const GroupSpec& a, const GroupSpec& b) {
    auto key = [](const GroupSpec& s) {
        return std::tuple<int, long long, long long, long long, long long, long long>(
            static_cast<int>(s.family), s.n, s.q, s.k, s.r, s.m);
    };
    return key(a) < key(b);
}

// ---------------------------------------------------------------------------
// CycMatrix

CycMatrix CycMatrix::identity(int d) {
    CycMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = Cyclotomic::one();
    return m;
}

CycMatrix CycMatrix::scalar(int d, const Cyclotomic& v) {
    CycMatrix m(d, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = v;
    return m;
}

CycMatrix CycMatrix::embed(long long conductor) const {
    CycMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].embed(conductor);
    return m;
}

CycMatrix CycMatrix::conj_transpose() const {
    CycMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conjugate();
    return m;
}

Cyclotomic CycMatrix::trace() const {
    Cyclotomic t = Cyclotomic::zero();
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

CycMatrix CycMatrix::pow(long long e) const {
    CycMatrix result = identity(rows_);
    CycMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool CycMatrix::is_identity() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !(at(i, j) == Cyclotomic::one())) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

bool CycMatrix::is_unitary() const { return (conj_transpose() * *this).is_identity(); }

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("CycMatrix: dimension mismatch");
    CycMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

CycMatrix operator*(const Cyclotomic& s, const CycMatrix& a) {
    CycMatrix r = a;
    for (int i = 0; i < r.rows_; ++i)
        for (int j = 0; j < r.cols_; ++j) r.at(i, j) = s * r.at(i, j);
    return r;
}

bool operator==(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
        if (!(a.a_[i] == b.a_[i])) return false;
    return true;
}

bool operator<(const CycMatrix& a, const CycMatrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
        if (a.a_[i] < b.a_[i]) return true;
        if (b.a_[i] < a.a_[i]) return false;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Group construction

namespace {

Word make_word(std::initializer_list<std::pair<int, long long>> parts) {
    Word w;
    for (const auto& p : parts)
        if (p.second != 0) w.push_back(p);
    return w;
}

Word word_concat(const Word& a, int gen, long long exp) {
    Word w = a;
    if (exp != 0) {
        if (!w.empty() && w.back().first == gen)
            w.back().second += exp;
        else
            w.emplace_back(gen, exp);
    }
    return w;
}

Cyclotomic zeta(long long n, long long e) { return Cyclotomic::root_of_unity(n, e); }

CycMatrix diag2(const Cyclotomic& a, const Cyclotomic& b) {
    CycMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    return m;
}

// y = [[0,1],[-1,0]], the j quaternion
CycMatrix mat_j() {
    CycMatrix m(2, 2);
    m.at(0, 1) = Cyclotomic::one();
    m.at(1, 0) = -Cyclotomic::one();
    return m;
}

// x = diag(i, -i), the i quaternion
CycMatrix mat_i() { return diag2(zeta(4, 1), zeta(4, 3)); }

// w = (-1 + i + j + k)/2 as an SU(2) matrix; order 3, cycles i -> k -> j
CycMatrix mat_w() {
    CycMatrix m(2, 2);
    Rational half(1, 2);
    Cyclotomic i = zeta(4, 1);
    Cyclotomic h = Cyclotomic::from_rational(half);
    m.at(0, 0) = h * (i - Cyclotomic::one());
    m.at(0, 1) = h * (i + Cyclotomic::one());
    m.at(1, 0) = h * (i - Cyclotomic::one());
    m.at(1, 1) = -h * (i + Cyclotomic::one());
    return m;
}

// mu = (1/sqrt5) [[e^4-e, e^2-e^3],[e^2-e^3, e-e^4]] with e = zeta_5;
// together with diag(e^3, e^2) it generates the binary icosahedral group.
CycMatrix mat_icosa() {
    Cyclotomic e1 = zeta(5, 1), e2 = zeta(5, 2), e3 = zeta(5, 3), e4 = zeta(5, 4);
    Cyclotomic inv_sqrt5 =
        Cyclotomic::from_rational(Rational(1, 5)) * (e1 - e2 - e3 + e4);  // sqrt5 / 5
    CycMatrix m(2, 2);
    m.at(0, 0) = inv_sqrt5 * (e4 - e1);
    m.at(0, 1) = inv_sqrt5 * (e2 - e3);
    m.at(1, 0) = inv_sqrt5 * (e2 - e3);
    m.at(1, 1) = inv_sqrt5 * (e1 - e4);
    return m;
}

long long pow_ll(long long b, long long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

struct ClassSeed {
    std::string label;
    Word rep;
    long long size;
};

bool is_exceptional(Family family) {
    return family == Family::BinaryTetrahedral || family == Family::BinaryOctahedral ||
           family == Family::BinaryIcosahedral;
}

std::vector<ClassSeed> exceptional_class_seeds(Family family) {
    switch (family) {
        case Family::BinaryTetrahedral:
            return {{"1_a", {}, 1},
                    {"1_b", make_word({{0, 2}}), 1},
                    {"4_a", make_word({{1, 1}}), 4},
                    {"4_b", make_word({{1, 2}}), 4},
                    {"4_c", make_word({{0, 2}, {1, 1}}), 4},
                    {"4_d", make_word({{0, 2}, {1, 2}}), 4},
                    {"6_a", make_word({{0, 1}}), 6}};
        case Family::BinaryOctahedral:
            return {{"1_a", {}, 1},
                    {"1_b", make_word({{0, 4}}), 1},
                    {"6_a", make_word({{0, 1}}), 6},
                    {"6_b", make_word({{0, 2}}), 6},
                    {"6_c", make_word({{0, 3}}), 6},
                    {"8_a", make_word({{1, 1}}), 8},
                    {"8_b", make_word({{0, 4}, {1, 1}}), 8},
                    {"12_a", make_word({{0, 1}, {1, 2}}), 12}};
        case Family::BinaryIcosahedral:
            return {{"1_a", {}, 1},
                    {"1_b", make_word({{1, 2}}), 1},
                    {"12_a", make_word({{0, 1}}), 12},
                    {"12_b", make_word({{0, 2}}), 12},
                    {"12_c", make_word({{1, 2}, {0, 1}}), 12},
                    {"12_d", make_word({{1, 2}, {0, 2}}), 12},
                    {"20_a", make_word({{0, 1}, {1, 1}}), 20},
                    {"20_b", make_word({{1, 2}, {0, 1}, {1, 1}}), 20},
                    {"30_a", make_word({{1, 1}}), 30}};
        default:
            throw std::logic_error("exceptional_class_seeds: not an exceptional family");
    }
}

std::mutex group_cache_mutex;

}  // namespace

std::shared_ptr<const Group> Group::get(const GroupSpec& spec, long long order_cap) {
    static std::map<GroupSpec, std::shared_ptr<const Group>> cache;
    {
        std::lock_guard<std::mutex> lock(group_cache_mutex);
        auto it = cache.find(spec);
        if (it != cache.end()) return it->second;
    }
    std::shared_ptr<const Group> g(new Group(spec, order_cap));
    std::lock_guard<std::mutex> lock(group_cache_mutex);
    auto [it, inserted] = cache.emplace(spec, g);
    return it->second;
}

Group::Group(const GroupSpec& spec, long long order_cap) : spec_(spec) {
    order_ = group_order(spec_);
    if (order_ > order_cap)
        throw OrderCapExceededError("group " + spec_.to_string() + " has order " +
                                    std::to_string(order_) + " > cap " +
                                    std::to_string(order_cap));
    enumerate(order_cap);
    build_cayley();
    build_classes();
    resolve_members();
}

void Group::enumerate(long long order_cap) {
    std::vector<int> parent, via;
    auto push = [&](CycMatrix m, Word w, int parent_idx, int via_gen) {
        m = m.embed(conductor_);
        auto [it, inserted] = index_.emplace(m, static_cast<int>(mats_.size()));
        if (!inserted)
            throw std::logic_error("group " + spec_.to_string() +
                                   ": realization collision, representation not faithful");
        mats_.push_back(std::move(m));
        words_.push_back(std::move(w));
        parent.push_back(parent_idx);
        via.push_back(via_gen);
    };

    if (spec_.is_product()) {
        auto inner = Group::get(spec_.inner(), order_cap);
        long long m = spec_.m;
        conductor_ = lcm_ll(inner->conductor(), m);
        gen_names_ = inner->gen_names_;
        gen_names_.push_back("c");
        gen_mats_.clear();
        for (const auto& g : inner->gen_mats_) gen_mats_.push_back(g.embed(conductor_));
        gen_mats_.push_back(CycMatrix::scalar(2, zeta(m, 1)).embed(conductor_));
        int cgen = static_cast<int>(gen_names_.size()) - 1;
        for (long long ig = 0; ig < inner->order(); ++ig) {
            CycMatrix base = inner->mats_[ig].embed(conductor_);
            for (long long j = 0; j < m; ++j) {
                CycMatrix mat = j == 0 ? base : zeta(m, j) * base;
                Word w = word_concat(inner->words_[ig], cgen, j);
                push(std::move(mat), std::move(w), -1, -1);
            }
        }
        inner_ = std::move(inner);
        return;
    }

    switch (spec_.family) {
        case Family::Cyclic: {
            conductor_ = spec_.n;
            gen_names_ = {"g"};
            gen_mats_ = {diag2(zeta(spec_.n, 1), zeta(spec_.n, spec_.q)).embed(conductor_)};
            CycMatrix cur = CycMatrix::identity(2).embed(conductor_);
            for (long long j = 0; j < spec_.n; ++j) {
                push(cur, make_word({{0, j}}), j == 0 ? -1 : static_cast<int>(j - 1), 0);
                cur = cur * gen_mats_[0];
            }
            break;
        }
        case Family::BinaryDihedral: {
            long long q = spec_.q;
            conductor_ = 2 * q;
            gen_names_ = {"x", "y"};
            gen_mats_ = {diag2(zeta(2 * q, 1), zeta(2 * q, 2 * q - 1)).embed(conductor_),
                         mat_j().embed(conductor_)};
            for (long long a = 0; a < 2 * q; ++a)
                for (long long b = 0; b < 2; ++b) {
                    CycMatrix mat = gen_mats_[0].pow(a) * gen_mats_[1].pow(b);
                    int p = b > 0 ? static_cast<int>(2 * a) : static_cast<int>(2 * (a - 1));
                    push(std::move(mat), make_word({{0, a}, {1, b}}),
                         (a == 0 && b == 0) ? -1 : p, b > 0 ? 1 : 0);
                }
            break;
        }
        case Family::Dihedral: {
            long long k = spec_.k, r = spec_.r;
            long long nn = 2 * r + 1;
            conductor_ = lcm_ll(1LL << k, nn);
            gen_names_ = {"x", "y"};
            long long s0 = k > 2 ? 1 : 0;  // k = 2 uses the varrho_{1,0} model
            CycMatrix x = (zeta(1LL << k, s0) * mat_j()).embed(conductor_);
            CycMatrix y = diag2(zeta(nn, 1), zeta(nn, nn - 1)).embed(conductor_);
            gen_mats_ = {x, y};
            for (long long a = 0; a < (1LL << k); ++a)
                for (long long b = 0; b < nn; ++b) {
                    CycMatrix mat = x.pow(a) * y.pow(b);
                    int p = b > 0 ? static_cast<int>(a * nn + b - 1)
                                  : static_cast<int>((a - 1) * nn);
                    push(std::move(mat), make_word({{0, a}, {1, b}}),
                         (a == 0 && b == 0) ? -1 : p, b > 0 ? 1 : 0);
                }
            break;
        }
        case Family::PPrime: {
            long long k = spec_.k;
            long long t3 = pow_ll(3, k);
            conductor_ = lcm_ll(4, t3);
            gen_names_ = {"x", "y", "z"};
            CycMatrix x = mat_i().embed(conductor_);
            CycMatrix y = mat_j().embed(conductor_);
            // w^2 cycles i -> j -> k, which realizes zxz^-1 = y, zyz^-1 = xy
            CycMatrix z = (zeta(t3, 1) * mat_w().pow(2)).embed(conductor_);
            gen_mats_ = {x, y, z};
            for (long long p = 0; p < 4; ++p)
                for (long long q = 0; q < 2; ++q)
                    for (long long t = 0; t < t3; ++t) {
                        CycMatrix mat = x.pow(p) * y.pow(q) * z.pow(t);
                        long long idx = (p * 2 + q) * t3 + t;
                        int par, vg;
                        if (t > 0) {
                            par = static_cast<int>(idx - 1);
                            vg = 2;
                        } else if (q > 0) {
                            par = static_cast<int>(p * 2 * t3);
                            vg = 1;
                        } else {
                            par = static_cast<int>((p - 1) * 2 * t3);
                            vg = 0;
                        }
                        push(std::move(mat), make_word({{0, p}, {1, q}, {2, t}}),
                             idx == 0 ? -1 : par, vg);
                    }
            break;
        }
        case Family::BinaryTetrahedral:
        case Family::BinaryOctahedral:
        case Family::BinaryIcosahedral: {
            if (spec_.family == Family::BinaryTetrahedral) {
                conductor_ = 4;
                gen_names_ = {"x", "w"};
                gen_mats_ = {mat_i(), mat_w()};
            } else if (spec_.family == Family::BinaryOctahedral) {
                conductor_ = 8;
                gen_names_ = {"s", "w"};
                gen_mats_ = {diag2(zeta(8, 1), zeta(8, 7)), mat_w().embed(8)};
            } else {
                conductor_ = 5;
                gen_names_ = {"s", "t"};
                gen_mats_ = {diag2(zeta(5, 3), zeta(5, 2)), mat_icosa()};
            }
            for (auto& g : gen_mats_) g = g.embed(conductor_);
            push(CycMatrix::identity(2), {}, -1, -1);
            for (std::size_t i = 0; i < mats_.size(); ++i) {
                for (int g = 0; g < static_cast<int>(gen_mats_.size()); ++g) {
                    CycMatrix m2 = (mats_[i] * gen_mats_[g]).embed(conductor_);
                    if (index_.count(m2)) continue;
                    push(std::move(m2), word_concat(words_[i], g, 1), static_cast<int>(i), g);
                }
            }
            break;
        }
    }
    if (static_cast<long long>(mats_.size()) != order_)
        throw std::logic_error("group " + spec_.to_string() + ": enumerated " +
                               std::to_string(mats_.size()) + " elements, expected " +
                               std::to_string(order_));
    parent_ = std::move(parent);
    via_ = std::move(via);
}

void Group::build_cayley() {
    long long n = order_;
    if (spec_.is_product()) {
        // delegate to the inner group; no tables needed
        inv_.clear();
        return;
    }
    lmul_.assign(n, {});
    // left multiplication by each generator, by direct matrix products
    std::vector<std::vector<int>> gen_perm(gen_mats_.size());
    for (std::size_t g = 0; g < gen_mats_.size(); ++g) {
        gen_perm[g].resize(n);
        CycMatrix gm = gen_mats_[g].embed(conductor_);
        for (long long h = 0; h < n; ++h) {
            int idx = index_of(gm * mats_[h]);
            if (idx < 0) throw std::logic_error("group not closed under generators");
            gen_perm[g][h] = idx;
        }
    }
    // g = parent * generator, so lambda_g = lambda_parent . lambda_generator;
    // the enumeration order guarantees the parent row already exists
    for (long long g = 0; g < n; ++g) {
        std::vector<int>& row = lmul_[g];
        row.resize(n);
        if (parent_[g] < 0) {
            for (long long h = 0; h < n; ++h) row[h] = static_cast<int>(h);
            continue;
        }
        const std::vector<int>& pg = lmul_[parent_[g]];
        const std::vector<int>& sg = gen_perm[via_[g]];
        for (long long h = 0; h < n; ++h) row[h] = pg[sg[h]];
    }
    inv_.assign(n, -1);
    for (long long g = 0; g < n; ++g)
        for (long long h = 0; h < n; ++h)
            if (lmul_[g][h] == 0) {
                inv_[g] = static_cast<int>(h);
                break;
            }
}

int Group::mul(int a, int b) const {
    if (spec_.is_product()) {
        long long m = spec_.m;
        int ia = a / static_cast<int>(m), ja = a % static_cast<int>(m);
        int ib = b / static_cast<int>(m), jb = b % static_cast<int>(m);
        return inner_->mul(ia, ib) * static_cast<int>(m) + (ja + jb) % static_cast<int>(m);
    }
    return lmul_[a][b];
}

int Group::inv(int a) const {
    if (spec_.is_product()) {
        long long m = spec_.m;
        int ia = a / static_cast<int>(m), ja = a % static_cast<int>(m);
        return inner_->inv(ia) * static_cast<int>(m) + (m - ja) % static_cast<int>(m);
    }
    return inv_[a];
}

int Group::conjugate_index(int g, int h) const { return mul(mul(g, h), inv(g)); }

int Group::index_of(const CycMatrix& m) const {
    auto it = index_.find(m.embed(conductor_));
    return it == index_.end() ? -1 : it->second;
}

CycMatrix Group::evaluate(const Word& w) const {
    CycMatrix m = CycMatrix::identity(gen_mats_.empty() ? 2 : gen_mats_[0].rows());
    m = m.embed(conductor_);
    for (const auto& [g, e] : w) m = m * gen_mats_[g].embed(conductor_).pow(e);
    return m;
}

int Group::index_of_word(const Word& w) const { return index_of(evaluate(w)); }

GroupElement Group::element(int idx) const {
    return GroupElement{spec_, words_[idx], mats_[idx]};
}

std::string Group::word_to_string(const Word& w) const {
    if (w.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, e] : w) {
        if (!first) out << "*";
        first = false;
        out << gen_names_[g];
        if (e != 1) out << "^" << e;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Conjugacy classes

namespace {

void sort_classes(std::vector<ConjugacyClass>& cs) {
    std::stable_sort(cs.begin(), cs.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        if (a.size != b.size) return a.size < b.size;
        return natural_less(a.label, b.label);
    });
}

void check_class_equation(const GroupSpec& spec, const std::vector<ConjugacyClass>& cs) {
    long long total = 0;
    for (const auto& c : cs) total += c.size;
    if (total != group_order(spec))
        throw std::logic_error("class equation violated for " + spec.to_string());
}

// BT/BO/BI: embedded representative + size per class; the members are the
// orbit of the representative under conjugation.
std::vector<ConjugacyClass> exceptional_classes(const Group& g) {
    std::vector<ConjugacyClass> out;
    for (const auto& seed : exceptional_class_seeds(g.spec().family)) {
        int rep = g.index_of_word(seed.rep);
        if (rep < 0) throw std::logic_error("bad class representative word");
        std::vector<int> orbit_mark(g.order(), 0);
        std::vector<int> orbit;
        for (long long x = 0; x < g.order(); ++x) {
            int y = g.conjugate_index(static_cast<int>(x), rep);
            if (!orbit_mark[y]) {
                orbit_mark[y] = 1;
                orbit.push_back(y);
            }
        }
        if (static_cast<long long>(orbit.size()) != seed.size)
            throw std::logic_error("class " + seed.label + " of " + g.spec().to_string() +
                                   " has size " + std::to_string(orbit.size()) + ", expected " +
                                   std::to_string(seed.size));
        std::sort(orbit.begin(), orbit.end());
        ConjugacyClass c;
        c.label = seed.label;
        c.representative = seed.rep;
        c.size = seed.size;
        for (int idx : orbit) c.members.push_back(g.words()[idx]);
        out.push_back(std::move(c));
    }
    sort_classes(out);
    check_class_equation(g.spec(), out);
    return out;
}

std::vector<ConjugacyClass> closed_form_classes(const GroupSpec& spec);

std::vector<ConjugacyClass> product_classes(const GroupSpec& spec) {
    std::vector<ConjugacyClass> inner = closed_form_classes(spec.inner());
    // generator index of c in the product group = #inner generators
    int cgen;
    switch (spec.family) {
        case Family::Cyclic: cgen = 1; break;
        case Family::PPrime: cgen = 3; break;
        default: cgen = 2; break;
    }
    std::vector<ConjugacyClass> out;
    for (std::size_t ci = 0; ci < inner.size(); ++ci) {
        const auto& cls = inner[ci];
        for (long long j = 0; j < spec.m; ++j) {
            ConjugacyClass c;
            c.label = cls.label + ";" + std::to_string(j);
            c.representative = word_concat(cls.representative, cgen, j);
            c.size = cls.size;
            for (const auto& w : cls.members) c.members.push_back(word_concat(w, cgen, j));
            c.key = {static_cast<long long>(ci), j};
            out.push_back(std::move(c));
        }
    }
    sort_classes(out);
    return out;
}

std::vector<ConjugacyClass> closed_form_classes(const GroupSpec& spec) {
    if (spec.is_product()) return product_classes(spec);
    std::vector<ConjugacyClass> out;
    auto add = [&](std::string label, Word rep, std::vector<Word> members,
                   std::vector<long long> key = {}) {
        ConjugacyClass c;
        c.label = std::move(label);
        c.representative = std::move(rep);
        c.size = static_cast<long long>(members.size());
        c.members = std::move(members);
        c.key = std::move(key);
        out.push_back(std::move(c));
    };
    switch (spec.family) {
        case Family::Cyclic: {
            for (long long l = 0; l < spec.n; ++l)
                add("g^" + std::to_string(l), make_word({{0, l}}), {make_word({{0, l}})}, {l});
            break;
        }
        case Family::BinaryDihedral: {
            long long q = spec.q;
            add("1_a", {}, {Word{}});
            add("1_b", make_word({{0, q}}), {make_word({{0, q}})});
            for (long long l = 1; l < q; ++l)
                add("2_" + std::to_string(l), make_word({{0, l}}),
                    {make_word({{0, l}}), make_word({{0, 2 * q - l}})});
            std::vector<Word> even, odd;
            for (long long j = 0; j < q; ++j) {
                even.push_back(make_word({{0, 2 * j}, {1, 1}}));
                odd.push_back(make_word({{0, 2 * j + 1}, {1, 1}}));
            }
            add(std::to_string(q) + "_a", even[0], even);
            add(std::to_string(q) + "_b", odd[0], odd);
            break;
        }
        case Family::Dihedral: {
            long long k = spec.k, r = spec.r;
            for (long long l = 0; l < (1LL << (k - 1)); ++l)
                add("1_" + std::to_string(l), make_word({{0, 2 * l}}), {make_word({{0, 2 * l}})},
                    {0, l});
            for (long long l = 0; l < (1LL << (k - 1)); ++l)
                for (long long qq = 1; qq <= r; ++qq)
                    add("2_{" + std::to_string(l) + "," + std::to_string(qq) + "}",
                        make_word({{0, 2 * l}, {1, qq}}),
                        {make_word({{0, 2 * l}, {1, qq}}),
                         make_word({{0, 2 * l}, {1, 2 * r + 1 - qq}})},
                        {1, l, qq});
            for (long long l = 0; l < (1LL << (k - 1)); ++l) {
                std::vector<Word> mem;
                for (long long j = 0; j <= 2 * r; ++j)
                    mem.push_back(make_word({{0, 2 * l + 1}, {1, j}}));
                Word rep = mem.front();
                add(std::to_string(2 * r + 1) + "_" + std::to_string(l), std::move(rep),
                    std::move(mem), {2, l});
            }
            break;
        }
        case Family::PPrime: {
            long long t3 = pow_ll(3, spec.k - 1);
            for (long long l = 0; l < t3; ++l) {
                std::string L = std::to_string(l);
                long long t0 = 3 * l, t1 = 3 * l + 1, t2 = 3 * l + 2;
                add("1_" + L, make_word({{2, t0}}), {make_word({{2, t0}})}, {0, l});
                add("1_" + L + "^+", make_word({{0, 2}, {2, t0}}), {make_word({{0, 2}, {2, t0}})},
                    {1, l});
                add("4_" + L + "^a", make_word({{2, t1}}),
                    {make_word({{2, t1}}), make_word({{0, 3}, {2, t1}}),
                     make_word({{0, 2}, {1, 1}, {2, t1}}), make_word({{0, 3}, {1, 1}, {2, t1}})},
                    {2, l});
                add("4_" + L + "^b", make_word({{2, t2}}),
                    {make_word({{2, t2}}), make_word({{0, 1}, {2, t2}}),
                     make_word({{1, 1}, {2, t2}}), make_word({{0, 1}, {1, 1}, {2, t2}})},
                    {3, l});
                add("4_" + L + "^c", make_word({{0, 1}, {2, t1}}),
                    {make_word({{0, 1}, {2, t1}}), make_word({{0, 2}, {2, t1}}),
                     make_word({{1, 1}, {2, t1}}), make_word({{0, 1}, {1, 1}, {2, t1}})},
                    {4, l});
                add("4_" + L + "^d", make_word({{0, 2}, {2, t2}}),
                    {make_word({{0, 2}, {2, t2}}), make_word({{0, 3}, {2, t2}}),
                     make_word({{0, 2}, {1, 1}, {2, t2}}), make_word({{0, 3}, {1, 1}, {2, t2}})},
                    {5, l});
                add("6_" + L, make_word({{0, 1}, {2, t0}}),
                    {make_word({{0, 1}, {2, t0}}), make_word({{1, 1}, {2, t0}}),
                     make_word({{0, 3}, {2, t0}}), make_word({{0, 1}, {1, 1}, {2, t0}}),
                     make_word({{0, 2}, {1, 1}, {2, t0}}), make_word({{0, 3}, {1, 1}, {2, t0}})},
                    {6, l});
            }
            break;
        }
        case Family::BinaryTetrahedral:
        case Family::BinaryOctahedral:
        case Family::BinaryIcosahedral:
            return exceptional_classes(*Group::get(spec));
    }
    sort_classes(out);
    check_class_equation(spec, out);
    return out;
}

}  // namespace

void Group::build_classes() {
    if (!spec_.is_product() && is_exceptional(spec_.family))
        classes_ = exceptional_classes(*this);
    else
        classes_ = closed_form_classes(spec_);
}

void Group::resolve_members() {
    std::vector<int> cls_of(order_, -1);
    std::vector<std::vector<int>> members(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) {
        for (const auto& w : classes_[c].members) {
            int idx = index_of_word(w);
            if (idx < 0 || cls_of[idx] != -1)
                throw std::logic_error("class member lists are not a partition for " +
                                       spec_.to_string());
            cls_of[idx] = static_cast<int>(c);
            members[c].push_back(idx);
        }
    }
    for (int v : cls_of)
        if (v < 0) throw std::logic_error("class member lists do not cover " + spec_.to_string());
    class_members_ = std::move(members);
    class_of_ = std::move(cls_of);
}

std::vector<std::vector<int>> Group::brute_partition() const {
    std::vector<int> assigned(order_, 0);
    std::vector<std::vector<int>> blocks;
    for (long long h = 0; h < order_; ++h) {
        if (assigned[h]) continue;
        std::vector<int> mark(order_, 0);
        std::vector<int> orbit;
        for (long long g = 0; g < order_; ++g) {
            int y = conjugate_index(static_cast<int>(g), static_cast<int>(h));
            if (!mark[y]) {
                mark[y] = 1;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        for (int y : orbit) assigned[y] = 1;
        blocks.push_back(std::move(orbit));
    }
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    return blocks;
}

// ---------------------------------------------------------------------------
// Module surface

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    if (!(a.spec == b.spec))
        throw SpecMismatchError("multiply: elements of " + a.spec.to_string() + " and " +
                                b.spec.to_string());
    auto g = Group::get(a.spec);
    CycMatrix prod = a.mat.embed(g->conductor()) * b.mat.embed(g->conductor());
    int idx = g->index_of(prod);
    if (idx < 0) throw std::logic_error("multiply: product not in group dictionary");
    return g->element(idx);
}

std::vector<GroupElement> elements(const GroupSpec& spec, long long order_cap) {
    auto g = Group::get(spec, order_cap);
    std::vector<GroupElement> out;
    out.reserve(g->order());
    for (long long i = 0; i < g->order(); ++i) out.push_back(g->element(static_cast<int>(i)));
    return out;
}

std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& spec) {
    return closed_form_classes(spec);
}

std::vector<ConjugacyClass> brute_conjugacy(const GroupSpec& spec, long long order_cap) {
    auto g = Group::get(spec, order_cap);
    auto blocks = g->brute_partition();
    std::vector<ConjugacyClass> out;
    std::map<long long, int> per_size;
    for (const auto& block : blocks) {
        ConjugacyClass c;
        c.size = static_cast<long long>(block.size());
        int serial = per_size[c.size]++;
        c.label = std::to_string(c.size) + "_#" + std::to_string(serial);
        c.representative = g->words()[block.front()];
        for (int idx : block) c.members.push_back(g->words()[idx]);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace mckay
