// Catalog of the small finite subgroups of GL(2,C): cyclic groups C(n,q),
// the binary polyhedral groups, the families D(k,r) of order 2^k(2r+1) and
// P(k) of order 8*3^k, and their direct products with coprime cyclic groups.
//
// Every group element carries a normal-form word and its image under the
// natural 2-dimensional representation (a unitary matrix over a cyclotomic
// field). Products are evaluated by multiplying realized matrices and
// looking the result up in a per-group dictionary, so the presentation
// relations can stay on the test side.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mckay/cyclotomic.hpp"
#include "mckay/errors.hpp"

namespace mckay {

inline constexpr long long kDefaultOrderCap = 5000;

// Numeric-aware string comparison ("2_9" < "2_10"); used for all label sorts.
bool natural_less(const std::string& a, const std::string& b);

enum class Family {
    Cyclic,            // C(n,q)
    BinaryDihedral,    // BD(q), order 4q
    BinaryTetrahedral, // BT, order 24
    BinaryOctahedral,  // BO, order 48
    BinaryIcosahedral, // BI, order 120
    Dihedral,          // D(k,r), order 2^k(2r+1)
    PPrime             // P(k), order 8*3^k
};

struct GroupSpec {
    Family family = Family::Cyclic;
    long long n = 0, q = 0;  // Cyclic(n,q) / BinaryDihedral(q)
    long long k = 0, r = 0;  // Dihedral(k,r) / PPrime(k)
    long long m = 1;         // cyclic cofactor; m = 1 means no product

    static GroupSpec cyclic(long long n, long long q);
    static GroupSpec binary_dihedral(long long q);
    static GroupSpec binary_tetrahedral();
    static GroupSpec binary_octahedral();
    static GroupSpec binary_icosahedral();
    static GroupSpec dihedral(long long k, long long r);
    static GroupSpec pprime(long long k);
    GroupSpec times_cyclic(long long m) const;

    bool is_product() const { return m > 1; }
    GroupSpec inner() const;  // spec with the cyclic cofactor removed

    // Throws InvalidSpecError naming the violated constraint.
    void validate() const;

    std::string to_string() const;
    // Grammar: C(n,q) | BD(q) | BT | BO | BI | D(k,r) | P(k), optional xC(m).
    static GroupSpec parse(const std::string& text);

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.family == b.family && a.n == b.n && a.q == b.q && a.k == b.k && a.r == b.r &&
               a.m == b.m;
    }
    friend bool operator<(const GroupSpec& a, const GroupSpec& b);
};

long long group_order(const GroupSpec& spec);

// Dense exact matrix over cyclotomics; dimensions stay at 1..3.
class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static CycMatrix identity(int d);
    static CycMatrix scalar(int d, const Cyclotomic& v);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Cyclotomic& at(int i, int j) { return a_[i * cols_ + j]; }
    const Cyclotomic& at(int i, int j) const { return a_[i * cols_ + j]; }

    CycMatrix embed(long long conductor) const;
    CycMatrix conj_transpose() const;
    CycMatrix inverse() const;  // adjugate route, dims <= 3
    Cyclotomic trace() const;
    Cyclotomic det() const;
    CycMatrix pow(long long e) const;  // e >= 0
    bool is_identity() const;
    bool is_unitary() const;

    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator*(const Cyclotomic& s, const CycMatrix& a);
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);
    friend bool operator<(const CycMatrix& a, const CycMatrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Cyclotomic> a_;
};

// Word in the group generators: list of (generator index, exponent >= 0).
using Word = std::vector<std::pair<int, long long>>;

struct GroupElement {
    GroupSpec spec;
    Word word;
    CycMatrix mat;
};

struct ConjugacyClass {
    std::string label;
    Word representative;
    long long size = 0;
    std::vector<Word> members;
    // structured parameters consumed by the character formulas:
    //   C(n,q): {l};  D(k,r): {0,l} / {1,l,q} / {2,l};  P(k): {t,l} with the
    //   seven class kinds t = 0..6;  products: {sorted inner index, j}
    std::vector<long long> key;
};

// Per-spec context: element enumeration, matrix dictionary, Cayley data.
// Instances are immutable after construction and shared via get().
class Group {
public:
    static std::shared_ptr<const Group> get(const GroupSpec& spec,
                                            long long order_cap = kDefaultOrderCap);

    const GroupSpec& spec() const { return spec_; }
    long long order() const { return order_; }
    long long conductor() const { return conductor_; }

    int num_generators() const { return static_cast<int>(gen_names_.size()); }
    const std::string& generator_name(int i) const { return gen_names_[i]; }
    const CycMatrix& generator_matrix(int i) const { return gen_mats_[i]; }

    const std::vector<CycMatrix>& matrices() const { return mats_; }
    const std::vector<Word>& words() const { return words_; }
    int index_of(const CycMatrix& m) const;  // -1 when absent
    CycMatrix evaluate(const Word& w) const;
    int index_of_word(const Word& w) const;

    GroupElement element(int idx) const;
    int identity_index() const { return 0; }

    int mul(int a, int b) const;
    int inv(int a) const;
    int conjugate_index(int g, int h) const;  // g h g^-1

    // Closed-form conjugacy classes, sorted by (size, label).
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int class_of(int element_index) const { return class_of_[element_index]; }
    const std::vector<std::vector<int>>& class_partition() const { return class_members_; }

    // Exhaustive conjugation oracle over all pairs.
    std::vector<std::vector<int>> brute_partition() const;

    std::string word_to_string(const Word& w) const;

private:
    GroupSpec spec_;
    long long order_ = 0;
    long long conductor_ = 1;
    std::vector<std::string> gen_names_;
    std::vector<CycMatrix> gen_mats_;
    std::vector<CycMatrix> mats_;
    std::vector<Word> words_;
    std::map<CycMatrix, int> index_;
    std::vector<ConjugacyClass> classes_;
    std::vector<std::vector<int>> class_members_;  // element indices per class
    std::vector<int> class_of_;
    // enumeration parents (each element = earlier element * generator)
    std::vector<int> parent_, via_;
    std::shared_ptr<const Group> inner_;  // set for product specs
    // left-multiplication permutations; empty for product specs
    std::vector<std::vector<int>> lmul_;
    std::vector<int> inv_;

    explicit Group(const GroupSpec& spec, long long order_cap);
    void enumerate(long long order_cap);
    void build_cayley();
    void build_classes();
    void resolve_members();
};

// Module operations (spec-level surface).
GroupElement multiply(const GroupElement& a, const GroupElement& b);
std::vector<GroupElement> elements(const GroupSpec& spec, long long order_cap = kDefaultOrderCap);
std::vector<ConjugacyClass> conjugacy_classes(const GroupSpec& spec);
std::vector<ConjugacyClass> brute_conjugacy(const GroupSpec& spec,
                                            long long order_cap = kDefaultOrderCap);

}  // namespace mckay
