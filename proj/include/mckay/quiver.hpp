// Quivers as labeled multidigraphs with a nonnegative multiplicity matrix.
//
// Two independent constructions of every McKay quiver are kept side by side:
//   - mckay_matrix(): the character-theoretic route a_ij = <rho chi_i, chi_j>,
//     an integer-exact kernel parallelized with OpenMP over rows, with a
//     serial dense-rational reference implementation used by the tests and
//     the benchmark;
//   - rule_quiver(): the combinatorial arrow rules, no character arithmetic.
// Their agreement is the central cross-check of the whole project.

#pragma once

#include <optional>

#include "mckay/repr.hpp"

namespace mckay {

struct QuiverVertex {
    std::string label;
    long long dim = 1;

    friend bool operator==(const QuiverVertex& a, const QuiverVertex& b) {
        return a.label == b.label && a.dim == b.dim;
    }
};

struct Quiver {
    std::vector<QuiverVertex> vertices;
    std::vector<std::vector<long long>> mult;  // mult[i][j] = arrows i -> j

    int size() const { return static_cast<int>(vertices.size()); }
    long long arrow_count() const;
    long long out_degree(int v) const;
    long long in_degree(int v) const;
    int index_of_label(const std::string& label) const;  // -1 when absent

    friend bool operator==(const Quiver& a, const Quiver& b) {
        return a.vertices == b.vertices && a.mult == b.mult;
    }
};

// f[i] = image of vertex i.
using VertexMap = std::vector<int>;

// --- character-theoretic route ---------------------------------------------

// a_ij = <rho * chi_i, chi_j>, all irreps at once. Integer-exact: accumulates
// root-of-unity exponent vectors in int64 and reduces once per entry.
// Parallelized over rows when OpenMP is enabled.
std::vector<std::vector<long long>> mckay_matrix(const CharacterTable& table,
                                                 const Character& rho);

// Serial reference: dense rational cyclotomic inner products, entry by entry.
std::vector<std::vector<long long>> mckay_matrix_reference(const CharacterTable& table,
                                                           const Character& rho);

// Gram matrix <chi_i, chi_j>; the identity matrix for a correct table.
std::vector<std::vector<long long>> gram_matrix(const CharacterTable& table);

// sum_i chi_i(g) conj(chi_i(h)) = |centralizer(g)| [g ~ h], checked exactly.
bool column_orthogonality_holds(const CharacterTable& table);

Quiver mckay_quiver(const CharacterTable& table, const Character& rho);
Quiver mckay_quiver(const GroupSpec& spec);  // relative to the natural character

// --- combinatorial route ----------------------------------------------------

// Arrow rules for C(n,q), D(k,r), P(k) and their cyclic products; no
// character arithmetic involved.
Quiver rule_quiver(const GroupSpec& spec);

// --- embedded Dynkin data ---------------------------------------------------

struct DynkinTree {
    char type = 'A';  // 'A' (cycle), 'D', 'E'
    int index = 0;
    int count = 0;                          // vertex count = index + 1
    std::vector<std::pair<int, int>> edges;  // undirected
    std::vector<long long> marks;            // vertex dims
    int affine_node = 0;                     // the trivial representation
};

// Extended diagrams: A~_{q-1} (q>=2), D~_{q+2} (q>=2), E~_6, E~_7, E~_8.
DynkinTree dynkin_tree(char type, int index);
Quiver dynkin_extended(char type, int index);  // undirected edges = arrow pairs
// The McKay graph type of an SU(2) subgroup spec (BD/BT/BO/BI, cyclic C(n,n-1)).
DynkinTree dynkin_tree_of(const GroupSpec& spec);

// --- constructions and predicates -------------------------------------------

// Vertices (i,j), arrows (i,j) -> (h,j+1 mod m) with multiplicity mult[i][h];
// the Kronecker product with the cyclic shift matrix.
Quiver product_quiver(const Quiver& gamma, long long m);

bool is_connected(const Quiver& q);  // weak (undirected) connectivity

// True iff f preserves dims and multiplicities; throws NotABijection.
bool verify_isomorphism(const Quiver& a, const Quiver& b, const VertexMap& f);

// Backtracking with iterated degree/dim refinement. Vertex cap 250.
std::optional<VertexMap> find_isomorphism(const Quiver& a, const Quiver& b,
                                          int vertex_cap = 250);

// --- exports -----------------------------------------------------------------

std::string export_dot(const Quiver& q);
std::string export_json(const Quiver& q);
Quiver parse_quiver_json(const std::string& text);

}  // namespace mckay
