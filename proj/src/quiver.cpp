#include "mckay/quiver.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace mckay {

long long Quiver::arrow_count() const {
    long long total = 0;
    for (const auto& row : mult)
        for (long long v : row) total += v;
    return total;
}

long long Quiver::out_degree(int v) const {
    long long total = 0;
    for (long long x : mult[v]) total += x;
    return total;
}

long long Quiver::in_degree(int v) const {
    long long total = 0;
    for (const auto& row : mult) total += row[v];
    return total;
}

int Quiver::index_of_label(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (vertices[i].label == label) return i;
    return -1;
}

// ---------------------------------------------------------------------------
// Character route

Quiver mckay_quiver(const CharacterTable& table, const Character& rho) {
    Quiver q;
    for (int i = 0; i < table.num_irreps(); ++i)
        q.vertices.push_back({table.ids[i].label(), table.chars[i].dim()});
    q.mult = mckay_matrix(table, rho);
    return q;
}

Quiver mckay_quiver(const GroupSpec& spec) {
    auto table = character_table(spec);
    return mckay_quiver(*table, natural_character(spec));
}

// ---------------------------------------------------------------------------
// Rule route

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

Quiver rule_quiver_base(const GroupSpec& spec) {
    std::vector<IrrepId> ids = irreps(spec);
    std::map<IrrepId, int> pos;
    for (std::size_t i = 0; i < ids.size(); ++i) pos.emplace(ids[i], static_cast<int>(i));
    Quiver q;
    for (const auto& id : ids) q.vertices.push_back({id.label(), id.dim()});
    q.mult.assign(ids.size(), std::vector<long long>(ids.size(), 0));
    auto arrow = [&](const IrrepId& from, IrrepId to) {
        q.mult[pos.at(canonicalize(spec, from))][pos.at(canonicalize(spec, to))] += 1;
    };

    switch (spec.family) {
        case Family::Cyclic:
            // two arrows out of beta_i: to beta_{i+1} and beta_{i+q};
            // the indicator sum makes q = 1 a double arrow
            for (long long i = 0; i < spec.n; ++i) {
                arrow(IrrepId::cyclic_beta(i), IrrepId::cyclic_beta(i + 1));
                arrow(IrrepId::cyclic_beta(i), IrrepId::cyclic_beta(i + spec.q));
            }
            break;
        case Family::Dihedral: {
            long long r = spec.r;
            long long two_k = 1LL << spec.k, quarter = 1LL << (spec.k - 2);
            for (long long i = 0; i < two_k; ++i)
                arrow(IrrepId::d_one(i), IrrepId::d_two(1, i + 1));
            for (long long t = 1; t <= 2 * r; ++t)
                for (long long s = 0; s < quarter; ++s) {
                    IrrepId from = IrrepId::d_two(t, s);
                    if (t - 1 == 0) {
                        arrow(from, IrrepId::d_one(mod_ll(s + 1, two_k)));
                        arrow(from, IrrepId::d_one(mod_ll((two_k / 2) + s + 1, two_k)));
                    } else {
                        arrow(from, IrrepId::d_two(t - 1, s + 1));
                    }
                    if (t + 1 == 2 * r + 1) {
                        arrow(from, IrrepId::d_one(mod_ll(quarter + s + 1, two_k)));
                        arrow(from, IrrepId::d_one(mod_ll((two_k / 2) + quarter + s + 1, two_k)));
                    } else {
                        arrow(from, IrrepId::d_two(t + 1, s + 1));
                    }
                }
            break;
        }
        case Family::PPrime: {
            long long t3 = pow_ll(3, spec.k), third = t3 / 3;
            for (long long i = 0; i < t3; ++i) {
                arrow(IrrepId::p_one(i), IrrepId::p_two(i + 1));
                arrow(IrrepId::p_two(i), IrrepId::p_one(i + 1));
                arrow(IrrepId::p_two(i), IrrepId::p_three(i + 1));
            }
            for (long long s = 0; s < third; ++s) {
                arrow(IrrepId::p_three(s), IrrepId::p_two(s + 1));
                arrow(IrrepId::p_three(s), IrrepId::p_two(third + s + 1));
                arrow(IrrepId::p_three(s), IrrepId::p_two(2 * third + s + 1));
            }
            break;
        }
        default:
            throw UnsupportedError("no arrow rules for " + spec.to_string() +
                                   "; its quiver is embedded Dynkin data");
    }
    return q;
}

}  // namespace

Quiver rule_quiver(const GroupSpec& spec) {
    if (spec.is_product()) return product_quiver(rule_quiver(spec.inner()), spec.m);
    return rule_quiver_base(spec);
}

// ---------------------------------------------------------------------------
// Dynkin data

DynkinTree dynkin_tree(char type, int index) {
    DynkinTree t;
    t.type = type;
    t.index = index;
    t.count = index + 1;
    auto edge = [&](int a, int b) { t.edges.emplace_back(a, b); };
    if (type == 'A') {
        if (index < 1) throw InvalidIndexError("A~ index must be >= 1");
        int q = index + 1;
        t.marks.assign(q, 1);
        for (int i = 0; i < q; ++i) edge(i, (i + 1) % q);
        t.affine_node = 0;
        return t;
    }
    if (type == 'D') {
        if (index < 4) throw InvalidIndexError("D~ index must be >= 4");
        int q = index - 2;  // D~_{q+2} has q+3 vertices
        t.marks.assign(q + 3, 1);
        // 0,1 = leaves at the near end; 2..q = interior path; q+1,q+2 = far leaves
        edge(0, 2);
        edge(1, 2);
        for (int i = 2; i < q; ++i) {
            edge(i, i + 1);
            t.marks[i] = 2;
        }
        t.marks[q] = 2;
        edge(q + 1, q);
        edge(q + 2, q);
        t.affine_node = 0;
        return t;
    }
    if (type == 'E') {
        // arms around a central node; marks are the standard affine marks
        std::vector<std::vector<long long>> arms;
        long long center;
        if (index == 6) {
            center = 3;
            arms = {{2, 1}, {2, 1}, {2, 1}};
        } else if (index == 7) {
            center = 4;
            arms = {{2}, {3, 2, 1}, {3, 2, 1}};
        } else if (index == 8) {
            center = 6;
            arms = {{3}, {4, 2}, {5, 4, 3, 2, 1}};
        } else {
            throw InvalidIndexError("E~ index must be 6, 7 or 8");
        }
        t.marks = {center};
        for (const auto& arm : arms) {
            int prev = 0;
            for (long long mark : arm) {
                t.marks.push_back(mark);
                edge(prev, static_cast<int>(t.marks.size()) - 1);
                prev = static_cast<int>(t.marks.size()) - 1;
            }
        }
        t.count = static_cast<int>(t.marks.size());
        t.affine_node = t.count - 1;  // tip of the last arm, mark 1
        return t;
    }
    throw InvalidIndexError(std::string("unknown Dynkin type '") + type + "'");
}

Quiver dynkin_extended(char type, int index) {
    DynkinTree t = dynkin_tree(type, index);
    Quiver q;
    for (int i = 0; i < static_cast<int>(t.marks.size()); ++i)
        q.vertices.push_back({"v" + std::to_string(i), t.marks[i]});
    q.mult.assign(q.size(), std::vector<long long>(q.size(), 0));
    for (const auto& [a, b] : t.edges) {
        q.mult[a][b] += 1;
        q.mult[b][a] += 1;
    }
    return q;
}

DynkinTree dynkin_tree_of(const GroupSpec& spec) {
    GroupSpec base = spec.inner();
    switch (base.family) {
        case Family::Cyclic:
            if (mod_ll(base.q + 1, base.n) != 0)
                throw UnsupportedError(base.to_string() +
                                       " is not an SU(2) subgroup (needs q = n-1)");
            return dynkin_tree('A', static_cast<int>(base.n - 1));
        case Family::BinaryDihedral: return dynkin_tree('D', static_cast<int>(base.q + 2));
        case Family::BinaryTetrahedral: return dynkin_tree('E', 6);
        case Family::BinaryOctahedral: return dynkin_tree('E', 7);
        case Family::BinaryIcosahedral: return dynkin_tree('E', 8);
        default:
            throw UnsupportedError(base.to_string() + " has no embedded Dynkin diagram");
    }
}

// ---------------------------------------------------------------------------
// Product construction

Quiver product_quiver(const Quiver& gamma, long long m) {
    if (m < 1) throw InvalidMError("product_quiver requires m >= 1");
    if (m == 1) return gamma;
    int n = gamma.size();
    Quiver q;
    q.vertices.reserve(n * m);
    for (int i = 0; i < n; ++i)
        for (long long j = 0; j < m; ++j)
            q.vertices.push_back(
                {gamma.vertices[i].label + ";" + std::to_string(j), gamma.vertices[i].dim});
    q.mult.assign(n * m, std::vector<long long>(n * m, 0));
    for (int i = 0; i < n; ++i)
        for (int h = 0; h < n; ++h) {
            if (gamma.mult[i][h] == 0) continue;
            for (long long j = 0; j < m; ++j)
                q.mult[i * m + j][h * m + (j + 1) % m] = gamma.mult[i][h];
        }
    return q;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_connected(const Quiver& q) {
    int n = q.size();
    if (n <= 1) return true;
    std::vector<int> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
            if (seen[w] || (q.mult[v][w] == 0 && q.mult[w][v] == 0)) continue;
            seen[w] = 1;
            ++visited;
            stack.push_back(w);
        }
    }
    return visited == n;
}

bool verify_isomorphism(const Quiver& a, const Quiver& b, const VertexMap& f) {
    int n = a.size();
    if (b.size() != n || static_cast<int>(f.size()) != n)
        throw NotABijectionError("vertex map size does not match quivers");
    std::vector<int> hit(n, 0);
    for (int v : f) {
        if (v < 0 || v >= n || hit[v]) throw NotABijectionError("vertex map is not a bijection");
        hit[v] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (a.vertices[i].dim != b.vertices[f[i]].dim) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (a.mult[i][j] != b.mult[f[i]][f[j]]) return false;
    return true;
}

namespace {

// iterated refinement by (dim, multiset of out/in arrows into color classes)
std::vector<int> refine_colors(const Quiver& a, const Quiver& b, int rounds) {
    int n = a.size();
    std::vector<int> color(2 * n);
    auto mult_at = [&](int g, int i, int j) -> long long {
        return g == 0 ? a.mult[i][j] : b.mult[i][j];
    };
    {
        std::map<long long, int> dim_code;
        for (int g = 0; g < 2; ++g)
            for (int i = 0; i < n; ++i) {
                long long d = g == 0 ? a.vertices[i].dim : b.vertices[i].dim;
                auto [it, inserted] = dim_code.emplace(d, static_cast<int>(dim_code.size()));
                color[g * n + i] = it->second;
            }
    }
    for (int round = 0; round < rounds; ++round) {
        std::map<std::vector<long long>, int> codes;
        std::vector<int> next(2 * n);
        for (int g = 0; g < 2; ++g)
            for (int i = 0; i < n; ++i) {
                std::vector<long long> sig;
                sig.push_back(color[g * n + i]);
                std::vector<long long> outs, ins;
                for (int j = 0; j < n; ++j) {
                    if (long long m = mult_at(g, i, j))
                        outs.push_back(m * 1000003LL + color[g * n + j]);
                    if (long long m = mult_at(g, j, i))
                        ins.push_back(m * 1000003LL + color[g * n + j]);
                }
                std::sort(outs.begin(), outs.end());
                std::sort(ins.begin(), ins.end());
                sig.push_back(-1);
                sig.insert(sig.end(), outs.begin(), outs.end());
                sig.push_back(-2);
                sig.insert(sig.end(), ins.begin(), ins.end());
                auto [it, inserted] = codes.emplace(std::move(sig), static_cast<int>(codes.size()));
                next[g * n + i] = it->second;
            }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct IsoSearch {
    const Quiver& a;
    const Quiver& b;
    std::vector<int> order;                     // a-vertices, most constrained first
    std::vector<std::vector<int>> candidates;   // same-color b-vertices per a-vertex
    std::vector<int> map_ab;
    std::vector<int> used_b;
    long long steps = 0;
    static constexpr long long kStepCap = 50000000;

    bool consistent(int av, int bv, int depth) const {
        for (int d = 0; d < depth; ++d) {
            int au = order[d], bu = map_ab[au];
            if (a.mult[av][au] != b.mult[bv][bu] || a.mult[au][av] != b.mult[bu][bv])
                return false;
        }
        return true;
    }

    bool search(int depth) {
        if (++steps > kStepCap)
            throw SearchCapExceededError("isomorphism search exceeded the step cap");
        if (depth == static_cast<int>(order.size())) return true;
        int av = order[depth];
        for (int bv : candidates[av]) {
            if (used_b[bv] || !consistent(av, bv, depth)) continue;
            used_b[bv] = 1;
            map_ab[av] = bv;
            if (search(depth + 1)) return true;
            used_b[bv] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<VertexMap> find_isomorphism(const Quiver& a, const Quiver& b, int vertex_cap) {
    if (a.size() != b.size()) return std::nullopt;
    int n = a.size();
    if (n > vertex_cap)
        throw SearchCapExceededError("quiver has " + std::to_string(n) +
                                     " vertices, above the search cap " +
                                     std::to_string(vertex_cap));
    if (n == 0) return VertexMap{};
    std::vector<int> color = refine_colors(a, b, n);
    // color histograms must agree
    std::map<int, std::pair<std::vector<int>, std::vector<int>>> by_color;
    for (int i = 0; i < n; ++i) by_color[color[i]].first.push_back(i);
    for (int i = 0; i < n; ++i) by_color[color[n + i]].second.push_back(i);
    for (const auto& [c, members] : by_color)
        if (members.first.size() != members.second.size()) return std::nullopt;

    IsoSearch search{a, b, {}, {}, std::vector<int>(n, -1), std::vector<int>(n, 0)};
    search.candidates.resize(n);
    for (int i = 0; i < n; ++i) search.candidates[i] = by_color[color[i]].second;
    // connectivity-guided order: always extend along arrows of already placed
    // vertices so each assignment is checked immediately, smallest candidate
    // class first among the frontier
    {
        std::vector<int> placed(n, 0), frontier(n, 0);
        search.order.reserve(n);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                if (best < 0 || frontier[v] > frontier[best] ||
                    (frontier[v] == frontier[best] &&
                     search.candidates[v].size() < search.candidates[best].size()))
                    best = v;
            }
            placed[best] = 1;
            search.order.push_back(best);
            for (int w = 0; w < n; ++w)
                if (!placed[w] && (a.mult[best][w] || a.mult[w][best])) ++frontier[w];
        }
    }
    if (!search.search(0)) return std::nullopt;
    VertexMap f(n);
    for (int i = 0; i < n; ++i) f[i] = search.map_ab[i];
    return f;
}

// ---------------------------------------------------------------------------
// Exports

namespace {

const char* dim_color(long long dim) {
    switch (dim) {
        case 1: return "blue";
        case 2: return "green";
        case 3: return "red";
        case 4: return "yellow";
        case 5: return "cyan";
        case 6: return "gray";
        default: return "black";
    }
}

}  // namespace

std::string export_dot(const Quiver& q) {
    std::ostringstream out;
    out << "digraph mckay {\n";
    for (int i = 0; i < q.size(); ++i)
        out << "  v" << i << " [label=\"" << q.vertices[i].label << "/" << q.vertices[i].dim
            << "\", color=" << dim_color(q.vertices[i].dim) << "];\n";
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            for (long long c = 0; c < q.mult[i][j]; ++c)
                out << "  v" << i << " -> v" << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_json(const Quiver& q) {
    nlohmann::ordered_json doc;
    doc["vertices"] = nlohmann::ordered_json::array();
    for (int i = 0; i < q.size(); ++i)
        doc["vertices"].push_back(
            {{"id", i}, {"label", q.vertices[i].label}, {"dim", q.vertices[i].dim}});
    doc["arrows"] = nlohmann::ordered_json::array();
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            if (q.mult[i][j] != 0)
                doc["arrows"].push_back({{"src", i}, {"dst", j}, {"mult", q.mult[i][j]}});
    return doc.dump(2) + "\n";
}

Quiver parse_quiver_json(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    Quiver q;
    q.vertices.resize(doc.at("vertices").size());
    for (const auto& v : doc.at("vertices")) {
        int id = v.at("id").get<int>();
        q.vertices.at(id) = {v.at("label").get<std::string>(), v.at("dim").get<long long>()};
    }
    q.mult.assign(q.size(), std::vector<long long>(q.size(), 0));
    for (const auto& a : doc.at("arrows"))
        q.mult.at(a.at("src").get<int>()).at(a.at("dst").get<int>()) =
            a.at("mult").get<long long>();
    return q;
}

}  // namespace mckay
