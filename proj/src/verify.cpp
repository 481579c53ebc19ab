#include "mckay/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mckay {

namespace {

std::string plural(long long n, const char* word) {
    return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

bool chars_equal(const Character& a, const Character& b) {
    if (a.values.size() != b.values.size()) return false;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (!(a.values[i] == b.values[i])) return false;
    return true;
}

}  // namespace

CheckReport check_cyclotomic_identities() {
    CheckReport report;
    report.case_name = "cyclotomic";
    bool sums = true;
    for (long long n = 1; n <= 40 && sums; ++n)
        for (long long t = 0; t < 2 * n && sums; ++t) {
            ZetaSum sum(n);
            for (long long q = 0; q < n; ++q)
                sum += ZetaSum::monomial(n, (t * q) % n, Rational(1));
            Cyclotomic value = sum.canonical();
            sums = t % n == 0 ? value.to_rational() == Rational(n) : value.is_zero();
        }
    report.add("power sums of roots of unity (n <= 40)", sums);

    bool orders = true;
    for (long long n = 2; n <= 24 && orders; ++n)
        for (long long e = 1; e < n && orders; ++e) {
            Cyclotomic z = Cyclotomic::root_of_unity(n, e), p = z;
            long long order = 1;
            while (!(p == Cyclotomic::one()) && order <= n) {
                p *= z;
                ++order;
            }
            orders = order == n / gcd_ll(n, e);
        }
    report.add("multiplicative orders of roots of unity", orders);

    bool conj = true;
    for (long long n : {8, 12, 45}) {
        Cyclotomic x = Cyclotomic::root_of_unity(n, 1) +
                       Cyclotomic::from_rational(Rational(1, 2)) * Cyclotomic::root_of_unity(n, 3);
        Cyclotomic y = Cyclotomic::root_of_unity(n, n - 2) - Cyclotomic::from_rational(Rational(2));
        conj = conj && x.conjugate().conjugate() == x &&
               (x * y).conjugate() == x.conjugate() * y.conjugate() &&
               (x + y).conjugate() == x.conjugate() + y.conjugate();
    }
    report.add("conjugation is an involutive ring map", conj);
    return report;
}

CheckReport check_group_classes(const GroupSpec& spec, long long order_cap) {
    CheckReport report;
    report.case_name = "classes " + spec.to_string();
    auto g = Group::get(spec, order_cap);

    long long total = 0;
    for (const auto& c : g->classes()) total += c.size;
    report.add("class equation", total == g->order(),
               plural(g->classes().size(), "class") + ", order " + std::to_string(g->order()));

    auto brute = g->brute_partition();
    std::set<std::vector<int>> brute_set(brute.begin(), brute.end());
    std::set<std::vector<int>> closed_set;
    for (auto block : g->class_partition()) {
        std::sort(block.begin(), block.end());
        closed_set.insert(block);
    }
    report.add("brute-force partition equals closed form", brute_set == closed_set);

    bool unitary = true;
    for (const auto& m : g->matrices()) unitary = unitary && m.is_unitary();
    report.add("realized matrices unitary", unitary);

    // multiplication consistency on a deterministic sample of pairs
    bool consistent = true;
    long long n = g->order();
    long long step = std::max<long long>(1, n * n / 1000);
    for (long long t = 0; t < n * n && consistent; t += step) {
        int a = static_cast<int>(t / n), b = static_cast<int>(t % n);
        int via_matrix = g->index_of(g->matrices()[a] * g->matrices()[b]);
        consistent = via_matrix == g->mul(a, b);
    }
    report.add("multiplication agrees with matrix products", consistent);
    return report;
}

CheckReport check_character_table(const GroupSpec& spec) {
    CheckReport report;
    report.case_name = "table " + spec.to_string();
    auto table = character_table(spec);

    long long dim2 = 0;
    for (const auto& chi : table->chars) dim2 += chi.dim() * chi.dim();
    report.add("sum of squared dims equals order", dim2 == table->order,
               std::to_string(dim2) + " = " + std::to_string(table->order));

    bool traced = true;
    for (const auto& id : table->ids)
        if (!chars_equal(closed_form_character(spec, id), character_of(spec, id))) {
            traced = false;
            break;
        }
    report.add("trace route equals closed-form table", traced);

    auto gram = gram_matrix(*table);
    bool ortho = true;
    for (int i = 0; i < table->num_irreps() && ortho; ++i)
        for (int j = 0; j < table->num_irreps() && ortho; ++j)
            ortho = gram[i][j] == (i == j ? 1 : 0);
    report.add("rows orthonormal", ortho);
    report.add("columns orthogonal", column_orthogonality_holds(*table));
    report.add("natural character faithful", is_faithful(*table, natural_character(spec)));
    return report;
}

CheckReport check_quiver_routes(const GroupSpec& spec) {
    CheckReport report;
    report.case_name = "quiver " + spec.to_string();
    Quiver rules = rule_quiver(spec);
    Quiver chars = mckay_quiver(spec);
    report.add("rule quiver equals character quiver", rules == chars,
               plural(rules.size(), "vertex") + ", " + plural(rules.arrow_count(), "arrow"));
    report.add("connected", is_connected(chars));

    bool conservation = true;
    for (int i = 0; i < chars.size() && conservation; ++i) {
        long long weighted = 0;
        for (int j = 0; j < chars.size(); ++j) weighted += chars.mult[i][j] * chars.vertices[j].dim;
        conservation = weighted == 2 * chars.vertices[i].dim;
    }
    report.add("arrow count conservation", conservation);

    if (group_order(spec) <= 120) {
        auto table = character_table(spec);
        Character nat = natural_character(spec);
        report.add("kernel equals serial reference",
                   mckay_matrix(*table, nat) == mckay_matrix_reference(*table, nat));
    }
    return report;
}

CheckReport check_su2_quiver(const GroupSpec& spec) {
    CheckReport report;
    report.case_name = "su2 quiver " + spec.to_string();
    Quiver q = mckay_quiver(spec);
    bool symmetric = true, no_loops = true, simple = true;
    for (int i = 0; i < q.size(); ++i) {
        no_loops = no_loops && q.mult[i][i] == 0;
        for (int j = 0; j < q.size(); ++j) {
            symmetric = symmetric && q.mult[i][j] == q.mult[j][i];
            simple = simple && q.mult[i][j] <= 1;
        }
    }
    report.add("matrix symmetric", symmetric);
    report.add("no self-loops", no_loops);
    if (spec.n > 2)
        report.add("entries at most 1", simple);
    else  // A~_1 is the double edge: rho = beta_1 + beta_1 doubles the arrow
        report.add("entries equal 2 on the double edge", q.mult[0][1] == 2 && q.mult[1][0] == 2);
    report.add("matches the extended Dynkin diagram",
               q.mult == dynkin_extended('A', static_cast<int>(spec.n - 1)).mult);
    return report;
}

CheckReport check_kronecker_law(const GroupSpec& inner, long long m) {
    CheckReport report;
    GroupSpec prod = inner.times_cyclic(m);
    report.case_name = "kronecker " + prod.to_string();
    report.add("product table quiver equals Kronecker product",
               mckay_quiver(prod) == product_quiver(mckay_quiver(inner), m));
    return report;
}

CheckReport check_unfaithful_example() {
    CheckReport report;
    report.case_name = "unfaithful C(4,1) vs beta_2 + beta_2";
    GroupSpec spec = GroupSpec::cyclic(4, 1);
    auto table = character_table(spec);
    Character b2 = closed_form_character(spec, IrrepId::cyclic_beta(2));
    Character rho = char_add(b2, b2);
    report.add("character unfaithful", !is_faithful(*table, rho));
    report.add("quiver disconnected", !is_connected(mckay_quiver(*table, rho)));
    return report;
}

bool SuiteReport::all_pass() const {
    for (const auto& c : cases)
        if (!c.all_pass()) return false;
    return true;
}

int SuiteReport::failed_count() const {
    int failed = 0;
    for (const auto& c : cases)
        for (const auto& item : c.checks) failed += item.pass ? 0 : 1;
    return failed;
}

std::string SuiteReport::to_text() const {
    std::ostringstream out;
    int total = 0, passed = 0;
    for (const auto& c : cases)
        for (const auto& item : c.checks) {
            ++total;
            passed += item.pass ? 1 : 0;
            out << (item.pass ? "PASS" : "FAIL") << "  " << c.case_name << ": " << item.name;
            if (!item.detail.empty()) out << " (" << item.detail << ")";
            out << "\n";
        }
    out << passed << "/" << total << " checks passed\n";
    return out.str();
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& c : cases) {
        nlohmann::ordered_json entry;
        entry["case"] = c.case_name;
        entry["checks"] = nlohmann::ordered_json::array();
        for (const auto& item : c.checks)
            entry["checks"].push_back(
                {{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
        doc.push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

SuiteReport verify_suite(const SuiteOptions& options) {
    const std::vector<std::string> table_specs = {
        "C(5,2)",  "C(8,1)",  "C(8,3)",  "C(8,5)",  "C(8,7)",  "C(12,7)",
        "D(3,1)",  "D(3,2)",  "D(3,3)",  "D(4,1)",  "D(4,2)",  "D(4,3)",
        "D(5,1)",  "D(5,2)",  "D(5,3)",  "P(2)",    "P(3)",
        "D(3,1)xC(5)", "D(3,1)xC(7)", "D(4,1)xC(5)", "P(2)xC(5)", "P(2)xC(7)"};
    const std::vector<std::string> extra_group_specs = {
        "BD(2)", "BD(3)", "BD(4)", "BD(5)", "BT",        "BO",
        "BI",    "BD(4)xC(3)",     "BTxC(5)", "BOxC(5)", "BIxC(7)"};

    std::vector<std::function<CheckReport()>> tasks;
    tasks.push_back([] { return check_cyclotomic_identities(); });
    for (const auto& text : table_specs) {
        GroupSpec spec = GroupSpec::parse(text);
        tasks.push_back([spec] { return check_character_table(spec); });
        tasks.push_back([spec] { return check_quiver_routes(spec); });
    }
    for (const auto& text : table_specs) {
        GroupSpec spec = GroupSpec::parse(text);
        long long cap = options.order_cap;
        tasks.push_back([spec, cap] { return check_group_classes(spec, cap); });
    }
    for (const auto& text : extra_group_specs) {
        GroupSpec spec = GroupSpec::parse(text);
        long long cap = options.order_cap;
        tasks.push_back([spec, cap] { return check_group_classes(spec, cap); });
    }
    for (long long n : {2, 5, 8}) {
        GroupSpec spec = GroupSpec::cyclic(n, n - 1);
        tasks.push_back([spec] { return check_su2_quiver(spec); });
    }
    tasks.push_back([] { return check_kronecker_law(GroupSpec::dihedral(3, 1), 5); });
    tasks.push_back([] { return check_kronecker_law(GroupSpec::dihedral(3, 1), 7); });
    tasks.push_back([] { return check_kronecker_law(GroupSpec::pprime(2), 5); });
    tasks.push_back([] { return check_kronecker_law(GroupSpec::pprime(2), 7); });
    tasks.push_back([] { return check_unfaithful_example(); });

    // section 7 material: all trees D~_4..D~_8, E~_6..E~_8 and every m <= 7
    for (char type : {'D', 'E'})
        for (int index :
             (type == 'D' ? std::vector<int>{4, 5, 6, 7, 8} : std::vector<int>{6, 7, 8}))
            for (long long m = 1; m <= 7; ++m) {
                tasks.push_back([type, index, m] {
                    return check_lemma6(signed_tree(dynkin_tree(type, index)), m);
                });
            }
    {
        struct BracketCase {
            char type;
            int index;
            long long m;
        };
        for (BracketCase c : {BracketCase{'D', 6, 3}, BracketCase{'E', 6, 5},
                              BracketCase{'E', 7, 5}, BracketCase{'E', 8, 7}}) {
            tasks.push_back([c] {
                CheckReport report;
                report.case_name = std::string("bracket vs product ") + c.type +
                                   std::to_string(c.index) + " x C" + std::to_string(c.m);
                Quiver product = product_quiver(dynkin_extended(c.type, c.index), c.m);
                Quiver bracket = bracket_quiver(signed_tree(dynkin_tree(c.type, c.index)), c.m);
                auto iso = find_isomorphism(product, bracket);
                report.add("isomorphic via search", iso.has_value());
                return report;
            });
        }
    }
    for (auto [k, l] :
         std::vector<std::pair<long long, long long>>{{2, 1}, {2, 5}, {2, 7}, {3, 1}})
        tasks.push_back([k, l] { return verify_P_identification(k, l); });
    tasks.push_back([] {
        CheckReport report;
        report.case_name = "congruence lemma";
        bool ok = true;
        for (long long m = 3; m <= 45; m += 6) ok = ok && cong_lemma_holds(m);
        report.add("m(m-1)/2 = m mod 3m for m = 3, 9, ..., 45", ok);
        return report;
    });

    SuiteReport suite;
    suite.cases.resize(tasks.size());
    std::vector<std::string> errors(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (options.parallel)
#endif
    for (int i = 0; i < static_cast<int>(tasks.size()); ++i) {
        try {
            suite.cases[i] = tasks[i]();
        } catch (const std::exception& e) {
            CheckReport crash;
            crash.case_name = "task " + std::to_string(i);
            crash.add("completed without exception", false, e.what());
            suite.cases[i] = crash;
        }
    }
    return suite;
}

}  // namespace mckay
