#include "mckay/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "mckay/verify.hpp"

namespace mckay {

namespace {

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
        f << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << content;
    else
        write_atomic(out_path, content);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string render_chartable_csv(const CharacterTable& table) {
    std::ostringstream out;
    out << "irrep";
    for (const auto& cls : table.classes)
        out << "," << csv_field(cls.label + " (" + std::to_string(cls.size) + ")");
    out << "\n";
    for (int i = 0; i < table.num_irreps(); ++i) {
        out << csv_field(table.ids[i].label());
        for (const auto& v : table.chars[i].values) out << "," << csv_field(v.to_string());
        out << "\n";
    }
    return out.str();
}

std::string render_chartable_text(const CharacterTable& table) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head = {"irrep"};
    for (const auto& cls : table.classes)
        head.push_back(cls.label + " (" + std::to_string(cls.size) + ")");
    cells.push_back(head);
    for (int i = 0; i < table.num_irreps(); ++i) {
        std::vector<std::string> row = {table.ids[i].label()};
        for (const auto& v : table.chars[i].values) row.push_back(v.to_string());
        cells.push_back(row);
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c] << std::string(width[c] - row[c].size(), ' ');
            out << (c + 1 == row.size() ? "" : "  ");
        }
        out << "\n";
    }
    return out.str();
}

// Dynkin route for specs without character tables (BD/BT/BO/BI, x C_m).
Quiver dynkin_route_quiver(const GroupSpec& spec) {
    DynkinTree tree = dynkin_tree_of(spec);
    return product_quiver(dynkin_extended(tree.type, tree.index), spec.m);
}

struct QuiverResult {
    Quiver quiver;
    bool compared = false;
};

QuiverResult build_quiver(const GroupSpec& spec, bool rules_only, bool chars_only) {
    QuiverResult result;
    if (!has_character_table(spec)) {
        if (chars_only)
            throw UnsupportedError("character route unavailable for " + spec.to_string() +
                                   "; its McKay quiver comes from embedded Dynkin data");
        result.quiver = dynkin_route_quiver(spec);
        return result;
    }
    if (rules_only) {
        result.quiver = rule_quiver(spec);
        return result;
    }
    if (chars_only) {
        result.quiver = mckay_quiver(spec);
        return result;
    }
    result.quiver = rule_quiver(spec);
    Quiver chars = mckay_quiver(spec);
    if (!(result.quiver == chars))
        throw std::runtime_error("rule quiver and character quiver disagree for " +
                                 spec.to_string());
    result.compared = true;
    return result;
}

std::string info_text(const GroupSpec& spec) {
    std::ostringstream out;
    out << "spec: " << spec.to_string() << "\n";
    out << "order: " << group_order(spec) << "\n";
    auto classes = conjugacy_classes(spec);
    out << "conjugacy classes: " << classes.size() << "\n";
    std::map<long long, long long> dims;
    if (has_character_table(spec)) {
        for (const auto& id : irreps(spec)) dims[id.dim()] += 1;
    } else {
        DynkinTree tree = dynkin_tree_of(spec);
        for (long long mark : tree.marks) dims[mark] += spec.m;
        out << "mckay graph: " << tree.type << "~_" << tree.index;
        if (spec.m > 1) out << " x C" << spec.m;
        out << "\n";
    }
    long long total = 0;
    for (const auto& [d, c] : dims) total += c;
    out << "irreducible representations: " << total << " (";
    bool first = true;
    for (const auto& [d, c] : dims) {
        if (!first) out << ", ";
        first = false;
        out << "dim " << d << " x " << c;
    }
    out << ")\n";
    return out.str();
}

CheckReport ar_check_for(const GroupSpec& spec) {
    GroupSpec inner = spec.inner();
    if (inner.family == Family::PPrime) return verify_P_identification(inner.k, spec.m);
    DynkinTree tree = dynkin_tree_of(spec);  // throws for unsupported families
    CheckReport report;
    report.case_name = spec.to_string();
    report.add("cyclic factor odd", spec.m % 2 == 1, "m = " + std::to_string(spec.m));
    Quiver product = product_quiver(dynkin_extended(tree.type, tree.index), spec.m);
    Quiver bracket = bracket_quiver(signed_tree(dynkin_tree(tree.type, tree.index)), spec.m);
    auto iso = find_isomorphism(product, bracket);
    bool ok = iso.has_value() && verify_isomorphism(product, bracket, *iso);
    report.add("product quiver isomorphic to [T,m]", ok,
               std::to_string(product.size()) + " vertices");
    return report;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact McKay quivers of the small finite subgroups of GL(2,C)"};
    app.require_subcommand(1);

    std::string spec_text, format, out_path, lemma_tree;
    long long max_order = kDefaultOrderCap;
    long long lemma_m = 3;
    bool rules_only = false, chars_only = false, as_json = false, serial = false;

    auto* info = app.add_subcommand("info", "order, classes and irreducibles of a group");
    info->add_option("spec", spec_text, "group spec, e.g. D(4,1) or P(2)xC(5)")->required();

    auto* chartable = app.add_subcommand("chartable", "character table of a group");
    chartable->add_option("spec", spec_text)->required();
    chartable->add_option("--format", format, "csv or text (default text)")
        ->check(CLI::IsMember({"csv", "text"}));
    chartable->add_option("--out", out_path, "write atomically to this file");

    auto* quiver = app.add_subcommand("quiver", "McKay quiver relative to the natural character");
    quiver->add_option("spec", spec_text)->required();
    quiver->add_option("--format", format, "dot or json (default dot)")
        ->check(CLI::IsMember({"dot", "json"}));
    auto* ropt = quiver->add_flag("--rules-only", rules_only, "combinatorial rules route only");
    auto* copt = quiver->add_flag("--chars-only", chars_only, "character arithmetic route only");
    ropt->excludes(copt);
    quiver->add_option("--out", out_path);

    auto* archeck = app.add_subcommand("ar-check", "verify the (T,s)/[T,s] identifications");
    archeck->add_option("spec", spec_text, "P(k)[xC(l)] or an SU(2) subgroup times C(m)");
    archeck->add_option("--lemma6", lemma_tree, "tree type+index, e.g. D5 or E6");
    archeck->add_option("--m", lemma_m, "layer count for --lemma6 (default 3)");
    archeck->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run the full property suite");
    verify->add_flag("--json", as_json, "machine-readable report");
    verify->add_option("--max-order", max_order, "enumeration cap (default 5000)");
    verify->add_flag("--serial", serial, "disable the grid fan-out");
    verify->add_option("--out", out_path);

    auto* exportc = app.add_subcommand("export", "write a quiver or table to a file");
    exportc->add_option("spec", spec_text)->required();
    exportc->add_option("--format", format, "dot, json, csv or text")
        ->required()
        ->check(CLI::IsMember({"dot", "json", "csv", "text"}));
    exportc->add_option("--out", out_path)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (info->parsed()) {
            out << info_text(GroupSpec::parse(spec_text));
            return 0;
        }
        if (chartable->parsed()) {
            auto table = character_table(GroupSpec::parse(spec_text));
            std::string text =
                format == "csv" ? render_chartable_csv(*table) : render_chartable_text(*table);
            emit(text, out_path, out);
            return 0;
        }
        if (quiver->parsed()) {
            GroupSpec spec = GroupSpec::parse(spec_text);
            QuiverResult result = build_quiver(spec, rules_only, chars_only);
            std::string text =
                format == "json" ? export_json(result.quiver) : export_dot(result.quiver);
            emit(text, out_path, out);
            if (result.compared)
                err << "note: rule and character quivers agree for " << spec.to_string() << "\n";
            return 0;
        }
        if (archeck->parsed()) {
            CheckReport report;
            if (!lemma_tree.empty()) {
                if (lemma_tree.size() < 2)
                    throw InvalidSpecError("--lemma6 expects a tree like D5 or E7");
                report = check_lemma6(
                    signed_tree(dynkin_tree(lemma_tree[0], std::stoi(lemma_tree.substr(1)))),
                    lemma_m);
            } else if (!spec_text.empty()) {
                report = ar_check_for(GroupSpec::parse(spec_text));
            } else {
                throw InvalidSpecError("ar-check needs a spec or --lemma6");
            }
            emit(report.to_json(), out_path, out);
            return report.all_pass() ? 0 : 1;
        }
        if (verify->parsed()) {
            SuiteOptions options;
            options.order_cap = max_order;
            options.parallel = !serial;
            SuiteReport report = verify_suite(options);
            emit(as_json ? report.to_json() : report.to_text(), out_path, out);
            return report.all_pass() ? 0 : 1;
        }
        if (exportc->parsed()) {
            GroupSpec spec = GroupSpec::parse(spec_text);
            std::string text;
            if (format == "dot" || format == "json") {
                QuiverResult result = build_quiver(spec, false, false);
                text = format == "json" ? export_json(result.quiver) : export_dot(result.quiver);
            } else {
                auto table = character_table(spec);
                text = format == "csv" ? render_chartable_csv(*table)
                                       : render_chartable_text(*table);
            }
            emit(text, out_path, out);
            return 0;
        }
    } catch (const InvalidSpecError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidIndexError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace mckay
