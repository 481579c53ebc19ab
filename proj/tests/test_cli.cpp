#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mckay/cli.hpp"
#include "mckay/verify.hpp"

using namespace mckay;

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli info") {
    CliResult r = cli({"info", "D(4,1)"});
    CHECK(r.status == 0);
    CHECK(r.out.find("order: 48") != std::string::npos);
    CHECK(r.out.find("conjugacy classes: 24") != std::string::npos);
    CHECK(r.out.find("irreducible representations: 24") != std::string::npos);

    CliResult bi = cli({"info", "BIxC(7)"});
    CHECK(bi.status == 0);
    CHECK(bi.out.find("order: 840") != std::string::npos);
    CHECK(bi.out.find("E~_8") != std::string::npos);
}

TEST_CASE("cli quiver") {
    CliResult r = cli({"quiver", "C(8,3)", "--format", "dot"});
    CHECK(r.status == 0);
    long long arrows = 0;
    for (std::size_t pos = r.out.find("->"); pos != std::string::npos;
         pos = r.out.find("->", pos + 1))
        ++arrows;
    CHECK(arrows == 16);
    CHECK(std::count(r.out.begin(), r.out.end(), '[') == 8);  // one per node line
    // default mode cross-checks the two routes
    CHECK(r.err.find("agree") != std::string::npos);

    // byte-deterministic
    CHECK(cli({"quiver", "D(4,1)", "--format", "json"}).out ==
          cli({"quiver", "D(4,1)", "--format", "json"}).out);

    // the two single-route flags agree with each other
    CHECK(cli({"quiver", "P(2)", "--rules-only", "--format", "json"}).out ==
          cli({"quiver", "P(2)", "--chars-only", "--format", "json"}).out);

    // Dynkin-data route for groups without character tables
    CliResult bt = cli({"quiver", "BTxC(5)", "--format", "json"});
    CHECK(bt.status == 0);
    Quiver parsed = parse_quiver_json(bt.out);
    CHECK(parsed.size() == 35);
    CHECK(cli({"quiver", "BTxC(5)", "--chars-only"}).status == 1);
}

TEST_CASE("cli chartable") {
    CliResult r = cli({"chartable", "D(3,1)", "--format", "csv"});
    CHECK(r.status == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);  // header + 12 irreps
    CHECK(r.out.find("\"2_{0,1} (2)\"") != std::string::npos);  // comma quoted, size attached

    CliResult t = cli({"chartable", "C(5,2)"});
    CHECK(t.status == 0);
    CHECK(t.out.find("z5") != std::string::npos);
}

TEST_CASE("cli ar-check") {
    CHECK(cli({"ar-check", "P(2)xC(5)"}).status == 0);
    CHECK(cli({"ar-check", "P(2)"}).status == 0);
    CHECK(cli({"ar-check", "BTxC(5)"}).status == 0);
    CHECK(cli({"ar-check", "--lemma6", "E6", "--m", "5"}).status == 0);
    CliResult r = cli({"ar-check", "P(3)"});
    CHECK(r.out.find("\"pass\": true") != std::string::npos);
    CHECK(cli({"ar-check", "C(8,3)"}).status != 0);  // no (T,s) structure for C(n,q)
}

TEST_CASE("cli export writes atomically") {
    std::string path = "/tmp/mckay_cli_test_quiver.json";
    std::remove(path.c_str());
    CliResult r = cli({"export", "C(8,3)", "--format", "json", "--out", path});
    CHECK(r.status == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream content;
    content << f.rdbuf();
    CHECK(parse_quiver_json(content.str()).size() == 8);
    std::remove(path.c_str());

    CHECK(cli({"export", "D(3,1)", "--format", "csv"}).status == 2);  // --out required
}

TEST_CASE("cli error paths") {
    CHECK(cli({"info", "C(8,2)"}).status == 2);   // invalid spec names the constraint
    CHECK(cli({"info", "Z(1)"}).status == 2);
    CHECK(cli({"frobnicate"}).status == 2);
    CHECK(cli({}).status == 2);
    CliResult r = cli({"info", "C(8,2)"});
    CHECK(r.err.find("gcd") != std::string::npos);
}

TEST_CASE("a perturbed character value is detected") {
    GroupSpec spec = GroupSpec::pprime(2);
    CharacterTable broken = *character_table(spec);
    broken.chars[4].values[7] += Cyclotomic::one();
    bool caught = !column_orthogonality_holds(broken);
    if (!caught) {
        try {
            auto gram = gram_matrix(broken);
            for (int i = 0; i < broken.num_irreps() && !caught; ++i)
                for (int j = 0; j < broken.num_irreps() && !caught; ++j)
                    caught = gram[i][j] != (i == j ? 1 : 0);
        } catch (const NotRationalError&) {
            caught = true;
        }
    }
    CHECK(caught);
}
