// The property suite: every module invariant run across a deterministic
// grid of catalog groups. The CLI `verify` subcommand and the acceptance
// tests are thin wrappers over this.

#pragma once

#include "mckay/ar.hpp"

namespace mckay {

struct SuiteOptions {
    long long order_cap = kDefaultOrderCap;
    bool parallel = true;  // fan grid cells out to worker threads
};

struct SuiteReport {
    std::vector<CheckReport> cases;

    bool all_pass() const;
    int failed_count() const;
    std::string to_text() const;
    std::string to_json() const;
};

SuiteReport verify_suite(const SuiteOptions& options = {});

// Individual suite pieces, reused by the acceptance tests.
CheckReport check_cyclotomic_identities();
CheckReport check_group_classes(const GroupSpec& spec, long long order_cap = kDefaultOrderCap);
CheckReport check_character_table(const GroupSpec& spec);
CheckReport check_quiver_routes(const GroupSpec& spec);
CheckReport check_su2_quiver(const GroupSpec& spec);   // C(n,n-1) symmetry properties
CheckReport check_kronecker_law(const GroupSpec& inner, long long m);
CheckReport check_unfaithful_example();

}  // namespace mckay
