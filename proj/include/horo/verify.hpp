#pragma once

#include <string>
#include <vector>

#include "horo/dl.hpp"
#include "horo/errors.hpp"
#include "horo/treebolic.hpp"

namespace horo {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

/// Independent oracles, also surfaced by the command-line distance reports.
int dl_bfs_distance(const DlParams& dl, const DlVertex& u, const DlVertex& v, int cap = 16);
int tree_bfs_distance(int p, const TreeVertex& u, const TreeVertex& v, int cap = 32);
double ht_grid_oracle(const HtParams& ht, const HtPoint& a, const HtPoint& b);

SuiteResult verify_bertacchi();
SuiteResult verify_lamplighter_iso();
SuiteResult verify_tree_core();
SuiteResult verify_kpq();
SuiteResult verify_grandmother();
SuiteResult verify_hyperbolic();
SuiteResult verify_treebolic_bounds();
SuiteResult verify_sol_sandwich();
SuiteResult verify_lattice();
SuiteResult verify_baumslag_solitar();
SuiteResult verify_walks();

/// Suites addressable from the command line; "all" expands to every suite.
std::vector<std::string> suite_names();
std::vector<SuiteResult> run_suites(const std::string& name); // throws UnknownSuite

} // namespace horo
