#pragma once

#include "hta/cobar.hpp"
#include "hta/laws.hpp"
#include "hta/periods.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hta {

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<LawResult> checks;
    std::vector<Table> tables;
    std::vector<std::pair<std::string, std::string>> outputs; // labelled values, in order
    long cases() const;
    long failures() const;
    bool pass() const;
};

struct RunConfig {
    std::uint64_t seed = 1;
    int max_weight = 4;
    int max_symbol_degree = 6;
    int t_lo = -3, t_hi = 3;
    AlgPtr algebra; // replaces the default instances of the algebra, hopf and dg suites
    void validate() const;
};

const std::vector<std::string>& suite_names();
// Throws Error on an unknown name.
SuiteReport run_suite(const std::string& name, const RunConfig& cfg);

const std::vector<std::string>& demo_names();
SuiteReport run_demo(const std::string& name);

// Homology of one cobar component, with the Deligne comparison in dg mode.
SuiteReport cobar_report(const AlgPtr& alg, int n, const MultiDegree& md, int spread = -1);
// Period map, big period and (in dg mode) Griffith transversality of a matrix.
SuiteReport period_report(const FramedHTMatrix& h);
// Stuffle of two indices with the series oracle and the FORC verdict.
SuiteReport stuffle_report(const AlgPtr& alg, const std::string& left, const std::string& right, int order = 12);

// The fifteen acceptance criteria, numbered from 1, each with fixed parameters.
const std::vector<std::string>& criterion_titles();
SuiteReport run_criterion(int id, std::uint64_t seed = 1);

} // namespace hta
