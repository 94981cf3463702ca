#ifndef MOTIFSCOPE_ACCEPTANCE_HPP
#define MOTIFSCOPE_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "motifscope/graph.hpp"

namespace motifscope {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

struct BankGraph {
    std::string name;
    Graph g;
    bool forest;
};

// The fixed parent bank (n <= 12) every exactness criterion runs over.
const std::vector<BankGraph>& acceptance_bank();

// Runs the eight acceptance criteria, printing one pass/fail line each.
std::vector<CriterionResult> run_acceptance(std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace motifscope

#endif
