#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seatstorm/bribery.hpp"
#include "seatstorm/oracle.hpp"

namespace seatstorm {

/// Exhaustive solver-vs-oracle comparison grids. These are the audit tools
/// behind the `oracle-check` subcommand: every decision a polynomial solver
/// makes on the grid is compared against full enumeration.

struct SingleGridSpec {
    std::vector<int> party_counts = {2, 3, 4};
    Votes max_votes = 12;              // total votes per instance
    std::vector<int> seat_counts = {1, 2, 3};
    std::vector<Votes> thresholds = {0, 2, 3};
    Votes max_budget = 3;
    bool include_winner = true;
    bool check_lemma2 = false;  // restricted-vs-free move family (divisor methods)
    int threads = 2;
};

struct MultiGridSpec {
    std::vector<int> district_counts = {2, 3};
    int max_parties = 4;
    Votes max_district_votes = 8;
    int max_district_seats = 3;
    std::vector<Votes> thresholds = {0, 2};
    Votes max_budget = 3;
    int threads = 2;
};

struct CrossCheckReport {
    long long decisions = 0;
    long long mismatches = 0;
    long long witness_failures = 0;
    long long lemma2_checks = 0;
    long long lemma2_violations = 0;
    std::vector<std::string> samples;  // first few failures, for diagnosis

    bool ok() const { return mismatches == 0 && witness_failures == 0 && lemma2_violations == 0; }
    void merge(const CrossCheckReport& other);
};

/// Criterion grid: single-district solvers (all methods, both directions,
/// seats and winner objectives) against oracle_decide_top_choice.
CrossCheckReport crosscheck_single_district(const SingleGridSpec& spec);

/// Multi-district solvers (MAB, DMAB, FPTP-DMAWB) against enumeration.
CrossCheckReport crosscheck_multi_district(const MultiGridSpec& spec);

}  // namespace seatstorm
