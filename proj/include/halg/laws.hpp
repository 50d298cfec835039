#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halg/fock.hpp"
#include "halg/graphs.hpp"
#include "halg/topology.hpp"

namespace halg {

struct LawResult {
    std::string name;
    bool pass = false;
    std::size_t instances = 0;   // instances checked
    std::string counterexample;  // empty when passing; minimal failing case otherwise
};

struct LawReport {
    std::vector<LawResult> laws;
    std::size_t max_size = 0;
    std::int64_t elapsed_ms = 0;

    bool all_pass() const {
        for (const auto& l : laws)
            if (!l.pass) return false;
        return true;
    }
};

// Runs the full identity-check suite over exhaustive instance families with
// ground sets of size at most max_size.
LawReport run_law_suite(std::size_t max_size);

// Exhaustive instance generators over the ground set {"1".."n"}.
std::vector<SetComposition> all_set_compositions(std::size_t n);
std::vector<BlockGraph> all_block_graphs(std::size_t n);
std::vector<QuasiPoset> all_quasi_posets(std::size_t n);

// Brute-force counting oracles for the polynomial invariants.
std::int64_t proper_coloring_count(const BlockGraph& g, int k);
std::int64_t strict_monotone_count(const QuasiPoset& t, int k);
std::int64_t weak_monotone_count(const QuasiPoset& t, int k);

Rational rat_pow(const Rational& base, long exp);

}  // namespace halg
