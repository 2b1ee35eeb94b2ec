#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cyclocode/numtheory.hpp"

namespace cyclocode::cli {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Field, character-sum and code invariants on small fixed instances.
std::vector<Check> property_checks();

/// Brute force and theory against every registered code's enumerator.
std::vector<Check> example_checks(unsigned threads);

/// Dual-distance probe on the registered d = 1 codes small enough to probe.
std::vector<Check> dual_checks();

struct SweepRange {
    u64 q = 0;
    unsigned k = 0;
    u64 e_max = 0;
};

/// Parses "q=3,k=3,e-max=6".
SweepRange parse_sweep(const std::string& text);

/// compare() for every valid (e1, e2) in [1, e_max]^2 with d <= 4.
std::vector<Check> sweep_checks(const SweepRange& range, unsigned threads);

}  // namespace cyclocode::cli
