#pragma once

#include "bgv/curveconfig.hpp"
#include "bgv/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bgv {

/// Every branch of the given kind (arbitrary real thickenings, any finite
/// length) whose class contribution is componentwise <= budget, each exactly
/// once, in canonical order. Terminates because each edge consumes at least
/// one unit of budget.
std::vector<Branch> enumerate_branches(BranchKind kind, ClassVector budget);

/// Every type-Gamma configuration of class exactly `target`, in canonical
/// order. General thickenings: nothing here assumes admissibility.
std::vector<CurveConfig> enumerate_configs(ClassVector target);

/// Number of configurations of class exactly `target` with
/// config_euler = 1: the per-singular-fiber naive count.
long long count_chi_one(ClassVector target);

/// The configurations behind count_chi_one, for listings.
std::vector<CurveConfig> enumerate_chi_one(ClassVector target);

struct ThreeWayEntry {
	ClassVector cls;
	Int product;                        // naive product coefficient
	Int partitions;                     // four-fold OPD assembly
	std::optional<long long> oracle;    // absent above the cap
	bool ok = false;
};

struct ThreeWayReport {
	Trunc maxd;
	int oracle_cap = 0;
	bool pass = false;
	std::vector<ThreeWayEntry> entries;

	std::string to_json() const;
};

/// Per-class agreement of the three computation routes on the rectangle
/// maxd, with the brute-force route capped at d1 + d2 <= oracle_cap. Any
/// mismatch is reported with the witness class, never silently passed.
ThreeWayReport verify_three_way(Trunc maxd, int oracle_cap = 5);

}  // namespace bgv
