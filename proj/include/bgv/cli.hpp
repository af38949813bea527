#pragma once

#include "bgv/series.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace bgv {

enum class Command { Table, Verify, Jacobi, Oracle, Partitions };
enum class Format { Csv, Json };

struct RunConfig {
	Command command = Command::Table;
	int maxd1 = 4;
	int maxd2 = 4;
	/// Total-degree cap for the brute-force route; defaults to
	/// min(5, maxd1 + maxd2) when unset.
	std::optional<int> oracle_cap;
	Format format = Format::Csv;
	std::optional<std::string> output;     // write to this path, else `out`
	std::optional<ClassVector> cls;        // --class for the oracle command
	bool list = false;                     // --list configuration listings
};

/// Executes one command. Returns the process exit status: 0 on success,
/// 1 on verification failure, 2 on an invalid configuration.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace bgv
