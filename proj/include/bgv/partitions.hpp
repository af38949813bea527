#pragma once

#include "bgv/curveconfig.hpp"
#include "bgv/series.hpp"

#include <utility>
#include <vector>

namespace bgv {

/// An integer partition, stored weakly decreasing with all parts >= 1.
struct Partition {
	std::vector<int> parts;

	int size() const;        // |lambda|, the sum of parts
	int odd_parts() const;   // OP(lambda), the number of odd parts
	auto operator<=>(const Partition&) const = default;
};

std::string render(const Partition& p);

/// True iff no odd value occurs twice among the parts (arbitrary even
/// repetitions are allowed).
bool is_opd(const Partition& p);

/// Dark/light box counts of the Young diagram whose column heights are the
/// parts of p: dark = (|lambda| + OP)/2, light = (|lambda| - OP)/2.
/// Throws std::domain_error unless is_opd(p).
std::pair<int, int> box_bidegree(const Partition& p);

/// All OPD partitions with the given box bidegree, each exactly once, in
/// lexicographic descending order.
std::vector<Partition> enumerate_opd(int dark, int light);

Partition conjugate(const Partition& p);

/// The admissible branch of an OPD partition: edge inside multiplicities
/// are the rows of the Young diagram whose column heights are the parts of
/// p (the conjugate partition), all outside multiplicities 1.
Branch opd_to_branch(const Partition& p, BranchKind kind);

/// Per-branch generating series prod_n (1 + x^n y^{n-1}) / (1 - x^n y^n)
/// for a C1-first branch, with x and y swapped for a C2-first one: the
/// (a, b) coefficient is the number of OPD partitions the branch kind
/// routes to class (a, b).
BiSeries gf_opd_branch(BranchKind kind, Trunc t);

/// Per-class counts of four-branch admissible configurations, assembled by
/// direct OPD enumeration and convolution over the four branch kinds.
/// Independent of the series machinery.
std::map<ClassVector, Int> opd_config_counts(Trunc t);

}  // namespace bgv
