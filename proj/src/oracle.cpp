#include "bgv/oracle.hpp"

#include "bgv/partitions.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace bgv {

namespace {

/* Depth-first extension of a branch prefix. The class of the next edge
 * alternates; every real edge consumes multiplicity >= 1 of its class
 * budget, which bounds the recursion. Edges are ordered by multiplicity,
 * then by inside thickening. */
void extend_branch(Branch& prefix, bool next_on_c1, int left1, int left2,
		   std::vector<Branch>& out)
{
	out.push_back(prefix);
	int left = next_on_c1 ? left1 : left2;
	for (int mult = 1; mult <= left; ++mult)
		for (int inside = 1; inside <= mult; ++inside) {
			prefix.edges.push_back(Edge{inside, mult + 1 - inside});
			extend_branch(prefix, !next_on_c1,
				      left1 - (next_on_c1 ? mult : 0),
				      left2 - (next_on_c1 ? 0 : mult), out);
			prefix.edges.pop_back();
		}
}

}  // namespace

std::vector<Branch> enumerate_branches(BranchKind kind, ClassVector budget)
{
	if (budget.d1 < 0 || budget.d2 < 0)
		throw std::invalid_argument(
		    "enumerate_branches: negative budget");
	std::vector<Branch> out;
	Branch prefix;
	prefix.kind = kind;
	extend_branch(prefix, starts_on_c1(kind), budget.d1, budget.d2, out);
	return out;
}

std::vector<CurveConfig> enumerate_configs(ClassVector target)
{
	std::array<std::map<ClassVector, std::vector<Branch>>, 4> buckets;
	for (auto kind : kAllBranchKinds) {
		auto branches = enumerate_branches(kind, target);
		auto& bucket = buckets[static_cast<int>(kind)];
		for (auto& b : branches)
			bucket[branch_class(b)].push_back(std::move(b));
	}

	std::vector<CurveConfig> out;
	for (const auto& [c0, v0] : buckets[0])
		for (const auto& [c1, v1] : buckets[1]) {
			int d1_01 = c0.d1 + c1.d1;
			int d2_01 = c0.d2 + c1.d2;
			if (d1_01 > target.d1 || d2_01 > target.d2) continue;
			for (const auto& [c2, v2] : buckets[2]) {
				ClassVector c3{target.d1 - d1_01 - c2.d1,
					       target.d2 - d2_01 - c2.d2};
				if (c3.d1 < 0 || c3.d2 < 0) continue;
				auto it = buckets[3].find(c3);
				if (it == buckets[3].end()) continue;
				for (const Branch& b0 : v0)
					for (const Branch& b1 : v1)
						for (const Branch& b2 : v2)
							for (const Branch& b3 :
							     it->second) {
								CurveConfig c;
								c.branch(BranchKind::UpperQ) = b0;
								c.branch(BranchKind::LowerQ) = b1;
								c.branch(BranchKind::UpperP) = b2;
								c.branch(BranchKind::LowerP) = b3;
								out.push_back(std::move(c));
							}
			}
		}
	return out;
}

long long count_chi_one(ClassVector target)
{
	long long count = 0;
	for (const CurveConfig& c : enumerate_configs(target))
		if (config_euler(c) == 1) ++count;
	return count;
}

std::vector<CurveConfig> enumerate_chi_one(ClassVector target)
{
	std::vector<CurveConfig> out;
	for (CurveConfig& c : enumerate_configs(target))
		if (config_euler(c) == 1) out.push_back(std::move(c));
	return out;
}

ThreeWayReport verify_three_way(Trunc maxd, int oracle_cap)
{
	ThreeWayReport report;
	report.maxd = maxd;
	report.oracle_cap = oracle_cap;
	report.pass = true;

	BiSeries product = banana_product_naive(maxd);
	std::map<ClassVector, Int> parts = opd_config_counts(maxd);

	for (int d1 = 0; d1 <= maxd.d1; ++d1)
		for (int d2 = 0; d2 <= maxd.d2; ++d2) {
			ThreeWayEntry e;
			e.cls = ClassVector{d1, d2};
			e.product = coeff(product, e.cls);
			auto it = parts.find(e.cls);
			e.partitions = it == parts.end() ? Int(0) : it->second;
			if (d1 + d2 <= oracle_cap)
				e.oracle = count_chi_one(e.cls);
			e.ok = e.product == e.partitions &&
			       (!e.oracle || Int(*e.oracle) == e.product);
			if (!e.ok) report.pass = false;
			report.entries.push_back(std::move(e));
		}
	return report;
}

std::string ThreeWayReport::to_json() const
{
	nlohmann::ordered_json j;
	j["check"] = "three-way";
	j["maxd"] = {maxd.d1, maxd.d2};
	j["oracle_cap"] = oracle_cap;
	j["pass"] = pass;
	auto& classes = j["classes"] = nlohmann::ordered_json::array();
	for (const auto& e : entries) {
		nlohmann::ordered_json row;
		row["d1"] = e.cls.d1;
		row["d2"] = e.cls.d2;
		row["product"] = e.product.str();
		row["partitions"] = e.partitions.str();
		if (e.oracle)
			row["oracle"] = *e.oracle;
		else
			row["oracle"] = nullptr;
		row["ok"] = e.ok;
		classes.push_back(std::move(row));
	}
	return j.dump(2);
}

}  // namespace bgv
