// Acceptance suite: runs every acceptance criterion at exact integer
// tolerance and prints one pass/fail line per criterion.

#include "bgv/cli.hpp"
#include "bgv/curveconfig.hpp"
#include "bgv/invariants.hpp"
#include "bgv/oracle.hpp"
#include "bgv/partitions.hpp"
#include "bgv/series.hpp"

#include <chrono>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace bgv;

namespace {

struct Criterion {
	int id;
	std::string title;
	bool (*check)(std::string& detail);
};

/* 1. Golden signed values of the expanded product. */
bool golden_values(std::string& detail)
{
	InvariantTable t = build_table(Trunc{3, 4}, Route::Product);
	const std::pair<ClassVector, long long> expected[] = {
	    {{0, 0}, 12}, {{1, 0}, -24}, {{0, 1}, -24}, {{1, 1}, 96},
	    {{2, 0}, 12}, {{2, 1}, -144}, {{1, 3}, 96}, {{1, 4}, -24},
	};
	for (const auto& [cls, want] : expected) {
		Int have = t.at(cls).signed_value;
		if (have != want) {
			std::ostringstream os;
			os << "class (" << cls.d1 << "," << cls.d2 << "): "
			   << have << " != " << want;
			detail = os.str();
			return false;
		}
	}
	return true;
}

/* 2. Three-route agreement for d1, d2 <= 3 and d1 + d2 <= 5. */
bool three_route(std::string& detail)
{
	ThreeWayReport r = verify_three_way(Trunc{3, 3}, 5);
	if (!r.pass) {
		for (const auto& e : r.entries)
			if (!e.ok) {
				std::ostringstream os;
				os << "first mismatch at (" << e.cls.d1 << ","
				   << e.cls.d2 << ")";
				detail = os.str();
				break;
			}
		return false;
	}
	for (const auto& e : r.entries) {
		bool capped = e.cls.d1 + e.cls.d2 <= 5;
		if (capped != e.oracle.has_value()) {
			detail = "oracle coverage does not match the cap";
			return false;
		}
	}
	return true;
}

/* 3. Master vs closed branch formula, exhaustive <= 6 edges and
 * thickenings <= 5; the three-pair example branch evaluates to 7. */
bool euler_equivalence(std::string& detail)
{
	Branch example;
	example.kind = BranchKind::UpperQ;
	example.edges = {Edge{5, 3}, Edge{3, 2}, Edge{1, 1}};
	if (branch_euler_master(example) != 7 ||
	    branch_euler_closed(example) != 7) {
		detail = "example branch does not evaluate to 7";
		return false;
	}

	const int max_edges = 6;
	const int max_thick = 5;
	auto walk = [max_edges](Edge first) -> long long {
		Branch b;
		b.kind = BranchKind::UpperQ;
		b.edges.reserve(max_edges);
		b.edges.push_back(first);
		long long bad = 0;
		auto rec = [&](auto&& self) -> void {
			if (branch_euler_master(b) != branch_euler_closed(b))
				++bad;
			if ((int)b.edges.size() == max_edges) return;
			for (int m = 1; m <= max_thick; ++m)
				for (int n = 1; n <= max_thick; ++n) {
					b.edges.push_back(Edge{m, n});
					self(self);
					b.edges.pop_back();
				}
		};
		rec(rec);
		return bad;
	};

	std::vector<std::future<long long>> tasks;
	for (int m = 1; m <= max_thick; ++m)
		for (int n = 1; n <= max_thick; ++n)
			tasks.push_back(std::async(std::launch::async, walk,
						   Edge{m, n}));
	long long bad = 0;
	for (auto& t : tasks) bad += t.get();
	if (bad != 0) {
		std::ostringstream os;
		os << bad << " branches disagree";
		detail = os.str();
		return false;
	}
	return true;
}

/* 4. chi >= 1 on every enumerated config with d1 + d2 <= 5, with equality
 * exactly on the admissible ones. */
bool chi_floor(std::string& detail)
{
	for (int d1 = 0; d1 <= 5; ++d1)
		for (int d2 = 0; d1 + d2 <= 5; ++d2)
			for (const auto& c :
			     enumerate_configs(ClassVector{d1, d2})) {
				int chi = config_euler(c);
				if (chi < 1) {
					detail = "chi < 1 at " + render(c);
					return false;
				}
				if ((chi == 1) != is_admissible(c)) {
					detail =
					    "chi/admissibility mismatch at " +
					    render(c);
					return false;
				}
			}
	return true;
}

/* 5. 12 phi matches the signed table under (n, r) = (d1, d2-d1-1) through
 * q^5, including the q^0 row. */
bool jacobi_identity(std::string& detail)
{
	JacobiExpansion phi = jacobi_phi(5);
	const long long q0[] = {12, -24, 12};
	for (int r = -1; r <= 1; ++r)
		if (12 * qp_coeff(phi.series, 0, r) != q0[r + 1]) {
			detail = "q^0 row is not 12 (p^-1 - 2 + p)";
			return false;
		}

	/* the table covers every (n, r) with n <= 5, |r| <= n + 1 */
	InvariantTable t = build_table(Trunc{5, 12}, Route::Product);
	CheckReport full = check_jacobi_identity(t, phi);
	if (!full.pass) {
		detail = full.failures.front();
		return false;
	}
	int compared = 0;
	for (int n = 0; n <= 5; ++n)
		for (int r = -n - 1; r <= n + 1; ++r) {
			++compared;
			if (t.at({n, n + r + 1}).signed_value !=
			    12 * qp_coeff(phi.series, n, r)) {
				detail = "row coverage mismatch";
				return false;
			}
		}
	if (compared != 3 + 5 + 7 + 9 + 11 + 13) {
		detail = "row coverage incomplete";
		return false;
	}
	return true;
}

/* 6. Norm invariance and the discriminant identity on maxd (6,6). */
bool norm_invariance(std::string& detail)
{
	InvariantTable t = build_table(Trunc{6, 6}, Route::Product);
	CheckReport r = check_norm_invariance(t);
	if (!r.pass) {
		detail = r.failures.front();
		return false;
	}
	return true;
}

/* 7. Partition layer: witnesses, generating series, branch images. */
bool partition_layer(std::string& detail)
{
	auto witnesses = enumerate_opd(2, 1);
	if (witnesses.size() != 2 || witnesses[0] != Partition{{3}} ||
	    witnesses[1] != Partition{{2, 1}}) {
		detail = "enumerate_opd(2,1) witnesses are wrong";
		return false;
	}

	BiSeries gf = gf_opd_branch(BranchKind::UpperQ, Trunc{8, 8});
	for (int a = 0; a <= 8; ++a)
		for (int b = 0; a + b <= 8; ++b) {
			auto list = enumerate_opd(a, b);
			if (coeff(gf, {a, b}) != Int(list.size())) {
				std::ostringstream os;
				os << "series/enumeration mismatch at (" << a
				   << "," << b << ")";
				detail = os.str();
				return false;
			}
			for (const auto& p : list) {
				Branch br =
				    opd_to_branch(p, BranchKind::UpperQ);
				if (!is_admissible(br) ||
				    branch_euler_master(br) != 1 ||
				    branch_euler_closed(br) != 1) {
					detail = "witness " + render(p) +
						 " maps to a bad branch";
					return false;
				}
			}
		}
	return true;
}

/* 8. substitute_neg carries the naive product to the signed one. */
bool sign_rule(std::string& detail)
{
	Trunc window{8, 8};
	if (substitute_neg(banana_product_naive(window)) !=
	    banana_product_signed(window)) {
		detail = "substitute_neg(G+) != G- on the full window";
		return false;
	}
	return true;
}

}  // namespace

int main()
{
	const Criterion criteria[] = {
	    {1, "golden product values", golden_values},
	    {2, "three-route agreement (d1,d2 <= 3, d1+d2 <= 5)", three_route},
	    {3, "branch Euler master == closed (<= 6 edges, <= 5 thick)",
	     euler_equivalence},
	    {4, "chi floor and admissibility (d1+d2 <= 5)", chi_floor},
	    {5, "Jacobi identity through q^5", jacobi_identity},
	    {6, "norm invariance on maxd (6,6)", norm_invariance},
	    {7, "partition layer", partition_layer},
	    {8, "sign-rule identity on the full window", sign_rule},
	};

	int failed = 0;
	for (const auto& c : criteria) {
		auto start = std::chrono::steady_clock::now();
		std::string detail;
		bool ok = c.check(detail);
		auto elapsed =
		    std::chrono::duration_cast<std::chrono::milliseconds>(
			std::chrono::steady_clock::now() - start)
			.count();
		std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id
			  << " [" << c.title << "] (" << elapsed / 1000.0
			  << "s)";
		if (!ok) {
			std::cout << " -- " << detail;
			++failed;
		}
		std::cout << "\n";
	}
	if (failed) {
		std::cout << failed << " criteria failed\n";
		return 1;
	}
	std::cout << "all criteria passed\n";
	return 0;
}
