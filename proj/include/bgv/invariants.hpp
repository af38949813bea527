#pragma once

#include "bgv/series.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace bgv {

using Rational = boost::multiprecision::cpp_rational;

/// Which computation produced a table entry.
enum class Route { Product, Partitions, Oracle };

const char* route_name(Route r);

struct TableEntry {
	Int naive;        // 12 x per-fiber count, always >= 0
	Int signed_value; // (-1)^{d1+d2} x naive
	Route route = Route::Product;
};

/// Genus-0 invariants indexed by curve class over a rectangular range.
struct InvariantTable {
	Trunc maxd;
	std::map<ClassVector, TableEntry> entries;

	const TableEntry& at(ClassVector c) const;
};

/// Fully populated table over the rectangle maxd. The twelve isomorphic
/// singular fibers enter here as the explicit factor 12; the sign rule
/// (-1)^{d1+d2} produces the signed column. For Route::Oracle the whole
/// rectangle must satisfy d1 + d2 <= oracle_cap.
InvariantTable build_table(Trunc maxd, Route route, int oracle_cap = 5);

/// The quadratic norm 2 d1 + 2 d2 + 2 d1 d2 - d1^2 - d2^2 - 1 on which the
/// signed invariants depend exclusively. May be negative.
int norm(ClassVector c);

/// Expansion of the weight -2, index 1 weak Jacobi form
///   phi(q, p) = p^{-1} (1-p)^2 prod_m (1-q^m p^{-1})^2 (1-q^m p)^2 / (1-q^m)^4
/// through q^qtrunc. The weight and index are metadata; the analytic
/// transformation laws are out of scope and replaced by coefficient
/// symmetries checked in tests.
struct JacobiExpansion {
	LaurentQP series;
	int weight = -2;
	int index = 1;
};

JacobiExpansion jacobi_phi(int qtrunc);

/// Pass/fail result of a consistency check, with one witness line per
/// violation.
struct CheckReport {
	std::string check;
	bool pass = true;
	std::vector<std::string> failures;

	std::string to_json() const;
};

/// Asserts signed(d1, d2) = 12 x [q^{d1} p^{d2-d1-1}] phi for every class in
/// the table with d1 <= qtrunc.
CheckReport check_jacobi_identity(const InvariantTable& t,
				  const JacobiExpansion& j);

/// Asserts that entries grouped by norm carry a single signed value, and
/// that 4 d1 - (d2 - d1 - 1)^2 equals the norm for every entry.
CheckReport check_norm_invariance(const InvariantTable& t);

/// Genus-0 Gromov-Witten number N = sum_{k | beta} n_{beta/k} / k^3 as an
/// exact rational. The implicit third coordinate 1 forces k = 1 for every
/// in-range class, so the sum collapses to the signed invariant; the
/// divisor set is still computed from gcd(d1, d2, 1).
Rational gw_from_gv(const InvariantTable& t, ClassVector c);

/// CSV export, columns d1,d2,naive,signed,norm, ordered by (d1, d2).
std::string table_to_csv(const InvariantTable& t);

/// JSON export mirroring the CSV columns, same ordering.
std::string table_to_json(const InvariantTable& t);

}  // namespace bgv
