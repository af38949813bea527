#include "bgv/invariants.hpp"

#include "bgv/oracle.hpp"
#include "bgv/partitions.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bgv {

const char* route_name(Route r)
{
	switch (r) {
	case Route::Product: return "product";
	case Route::Partitions: return "partitions";
	case Route::Oracle: return "oracle";
	}
	return "?";
}

const TableEntry& InvariantTable::at(ClassVector c) const
{
	auto it = entries.find(c);
	if (it == entries.end())
		throw std::out_of_range("InvariantTable: class outside range");
	return it->second;
}

InvariantTable build_table(Trunc maxd, Route route, int oracle_cap)
{
	if (route == Route::Oracle && maxd.d1 + maxd.d2 > oracle_cap)
		throw std::invalid_argument(
		    "build_table: oracle route requires maxd within the cap");

	InvariantTable table;
	table.maxd = maxd;

	std::map<ClassVector, Int> per_fiber;
	switch (route) {
	case Route::Product: {
		BiSeries g = banana_product_naive(maxd);
		for (const auto& [k, c] : g.coeffs)
			per_fiber[ClassVector{k.first, k.second}] = c;
		break;
	}
	case Route::Partitions:
		per_fiber = opd_config_counts(maxd);
		break;
	case Route::Oracle:
		for (int d1 = 0; d1 <= maxd.d1; ++d1)
			for (int d2 = 0; d2 <= maxd.d2; ++d2)
				per_fiber[ClassVector{d1, d2}] =
				    count_chi_one(ClassVector{d1, d2});
		break;
	}

	for (int d1 = 0; d1 <= maxd.d1; ++d1)
		for (int d2 = 0; d2 <= maxd.d2; ++d2) {
			ClassVector cls{d1, d2};
			auto it = per_fiber.find(cls);
			Int count = it == per_fiber.end() ? Int(0) : it->second;
			TableEntry e;
			e.naive = 12 * count;
			e.signed_value =
			    ((d1 + d2) & 1) ? -e.naive : e.naive;
			e.route = route;
			table.entries.emplace(cls, std::move(e));
		}
	return table;
}

int norm(ClassVector c)
{
	return 2 * c.d1 + 2 * c.d2 + 2 * c.d1 * c.d2 - c.d1 * c.d1 -
	       c.d2 * c.d2 - 1;
}

JacobiExpansion jacobi_phi(int qtrunc)
{
	if (qtrunc < 0) throw std::invalid_argument("jacobi_phi: negative qtrunc");
	JacobiExpansion phi;
	LaurentQP s(qtrunc);
	/* leading factor p^{-1} (1 - p)^2 */
	s.add_term(0, -1, 1);
	s.add_term(0, 0, -2);
	s.add_term(0, 1, 1);
	for (int m = 1; m <= qtrunc; ++m) {
		/* (1 - q^m p^{+-1})^2 */
		for (int dir : {-1, 1}) {
			LaurentQP f(qtrunc);
			f.add_term(0, 0, 1);
			f.add_term(m, dir, -2);
			f.add_term(2 * m, 2 * dir, 1);
			s = qp_mul(s, f);
		}
		/* (1 - q^m)^{-4} */
		LaurentQP g(qtrunc);
		Int c = 1;
		for (int k = 0; k * m <= qtrunc; ++k) {
			g.add_term(k * m, 0, c);
			c = c * (k + 4) / (k + 1);
		}
		s = qp_mul(s, g);
	}
	/* the p-support of the q^n row of an index 1 form is [-n-1, n+1] */
	for (const auto& [k, c] : s.coeffs)
		if (k.second < -k.first - 1 || k.second > k.first + 1)
			throw std::logic_error(
			    "jacobi_phi: p-support outside [-n-1, n+1]");
	phi.series = std::move(s);
	return phi;
}

std::string CheckReport::to_json() const
{
	nlohmann::ordered_json j;
	j["check"] = check;
	j["pass"] = pass;
	j["failures"] = failures;
	return j.dump(2);
}

CheckReport check_jacobi_identity(const InvariantTable& t,
				  const JacobiExpansion& j)
{
	CheckReport report;
	report.check = "jacobi-identity";
	for (const auto& [cls, entry] : t.entries) {
		if (cls.d1 > j.series.qtrunc) continue;
		Int expected = 12 * qp_coeff(j.series, cls.d1,
					     cls.d2 - cls.d1 - 1);
		if (entry.signed_value != expected) {
			report.pass = false;
			std::ostringstream os;
			os << "class (" << cls.d1 << "," << cls.d2
			   << "): table " << entry.signed_value
			   << " != 12*phi " << expected;
			report.failures.push_back(os.str());
		}
	}
	return report;
}

CheckReport check_norm_invariance(const InvariantTable& t)
{
	CheckReport report;
	report.check = "norm-invariance";
	std::map<int, std::pair<ClassVector, Int>> groups;
	for (const auto& [cls, entry] : t.entries) {
		int nrm = norm(cls);
		int r = cls.d2 - cls.d1 - 1;
		if (4 * cls.d1 - r * r != nrm) {
			report.pass = false;
			std::ostringstream os;
			os << "class (" << cls.d1 << "," << cls.d2
			   << "): 4*d1 - (d2-d1-1)^2 = " << 4 * cls.d1 - r * r
			   << " != norm " << nrm;
			report.failures.push_back(os.str());
		}
		auto [it, inserted] = groups.emplace(
		    nrm, std::make_pair(cls, entry.signed_value));
		if (!inserted && it->second.second != entry.signed_value) {
			report.pass = false;
			std::ostringstream os;
			os << "norm " << nrm << ": class ("
			   << it->second.first.d1 << "," << it->second.first.d2
			   << ") has " << it->second.second << " but class ("
			   << cls.d1 << "," << cls.d2 << ") has "
			   << entry.signed_value;
			report.failures.push_back(os.str());
		}
	}
	return report;
}

Rational gw_from_gv(const InvariantTable& t, ClassVector c)
{
	/* Divisors of beta = (d1, d2, 1): k must divide gcd(d1, d2, 1) = 1,
	 * but the loop is written for the general gcd. */
	int g = std::gcd(std::gcd(c.d1, c.d2), 1);
	Rational total = 0;
	for (int k = 1; k <= g; ++k) {
		if (g % k != 0) continue;
		ClassVector down{c.d1 / k, c.d2 / k};
		total += Rational(t.at(down).signed_value) /
			 Rational(Int(k) * k * k);
	}
	return total;
}

std::string table_to_csv(const InvariantTable& t)
{
	std::ostringstream os;
	os << "d1,d2,naive,signed,norm\n";
	for (const auto& [cls, e] : t.entries)
		os << cls.d1 << ',' << cls.d2 << ',' << e.naive << ','
		   << e.signed_value << ',' << norm(cls) << '\n';
	return os.str();
}

std::string table_to_json(const InvariantTable& t)
{
	nlohmann::ordered_json rows = nlohmann::ordered_json::array();
	for (const auto& [cls, e] : t.entries) {
		nlohmann::ordered_json row;
		row["d1"] = cls.d1;
		row["d2"] = cls.d2;
		row["naive"] = e.naive.str();
		row["signed"] = e.signed_value.str();
		row["norm"] = norm(cls);
		rows.push_back(std::move(row));
	}
	return rows.dump(2);
}

}  // namespace bgv
