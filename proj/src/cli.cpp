#include "bgv/cli.hpp"

#include "bgv/curveconfig.hpp"
#include "bgv/invariants.hpp"
#include "bgv/oracle.hpp"
#include "bgv/partitions.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bgv {

namespace {

int resolved_cap(const RunConfig& cfg)
{
	return cfg.oracle_cap ? *cfg.oracle_cap
			      : std::min(5, cfg.maxd1 + cfg.maxd2);
}

int cmd_table(const RunConfig& cfg, std::ostream& out)
{
	InvariantTable t =
	    build_table(Trunc{cfg.maxd1, cfg.maxd2}, Route::Product);
	out << (cfg.format == Format::Csv ? table_to_csv(t)
					  : table_to_json(t) + "\n");
	return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
	Trunc maxd{cfg.maxd1, cfg.maxd2};
	ThreeWayReport three = verify_three_way(maxd, resolved_cap(cfg));
	InvariantTable t = build_table(maxd, Route::Product);
	JacobiExpansion phi = jacobi_phi(cfg.maxd1);
	CheckReport jac = check_jacobi_identity(t, phi);
	CheckReport nrm = check_norm_invariance(t);

	bool pass = three.pass && jac.pass && nrm.pass;
	nlohmann::ordered_json j;
	j["pass"] = pass;
	j["three_way"] = nlohmann::ordered_json::parse(three.to_json());
	j["jacobi"] = nlohmann::ordered_json::parse(jac.to_json());
	j["norm"] = nlohmann::ordered_json::parse(nrm.to_json());
	out << j.dump(2) << "\n";
	return pass ? 0 : 1;
}

int cmd_jacobi(const RunConfig& cfg, std::ostream& out)
{
	const int qtrunc = cfg.maxd1;
	JacobiExpansion phi = jacobi_phi(qtrunc);
	InvariantTable t =
	    build_table(Trunc{cfg.maxd1, cfg.maxd2}, Route::Product);

	if (cfg.format == Format::Json) {
		nlohmann::ordered_json rows = nlohmann::ordered_json::array();
		for (int n = 0; n <= qtrunc; ++n) {
			nlohmann::ordered_json row;
			row["n"] = n;
			row["r_min"] = -n - 1;
			auto& phi12 = row["phi_x12"] =
			    nlohmann::ordered_json::array();
			auto& tab = row["table"] =
			    nlohmann::ordered_json::array();
			for (int r = -n - 1; r <= n + 1; ++r) {
				phi12.push_back(
				    (12 * qp_coeff(phi.series, n, r)).str());
				ClassVector cls{n, n + r + 1};
				if (cls.d2 <= cfg.maxd2)
					tab.push_back(
					    t.at(cls).signed_value.str());
				else
					tab.push_back(nullptr);
			}
			rows.push_back(std::move(row));
		}
		out << rows.dump(2) << "\n";
		return 0;
	}

	for (int n = 0; n <= qtrunc; ++n) {
		out << "q^" << n << "  p^" << -n - 1 << "..p^" << n + 1
		    << "\n  12*phi:";
		for (int r = -n - 1; r <= n + 1; ++r)
			out << ' ' << 12 * qp_coeff(phi.series, n, r);
		out << "\n  table :";
		for (int r = -n - 1; r <= n + 1; ++r) {
			ClassVector cls{n, n + r + 1};
			if (cls.d2 <= cfg.maxd2)
				out << ' ' << t.at(cls).signed_value;
			else
				out << " .";
		}
		out << "\n";
	}
	return 0;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
	const int cap = resolved_cap(cfg);
	std::vector<ClassVector> classes;
	if (cfg.cls) {
		if (cfg.cls->d1 + cfg.cls->d2 > cap) {
			err << "error: class total degree exceeds the oracle "
			       "cap ("
			    << cap << ")\n";
			return 2;
		}
		classes.push_back(*cfg.cls);
	} else {
		for (int d1 = 0; d1 <= cfg.maxd1; ++d1)
			for (int d2 = 0; d2 <= cfg.maxd2; ++d2)
				if (d1 + d2 <= cap)
					classes.push_back(ClassVector{d1, d2});
	}

	if (cfg.format == Format::Json) {
		nlohmann::ordered_json rows = nlohmann::ordered_json::array();
		for (ClassVector cls : classes) {
			nlohmann::ordered_json row;
			row["d1"] = cls.d1;
			row["d2"] = cls.d2;
			auto configs = enumerate_chi_one(cls);
			row["count"] = configs.size();
			if (cfg.list) {
				auto& list = row["configs"] =
				    nlohmann::ordered_json::array();
				for (const auto& c : configs)
					list.push_back(render(c));
			}
			rows.push_back(std::move(row));
		}
		out << rows.dump(2) << "\n";
		return 0;
	}

	out << "d1,d2,count\n";
	for (ClassVector cls : classes) {
		auto configs = enumerate_chi_one(cls);
		out << cls.d1 << ',' << cls.d2 << ',' << configs.size()
		    << '\n';
		if (cfg.list)
			for (const auto& c : configs)
				out << "# " << render(c) << '\n';
	}
	return 0;
}

int cmd_partitions(const RunConfig& cfg, std::ostream& out)
{
	if (cfg.format == Format::Json) {
		nlohmann::ordered_json rows = nlohmann::ordered_json::array();
		for (int dark = 0; dark <= cfg.maxd1; ++dark)
			for (int light = 0; light <= cfg.maxd2; ++light) {
				auto witnesses = enumerate_opd(dark, light);
				nlohmann::ordered_json row;
				row["dark"] = dark;
				row["light"] = light;
				row["count"] = witnesses.size();
				auto& w = row["witnesses"] =
				    nlohmann::ordered_json::array();
				for (const auto& p : witnesses)
					w.push_back(render(p));
				rows.push_back(std::move(row));
			}
		out << rows.dump(2) << "\n";
		return 0;
	}

	out << "dark,light,count,witnesses\n";
	for (int dark = 0; dark <= cfg.maxd1; ++dark)
		for (int light = 0; light <= cfg.maxd2; ++light) {
			auto witnesses = enumerate_opd(dark, light);
			out << dark << ',' << light << ',' << witnesses.size()
			    << ',';
			for (size_t i = 0; i < witnesses.size(); ++i) {
				if (i) out << ' ';
				out << render(witnesses[i]);
			}
			out << '\n';
		}
	return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
	if (cfg.maxd1 < 0 || cfg.maxd2 < 0) {
		err << "error: --maxd bounds must be non-negative\n";
		return 2;
	}
	if (cfg.oracle_cap &&
	    (*cfg.oracle_cap < 0 || *cfg.oracle_cap > cfg.maxd1 + cfg.maxd2)) {
		err << "error: --oracle-cap must lie in [0, maxd1 + maxd2]\n";
		return 2;
	}
	if (cfg.cls && (cfg.cls->d1 < 0 || cfg.cls->d2 < 0)) {
		err << "error: --class components must be non-negative\n";
		return 2;
	}

	std::ostringstream buffer;
	int status = 0;
	switch (cfg.command) {
	case Command::Table: status = cmd_table(cfg, buffer); break;
	case Command::Verify: status = cmd_verify(cfg, buffer); break;
	case Command::Jacobi: status = cmd_jacobi(cfg, buffer); break;
	case Command::Oracle: status = cmd_oracle(cfg, buffer, err); break;
	case Command::Partitions: status = cmd_partitions(cfg, buffer); break;
	}
	if (status == 2) return 2;

	if (cfg.output) {
		std::ofstream file(*cfg.output, std::ios::binary);
		if (!file) {
			err << "error: cannot open output file '"
			    << *cfg.output << "'\n";
			return 2;
		}
		file << buffer.str();
	} else {
		out << buffer.str();
	}
	return status;
}

}  // namespace bgv
