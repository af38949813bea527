#include "bgv/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <string>
#include <vector>

namespace {

void add_common(CLI::App* cmd, bgv::RunConfig& cfg,
		std::vector<int>& maxd, std::string& format,
		std::string& out_path)
{
	cmd->add_option("--maxd", maxd, "range bounds D1 D2")
	    ->expected(2);
	cmd->add_option("--format", format, "output format")
	    ->check(CLI::IsMember({"csv", "json"}));
	cmd->add_option("--out", out_path, "write output to a file");
	(void)cfg;
}

}  // namespace

int main(int argc, char** argv)
{
	CLI::App app{"genus-0 invariants of banana fiber curve classes"};
	app.require_subcommand(1);

	bgv::RunConfig cfg;
	std::vector<int> maxd;
	std::vector<int> cls;
	std::string format = "csv";
	std::string out_path;
	int oracle_cap = -1;

	auto* table = app.add_subcommand("table", "emit the invariant table");
	add_common(table, cfg, maxd, format, out_path);

	auto* verify = app.add_subcommand(
	    "verify", "run the three-route, Jacobi and norm checks");
	add_common(verify, cfg, maxd, format, out_path);
	verify->add_option("--oracle-cap", oracle_cap,
			   "total-degree cap for the brute-force route");

	auto* jacobi = app.add_subcommand(
	    "jacobi", "emit the Jacobi form rows x12 beside the table");
	add_common(jacobi, cfg, maxd, format, out_path);

	auto* oracle = app.add_subcommand(
	    "oracle", "emit brute-force per-class counts");
	add_common(oracle, cfg, maxd, format, out_path);
	oracle->add_option("--oracle-cap", oracle_cap,
			   "total-degree cap for the enumeration");
	oracle->add_option("--class", cls, "single class d1 d2")->expected(2);
	oracle->add_flag("--list", cfg.list,
			 "print the configurations in canonical form");

	auto* partitions = app.add_subcommand(
	    "partitions", "emit per-bidegree partition counts and witnesses");
	add_common(partitions, cfg, maxd, format, out_path);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	if (table->parsed()) cfg.command = bgv::Command::Table;
	if (verify->parsed()) cfg.command = bgv::Command::Verify;
	if (jacobi->parsed()) cfg.command = bgv::Command::Jacobi;
	if (oracle->parsed()) cfg.command = bgv::Command::Oracle;
	if (partitions->parsed()) cfg.command = bgv::Command::Partitions;

	if (maxd.size() == 2) {
		cfg.maxd1 = maxd[0];
		cfg.maxd2 = maxd[1];
	}
	if (oracle_cap >= 0) cfg.oracle_cap = oracle_cap;
	if (cls.size() == 2) cfg.cls = bgv::ClassVector{cls[0], cls[1]};
	cfg.format =
	    format == "json" ? bgv::Format::Json : bgv::Format::Csv;
	if (!out_path.empty()) cfg.output = out_path;

	return bgv::run(cfg, std::cout, std::cerr);
}
