// Command-line front end: verify, table, query, search.

#include <iostream>

#include <CLI11.hpp>

#include "cremona/cli.hpp"

int main(int argc, char** argv) {
  cremona::RunConfig cfg;
  CLI::App app{"Exact verification toolkit for nonsolvable finite subgroups of the plane Cremona group"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "seed of the instance searches")->capture_default_str();
  std::vector<std::uint32_t> primes;
  app.add_option("--prime", primes, "certificate prime (repeatable; 41, 61, 101, 181)");
  app.add_option("--cap", cfg.cap, "closure cap for group enumeration")->capture_default_str();
  app.add_option("--out", cfg.out, "bundle directory");
  app.add_option("--format", cfg.format, "text or structured")->capture_default_str();
  app.add_flag("-v,--verbose", cfg.verbosity, "list passing certificates");
  app.add_flag("--corrupt-phi1", cfg.corrupt_phi1, "fault injection: perturb one coefficient of Phi_1");

  auto* verify = app.add_subcommand("verify", "run every certificate and write the bundle");
  auto* table = app.add_subcommand("table", "print the classification table with its witnesses");
  auto* query = app.add_subcommand("query", "invariants <n> | orbit <x0:x1> | group <model>");
  std::string kind;
  std::vector<std::string> qargs;
  query->add_option("kind", kind, "invariants, orbit or group")->required();
  query->add_option("args", qargs, "query argument");
  auto* search = app.add_subcommand("search", "seeded search for a family instance");
  std::string label;
  std::vector<std::string> targets;
  search->add_option("label", label, "thExcept, th1, th2, th3, th4 or th5")->required();
  search->add_option("targets", targets, "name=value targets, e.g. d=15 e=30");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (!primes.empty()) cfg.primes = primes;

  try {
    if (*verify) return cremona::cmd_verify(cfg, std::cout, std::cerr);
    if (*table) return cremona::cmd_table(cfg, std::cout, std::cerr);
    if (*query) return cremona::cmd_query(kind, qargs, cfg, std::cout);
    if (*search) return cremona::cmd_search(label, targets, cfg, std::cout);
  } catch (const cremona::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
