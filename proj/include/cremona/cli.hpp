#pragma once

// Batch entry points behind the command-line tool: certificate bundles, the
// classification table, queries and searches.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cremona/family.hpp"

namespace cremona {

struct RunConfig {
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> primes{kCertPrimes.begin(), kCertPrimes.end()};
  std::size_t cap = kDefaultClosureCap;
  /// Bundle directory; empty writes nothing.
  std::string out;
  /// "text" or "structured".
  std::string format = "text";
  int verbosity = 0;
  /// Fault injection: perturb one coefficient of Phi_1.
  bool corrupt_phi1 = false;

  CertOptions options() const { return {seed, primes, cap}; }
};

/// Malformed arguments; the tool exits with status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Checks the prime list and the format; throws UsageError.
void validate(const RunConfig& cfg);

std::string sha256_hex(const std::string& data);

/// Stable text document: fixed field order, no timestamps.
std::string render_text(const FamilyCert& c);
nlohmann::ordered_json render_json(const FamilyCert& c);

struct Bundle {
  /// (file name, content), sorted by file name.
  std::vector<std::pair<std::string, std::string>> files;
  /// One "sha256  name" line per file.
  std::string manifest;
};
Bundle make_bundle(const std::vector<FamilyCert>& certs, const std::string& format);
void write_bundle(const Bundle& b, const std::filesystem::path& dir);

struct TableRow {
  std::string group;
  /// Family labels the classification cites for the row.
  std::vector<std::string> cited;
  /// Group labels the row stands for; a parametrized row lists a pattern.
  std::vector<std::string> members;
  /// Identifiers of passing certificates realizing a member.
  std::vector<std::string> witnesses;
  /// Members without a witness.
  std::vector<std::string> missing;
  bool gap() const { return !missing.empty(); }
};
std::vector<TableRow> classification_table(const std::vector<FamilyCert>& certs);
std::string render_table(const std::vector<TableRow>& rows, const std::string& format);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// kind is "invariants" (args: degree), "orbit" (args: "x0:x1") or "group"
/// (args: model name).
int cmd_query(const std::string& kind, const std::vector<std::string>& args, const RunConfig& cfg, std::ostream& out);
/// targets as "name=value" strings.
int cmd_search(const std::string& label, const std::vector<std::string>& targets, const RunConfig& cfg,
               std::ostream& out);

}  // namespace cremona
