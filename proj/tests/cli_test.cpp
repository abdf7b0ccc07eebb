#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "cremona/cli.hpp"
#include "support.hpp"

using namespace cremona;

namespace {

int run_tool(const std::string& args) {
  const std::string cmd = std::string(CREMONA_BIN) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("configuration validation") {
  RunConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.primes = {43};
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg = {};
  cfg.format = "yaml";
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg = {};
  cfg.cap = 0;
  CHECK_THROWS_AS(validate(cfg), UsageError);
  cfg = {};
  cfg.seed = 9;
  cfg.primes = {61};
  CHECK(cfg.options().seed == 9);
  CHECK(cfg.options().primes == std::vector<std::uint32_t>{61});
}

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("certificate text has a fixed field order") {
  const auto& c = test::suite_cert("th5.a1=4.a2=9.d=12");
  const auto l = lines(render_text(c));
  std::vector<std::string> keys;
  for (const auto& x : l) keys.push_back(x.substr(0, x.find(':')));
  // Empty fields are omitted; the rest follow the canonical order.
  const std::vector<std::string> order{"certificate", "label", "variant", "param", "form", "seed", "primes",
                                       "check", "predicted", "observed", "note", "verdict"};
  std::size_t at = 0;
  for (const auto& k : keys) {
    const auto it = std::find(order.begin(), order.end(), k);
    REQUIRE(it != order.end());
    CHECK(static_cast<std::size_t>(it - order.begin()) >= at);
    at = it - order.begin();
  }
  CHECK(std::count(keys.begin(), keys.end(), "param") == 3);
  CHECK(l.front() == "certificate: th5.a1=4.a2=9.d=12");
  CHECK(l.back() == "verdict: pass");
  for (const auto& x : l)
    if (x.rfind("check: ", 0) == 0) CHECK(x.find("| sha256:") != std::string::npos);
  const auto j = render_json(c);
  CHECK(j["verdict"] == "pass");
  CHECK(j["params"]["a2"] == 9);
  CHECK(j["checks"].size() == c.checks.size());
  CHECK(render_text(c) == render_text(c));
}

TEST_CASE("bundles are deterministic and hashed") {
  const auto& suite = test::default_suite();
  const Bundle a = make_bundle(suite, "text");
  const Bundle b = make_bundle(full_suite(), "text");
  CHECK(a.manifest == b.manifest);
  CHECK(a.files == b.files);
  CHECK(std::is_sorted(a.files.begin(), a.files.end()));
  CHECK(a.files.size() == suite.size() + 1);
  const auto m = lines(a.manifest);
  REQUIRE(m.size() == a.files.size());
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(m[i] == sha256_hex(a.files[i].second) + "  " + a.files[i].first);
  const Bundle s = make_bundle(suite, "structured");
  CHECK(s.files.front().first.ends_with(".json"));
  CHECK(nlohmann::json::parse(s.files.front().second).is_object());
}

TEST_CASE("bundles on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "cremona_cli_test_bundle";
  std::filesystem::remove_all(dir);
  const Bundle b = make_bundle(test::default_suite(), "text");
  write_bundle(b, dir);
  std::ifstream in(dir / "MANIFEST");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == b.manifest);
  for (const auto& [name, body] : b.files) CHECK(std::filesystem::file_size(dir / name) == body.size());
  std::filesystem::remove_all(dir);
}

TEST_CASE("classification table") {
  const auto rows = classification_table(test::default_suite());
  CHECK(rows.size() == 16);
  std::set<std::string> groups;
  for (const auto& r : rows) {
    groups.insert(r.group);
    CHECK_FALSE(r.cited.empty());
    CHECK((r.gap() || !r.witnesses.empty()));
  }
  CHECK(groups.size() == 16);
  CHECK(groups.count("A5"));
  CHECK(groups.count("S5"));
  CHECK(groups.count("Z2^2 x Abar5"));
  const std::string t = render_table(rows, "text");
  for (const auto& r : rows) CHECK(t.find(r.group) != std::string::npos);
  CHECK(nlohmann::json::parse(render_table(rows, "structured")).size() == 16);

  // A row whose witnesses disappear is shown as a gap, never dropped.
  std::vector<FamilyCert> thin;
  for (const auto& c : test::default_suite())
    if (c.spec.label != "K_S9") thin.push_back(c);
  const auto fewer = classification_table(thin);
  CHECK(fewer.size() == 16);
  CHECK(std::any_of(fewer.begin(), fewer.end(), [](const TableRow& r) { return r.group == "A6" && r.gap(); }));
}

TEST_CASE("queries") {
  RunConfig cfg;
  std::ostringstream a;
  CHECK(cmd_query("invariants", {"12"}, cfg, a) == 0);
  CHECK(a.str().find("dimension: 1") != std::string::npos);
  CHECK(a.str().find("proportional to: Phi_1^0 Phi_2^0 Phi_3^1") != std::string::npos);
  std::ostringstream b;
  CHECK(cmd_query("orbit", {"1:0"}, cfg, b) == 0);
  CHECK(b.str().find("orbit size: 12") != std::string::npos);
  CHECK(b.str().find("stabilizer order: 5") != std::string::npos);
  std::ostringstream c;
  CHECK(cmd_query("orbit", {"3/2:1"}, cfg, c) == 0);
  CHECK(c.str().find("orbit size: 60") != std::string::npos);
  std::ostringstream d;
  CHECK(cmd_query("group", {"A5wrZ2"}, cfg, d) == 0);
  std::ostringstream e;
  CHECK_THROWS_AS(cmd_query("orbit", {"0:0"}, cfg, e), UsageError);
  CHECK_THROWS_AS(cmd_query("invariants", {"x"}, cfg, e), UsageError);
  CHECK_THROWS_AS(cmd_query("colour", {}, cfg, e), UsageError);
}

TEST_CASE("search command") {
  RunConfig cfg;
  std::ostringstream a;
  CHECK(cmd_search("thExcept", {"g=1", "n=1"}, cfg, a) == 0);
  CHECK(a.str().find("no instance") != std::string::npos);
  std::ostringstream b;
  CHECK(cmd_search("th2", {"d=15", "e=30"}, cfg, b) == 0);
  CHECK(b.str().find("verdict: pass") != std::string::npos);
  CHECK_THROWS_AS(cmd_search("th2", {"d15"}, cfg, b), UsageError);
}

TEST_CASE("fault injection makes verification fail") {
  RunConfig cfg;
  cfg.corrupt_phi1 = true;
  std::ostringstream out, err;
  CHECK(cmd_verify(cfg, out, err) == 1);
  CHECK(out.str().find("FAIL model.grundformen") != std::string::npos);
}

TEST_CASE("exit codes of the tool") {
  CHECK(run_tool("--bogus") == 2);
  CHECK(run_tool("") == 2);
  CHECK(run_tool("query orbit 0:0") == 2);
  CHECK(run_tool("--prime 43 query invariants 12") == 2);
  CHECK(run_tool("query invariants 12") == 0);
  CHECK(run_tool("--format structured query orbit 1:1") == 0);
}
