#include "cremona/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <regex>
#include <sstream>

#include "cremona/invariant.hpp"
#include "cremona/orbit.hpp"
#include "cremona/recognize.hpp"

namespace cremona {

void validate(const RunConfig& cfg) {
  if (cfg.primes.empty()) throw UsageError("at least one certificate prime is needed");
  for (auto p : cfg.primes)
    if (std::find(kCertPrimes.begin(), kCertPrimes.end(), p) == kCertPrimes.end())
      throw UsageError("unsupported prime " + std::to_string(p) + "; use 41, 61, 101 or 181");
  if (cfg.format != "text" && cfg.format != "structured") throw UsageError("format must be text or structured");
  if (cfg.cap == 0) throw UsageError("closure cap must be positive");
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::ostringstream s;
  for (unsigned i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::string primes_text(const std::vector<std::uint32_t>& p) {
  std::vector<std::string> s;
  for (auto x : p) s.push_back(std::to_string(x));
  return join(s, ",");
}

}  // namespace

std::string render_text(const FamilyCert& c) {
  std::ostringstream s;
  s << "certificate: " << c.id() << "\n";
  s << "label: " << c.spec.label << "\n";
  if (!c.spec.variant.empty()) s << "variant: " << c.spec.variant << "\n";
  for (const auto& [k, v] : c.spec.params) s << "param: " << k << " = " << v << "\n";
  for (const auto& [k, f] : c.spec.forms) s << "form: " << k << " = " << f.to_string() << "\n";
  s << "seed: " << c.seed << "\n";
  s << "primes: " << primes_text(c.primes) << "\n";
  for (const auto& k : c.checks)
    s << "check: " << k.name << " | " << (k.passed ? "pass" : "fail") << " | " << k.evidence
      << " | sha256:" << sha256_hex(k.evidence) << "\n";
  s << "predicted: " << (c.predicted.empty() ? "-" : c.predicted) << "\n";
  s << "observed: " << (c.observed.empty() ? "-" : c.observed) << "\n";
  for (const auto& n : c.notes) s << "note: " << n << "\n";
  s << "verdict: " << (c.passed() ? "pass" : "fail") << "\n";
  return s.str();
}

nlohmann::ordered_json render_json(const FamilyCert& c) {
  nlohmann::ordered_json j;
  j["certificate"] = c.id();
  j["label"] = c.spec.label;
  j["variant"] = c.spec.variant;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.spec.params) j["params"][k] = v;
  j["forms"] = nlohmann::ordered_json::object();
  for (const auto& [k, f] : c.spec.forms) j["forms"][k] = f.to_string();
  j["seed"] = c.seed;
  j["primes"] = c.primes;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& k : c.checks)
    j["checks"].push_back({{"name", k.name}, {"passed", k.passed}, {"evidence", k.evidence},
                           {"sha256", sha256_hex(k.evidence)}});
  j["predicted"] = c.predicted;
  j["observed"] = c.observed;
  j["notes"] = c.notes;
  j["verdict"] = c.passed() ? "pass" : "fail";
  return j;
}

Bundle make_bundle(const std::vector<FamilyCert>& certs, const std::string& format) {
  Bundle b;
  const bool text = format == "text";
  for (const auto& c : certs)
    b.files.emplace_back(c.id() + (text ? ".txt" : ".json"), text ? render_text(c) : render_json(c).dump(2) + "\n");
  b.files.emplace_back(text ? "TABLE.txt" : "TABLE.json", render_table(classification_table(certs), format));
  std::sort(b.files.begin(), b.files.end());
  for (const auto& [name, content] : b.files) b.manifest += sha256_hex(content) + "  " + name + "\n";
  return b;
}

void write_bundle(const Bundle& b, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const auto put = [&](const std::string& name, const std::string& content) {
    std::ofstream f(dir / name, std::ios::binary);
    f << content;
    if (!f) throw std::runtime_error("cannot write " + (dir / name).string());
  };
  for (const auto& [name, content] : b.files) put(name, content);
  put("MANIFEST", b.manifest);
}

namespace {

struct Member {
  std::string name;
  std::function<bool(const std::string&)> matches;
};

Member exact(const std::string& label) {
  return {label, [label](const std::string& k) { return k == label; }};
}

// "<prefix>n x<suffix>" with n >= 3, as produced by the group labels.
Member family(const std::string& prefix, const std::string& suffix) {
  const std::regex re("^" + prefix + "([0-9]+)x" + suffix + "$");
  return {prefix + "n x" + suffix + " (n>=3)", [re](const std::string& k) {
            std::smatch m;
            return std::regex_match(k, m, re) && std::stoi(m[1]) >= 3;
          }};
}

struct RowDef {
  std::string group;
  std::vector<std::string> cited;
  std::vector<Member> members;
};

const std::vector<RowDef>& row_defs() {
  static const std::vector<RowDef> rows = {
      {"L2(7)", {"K_S9", "dp2"}, {exact("L2(7)")}},
      {"Z2 x L2(7)", {"dp2"}, {exact("Z2xL2(7)")}},
      {"A6", {"K_S9"}, {exact("A6")}},
      {"S5", {"dp5", "dp3"}, {exact("S5")}},
      {"St(A5) wr <tau>", {"K_S8"}, {exact("A5wrZ2")}},
      {"A5 x A5, A5 x S4, A5 x A4", {"th01"}, {exact("A5xA5"), exact("A5xS4"), exact("A5xA4")}},
      {"Dn x Abar5, n>=3", {"thExcept"}, {family("D", "Abar5")}},
      {"Dn x A5, n>=3", {"th01", "thExcept"}, {family("D", "A5")}},
      {"Zn x Abar5, n>=3", {"K_S9", "th01"}, {family("Z", "Abar5")}},
      {"Zn x A5, n>=3", {"th01"}, {family("Z", "A5")}},
      {"Z2^2 x Abar5", {"thExcept"}, {exact("Z2^2xAbar5")}},
      {"Z2^2 x A5", {"th01", "thExcept", "th5"}, {exact("Z2^2xA5")}},
      {"Z2 x Abar5", {"K_S9", "th01", "th5"}, {exact("Z2xAbar5")}},
      {"Z2 x A5", {"K_S8", "th01", "th1", "th2", "th4"}, {exact("Z2xA5")}},
      {"Abar5", {"K_S9", "th01", "th1", "th2", "th3", "th4"}, {exact("Abar5")}},
      {"A5", {"K_S9", "dp5", "th01"}, {exact("A5")}},
  };
  return rows;
}

// The group a passing certificate realizes: the recognized action group when
// one was built, else the prediction of an equation-only certificate.
std::string realized(const FamilyCert& c) {
  if (!c.passed() || c.spec.label == "model") return {};
  return c.observed.empty() ? c.predicted : c.observed;
}

}  // namespace

std::vector<TableRow> classification_table(const std::vector<FamilyCert>& certs) {
  std::vector<TableRow> out;
  for (const auto& def : row_defs()) {
    TableRow r;
    r.group = def.group;
    r.cited = def.cited;
    for (const auto& m : def.members) {
      r.members.push_back(m.name);
      bool any = false;
      for (const auto& c : certs) {
        const std::string k = realized(c);
        if (!k.empty() && m.matches(k)) {
          r.witnesses.push_back(c.id());
          any = true;
        }
      }
      if (!any) r.missing.push_back(m.name);
    }
    std::sort(r.witnesses.begin(), r.witnesses.end());
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_table(const std::vector<TableRow>& rows, const std::string& format) {
  if (format == "structured") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      j.push_back({{"group", r.group},
                   {"cited", r.cited},
                   {"witnesses", r.witnesses},
                   {"missing", r.missing},
                   {"status", r.gap() ? "GAP" : "ok"}});
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  int k = 0;
  for (const auto& r : rows) {
    s << std::setw(2) << ++k << ". " << r.group << "\n";
    s << "    cited: " << join(r.cited, ", ") << "\n";
    s << "    witnesses: " << (r.witnesses.empty() ? "-" : join(r.witnesses, ", ")) << "\n";
    s << "    status: " << (r.gap() ? "GAP (no witness for " + join(r.missing, ", ") + ")" : "ok") << "\n";
  }
  return s.str();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  std::vector<FamilyCert> certs;
  try {
    certs = full_suite(cfg.options(), cfg.corrupt_phi1);
  } catch (const std::exception& e) {
    err << "integrity error: " << e.what() << "\n";
    return 1;
  }
  const Bundle b = make_bundle(certs, cfg.format);
  if (!cfg.out.empty()) write_bundle(b, cfg.out);
  std::size_t failed = 0;
  for (const auto& c : certs) {
    if (c.passed()) {
      if (cfg.verbosity > 0) out << "PASS " << c.id() << "\n";
      continue;
    }
    ++failed;
    const Check* f = c.first_failure();
    out << "FAIL " << c.id() << ": " << (f ? f->name + ": " + f->evidence : "no checks ran") << "\n";
  }
  out << certs.size() - failed << " of " << certs.size() << " certificates pass; bundle sha256 "
      << sha256_hex(b.manifest) << "\n";
  if (failed) err << failed << " certificate(s) failed\n";
  return failed ? 1 : 0;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  const auto rows = classification_table(full_suite(cfg.options(), cfg.corrupt_phi1));
  out << render_table(rows, cfg.format);
  const auto gaps = std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return r.gap(); });
  if (gaps) err << gaps << " row(s) marked GAP\n";
  return gaps ? 1 : 0;
}

namespace {

long parse_long(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw UsageError("malformed " + what + ": " + s);
  return v;
}

mpq_class parse_rational(const std::string& s) {
  static const std::regex re(R"(^-?[0-9]+(/[0-9]*[1-9][0-9]*)?$)");
  if (!std::regex_match(s, re)) throw UsageError("malformed coordinate: " + s);
  mpq_class q(s);
  q.canonicalize();
  return q;
}

}  // namespace

int cmd_query(const std::string& kind, const std::vector<std::string>& args, const RunConfig& cfg, std::ostream& out) {
  validate(cfg);
  if (args.size() != 1) throw UsageError("query " + kind + " takes one argument");
  if (kind == "invariants") {
    const long n = parse_long(args[0], "degree");
    if (n < 0) throw UsageError("degree must be nonnegative");
    const InvariantBasis b = invariant_basis(static_cast<int>(n));
    out << "degree: " << n << "\n";
    out << "dimension: " << b.dimension() << "\n";
    out << "method: " << b.method << "\n";
    const auto monos = grundform_exponents(static_cast<int>(n), true);
    for (const auto& f : b.forms) {
      std::string name;
      for (const auto& e : monos)
        if (grundform_monomial(e).monic() == f.monic())
          name = "Phi_1^" + std::to_string(e[0]) + " Phi_2^" + std::to_string(e[1]) + " Phi_3^" + std::to_string(e[2]);
      out << "form: " << f.to_string() << "\n";
      out << "proportional to: " << (name.empty() ? "-" : name) << "\n";
    }
    return 0;
  }
  if (kind == "orbit") {
    const std::string& a = args[0];
    const auto colon = a.find(':');
    if (colon == std::string::npos || a.find(':', colon + 1) != std::string::npos)
      throw UsageError("point must be written x0:x1");
    const mpq_class x0 = parse_rational(a.substr(0, colon)), x1 = parse_rational(a.substr(colon + 1));
    if (x0 == 0 && x1 == 0) throw UsageError("0:0 is not a point of P^1");
    const OrbitCert o = orbit_of(P1Point(CycNum(x0), CycNum(x1)), projective_icosahedral());
    out << "point: " << o.base.to_string() << "\n";
    out << "orbit size: " << o.orbit_size << "\n";
    out << "stabilizer order: " << o.stabilizer_order << "\n";
    out << "orbit-stabilizer: " << (o.orbit_stabilizer_holds() ? "holds" : "fails") << "\n";
    return 0;
  }
  if (kind == "group") {
    try {
      const GroupSignature& s = model_signature(args[0]);
      out << "model: " << args[0] << "\n";
      out << "signature: " << s.to_string() << "\n";
      out << "recognized: " << recognize(s) << "\n";
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return 0;
  }
  throw UsageError("unknown query kind " + kind + "; use invariants, orbit or group");
}

int cmd_search(const std::string& label, const std::vector<std::string>& targets, const RunConfig& cfg,
               std::ostream& out) {
  validate(cfg);
  std::map<std::string, long> t;
  for (const auto& s : targets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("target must be name=value: " + s);
    t[s.substr(0, eq)] = parse_long(s.substr(eq + 1), "target value");
  }
  SearchReport r;
  try {
    r = search_instance(label, t, cfg.seed, cfg.options());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "search: " << label << "\n";
  out << "report: " << r.report << "\n";
  out << "tried: " << r.tried << "\n";
  if (r.cert) out << (cfg.format == "text" ? render_text(*r.cert) : render_json(*r.cert).dump(2) + "\n");
  return 0;
}

}  // namespace cremona
