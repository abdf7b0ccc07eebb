#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "family_internal.hpp"

namespace cremona {

namespace {

using Job = std::function<std::vector<FamilyCert>()>;

Job one(std::function<FamilyCert()> f) {
  return [f = std::move(f)] { return std::vector<FamilyCert>{f()}; };
}

// A seeded search as a certificate: the found instance, or a record of the
// emptiness or exhaustion report.
Job searched(std::string label, std::map<std::string, long> targets, const CertOptions& opt) {
  return [label = std::move(label), targets = std::move(targets), opt] {
    const SearchReport r = search_instance(label, targets, opt.seed, opt);
    if (r.cert) return std::vector<FamilyCert>{*r.cert};
    FamilyCert c = detail::start({label, "search", targets, {}}, opt);
    c.add("search", r.empty, r.report);
    return std::vector<FamilyCert>{c};
  };
}

}  // namespace

std::vector<FamilyCert> full_suite(const CertOptions& opt, bool corrupt_phi1) {
  std::vector<Job> jobs;
  jobs.push_back([=] { return model_suite(opt, corrupt_phi1); });
  jobs.push_back(one([=] { return cert_klein(opt); }));
  jobs.push_back(one([=] { return cert_valentiner(opt); }));
  jobs.push_back(one([=] { return cert_dp2(opt); }));
  jobs.push_back(one([=] { return cert_dp3(opt); }));
  jobs.push_back(one([=] { return cert_dp5_aut(opt); }));
  jobs.push_back(one([=] { return cert_dp5_involution(opt); }));
  for (int n : {1, 3}) jobs.push_back(one([=] { return cert_plane_linear(n, opt); }));
  jobs.push_back(one([=] { return cert_plane_conic(opt); }));
  for (const char* q : {"wreath", "diagonal"}) jobs.push_back(one([=] { return cert_quadric(q, opt); }));
  for (const char* b : {"A5", "S4", "A4", "Z2", "Z2^2", "D3", "Z5", "diagonal"})
    jobs.push_back(one([=] { return cert_th01_quadric(b, opt); }));
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 5}, {3, 5}})
    jobs.push_back(one([=] { return cert_th01_hirzebruch(n, k, opt); }));

  // thExcept: g odd gives Dn x A5, g even gives Dn x Abar5 for odd n.
  for (auto [g, k, n] : std::vector<std::array<int, 3>>{{5, 3, 3}, {5, 3, 2}, {5, 3, 1}, {9, 2, 5}, {14, 1, 3}, {14, 1, 2}})
    jobs.push_back(one([=] { return cert_exceptional(g, grundform(k), n, opt); }));
  jobs.push_back(searched("thExcept", {{"g", 1}, {"n", 1}}, opt));

  jobs.push_back(searched("th1", {{"case", 1}, {"d", 30}}, opt));
  jobs.push_back(searched("th1", {{"case", 2}, {"d", 75}}, opt));
  jobs.push_back(searched("th1", {{"case", 2}, {"d", 90}}, opt));
  jobs.push_back(one([=] { return cert_th2(6, 4, grundform(3), BinForm(16), grundform(2), opt); }));
  jobs.push_back(searched("th2", {{"d", 15}, {"e", 30}}, opt));
  jobs.push_back(searched("th3", {{"d", 45}}, opt));
  jobs.push_back(one([=] { return cert_th3_even_rejection(30, opt); }));
  jobs.push_back(searched("th4", {{"d", 6}, {"e", 34}}, opt));
  jobs.push_back(one([=] { return cert_th5(12, 4, 9, grundform(3), grundform(2), grundform(1), opt); }));
  jobs.push_back(searched("th5", {{"a1", 4}, {"a2", 24}, {"d", 12}}, opt));

  std::vector<std::vector<FamilyCert>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), jobs.size()));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex mu;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        try {
          results[i] = jobs[i]();
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<FamilyCert> all;
  for (auto& r : results)
    for (auto& c : r) all.push_back(std::move(c));
  std::stable_sort(all.begin(), all.end(), [](const FamilyCert& a, const FamilyCert& b) { return a.id() < b.id(); });
  return all;
}

}  // namespace cremona
