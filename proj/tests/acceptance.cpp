// Runs the nine acceptance criteria and prints one line per criterion. The KL
// checks are compared against the Hecke algebra oracle.

#include <cstdio>
#include <map>
#include <string>

#include "bigproj/claims.hpp"
#include "oracles.hpp"

using namespace bigproj;

int main() {
  std::map<std::string, std::vector<std::vector<std::vector<long long>>>> hecke;
  ClaimOptions opt;
  opt.systems = {"A1", "A2", "A3"};
  opt.kl_reference = [&hecke](const WeylGroup& W, int x, int w) {
    const auto& label = W.root_system().label();
    auto it = hecke.find(label);
    if (it == hecke.end()) it = hecke.emplace(label, oracle::kl_from_hecke(W)).first;
    IntPoly p = it->second[x][w];
    return p;
  };

  // Runtime budget per criterion, seconds.
  const std::vector<double> budget{60, 120, 180, 120, 60, 60, 60, 300, 60};
  int failed = 0;
  for (std::size_t k = 0; k < claim_ids().size(); ++k) {
    auto r = run_claim(claim_ids()[k], opt);
    bool ok = r.status == ClaimStatus::Pass && r.seconds < budget[k];
    if (!ok) ++failed;
    std::printf("criterion %zu %-22s %s  %.2fs (budget %.0fs)%s%s\n", k + 1, r.id.c_str(), ok ? "PASS" : "FAIL",
                r.seconds, budget[k], r.reason.empty() ? "" : "  ", r.reason.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(claim_ids().size()) - failed, claim_ids().size());
  return failed == 0 ? 0 : 1;
}
