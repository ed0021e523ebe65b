#pragma once

// The verification suite shared by the CLI `verify` command and the acceptance
// binary. Each claim runs a family of exact checks and reports a table.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bigproj/characters.hpp"
#include "bigproj/rational.hpp"

namespace bigproj {

enum class ClaimStatus { Pass, Fail, Skipped };
std::string status_name(ClaimStatus s);

struct ClaimTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct ClaimReport {
  std::string id;
  std::string title;
  std::vector<std::pair<std::string, std::string>> parameters;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string reason;  // why it was skipped, or which rows failed
  ClaimTable table;
  double seconds = 0;
};

struct ClaimOptions {
  std::vector<std::string> systems{"A1", "A2"};
  // Overrides the per-claim depths when set.
  std::optional<int> depth;
  // Whittaker character; empty means all ones, a single entry is broadcast.
  std::vector<Q> eta;
  // Reference KL polynomials. Without one, the A3 polynomial is compared with 1 + q.
  std::function<IntPoly(const WeylGroup&, int x, int w)> kl_reference;
};

// Claim ids in run order.
const std::vector<std::string>& claim_ids();
bool is_claim_id(const std::string& id);

ClaimReport run_claim(const std::string& id, const ClaimOptions& opt);
// All claims, or those listed in only, in run order.
std::vector<ClaimReport> run_claims(const ClaimOptions& opt, const std::vector<std::string>& only = {});

// "1+q", "1+2q+q^2", "0".
std::string poly_string(const IntPoly& p);
// Words like "s2s1s3s2" (1-based), "e" or "" for the identity.
std::vector<int> parse_weyl_word(const std::string& s, int rank);

}  // namespace bigproj
