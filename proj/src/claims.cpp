#include "bigproj/claims.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <regex>
#include <stdexcept>

#include "bigproj/bigcell.hpp"
#include "bigproj/irreducible.hpp"
#include "bigproj/matrixel.hpp"
#include "bigproj/uqsl2.hpp"
#include "bigproj/whittaker.hpp"

namespace bigproj {

namespace {

using Row = std::vector<std::string>;

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string eta_string(const std::vector<Q>& eta) {
  std::string s = "(";
  for (std::size_t i = 0; i < eta.size(); ++i) s += (i ? "," : "") + rat_string(eta[i]);
  return s + ")";
}

bool wants(const ClaimOptions& o, const std::string& sys) {
  return std::find(o.systems.begin(), o.systems.end(), sys) != o.systems.end();
}

int depth_or(const ClaimOptions& o, int native) { return o.depth ? *o.depth : native; }

std::vector<Q> eta_for(const ClaimOptions& o, int rank) {
  if (o.eta.empty()) return std::vector<Q>(rank, Q(1));
  if (o.eta.size() == 1) return std::vector<Q>(rank, o.eta[0]);
  if (static_cast<int>(o.eta.size()) != rank)
    throw std::invalid_argument("eta has " + std::to_string(o.eta.size()) + " entries for rank " +
                                std::to_string(rank));
  return o.eta;
}

// Collects rows; the last column of every row is the verdict.
class Report {
 public:
  Report(ClaimReport& r, Row columns) : r_(r) {
    columns.push_back("ok");
    r_.table.columns = std::move(columns);
  }
  void row(Row cells, bool ok) {
    if (!ok) failed_.push_back(cells.empty() ? "?" : cells[0] + " " + (cells.size() > 1 ? cells[1] : ""));
    cells.push_back(yes(ok));
    r_.table.rows.push_back(std::move(cells));
  }
  void finish(const std::string& skip_reason) {
    if (r_.table.rows.empty()) {
      r_.status = ClaimStatus::Skipped;
      r_.reason = skip_reason;
      return;
    }
    r_.status = failed_.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
    std::string s;
    for (const auto& f : failed_) s += (s.empty() ? "failed: " : "; ") + f;
    r_.reason = s;
  }

 private:
  ClaimReport& r_;
  std::vector<std::string> failed_;
};

const char* kSl2Only = "sl2 only; A1 not selected";

void claim_rho_relations(const ClaimOptions& o, ClaimReport& r) {
  Report rep(r, {"system", "hom rho1", "hom rho2", "commute", "serre rho1", "serre rho2",
                 "transposition"});
  for (const char* sys : {"A1", "A2"}) {
    if (!wants(o, sys)) continue;
    RootSystem rs(sys);
    LieAlgebra g(rs);
    BigCell bc(g);
    bool h1 = bc.check_homomorphism(1), h2 = bc.check_homomorphism(2), c = bc.check_commuting();
    bool s1 = bc.check_serre(1), s2 = bc.check_serre(2), t = bc.check_transposition();
    rep.row({sys, yes(h1), yes(h2), yes(c), yes(s1), yes(s2), yes(t)}, h1 && h2 && c && s1 && s2 && t);
  }
  rep.finish("needs A1 or A2");
}

void claim_block_character(const ClaimOptions& o, ClaimReport& r) {
  int D = depth_or(o, 6);
  r.parameters.push_back({"depth", std::to_string(D)});
  Report rep(r, {"lambda", "depth", "bidegrees", "dim", "expected dim"});
  if (wants(o, "A1")) {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    BigCell bc(g);
    for (int lam : {-2, -3, -4}) {
      auto got = block_table_sl2(bc, U, lam, D);
      auto want = expected_block_table_sl2(lam, D);
      long long a = 0, b = 0;
      for (const auto& [k, d] : got.dims) a += d;
      for (const auto& [k, d] : want.dims) b += d;
      rep.row({std::to_string(lam), std::to_string(D), std::to_string(got.dims.size()),
               std::to_string(a), std::to_string(b)},
              got.dims == want.dims);
    }
  }
  rep.finish(kSl2Only);
}

void claim_borel_weil(const ClaimOptions& o, ClaimReport& r) {
  Report rep(r, {"system", "lambda", "eta", "depth", "character", "witness", "witness coefficient",
                 "isomorphism"});
  if (wants(o, "A1")) {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    BigCell bc(g);
    auto eta = eta_for(o, 1);
    int D = depth_or(o, 8);
    for (int lam = -1; lam >= -5; --lam) {
      auto b = borel_weil_block(bc, U, {lam}, eta, D);
      rep.row({"A1", std::to_string(lam), eta_string(eta), std::to_string(D), yes(b.character_ok),
               yes(b.witness_ok), rat_string(b.witness_coefficient),
               b.iso_checked ? yes(b.iso_ok) : "not checked"},
              b.passed() && b.iso_checked);
    }
  }
  if (wants(o, "A2")) {
    RootSystem rs("A2");
    LieAlgebra g(rs);
    Enveloping U(g);
    BigCell bc(g);
    auto eta = eta_for(o, 2);
    int D = depth_or(o, 6);
    auto b = borel_weil_block(bc, U, {-2, -2}, eta, D, false);
    rep.row({"A2", "(-2,-2)", eta_string(eta), std::to_string(D), yes(b.character_ok),
             yes(b.witness_ok), rat_string(b.witness_coefficient), "not checked"},
            b.character_ok && b.top_singular && b.witness_ok);
  }
  rep.finish("needs A1 or A2");
}

void claim_kernel(const ClaimOptions& o, ClaimReport& r) {
  int D = depth_or(o, 6);
  r.parameters.push_back({"depth", std::to_string(D)});
  Report rep(r, {"lambda", "depth", "ker = J", "J in ker", "constituents", "distinct constituents"});
  if (wants(o, "A1")) {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    for (int lam : {-2, -3}) {
      auto k = kernel_vs_ideal_sl2(U, lam, D);
      // L_l* (x) L_l twice, L_t* (x) L_l and L_l* (x) L_t once: four constituents of three types.
      rep.row({std::to_string(lam), std::to_string(D), yes(k.equal_everywhere), yes(k.ideal_in_kernel),
               std::to_string(k.constituent_count), std::to_string(k.constituent_types)},
              k.equal_everywhere && k.ideal_in_kernel && k.constituent_count == 4 &&
                  k.constituent_types == 3);
    }
  }
  rep.finish(kSl2Only);
}

void claim_endomorphisms(const ClaimOptions& o, ClaimReport& r) {
  int D = depth_or(o, 6);
  r.parameters.push_back({"depth", std::to_string(D)});
  Report rep(r, {"lambda", "dim End(P)", "Q^2 = 0", "dim A", "graded dims", "Loewy length",
                 "2 l + 1", "socle = radical"});
  if (wants(o, "A1")) {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    WeylGroup W(rs);
    for (int lam : {-2, -3, -4}) {
      auto build = [&U, lam](int d) { return big_projective_sl2(U, lam, d); };
      auto P = build(D);
      auto end = hom_space_certified(build, build, D);
      auto tf = trace_free_part(end, P);
      bool q_nilpotent = tf.size() == 1 && !is_zero_map(tf[0]) && is_zero_map(compose(tf[0], tf[0], P));
      auto A = endo_algebra_sl2(U, lam, D);
      auto L = loewy_filtration_sl2(U, lam, D);
      int expect_ll = 2 * l_lambda(W, {lam}) + 1;
      rep.row({std::to_string(lam), std::to_string(end.size()), yes(q_nilpotent), std::to_string(A.dim),
               join_ints(A.graded_dims), std::to_string(L.loewy_length), std::to_string(expect_ll),
               yes(L.rigid())},
              end.size() == 2 && q_nilpotent && A.dim == 5 && A.graded_dims == std::vector<int>{2, 2, 1} &&
                  L.loewy_length == 3 && expect_ll == 3 && L.rigid());
    }
  }
  rep.finish(kSl2Only);
}

void claim_double_whittaker(const ClaimOptions& o, ClaimReport& r) {
  int D = depth_or(o, 6);
  r.parameters.push_back({"depth", std::to_string(D)});
  Report rep(r, {"lambda", "eta", "Whittaker dim", "stable", "|W^lambda|", "dim End(P)", "reduced Casimir"});
  if (wants(o, "A1")) {
    RootSystem rs("A1");
    LieAlgebra g(rs);
    Enveloping U(g);
    BigCell bc(g);
    WeylGroup W(rs);
    auto eta = eta_for(o, 1)[0];
    for (int lam = -1; lam >= -5; --lam) {
      auto d = double_whittaker_dim(bc, U, {lam}, eta, eta, D);
      std::size_t orbit = orbit_data(W, {lam}).orbit.size();
      auto build = [&U, lam](int k) { return big_projective_sl2(U, lam, k); };
      std::size_t end = hom_space_certified(build, build, D).size();
      std::size_t expect = lam == -1 ? 1 : 2;
      rep.row({std::to_string(lam), rat_string(eta), std::to_string(d.dim), yes(d.dim_next == d.dim),
               std::to_string(orbit), std::to_string(end), d.toda},
              d.dim == expect && d.dim_next == d.dim && orbit == expect && end == expect);
    }
  }
  rep.finish(kSl2Only);
}

// Peels a truncated character from the top down by the characters piece(mu, .),
// returning the multiplicity of each highest weight.
std::map<Weight, long long> peel(const RootSystem& rs, std::map<Weight, long long> ch, const Weight& top,
                                 int depth,
                                 const std::function<long long(const Weight&, const Weight&)>& piece) {
  std::map<Weight, long long> out;
  auto window = window_weights(rs, top, depth);
  for (const auto& mu : window) {
    long long c = ch[mu];
    if (c == 0) continue;
    out[mu] = c;
    for (const auto& nu : window)
      if (rs.leq(nu, mu)) ch[nu] -= c * piece(mu, nu);
  }
  return out;
}

void reciprocity_rows(const std::string& sys, Report& rep) {
  RootSystem rs(sys);
  WeylGroup W(rs);
  KLTable kl(W);
  LieAlgebra g(rs);
  Enveloping U(g);
  BigCell bc(g);
  std::vector<Weight> blocks = rs.rank() == 1 ? std::vector<Weight>{{-2}, {-1}}
                                              : std::vector<Weight>{{-2, -2}, {-1, -2}, {-2, -1}, {-1, -1}};
  for (const auto& lambda : blocks) {
    auto od = orbit_data(W, lambda);
    std::size_t n = od.orbit.size();
    auto m = block_decomposition_matrix(W, kl, lambda);
    Weight top = od.orbit.back();
    for (const auto& mu : od.orbit)
      if (rs.height(mu - lambda) > rs.height(top - lambda)) top = mu;
    int dt = rs.height(top - lambda);
    std::map<Weight, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[od.orbit[i]] = i;
    std::string label = weight_string(lambda);

    // [M_y : L_x] by peeling with simple modules from the highest weight constructor.
    std::map<Weight, WeightModule> simples;
    auto simple_piece = [&](const Weight& mu, const Weight& nu) -> long long {
      auto it = simples.find(mu);
      if (it == simples.end()) it = simples.emplace(mu, irreducible_module(rs, mu, dt)).first;
      return it->second.dim_at(nu);
    };
    bool kl_ok = true;
    for (std::size_t y = 0; y < n; ++y) {
      auto v = truncate(rs, verma_char(rs, od.orbit[y]), top, dt).mult;
      auto mult = peel(rs, v, top, dt, simple_piece);
      std::vector<long long> row(n, 0);
      for (const auto& [mu, c] : mult) {
        if (!pos.count(mu)) kl_ok = false;
        else row[pos[mu]] = c;
      }
      if (row != m[y]) kl_ok = false;
    }
    rep.row({sys, "[M:L] from KL = peeled, block " + label, std::to_string(n) + " x " + std::to_string(n)},
            kl_ok);

    // (P_lambda : M_y) from a realized big projective, against [M_y : L_lambda].
    WeightModule P = rs.rank() == 1 ? big_projective_sl2(U, lambda[0], dt)
                                    : whittaker_block_module(bc, U, lambda, std::vector<Q>(2, Q(1)), dt);
    std::map<Weight, long long> pch;
    for (const auto& [w, d] : P.character()) pch[w] = d;
    std::map<Weight, std::map<Weight, long long>> vermas;
    auto verma_piece = [&](const Weight& mu, const Weight& nu) -> long long {
      auto it = vermas.find(mu);
      if (it == vermas.end()) it = vermas.emplace(mu, truncate(rs, verma_char(rs, mu), top, dt).mult).first;
      auto jt = it->second.find(nu);
      return jt == it->second.end() ? 0 : jt->second;
    };
    auto flag = peel(rs, pch, top, dt, verma_piece);
    bool flag_ok = true;
    std::string counts;
    for (std::size_t y = 0; y < n; ++y) {
      auto it = flag.find(od.orbit[y]);
      long long c = it == flag.end() ? 0 : it->second;
      counts += (y ? "," : "") + std::to_string(c);
      if (c != m[y][0]) flag_ok = false;
    }
    if (flag.size() > n) flag_ok = false;
    rep.row({sys, "(P:M) = [M:L] antidominant, block " + label, counts}, flag_ok);

    auto C = cartan_matrix_block(W, kl, lambda);
    bool sym = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sym = sym && C[i][j] == C[j][i];
    if (rs.rank() == 1) {
      // Hom between the projectives: P_lambda and the dominant Verma module.
      std::vector<std::function<WeightModule(int)>> proj{
          [&U, &lambda](int d) { return big_projective_sl2(U, lambda[0], d); }};
      if (n == 2) proj.push_back([&U, top](int d) { return verma(U, top, d); });
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          sym = sym && static_cast<long long>(hom_space_certified(proj[i], proj[j], dt + 4).size()) == C[i][j];
    }
    rep.row({sys, std::string(rs.rank() == 1 ? "Cartan symmetric = dim Hom(P,P)" : "Cartan symmetric") +
                      ", block " + label,
             std::to_string(C[0][0])},
            sym);
  }
}

void claim_combinatorics(const ClaimOptions& o, ClaimReport& r) {
  Report rep(r, {"system", "check", "value"});
  for (const char* sys : {"A1", "A2"})
    if (wants(o, sys)) reciprocity_rows(sys, rep);
  if (wants(o, "A2")) {
    RootSystem rs("A2");
    WeylGroup W(rs);
    KLTable kl(W);
    bool ones = true;
    int pairs = 0;
    for (int x = 0; x < W.order(); ++x)
      for (int w = 0; w < W.order(); ++w) {
        if (!W.bruhat_leq(x, w)) continue;
        ++pairs;
        ones = ones && kl.P(x, w) == IntPoly{1};
        if (o.kl_reference) ones = ones && kl.P(x, w) == o.kl_reference(W, x, w);
      }
    rep.row({"A2", "P_{x,w} = 1 for x <= w", std::to_string(pairs) + " pairs"}, ones);
  }
  if (wants(o, "A3")) {
    RootSystem rs("A3");
    WeylGroup W(rs);
    KLTable kl(W);
    int x = W.from_word(parse_weyl_word("s2", 3)), w = W.from_word(parse_weyl_word("s2s1s3s2", 3));
    const IntPoly& p = kl.P(x, w);
    IntPoly ref = o.kl_reference ? o.kl_reference(W, x, w) : IntPoly{1, 1};
    rep.row({"A3", std::string("P_{s2,s2s1s3s2} vs ") + (o.kl_reference ? "reference" : "1+q"), poly_string(p)},
            p == ref);
  }
  rep.finish("needs A1, A2 or A3");
}

void claim_root_of_unity(const ClaimOptions& o, ClaimReport& r) {
  Report rep(r, {"ell", "block", "dim", "expected", "End dim", "End graded", "layers", "kernel"});
  if (wants(o, "A1")) {
    for (int ell : {3, 5, 7}) {
      UqContext C(ell);
      bool check_kernel = ell <= 5;
      auto d = block_dual_dims(ell, check_kernel);
      for (const auto& b : d.blocks) {
        bool regular = b.orbit.size() == 2;
        int expect = regular ? 2 * ell * ell : ell * ell;
        auto e = endo_algebra_uq(C, b.orbit[0]);
        bool endo_ok = !regular || (e.dim == 8 && e.graded_dims == std::vector<int>{2, 4, 2});
        bool layers_ok = b.layers == expected_dual_layers(b.orbit);
        bool kernel_ok = !b.kernel_checked || b.kernel_ok;
        rep.row({std::to_string(ell), join_ints(b.orbit), std::to_string(b.dim), std::to_string(expect),
                 std::to_string(e.dim), join_ints(e.graded_dims), yes(layers_ok),
                 b.kernel_checked ? yes(b.kernel_ok) : "not checked"},
                b.dim == expect && b.tensor_dim == b.dim && endo_ok && layers_ok && kernel_ok);
      }
      int cube = ell * ell * ell;
      rep.row({std::to_string(ell), "total", std::to_string(d.total), std::to_string(cube), "", "",
               "", "union rank " + std::to_string(d.union_rank)},
              d.total == cube && d.union_rank == cube);
    }
  }
  rep.finish(kSl2Only);
}

void claim_theta(const ClaimOptions& o, ClaimReport& r) {
  Report rep(r, {"system", "depth", "sample", "rank", "products"});
  for (const char* sys : {"A1", "A2"}) {
    if (!wants(o, sys)) continue;
    RootSystem rs(sys);
    LieAlgebra g(rs);
    BigCell bc(g);
    int D = depth_or(o, 5);
    std::vector<BigCellPoly> sample;
    std::vector<Functional> images;
    auto monos = root_monomials(rs, D);
    for (const auto& a : monos)
      for (const auto& c : monos) {
        if (root_height(rs, a) + root_height(rs, c) > D) continue;
        Weight mu(rs.rank(), 0);
        mu[0] = static_cast<int>(sample.size() % 3) - 1;
        sample.push_back(bc.monomial(a, mu, c));
        images.push_back(theta(bc, sample.back(), D));
      }
    std::size_t rank = functional_rank(images);
    std::mt19937 rng(11);
    int good = 0, tries = 8;
    for (int t = 0; t < tries; ++t) {
      const auto& p1 = sample[rng() % sample.size()];
      const auto& p2 = sample[rng() % sample.size()];
      if (theta(bc, p1 * p2, D) == convolve(rs, theta(bc, p1, D), theta(bc, p2, D))) ++good;
    }
    rep.row({sys, std::to_string(D), std::to_string(sample.size()), std::to_string(rank),
             std::to_string(good) + "/" + std::to_string(tries)},
            rank == sample.size() && good == tries);
  }
  rep.finish("needs A1 or A2");
}

struct ClaimDef {
  std::string id, title;
  void (*run)(const ClaimOptions&, ClaimReport&);
};

const std::vector<ClaimDef>& defs() {
  static const std::vector<ClaimDef> d{
      {"rho-relations", "rho1 and rho2 satisfy the Chevalley-Serre relations and commute", claim_rho_relations},
      {"block-character", "block character of the big cell equals sum_w ch(M* (x) M)", claim_block_character},
      {"whittaker-borel-weil", "Whittaker Borel-Weil realization of the big projective", claim_borel_weil},
      {"kernel-ideal", "ker Phi = J on P* (x) P", claim_kernel},
      {"endomorphisms", "End(P), the algebra A_lambda and the Loewy structure of M_lambda",
       claim_endomorphisms},
      {"double-whittaker", "double Whittaker dimension = |W^lambda| = dim End(P)", claim_double_whittaker},
      {"combinatorics", "BGG reciprocity, Cartan symmetry and KL polynomials", claim_combinatorics},
      {"root-of-unity", "blocks of the dual of u_q(sl2)", claim_root_of_unity},
      {"theta-homomorphism", "theta is injective and multiplicative", claim_theta},
  };
  return d;
}

}  // namespace

std::string status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : defs()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

bool is_claim_id(const std::string& id) {
  const auto& ids = claim_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ClaimReport run_claim(const std::string& id, const ClaimOptions& opt) {
  for (const auto& d : defs()) {
    if (d.id != id) continue;
    ClaimReport r;
    r.id = d.id;
    r.title = d.title;
    std::string systems;
    for (const auto& s : opt.systems) systems += (systems.empty() ? "" : ",") + s;
    r.parameters.push_back({"systems", systems});
    if (!opt.eta.empty()) r.parameters.push_back({"eta", eta_string(opt.eta)});
    auto t0 = std::chrono::steady_clock::now();
    try {
      d.run(opt, r);
    } catch (const std::exception& e) {
      r.status = ClaimStatus::Fail;
      r.reason = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw std::invalid_argument("unknown claim id: " + id);
}

std::vector<ClaimReport> run_claims(const ClaimOptions& opt, const std::vector<std::string>& only) {
  for (const auto& id : only)
    if (!is_claim_id(id)) throw std::invalid_argument("unknown claim id: " + id);
  std::vector<ClaimReport> out;
  for (const auto& id : claim_ids())
    if (only.empty() || std::find(only.begin(), only.end(), id) != only.end()) out.push_back(run_claim(id, opt));
  return out;
}

std::string poly_string(const IntPoly& p) {
  std::string s;
  for (std::size_t k = 0; k < p.size(); ++k) {
    long long c = p[k];
    if (c == 0) continue;
    if (!s.empty() || c < 0) s += c < 0 ? "-" : "+";
    long long a = c < 0 ? -c : c;
    if (k == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += "q";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "0" : s;
}

std::vector<int> parse_weyl_word(const std::string& s, int rank) {
  if (s.empty() || s == "e") return {};
  static const std::regex whole("(s[0-9]+)+"), letter("s([0-9]+)");
  if (!std::regex_match(s, whole)) throw std::invalid_argument("bad Weyl word: " + s);
  std::vector<int> out;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), letter); it != std::sregex_iterator(); ++it) {
    int i = std::stoi((*it)[1].str());
    if (i < 1 || i > rank) throw std::invalid_argument("simple reflection out of range in " + s);
    out.push_back(i - 1);
  }
  return out;
}

}  // namespace bigproj
