// bigproj: command line access to the computations and the verification suite.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bigproj/bigcell.hpp"
#include "bigproj/characters.hpp"
#include "bigproj/claims.hpp"
#include "bigproj/irreducible.hpp"
#include "bigproj/matrixel.hpp"
#include "bigproj/uqsl2.hpp"
#include "bigproj/whittaker.hpp"

using namespace bigproj;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string format = "text";
  int depth = 6;
  bool depth_given = false;
  std::vector<std::string> eta;
  std::vector<std::string> systems;
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw UsageError("");
    } catch (const std::exception&) {
      throw UsageError("not an integer list: " + s);
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::vector<Q> parse_eta(const std::vector<std::string>& items, int rank) {
  std::vector<Q> eta;
  for (const auto& s : items) {
    try {
      eta.push_back(parse_rat(s));
    } catch (const std::exception&) {
      throw UsageError("not a rational: " + s);
    }
  }
  if (eta.empty()) return std::vector<Q>(rank, Q(1));
  if (eta.size() == 1) return std::vector<Q>(rank, eta[0]);
  if (static_cast<int>(eta.size()) != rank) throw UsageError("--eta needs " + std::to_string(rank) + " entries");
  return eta;
}

std::string one_system(const Common& c, const std::string& fallback) {
  if (c.systems.empty()) return fallback;
  if (c.systems.size() != 1) throw UsageError("this command takes a single --system");
  return c.systems[0];
}

Weight parse_weight(const std::string& s, const RootSystem& rs) {
  auto w = parse_ints(s);
  if (static_cast<int>(w.size()) != rs.rank())
    throw UsageError("--lambda needs " + std::to_string(rs.rank()) + " coordinates for " + rs.label());
  return w;
}

void require_sl2(const std::string& sys) {
  if (sys != "A1") throw UsageError("this command is implemented for A1 only");
}

Json eta_json(const std::vector<Q>& eta) {
  Json a = Json::array();
  for (const auto& e : eta) a.push_back(rat_string(e));
  return a;
}

Json table_json(const ClaimTable& t) {
  return Json{{"columns", t.columns}, {"rows", t.rows}};
}

// Generic text rendering of the JSON document.
bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

void render(std::ostream& os, const Json& j, int indent);

void render_value(std::ostream& os, const std::string& key, const Json& v, int indent) {
  std::string pad(indent, ' ');
  if (scalar(v)) {
    os << pad << key << ": " << scalar_text(v) << "\n";
  } else if (v.empty()) {
    os << pad << key << ": none\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), scalar)) {
    os << pad << key << ":";
    bool first = true;
    for (const auto& x : v) {
      os << (first ? " " : ", ") << scalar_text(x);
      first = false;
    }
    os << "\n";
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& r) {
               return r.is_array() && std::all_of(r.begin(), r.end(), scalar);
             })) {
    os << pad << key << ":\n";
    for (const auto& r : v) {
      os << pad << "  ";
      bool first = true;
      for (const auto& x : r) {
        os << (first ? "" : " | ") << scalar_text(x);
        first = false;
      }
      os << "\n";
    }
  } else {
    os << pad << key << ":\n";
    render(os, v, indent + 2);
  }
}

void render(std::ostream& os, const Json& j, int indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_value(os, k, v, indent);
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (scalar(v)) {
        os << std::string(indent, ' ') << "- " << scalar_text(v) << "\n";
      } else if (v.is_array() && std::all_of(v.begin(), v.end(), scalar)) {
        os << std::string(indent, ' ') << "-";
        bool first = true;
        for (const auto& x : v) {
          os << (first ? " " : ", ") << scalar_text(x);
          first = false;
        }
        os << "\n";
      } else {
        os << std::string(indent, ' ') << "-\n";
        render(os, v, indent + 2);
      }
    }
  }
}

void emit(const Common& c, const std::string& command, Json body) {
  Json doc{{"schema_version", kSchemaVersion}, {"command", command}};
  for (auto& [k, v] : body.items()) doc[k] = v;
  if (c.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    render(std::cout, doc, 0);
}

// char
struct CharArgs {
  std::string lambda, kind = "verma";
};

int run_char(const Common& c, const CharArgs& a) {
  RootSystem rs(one_system(c, "A1"));
  WeylGroup W(rs);
  Weight lambda = parse_weight(a.lambda, rs);
  Weight top = lambda;
  std::map<Weight, long long> mult;
  if (a.kind == "verma") {
    mult = truncate(rs, verma_char(rs, lambda), lambda, c.depth).mult;
  } else if (a.kind == "simple") {
    auto L = irreducible_module(rs, lambda, c.depth);
    for (const auto& mu : window_weights(rs, lambda, c.depth))
      if (L.dim_at(mu)) mult[mu] = L.dim_at(mu);
  } else {
    if (!rs.is_antidominant(lambda)) throw UsageError("--kind projective needs an antidominant --lambda");
    auto od = orbit_data(W, lambda);
    for (const auto& mu : od.orbit)
      if (rs.height(mu - lambda) > rs.height(top - lambda)) top = mu;
    mult = truncate(rs, big_proj_char(W, lambda), top, c.depth).mult;
  }
  Json rows = Json::array();
  for (const auto& mu : window_weights(rs, top, c.depth)) {
    auto it = mult.find(mu);
    if (it != mult.end() && it->second != 0) rows.push_back({weight_string(mu), it->second});
  }
  emit(c, "char",
       {{"system", rs.label()}, {"kind", a.kind}, {"lambda", weight_string(lambda)}, {"top", weight_string(top)},
        {"depth", c.depth}, {"multiplicities", rows}});
  return 0;
}

// kl
struct KlArgs {
  std::string x = "e", w;
};

int run_kl(const Common& c, const KlArgs& a) {
  RootSystem rs(one_system(c, "A1"));
  WeylGroup W(rs);
  KLTable kl(W);
  int x = W.from_word(parse_weyl_word(a.x, rs.rank()));
  int w = W.from_word(parse_weyl_word(a.w, rs.rank()));
  const IntPoly& p = kl.P(x, w);
  emit(c, "kl",
       {{"system", rs.label()}, {"x", a.x}, {"w", a.w}, {"bruhat_leq", W.bruhat_leq(x, w)},
        {"polynomial", poly_string(p)}, {"coefficients", p}, {"mu", kl.mu(x, w)}});
  return 0;
}

// bigcell
struct BigcellArgs {
  int side = 2;
  bool tables = false;
};

int run_bigcell(const Common& c, const BigcellArgs& a) {
  RootSystem rs(one_system(c, "A1"));
  LieAlgebra g(rs);
  BigCell bc(g);
  Json ops = Json::array();
  for (int x = 0; x < g.dim(); ++x)
    ops.push_back({g.basis_name(x), bc.rho(a.side, x).str(bc.names(), bc.layout())});
  Json body{{"system", rs.label()}, {"side", a.side}, {"coordinates", bc.coordinate_order()}, {"operators", ops}};
  if (a.tables) {
    auto t = bc.structure_tables(a.side);
    Json tabs = Json::object();
    auto add = [&](const char* name, const std::vector<std::map<int, BigCellPoly>>& tab) {
      Json rows = Json::array();
      for (std::size_t i = 0; i < tab.size(); ++i)
        for (const auto& [beta, p] : tab[i])
          rows.push_back({std::to_string(i + 1), g.basis_name(g.index().E(beta)), p.str(bc.names())});
      tabs[name] = rows;
    };
    add("p", t.p);
    add("q", t.q);
    add("r", t.r);
    add("s", t.s);
    body["tables"] = tabs;
  }
  emit(c, "bigcell", body);
  return 0;
}

// whittaker
struct WhittakerArgs {
  std::string mode, lambda;
  std::string eta_right;
};

int run_whittaker(const Common& c, const WhittakerArgs& a) {
  RootSystem rs(one_system(c, "A1"));
  LieAlgebra g(rs);
  Enveloping U(g);
  BigCell bc(g);
  auto eta = parse_eta(c.eta, rs.rank());
  if (a.mode == "solve") {
    auto sols = left_whittaker_solutions(bc, eta, c.depth);
    emit(c, "whittaker solve",
         {{"system", rs.label()}, {"eta", eta_json(eta)}, {"depth", c.depth}, {"solutions", sols.size()},
          {"tau", tau(bc, eta, c.depth).str(bc.names())}});
    return 0;
  }
  if (a.lambda.empty()) throw UsageError("--lambda is required");
  Weight lambda = parse_weight(a.lambda, rs);
  if (!rs.is_antidominant(lambda)) throw UsageError("--lambda must be antidominant");
  if (a.mode == "borel-weil") {
    auto r = borel_weil_block(bc, U, lambda, eta, c.depth, rs.rank() == 1);
    emit(c, "whittaker borel-weil",
         {{"system", rs.label()}, {"lambda", weight_string(lambda)}, {"eta", eta_json(eta)}, {"depth", c.depth},
          {"top", weight_string(r.top)}, {"character_ok", r.character_ok}, {"top_singular", r.top_singular},
          {"witness_coefficient", rat_string(r.witness_coefficient)}, {"witness_ok", r.witness_ok},
          {"quotient_ok", r.quotient_ok}, {"iso_checked", r.iso_checked}, {"iso_ok", r.iso_ok},
          {"iso_note", r.iso_note}, {"passed", r.passed()}});
    return r.passed() ? 0 : 1;
  }
  require_sl2(rs.label());
  Q right = a.eta_right.empty() ? eta[0] : parse_eta({a.eta_right}, 1)[0];
  auto d = double_whittaker_dim(bc, U, lambda, eta[0], right, c.depth);
  emit(c, "whittaker toda-dim",
       {{"system", rs.label()}, {"lambda", weight_string(lambda)}, {"eta", rat_string(eta[0])},
        {"eta_right", rat_string(right)}, {"depth", c.depth}, {"dim", d.dim}, {"dim_next_depth", d.dim_next},
        {"reduced_casimir", d.toda}});
  return 0;
}

// matrixel
struct MatrixelArgs {
  std::string mode;
  int lambda = -2;
};

Json mult_json(const std::map<std::pair<int, int>, long long>& m) {
  Json rows = Json::array();
  for (const auto& [k, v] : m) rows.push_back({k.first, k.second, v});
  return rows;
}

int run_matrixel(const Common& c, const MatrixelArgs& a) {
  std::string sys = one_system(c, "A1");
  require_sl2(sys);
  if (a.lambda > -1) throw UsageError("--lambda must be <= -1");
  RootSystem rs("A1");
  LieAlgebra g(rs);
  Enveloping U(g);
  int top = a.lambda == -1 ? -1 : -a.lambda - 2;
  Json body{{"system", sys}, {"lambda", a.lambda}, {"depth", c.depth}};
  if (a.mode == "blocks") {
    auto M = block_space(U, a.lambda, c.depth);
    Json dims = Json::array();
    for (const auto& [k, d] : M.dims()) dims.push_back({k.first[0], k.second[0], d});
    auto mult = peel_sl2(sl2_table(M.dims()), top, c.depth);
    body["total_dim"] = M.total_dim();
    body["bidegree_dims"] = dims;
    body["constituents"] = mult_json(mult);
    body["constituent_count"] = total(mult);
  } else if (a.mode == "kernel") {
    auto k = kernel_vs_ideal_sl2(U, a.lambda, c.depth);
    body["kernel_equals_ideal"] = k.equal_everywhere;
    body["ideal_in_kernel"] = k.ideal_in_kernel;
    body["constituents"] = mult_json(k.constituents);
    body["constituent_count"] = k.constituent_count;
    body["constituent_types"] = k.constituent_types;
  } else {
    auto e = endo_algebra_sl2(U, a.lambda, c.depth);
    body["dim"] = e.dim;
    body["graded_dims"] = e.graded_dims;
    body["q_nonzero"] = e.q_nonzero;
    body["q_squared_zero"] = e.q_squared_zero;
    if (a.lambda != -1) {
      auto l = loewy_filtration_sl2(U, a.lambda, c.depth);
      Json layers = Json::array();
      for (const auto& layer : l.layers) layers.push_back(mult_json(layer));
      body["loewy_length"] = l.loewy_length;
      body["layers"] = layers;
      body["rigid"] = l.rigid();
    }
  }
  emit(c, "matrixel " + a.mode, body);
  return 0;
}

// uq
struct UqArgs {
  int ell = 3;
  bool kernel = false;
};

int run_uq(const Common& c, const UqArgs& a) {
  if (a.ell < 3 || a.ell % 2 == 0) throw UsageError("--ell must be odd and >= 3");
  auto r = block_dual_dims(a.ell, a.kernel);
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    Json layers = Json::array();
    for (const auto& layer : b.layers) {
      Json l = Json::array();
      for (const auto& [xy, m] : layer) l.push_back({xy.first, xy.second, m});
      layers.push_back(l);
    }
    Json j{{"orbit", b.orbit}, {"dim", b.dim}, {"layer_dims", b.layer_dims}, {"layers", layers}};
    if (b.kernel_checked) j["kernel_ok"] = b.kernel_ok;
    blocks.push_back(j);
  }
  emit(c, "uq", {{"ell", a.ell}, {"blocks", blocks}, {"total", r.total}, {"union_rank", r.union_rank}});
  return 0;
}

// verify
struct VerifyArgs {
  std::vector<std::string> only;
  bool timing = false;
};

int run_verify(const Common& c, const VerifyArgs& a) {
  ClaimOptions opt;
  if (!c.systems.empty()) opt.systems = c.systems;
  for (const auto& s : opt.systems)
    if (s != "A1" && s != "A2" && s != "A3") throw UsageError("verify supports A1, A2 and A3 (KL only)");
  if (c.depth_given) opt.depth = c.depth;
  for (const auto& s : c.eta) {
    try {
      opt.eta.push_back(parse_rat(s));
    } catch (const std::exception&) {
      throw UsageError("not a rational: " + s);
    }
  }
  for (const auto& id : a.only)
    if (!is_claim_id(id)) throw UsageError("unknown claim id: " + id);

  auto reports = run_claims(opt, a.only);
  Json arr = Json::array();
  std::vector<std::string> failing;
  int pass = 0, skipped = 0;
  for (const auto& r : reports) {
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    Json j{{"claim_id", r.id}, {"title", r.title}, {"parameters", params}, {"status", status_name(r.status)}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["table"] = table_json(r.table);
    if (a.timing) j["seconds"] = r.seconds;
    arr.push_back(j);
    if (r.status == ClaimStatus::Fail) failing.push_back(r.id);
    if (r.status == ClaimStatus::Pass) ++pass;
    if (r.status == ClaimStatus::Skipped) ++skipped;
  }
  emit(c, "verify",
       {{"reports", arr},
        {"summary", {{"pass", pass}, {"fail", failing.size()}, {"skipped", skipped}, {"failing", failing}}}});
  if (failing.empty()) return 0;
  std::cerr << "failing claims:";
  for (const auto& f : failing) std::cerr << " " << f;
  std::cerr << "\n";
  return 1;
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--depth", c.depth, "Truncation depth")->check(CLI::Range(1, 64));
  app->add_option("--eta", c.eta, "Whittaker character, comma separated rationals")->delimiter(',');
  app->add_option("--system", c.systems, "Root system label")
      ->delimiter(',')
      ->check(CLI::IsMember({"A1", "A2", "B2", "G2", "A3"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Big projective modules, Whittaker functions and matrix elements"};
  app.require_subcommand(1);
  Common common;

  CharArgs char_args;
  auto* ch = app.add_subcommand("char", "Truncated characters of Verma, simple and big projective modules");
  add_common(ch, common);
  ch->add_option("--lambda", char_args.lambda, "Weight, comma separated")->required();
  ch->add_option("--kind", char_args.kind)->check(CLI::IsMember({"verma", "simple", "projective"}));

  KlArgs kl_args;
  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{x,w}");
  add_common(kl, common);
  kl->add_option("--x", kl_args.x, "Weyl word such as s2 (default e)");
  kl->add_option("--w", kl_args.w, "Weyl word such as s2s1s3s2")->required();

  BigcellArgs bc_args;
  auto* bc = app.add_subcommand("bigcell", "Operators rho1/rho2 and the p, q, r, s tables");
  add_common(bc, common);
  bc->add_option("--side", bc_args.side)->check(CLI::IsMember({1, 2}));
  bc->add_flag("--tables", bc_args.tables, "Print the structure tables");

  WhittakerArgs wh_args;
  auto* wh = app.add_subcommand("whittaker", "Whittaker solutions, Borel-Weil blocks and Toda dimensions");
  add_common(wh, common);
  wh->add_option("mode", wh_args.mode)->required()->check(CLI::IsMember({"solve", "borel-weil", "toda-dim"}));
  wh->add_option("--lambda", wh_args.lambda, "Antidominant weight, comma separated");
  wh->add_option("--eta-right", wh_args.eta_right, "Right character for toda-dim");

  MatrixelArgs me_args;
  auto* me = app.add_subcommand("matrixel", "Matrix element blocks, kernel and endomorphisms (sl2)");
  add_common(me, common);
  me->add_option("mode", me_args.mode)->required()->check(CLI::IsMember({"blocks", "kernel", "endo"}));
  me->add_option("--lambda", me_args.lambda, "Antidominant weight");

  UqArgs uq_args;
  auto* uq = app.add_subcommand("uq", "Block decomposition of the dual of u_q(sl2)");
  add_common(uq, common);
  uq->add_option("--ell", uq_args.ell, "Odd order of the root of unity");
  uq->add_flag("--kernel", uq_args.kernel, "Also identify the kernel of the matrix element map");

  VerifyArgs v_args;
  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  add_common(ver, common);
  ver->add_option("--only", v_args.only, "Claim ids to run")->delimiter(',');
  ver->add_flag("--timing", v_args.timing, "Include timings in the output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  for (auto* sub : {ch, kl, bc, wh, me, uq, ver})
    if (sub->parsed()) common.depth_given = sub->count("--depth") > 0;

  try {
    if (ch->parsed()) return run_char(common, char_args);
    if (kl->parsed()) return run_kl(common, kl_args);
    if (bc->parsed()) return run_bigcell(common, bc_args);
    if (wh->parsed()) return run_whittaker(common, wh_args);
    if (me->parsed()) return run_matrixel(common, me_args);
    if (uq->parsed()) return run_uq(common, uq_args);
    return run_verify(common, v_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
