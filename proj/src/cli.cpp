#include "gitstab/cli.hpp"

#include "gitstab/homogenize.hpp"
#include "gitstab/kempf.hpp"
#include "gitstab/oracles.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gitstab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- parsing

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

Rational rational_of(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("rationals must be integers or strings \"p/q\"");
}

int int_of(const json& v) {
  if (!v.is_number_integer()) throw InputError("expected an integer");
  return v.get<int>();
}

RatVec rationals_of(const json& v) {
  if (!v.is_array()) throw InputError("expected an array of rationals");
  RatVec out;
  for (const auto& x : v) out.push_back(rational_of(x));
  return out;
}

std::vector<int> ints_of(const json& v) {
  if (!v.is_array()) throw InputError("expected an array of integers");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(int_of(x));
  return out;
}

Polynomial polynomial_of(const json& v) { return Polynomial(rationals_of(v)); }

WeightedFlag flag_of(const json& v, int n) {
  WeightedFlag f;
  f.n = v.contains("n") ? int_of(v.at("n")) : n;
  f.dims = ints_of(require(v, "dims"));
  f.alphas = rationals_of(require(v, "alphas"));
  f.validate();
  return f;
}

SheafData sheaf_of(const json& v, const AmbientSpace& x) {
  int rank = int_of(require(v, "rank"));
  return SheafData::from_hilbert(x, rank, polynomial_of(require(v, "hilbert")));
}

// ---------------------------------------------------------------- output

ordered_json rat(const Rational& q) { return to_string(q); }

ordered_json rats(const RatVec& v) {
  ordered_json out = ordered_json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

ordered_json ints(const IntVec& v) {
  ordered_json out = ordered_json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

ordered_json one_based(const std::vector<int>& v) {
  ordered_json out = ordered_json::array();
  for (int x : v) out.push_back(x + 1);
  return out;
}

ordered_json flag_json(const WeightedFlag& f) {
  ordered_json out;
  out["n"] = f.n;
  out["dims"] = f.dims;
  out["alphas"] = rats(f.alphas);
  if (f.gammas) out["gammas"] = rats(*f.gammas);
  return out;
}

ordered_json blocks_json(const std::vector<CharacterBlock>& blocks) {
  ordered_json out = ordered_json::array();
  for (const auto& b : blocks) out.push_back(ordered_json{{"size", b.size}, {"exponent", rat(b.exponent)}});
  return out;
}

ordered_json matrix_json(const RatMatrix& g) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < g.n(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < g.n(); ++j) row.push_back(to_string(g(i, j)));
    out.push_back(row);
  }
  return out;
}

ordered_json dec_type_json(const DecType& t) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : t.components()) comps.push_back(ordered_json{{"a", c.a}, {"b", c.b}, {"c", c.c}});
  return ordered_json{{"r", t.r()}, {"components", comps}};
}

ordered_json instability_json(const InstabilityResult& res) {
  ordered_json out;
  out["verdict"] = res.verdict == TorusVerdict::unstable ? "unstable" : "torus_semistable";
  out["min_norm_point"] = rats(res.min_norm_point);
  if (res.verdict == TorusVerdict::unstable) {
    out["lambda_star"] = ints(res.lambda_star->weights());
    out["q"] = res.q;
    out["m0_sq"] = rat(res.m0_sq);
    out["m0_sign"] = -1;
    out["flag"] = flag_json(res.flag.flag);
    out["permutation"] = one_based(res.flag.permutation);
    out["char_exponents"] = blocks_json(res.char_exponents);
  }
  return out;
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json out;
  out["status"] = to_string(v.status);
  out["witness"] = v.witness ? ordered_json(*v.witness) : ordered_json(nullptr);
  out["considered"] = v.considered;
  return out;
}

// ---------------------------------------------------------------- commands

struct Options {
  std::string input;
  int restarts = -1;
  std::uint64_t seed = 0;
  int brute_box = 0;
  std::string mode = "chain";
  int multiplier = 1;
  std::string out_dir;
};

ProblemFile load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return parse_problem(doc);
}

const SparseTensor& need_tensor(const ProblemFile& p) {
  if (!p.tensor) throw InputError("this command needs 'dec_type' and 'tensor'");
  return *p.tensor;
}

ordered_json header(const char* command) {
  ordered_json out;
  out["version"] = kFormatVersion;
  out["command"] = command;
  return out;
}

int cmd_mu(const Options& o, std::ostream& os) {
  ProblemFile p = load(o.input);
  const SparseTensor& w = need_tensor(p);
  ordered_json doc = header("mu");
  ordered_json states = ordered_json::array();
  for (const auto& chi : state_set(w)) states.push_back(ints(chi.coords));
  doc["states"] = states;
  ordered_json results = ordered_json::array();
  for (const auto& lambda : p.lambdas) {
    std::int64_t m = mu(lambda, w);
    results.push_back(ordered_json{{"lambda", ints(lambda.weights())}, {"mu", m}, {"limit_exists", m <= 0}});
  }
  doc["results"] = results;
  os << doc.dump(2) << '\n';
  return 0;
}

int cmd_flag(const Options& o, std::ostream& os) {
  ProblemFile p = load(o.input);
  ordered_json doc = header("flag");
  ordered_json results = ordered_json::array();
  for (const auto& lambda : p.lambdas) {
    AdaptedFlag af = weighted_flag_of(lambda);
    ordered_json r;
    r["lambda"] = ints(lambda.weights());
    r["flag"] = flag_json(af.flag);
    r["permutation"] = one_based(af.permutation);
    bool sum_zero = std::accumulate(lambda.weights().begin(), lambda.weights().end(), std::int64_t{0}) == 0;
    if (sum_zero) r["primitive"] = ints(permute(ops_from_flag(af.flag), [&] {
                      // ops_from_flag works in adapted coordinates; undo the permutation.
                      std::vector<int> inv(af.permutation.size());
                      for (std::size_t k = 0; k < inv.size(); ++k) inv[af.permutation[k]] = static_cast<int>(k);
                      return inv;
                    }()).weights());
    results.push_back(r);
  }
  doc["results"] = results;
  os << doc.dump(2) << '\n';
  return 0;
}

int cmd_kempf(const Options& o, std::ostream& os) {
  ProblemFile p = load(o.input);
  const SparseTensor& w = need_tensor(p);
  ordered_json doc = header("kempf");
  InstabilityResult torus = torus_instability(w);
  int code = 0;
  if (o.restarts >= 0) {
    SearchResult sr = kempf_search(w, o.restarts, o.seed);
    doc["result"] = instability_json(sr.best);
    doc["search"] = ordered_json{{"restarts", o.restarts}, {"seed", o.seed},        {"restart", sr.restart},
                                 {"g", matrix_json(sr.g)}, {"heuristic", sr.heuristic}};
  } else {
    doc["result"] = instability_json(torus);
  }
  doc["torus_polystable"] = torus_polystable(w);
  if (o.brute_box > 0) {
    auto bf = brute_force_instability(w, o.brute_box);
    ordered_json b;
    b["box"] = o.brute_box;
    bool agrees = true;
    if (!bf) {
      b["found"] = false;
      agrees = torus.verdict == TorusVerdict::torus_semistable;
    } else {
      b["found"] = true;
      b["lambda"] = ints(bf->lambda.weights());
      b["q"] = bf->q;
      b["norm_sq"] = rat(bf->norm_sq);
      if (torus.verdict != TorusVerdict::unstable) {
        agrees = false;
      } else {
        int cmp = compare_nu(bf->q, bf->norm_sq, torus.q, norm_sq(*torus.lambda_star));
        std::int64_t sup = 0;
        for (auto x : torus.lambda_star->weights()) sup = std::max<std::int64_t>(sup, x < 0 ? -x : x);
        if (cmp < 0) agrees = false;                                       // brute force beat the exact optimum
        if (sup <= o.brute_box && !(bf->lambda == *torus.lambda_star)) agrees = false;
      }
    }
    b["agrees"] = agrees;
    doc["brute_force"] = b;
    if (!agrees) code = 3;
  }
  os << doc.dump(2) << '\n';
  return code;
}

int cmd_char(const Options& o, std::ostream& os) {
  ProblemFile p = load(o.input);
  ordered_json doc = header("char");
  ordered_json results = ordered_json::array();
  for (const auto& lambda : p.lambdas) {
    InstabilityCharacter ch = instability_character(lambda);
    ordered_json r;
    r["lambda"] = ints(lambda.weights());
    r["blocks"] = blocks_json(ch.blocks);
    r["permutation"] = one_based(ch.permutation);
    r["expanded"] = rats(ch.expand());
    if (p.tensor) {
      std::int64_t m = mu(lambda, *p.tensor);
      if (m < 0) {
        ChiStar cs = chi_star(lambda, *p.tensor);
        r["chi_star"] = ordered_json{{"q", cs.q}, {"scaled_exponents", rats(cs.scaled_exponents)}};
      } else {
        r["chi_star"] = nullptr;
        r["mu"] = m;
      }
    }
    results.push_back(r);
  }
  doc["results"] = results;
  os << doc.dump(2) << '\n';
  return 0;
}

DecoratedObject decorated_from(const ProblemFile& p) {
  if (!p.ambient || !p.sheaf) throw InputError("check needs 'ambient' and 'sheaf'");
  DecoratedObject obj{*p.ambient, *p.sheaf, need_tensor(p), p.filtrations};
  obj.validate();
  return obj;
}

int cmd_check(const Options& o, std::ostream& os) {
  ProblemFile p = load(o.input);
  DecoratedObject obj = decorated_from(p);
  ordered_json doc = header("check");
  doc["mode"] = o.mode;
  doc["note"] = "verdicts are relative to the supplied candidate filtrations";
  ordered_json cands = ordered_json::array();
  for (const auto& c : obj.candidates) {
    ordered_json entry;
    entry["mu"] = rat(mu_filtration_tensor(c.flag, obj.tensor));
    entry["M"] = rats(M_poly(c.filtration).coeffs());
    entry["L"] = rat(L_slope(c.filtration));
    cands.push_back(entry);
  }
  doc["candidates"] = cands;
  if (o.mode == "decorated") {
    if (!p.epsilon) throw InputError("--mode decorated needs 'epsilon'");
    DecoratedVerdict v = check_decorated(obj, *p.epsilon);
    doc["verdict"] = verdict_json(v.verdict);
    doc["epsilon_degree_exact"] = v.epsilon_degree_exact;
    doc["nu"] = rats(v.nus);
    ordered_json values = ordered_json::array();
    for (const auto& poly : v.values) values.push_back(rats(poly.coeffs()));
    doc["M_plus_eps_nu"] = values;
  } else if (o.mode == "honest") {
    doc["verdict"] = verdict_json(check_honest(obj));
  } else if (o.mode == "slope") {
    doc["verdict"] = verdict_json(check_slope(obj));
  } else if (o.mode == "chain") {
    ChainReport rep = implication_report(obj);
    doc["chain"] = ordered_json{{"slope_stable", rep.slope_stable},
                                {"stable", rep.stable},
                                {"semistable", rep.semistable},
                                {"slope_semistable", rep.slope_semistable},
                                {"monotone", rep.monotone}};
    ordered_json coeffs = ordered_json::array();
    for (const auto& cc : rep.coefficients) {
      coeffs.push_back(ordered_json{{"candidate", cc.candidate},
                                    {"scaled_coefficient", rat(cc.scaled_coefficient)},
                                    {"L", rat(cc.L)},
                                    {"equal", cc.equal}});
    }
    doc["coefficient_checks"] = coeffs;
  } else {
    throw InputError("unknown mode '" + o.mode + "'");
  }
  os << doc.dump(2) << '\n';
  return 0;
}

int cmd_homogenize(const Options& o, std::ostream& os) {
  ProblemFile p = load(o.input);
  const SparseTensor& w = need_tensor(p);
  HomogenizationPlan plan = choose_omega(w.type(), o.multiplier);
  ordered_json doc = header("homogenize");
  ordered_json tuples = ordered_json::array();
  for (const auto& t : plan.tuples) tuples.push_back(ints(t));
  doc["plan"] = ordered_json{{"v_values", ints(plan.v_values)},
                             {"omega", plan.omega},
                             {"multiplier", plan.multiplier},
                             {"tuples", tuples},
                             {"target", ordered_json{{"A", plan.target.A},
                                                     {"B", plan.target.B.get_str()},
                                                     {"C", plan.target.C}}}};
  int code = 0;
  ordered_json flags = ordered_json::array();
  for (const auto& f : p.flags) {
    NuValue nu = nu_filtration(f, w, plan);
    SignAudit audit = sign_equiv_check(f, w, plan);
    ordered_json entry;
    entry["flag"] = flag_json(f);
    entry["mu"] = rat(audit.mu);
    entry["nu"] = rat(nu.nu);
    entry["nu_explicit"] = nu.explicit_value ? ordered_json(to_string(*nu.explicit_value)) : ordered_json(nullptr);
    entry["sign_mu"] = audit.sign_mu;
    entry["sign_nu"] = audit.sign_nu;
    entry["agree"] = audit.agree;
    if (!audit.agree) code = 3;
    flags.push_back(entry);
  }
  doc["flags"] = flags;
  SaturationAudit sat = saturation_bound_check(w, plan);
  doc["saturation"] = ordered_json{
      {"max_mu", rat(sat.max_mu)}, {"bound", rat(sat.bound)}, {"ok", sat.ok}, {"per_rank", rats(sat.per_rank)}};
  if (!sat.ok) code = 3;
  os << doc.dump(2) << '\n';
  return code;
}

int cmd_oracle(const Options& o, std::ostream& os) {
  ProblemFile p = load(o.input);
  const SparseTensor& w = need_tensor(p);
  ordered_json doc = header("oracle");
  ordered_json orbits = ordered_json::array();
  int code = 0;
  for (const auto& lambda : p.lambdas) {
    LaurentTensor lt = laurent_orbit(lambda, w);
    ordered_json pieces = ordered_json::array();
    for (const auto& [e, piece] : lt.pieces) {
      pieces.push_back(ordered_json{{"exponent", e}, {"terms", tensor_terms_to_json(piece)}});
    }
    bool matches = lt.top_exponent() == mu(lambda, w);
    if (!matches) code = 3;
    orbits.push_back(ordered_json{{"lambda", ints(lambda.weights())},
                                  {"pieces", pieces},
                                  {"top_exponent", lt.top_exponent()},
                                  {"limit_exists", lt.limit_exists()},
                                  {"matches_mu", matches}});
  }
  doc["laurent"] = orbits;
  const int box = o.brute_box > 0 ? o.brute_box : 3;
  auto bf = brute_force_instability(w, box);
  if (bf) {
    doc["brute_force"] = ordered_json{{"box", box},
                                      {"found", true},
                                      {"lambda", ints(bf->lambda.weights())},
                                      {"q", bf->q},
                                      {"norm_sq", rat(bf->norm_sq)},
                                      {"optima", bf->optima.size()}};
  } else {
    doc["brute_force"] = ordered_json{{"box", box}, {"found", false}};
  }
  os << doc.dump(2) << '\n';
  return code;
}

ProblemFile example_problem(const SparseTensor& w, std::vector<OnePS> lambdas) {
  ProblemFile p;
  p.tensor = w;
  p.lambdas = std::move(lambdas);
  return p;
}

// SO(2) on a rational curve: P_O = x + 1, A of rank 2 and degree 0, and the
// isotropic line of the hyperbolic form as the only reduction.
ProblemFile so2_object() {
  ProblemFile p = example_problem(orthogonal_example(2, FormBasis::hyperbolic), {OnePS({1, -1})});
  AmbientSpace x{1, Polynomial({Rational(1), Rational(1)})};
  p.ambient = x;
  p.sheaf = SheafData::from_hilbert(x, 2, Polynomial({Rational(2), Rational(2)}));
  WeightedFiltration f{{SheafData::from_hilbert(x, 1, Polynomial({Rational(1), Rational(1)}))}, {Rational(1)}, *p.sheaf};
  p.filtrations.push_back({f, flag_for_filtration(f)});
  p.epsilon = Polynomial({Rational(1)});
  return p;
}

int cmd_examples(const Options& o, std::ostream& os) {
  std::vector<std::pair<std::string, ProblemFile>> files;
  files.emplace_back("orthogonal_r2_hyperbolic.json", so2_object());
  files.emplace_back("orthogonal_r3_hyperbolic.json",
                     example_problem(orthogonal_example(3, FormBasis::hyperbolic), {OnePS({1, 0, -1})}));
  files.emplace_back("orthogonal_r2_standard.json",
                     example_problem(orthogonal_example(2, FormBasis::standard), {OnePS({1, -1})}));
  files.emplace_back("adjoint_sl2.json", example_problem(adjoint_example(), {adjoint_coroot()}));

  ordered_json doc = header("examples");
  if (o.out_dir.empty()) {
    ordered_json contents;
    for (const auto& [name, problem] : files) contents[name] = problem_to_json(problem);
    doc["files"] = contents;
  } else {
    std::filesystem::create_directories(o.out_dir);
    ordered_json written = ordered_json::array();
    for (const auto& [name, problem] : files) {
      std::filesystem::path path = std::filesystem::path(o.out_dir) / name;
      std::ofstream out(path);
      if (!out) throw InputError("cannot write '" + path.string() + "'");
      out << problem_to_json(problem).dump(2) << '\n';
      written.push_back(name);
    }
    doc["written"] = written;
  }
  os << doc.dump(2) << '\n';
  return 0;
}

}  // namespace

ProblemFile parse_problem(const json& doc) {
  try {
    ProblemFile p;
    p.version = require(doc, "version").get<std::string>();
    if (p.version != kFormatVersion) throw InputError("unsupported version '" + p.version + "'");

    if (doc.contains("ambient")) {
      const json& a = doc.at("ambient");
      AmbientSpace x{int_of(require(a, "dim")), polynomial_of(require(a, "hilbert"))};
      x.validate();
      p.ambient = x;
    }
    std::optional<DecType> type;
    if (doc.contains("dec_type")) {
      const json& t = doc.at("dec_type");
      std::vector<DecComponent> comps;
      for (const auto& c : require(t, "components")) {
        comps.push_back({int_of(require(c, "a")), c.contains("b") ? int_of(c.at("b")) : 1,
                         c.contains("c") ? int_of(c.at("c")) : 0});
      }
      type = DecType(int_of(require(t, "r")), std::move(comps));
    }
    if (doc.contains("tensor")) {
      if (!type) throw InputError("'tensor' requires 'dec_type'");
      std::vector<Term> terms;
      for (const auto& t : doc.at("tensor")) {
        TermKey key;
        key.component = int_of(require(t, "component")) - 1;
        key.copy = (t.contains("copy") ? int_of(t.at("copy")) : 1) - 1;
        for (int k : ints_of(require(t, "index"))) key.index.push_back(k - 1);
        terms.push_back({key, rational_of(require(t, "coeff"))});
      }
      p.tensor = SparseTensor::from_terms(*type, terms);
    }
    if (doc.contains("lambdas")) {
      for (const auto& l : doc.at("lambdas")) {
        IntVec w;
        for (const auto& x : l) {
          if (!x.is_number_integer()) throw InputError("lambda weights must be integers");
          w.push_back(x.get<std::int64_t>());
        }
        if (p.tensor && static_cast<int>(w.size()) != p.tensor->r()) throw InputError("lambda length must equal r");
        p.lambdas.emplace_back(std::move(w));
      }
    }
    if (doc.contains("sheaf")) {
      if (!p.ambient) throw InputError("'sheaf' requires 'ambient'");
      p.sheaf = sheaf_of(doc.at("sheaf"), *p.ambient);
    }
    if (doc.contains("filtrations")) {
      if (!p.sheaf) throw InputError("'filtrations' require 'sheaf'");
      for (const auto& f : doc.at("filtrations")) {
        WeightedFiltration filt;
        filt.total = *p.sheaf;
        filt.alphas = rationals_of(require(f, "alphas"));
        for (const auto& s : require(f, "steps")) filt.steps.push_back(sheaf_of(s, *p.ambient));
        filt.validate();
        WeightedFlag flag = f.contains("flag") ? flag_of(f.at("flag"), p.sheaf->rank) : flag_for_filtration(filt);
        p.filtrations.push_back({std::move(filt), std::move(flag)});
      }
    }
    if (doc.contains("flags")) {
      int n = p.tensor ? p.tensor->r() : 0;
      for (const auto& f : doc.at("flags")) p.flags.push_back(flag_of(f, n));
    }
    if (doc.contains("epsilon")) p.epsilon = polynomial_of(doc.at("epsilon"));
    return p;
  } catch (const json::exception& e) {
    throw InputError(std::string("schema error: ") + e.what());
  }
}

ordered_json tensor_terms_to_json(const SparseTensor& w) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : w.terms()) {
    ordered_json entry;
    entry["component"] = t.key.component + 1;
    entry["copy"] = t.key.copy + 1;
    entry["index"] = one_based(t.key.index);
    entry["coeff"] = to_string(t.coeff);
    terms.push_back(entry);
  }
  return terms;
}

ordered_json problem_to_json(const ProblemFile& p) {
  ordered_json doc;
  doc["version"] = p.version;
  if (p.ambient) doc["ambient"] = ordered_json{{"dim", p.ambient->dim}, {"hilbert", rats(p.ambient->structure_hilbert.coeffs())}};
  if (p.tensor) {
    doc["dec_type"] = dec_type_json(p.tensor->type());
    doc["tensor"] = tensor_terms_to_json(*p.tensor);
  }
  if (!p.lambdas.empty()) {
    ordered_json ls = ordered_json::array();
    for (const auto& l : p.lambdas) ls.push_back(ints(l.weights()));
    doc["lambdas"] = ls;
  }
  if (p.sheaf) doc["sheaf"] = ordered_json{{"rank", p.sheaf->rank}, {"hilbert", rats(p.sheaf->hilbert.coeffs())}};
  if (!p.filtrations.empty()) {
    ordered_json fs = ordered_json::array();
    for (const auto& c : p.filtrations) {
      ordered_json steps = ordered_json::array();
      for (const auto& s : c.filtration.steps) {
        steps.push_back(ordered_json{{"rank", s.rank}, {"hilbert", rats(s.hilbert.coeffs())}});
      }
      ordered_json flag{{"dims", c.flag.dims}, {"alphas", rats(c.flag.alphas)}};
      fs.push_back(ordered_json{{"alphas", rats(c.filtration.alphas)}, {"steps", steps}, {"flag", flag}});
    }
    doc["filtrations"] = fs;
  }
  if (!p.flags.empty()) {
    ordered_json fs = ordered_json::array();
    for (const auto& f : p.flags) fs.push_back(ordered_json{{"dims", f.dims}, {"alphas", rats(f.alphas)}});
    doc["flags"] = fs;
  }
  if (p.epsilon) doc["epsilon"] = rats(p.epsilon->coeffs());
  return doc;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GIT semistability toolkit", "gitstab"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) { sub->add_option("input", o.input, "problem file (gitstab/1 JSON)")->required(); };

  auto* mu_cmd = app.add_subcommand("mu", "Hilbert-Mumford values mu(lambda, w) for every lambda");
  add_input(mu_cmd);
  auto* flag_cmd = app.add_subcommand("flag", "weighted flags of the listed cocharacters");
  add_input(flag_cmd);
  auto* kempf_cmd = app.add_subcommand("kempf", "optimal destabilizing cocharacter in the diagonal torus");
  add_input(kempf_cmd);
  kempf_cmd->add_option("--restarts", o.restarts, "seeded multi-start search over conjugate tori");
  kempf_cmd->add_option("--seed", o.seed, "seed for --restarts");
  kempf_cmd->add_option("--brute-box", o.brute_box, "cross-check against exhaustive search in this box");
  auto* char_cmd = app.add_subcommand("char", "instability character l_T(lambda) and chi_*");
  add_input(char_cmd);
  auto* check_cmd = app.add_subcommand("check", "semistability verdicts over candidate filtrations");
  add_input(check_cmd);
  check_cmd->add_option("--mode", o.mode, "decorated | honest | slope | chain")
      ->check(CLI::IsMember({"decorated", "honest", "slope", "chain"}));
  auto* hom_cmd = app.add_subcommand("homogenize", "homogenization plan, nu and sign audit");
  add_input(hom_cmd);
  hom_cmd->add_option("--k", o.multiplier, "omega = k * lcm(v)")->check(CLI::PositiveNumber);
  auto* oracle_cmd = app.add_subcommand("oracle", "Laurent orbits and brute-force instability dumps");
  add_input(oracle_cmd);
  oracle_cmd->add_option("--brute-box", o.brute_box, "box for the brute-force search (default 3)");
  auto* ex_cmd = app.add_subcommand("examples", "emit the orthogonal and adjoint example problem files");
  ex_cmd->add_option("--out", o.out_dir, "directory to write the files into");

  std::vector<std::string> argv_storage{"gitstab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (mu_cmd->parsed()) return cmd_mu(o, out);
    if (flag_cmd->parsed()) return cmd_flag(o, out);
    if (kempf_cmd->parsed()) return cmd_kempf(o, out);
    if (char_cmd->parsed()) return cmd_char(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out);
    if (hom_cmd->parsed()) return cmd_homogenize(o, out);
    if (oracle_cmd->parsed()) return cmd_oracle(o, out);
    if (ex_cmd->parsed()) return cmd_examples(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const CertificateError& e) {
    err << "internal certificate failure: " << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace gitstab
