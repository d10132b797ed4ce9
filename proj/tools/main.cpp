#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "striphyp/almostanalytic.hpp"
#include "striphyp/specparse.hpp"

using json = nlohmann::json;
using namespace striphyp;

namespace {

constexpr const char* kSchemaVersion = "1";
const std::complex<double> kI(0.0, 1.0);

struct Options {
  std::string format = "json";
  std::string config_path;
  unsigned seed = 0;
  double abs_tol = 1e-8;
  double pair_tol = 1e-6;
  GridConfig grid;
};

Options g_opts;

void load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      if (a == std::string::npos) return std::string();
      size_t b = s.find_last_not_of(" \t");
      return s.substr(a, b - a + 1);
    };
    std::string key = strip(line.substr(0, eq));
    std::string val = strip(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key == "abs_tol") g_opts.abs_tol = std::stod(val);
    else if (key == "pair_tol") g_opts.pair_tol = std::stod(val);
    else if (key == "grid_t_max") g_opts.grid.t_max = std::stod(val);
    else if (key == "grid_points") g_opts.grid.points = std::stoi(val);
    else if (key == "grid_doublings") g_opts.grid.doublings = std::stoi(val);
    else throw ParseError("unknown config key: " + key);
  }
}

json complex_json(complex z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

void emit(json record) {
  record["schema"] = kSchemaVersion;
  std::cout << record.dump() << "\n";
}

void emit_csv_row(const std::vector<double>& cols) {
  std::ostringstream os;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (i) os << ",";
    os << cols[i];
  }
  std::cout << os.str() << "\n";
}

json verdict_json(const ConditionVerdict& v) {
  json w = json::object();
  for (const auto& [k, val] : v.witness) w[k] = val;
  return json{{"status", to_string(v.status)},
              {"witness", w},
              {"evidence_range", v.evidence_range}};
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stod(item));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<complex> parse_complex_list(const std::string& text) {
  std::vector<complex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_complex(item));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"weighted analytic function spaces on strips: checks, "
               "constructions, pairings"};
  app.require_subcommand(1);
  // long-only help so the --h option of several subcommands stays free
  app.set_help_flag("--help", "print usage");
  app.add_option("--format", g_opts.format, "json (lines) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--config", g_opts.config_path, "flat key = value overrides");
  app.add_option("--seed", g_opts.seed, "seed for randomized grid jitter");

  // check-weight
  std::string cw_spec, cw_cond;
  double cw_mu = 1.0;
  auto* cw = app.add_subcommand("check-weight", "growth condition verdict");
  cw->set_help_flag("--help", "print usage");
  cw->add_option("spec", cw_spec)->required();
  cw->add_option("--cond", cw_cond)->required();
  cw->add_option("--mu", cw_mu, "rate for the quantified epsilon check");

  // check-seq
  std::string cs_spec, cs_cond;
  auto* cs = app.add_subcommand("check-seq", "sequence condition verdict");
  cs->set_help_flag("--help", "print usage");
  cs->add_option("spec", cs_spec)->required();
  cs->add_option("--cond", cs_cond)->required();

  // classify
  std::string cl_spec;
  auto* cl = app.add_subcommand("classify", "non-triviality of the space pair");
  cl->set_help_flag("--help", "print usage");
  cl->add_option("spec", cl_spec)->required();

  // assoc
  std::string as_spec, as_ts;
  auto* as = app.add_subcommand("assoc", "associated function values");
  as->set_help_flag("--help", "print usage");
  as->add_option("spec", as_spec)->required();
  as->add_option("--t", as_ts)->required();

  // minorant
  std::string mi_spec, mi_mode = "dilate";
  double mi_lambda = 1.0, mi_h = 1.0;
  bool mi_verify = false;
  auto* mi = app.add_subcommand("minorant", "analytic minorant with sandwich");
  mi->set_help_flag("--help", "print usage");
  mi->add_option("spec", mi_spec)->required();
  mi->add_option("--lambda", mi_lambda);
  mi->add_option("--h", mi_h);
  mi->add_option("--mode", mi_mode)->check(CLI::IsMember({"dilate", "subadditive"}));
  mi->add_flag("--verify", mi_verify, "check the sandwich on a grid");

  // norm
  std::string no_phi, no_w;
  double no_h = 1.0, no_lambda = 1.0;
  auto* no = app.add_subcommand("norm", "weighted sup norm on the strip");
  no->set_help_flag("--help", "print usage");
  no->add_option("testfn", no_phi)->required();
  no->add_option("weight", no_w)->required();
  no->add_option("--h", no_h);
  no->add_option("--lambda", no_lambda);

  // represent
  std::string re_f, re_mult, re_zs = "0+1i";
  double re_b = 0.5, re_R = 100.0;
  auto* re = app.add_subcommand("represent", "Cauchy-transform representation");
  re->set_help_flag("--help", "print usage");
  re->add_option("functional", re_f)->required();
  re->add_option("--mult", re_mult, "zero-free multiplier weight");
  re->add_option("--b", re_b);
  re->add_option("--R", re_R);
  re->add_option("--z", re_zs, "evaluation points");

  // pair
  std::string pa_f, pa_phi;
  double pa_k = 0.5;
  auto* pa = app.add_subcommand("pair", "boundary-value pairing");
  pa->set_help_flag("--help", "print usage");
  pa->add_option("functional", pa_f)->required();
  pa->add_option("testfn", pa_phi)->required();
  pa->add_option("--k", pa_k);

  // fourier
  std::string fo_phi, fo_xis;
  double fo_k = 0.5;
  auto* fo = app.add_subcommand("fourier", "Fourier transform by line shift");
  fo->set_help_flag("--help", "print usage");
  fo->add_option("testfn", fo_phi)->required();
  fo->add_option("--xi", fo_xis)->required();
  fo->add_option("--k", fo_k);

  // laplace
  std::string la_f, la_zetas;
  double la_b = 0.5;
  auto* la = app.add_subcommand("laplace", "Laplace transform of a functional");
  la->set_help_flag("--help", "print usage");
  la->add_option("functional", la_f)->required();
  la->add_option("--zeta", la_zetas)->required();
  la->add_option("--b", la_b);

  // pwcheck
  std::string pw_file, pw_weight;
  double pw_a = 0.0, pw_h = 0.0, pw_lambda = 0.0;
  auto* pw = app.add_subcommand("pwcheck", "Paley-Wiener-type bound verdict");
  pw->set_help_flag("--help", "print usage");
  pw->add_option("file", pw_file, "file with a functional spec")->required();
  pw->add_option("--a", pw_a);
  pw->add_option("--h", pw_h);
  pw->add_option("--lambda", pw_lambda);
  pw->add_option("--weight", pw_weight);

  // extend
  std::string ex_phi, ex_w;
  double ex_k = 0.5;
  bool ex_verify = false;
  auto* ex = app.add_subcommand("extend", "almost-analytic extension");
  ex->set_help_flag("--help", "print usage");
  ex->add_option("testfn", ex_phi)->required();
  ex->add_option("weight", ex_w)->required();
  ex->add_option("--k", ex_k);
  ex->add_flag("--verify", ex_verify, "check the extension bounds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);  // CLI11 prints usage; exit code 1 on errors
  }

  if (!g_opts.config_path.empty()) load_config(g_opts.config_path);

  if (*cw) {
    Weight w = parse_weight(cw_spec);
    ConditionVerdict v;
    std::string cond_echo = cw_cond;
    if (cw_cond == "epsilon")
      v = check_condition_epsilon(w, cw_mu, g_opts.grid);
    else
      v = check_condition(w, parse_weight_cond(cw_cond), g_opts.grid);
    emit({{"command", "check-weight"},
          {"weight", w.spec()},
          {"cond", cond_echo},
          {"mu", cw_mu},
          {"verdict", verdict_json(v)},
          {"grid_t_max", g_opts.grid.t_max}});
    return 0;
  }
  if (*cs) {
    WeightSequence M = parse_sequence(cs_spec);
    ConditionVerdict v = check_seq_condition(M, parse_seq_cond(cs_cond));
    emit({{"command", "check-seq"},
          {"sequence", M.spec()},
          {"cond", cs_cond},
          {"verdict", verdict_json(v)}});
    return 0;
  }
  if (*cl) {
    WeightSequence M = parse_sequence(cl_spec);
    NontrivialityReport rep = nontriviality_classify(M);
    emit({{"command", "classify"},
          {"sequence", M.spec()},
          {"status", to_string(rep.label)},
          {"symbolic", rep.symbolic},
          {"prefix_sup", rep.prefix_sup}});
    return 0;
  }
  if (*as) {
    WeightSequence M = parse_sequence(as_spec);
    if (g_opts.format == "csv") std::cout << "x,value\n";
    for (double t : parse_list(as_ts)) {
      double v = associated_function(M, t);
      if (g_opts.format == "csv")
        emit_csv_row({t, v});
      else
        emit({{"command", "assoc"},
              {"sequence", M.spec()},
              {"t", t},
              {"value", v},
              {"tolerance", 1e-9}});
    }
    return 0;
  }
  if (*mi) {
    Weight w = parse_weight(mi_spec);
    MinorantMode mode = mi_mode == "dilate" ? MinorantMode::Dilate
                                            : MinorantMode::Subadditive;
    AnalyticMinorant F = build_minorant(w, mi_lambda, mi_h, mode);
    json rec{{"command", "minorant"},
             {"weight", w.spec()},
             {"lambda", mi_lambda},
             {"h", mi_h},
             {"mode", mi_mode},
             {"log_bound_constant", F.log_bound_constant()}};
    if (mi_verify) {
      bool ok = true;
      double worst = 0.0;
      for (int i = 0; i < 20 && ok; ++i) {
        double x = -10.0 + 20.0 * i / 19.0;
        for (int j = 0; j < 8; ++j) {
          double y = -mi_h * 0.9 + 1.8 * mi_h * j / 7.0;
          double logF = F.U(x, y);
          double lo = F.lower_log_bound(x);
          double hi = F.upper_log_bound(x) + F.log_bound_constant();
          worst = std::max({worst, lo - logF, logF - hi});
        }
      }
      ok = worst <= 1e-8;
      rec["sandwich_ok"] = ok;
      rec["sandwich_excess"] = worst;
    }
    emit(rec);
    return 0;
  }
  if (*no) {
    TestFunction phi = parse_test_function(no_phi);
    Weight w = parse_weight(no_w);
    SpaceParams p{w, no_h, no_lambda, Flavor::Beurling, MinorantMode::Dilate};
    double val = strip_norm(phi, p, g_opts.grid);
    emit({{"command", "norm"},
          {"testfn", phi.spec()},
          {"weight", w.spec()},
          {"h", no_h},
          {"lambda", no_lambda},
          {"value", val},
          {"finite", std::isfinite(val)},
          {"grid_points", g_opts.grid.points}});
    return 0;
  }
  if (*re) {
    Functional f = parse_functional(re_f);
    std::shared_ptr<const AnalyticMinorant> P;
    if (!re_mult.empty())
      P = std::make_shared<AnalyticMinorant>(
          build_minorant(parse_weight(re_mult), 1.0, re_b * 4.0,
                         MinorantMode::Dilate));
    AnalyticRep F = cauchy_represent(f, P, re_b, re_R);
    if (g_opts.format == "csv") std::cout << "x,value\n";
    for (complex z : parse_complex_list(re_zs)) {
      complex v = F(z);
      if (g_opts.format == "csv")
        emit_csv_row({z.real(), std::abs(v)});
      else
        emit({{"command", "represent"},
              {"functional", re_f},
              {"b", re_b},
              {"R", re_R},
              {"z", complex_json(z)},
              {"value", complex_json(v)},
              {"abs", std::abs(v)}});
    }
    return 0;
  }
  if (*pa) {
    Functional f = parse_functional(pa_f);
    TestFunction phi = parse_test_function(pa_phi);
    AnalyticRep F = cauchy_represent(f, nullptr, pa_k * 0.5, 1e9);
    ContourSpec c;
    c.k = pa_k;
    complex v = boundary_pair(F, phi, c);
    complex direct = f.apply(phi);
    emit({{"command", "pair"},
          {"functional", pa_f},
          {"testfn", phi.spec()},
          {"k", pa_k},
          {"value", complex_json(v)},
          {"direct", complex_json(direct)},
          {"tolerance", g_opts.pair_tol},
          {"residual", std::abs(v - direct)}});
    return 0;
  }
  if (*fo) {
    TestFunction phi = parse_test_function(fo_phi);
    if (g_opts.format == "csv") std::cout << "x,value\n";
    for (double xi : parse_list(fo_xis)) {
      complex v = fourier_strip(phi, fo_k, xi);
      if (g_opts.format == "csv")
        emit_csv_row({xi, std::abs(v)});
      else
        emit({{"command", "fourier"},
              {"testfn", phi.spec()},
              {"k", fo_k},
              {"xi", xi},
              {"value", complex_json(v)},
              {"tolerance", g_opts.abs_tol}});
    }
    return 0;
  }
  if (*la) {
    Functional f = parse_functional(la_f);
    AnalyticRep F = cauchy_represent(f, nullptr, la_b * 0.5, 1e9);
    ContourSpec c;
    c.k = la_b;
    for (complex zeta : parse_complex_list(la_zetas)) {
      complex v = laplace_transform(F, zeta, c);
      emit({{"command", "laplace"},
            {"functional", la_f},
            {"b", la_b},
            {"zeta", complex_json(zeta)},
            {"value", complex_json(v)},
            {"tolerance", g_opts.abs_tol}});
    }
    return 0;
  }
  if (*pw) {
    std::ifstream in(pw_file);
    if (!in) throw ParseError("cannot open: " + pw_file);
    std::string spec((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    while (!spec.empty() && (spec.back() == '\n' || spec.back() == '\r'))
      spec.pop_back();
    Functional f = parse_functional(spec);
    if (f.density())
      throw std::invalid_argument("pwcheck: atomic functionals only");
    // closed-form Laplace image of the atoms
    auto atoms = f.atoms();
    auto G = [atoms](complex zeta) {
      complex total = 0.0;
      for (const Atom& a : atoms)
        total += a.coefficient * std::pow(kI * zeta, a.order) *
                 std::exp(kI * a.location * zeta);
      return total / (2.0 * std::numbers::pi);
    };
    LaplaceBoundSpec bs;
    bs.a = pw_a;
    bs.h = pw_h;
    bs.lambda = pw_lambda;
    if (!pw_weight.empty()) bs.w = parse_weight(pw_weight);
    bs.region = PWRegion::UpperHalfPlane;
    ConditionVerdict v = paley_wiener_check(G, bs, g_opts.grid);
    emit({{"command", "pwcheck"},
          {"functional", spec},
          {"a", pw_a},
          {"h", pw_h},
          {"lambda", pw_lambda},
          {"verdict", verdict_json(v)}});
    return 0;
  }
  if (*ex) {
    TestFunction phi = parse_test_function(ex_phi);
    Weight w = parse_weight(ex_w);
    AlmostAnalyticExt E = build_extension(phi, w, ex_k);
    json rec{{"command", "extend"},
             {"testfn", phi.spec()},
             {"weight", w.spec()},
             {"k", ex_k},
             {"psi_at_0", complex_json(E.psi(0.0))},
             {"psi_at_i", complex_json(E.psi(complex(0.0, 1.0)))}};
    if (ex_verify) {
      ConditionVerdict v = check_extension_bounds(E, Weight::linear());
      rec["bounds"] = verdict_json(v);
    }
    emit(rec);
    return 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  // parallelism cap honored for future threaded kernels; quadrature is
  // currently sequential, so this only validates the setting
  if (const char* th = std::getenv("STRIPHYP_THREADS")) {
    int n = std::atoi(th);
    if (n < 1) {
      std::cerr << "STRIPHYP_THREADS must be a positive integer\n";
      return 1;
    }
  }
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "did not converge: " << e.what() << "\n";
    return 3;
  }
}
