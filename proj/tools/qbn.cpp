// qbn: compute, verify and export maximal Newton points and the quantum
// Bruhat graph for a chosen finite root system.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qbn/affine.hpp"
#include "qbn/maxnewton.hpp"
#include "qbn/polygon.hpp"
#include "qbn/qbg.hpp"
#include "qbn/root_system.hpp"
#include "qbn/weyl.hpp"

using namespace qbn;

namespace {

struct Config {
  std::string type = "A";
  int rank = 2;
  std::string lambda, pairings, lambda_eps;
  std::string v_word, w_word;
  std::string from_word, to_word;
  std::string format = "text";
  std::size_t budget_elements = 10'000'000;
  std::size_t budget_paths = 100'000;
};

std::vector<Rat> parse_rats(const std::string& s) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto slash = tok.find('/');
    if (slash == std::string::npos)
      out.push_back(Rat(std::stoll(tok)));
    else
      out.push_back(Rat(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1))));
  }
  return out;
}

IntVec parse_ints(const std::string& s) {
  IntVec out;
  for (const Rat& r : parse_rats(s)) {
    if (!r.is_integer()) throw std::invalid_argument("expected integers: " + s);
    out.push_back(r.num);
  }
  return out;
}

/// Solve C x = p over the rationals (C = Cartan matrix, full rank).
std::vector<Rat> solve_cartan(const RootSystem& rs, const std::vector<Rat>& p) {
  int n = rs.rank();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(rs.cartan()[i][j]);
    m[i][n] = p[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col].sign() != 0) { piv = r; break; }
    if (piv < 0) throw std::logic_error("singular Cartan matrix");
    std::swap(m[col], m[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].sign() == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int cc = col; cc <= n; ++cc) m[r][cc] -= f * m[col][cc];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

/// Resolve lambda (simple-coroot coordinates) from whichever flag was given.
IntVec resolve_lambda(const Config& cfg, const RootSystem& rs) {
  int given = !cfg.lambda.empty() + !cfg.pairings.empty() + !cfg.lambda_eps.empty();
  if (given != 1)
    throw std::invalid_argument("give exactly one of --lambda, --pairings, --lambda-eps");
  if (!cfg.lambda.empty()) {
    IntVec lam = parse_ints(cfg.lambda);
    if ((int)lam.size() != rs.rank()) throw std::invalid_argument("--lambda: wrong length");
    return lam;
  }
  if (!cfg.lambda_eps.empty()) {
    RatVec eps(parse_rats(cfg.lambda_eps), Basis::Epsilon);
    RatVec lam = rs.eps_to_coroot(eps);
    IntVec out;
    for (const Rat& r : lam.c) {
      if (!r.is_integer())
        throw std::invalid_argument("--lambda-eps: not in the coroot lattice");
      out.push_back(r.num);
    }
    return out;
  }
  std::vector<Rat> p = parse_rats(cfg.pairings);
  if (p.size() == 1 && rs.rank() > 1) p.assign((std::size_t)rs.rank(), p[0]);
  if ((int)p.size() != rs.rank()) throw std::invalid_argument("--pairings: wrong length");
  std::vector<Rat> x = solve_cartan(rs, p);
  IntVec out;
  for (const Rat& r : x) {
    if (!r.is_integer())
      throw std::invalid_argument(
          "--pairings: implied coweight is not in the coroot lattice");
    out.push_back(r.num);
  }
  return out;
}

std::string fmt_vec(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string fmt_vec(const RatVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

WeylElt elt_from(const RootSystem& rs, const std::string& word) {
  return from_word(rs, parse_word(word == "e" ? "" : word, rs.rank()));
}

void apply_env_budget(Config& cfg) {
  if (const char* env = std::getenv("NEWTON_QBG_BUDGET"))
    cfg.budget_elements = (std::size_t)std::stoull(env);
}

std::string path_str(const WeylGroup& wg, const QbgPath& p) {
  std::ostringstream os;
  os << word_str(wg.canonical_word(p.edges.empty() ? 0 : p.edges.front().source));
  for (const auto& e : p.edges) {
    os << " -" << (e.kind == EdgeKind::Up ? "a" : "A") << e.root_index + 1 << "-> "
       << word_str(wg.canonical_word(e.target));
  }
  return os.str();
}

int run_qbg(const Config& cfg, const std::string& sub) {
  RootSystem rs(parse_lie_type(cfg.type), cfg.rank);
  WeylGroup wg(rs, cfg.budget_elements);
  QuantumBruhatGraph qbg(wg);
  if (sub == "export") {
    std::cout << (cfg.format == "json" ? qbg.to_json() : qbg.to_dot());
    return 0;
  }
  std::size_t u = wg.index_of(elt_from(rs, cfg.from_word));
  std::size_t v = wg.index_of(elt_from(rs, cfg.to_word));
  if (sub == "path") {
    QbgPath p = qbg.min_path(u, v);
    std::cout << "length: " << p.length() << "\n"
              << "d: " << fmt_vec(p.weight) << "\n"
              << "monomial: " << monomial_str(p.weight) << "\n"
              << "path: " << (p.edges.empty() ? word_str(wg.canonical_word(u)) : path_str(wg, p))
              << "\n";
    return 0;
  }
  // all-paths
  auto paths = qbg.all_min_paths(u, v, cfg.budget_paths);
  std::cout << paths.size() << " minimal paths of length "
            << (paths.empty() ? 0 : paths.front().length()) << "\n";
  for (const auto& p : paths)
    std::cout << path_str(wg, p) << "  [d=" << fmt_vec(p.weight) << "]\n";
  return 0;
}

int run_newton_point(const Config& cfg) {
  RootSystem rs(parse_lie_type(cfg.type), cfg.rank);
  IntVec lam = resolve_lambda(cfg, rs);
  AffineElt x = make_affine(rs, lam, elt_from(rs, cfg.w_word));
  NewtonPoint nu = newton_point(rs, x);
  if (!cfg.lambda_eps.empty())
    std::cout << fmt_vec(rs.coroot_to_eps(nu.value)) << "\n";
  else
    std::cout << fmt_vec(nu.value) << "\n";
  return 0;
}

int run_newton_max(const Config& cfg, bool with_oracle) {
  RootSystem rs(parse_lie_type(cfg.type), cfg.rank);
  WeylGroup wg(rs);
  QuantumBruhatGraph qbg(wg);
  MaxNewton mn(qbg);
  MaxNewtonInput in{elt_from(rs, cfg.v_word), resolve_lambda(cfg, rs), elt_from(rs, cfg.w_word)};
  MaxNewtonResult res = mn.max_newton_formula(in);
  if (!with_oracle) {
    std::cout << mn.result_json(in, res) << "\n";
    return 0;
  }
  AffineElt x = mn.to_affine(in);
  std::size_t interval_size = downward_closure(rs, x, cfg.budget_elements).size();
  NewtonPoint oracle = mn.viehmann_oracle(x, cfg.budget_elements);
  std::cout << mn.result_json(in, res, &oracle, interval_size) << "\n";
  if (oracle == res.nu_x) {
    std::cout << "AGREE\n";
    return 0;
  }
  std::cout << "DISAGREE formula=[" << fmt_vec(res.nu_x.value) << "] oracle=["
            << fmt_vec(oracle.value) << "] interval_size=" << interval_size << "\n";
  return 1;
}

int run_newton_sweep(const Config& cfg) {
  RootSystem rs(parse_lie_type(cfg.type), cfg.rank);
  WeylGroup wg(rs);
  QuantumBruhatGraph qbg(wg);
  MaxNewton mn(qbg);
  IntVec lam = resolve_lambda(cfg, rs);
  if (!rs.is_regular(lam)) throw std::invalid_argument("sweep needs regular lambda");
  std::size_t agree = 0, total = 0, disagreements = 0;
  for (std::size_t vi = 0; vi < wg.size(); ++vi)
    for (std::size_t wi = 0; wi < wg.size(); ++wi) {
      MaxNewtonInput in{wg[vi], lam, wg[wi]};
      MaxNewtonResult res = mn.max_newton_formula(in);
      NewtonPoint oracle = mn.viehmann_oracle(mn.to_affine(in), cfg.budget_elements);
      ++total;
      if (oracle == res.nu_x) {
        ++agree;
      } else {
        ++disagreements;
        std::cerr << "DISAGREE v=" << word_str(wg.canonical_word(vi))
                  << " w=" << word_str(wg.canonical_word(wi))
                  << " formula=[" << fmt_vec(res.nu_x.value) << "] oracle=["
                  << fmt_vec(oracle.value) << "]"
                  << (res.superregular ? "" : " (not superregular)") << "\n";
      }
    }
  std::cout << agree << "/" << total << " AGREE\n";
  return disagreements == 0 ? 0 : 1;
}

int run_cocovers(const Config& cfg) {
  RootSystem rs(parse_lie_type(cfg.type), cfg.rank);
  WeylGroup wg(rs);
  QuantumBruhatGraph qbg(wg);
  MaxNewton mn(qbg);
  MaxNewtonInput in{elt_from(rs, cfg.v_word), resolve_lambda(cfg, rs), elt_from(rs, cfg.w_word)};
  try {
    for (const auto& c : mn.classify_cocovers(in))
      std::cout << "case " << c.case_id << ": alpha=a" << c.root_index + 1
                << " n=" << c.level << " -> " << affine_str(rs, wg, c.result) << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "note: " << e.what() << "; listing brute-force cocovers\n";
    AffineElt x = mn.to_affine(in);
    for (const auto& y : cocovers(rs, x)) std::cout << affine_str(rs, wg, y) << "\n";
  }
  return 0;
}

int run_chains(const Config& cfg) {
  RootSystem rs(parse_lie_type(cfg.type), cfg.rank);
  WeylGroup wg(rs);
  QuantumBruhatGraph qbg(wg);
  MaxNewton mn(qbg);
  MaxNewtonInput in{elt_from(rs, cfg.v_word), resolve_lambda(cfg, rs), elt_from(rs, cfg.w_word)};
  std::size_t u = wg.index_of(multiply(rs, inverse(rs, in.w), in.v));
  QbgPath path = qbg.min_path(u, wg.index_of(in.v));
  auto chains = mn.lift_chains(in, path);
  std::cout << chains.size() << " chains of length " << path.length() << "\n";
  for (const auto& c : chains) {
    for (std::size_t i = 0; i < c.elements.size(); ++i)
      std::cout << (i ? " > " : "") << affine_str(rs, wg, c.elements[i]);
    std::cout << "\n";
  }
  return 0;
}

int run_mazur(const Config& cfg, const std::string& nu_b_str) {
  RootSystem rs(parse_lie_type(cfg.type), cfg.rank);
  WeylGroup wg(rs);
  QuantumBruhatGraph qbg(wg);
  MaxNewton mn(qbg);
  MaxNewtonInput in{elt_from(rs, cfg.v_word), resolve_lambda(cfg, rs), elt_from(rs, cfg.w_word)};
  RatVec nu_b(parse_rats(nu_b_str), Basis::Coroot);
  if ((int)nu_b.size() != rs.rank()) throw std::invalid_argument("--nu-b: wrong length");
  bool ok = mn.mazur_check(in, {nu_b});
  std::cout << (ok ? "PASS" : "FAIL")
            << " (necessary condition nu_b <= lambda - alpha_x)\n";
  return 0;
}

int run_polygon(const Config& cfg, const std::string& points_str, const std::string& slopes_str) {
  NewtonPolygon poly;
  if (!points_str.empty()) {
    std::vector<std::pair<long long, Rat>> pts;
    std::stringstream ss(points_str);
    std::string tok;
    long long max_x = 0;
    while (std::getline(ss, tok, ';')) {
      auto r = parse_rats(tok);
      if (r.size() != 2 || !r[0].is_integer())
        throw std::invalid_argument("--points: expected \"x,y;x,y;...\" with integer x");
      pts.push_back({r[0].num, r[1]});
      max_x = std::max(max_x, r[0].num);
    }
    std::vector<std::optional<Rat>> vals((std::size_t)max_x + 1);
    for (const auto& [x, y] : pts) vals[(std::size_t)x] = y;
    poly = upper_hull_polygon(vals);
  } else if (!slopes_str.empty()) {
    poly = polygon_from_slopes(parse_rats(slopes_str));
  } else {
    throw std::invalid_argument("give --points or --slopes");
  }
  if (cfg.format == "tsv")
    std::cout << poly.to_tsv();
  else if (cfg.format == "svg")
    std::cout << poly.to_svg();
  else {
    std::string s;
    for (std::size_t i = 0; i < poly.slopes.size(); ++i) s += (i ? "," : "") + poly.slopes[i].str();
    std::cout << "slopes: " << s << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal Newton points via the quantum Bruhat graph"};
  app.require_subcommand(1);
  Config cfg;
  apply_env_budget(cfg);

  auto add_type = [&](CLI::App* c) {
    c->add_option("--type", cfg.type, "Lie type: A B C D E6 E7 E8 F4 G2");
    c->add_option("--rank", cfg.rank, "rank");
    c->add_option("--budget", cfg.budget_elements, "element budget");
  };
  auto add_lambda = [&](CLI::App* c) {
    c->add_option("--lambda", cfg.lambda, "coweight, simple-coroot coordinates");
    c->add_option("--pairings", cfg.pairings, "pairings <lambda,alpha_i> (one value broadcasts)");
    c->add_option("--lambda-eps", cfg.lambda_eps, "coweight, epsilon coordinates (type A)");
  };
  auto add_vw = [&](CLI::App* c) {
    c->add_option("--v", cfg.v_word, "chamber element as a word, e.g. 121 (default e)");
    c->add_option("--w", cfg.w_word, "finite part as a word (default e)");
  };

  auto* qbg_cmd = app.add_subcommand("qbg", "quantum Bruhat graph");
  qbg_cmd->require_subcommand(1);
  auto* qbg_export = qbg_cmd->add_subcommand("export", "emit the graph");
  add_type(qbg_export);
  qbg_export->add_option("--format", cfg.format, "dot|json")->default_str("dot");
  auto* qbg_path = qbg_cmd->add_subcommand("path", "canonical minimal path");
  add_type(qbg_path);
  qbg_path->add_option("--from", cfg.from_word, "source word")->required();
  qbg_path->add_option("--to", cfg.to_word, "target word")->required();
  auto* qbg_all = qbg_cmd->add_subcommand("all-paths", "all minimal paths");
  add_type(qbg_all);
  qbg_all->add_option("--from", cfg.from_word)->required();
  qbg_all->add_option("--to", cfg.to_word)->required();
  qbg_all->add_option("--budget-paths", cfg.budget_paths, "path-count budget");

  auto* newton = app.add_subcommand("newton", "Newton points");
  newton->require_subcommand(1);
  auto* np = newton->add_subcommand("point", "nu(t^lambda w)");
  add_type(np), add_lambda(np), add_vw(np);
  auto* nm = newton->add_subcommand("max", "maximal Newton point of t^{v lambda}w");
  bool with_oracle = false;
  add_type(nm), add_lambda(nm), add_vw(nm);
  nm->add_flag("--oracle", with_oracle, "verify against the Bruhat-interval maximum");
  auto* ns = newton->add_subcommand("sweep", "formula vs oracle over all (v,w)");
  add_type(ns), add_lambda(ns);

  auto* cc = app.add_subcommand("cocovers", "classified cocovers of t^{v lambda}w");
  add_type(cc), add_lambda(cc), add_vw(cc);
  auto* ch = app.add_subcommand("chains", "lifted saturated chains to translations");
  add_type(ch), add_lambda(ch), add_vw(ch);

  auto* mk = app.add_subcommand("mk", "superregularity constant M_k");
  long long k_arg = 0;
  add_type(mk);
  mk->add_option("--k", k_arg, "path length k")->required();

  auto* mz = app.add_subcommand("mazur", "necessary non-emptiness condition");
  std::string nu_b_str;
  add_type(mz), add_lambda(mz), add_vw(mz);
  mz->add_option("--nu-b", nu_b_str, "nu(b), coroot coordinates, rationals")->required();

  auto* pg = app.add_subcommand("polygon", "Newton polygon upper hull");
  std::string points_str, slopes_str;
  pg->add_option("--points", points_str, "\"x,y;x,y;...\"");
  pg->add_option("--slopes", slopes_str, "weakly decreasing slope list");
  pg->add_option("--format", cfg.format, "text|tsv|svg");

  CLI11_PARSE(app, argc, argv);

  try {
    if (qbg_export->parsed()) return run_qbg(cfg, "export");
    if (qbg_path->parsed()) return run_qbg(cfg, "path");
    if (qbg_all->parsed()) return run_qbg(cfg, "all-paths");
    if (np->parsed()) return run_newton_point(cfg);
    if (nm->parsed()) return run_newton_max(cfg, with_oracle);
    if (ns->parsed()) return run_newton_sweep(cfg);
    if (cc->parsed()) return run_cocovers(cfg);
    if (ch->parsed()) return run_chains(cfg);
    if (mk->parsed()) {
      RootSystem rs(parse_lie_type(cfg.type), cfg.rank);
      std::cout << m_k(rs, (std::size_t)k_arg) << "\n";
      return 0;
    }
    if (mz->parsed()) return run_mazur(cfg, nu_b_str);
    if (pg->parsed()) return run_polygon(cfg, points_str, slopes_str);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
