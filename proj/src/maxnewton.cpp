#include "qbn/maxnewton.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qbn {

MaxNewton::MaxNewton(const QuantumBruhatGraph& qbg) : qbg_(qbg) {}

long long m_k(const RootSystem& rs, std::size_t k) {
  long long l0 = rs.longest_length();
  long long kk = (long long)k;
  if (rs.lie_type() == LieType::G2)
    return std::max(3 * l0 + 3 * kk - 3, 2 * kk * rs.c_g());
  return std::max(2 * l0 + 2 * kk - 2, 2 * kk * rs.c_g());
}

long long MaxNewton::m_k(std::size_t k) const { return qbn::m_k(root_system(), k); }

long long MaxNewton::uniform_bound() const {
  const RootSystem& rs = root_system();
  bool classical = rs.lie_type() == LieType::A || rs.lie_type() == LieType::B ||
                   rs.lie_type() == LieType::C || rs.lie_type() == LieType::D;
  return (classical ? 4 : 12) * rs.longest_length();
}

AffineElt MaxNewton::to_affine(const MaxNewtonInput& in) const {
  const RootSystem& rs = root_system();
  return make_affine(rs, act(rs, in.v, in.lambda_plus), in.w);
}

std::size_t MaxNewton::path_length_k(const MaxNewtonInput& in) const {
  const RootSystem& rs = root_system();
  const WeylGroup& wg = qbg_.group();
  std::size_t v = wg.index_of(in.v);
  std::size_t wv = wg.index_of(multiply(rs, inverse(rs, in.w), in.v));
  return qbg_.distance(wv, v);
}

bool MaxNewton::is_superregular(const MaxNewtonInput& in, std::size_t* k_out) const {
  std::size_t k = path_length_k(in);
  if (k_out) *k_out = k;
  long long bound = m_k(k);
  const RootSystem& rs = root_system();
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.simple_pairing(in.lambda_plus, i) <= bound) return false;
  return true;
}

MaxNewtonResult MaxNewton::max_newton_formula(const MaxNewtonInput& in) const {
  const RootSystem& rs = root_system();
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.simple_pairing(in.lambda_plus, i) < 1)
      throw std::invalid_argument("max_newton_formula: lambda must be dominant regular");
  const WeylGroup& wg = qbg_.group();
  std::size_t v = wg.index_of(in.v);
  std::size_t wv = wg.index_of(multiply(rs, inverse(rs, in.w), in.v));
  MaxNewtonResult res;
  res.witness_path = qbg_.min_path(wv, v);
  res.k = res.witness_path.length();
  res.correction = res.witness_path.weight;
  RatVec nu(rs.rank(), Basis::Coroot);
  for (int i = 0; i < rs.rank(); ++i) nu[i] = Rat(in.lambda_plus[i] - res.correction[i]);
  res.nu_x = {nu};
  res.superregular = is_superregular(in);
  return res;
}

NewtonPoint MaxNewton::viehmann_oracle(const AffineElt& x, std::size_t budget) const {
  const RootSystem& rs = root_system();
  auto interval = downward_closure(rs, x, budget);
  // Single pass keeping the set of currently-maximal Newton points.
  std::vector<RatVec> maximal;
  for (const auto& y : interval) {
    RatVec nu = newton_point(rs, y).value;
    bool dominated = false;
    for (const auto& m : maximal)
      if (dominance_leq(nu, m)) { dominated = true; break; }
    if (dominated) continue;
    std::erase_if(maximal, [&](const RatVec& m) { return dominance_leq(m, nu); });
    maximal.push_back(nu);
  }
  if (maximal.size() != 1) {
    std::ostringstream os;
    os << "viehmann_oracle: no unique dominance-maximum; antichain of size " << maximal.size();
    for (const auto& m : maximal) {
      os << " [";
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i].str();
      os << "]";
    }
    throw std::logic_error(os.str());
  }
  return {maximal.front()};
}

std::vector<CocoverCase> MaxNewton::classify_cocovers(const MaxNewtonInput& in) const {
  const RootSystem& rs = root_system();
  long long need = (rs.lie_type() == LieType::G2 ? 3 : 2) * rs.longest_length();
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.simple_pairing(in.lambda_plus, i) < need)
      throw std::invalid_argument("classify_cocovers: <lambda, alpha_i> >= " +
                                  std::to_string(need) + " required");

  WeylElt vinv = inverse(rs, in.v);
  WeylElt winv = inverse(rs, in.w);
  WeylElt wv = multiply(rs, winv, in.v);
  std::vector<CocoverCase> out;
  for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
    WeylElt ra = reflection(rs, (int)a);
    WeylElt vra = multiply(rs, in.v, ra);
    WeylElt rva = multiply(rs, multiply(rs, in.v, ra), vinv);  // r_{v alpha}
    WeylElt rvaw = multiply(rs, rva, in.w);
    WeylElt wvra = multiply(rs, wv, ra);
    long long pa = rs.pairing(in.lambda_plus, rs.positive_roots()[a]);
    long long a2rho = rs.coroot_two_rho((int)a);
    IntVec lam_minus = in.lambda_plus;
    for (int i = 0; i < rs.rank(); ++i) lam_minus[i] -= rs.positive_coroots()[a][i];

    if (vra.cached_length == in.v.cached_length - 1) {
      out.push_back({1, (int)a, 0,
                     make_affine(rs, act(rs, vra, in.lambda_plus), rvaw)});
    }
    if (vra.cached_length == in.v.cached_length + a2rho - 1) {
      out.push_back({2, (int)a, 1,
                     make_affine(rs, act(rs, vra, lam_minus), rvaw)});
    }
    if (wvra.cached_length == wv.cached_length + 1) {
      out.push_back({3, (int)a, pa,
                     make_affine(rs, act(rs, in.v, in.lambda_plus), rvaw)});
    }
    if (wvra.cached_length == wv.cached_length - a2rho + 1) {
      out.push_back({4, (int)a, pa - 1,
                     make_affine(rs, act(rs, in.v, lam_minus), rvaw)});
    }
  }
  return out;
}

std::vector<SaturatedChain> MaxNewton::lift_chains(const MaxNewtonInput& in,
                                                   const QbgPath& path) const {
  const RootSystem& rs = root_system();
  std::size_t k = path.length();
  long long need = (rs.lie_type() == LieType::G2 ? 3 : 2) * rs.longest_length() +
                   (rs.lie_type() == LieType::G2 ? 3 : 2) * ((long long)k - 1);
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.simple_pairing(in.lambda_plus, i) < need)
      throw std::invalid_argument("lift_chains: superregularity hypothesis violated");
  AffineElt x = to_affine(in);
  if (k > 0 && affine_length(rs, x) <= (long long)k)
    throw std::invalid_argument("lift_chains: requires ell(x) > k");

  if (k == 0) {
    SaturatedChain c;
    c.elements = {x};
    c.terminal_translation = x.translation;
    return {c};
  }

  auto rec = [&](auto&& self, const WeylElt& v, const IntVec& lambda, const WeylElt& w,
                 std::vector<QbgEdge> edges) -> std::vector<SaturatedChain> {
    AffineElt cur = make_affine(rs, act(rs, v, lambda), w);
    if (edges.empty()) {
      SaturatedChain c;
      c.elements = {cur};
      c.terminal_translation = cur.translation;
      return {c};
    }
    std::vector<SaturatedChain> out;
    auto descend = [&](const WeylElt& v2, const IntVec& lam2, const WeylElt& w2,
                       std::vector<QbgEdge> rest) {
      for (auto& chain : self(self, v2, lam2, w2, std::move(rest))) {
        chain.elements.insert(chain.elements.begin(), cur);
        out.push_back(std::move(chain));
      }
    };
    auto subtract_coroot = [&](const IntVec& lam, int root) {
      IntVec r = lam;
      for (int i = 0; i < rs.rank(); ++i) r[i] -= rs.positive_coroots()[root][i];
      return r;
    };
    WeylElt vinv = inverse(rs, v);

    // Front edge, cocover cases (3)/(4): v fixed, finite part gains r_{v beta1}.
    {
      const QbgEdge& e = edges.front();
      WeylElt rva = multiply(rs, multiply(rs, v, reflection(rs, e.root_index)), vinv);
      WeylElt w2 = multiply(rs, rva, w);
      IntVec lam2 = e.kind == EdgeKind::Up ? lambda : subtract_coroot(lambda, e.root_index);
      descend(v, lam2, w2, {edges.begin() + 1, edges.end()});
    }
    // Back edge, cocover cases (1)/(2): chamber moves to v r_{beta_k}.
    {
      const QbgEdge& e = edges.back();
      WeylElt v2 = multiply(rs, v, reflection(rs, e.root_index));
      WeylElt rva = multiply(rs, multiply(rs, v, reflection(rs, e.root_index)), vinv);
      WeylElt w2 = multiply(rs, rva, w);
      IntVec lam2 = e.kind == EdgeKind::Up ? lambda : subtract_coroot(lambda, e.root_index);
      descend(v2, lam2, w2, {edges.begin(), edges.end() - 1});
    }
    return out;
  };
  return rec(rec, in.v, in.lambda_plus, in.w, path.edges);
}

bool MaxNewton::mazur_check(const MaxNewtonInput& in, const NewtonPoint& nu_b) const {
  MaxNewtonResult res = max_newton_formula(in);
  return dominance_leq(nu_b.value, res.nu_x.value);
}

MaxNewton::QschBridge MaxNewton::qsch_bridge(std::size_t u, std::size_t v,
                                             const IntVec& lambda) const {
  const RootSystem& rs = root_system();
  const WeylGroup& wg = qbg_.group();
  WeylElt w0v = multiply(rs, wg.longest_element(), wg[v]);
  std::size_t target = wg.index_of(w0v);
  std::size_t k = qbg_.distance(u, target);
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.simple_pairing(lambda, i) <= m_k(k))
      throw std::invalid_argument("qsch_bridge: <lambda, alpha_i> > M_k required");

  QschBridge b;
  b.d = qbg_.min_path(u, target).weight;
  WeylElt wprime = multiply(rs, w0v, inverse(rs, wg[u]));
  b.x_prime = make_affine(rs, act(rs, w0v, lambda), wprime);
  b.nu = RatVec(rs.rank(), Basis::Coroot);
  for (int i = 0; i < rs.rank(); ++i) b.nu[i] = Rat(lambda[i] - b.d[i]);

  MaxNewtonResult check = max_newton_formula({w0v, lambda, wprime});
  if (!(check.nu_x.value == b.nu))
    throw std::logic_error("qsch_bridge: formula disagreement between routes");
  return b;
}

std::vector<FSeparationEntry> MaxNewton::f_separation_check(const MaxNewtonInput& in) const {
  const RootSystem& rs = root_system();
  std::size_t k = path_length_k(in);
  if (k == 0) return {};

  // Conjugation reduction: nu(t^{v lambda} w) = nu(t^lambda v^{-1} w v).
  WeylElt conj = multiply(rs, multiply(rs, inverse(rs, in.v), in.w), in.v);
  NewtonPoint nu_x = newton_point(rs, make_affine(rs, in.lambda_plus, conj));

  // Smallest wall index containing nu(x).
  int wall = -1;
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.simple_pairing(nu_x.value, i).sign() == 0) { wall = i; break; }
  if (wall < 0) throw std::logic_error("f_separation_check: nu(x) lies on no chamber wall");

  // nu_i(x) = nu(t^lambda s_i) = lambda - (<lambda, alpha_i>/2) alpha_i^vee.
  RatVec nu_i = to_ratvec(in.lambda_plus);
  nu_i[wall] -= Rat(rs.simple_pairing(in.lambda_plus, wall), 2);
  Rat f_nu_i = rs.f_functional(wall, nu_i);

  std::vector<FSeparationEntry> report;
  QbgPath path = qbg_.min_path(
      qbg_.group().index_of(multiply(rs, inverse(rs, in.w), in.v)),
      qbg_.group().index_of(in.v));
  for (const auto& chain : lift_chains(in, path)) {
    RatVec mu_plus = to_ratvec(dominant_rep(rs, chain.terminal_translation));
    Rat f_mu = rs.f_functional(wall, mu_plus);
    report.push_back({wall, chain.terminal_translation, f_mu, f_nu_i, f_mu > f_nu_i});
  }
  return report;
}

std::string MaxNewton::result_json(const MaxNewtonInput& in, const MaxNewtonResult& res,
                                   const NewtonPoint* oracle, std::size_t interval_size) const {
  const RootSystem& rs = root_system();
  const WeylGroup& wg = qbg_.group();
  nlohmann::json j;
  j["x"]["lambda"] = act(rs, in.v, in.lambda_plus);
  j["x"]["w"] = word_str(wg.canonical_word(wg.index_of(in.w)));
  j["x"]["v"] = word_str(wg.canonical_word(wg.index_of(in.v)));
  j["x"]["lambda_plus"] = in.lambda_plus;
  j["k"] = res.k;
  j["superregular"] = res.superregular;
  j["correction"] = res.correction;
  j["nu_x"] = nlohmann::json::array();
  for (const auto& c : res.nu_x.value.c) j["nu_x"].push_back(c.str());
  j["witness_path"] = nlohmann::json::array();
  for (const auto& e : res.witness_path.edges) {
    nlohmann::json je;
    je["root"] = e.root_index + 1;
    je["kind"] = e.kind == EdgeKind::Up ? "UP" : "DOWN";
    j["witness_path"].push_back(je);
  }
  if (oracle) {
    j["oracle"]["nu"] = nlohmann::json::array();
    for (const auto& c : oracle->value.c) j["oracle"]["nu"].push_back(c.str());
    j["oracle"]["interval_size"] = interval_size;
  }
  return j.dump(2);
}

}  // namespace qbn
