#include "qbn/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qbn {

LieType parse_lie_type(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  if (s == "E6" || s == "E") return LieType::E6;  // rank disambiguates E
  if (s == "E7") return LieType::E7;
  if (s == "E8") return LieType::E8;
  if (s == "F4" || s == "F") return LieType::F4;
  if (s == "G2" || s == "G") return LieType::G2;
  throw std::invalid_argument("unknown Lie type: " + s);
}

std::string lie_type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
    case LieType::F4: return "F4";
    case LieType::G2: return "G2";
  }
  return "?";
}

namespace {

std::vector<std::vector<long long>> build_cartan(LieType type, int rank) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("invalid type/rank " + lie_type_name(type) + std::to_string(rank) + ": " + why);
  };
  int n = rank;
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  auto chain = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) { c[i][i + 1] = -1; c[i + 1][i] = -1; }
  };
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (type) {
    case LieType::A:
      if (n < 1 || n > 8) fail("supported ranks A1-A8");
      chain(0, n - 1);
      break;
    case LieType::B:
      if (n < 2 || n > 5) fail("supported ranks B2-B5");
      chain(0, n - 1);
      c[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case LieType::C:
      if (n < 2 || n > 5) fail("supported ranks C2-C5");
      chain(0, n - 1);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case LieType::D:
      if (n < 4 || n > 5) fail("supported ranks D4-D5");
      chain(0, n - 2);
      c[n - 3][n - 1] = -1;
      c[n - 1][n - 3] = -1;
      c[n - 2][n - 1] = 0;
      c[n - 1][n - 2] = 0;
      break;
    case LieType::E6:
    case LieType::E7:
    case LieType::E8: {
      int want = type == LieType::E6 ? 6 : (type == LieType::E7 ? 7 : 8);
      if (n != want) fail("rank must be " + std::to_string(want));
      // Bourbaki: chain 1-3-4-5-...-n, with node 2 attached to node 4.
      auto link = [&](int i, int j) { c[i - 1][j - 1] = -1; c[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    }
    case LieType::F4:
      if (n != 4) fail("rank must be 4");
      chain(0, 3);
      c[1][2] = -2;  // alpha_3, alpha_4 short
      c[2][1] = -1;
      break;
    case LieType::G2:
      if (n != 2) fail("rank must be 2");
      c[0][1] = -1;  // alpha_1 short, alpha_2 long
      c[1][0] = -3;
      break;
  }
  return c;
}

}  // namespace

RootSystem::RootSystem(LieType type, int rank) : type_(type), rank_(rank) {
  cartan_ = build_cartan(type, rank);
  int n = rank_;

  // Closure of the simple (root, coroot) pairs under the simple reflections.
  // s_i on a root beta (root coords): beta_i -= sum_k cartan[k][i] * beta_k.
  // s_i on a coroot mu (coroot coords): mu_i -= sum_k cartan[i][k] * mu_k.
  std::set<std::pair<IntVec, IntVec>> seen;
  std::vector<std::pair<IntVec, IntVec>> frontier;
  for (int i = 0; i < n; ++i) {
    IntVec r(n, 0), cr(n, 0);
    r[i] = 1;
    cr[i] = 1;
    frontier.emplace_back(r, cr);
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<std::pair<IntVec, IntVec>> next;
    for (const auto& [r, cr] : frontier) {
      for (int i = 0; i < n; ++i) {
        IntVec r2 = r, cr2 = cr;
        long long pr = 0, pc = 0;
        for (int k = 0; k < n; ++k) {
          pr += cartan_[k][i] * r[k];
          pc += cartan_[i][k] * cr[k];
        }
        r2[i] -= pr;
        cr2[i] -= pc;
        auto pair = std::make_pair(r2, cr2);
        if (seen.insert(pair).second) next.push_back(pair);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [r, cr] : seen) {
    bool pos = std::all_of(r.begin(), r.end(), [](long long x) { return x >= 0; });
    if (pos) {
      pos_roots_.push_back(r);
      pos_coroots_.push_back(cr);
    }
  }
  // Sort by height, then lexicographically, to fix the indexing.
  std::vector<std::size_t> order(pos_roots_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto height = [](const IntVec& v) {
    long long h = 0;
    for (auto x : v) h += x;
    return h;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    long long ha = height(pos_roots_[a]), hb = height(pos_roots_[b]);
    if (ha != hb) return ha < hb;
    return pos_roots_[a] < pos_roots_[b];
  });
  std::vector<IntVec> pr, pc;
  for (auto idx : order) {
    pr.push_back(pos_roots_[idx]);
    pc.push_back(pos_coroots_[idx]);
  }
  pos_roots_ = std::move(pr);
  pos_coroots_ = std::move(pc);

  two_rho_.assign(n, 0);
  for (const auto& r : pos_roots_)
    for (int i = 0; i < n; ++i) two_rho_[i] += r[i];

  // Highest coroot: the dominance-maximum among the positive coroots.
  highest_coroot_ = pos_coroots_.front();
  for (const auto& cr : pos_coroots_) {
    bool geq = true;
    for (int i = 0; i < n; ++i)
      if (cr[i] < highest_coroot_[i]) { geq = false; break; }
    if (geq) highest_coroot_ = cr;
  }
  for (const auto& cr : pos_coroots_)
    for (int i = 0; i < n; ++i)
      if (highest_coroot_[i] < cr[i])
        throw std::logic_error("root tables inconsistent: no highest coroot");
  c_g_ = *std::max_element(highest_coroot_.begin(), highest_coroot_.end());

  coroot_two_rho_.resize(pos_roots_.size());
  for (std::size_t a = 0; a < pos_roots_.size(); ++a)
    coroot_two_rho_[a] = pairing(pos_coroots_[a], two_rho_);

  // F_i vectors: sum of positive roots whose alpha_i coefficient is nonzero.
  f_vectors_.assign(n, IntVec(n, 0));
  for (const auto& r : pos_roots_)
    for (int i = 0; i < n; ++i)
      if (r[i] != 0)
        for (int k = 0; k < n; ++k) f_vectors_[i][k] += r[k];
}

std::string RootSystem::name() const {
  std::string t = lie_type_name(type_);
  // Exceptional-type names already carry their rank.
  return std::isdigit((unsigned char)t.back()) ? t : t + std::to_string(rank_);
}

Rat RootSystem::pairing(const RatVec& lambda, const IntVec& beta) const {
  if (lambda.basis != Basis::Coroot || (int)lambda.size() != rank_)
    throw std::invalid_argument("pairing: lambda must be a rank-length coroot-basis vector");
  Rat s;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += Rat(beta[i] * cartan_[i][j]) * lambda[j];
  return s;
}

long long RootSystem::pairing(const IntVec& lambda, const IntVec& beta) const {
  long long s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += beta[i] * cartan_[i][j] * lambda[j];
  return s;
}

Rat RootSystem::simple_pairing(const RatVec& lambda, int i) const {
  Rat s;
  for (int j = 0; j < rank_; ++j) s += Rat(cartan_[i][j]) * lambda[j];
  return s;
}

long long RootSystem::simple_pairing(const IntVec& lambda, int i) const {
  long long s = 0;
  for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * lambda[j];
  return s;
}

int RootSystem::root_index(const IntVec& root_coords) const {
  for (std::size_t a = 0; a < pos_roots_.size(); ++a)
    if (pos_roots_[a] == root_coords) return (int)a;
  return -1;
}

bool RootSystem::is_dominant(const RatVec& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (simple_pairing(lambda, i).sign() < 0) return false;
  return true;
}

bool RootSystem::is_dominant(const IntVec& lambda) const {
  for (int i = 0; i < rank_; ++i)
    if (simple_pairing(lambda, i) < 0) return false;
  return true;
}

bool RootSystem::is_regular(const IntVec& lambda) const {
  for (const auto& r : pos_roots_)
    if (pairing(lambda, r) == 0) return false;
  return true;
}

Rat RootSystem::f_functional(int i, const RatVec& v) const {
  if (i < 0 || i >= rank_) throw std::out_of_range("f_functional: simple index out of range");
  return pairing(v, f_vectors_[i]);
}

RatVec RootSystem::eps_to_coroot(const RatVec& eps) const {
  if (type_ != LieType::A) throw std::invalid_argument("epsilon coordinates are type A only");
  if ((int)eps.size() != rank_ + 1) throw std::invalid_argument("epsilon vector must have rank+1 entries");
  Rat sum;
  for (const auto& x : eps.c) sum += x;
  if (sum.sign() != 0) throw std::invalid_argument("epsilon coordinates must sum to zero");
  RatVec out(rank_, Basis::Coroot);
  Rat acc;
  for (int i = 0; i < rank_; ++i) {
    acc += eps[i];
    out[i] = acc;
  }
  return out;
}

RatVec RootSystem::coroot_to_eps(const RatVec& lambda) const {
  if (type_ != LieType::A) throw std::invalid_argument("epsilon coordinates are type A only");
  RatVec out(rank_ + 1, Basis::Epsilon);
  for (int i = 0; i <= rank_; ++i) {
    Rat prev = i > 0 ? lambda[i - 1] : Rat(0);
    Rat cur = i < rank_ ? lambda[i] : Rat(0);
    out[i] = cur - prev;
  }
  return out;
}

std::string RootSystem::to_json() const {
  nlohmann::json j;
  j["type"] = lie_type_name(type_);
  j["rank"] = rank_;
  j["cartan"] = cartan_;
  j["positive_roots"] = pos_roots_;
  j["positive_coroots"] = pos_coroots_;
  j["two_rho"] = two_rho_;
  j["highest_coroot"] = highest_coroot_;
  j["c_G"] = c_g_;
  j["longest_length"] = longest_length();
  return j.dump(2);
}

bool dominance_leq(const RatVec& mu, const RatVec& lambda) {
  RatVec::check_compat(mu, lambda);
  if (mu.basis != Basis::Coroot)
    throw std::invalid_argument("dominance_leq: vectors must be in the coroot basis");
  for (std::size_t i = 0; i < mu.size(); ++i)
    if ((lambda[i] - mu[i]).sign() < 0) return false;
  return true;
}

RatVec dominant_rep(const RootSystem& rs, const RatVec& lambda) {
  RatVec v = lambda;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      Rat p = rs.simple_pairing(v, i);
      if (p.sign() < 0) {
        // s_i(v) = v - <v, alpha_i> alpha_i^vee
        v[i] -= p;
        moved = true;
      }
    }
    if (!moved) return v;
  }
}

IntVec dominant_rep(const RootSystem& rs, const IntVec& lambda) {
  IntVec v = lambda;
  for (;;) {
    bool moved = false;
    for (int i = 0; i < rs.rank(); ++i) {
      long long p = rs.simple_pairing(v, i);
      if (p < 0) {
        v[i] -= p;
        moved = true;
      }
    }
    if (!moved) return v;
  }
}

}  // namespace qbn
