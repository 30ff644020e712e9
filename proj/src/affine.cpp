#include "qbn/affine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qbn {

AffineElt affine_identity(const RootSystem& rs) {
  return {IntVec(rs.rank(), 0), weyl_identity(rs)};
}

AffineElt make_affine(const RootSystem& rs, IntVec lambda, WeylElt w) {
  if ((int)lambda.size() != rs.rank()) throw std::invalid_argument("make_affine: bad lambda size");
  return {std::move(lambda), std::move(w)};
}

AffineElt translation_elt(const RootSystem& rs, IntVec lambda) {
  return make_affine(rs, std::move(lambda), weyl_identity(rs));
}

bool is_translation(const RootSystem& rs, const AffineElt& x) {
  return x.finite == weyl_identity(rs);
}

AffineElt multiply(const RootSystem& rs, const AffineElt& a, const AffineElt& b) {
  IntVec lam = a.translation;
  IntVec um = act(rs, a.finite, b.translation);
  for (std::size_t i = 0; i < lam.size(); ++i) lam[i] += um[i];
  return {std::move(lam), multiply(rs, a.finite, b.finite)};
}

AffineElt as_affine(const RootSystem& rs, const AffineReflection& r) {
  IntVec lam(rs.rank(), 0);
  const IntVec& av = rs.positive_coroots()[r.root_index];
  for (int i = 0; i < rs.rank(); ++i) lam[i] = r.level * av[i];
  return {std::move(lam), reflection(rs, r.root_index)};
}

AffineElt apply_reflection(const RootSystem& rs, const AffineReflection& r, const AffineElt& x) {
  return multiply(rs, as_affine(rs, r), x);
}

long long affine_length(const RootSystem& rs, const AffineElt& x) {
  // ell(t^lambda w) = sum over alpha > 0 with w^{-1}(alpha) > 0 of |<lambda, alpha>|
  //                 + sum over alpha > 0 with w^{-1}(alpha) < 0 of |<lambda, alpha> - 1|
  WeylElt winv = inverse(rs, x.finite);
  long long len = 0;
  for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
    long long p = rs.pairing(x.translation, rs.positive_roots()[a]);
    auto [img, sign] = act_on_root(rs, winv, (int)a);
    (void)img;
    long long term = sign > 0 ? p : p - 1;
    len += term < 0 ? -term : term;
  }
  return len;
}

ChamberDecomposition decompose_chamber(const RootSystem& rs, const AffineElt& x) {
  if (!rs.is_regular(x.translation))
    throw std::invalid_argument("decompose_chamber: chamber not unique (translation part is not regular)");
  IntVec plus = dominant_rep(rs, x.translation);
  // Walk lambda to dominance, recording the word; v is the inverse of that walk.
  IntVec cur = x.translation;
  WeylElt v = weyl_identity(rs);
  for (;;) {
    int i = -1;
    for (int k = 0; k < rs.rank(); ++k)
      if (rs.simple_pairing(cur, k) < 0) { i = k; break; }
    if (i < 0) break;
    long long p = rs.simple_pairing(cur, i);
    cur[i] -= p;
    v = multiply(rs, simple_reflection(rs, i), v);  // accumulates walk; invert below
  }
  // cur == plus and v(x.translation) == plus, so the chamber element is v^{-1}.
  return {inverse(rs, v), plus, x.finite};
}

NewtonPoint newton_point(const RootSystem& rs, const AffineElt& x) {
  int m = element_order(rs, x.finite);
  IntVec sum(rs.rank(), 0);
  IntVec cur = x.translation;
  for (int i = 0; i < m; ++i) {
    cur = act(rs, x.finite, cur);
    for (int k = 0; k < rs.rank(); ++k) sum[k] += cur[k];
  }
  RatVec avg(rs.rank(), Basis::Coroot);
  for (int k = 0; k < rs.rank(); ++k) avg[k] = Rat(sum[k], m);
  return {dominant_rep(rs, avg)};
}

std::vector<AffineReflection> left_inversions(const RootSystem& rs, const AffineElt& x) {
  // The alcove of x = t^mu w takes <., alpha> values in (a, a+1) where
  // a = <mu, alpha> if w^{-1}(alpha) > 0, and a = <mu, alpha> - 1 otherwise.
  // The separating hyperplanes H_{alpha,m} have m strictly between that
  // interval and the base interval (0, 1).
  WeylElt winv = inverse(rs, x.finite);
  std::vector<AffineReflection> out;
  for (std::size_t idx = 0; idx < rs.positive_roots().size(); ++idx) {
    long long p = rs.pairing(x.translation, rs.positive_roots()[idx]);
    auto [img, sign] = act_on_root(rs, winv, (int)idx);
    (void)img;
    long long a = sign > 0 ? p : p - 1;
    if (a >= 1)
      for (long long m = 1; m <= a; ++m) out.push_back({(int)idx, m});
    else if (a <= -1)
      for (long long m = a + 1; m <= 0; ++m) out.push_back({(int)idx, m});
  }
  return out;
}

std::vector<AffineElt> cocovers(const RootSystem& rs, const AffineElt& x) {
  long long len = affine_length(rs, x);
  std::set<AffineElt> out;
  for (const auto& r : left_inversions(rs, x)) {
    AffineElt y = apply_reflection(rs, r, x);
    if (affine_length(rs, y) == len - 1) out.insert(y);
  }
  return {out.begin(), out.end()};
}

std::set<AffineElt> downward_closure(const RootSystem& rs, const AffineElt& x, std::size_t budget) {
  std::set<AffineElt> seen;
  std::deque<AffineElt> queue;
  seen.insert(x);
  queue.push_back(x);
  while (!queue.empty()) {
    AffineElt cur = queue.front();
    queue.pop_front();
    for (const auto& y : cocovers(rs, cur)) {
      if (seen.insert(y).second) {
        if (seen.size() > budget)
          throw std::runtime_error("downward_closure budget exceeded after " +
                                   std::to_string(seen.size()) + " elements");
        queue.push_back(y);
      }
    }
  }
  return seen;
}

std::string affine_str(const RootSystem& rs, const WeylGroup& wg, const AffineElt& x) {
  std::ostringstream os;
  os << "t^[";
  for (std::size_t i = 0; i < x.translation.size(); ++i)
    os << (i ? "," : "") << x.translation[i];
  os << "] * s" << word_str(wg.canonical_word(wg.index_of(x.finite)));
  return os.str();
}

std::string affine_json(const RootSystem& rs, const WeylGroup& wg, const AffineElt& x) {
  nlohmann::json j;
  j["lambda"] = x.translation;
  j["w"] = word_str(wg.canonical_word(wg.index_of(x.finite)));
  (void)rs;
  return j.dump();
}

AffineElt affine_from_json(const RootSystem& rs, const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  IntVec lam = j.at("lambda").get<IntVec>();
  std::string w = j.at("w").get<std::string>();
  if (w == "e") w.clear();
  return make_affine(rs, lam, from_word(rs, parse_word(w, rs.rank())));
}

}  // namespace qbn
