#pragma once

#include <string>
#include <vector>

#include "qbn/affine.hpp"
#include "qbn/qbg.hpp"

namespace qbn {

/// x = t^{v lambda} w with lambda dominant regular.
struct MaxNewtonInput {
  WeylElt v;
  IntVec lambda_plus;
  WeylElt w;
};

struct MaxNewtonResult {
  NewtonPoint nu_x;
  IntVec correction;     // alpha^vee_x, coroot coordinates
  std::size_t k = 0;     // minimal path length w^{-1}v -> v
  bool superregular = false;
  QbgPath witness_path;
};

/// One of the four cocover shapes of t^{v lambda} w.
struct CocoverCase {
  int case_id;       // 1..4
  int root_index;    // alpha
  long long level;   // n in r_{v alpha, n}
  AffineElt result;
};

/// x = x_0 > x_1 > ... > x_k, consecutive length drops of 1, ending at a
/// pure translation t^mu.
struct SaturatedChain {
  std::vector<AffineElt> elements;
  IntVec terminal_translation;
};

struct FSeparationEntry {
  int simple_index;        // i with nu(x) on the wall H_{alpha_i}
  IntVec mu;               // terminal translation of one minimal chain
  Rat f_mu_plus;
  Rat f_nu_i;
  bool strict;
};

/// Superregularity constant M_k; needs only the root-datum tables.
long long m_k(const RootSystem& rs, std::size_t k);

class MaxNewton {
 public:
  explicit MaxNewton(const QuantumBruhatGraph& qbg);

  const QuantumBruhatGraph& qbg() const { return qbg_; }
  const RootSystem& root_system() const { return qbg_.group().root_system(); }

  long long m_k(std::size_t k) const;
  /// Uniform bound from the corollary: 4 l(w_0) classical, 12 l(w_0) exceptional.
  long long uniform_bound() const;

  AffineElt to_affine(const MaxNewtonInput& in) const;
  std::size_t path_length_k(const MaxNewtonInput& in) const;
  bool is_superregular(const MaxNewtonInput& in, std::size_t* k_out = nullptr) const;

  /// nu_x = lambda - weight(min path w^{-1}v -> v).  Always returns a value;
  /// the superregular flag records whether the theorem's hypothesis holds.
  MaxNewtonResult max_newton_formula(const MaxNewtonInput& in) const;

  /// Dominance-maximum of nu(y) over the full Bruhat interval below x.
  /// Throws on a non-unique maximum (internal consistency failure).
  NewtonPoint viehmann_oracle(const AffineElt& x, std::size_t budget = 10'000'000) const;

  /// Requires <lambda, alpha_i> >= 2 l(w_0) (3 l(w_0) for G2).
  std::vector<CocoverCase> classify_cocovers(const MaxNewtonInput& in) const;

  /// Lifts a minimal path to the 2^k saturated chains from x to translations.
  std::vector<SaturatedChain> lift_chains(const MaxNewtonInput& in, const QbgPath& path) const;

  /// Necessary condition nu_b <= lambda - alpha^vee_x.
  bool mazur_check(const MaxNewtonInput& in, const NewtonPoint& nu_b) const;

  struct QschBridge {
    IntVec d;
    AffineElt x_prime;
    RatVec nu;
  };
  QschBridge qsch_bridge(std::size_t u, std::size_t v, const IntVec& lambda) const;

  std::vector<FSeparationEntry> f_separation_check(const MaxNewtonInput& in) const;

  std::string result_json(const MaxNewtonInput& in, const MaxNewtonResult& res,
                          const NewtonPoint* oracle = nullptr,
                          std::size_t interval_size = 0) const;

 private:
  const QuantumBruhatGraph& qbg_;
};

}  // namespace qbn
