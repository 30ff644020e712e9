#pragma once

#include <string>
#include <vector>

#include "qbn/rational.hpp"

namespace qbn {

enum class LieType { A, B, C, D, E6, E7, E8, F4, G2 };

LieType parse_lie_type(const std::string& s);
std::string lie_type_name(LieType t);

/// Immutable root-datum tables for one finite type and rank.
///
/// Conventions (Bourbaki numbering throughout):
///   - cartan[i][j] = <alpha_j^vee, alpha_i>, so diagonal entries are 2 and
///     off-diagonal entries are <= 0.
///   - positive_roots[a] is the a-th positive root in simple-root
///     coordinates; positive_coroots[a] is its coroot in simple-coroot
///     coordinates.  The two lists are index-aligned.
///   - two_rho is the sum of all positive roots, in root coordinates.
///   - highest_coroot is the dominance-maximum of the positive coroots.
class RootSystem {
 public:
  RootSystem(LieType type, int rank);

  LieType lie_type() const { return type_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
  const std::vector<IntVec>& positive_roots() const { return pos_roots_; }
  const std::vector<IntVec>& positive_coroots() const { return pos_coroots_; }
  const IntVec& two_rho() const { return two_rho_; }
  const IntVec& highest_coroot() const { return highest_coroot_; }
  long long c_g() const { return c_g_; }
  long long longest_length() const { return (long long)pos_roots_.size(); }
  std::string name() const;

  /// <lambda, beta> for lambda in coroot coordinates, beta in root coordinates.
  Rat pairing(const RatVec& lambda, const IntVec& beta_root_coords) const;
  long long pairing(const IntVec& lambda, const IntVec& beta_root_coords) const;

  /// <lambda, alpha_i> for a simple root index i (0-based).
  Rat simple_pairing(const RatVec& lambda, int i) const;
  long long simple_pairing(const IntVec& lambda, int i) const;

  /// <beta^vee, 2 rho> for a positive-root index.
  long long coroot_two_rho(int root_index) const { return coroot_two_rho_[root_index]; }

  /// Index into positive_roots of a root given in root coordinates, or -1.
  int root_index(const IntVec& root_coords) const;

  bool is_dominant(const RatVec& lambda) const;
  bool is_dominant(const IntVec& lambda) const;
  /// Regular: strictly inside a chamber, <lambda, alpha> != 0 for all roots.
  bool is_regular(const IntVec& lambda) const;

  /// F_i(v) = <v, sum of positive roots with nonzero alpha_i coefficient>.
  Rat f_functional(int i, const RatVec& v) const;

  /// Type A display transforms (epsilon coordinates have rank+1 entries).
  RatVec eps_to_coroot(const RatVec& eps) const;
  RatVec coroot_to_eps(const RatVec& lambda) const;

  /// Root-datum export per the documented schema (integers only).
  std::string to_json() const;

 private:
  LieType type_;
  int rank_;
  std::vector<std::vector<long long>> cartan_;
  std::vector<IntVec> pos_roots_;
  std::vector<IntVec> pos_coroots_;
  IntVec two_rho_;
  IntVec highest_coroot_;
  long long c_g_ = 0;
  std::vector<long long> coroot_two_rho_;
  std::vector<IntVec> f_vectors_;  // per simple index: sum over R+ \ R_P+ in root coords
};

/// mu <= lambda in dominance order: lambda - mu has nonnegative coordinates
/// in the simple-coroot basis.
bool dominance_leq(const RatVec& mu, const RatVec& lambda);

/// The unique dominant W-orbit representative of lambda (coroot basis).
RatVec dominant_rep(const RootSystem& rs, const RatVec& lambda);
IntVec dominant_rep(const RootSystem& rs, const IntVec& lambda);

}  // namespace qbn
