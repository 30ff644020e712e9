#pragma once

#include <set>
#include <string>
#include <vector>

#include "qbn/weyl.hpp"

namespace qbn {

/// x = t^lambda w, with lambda in the coroot lattice (simple-coroot
/// coordinates) and w a finite Weyl element.
struct AffineElt {
  IntVec translation;
  WeylElt finite;

  friend bool operator==(const AffineElt& a, const AffineElt& b) {
    return a.translation == b.translation && a.finite == b.finite;
  }
  friend bool operator<(const AffineElt& a, const AffineElt& b) {
    if (a.translation != b.translation) return a.translation < b.translation;
    return a.finite < b.finite;
  }
};

/// r_{alpha,m} = t^{m alpha^vee} r_alpha, the reflection across H_{alpha,m}.
struct AffineReflection {
  int root_index;
  long long level;
};

/// Dominant rational coweight; orbit-average Newton point of some element.
struct NewtonPoint {
  RatVec value;  // coroot basis, dominant

  friend bool operator==(const NewtonPoint& a, const NewtonPoint& b) { return a.value == b.value; }
};

AffineElt affine_identity(const RootSystem& rs);
AffineElt make_affine(const RootSystem& rs, IntVec lambda, WeylElt w);
AffineElt translation_elt(const RootSystem& rs, IntVec lambda);
bool is_translation(const RootSystem& rs, const AffineElt& x);

/// (t^lambda u)(t^mu v) = t^{lambda + u(mu)} uv
AffineElt multiply(const RootSystem& rs, const AffineElt& a, const AffineElt& b);
AffineElt as_affine(const RootSystem& rs, const AffineReflection& r);
AffineElt apply_reflection(const RootSystem& rs, const AffineReflection& r, const AffineElt& x);

/// Iwahori-Matsumoto length.
long long affine_length(const RootSystem& rs, const AffineElt& x);

/// For regular translation part, the unique (v, lambda^+) with lambda = v(lambda^+).
struct ChamberDecomposition {
  WeylElt v;
  IntVec lambda_plus;
  WeylElt w;
};
ChamberDecomposition decompose_chamber(const RootSystem& rs, const AffineElt& x);

NewtonPoint newton_point(const RootSystem& rs, const AffineElt& x);

/// The ell(x) affine reflections r with ell(r x) < ell(x) (left inversions).
std::vector<AffineReflection> left_inversions(const RootSystem& rs, const AffineElt& x);

/// { r x : r a left inversion, ell(r x) = ell(x) - 1 }, deduplicated, sorted.
std::vector<AffineElt> cocovers(const RootSystem& rs, const AffineElt& x);

/// Full Bruhat interval { y <= x } by breadth-first cocover recursion.
std::set<AffineElt> downward_closure(const RootSystem& rs, const AffineElt& x,
                                     std::size_t budget = 10'000'000);

std::string affine_str(const RootSystem& rs, const WeylGroup& wg, const AffineElt& x);
std::string affine_json(const RootSystem& rs, const WeylGroup& wg, const AffineElt& x);
AffineElt affine_from_json(const RootSystem& rs, const std::string& json_text);

}  // namespace qbn
