#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbn/root_system.hpp"

namespace qbn {

/// A finite Weyl group element, identified canonically by its integer action
/// matrix on the simple-coroot basis (row-major).
struct WeylElt {
  std::vector<long long> action;  // rank x rank, row-major
  long long cached_length = 0;

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.action == b.action; }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.action < b.action; }
};

/// Sequence of 1-based simple-reflection indices.
using WeylWord = std::vector<int>;

WeylWord parse_word(const std::string& s, int rank);
std::string word_str(const WeylWord& w);

WeylElt weyl_identity(const RootSystem& rs);
WeylElt simple_reflection(const RootSystem& rs, int i);         // 0-based index
WeylElt reflection(const RootSystem& rs, int root_index);       // positive-root index
WeylElt from_word(const RootSystem& rs, const WeylWord& word);
WeylElt multiply(const RootSystem& rs, const WeylElt& a, const WeylElt& b);
WeylElt inverse(const RootSystem& rs, const WeylElt& w);

long long length(const RootSystem& rs, const WeylElt& w);

RatVec act(const RootSystem& rs, const WeylElt& w, const RatVec& lambda);
IntVec act(const RootSystem& rs, const WeylElt& w, const IntVec& lambda);

/// Image of a positive root under w, as (positive root index, sign).
std::pair<int, int> act_on_root(const RootSystem& rs, const WeylElt& w, int root_index);

int element_order(const RootSystem& rs, const WeylElt& w);

/// Exhaustive enumeration of W with a deterministic order (by length, then
/// lexicographic minimal word), plus canonical-word lookup.
class WeylGroup {
 public:
  /// budget caps |W|; exceeding it raises std::runtime_error.
  explicit WeylGroup(const RootSystem& rs, std::size_t budget = 1'000'000);

  const RootSystem& root_system() const { return rs_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<WeylElt>& elements() const { return elements_; }
  const WeylElt& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const WeylElt& w) const;
  const WeylWord& canonical_word(std::size_t index) const { return words_[index]; }
  const WeylElt& longest_element() const;

 private:
  const RootSystem& rs_;
  std::vector<WeylElt> elements_;
  std::vector<WeylWord> words_;
  std::map<std::vector<long long>, std::size_t> index_;
};

}  // namespace qbn
