#include "qbn/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qbn {

WeylWord parse_word(const std::string& s, int rank) {
  WeylWord w;
  for (char ch : s) {
    if (std::isspace((unsigned char)ch) || ch == ',') continue;
    if (!std::isdigit((unsigned char)ch)) throw std::invalid_argument("bad word character: " + std::string(1, ch));
    int i = ch - '0';
    if (i < 1 || i > rank) throw std::invalid_argument("word letter out of range: " + std::to_string(i));
    w.push_back(i);
  }
  return w;
}

std::string word_str(const WeylWord& w) {
  std::string s;
  for (int i : w) s += std::to_string(i);
  return s.empty() ? "e" : s;
}

WeylElt weyl_identity(const RootSystem& rs) {
  int n = rs.rank();
  WeylElt w;
  w.action.assign((std::size_t)n * n, 0);
  for (int i = 0; i < n; ++i) w.action[(std::size_t)i * n + i] = 1;
  w.cached_length = 0;
  return w;
}

namespace {

IntVec apply(const std::vector<long long>& m, int n, const IntVec& v) {
  IntVec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[(std::size_t)i * n + j] * v[j];
  return out;
}

long long inversion_count(const RootSystem& rs, const std::vector<long long>& m) {
  int n = rs.rank();
  long long inv = 0;
  for (const auto& cr : rs.positive_coroots()) {
    IntVec img = apply(m, n, cr);
    // Image of a coroot is plus or minus a coroot; any nonzero coord has its sign.
    for (int i = 0; i < n; ++i) {
      if (img[i] != 0) {
        if (img[i] < 0) ++inv;
        break;
      }
    }
  }
  return inv;
}

}  // namespace

WeylElt simple_reflection(const RootSystem& rs, int i) {
  int n = rs.rank();
  if (i < 0 || i >= n) throw std::out_of_range("simple_reflection index");
  WeylElt w = weyl_identity(rs);
  // s_i(mu)_i = mu_i - sum_k cartan[i][k] mu_k
  for (int k = 0; k < n; ++k) w.action[(std::size_t)i * n + k] -= rs.cartan()[i][k];
  w.cached_length = 1;
  return w;
}

WeylElt reflection(const RootSystem& rs, int root_index) {
  int n = rs.rank();
  const IntVec& alpha = rs.positive_roots()[root_index];
  const IntVec& alpha_vee = rs.positive_coroots()[root_index];
  // r_alpha(mu) = mu - <mu, alpha> alpha^vee ; <mu, alpha> = alpha^T C mu.
  WeylElt w = weyl_identity(rs);
  for (int j = 0; j < n; ++j) {
    long long coeff = 0;  // (alpha^T C)_j
    for (int i = 0; i < n; ++i) coeff += alpha[i] * rs.cartan()[i][j];
    for (int k = 0; k < n; ++k) w.action[(std::size_t)k * n + j] -= alpha_vee[k] * coeff;
  }
  w.cached_length = inversion_count(rs, w.action);
  return w;
}

WeylElt multiply(const RootSystem& rs, const WeylElt& a, const WeylElt& b) {
  int n = rs.rank();
  WeylElt w;
  w.action.assign((std::size_t)n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long aik = a.action[(std::size_t)i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        w.action[(std::size_t)i * n + j] += aik * b.action[(std::size_t)k * n + j];
    }
  w.cached_length = inversion_count(rs, w.action);
  return w;
}

WeylElt inverse(const RootSystem& rs, const WeylElt& w) {
  // Orders are at most 30, so the inverse is a short power.
  WeylElt acc = w, prev = weyl_identity(rs);
  while (!(acc == weyl_identity(rs))) {
    prev = acc;
    acc = multiply(rs, acc, w);
  }
  return prev;
}

WeylElt from_word(const RootSystem& rs, const WeylWord& word) {
  WeylElt w = weyl_identity(rs);
  for (int i : word) {
    if (i < 1 || i > rs.rank()) throw std::out_of_range("word letter out of range");
    w = multiply(rs, w, simple_reflection(rs, i - 1));
  }
  return w;
}

long long length(const RootSystem& rs, const WeylElt& w) { return inversion_count(rs, w.action); }

RatVec act(const RootSystem& rs, const WeylElt& w, const RatVec& lambda) {
  int n = rs.rank();
  if (lambda.basis != Basis::Coroot || (int)lambda.size() != n)
    throw std::invalid_argument("act: lambda must be a coroot-basis vector");
  RatVec out(n, Basis::Coroot);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += Rat(w.action[(std::size_t)i * n + j]) * lambda[j];
  return out;
}

IntVec act(const RootSystem& rs, const WeylElt& w, const IntVec& lambda) {
  return apply(w.action, rs.rank(), lambda);
}

std::pair<int, int> act_on_root(const RootSystem& rs, const WeylElt& w, int root_index) {
  // Act on the coroot; the (root, coroot) index alignment makes this valid
  // for deciding signs and identifying the image root.
  IntVec img = act(rs, w, rs.positive_coroots()[root_index]);
  int sign = 0;
  for (long long x : img)
    if (x != 0) { sign = x > 0 ? 1 : -1; break; }
  if (sign < 0)
    for (auto& x : img) x = -x;
  for (std::size_t a = 0; a < rs.positive_coroots().size(); ++a)
    if (rs.positive_coroots()[a] == img) return {(int)a, sign};
  throw std::logic_error("act_on_root: image is not a root");
}

int element_order(const RootSystem& rs, const WeylElt& w) {
  WeylElt id = weyl_identity(rs);
  WeylElt acc = w;
  for (int m = 1; m <= 30; ++m) {
    if (acc == id) return m;
    acc = multiply(rs, acc, w);
  }
  throw std::logic_error("element_order: exceeded the Coxeter-number cap of 30");
}

WeylGroup::WeylGroup(const RootSystem& rs, std::size_t budget) : rs_(rs) {
  WeylElt id = weyl_identity(rs);
  elements_.push_back(id);
  words_.push_back({});
  index_[id.action] = 0;
  std::vector<std::size_t> layer = {0};
  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : layer) {
      // Copy: elements_ may reallocate as we append.
      WeylElt w = elements_[idx];
      WeylWord word = words_[idx];
      for (int i = 1; i <= rs.rank(); ++i) {
        WeylElt ws = multiply(rs_, w, simple_reflection(rs_, i - 1));
        if (ws.cached_length != w.cached_length + 1) continue;
        if (index_.count(ws.action)) continue;
        if (elements_.size() >= budget)
          throw std::runtime_error("Weyl group budget exceeded: |W| > " + std::to_string(budget));
        index_[ws.action] = elements_.size();
        elements_.push_back(ws);
        WeylWord nw = word;
        nw.push_back(i);
        words_.push_back(nw);
        next.push_back(elements_.size() - 1);
      }
    }
    layer = std::move(next);
  }
  // Order by length, then by lexicographic minimal word.  The BFS visits
  // layer elements in word order, and candidate words within a layer are
  // generated in increasing lex order, so the first word recorded for an
  // element is its minimal one.
  std::vector<std::size_t> order(elements_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (elements_[a].cached_length != elements_[b].cached_length)
      return elements_[a].cached_length < elements_[b].cached_length;
    return words_[a] < words_[b];
  });
  std::vector<WeylElt> es;
  std::vector<WeylWord> ws;
  for (std::size_t i : order) {
    es.push_back(elements_[i]);
    ws.push_back(words_[i]);
  }
  elements_ = std::move(es);
  words_ = std::move(ws);
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i].action] = i;
}

std::size_t WeylGroup::index_of(const WeylElt& w) const {
  auto it = index_.find(w.action);
  if (it == index_.end()) throw std::invalid_argument("element not in this Weyl group");
  return it->second;
}

const WeylElt& WeylGroup::longest_element() const { return elements_.back(); }

}  // namespace qbn
