#include "qbn/qbg.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qbn {

namespace {
constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
}

QuantumBruhatGraph::QuantumBruhatGraph(const WeylGroup& wg) : wg_(wg) {
  const RootSystem& rs = wg.root_system();
  adj_.resize(wg.size());
  radj_.resize(wg.size());
  for (std::size_t s = 0; s < wg.size(); ++s) {
    const WeylElt& w = wg[s];
    for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
      WeylElt wr = multiply(rs, w, reflection(rs, (int)a));
      std::size_t t = wg.index_of(wr);
      if (wr.cached_length == w.cached_length + 1) {
        edges_.push_back({s, t, (int)a, EdgeKind::Up});
      } else if (wr.cached_length == w.cached_length - rs.coroot_two_rho((int)a) + 1) {
        edges_.push_back({s, t, (int)a, EdgeKind::Down});
      }
    }
  }
  for (const auto& e : edges_) {
    adj_[e.source].push_back(e);
    radj_[e.target].push_back(e);
  }
  for (auto& v : adj_)
    std::sort(v.begin(), v.end(), [](const QbgEdge& a, const QbgEdge& b) {
      if (a.root_index != b.root_index) return a.root_index < b.root_index;
      return a.kind < b.kind;
    });
}

std::vector<std::size_t> QuantumBruhatGraph::dist_from(std::size_t u, bool reverse) const {
  std::vector<std::size_t> dist(wg_.size(), kUnreached);
  dist[u] = 0;
  std::deque<std::size_t> q{u};
  const auto& lists = reverse ? radj_ : adj_;
  while (!q.empty()) {
    std::size_t c = q.front();
    q.pop_front();
    for (const auto& e : lists[c]) {
      std::size_t n = reverse ? e.source : e.target;
      if (dist[n] == kUnreached) {
        dist[n] = dist[c] + 1;
        q.push_back(n);
      }
    }
  }
  return dist;
}

std::size_t QuantumBruhatGraph::distance(std::size_t u, std::size_t v) const {
  auto d = dist_from(u, false);
  if (d[v] == kUnreached) throw std::logic_error("quantum Bruhat graph is not strongly connected");
  return d[v];
}

QbgPath QuantumBruhatGraph::min_path(std::size_t u, std::size_t v) const {
  auto dist_to_v = dist_from(v, true);
  if (dist_to_v[u] == kUnreached) throw std::logic_error("quantum Bruhat graph is not strongly connected");
  QbgPath p;
  std::size_t cur = u;
  while (cur != v || dist_to_v[cur] != 0) {
    for (const auto& e : adj_[cur]) {  // sorted: first hit is lex-minimal
      if (dist_to_v[e.target] + 1 == dist_to_v[cur]) {
        p.edges.push_back(e);
        cur = e.target;
        break;
      }
    }
  }
  p.weight = path_weight(wg_, p.edges);
  return p;
}

std::vector<QbgPath> QuantumBruhatGraph::all_min_paths(std::size_t u, std::size_t v,
                                                       std::size_t budget) const {
  auto dist_to_v = dist_from(v, true);
  std::vector<QbgPath> out;
  std::vector<QbgEdge> stack;
  auto rec = [&](auto&& self, std::size_t cur) -> void {
    if (dist_to_v[cur] == 0 && cur == v) {
      if (out.size() >= budget)
        throw std::runtime_error("all_min_paths budget exceeded (" + std::to_string(budget) + " paths)");
      out.push_back({stack, path_weight(wg_, stack)});
      return;
    }
    for (const auto& e : adj_[cur]) {
      if (dist_to_v[e.target] + 1 == dist_to_v[cur]) {
        stack.push_back(e);
        self(self, e.target);
        stack.pop_back();
      }
    }
  };
  rec(rec, u);
  return out;
}

IntVec QuantumBruhatGraph::min_quantum_monomial(std::size_t u, std::size_t v) const {
  const RootSystem& rs = wg_.root_system();
  WeylElt target = multiply(rs, wg_.longest_element(), wg_[v]);
  return min_path(u, wg_.index_of(target)).weight;
}

IntVec path_weight(const WeylGroup& wg, const std::vector<QbgEdge>& edges) {
  const RootSystem& rs = wg.root_system();
  IntVec d(rs.rank(), 0);
  for (const auto& e : edges)
    if (e.kind == EdgeKind::Down) {
      const IntVec& av = rs.positive_coroots()[e.root_index];
      for (int i = 0; i < rs.rank(); ++i) d[i] += av[i];
    }
  return d;
}

std::string monomial_str(const IntVec& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "q" + std::to_string(i + 1);
    if (d[i] != 1) s += "^" + std::to_string(d[i]);
  }
  return s.empty() ? "1" : s;
}

std::string QuantumBruhatGraph::to_dot() const {
  const RootSystem& rs = wg_.root_system();
  std::ostringstream os;
  os << "digraph qbg {\n";
  for (std::size_t i = 0; i < wg_.size(); ++i)
    os << "  n" << i << " [label=\"" << word_str(wg_.canonical_word(i)) << "\"];\n";
  for (std::size_t s = 0; s < wg_.size(); ++s)
    for (const auto& e : adj_[s]) {
      os << "  n" << e.source << " -> n" << e.target;
      if (e.kind == EdgeKind::Up) {
        os << " [label=\"a" << e.root_index + 1 << "\"];\n";
      } else {
        IntVec w = path_weight(wg_, {e});
        os << " [style=dashed,label=\"a" << e.root_index + 1 << " / " << monomial_str(w) << "\"];\n";
      }
    }
  (void)rs;
  os << "}\n";
  return os.str();
}

std::string QuantumBruhatGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t i = 0; i < wg_.size(); ++i)
    j["vertices"].push_back(word_str(wg_.canonical_word(i)));
  j["edges"] = nlohmann::json::array();
  for (std::size_t s = 0; s < wg_.size(); ++s)
    for (const auto& e : adj_[s]) {
      nlohmann::json je;
      je["source"] = word_str(wg_.canonical_word(e.source));
      je["target"] = word_str(wg_.canonical_word(e.target));
      je["root"] = e.root_index + 1;
      je["kind"] = e.kind == EdgeKind::Up ? "UP" : "DOWN";
      j["edges"].push_back(je);
    }
  return j.dump(2);
}

}  // namespace qbn
