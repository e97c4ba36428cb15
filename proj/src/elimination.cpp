#include "hypoly/elimination.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "hypoly/errors.hpp"

namespace hypoly {

namespace {

void check_progress(const Hypergraph& before, const Hypergraph& after) {
  const auto mb = before.num_edges();
  const auto ma = after.num_edges();
  if (ma < mb || (ma == mb && after.num_vertices() < before.num_vertices())) return;
  throw std::logic_error("elimination step did not shrink (m, n)");
}

void require_permutation(const Hypergraph& h, const std::vector<EdgeId>& order) {
  std::vector<EdgeId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != h.edge_ids()) {
    throw ValidationError("pivot order must be a permutation of the edge ids");
  }
}

const EdgeId& pick_pivot(const Hypergraph& h, const std::optional<std::vector<EdgeId>>& order) {
  if (order) {
    for (const auto& e : *order) {
      if (h.has_edge(e)) return e;
    }
    throw std::logic_error("pivot order exhausted while edges remain");
  }
  return h.edges().front().id;
}

class XiRecursion {
 public:
  explicit XiRecursion(const RecursionOptions& options)
      : options_(options), memoize_(options.uniform_t && !options.pivot_order) {}

  Poly run(const Hypergraph& h) {
    if (h.num_edges() == 0) return Poly::x().pow(static_cast<unsigned>(h.num_vertices()));

    auto parts = components(h);
    if (parts.size() > 1) {
      Poly product(1);
      for (const auto& part : parts) product *= run(part);
      return product;
    }

    std::string key;
    if (memoize_) {
      key = canonical_encoding(h);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }

    const EdgeId pivot = pick_pivot(h, options_.pivot_order);
    const Poly weight = options_.uniform_t ? Poly::t() : Poly::t(pivot);
    auto deleted = delete_edge(h, pivot);
    auto contracted = contract(h, pivot);
    auto extracted = extract(h, pivot);
    check_progress(h, deleted);
    check_progress(h, contracted);
    check_progress(h, extracted);

    Poly result = run(deleted);
    result += Poly::y() * weight * run(contracted);
    result += Poly::z() * weight * run(extracted);

    if (memoize_) memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  const RecursionOptions& options_;
  bool memoize_;
  std::unordered_map<std::string, Poly> memo_;
};

Rational run_generic(const Hypergraph& h, const EliminationWeights& w,
                     const std::vector<EdgeId>& order) {
  if (h.num_edges() == 0) {
    Rational out = 1;
    for (std::size_t i = 0; i < h.num_vertices(); ++i) out *= w.alpha;
    return out;
  }
  auto parts = components(h);
  if (parts.size() > 1) {
    Rational product = 1;
    for (const auto& part : parts) product *= run_generic(part, w, order);
    return product;
  }
  const EdgeId pivot = pick_pivot(h, order);
  Rational out = 0;
  if (w.beta != 0) out += w.beta * run_generic(delete_edge(h, pivot), w, order);
  if (w.gamma != 0) out += w.gamma * run_generic(contract(h, pivot), w, order);
  if (w.delta != 0) out += w.delta * run_generic(extract(h, pivot), w, order);
  return out;
}

}  // namespace

Poly xi_subset(const Hypergraph& h) {
  Poly out;
  for_each_vertex_disjoint_pair(h, [&](const EdgeSubsetPair& pair) {
    EdgeSet both = pair.first;
    both.insert(pair.second.begin(), pair.second.end());
    const auto k_all = num_components(partial(h, both));
    const auto k_second = num_components(edge_section(h, pair.second));
    const auto size = both.size();

    std::vector<Monomial::Factor> factors;
    factors.emplace_back(VarKey(VarKey::Kind::X), static_cast<unsigned>(k_all - k_second));
    factors.emplace_back(VarKey(VarKey::Kind::Y), static_cast<unsigned>(size - k_second));
    factors.emplace_back(VarKey(VarKey::Kind::Z), static_cast<unsigned>(k_second));
    for (const auto& e : both) factors.emplace_back(VarKey::edge(e), 1U);
    out += Poly(Monomial(std::move(factors)), Integer(1));
  });
  return out;
}

Poly xi_recursive(const Hypergraph& h, const RecursionOptions& options) {
  if (options.pivot_order) require_permutation(h, *options.pivot_order);
  XiRecursion recursion(options);
  return recursion.run(h);
}

Poly xi_classic(const Hypergraph& h) {
  std::map<VarKey, Poly> ones;
  for (const auto& e : h.edges()) ones.emplace(VarKey::edge(e.id), Poly(1));
  return substitute(xi_subset(h), ones);
}

Rational generic_elimination(const Hypergraph& h, const EliminationWeights& w,
                             const std::vector<EdgeId>& order) {
  require_permutation(h, order);
  return run_generic(h, w, order);
}

std::string canonical_encoding(const Hypergraph& h) {
  const auto n = h.num_vertices();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    for (auto v : h.edges()[i].members) incident[v].push_back(i);
  }

  constexpr auto kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> relabel(n, kUnseen);
  std::size_t next = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (relabel[root] != kUnseen) continue;
    std::deque<std::size_t> queue{root};
    relabel[root] = next++;
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto ei : incident[v]) {
        for (auto u : h.edges()[ei].members) {
          if (relabel[u] == kUnseen) {
            relabel[u] = next++;
            queue.push_back(u);
          }
        }
      }
    }
  }

  std::vector<std::vector<std::size_t>> edges;
  edges.reserve(h.num_edges());
  for (const auto& e : h.edges()) {
    std::vector<std::size_t> members;
    for (auto v : e.members) members.push_back(relabel[v]);
    std::sort(members.begin(), members.end());
    edges.push_back(std::move(members));
  }
  std::sort(edges.begin(), edges.end());

  std::string out = std::to_string(n) + ":";
  for (const auto& e : edges) {
    out += '[';
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(e[k]);
    }
    out += ']';
  }
  return out;
}

}  // namespace hypoly
