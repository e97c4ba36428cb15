#include "hypoly/bond_lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hypoly/errors.hpp"

namespace hypoly {

namespace {

std::vector<std::size_t> normalize_blocks(const std::vector<std::size_t>& raw) {
  std::map<std::size_t, std::size_t> renumber;
  std::vector<std::size_t> out(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    out[v] = renumber.emplace(raw[v], renumber.size()).first->second;
  }
  return out;
}

bool block_is_connected(const Hypergraph& h, const std::vector<std::size_t>& block) {
  VertexSet s;
  for (auto v : block) s.insert(h.vertices()[v]);
  return num_components(vertex_section(h, s)) == 1;
}

// Colorings where non-singleton blocks of pi are monochromatic primary and
// primary edges stay inside blocks.
bool matches_partition(const Hypergraph& h, const ConnectedPartition& pi, const Coloring& c) {
  for (const auto& block : pi.blocks()) {
    if (block.size() < 2) continue;
    const auto color = c.colors[block.front()];
    if (color > c.p) return false;
    for (auto v : block) {
      if (c.colors[v] != color) return false;
    }
  }
  for (const auto& e : h.edges()) {
    const auto color = c.colors[e.members.front()];
    if (color > c.p) continue;
    bool mono = std::all_of(e.members.begin(), e.members.end(),
                            [&](auto v) { return c.colors[v] == color; });
    if (mono && !pi.contains(e)) return false;
  }
  return true;
}

}  // namespace

ConnectedPartition::ConnectedPartition(std::vector<std::size_t> block_of)
    : block_of_(normalize_blocks(block_of)) {
  num_blocks_ = block_of_.empty() ? 0 : *std::max_element(block_of_.begin(), block_of_.end()) + 1;
}

std::vector<std::vector<std::size_t>> ConnectedPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(num_blocks_);
  for (std::size_t v = 0; v < block_of_.size(); ++v) out[block_of_[v]].push_back(v);
  return out;
}

std::size_t ConnectedPartition::num_singletons() const {
  std::vector<std::size_t> sizes(num_blocks_, 0);
  for (auto b : block_of_) ++sizes[b];
  return static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), 1));
}

bool ConnectedPartition::is_singleton(std::size_t vertex) const {
  const auto b = block_of_[vertex];
  return std::count(block_of_.begin(), block_of_.end(), b) == 1;
}

bool ConnectedPartition::contains(const Hypergraph::Edge& e) const {
  const auto b = block_of_[e.members.front()];
  return std::all_of(e.members.begin(), e.members.end(),
                     [&](auto v) { return block_of_[v] == b; });
}

bool ConnectedPartition::refines(const ConnectedPartition& other) const {
  if (other.block_of_.size() != block_of_.size()) return false;
  // Each of our blocks must map into a single block of other.
  std::vector<std::size_t> image(num_blocks_, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < block_of_.size(); ++v) {
    auto& target = image[block_of_[v]];
    if (target == static_cast<std::size_t>(-1)) {
      target = other.block_of_[v];
    } else if (target != other.block_of_[v]) {
      return false;
    }
  }
  return true;
}

std::size_t BondLattice::index_of(const ConnectedPartition& pi) const {
  auto it = std::find(elements_.begin(), elements_.end(), pi);
  if (it == elements_.end()) throw std::invalid_argument("partition is not in the bond lattice");
  return static_cast<std::size_t>(it - elements_.begin());
}

const std::vector<Integer>& BondLattice::mobius_row(std::size_t a) const {
  if (auto it = mobius_rows_.find(a); it != mobius_rows_.end()) return it->second;
  std::vector<Integer> row(elements_.size(), 0);
  std::vector<std::size_t> upset;
  row[a] = 1;
  upset.push_back(a);
  for (std::size_t b = a + 1; b < elements_.size(); ++b) {
    if (!leq(a, b)) continue;
    Integer sum = 0;
    for (auto c : upset) {
      if (leq(c, b)) sum += row[c];
    }
    row[b] = -sum;
    upset.push_back(b);
  }
  return mobius_rows_.emplace(a, std::move(row)).first->second;
}

Integer BondLattice::mobius(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) throw std::invalid_argument("mobius(pi, sigma) requires pi <= sigma");
  return mobius_row(a)[b];
}

BondLattice connected_partitions(const Hypergraph& h, std::size_t max_vertices) {
  const auto n = h.num_vertices();
  if (n > max_vertices) {
    throw BudgetExceeded("bond lattice needs at most " + std::to_string(max_vertices) +
                         " vertices");
  }
  BondLattice lattice;
  // Restricted growth strings enumerate each set partition once.
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t v, std::size_t used) {
    if (v == n) {
      ConnectedPartition pi(rgs);
      for (const auto& block : pi.blocks()) {
        if (block.size() >= 2 && !block_is_connected(h, block)) return;
      }
      lattice.elements_.push_back(std::move(pi));
      return;
    }
    for (std::size_t b = 0; b <= used && b < n; ++b) {
      rgs[v] = b;
      grow(v + 1, std::max(used, b + 1));
    }
  };
  if (n == 0) {
    lattice.elements_.emplace_back();
  } else {
    grow(0, 0);
  }
  std::stable_sort(lattice.elements_.begin(), lattice.elements_.end(),
                   [](const ConnectedPartition& a, const ConnectedPartition& b) {
                     if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
                     return a.block_of() < b.block_of();
                   });
  return lattice;
}

Integer mobius(const BondLattice& lattice, const ConnectedPartition& pi,
               const ConnectedPartition& sigma) {
  return lattice.mobius(lattice.index_of(pi), lattice.index_of(sigma));
}

Integer h_count(const Hypergraph& h, const ConnectedPartition& pi, unsigned p, unsigned q,
                std::uint64_t budget) {
  Integer count = 0;
  for_each_coloring(
      h, p, q,
      [&](const Coloring& c) {
        if (matches_partition(h, pi, c)) ++count;
      },
      budget);
  return count;
}

std::vector<Integer> h_counts(const Hypergraph& h, const BondLattice& lattice, unsigned p,
                              unsigned q, std::uint64_t budget) {
  struct Shape {
    std::vector<std::uint64_t> blocks;  // non-singleton blocks
    std::vector<bool> holds;            // edge i inside a block
  };
  std::vector<Shape> shapes;
  for (const auto& sigma : lattice.elements()) {
    Shape shape;
    for (const auto& block : sigma.blocks()) {
      if (block.size() < 2) continue;
      std::uint64_t mask = 0;
      for (auto v : block) mask |= std::uint64_t{1} << v;
      shape.blocks.push_back(mask);
    }
    for (const auto& e : h.edges()) shape.holds.push_back(sigma.contains(e));
    shapes.push_back(std::move(shape));
  }

  std::vector<std::uint64_t> counts(shapes.size(), 0);
  std::vector<std::uint64_t> color_class(q + 1);
  std::vector<std::size_t> primary;
  for_each_coloring(
      h, p, q,
      [&](const Coloring& c) {
        std::fill(color_class.begin(), color_class.end(), 0);
        for (std::size_t v = 0; v < c.colors.size(); ++v) {
          color_class[c.colors[v]] |= std::uint64_t{1} << v;
        }
        primary.clear();
        for (std::size_t i = 0; i < h.num_edges(); ++i) {
          const auto mask = h.member_mask(h.edges()[i]);
          const auto color = c.colors[h.edges()[i].members.front()];
          if (color <= p && (color_class[color] & mask) == mask) primary.push_back(i);
        }
        for (std::size_t s = 0; s < shapes.size(); ++s) {
          const auto& shape = shapes[s];
          bool ok = true;
          for (auto block : shape.blocks) {
            const auto color = c.colors[static_cast<std::size_t>(__builtin_ctzll(block))];
            if (color > p || (color_class[color] & block) != block) {
              ok = false;
              break;
            }
          }
          for (std::size_t i = 0; ok && i < primary.size(); ++i) ok = shape.holds[primary[i]];
          if (ok) ++counts[s];
        }
      },
      budget);
  return {counts.begin(), counts.end()};
}

Poly h_weighted(const Hypergraph& h, const ConnectedPartition& pi, unsigned p, unsigned q,
                std::uint64_t budget) {
  std::map<std::vector<std::size_t>, Integer> tally;
  for_each_coloring(
      h, p, q,
      [&](const Coloring& c) {
        if (!matches_partition(h, pi, c)) return;
        std::vector<std::size_t> primary;
        for (std::size_t i = 0; i < h.num_edges(); ++i) {
          const auto& e = h.edges()[i];
          const auto color = c.colors[e.members.front()];
          if (color <= p && std::all_of(e.members.begin(), e.members.end(),
                                        [&](auto v) { return c.colors[v] == color; })) {
            primary.push_back(i);
          }
        }
        ++tally[primary];
      },
      budget);
  Poly out;
  for (const auto& [primary, count] : tally) {
    std::vector<Monomial::Factor> factors;
    for (auto i : primary) factors.emplace_back(VarKey::edge(h.edges()[i].id), 1U);
    out += Poly(Monomial(std::move(factors)), count);
  }
  return out;
}

Poly block_weight(const Hypergraph& h, const ConnectedPartition& sigma) {
  std::vector<Poly> loop_weight(h.num_vertices(), Poly(1));
  for (const auto& e : h.edges()) {
    if (e.members.size() == 1) loop_weight[e.members.front()] *= Poly::t(e.id);
  }
  Poly out(1);
  for (const auto& block : sigma.blocks()) {
    if (block.size() == 1) {
      out *= Poly::q() - Poly::p() + Poly::p() * loop_weight[block.front()];
    } else {
      Poly w = Poly::p();
      for (auto v : block) w *= loop_weight[v];
      out *= w;
    }
  }
  return out;
}

Poly chromatic_via_mobius(const Hypergraph& h, std::size_t max_vertices) {
  auto lattice = connected_partitions(h, max_vertices);
  std::vector<Poly> weights;
  weights.reserve(lattice.size());
  for (const auto& sigma : lattice.elements()) weights.push_back(block_weight(h, sigma));

  Poly out;
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    const auto& row = lattice.mobius_row(a);
    Poly inner;
    for (std::size_t b = a; b < lattice.size(); ++b) {
      if (row[b] != 0) inner += Poly(row[b]) * weights[b];
    }
    if (inner.is_zero()) continue;
    Poly edges(1);
    const auto& pi = lattice.elements()[a];
    for (const auto& e : h.edges()) {
      if (e.members.size() >= 2 && pi.contains(e)) edges *= Poly::t(e.id);
    }
    out += inner * edges;
  }
  return out;
}

}  // namespace hypoly
