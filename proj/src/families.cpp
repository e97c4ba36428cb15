#include "hypoly/families.hpp"

#include <algorithm>
#include <string>

#include "hypoly/elimination.hpp"
#include "hypoly/errors.hpp"

namespace hypoly {

namespace {

std::string padded(std::size_t value, std::size_t limit) {
  const auto width = std::to_string(limit).size();
  auto text = std::to_string(value);
  return std::string(width > text.size() ? width - text.size() : 0, '0') + text;
}

std::string hyperstar_edge_label(const std::vector<unsigned>& members, unsigned n) {
  std::string label = "e";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) label += '.';
    label += padded(members[i], n);
  }
  return label;
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Hypergraph build(std::vector<std::string> vertices,
                 std::vector<std::pair<std::string, std::vector<std::string>>> edges) {
  return make_hypergraph(vertices, edges);
}

Hypergraph make_path(const PathSpec& s) {
  const std::size_t n = static_cast<std::size_t>(s.m) * (s.r - 1) + 1;
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + padded(i, n - 1));
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  for (unsigned i = 1; i <= s.m; ++i) {
    std::vector<std::string> members;
    for (unsigned j = 0; j < s.r; ++j) members.push_back(vertices[(i - 1) * (s.r - 1) + j]);
    edges.emplace_back("e" + padded(i, s.m), std::move(members));
  }
  return build(std::move(vertices), std::move(edges));
}

Hypergraph make_cycle(const CycleSpec& s) {
  const std::size_t n = static_cast<std::size_t>(s.m) * (s.r - 1);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < n; ++i) vertices.push_back("v" + padded(i, n - 1));
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  for (unsigned i = 1; i <= s.m; ++i) {
    std::vector<std::string> members;
    for (unsigned j = 0; j < s.r; ++j) members.push_back(vertices[((i - 1) * (s.r - 1) + j) % n]);
    edges.emplace_back("e" + padded(i, s.m), std::move(members));
  }
  return build(std::move(vertices), std::move(edges));
}

// Visits every k-subset of {1..limit} in lexicographic order.
void for_each_subset(unsigned limit, unsigned k,
                     const std::function<void(const std::vector<unsigned>&)>& visit) {
  std::vector<unsigned> chosen;
  std::function<void(unsigned)> rec = [&](unsigned next) {
    if (chosen.size() == k) {
      visit(chosen);
      return;
    }
    for (unsigned v = next; v <= limit; ++v) {
      if (limit - v + 1 < k - chosen.size()) break;
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(1);
}

Hypergraph make_hyperstar(const HyperstarSpec& s) {
  std::vector<std::string> vertices;
  for (unsigned v = 1; v <= s.n; ++v) vertices.push_back(padded(v, s.n));
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  for_each_subset(s.n - 1, s.r - 1, [&](const std::vector<unsigned>& rest) {
    std::vector<unsigned> members = rest;
    members.push_back(s.n);
    std::vector<std::string> labels;
    for (auto v : members) labels.push_back(padded(v, s.n));
    edges.emplace_back(hyperstar_edge_label(members, s.n), std::move(labels));
  });
  return build(std::move(vertices), std::move(edges));
}

Hypergraph make_sunflower(const SunflowerSpec& s) {
  const auto ell = s.petal_sizes.size();
  std::vector<std::string> seeds;
  for (unsigned i = 1; i <= s.seeds; ++i) seeds.push_back("s" + padded(i, s.seeds));
  std::vector<std::string> vertices = seeds;
  std::vector<std::pair<std::string, std::vector<std::string>>> edges;
  const unsigned widest = ell == 0 ? 0 : *std::max_element(s.petal_sizes.begin(), s.petal_sizes.end());
  for (std::size_t i = 0; i < ell; ++i) {
    std::vector<std::string> members = seeds;
    for (unsigned j = 1; j <= s.petal_sizes[i]; ++j) {
      auto label = "p" + padded(i + 1, ell) + "." + padded(j, widest);
      vertices.push_back(label);
      members.push_back(label);
    }
    edges.emplace_back("e" + padded(i + 1, ell), std::move(members));
  }
  return build(std::move(vertices), std::move(edges));
}

struct Validator {
  void operator()(const PathSpec& s) const {
    if (s.r < 2) throw ValidationError("path needs r >= 2");
  }
  void operator()(const CycleSpec& s) const {
    if (s.r < 2) throw ValidationError("cycle needs r >= 2");
    if (s.m < 3) throw ValidationError("cycle needs m >= 3 edges");
  }
  void operator()(const HyperstarSpec& s) const {
    if (s.r < 1 || s.r > s.n) throw ValidationError("hyperstar needs 1 <= r <= n");
  }
  void operator()(const SunflowerSpec& s) const {
    if (s.seeds < 1) throw ValidationError("sunflower needs at least one seed");
    if (std::count(s.petal_sizes.begin(), s.petal_sizes.end(), 0U) > 1) {
      throw ValidationError("sunflower allows at most one empty petal (no parallel edges)");
    }
  }
};

Poly x_pow(unsigned e) { return Poly::x().pow(e); }

}  // namespace

SunflowerSpec SunflowerSpec::uniform(unsigned r, unsigned ell, unsigned s) {
  if (r < s) throw ValidationError("uniform sunflower needs r >= s");
  return SunflowerSpec{std::vector<unsigned>(ell, r - s), s};
}

void validate(const FamilySpec& spec) { std::visit(Validator{}, spec); }

Hypergraph make_family(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      [](const auto& s) -> Hypergraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PathSpec>) {
          return make_path(s);
        } else if constexpr (std::is_same_v<T, CycleSpec>) {
          return make_cycle(s);
        } else if constexpr (std::is_same_v<T, HyperstarSpec>) {
          return make_hyperstar(s);
        } else {
          return make_sunflower(s);
        }
      },
      spec);
}

Poly path_xi(unsigned m, unsigned r) {
  validate(PathSpec{m, r});
  const Poly step = x_pow(r - 1) + Poly::y();
  std::vector<Poly> seq;
  seq.push_back(Poly(1));
  seq.push_back(x_pow(r) + Poly::x() * Poly::y() + Poly::z());
  seq.push_back(step * seq[1] + Poly::z() * x_pow(r - 1));
  for (unsigned k = 3; k <= m; ++k) {
    seq.push_back(step * seq[k - 1] + Poly::z() * x_pow(r - 2) * seq[k - 2]);
  }
  return seq[m];
}

std::vector<Poly> path_gf_series(unsigned r, unsigned order) {
  validate(PathSpec{0, r});
  const Poly numerator[] = {
      Poly(1),
      x_pow(r) + Poly::x() * Poly::y() + Poly::z() - x_pow(r - 1) - Poly::y(),
      Poly::z() * x_pow(r - 2) * (Poly::x() - Poly(1)),
  };
  const Poly denominator[] = {
      Poly(1),
      -(x_pow(r - 1) + Poly::y()),
      -(Poly::z() * x_pow(r - 2)),
  };
  // c_k = N_k - sum_{j>=1} D_j c_{k-j}, since D_0 = 1.
  std::vector<Poly> coeffs;
  for (unsigned k = 0; k <= order; ++k) {
    Poly c = k < 3 ? numerator[k] : Poly();
    for (unsigned j = 1; j <= std::min(k, 2U); ++j) c -= denominator[j] * coeffs[k - j];
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

Poly fibonacci_poly(unsigned k) {
  if (k < 1) throw ValidationError("Fibonacci index must be >= 1");
  Poly prev(1);
  Poly cur(1);
  for (unsigned i = 2; i < k; ++i) {
    Poly next = Poly::x() * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Poly cycle_xi(unsigned m, unsigned r) {
  validate(CycleSpec{m, r});
  Poly c = xi_classic(make_family(CycleSpec{3, r}));
  for (unsigned k = 4; k <= m; ++k) {
    c = x_pow(r - 2) * path_xi(k - 1, r) + Poly::y() * c +
        Poly::z() * x_pow(2 * r - 4) * path_xi(k - 3, r);
  }
  return c;
}

Poly hyperstar_chromatic(unsigned n, unsigned r) {
  validate(HyperstarSpec{n, r});
  const Poly q1 = Poly::q() - Poly(1);
  Poly out = Poly::q().pow(n);
  for (unsigned size = r - 1; size <= n - 1; ++size) {
    for_each_subset(n - 1, size, [&](const std::vector<unsigned>& s) {
      Poly edges(1);
      // r-sets T = {n} + (r-1)-subset of S.
      std::vector<unsigned> pick;
      std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (pick.size() == r - 1) {
          std::vector<unsigned> members = pick;
          members.push_back(n);
          edges *= Poly::t(EdgeId(hyperstar_edge_label(members, n)));
          return;
        }
        for (std::size_t i = from; i < s.size(); ++i) {
          pick.push_back(s[i]);
          rec(i + 1);
          pick.pop_back();
        }
      };
      rec(0);
      out += Poly::p() * (edges - Poly(1)) * q1.pow(n - size - 1);
    });
  }
  return out;
}

Poly hyperstar_chromatic_trivariate(unsigned n, unsigned r) {
  validate(HyperstarSpec{n, r});
  const Poly q1 = Poly::q() - Poly(1);
  Poly out = Poly::q().pow(n);
  for (unsigned k = r - 1; k <= n - 1; ++k) {
    const auto edges = binomial(k, r - 1).get_ui();
    out += Poly(binomial(n - 1, k)) * Poly::p() *
           (Poly::t().pow(static_cast<unsigned>(edges)) - Poly(1)) * q1.pow(n - k - 1);
  }
  return out;
}

Poly sunflower_chromatic(const SunflowerSpec& spec) {
  validate(spec);
  const auto h = make_family(spec);
  const auto ell = spec.petal_sizes.size();
  if (ell > 30) throw BudgetExceeded("sunflower closed form enumerates 2^ell edge subsets");
  Poly out = Poly::q().pow(static_cast<unsigned>(h.num_vertices()));
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << ell); ++subset) {
    Poly t_s(1);
    Poly rest(1);
    for (std::size_t i = 0; i < ell; ++i) {
      if (subset >> i & 1U) {
        t_s *= Poly::t(h.edges()[i].id);
      } else {
        rest *= Poly::q().pow(spec.petal_sizes[i]) - Poly(1);
      }
    }
    out += Poly::p() * (t_s - Poly(1)) * rest;
  }
  return out;
}

Poly sunflower_chromatic_uniform(unsigned r, unsigned ell, unsigned s) {
  const auto spec = SunflowerSpec::uniform(r, ell, s);
  validate(spec);
  const unsigned n = s + ell * (r - s);
  const Poly petal = Poly::q().pow(r - s) - Poly(1);
  Poly out = Poly::q().pow(n);
  for (unsigned k = 1; k <= ell; ++k) {
    out += Poly(binomial(ell, k)) * Poly::p() * (Poly::t().pow(k) - Poly(1)) * petal.pow(ell - k);
  }
  return out;
}

}  // namespace hypoly
