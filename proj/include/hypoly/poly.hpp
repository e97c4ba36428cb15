#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypoly/hypergraph.hpp"

namespace hypoly {

using Integer = mpz_class;
using Rational = mpq_class;

/// Polynomial variable. Global symbols order before edge-tagged ones, and
/// edge-tagged symbols order by edge label.
class VarKey {
 public:
  enum class Kind : std::uint8_t { X, Y, Z, P, Q, T_UNIFORM, T_EDGE };

  VarKey() = default;
  explicit VarKey(Kind kind) : kind_(kind) {}
  static VarKey edge(const EdgeId& e) {
    VarKey k(Kind::T_EDGE);
    k.edge_ = e;
    return k;
  }

  Kind kind() const { return kind_; }
  const EdgeId& edge_id() const { return edge_; }
  bool is_edge() const { return kind_ == Kind::T_EDGE; }
  /// t or t{e}.
  bool is_t() const { return kind_ == Kind::T_UNIFORM || kind_ == Kind::T_EDGE; }

  /// "x", "y", "z", "p", "q", "t" or "t{label}".
  std::string name() const;
  /// Inverse of name(); std::nullopt for anything else.
  static std::optional<VarKey> parse(const std::string& name);

  friend auto operator<=>(const VarKey&, const VarKey&) = default;
  friend bool operator==(const VarKey&, const VarKey&) = default;

 private:
  Kind kind_ = Kind::X;
  EdgeId edge_;
};

/// Power product with strictly positive exponents, sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<VarKey, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(const VarKey& v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned exponent(const VarKey& v) const;
  /// Degree counting only x, y, z, p, q.
  unsigned global_degree() const;
  unsigned total_degree() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b when b divides a.
  friend std::optional<Monomial> divide(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Display and leading-term order: larger global degree (x, y, z, p, q) first,
/// then lexicographic with x most significant and larger exponents first.
/// This is a monomial order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so equal polynomials have
/// identical term maps.
class Poly {
 public:
  using Terms = std::map<Monomial, Integer, MonomialOrder>;

  Poly() = default;
  Poly(long value);  // NOLINT(google-explicit-constructor)
  explicit Poly(const Integer& value);
  Poly(const Monomial& m, const Integer& coeff);

  static Poly var(const VarKey& v);
  static Poly x() { return var(VarKey(VarKey::Kind::X)); }
  static Poly y() { return var(VarKey(VarKey::Kind::Y)); }
  static Poly z() { return var(VarKey(VarKey::Kind::Z)); }
  static Poly p() { return var(VarKey(VarKey::Kind::P)); }
  static Poly q() { return var(VarKey(VarKey::Kind::Q)); }
  static Poly t() { return var(VarKey(VarKey::Kind::T_UNIFORM)); }
  static Poly t(const EdgeId& e) { return var(VarKey::edge(e)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial (zero when absent).
  Integer coefficient(const Monomial& m) const;
  std::set<VarKey> variables() const;
  unsigned degree_in(const VarKey& v) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);

  Poly pow(unsigned exponent) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const Integer& coeff);

  Terms terms_;
};

/// Simultaneous substitution; unbound variables pass through.
Poly substitute(const Poly& a, const std::map<VarKey, Poly>& bindings);

/// Replaces every edge variable t{e} by the uniform t.
Poly collapse_t(const Poly& a);

/// Exact value at a rational point. Throws std::invalid_argument when a
/// variable of `a` is unbound.
Rational eval(const Poly& a, const std::map<VarKey, Rational>& point);

/// Quotient a / b; throws InexactDivision when b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

/// Terms in MonomialOrder, e.g. "x^2 + x*y*t{a} + z*t{a}", "q^2 + p*t - p", "0".
std::string canonical_string(const Poly& a);

/// [{"coeff": "<decimal>", "vars": {"x": 2, "t{a}": 1}}, ...] in MonomialOrder.
nlohmann::json to_json(const Poly& a);
Poly poly_from_json(const nlohmann::json& j);

/// Canonical rational text: "3", "-1/2".
std::string rational_string(const Rational& r);
/// Parses "3", "-1/2", "0.25"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace hypoly
