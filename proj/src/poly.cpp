#include "hypoly/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "hypoly/errors.hpp"

namespace hypoly {

std::string VarKey::name() const {
  switch (kind_) {
    case Kind::X: return "x";
    case Kind::Y: return "y";
    case Kind::Z: return "z";
    case Kind::P: return "p";
    case Kind::Q: return "q";
    case Kind::T_UNIFORM: return "t";
    case Kind::T_EDGE: return "t{" + edge_.str() + "}";
  }
  return "?";
}

std::optional<VarKey> VarKey::parse(const std::string& name) {
  if (name == "x") return VarKey(Kind::X);
  if (name == "y") return VarKey(Kind::Y);
  if (name == "z") return VarKey(Kind::Z);
  if (name == "p") return VarKey(Kind::P);
  if (name == "q") return VarKey(Kind::Q);
  if (name == "t") return VarKey(Kind::T_UNIFORM);
  if (name.size() >= 3 && name.compare(0, 2, "t{") == 0 && name.back() == '}') {
    return VarKey::edge(EdgeId(name.substr(2, name.size() - 3)));
  }
  return std::nullopt;
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (auto& f : factors) {
    if (f.second == 0) continue;
    if (!factors_.empty() && factors_.back().first == f.first) {
      factors_.back().second += f.second;
    } else {
      factors_.push_back(std::move(f));
    }
  }
}

Monomial Monomial::of(const VarKey& v, unsigned exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(v, exponent);
  return m;
}

unsigned Monomial::exponent(const VarKey& v) const {
  for (const auto& [key, e] : factors_) {
    if (key == v) return e;
  }
  return 0;
}

unsigned Monomial::global_degree() const {
  unsigned d = 0;
  for (const auto& [key, e] : factors_) {
    if (!key.is_t()) d += e;
  }
  return d;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  for (const auto& [key, e] : b.factors_) {
    while (i != a.factors_.end() && i->first < key) out.factors_.push_back(*i++);
    if (i == a.factors_.end() || i->first != key || i->second < e) return std::nullopt;
    if (i->second > e) out.factors_.emplace_back(key, i->second - e);
    ++i;
  }
  while (i != a.factors_.end()) out.factors_.push_back(*i++);
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.global_degree();
  const auto db = b.global_degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.begin();
  auto j = fb.begin();
  while (i != fa.end() && j != fb.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second > j->second;
      ++i;
      ++j;
    } else {
      // The monomial holding the earlier variable has the larger exponent there.
      return i->first < j->first;
    }
  }
  return i != fa.end() && j == fb.end();
}

Poly::Poly(long value) {
  if (value != 0) terms_.emplace(Monomial(), Integer(value));
}

Poly::Poly(const Integer& value) {
  if (value != 0) terms_.emplace(Monomial(), value);
}

Poly::Poly(const Monomial& m, const Integer& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff);
}

Poly Poly::var(const VarKey& v) { return Poly(Monomial::of(v), Integer(1)); }

Integer Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::set<VarKey> Poly::variables() const {
  std::set<VarKey> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

unsigned Poly::degree_in(const VarKey& v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

void Poly::add_term(const Monomial& m, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Poly substitute(const Poly& a, const std::map<VarKey, Poly>& bindings) {
  if (bindings.empty()) return a;
  std::map<std::pair<VarKey, unsigned>, Poly> powers;
  auto power_of = [&](const VarKey& v, unsigned e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, bindings.at(v).pow(e)).first;
    return it->second;
  };

  Poly out;
  for (const auto& [m, c] : a.terms()) {
    std::vector<Monomial::Factor> kept;
    Poly factor(1);
    for (const auto& [v, e] : m.factors()) {
      if (bindings.count(v)) {
        factor *= power_of(v, e);
      } else {
        kept.emplace_back(v, e);
      }
    }
    out += Poly(Monomial(std::move(kept)), c) * factor;
  }
  return out;
}

Poly collapse_t(const Poly& a) {
  Poly out;
  const VarKey uniform(VarKey::Kind::T_UNIFORM);
  for (const auto& [m, c] : a.terms()) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [v, e] : m.factors()) factors.emplace_back(v.is_edge() ? uniform : v, e);
    out += Poly(Monomial(std::move(factors)), c);
  }
  return out;
}

Rational eval(const Poly& a, const std::map<VarKey, Rational>& point) {
  Rational sum = 0;
  for (const auto& [m, c] : a.terms()) {
    Rational term = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("unbound variable " + v.name());
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      pw.canonicalize();
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InexactDivision("division by the zero polynomial");
  const auto& [lead_m, lead_c] = *b.terms().begin();
  Poly remainder = a;
  Poly quotient;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = *remainder.terms().begin();
    auto qm = divide(rm, lead_m);
    if (!qm || !mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) {
      throw InexactDivision("polynomial division leaves a remainder");
    }
    Integer qc = rc / lead_c;
    Poly step(*qm, qc);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

namespace {

std::string monomial_string(const Monomial& m) {
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string canonical_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Integer magnitude = abs(c);
    if (m.is_one()) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += monomial_string(m);
    }
    first = false;
  }
  return out;
}

nlohmann::json to_json(const Poly& a) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : a.terms()) {
    nlohmann::json vars = nlohmann::json::object();
    for (const auto& [v, e] : m.factors()) vars[v.name()] = e;
    out.push_back({{"coeff", c.get_str()}, {"vars", std::move(vars)}});
  }
  return out;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  Poly out;
  for (const auto& term : j) {
    Integer c;
    if (c.set_str(term.at("coeff").get<std::string>(), 10) != 0) {
      throw std::invalid_argument("bad coefficient in polynomial JSON");
    }
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, e] : term.at("vars").items()) {
      auto key = VarKey::parse(name);
      if (!key) throw std::invalid_argument("unknown variable '" + name + "'");
      factors.emplace_back(*key, e.get<unsigned>());
    }
    out += Poly(Monomial(std::move(factors)), c);
  }
  return out;
}

std::string rational_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) return fail();
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) return fail();
    bool negative = !whole.empty() && whole[0] == '-';
    if (negative || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (whole.find_first_not_of("0123456789") != std::string::npos) return fail();
    Integer num(whole + frac, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }
  Rational r;
  try {
    std::string body = text[0] == '+' ? text.substr(1) : text;
    if (body.empty() || body.find_first_not_of("-0123456789/") != std::string::npos) return fail();
    if (r.set_str(body, 10) != 0) return fail();
  } catch (const std::invalid_argument&) {
    return fail();
  }
  if (r.get_den() == 0) return fail();
  r.canonicalize();
  return r;
}

}  // namespace hypoly
