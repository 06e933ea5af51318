#include "tamari/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tamari {

namespace {

constexpr int kBits = 16;
constexpr MonomialKey kMask = (MonomialKey{1} << kBits) - 1;

int shift_for(int var) { return kBits * (kMaxVars - 1 - var); }

void check_arity(int arity) {
  if (arity < 1 || arity > kMaxVars)
    throw std::invalid_argument("polynomial arity must be in 1..4");
}

int total_degree(MonomialKey key) {
  int d = 0;
  for (int v = 0; v < kMaxVars; ++v) d += monomial_exponent(key, v);
  return d;
}

}  // namespace

MonomialKey pack_monomial(std::span<const int> exps) {
  MonomialKey key = 0;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] < 0 || exps[v] > static_cast<int>(kMask))
      throw std::invalid_argument("exponent out of range");
    key |= static_cast<MonomialKey>(exps[v]) << shift_for(static_cast<int>(v));
  }
  return key;
}

int monomial_exponent(MonomialKey key, int var) {
  return static_cast<int>((key >> shift_for(var)) & kMask);
}

Polynomial::Polynomial(int arity) : arity_(arity) { check_arity(arity); }

Polynomial Polynomial::variable(int arity, int var) {
  check_arity(arity);
  if (var < 0 || var >= arity) throw std::invalid_argument("variable index out of range");
  Polynomial p(arity);
  p.terms_.emplace(MonomialKey{1} << shift_for(var), Coeff(1));
  return p;
}

Polynomial Polynomial::constant(int arity, Coeff value) {
  Polynomial p(arity);
  if (value != 0) p.terms_.emplace(0, std::move(value));
  return p;
}

void Polynomial::add_term(std::span<const int> exps, const Coeff& value) {
  if (static_cast<int>(exps.size()) != arity_)
    throw std::invalid_argument("exponent vector arity mismatch");
  add_term(pack_monomial(exps), value);
}

void Polynomial::add_term(MonomialKey key, const Coeff& value) {
  if (value == 0) return;
  auto [it, fresh] = terms_.emplace(key, value);
  if (!fresh) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

Coeff Polynomial::coefficient(std::span<const int> exps) const {
  auto it = terms_.find(pack_monomial(exps));
  return it == terms_.end() ? Coeff(0) : it->second;
}

int Polynomial::degree(int var) const {
  int d = -1;
  for (const auto& [key, coeff] : terms_) d = std::max(d, monomial_exponent(key, var));
  return d;
}

Coeff Polynomial::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Coeff(0) : it->second;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial out = a;
  out += b;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (arity_ != other.arity_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("polynomial arity mismatch");
  Polynomial out(a.arity_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : terms_) {
    Coeff c = coeff;
    if (!out.empty()) {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      out += '-';
      c = -c;
    }
    std::string factors;
    for (int v = 0; v < arity_; ++v) {
      int e = monomial_exponent(key, v);
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += kVarNames[v];
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      out += factors;
    }
  }
  return out;
}

namespace {

struct PolyParser {
  std::string_view text;
  std::size_t pos = 0;
  int arity;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Coeff parse_number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("polynomial: expected number at offset " +
                                                  std::to_string(start));
    return Coeff(std::string(text.substr(start, pos - start)));
  }

  int parse_var() {
    skip_ws();
    if (pos < text.size()) {
      for (int v = 0; v < arity; ++v) {
        if (text[pos] == kVarNames[v][0]) {
          ++pos;
          return v;
        }
      }
    }
    return -1;
  }

  // term := factor (* factor)* ; factor := number | var [^ number]
  void parse_term(Polynomial& out, int sign) {
    Coeff coeff(sign);
    std::vector<int> exps(static_cast<std::size_t>(arity), 0);
    bool any = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff *= parse_number();
        any = true;
      } else {
        int v = parse_var();
        if (v < 0) break;
        int e = 1;
        if (eat('^')) e = static_cast<int>(parse_number().get_si());
        exps[static_cast<std::size_t>(v)] += e;
        any = true;
      }
      if (!eat('*')) {
        // juxtaposition is not accepted; the loop ends unless '*' continues it
        skip_ws();
        break;
      }
    }
    if (!any) throw std::invalid_argument("polynomial: empty term at offset " + std::to_string(pos));
    out.add_term(exps, coeff);
  }

  Polynomial parse() {
    Polynomial out(arity);
    int sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    parse_term(out, sign);
    while (true) {
      skip_ws();
      if (eat('+')) {
        parse_term(out, 1);
      } else if (eat('-')) {
        parse_term(out, -1);
      } else {
        break;
      }
    }
    if (pos != text.size())
      throw std::invalid_argument("polynomial: trailing input at offset " + std::to_string(pos));
    return out;
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int arity) {
  check_arity(arity);
  PolyParser p{text, 0, arity};
  return p.parse();
}

Polynomial truncate(const Polynomial& p, const Truncation& trunc) {
  Polynomial out(p.arity());
  for (const auto& [key, coeff] : p.terms()) {
    if (monomial_exponent(key, 0) > trunc.max_x_degree) continue;
    if (total_degree(key) > trunc.max_total_degree) continue;
    out.add_term(key, coeff);
  }
  return out;
}

namespace {

Polynomial mul_trunc(const Polynomial& a, const Polynomial& b, const Truncation* trunc) {
  Polynomial out(a.arity());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      MonomialKey key = ka + kb;
      if (trunc) {
        if (monomial_exponent(key, 0) > trunc->max_x_degree) continue;
        if (total_degree(key) > trunc->max_total_degree) continue;
      }
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

// Horner substitution over variable `var` and upward: p viewed as a
// polynomial in var with coefficients over the later variables.
Polynomial compose_from(const Polynomial& p, std::span<const Polynomial> sigma, int var,
                        const Truncation* trunc) {
  int arity = static_cast<int>(sigma.size());
  if (var == arity) {
    // All variable fields have been stripped; only a constant can remain.
    Polynomial out(arity);
    for (const auto& [key, coeff] : p.terms()) out.add_term(MonomialKey{0}, coeff);
    return out;
  }
  // Group by exponent of var, keeping the later-variable part of the key.
  std::map<int, Polynomial> groups;
  for (const auto& [key, coeff] : p.terms()) {
    int e = monomial_exponent(key, var);
    MonomialKey rest = key & ~(kMask << (kBits * (kMaxVars - 1 - var)));
    auto it = groups.try_emplace(e, Polynomial(arity)).first;
    it->second.add_term(rest, coeff);
  }
  if (groups.empty()) return Polynomial(arity);
  int emax = groups.rbegin()->first;
  Polynomial acc(arity);
  for (int e = emax; e >= 0; --e) {
    if (e != emax) acc = mul_trunc(acc, sigma[static_cast<std::size_t>(var)], trunc);
    auto it = groups.find(e);
    if (it != groups.end()) acc += compose_from(it->second, sigma, var + 1, trunc);
  }
  return acc;
}

}  // namespace

Polynomial compose(const Polynomial& p, std::span<const Polynomial> sigma,
                   const Truncation* trunc) {
  if (static_cast<int>(sigma.size()) != p.arity())
    throw std::invalid_argument("compose: substitution list arity mismatch");
  for (const Polynomial& s : sigma)
    if (s.arity() != p.arity())
      throw std::invalid_argument("compose: substitution polynomial arity mismatch");
  Polynomial out = compose_from(p, sigma, 0, trunc);
  return trunc ? truncate(out, *trunc) : out;
}

FunctionalEquation::FunctionalEquation(std::vector<Polynomial> sigma, Polynomial seed_poly)
    : substitution(std::move(sigma)), seed(std::move(seed_poly)) {
  if (substitution.empty() || static_cast<int>(substitution.size()) > kMaxVars)
    throw std::invalid_argument("functional equation needs 1..4 substitution polynomials");
  int m = static_cast<int>(substitution.size());
  if (seed.arity() != m)
    throw std::invalid_argument("functional equation: seed arity mismatch");
  for (const Polynomial& s : substitution) {
    if (s.arity() != m)
      throw std::invalid_argument("functional equation: substitution arity mismatch");
    if (s.constant_term() != 0)
      throw std::invalid_argument(
          "functional equation: substitution with a constant term cannot stabilize");
  }
}

FunctionalEquation builtin_equation(Family which) {
  auto P = [](std::string_view s, int arity) { return Polynomial::parse(s, arity); };
  switch (which) {
    case Family::balanced:
      return FunctionalEquation({P("x^2 + 2*x*y", 2), P("x", 2)}, P("x", 2));
    case Family::maximal:
      return FunctionalEquation({P("x^2 + x*y + y*z", 3), P("x", 3), P("x*y", 3)}, P("x", 3));
    case Family::intervals:
      return FunctionalEquation({P("x^2 + 2*x*y + z", 3), P("x", 3), P("x^3 + x^2*y", 3)},
                                P("x", 3));
    case Family::maximal_intervals:
      return FunctionalEquation(
          {P("x^2 + 2*y*z + t", 4), P("x", 4), P("y*z + t", 4), P("x^3 + x^2*y", 4)}, P("x", 4));
  }
  throw std::invalid_argument("unknown builtin equation");
}

std::vector<Polynomial> iterate_polynomials(const FunctionalEquation& eq, int degree) {
  if (degree < 1) throw std::invalid_argument("truncation degree must be positive");
  Truncation trunc{degree, 3 * degree};
  std::vector<Polynomial> iterates;
  Polynomial current = truncate(eq.seed, trunc);
  iterates.push_back(current);
  int limit = 2 * degree + 4;
  for (int i = 0; i < limit; ++i) {
    Polynomial next = eq.seed + compose(current, eq.substitution, &trunc);
    next = truncate(next, trunc);
    iterates.push_back(next);
    if (next == current) return iterates;
    current = std::move(next);
  }
  throw std::runtime_error("functional equation did not stabilize within " +
                           std::to_string(limit) + " iterations");
}

std::vector<Coeff> iterate_fixed_point(const FunctionalEquation& eq, int degree) {
  std::vector<Polynomial> iterates = iterate_polynomials(eq, degree);
  const Polynomial& fixed = iterates.back();
  std::vector<Coeff> coeffs(static_cast<std::size_t>(degree), Coeff(0));
  for (const auto& [key, coeff] : fixed.terms()) {
    bool pure_x = true;
    for (int v = 1; v < eq.arity(); ++v)
      if (monomial_exponent(key, v) != 0) pure_x = false;
    if (!pure_x) continue;
    int e = monomial_exponent(key, 0);
    if (e >= 1 && e <= degree) coeffs[static_cast<std::size_t>(e - 1)] = coeff;
  }
  return coeffs;
}

}  // namespace tamari
