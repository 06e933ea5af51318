// Exact multivariate polynomials over arbitrary-precision integers, and the
// functional-equation iteration that extracts the counting series.
#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tamari {

using Coeff = mpz_class;

// Up to four variables, named x, y, z, t (indices 0..3). Variable x counts
// leaves and is the truncation variable of the iteration.
inline constexpr int kMaxVars = 4;
inline constexpr const char* kVarNames[kMaxVars] = {"x", "y", "z", "t"};

// Exponent vectors packed 16 bits per variable, variable 0 highest, so the
// integer order of keys is the lexicographic order of exponent vectors.
using MonomialKey = std::uint64_t;
MonomialKey pack_monomial(std::span<const int> exps);
int monomial_exponent(MonomialKey key, int var);

class Polynomial {
 public:
  explicit Polynomial(int arity = 1);

  static Polynomial zero(int arity) { return Polynomial(arity); }
  static Polynomial variable(int arity, int var);
  static Polynomial constant(int arity, Coeff value);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Adds value to the coefficient of the monomial; drops the term when the
  // sum is zero.
  void add_term(std::span<const int> exps, const Coeff& value);
  void add_term(MonomialKey key, const Coeff& value);

  Coeff coefficient(std::span<const int> exps) const;
  const std::map<MonomialKey, Coeff>& terms() const { return terms_; }

  int degree(int var) const;        // max exponent of var; -1 for the zero polynomial
  Coeff constant_term() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& other);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Text form like "x + 2*x*y + x^2", terms in key order. "0" when zero.
  std::string str() const;

  // Parses sums of integer-coefficient products of x, y, z, t with optional
  // ^exponent; no parentheses. Throws std::invalid_argument on bad input.
  static Polynomial parse(std::string_view text, int arity);

 private:
  int arity_;
  std::map<MonomialKey, Coeff> terms_;
};

// Degree bounds applied while composing; monomials beyond either bound are
// dropped. Sound for the iteration because substitution never lowers the
// x-degree or the total degree of a monomial.
struct Truncation {
  int max_x_degree;
  int max_total_degree;
};

// Simultaneous substitution: variable j of p becomes sigma[j]. All sigma
// share p's arity. Optional truncation prunes during the computation.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> sigma,
                   const Truncation* trunc = nullptr);

Polynomial truncate(const Polynomial& p, const Truncation& trunc);

// A(x, ...) = seed + A(sigma_1, ..., sigma_m), iterated from A_0 = seed.
// Every sigma_j must have a zero constant term (otherwise the iteration
// cannot stabilize coefficientwise); the constructor rejects violations.
struct FunctionalEquation {
  std::vector<Polynomial> substitution;
  Polynomial seed;

  FunctionalEquation(std::vector<Polynomial> sigma, Polynomial seed_poly);
  int arity() const { return static_cast<int>(substitution.size()); }
};

// The four counting series of this library, by the number of leaves.
enum class Family { balanced, maximal, intervals, maximal_intervals };

FunctionalEquation builtin_equation(Family which);

// Coefficients c_1..c_N of A(x, 0, ..., 0) at the truncation fixed point:
// iterates with monomials of x-degree > N (or total degree > 3N) discarded
// until two successive iterates agree. Throws std::runtime_error if 2N+4
// iterations do not stabilize, which signals an equation outside the
// admissible class.
std::vector<Coeff> iterate_fixed_point(const FunctionalEquation& eq, int degree);

// The successive truncated iterates A_0, A_1, ..., ending with the first
// repeated one. Exposed so the low iterates can be compared term by term.
std::vector<Polynomial> iterate_polynomials(const FunctionalEquation& eq, int degree);

}  // namespace tamari
