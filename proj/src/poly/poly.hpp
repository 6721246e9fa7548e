#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace sosv {

using VarId = std::uint32_t;

enum class VarBlock { state, lifting, input, state_next, lifting_next, input_next };

bool is_successor_block(VarBlock b);

// Ordered variable universe shared by every polynomial of one model.
// Layout: [x(0..n-1), lam(0..nl-1), u(0..p-1), x+, lam+, u+].
// Frozen after construction; polynomials refer to variables by index only.
class VariableUniverse {
 public:
  VariableUniverse(int n_state, int n_lifting, int n_input);

  int state_dim() const { return n_; }
  int lifting_dim() const { return nl_; }
  int input_dim() const { return p_; }
  std::size_t size() const { return 2 * static_cast<std::size_t>(n_ + nl_ + p_); }

  VarId var(VarBlock b, int i) const;
  VarBlock block_of(VarId v) const;
  int index_in_block(VarId v) const;
  VarId successor(VarId v) const;  // x_i -> x_i+ (ModelError on successor vars)
  VarId base_of(VarId v) const;    // x_i+ -> x_i (identity on base vars)

  std::string name(VarId v) const;  // "x1", "lam1", "u1", "x1+", ...
  std::optional<VarId> find(const std::string& name) const;

  std::vector<VarId> state_vars() const;
  std::vector<VarId> zeta() const;       // (x, lam, u)
  std::vector<VarId> zeta_next() const;  // (x+, lam+, u+)
  std::vector<VarId> xi() const;         // (zeta, zeta+)

 private:
  int n_, nl_, p_;
};

// Sparse monomial: sorted (variable, exponent>0) factors.
class Monomial {
 public:
  Monomial() = default;
  static Monomial one() { return {}; }
  static Monomial var(VarId v, std::uint32_t e = 1);
  static Monomial from_factors(std::vector<std::pair<VarId, std::uint32_t>> factors);

  int degree() const;
  int degree_in(VarId v) const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<VarId, std::uint32_t>>& factors() const { return factors_; }

  Monomial operator*(const Monomial& o) const;
  bool operator==(const Monomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  double eval(std::span<const double> point) const;  // point indexed by VarId

 private:
  std::vector<std::pair<VarId, std::uint32_t>> factors_;
};

// Graded lexicographic order: total degree first; ties broken so that among
// equal-degree monomials the one with higher exponent on the lowest VarId
// comes first (yielding [1, x1, x2, x1^2, x1*x2, x2^2, ...]).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(double constant);
  static Polynomial variable(VarId v);
  static Polynomial monomial(const Monomial& m, double coeff = 1.0);

  // Terms with |coeff| < kCoeffEpsilon are dropped after every operation.
  static constexpr double kCoeffEpsilon = 1e-14;

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  int degree_in(VarId v) const;
  std::size_t term_count() const { return terms_.size(); }
  double coeff(const Monomial& m) const;
  double constant_term() const { return coeff(Monomial::one()); }
  const std::map<Monomial, double, GrlexLess>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(double s) const;
  friend Polynomial operator*(double s, const Polynomial& p) { return p * s; }

  // Strict evaluation; every variable of the polynomial must be assigned.
  double evaluate(const std::map<VarId, double>& point) const;
  // Dense evaluation against a full assignment indexed by VarId.
  double evaluate(std::span<const double> point) const;

  // Replaces bound variables by polynomials; unbound variables are kept.
  Polynomial substitute(const std::map<VarId, Polynomial>& bindings) const;

  std::vector<Monomial> support() const;
  std::vector<VarId> variables() const;

  double max_abs_coeff() const;
  void add_term(const Monomial& m, double coeff);

  std::string str(const VariableUniverse* universe = nullptr) const;

 private:
  std::map<Monomial, double, GrlexLess> terms_;
};

enum class ArithKind { add, sub, mul };

// Spec-level entry point; plain operators are the usual path.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithKind kind);

// All monomials over `vars` with total degree <= max_degree that pass the
// filter, in graded lex order. Unfiltered count is C(n + d, d).
std::vector<Monomial> monomial_basis(
    std::span<const VarId> vars, int max_degree,
    const std::function<bool(const Monomial&)>& filter = {});

}  // namespace sosv
