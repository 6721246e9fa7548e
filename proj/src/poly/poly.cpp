#include "poly/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace sosv {

bool is_successor_block(VarBlock b) {
  return b == VarBlock::state_next || b == VarBlock::lifting_next ||
         b == VarBlock::input_next;
}

VariableUniverse::VariableUniverse(int n_state, int n_lifting, int n_input)
    : n_(n_state), nl_(n_lifting), p_(n_input) {
  if (n_ < 0 || nl_ < 0 || p_ < 0) throw ModelError("negative block dimension");
}

VarId VariableUniverse::var(VarBlock b, int i) const {
  int half = n_ + nl_ + p_;
  auto check = [&](int dim, int base) {
    if (i < 0 || i >= dim) throw ModelError("variable index out of range");
    return static_cast<VarId>(base + i);
  };
  switch (b) {
    case VarBlock::state: return check(n_, 0);
    case VarBlock::lifting: return check(nl_, n_);
    case VarBlock::input: return check(p_, n_ + nl_);
    case VarBlock::state_next: return check(n_, half);
    case VarBlock::lifting_next: return check(nl_, half + n_);
    case VarBlock::input_next: return check(p_, half + n_ + nl_);
  }
  throw ModelError("bad block");
}

VarBlock VariableUniverse::block_of(VarId v) const {
  int half = n_ + nl_ + p_;
  int i = static_cast<int>(v);
  if (i >= 2 * half) throw ModelError("variable outside universe");
  bool next = i >= half;
  int j = next ? i - half : i;
  if (j < n_) return next ? VarBlock::state_next : VarBlock::state;
  if (j < n_ + nl_) return next ? VarBlock::lifting_next : VarBlock::lifting;
  return next ? VarBlock::input_next : VarBlock::input;
}

int VariableUniverse::index_in_block(VarId v) const {
  int half = n_ + nl_ + p_;
  int j = static_cast<int>(v) % half;
  if (j < n_) return j;
  if (j < n_ + nl_) return j - n_;
  return j - n_ - nl_;
}

VarId VariableUniverse::successor(VarId v) const {
  if (is_successor_block(block_of(v)))
    throw ModelError("successor of a successor variable");
  return v + static_cast<VarId>(n_ + nl_ + p_);
}

VarId VariableUniverse::base_of(VarId v) const {
  if (!is_successor_block(block_of(v))) return v;
  return v - static_cast<VarId>(n_ + nl_ + p_);
}

std::string VariableUniverse::name(VarId v) const {
  VarBlock b = block_of(v);
  int i = index_in_block(v) + 1;
  std::string s;
  switch (b) {
    case VarBlock::state: case VarBlock::state_next: s = "x"; break;
    case VarBlock::lifting: case VarBlock::lifting_next: s = "lam"; break;
    case VarBlock::input: case VarBlock::input_next: s = "u"; break;
  }
  s += std::to_string(i);
  if (is_successor_block(b)) s += "+";
  return s;
}

std::optional<VarId> VariableUniverse::find(const std::string& nm) const {
  for (VarId v = 0; v < size(); ++v)
    if (name(v) == nm) return v;
  return std::nullopt;
}

std::vector<VarId> VariableUniverse::state_vars() const {
  std::vector<VarId> out;
  for (int i = 0; i < n_; ++i) out.push_back(var(VarBlock::state, i));
  return out;
}

std::vector<VarId> VariableUniverse::zeta() const {
  std::vector<VarId> out;
  for (int i = 0; i < n_ + nl_ + p_; ++i) out.push_back(static_cast<VarId>(i));
  return out;
}

std::vector<VarId> VariableUniverse::zeta_next() const {
  int half = n_ + nl_ + p_;
  std::vector<VarId> out;
  for (int i = 0; i < half; ++i) out.push_back(static_cast<VarId>(half + i));
  return out;
}

std::vector<VarId> VariableUniverse::xi() const {
  std::vector<VarId> out;
  for (VarId v = 0; v < size(); ++v) out.push_back(v);
  return out;
}

Monomial Monomial::var(VarId v, std::uint32_t e) {
  Monomial m;
  if (e > 0) m.factors_.push_back({v, e});
  return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<VarId, std::uint32_t>> f) {
  std::sort(f.begin(), f.end());
  Monomial m;
  for (auto& [v, e] : f) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.push_back({v, e});
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : factors_) d += static_cast<int>(e);
  return d;
}

int Monomial::degree_in(VarId v) const {
  for (auto& [w, e] : factors_)
    if (w == v) return static_cast<int>(e);
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < o.factors_.size()) {
    if (factors_[i].first < o.factors_[j].first)
      r.factors_.push_back(factors_[i++]);
    else if (factors_[i].first > o.factors_[j].first)
      r.factors_.push_back(o.factors_[j++]);
    else {
      r.factors_.push_back({factors_[i].first, factors_[i].second + o.factors_[j].second});
      ++i, ++j;
    }
  }
  while (i < factors_.size()) r.factors_.push_back(factors_[i++]);
  while (j < o.factors_.size()) r.factors_.push_back(o.factors_[j++]);
  return r;
}

double Monomial::eval(std::span<const double> point) const {
  double r = 1.0;
  for (auto& [v, e] : factors_) {
    double base = point[v];
    for (std::uint32_t k = 0; k < e; ++k) r *= base;
  }
  return r;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Same degree: walk variables in increasing VarId; larger exponent first.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first != fb[j].first) return fa[i].first < fb[j].first;
    if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
    ++i, ++j;
  }
  return false;  // identical
}

Polynomial::Polynomial(double constant) {
  if (std::abs(constant) >= kCoeffEpsilon) terms_[Monomial::one()] = constant;
}

Polynomial Polynomial::variable(VarId v) {
  Polynomial p;
  p.terms_[Monomial::var(v)] = 1.0;
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, double coeff) {
  Polynomial p;
  if (std::abs(coeff) >= kCoeffEpsilon) p.terms_[m] = coeff;
  return p;
}

int Polynomial::degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

int Polynomial::degree_in(VarId v) const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
  return d;
}

double Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const Monomial& m, double coeff) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (std::abs(coeff) >= kCoeffEpsilon) terms_[m] = coeff;
  } else {
    it->second += coeff;
    if (std::abs(it->second) < kCoeffEpsilon) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(double s) const {
  Polynomial r;
  for (auto& [m, c] : terms_) {
    double v = c * s;
    if (std::abs(v) >= kCoeffEpsilon) r.terms_[m] = v;
  }
  return r;
}

double Polynomial::evaluate(const std::map<VarId, double>& point) const {
  for (VarId v : variables())
    if (!point.count(v))
      throw ModelError("evaluate: missing assignment for variable index " +
                       std::to_string(v));
  double r = 0.0;
  for (auto& [m, c] : terms_) {
    double t = c;
    for (auto& [v, e] : m.factors()) {
      double base = point.at(v);
      for (std::uint32_t k = 0; k < e; ++k) t *= base;
    }
    r += t;
  }
  return r;
}

double Polynomial::evaluate(std::span<const double> point) const {
  double r = 0.0;
  for (auto& [m, c] : terms_) r += c * m.eval(point);
  return r;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& bindings) const {
  // Power cache per bound variable keeps repeated expansion cheap.
  std::map<VarId, std::vector<Polynomial>> powers;
  auto power = [&](VarId v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial(1.0));
    while (cache.size() <= e) cache.push_back(cache.back() * bindings.at(v));
    return cache[e];
  };
  Polynomial r;
  for (auto& [m, c] : terms_) {
    Polynomial t(c);
    Monomial kept;
    for (auto& [v, e] : m.factors()) {
      if (bindings.count(v))
        t = t * power(v, e);
      else
        kept = kept * Monomial::var(v, e);
    }
    if (!kept.is_one()) t = t * Polynomial::monomial(kept);
    r += t;
  }
  return r;
}

std::vector<Monomial> Polynomial::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (auto& [m, c] : terms_) out.push_back(m);
  return out;
}

std::vector<VarId> Polynomial::variables() const {
  std::vector<VarId> out;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.factors()) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double Polynomial::max_abs_coeff() const {
  double r = 0.0;
  for (auto& [m, c] : terms_) r = std::max(r, std::abs(c));
  return r;
}

std::string Polynomial::str(const VariableUniverse* universe) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    double a = std::abs(c);
    bool unit = std::abs(a - 1.0) < 1e-12 && !m.is_one();
    if (!unit) os << a;
    for (auto& [v, e] : m.factors()) {
      os << (unit ? "" : "*");
      unit = false;
      if (universe) os << universe->name(v);
      else os << "v" << v;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
  }
  throw ModelError("bad arith kind");
}

namespace {
void enumerate_monomials(std::span<const VarId> vars, std::size_t i, int budget,
                         Monomial current, std::vector<Monomial>& out) {
  if (i == vars.size()) {
    out.push_back(current);
    return;
  }
  for (int e = budget; e >= 0; --e)
    enumerate_monomials(vars, i + 1, budget - e,
                        current * Monomial::var(vars[i], static_cast<std::uint32_t>(e)),
                        out);
}
}  // namespace

std::vector<Monomial> monomial_basis(std::span<const VarId> vars, int max_degree,
                                     const std::function<bool(const Monomial&)>& filter) {
  if (max_degree < 0) throw ModelError("monomial_basis: negative degree");
  std::vector<Monomial> out;
  enumerate_monomials(vars, 0, max_degree, Monomial::one(), out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  if (filter) {
    std::vector<Monomial> kept;
    for (auto& m : out)
      if (filter(m)) kept.push_back(m);
    out = std::move(kept);
  }
  return out;
}

}  // namespace sosv
