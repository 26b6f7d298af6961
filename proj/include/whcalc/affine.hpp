#pragma once

#include <map>
#include <optional>
#include <string>

#include "whcalc/errors.hpp"

namespace whcalc {

// Integer affine form  sum(coef[v] * v) + cst  over named index variables.
// Coefficients are machine integers: index arithmetic never grows past a few
// digits even under repeated substitution.
struct Affine {
  std::map<std::string, long long> coef;  // no zero entries
  long long cst = 0;

  Affine() = default;
  explicit Affine(long long c) : cst(c) {}

  static Affine variable(const std::string& v, long long scale = 1) {
    Affine a;
    if (scale != 0) a.coef[v] = scale;
    return a;
  }

  bool isConstant() const { return coef.empty(); }
  long long coeffOf(const std::string& v) const {
    auto it = coef.find(v);
    return it == coef.end() ? 0 : it->second;
  }
  bool dependsOn(const std::string& v) const { return coef.count(v) != 0; }

  Affine& operator+=(const Affine& o) {
    for (const auto& [v, c] : o.coef) {
      long long n = (coef[v] += c);
      if (n == 0) coef.erase(v);
    }
    cst += o.cst;
    return *this;
  }
  Affine operator+(const Affine& o) const {
    Affine r = *this;
    r += o;
    return r;
  }
  Affine operator-() const {
    Affine r;
    r.cst = -cst;
    for (const auto& [v, c] : coef) r.coef[v] = -c;
    return r;
  }
  Affine operator-(const Affine& o) const { return *this + (-o); }
  Affine operator*(long long s) const {
    Affine r;
    if (s == 0) return r;
    r.cst = cst * s;
    for (const auto& [v, c] : coef) r.coef[v] = c * s;
    return r;
  }

  // Replaces `v` by the affine form `by`.
  Affine substitute(const std::string& v, const Affine& by) const {
    Affine r = *this;
    auto it = r.coef.find(v);
    if (it == r.coef.end()) return r;
    long long c = it->second;
    r.coef.erase(it);
    r += by * c;
    return r;
  }

  long long eval(const std::map<std::string, long long>& env) const {
    long long acc = cst;
    for (const auto& [v, c] : coef) {
      auto it = env.find(v);
      if (it == env.end()) throw WellFormError("unbound variable '" + v + "' in affine form");
      acc += c * it->second;
    }
    return acc;
  }

  bool operator==(const Affine& o) const { return cst == o.cst && coef == o.coef; }
  bool operator<(const Affine& o) const {
    if (cst != o.cst) return cst < o.cst;
    return coef < o.coef;
  }

  std::string str() const;
};

// Wedge-summand subscript: an affine form c*v + b in at most one bound
// variable, with c > 0 whenever a variable is present.
struct Subscript {
  std::string var;       // empty => constant subscript
  long long coeff = 0;   // > 0 iff var nonempty
  long long offset = 0;

  Subscript() = default;
  static Subscript constant(long long b) {
    Subscript s;
    s.offset = b;
    return s;
  }
  static Subscript linear(const std::string& v, long long c, long long b) {
    if (c <= 0) throw WellFormError("subscript variable coefficient must be positive");
    Subscript s;
    s.var = v;
    s.coeff = c;
    s.offset = b;
    return s;
  }

  bool isConstant() const { return var.empty(); }

  Affine toAffine() const {
    Affine a(offset);
    if (!var.empty()) a.coef[var] = coeff;
    return a;
  }

  // Constant-fold / retarget after an affine substitution.  Throws if the
  // result leaves the one-variable sublanguage.
  static Subscript fromAffine(const Affine& a) {
    if (a.coef.empty()) return constant(a.cst);
    if (a.coef.size() > 1)
      throw UnsupportedReindex("subscript depends on more than one variable: " + a.str());
    auto [v, c] = *a.coef.begin();
    return linear(v, c, a.cst);
  }

  long long eval(const std::map<std::string, long long>& env) const {
    return toAffine().eval(env);
  }

  bool operator==(const Subscript& o) const {
    return var == o.var && coeff == o.coeff && offset == o.offset;
  }
  // Orientation tie-break: (constant part, variable coefficient, variable).
  bool operator<(const Subscript& o) const {
    if (offset != o.offset) return offset < o.offset;
    if (coeff != o.coeff) return coeff < o.coeff;
    return var < o.var;
  }

  std::string str() const;
};

}  // namespace whcalc
