#pragma once

#include <map>
#include <string>
#include <vector>

#include "whcalc/affine.hpp"
#include "whcalc/ints.hpp"

namespace whcalc {

// Multivariate integer polynomial in bound index variables.  Canonical form:
// monomials sorted by the map ordering, no zero coefficients.
struct Poly {
  using Monomial = std::map<std::string, int>;  // var -> exponent > 0
  std::map<Monomial, Int> terms;

  Poly() = default;
  explicit Poly(Int c) {
    if (c != 0) terms[{}] = std::move(c);
  }
  explicit Poly(long long c) : Poly(Int(c)) {}

  static Poly variable(const std::string& v) {
    Poly p;
    p.terms[{{v, 1}}] = 1;
    return p;
  }
  static Poly fromAffine(const Affine& a) {
    Poly p;
    if (a.cst != 0) p.terms[{}] = a.cst;
    for (const auto& [v, c] : a.coef) p.terms[{{v, 1}}] = c;
    return p;
  }

  bool isZero() const { return terms.empty(); }
  bool isConstant() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
  }
  Int constantValue() const {
    auto it = terms.find({});
    return it == terms.end() ? Int(0) : it->second;
  }
  int totalDegree() const {
    int d = 0;
    for (const auto& [m, c] : terms) {
      int s = 0;
      for (const auto& [v, e] : m) s += e;
      if (s > d) d = s;
    }
    return d;
  }
  bool dependsOn(const std::string& v) const {
    for (const auto& [m, c] : terms)
      if (m.count(v)) return true;
    return false;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms) {
      Int& slot = terms[m];
      slot += c;
      if (slot == 0) terms.erase(m);
    }
    return *this;
  }
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
  }
  Poly operator-() const {
    Poly r;
    for (const auto& [m, c] : terms) r.terms[m] = -c;
    return r;
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    Poly r;
    for (const auto& [m1, c1] : terms)
      for (const auto& [m2, c2] : o.terms) {
        Monomial m = m1;
        for (const auto& [v, e] : m2) m[v] += e;
        Int& slot = r.terms[m];
        slot += c1 * c2;
        if (slot == 0) r.terms.erase(m);
      }
    return r;
  }

  // Replaces `v` by an affine form.
  Poly substitute(const std::string& v, const Affine& by) const {
    Poly sub = fromAffine(by);
    Poly r;
    for (const auto& [m, c] : terms) {
      Poly piece{c};
      for (const auto& [w, e] : m) {
        Poly base = (w == v) ? sub : variable(w);
        for (int i = 0; i < e; ++i) piece = piece * base;
      }
      r += piece;
    }
    return r;
  }

  Int eval(const std::map<std::string, long long>& env) const {
    Int acc = 0;
    for (const auto& [m, c] : terms) {
      Int t = c;
      for (const auto& [v, e] : m) {
        auto it = env.find(v);
        if (it == env.end()) throw WellFormError("unbound variable '" + v + "' in coefficient");
        for (int i = 0; i < e; ++i) t *= it->second;
      }
      acc += t;
    }
    return acc;
  }

  // Coefficientwise residue in [0, m); identity when m == 0.
  Poly reducedMod(const Int& m) const {
    if (m == 0) return *this;
    Poly r;
    for (const auto& [mon, c] : terms) {
      Int v = reduceMod(c, m);
      if (v != 0) r.terms[mon] = v;
    }
    return r;
  }

  bool operator==(const Poly& o) const { return terms == o.terms; }
  bool operator<(const Poly& o) const { return terms < o.terms; }

  std::string str() const;
};

}  // namespace whcalc
