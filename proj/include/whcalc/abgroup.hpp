#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "whcalc/errors.hpp"
#include "whcalc/ints.hpp"

namespace whcalc::abgroup {

// Dense integer matrix, row-major.
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}
  Int& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  Matrix operator*(const Matrix& o) const;
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Finitely generated abelian group as an ordered list of cyclic factors.
// Order 0 denotes an infinite cyclic factor.  A group may be held in any
// presentation; invariantFactors() yields the canonical d1 | d2 | ... list
// (trivial factors dropped, free factors trailing as 0s).
struct FGAbelianGroup {
  std::vector<Int> orders;
  std::vector<std::string> labels;  // optional generator labels, parallel to orders

  FGAbelianGroup() = default;
  explicit FGAbelianGroup(std::vector<Int> ord) : orders(std::move(ord)) {}

  static FGAbelianGroup free(int rank) {
    return FGAbelianGroup(std::vector<Int>(size_t(rank), Int(0)));
  }
  static FGAbelianGroup cyclic(const Int& order) { return FGAbelianGroup({order}); }
  static FGAbelianGroup trivial() { return FGAbelianGroup(); }

  size_t genCount() const { return orders.size(); }
  bool isTrivial() const {
    for (const auto& d : orders)
      if (d != 1) return false;
    return true;
  }
  const Int& orderOf(int gen) const {
    if (gen < 0 || size_t(gen) >= orders.size())
      throw IndexError("generator index out of range");
    return orders[size_t(gen)];
  }

  std::vector<Int> invariantFactors() const;
  FGAbelianGroup canonical() const { return FGAbelianGroup(invariantFactors()); }
  bool sameGroupAs(const FGAbelianGroup& o) const {
    return invariantFactors() == o.invariantFactors();
  }

  std::string str() const;  // e.g. "Z^3", "Z_2 + Z_4", "0"
};

// Smith normal form with transformation witnesses: M = U * D * V with U, V
// unimodular and D diagonal with d1 | d2 | ...
struct SmithResult {
  Matrix d, u, v;
  std::vector<Int> factors;  // nonzero diagonal entries then zeros, d1 | d2 | ...
};

SmithResult smithNormalForm(const Matrix& m);

// The abelian group Z^rows / (column span of M), canonicalized.
FGAbelianGroup groupFromRelations(const Matrix& m);

// Tensor product of finitely generated abelian groups: one factor per
// generator pair with order gcd(d_s, d_t), recanonicalized.
FGAbelianGroup tensor(const FGAbelianGroup& g, const FGAbelianGroup& h);

// Element of G (x) H in generator-pair coordinates, each coordinate reduced
// modulo gcd(order_s, order_t).
struct TensorElement {
  FGAbelianGroup g, h;
  std::map<std::pair<int, int>, Int> coords;  // (s,t) -> canonical residue, no zeros

  Int pairOrder(int s, int t) const { return gcd0(g.orderOf(s), h.orderOf(t)); }
  void set(int s, int t, const Int& v) {
    Int r = reduceMod(v, pairOrder(s, t));
    if (r == 0)
      coords.erase({s, t});
    else
      coords[{s, t}] = r;
  }
  void add(int s, int t, const Int& v) {
    Int cur = 0;
    auto it = coords.find({s, t});
    if (it != coords.end()) cur = it->second;
    set(s, t, cur + v);
  }
  bool isZero() const { return coords.empty(); }
  bool operator==(const TensorElement& o) const { return coords == o.coords; }
  std::string str() const;
};

// Element of G (x) (H_1 x ... x H_J) as a finite sum of simple tensors
// a (x) (b_1, ..., b_J); coordinates over the groups' given generators.
struct ProductTensorTerm {
  std::vector<Int> a;
  std::vector<std::vector<Int>> b;
};

struct ProductTensor {
  FGAbelianGroup g;
  std::vector<FGAbelianGroup> hs;
  std::vector<ProductTensorTerm> terms;
};

// theta: G (x) prod_j H_j -> prod_j (G (x) H_j), componentwise on simple
// tensors, linear in both slots.
std::vector<TensorElement> thetaForward(const ProductTensor& x);

// Right inverse of thetaForward; on canonical representatives it is a two-
// sided inverse.  Components must share G and match hs.
ProductTensor thetaInverse(const FGAbelianGroup& g, const std::vector<FGAbelianGroup>& hs,
                           const std::vector<TensorElement>& comps);

// Canonical representative: one term per G-generator, coordinates reduced.
ProductTensor canonicalProductTensor(const ProductTensor& x);

// (+)_{k=1}^{m-1} ( G_k (x) (+)_{j>k} G_j ), canonicalized.
FGAbelianGroup finiteWedgeKernelGroup(const std::vector<FGAbelianGroup>& groups);

}  // namespace whcalc::abgroup
