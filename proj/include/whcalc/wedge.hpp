#pragma once

#include <string>
#include <vector>

#include "whcalc/abgroup.hpp"

namespace whcalc {

// Shrinking wedge of (n-1)-connected summands described by their n-th
// homotopy groups: finitely many explicit groups followed by a tail rule
// ("all remaining summands equal `tail`").
struct WedgeSpec {
  std::vector<abgroup::FGAbelianGroup> groups;  // summands 1..groups.size()
  abgroup::FGAbelianGroup tail;                 // summands > groups.size()
  int gradeN = 2;

  static WedgeSpec earring(int gradeN = 2) {
    WedgeSpec w;
    w.tail = abgroup::FGAbelianGroup::free(1);
    w.gradeN = gradeN;
    return w;
  }

  const abgroup::FGAbelianGroup& summand(long long j) const {
    if (j < 1) throw IndexError("wedge summand index must be >= 1");
    if (size_t(j) <= groups.size()) return groups[size_t(j) - 1];
    return tail;
  }
  // True when all summands with index >= lo are the same group.
  bool homogeneousFrom(long long lo) const;
  // True when every summand a linear subscript can reach carries an
  // identical group.
  bool validate() const { return gradeN >= 2; }

  bool operator==(const WedgeSpec& o) const;
  std::string str() const;
};

namespace abgroup {

// (+)_{j<k<=N} ( G_j (x) G_k ), the horizon-N approximation of the full
// product over pairs k > j >= 1.
FGAbelianGroup truncatedWGroup(const WedgeSpec& wedge, long long horizon);

}  // namespace abgroup

}  // namespace whcalc
