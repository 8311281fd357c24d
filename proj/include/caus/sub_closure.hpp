#pragma once

#include <vector>

#include "caus/causal_set.hpp"

namespace caus {

/// A formal difference pos - neg of two processes with the same type.
/// (f, g) and (f', g') are identified when f + g' = f' + g.
class FormalDiff {
 public:
  /// Throws DimensionError on mismatched shapes and ConeViolation if either
  /// side is not a process of the base model.
  FormalDiff(Morphism pos, Morphism neg);

  const Morphism& pos() const { return pos_; }
  const Morphism& neg() const { return neg_; }
  const ModelObject& src() const { return pos_.src; }
  const ModelObject& dst() const { return pos_.dst; }

  /// pos - neg as a signed matrix.
  RationalMatrix value() const;

 private:
  Morphism pos_;
  Morphism neg_;
};

Morphism zero_morphism(const ModelObject& src, const ModelObject& dst);
Morphism identity_morphism(const ModelObject& o);
/// f then g.
Morphism compose(const Morphism& f, const Morphism& g);
Morphism tensor(const Morphism& f, const Morphism& g);

FormalDiff embed(const Morphism& f);
bool fd_eq(const FormalDiff& a, const FormalDiff& b);

/// (f, g) then (x, y) = (f;x + g;y, f;y + g;x).
FormalDiff fd_compose(const FormalDiff& a, const FormalDiff& b);
/// (f (x) x + g (x) y, f (x) y + g (x) x).
FormalDiff fd_tensor(const FormalDiff& a, const FormalDiff& b);
FormalDiff fd_add(const FormalDiff& a, const FormalDiff& b);
FormalDiff fd_neg(const FormalDiff& a);

/// Representative with one side zero: (z, 0) or (0, z).
FormalDiff fd_reduce(const FormalDiff& a);

/// Scalars are processes I -> I. Throws InvalidArgument for zero or non-scalars.
FormalDiff fd_scalar_inverse(const FormalDiff& a);

/// Rank of the span of the given states, read as signed vectors.
std::size_t fd_rank(const std::vector<FormalDiff>& states);

}  // namespace caus
