#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "caus/affine.hpp"
#include "caus/matrix.hpp"
#include "caus/model.hpp"

namespace caus {

/// A causal type: an object of a base model together with a closed, flat set
/// of states, stored as its affine hull. The positivity cone is applied at
/// membership time only.
class CausalSet {
 public:
  /// Throws DimensionError if the body does not live on the object's coordinates.
  CausalSet(ModelObject object, AffineSubspace body);

  Backend backend() const { return object_.backend(); }
  const ModelObject& object() const { return object_; }
  const AffineSubspace& body() const { return body_; }
  std::size_t ambient() const { return object_.ambient_dim(); }
  bool is_empty() const { return body_.is_empty(); }

  friend bool operator==(const CausalSet&, const CausalSet&) = default;

 private:
  ModelObject object_;
  AffineSubspace body_;
};

/// A process between two objects, as a matrix on coordinates (dst x src).
struct Morphism {
  ModelObject src;
  ModelObject dst;
  RationalMatrix matrix;
};

enum class AtomKind { FirstOrder, Unit, Zero, One, SingletonUniform };

CausalSet atomic_type(AtomKind kind, const ModelObject& o);

/// Normalized states { x : <discard, x> = 1 }.
CausalSet first_order(const ModelObject& o);
CausalSet unit_type(Backend b);
CausalSet zero_type(Backend b);
CausalSet one_type(Backend b);
/// The single point uniform / d.
CausalSet singleton_uniform(const ModelObject& o);

CausalSet dual(const CausalSet& c);
CausalSet tensor(const CausalSet& c, const CausalSet& d);
CausalSet par(const CausalSet& c, const CausalSet& d);
CausalSet lolli(const CausalSet& c, const CausalSet& d);
/// One-way signalling composite: elements of par(c, d) whose residual on the
/// first factor does not depend on the effect applied to the second.
CausalSet seq(const CausalSet& c, const CausalSet& d);
CausalSet seq_rev(const CausalSet& c, const CausalSet& d);
CausalSet with_prod(const CausalSet& c, const CausalSet& d);
CausalSet plus_coprod(const CausalSet& c, const CausalSet& d);

/// Image of c under a coordinate map onto another object.
CausalSet transport(const CausalSet& c, const ModelObject& target, const RationalMatrix& m);

bool member(const CausalSet& c, const RationalVector& x);
bool set_equal(const CausalSet& c, const CausalSet& d);
bool set_subset(const CausalSet& c, const CausalSet& d);

/// Some non-zero t with t * v in s, if one exists.
std::optional<Rational> scalar_multiple_in(const AffineSubspace& s, const RationalVector& v);

bool is_flat(const CausalSet& c);
bool is_first_order(const CausalSet& c);

/// Plain intersection of bodies; flatness is not re-established.
CausalSet intersect_sets(const CausalSet& c, const CausalSet& d);

enum class CausalVerdict { Causal, NotCausal, ConeViolation };
std::string_view verdict_name(CausalVerdict v);

CausalVerdict check_causal(const Morphism& f, const CausalSet& c, const CausalSet& d);

enum class Structural {
  Swap,               ///< (A, B):       A(x)B -> B(x)A
  AssocL,             ///< (A, B, C):    A(x)(B(x)C) -> (A(x)B)(x)C
  AssocR,             ///< (A, B, C):    (A(x)B)(x)C -> A(x)(B(x)C)
  UnitorL,            ///< (A):          I(x)A -> A
  UnitorR,            ///< (A):          A(x)I -> A
  InterchangeTensor,  ///< (R, U, T, V): (R<U)(x)(T<V) -> (R(x)T)<(U(x)V)
  InterchangePar,     ///< (R, U, T, V): (R|T)<(U|V) -> (R<U)|(T<V)
  LinDistrib,         ///< (A, B, C):    A(x)(B|C) -> (A(x)B)|C
};

std::string_view structural_name(Structural s);
Structural parse_structural(std::string_view name);
std::size_t structural_arity(Structural s);

Morphism structural_mor(Structural s, const std::vector<ModelObject>& objs);

}  // namespace caus
