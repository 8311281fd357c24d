#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "caus/matrix.hpp"
#include "caus/rational.hpp"

namespace caus {

enum class Backend {
  ClassicalNonneg,  ///< nonnegative rational matrices
  ClassicalAffine,  ///< rational matrices without positivity (quasi-probabilistic)
  QuantumCP,        ///< completely positive maps on direct sums of matrix algebras
};

/// "classical", "classical-affine" or "quantum".
std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

/// One block L(H) of a quantum object, with H = H_1 (x) ... (x) H_k given by the
/// factor dimensions (all > 1; an empty list is a one-dimensional block).
/// Coordinates of a factored block are the Kronecker product of per-factor
/// coordinates, so tensoring states is the plain Kronecker product.
using Block = std::vector<int>;

int block_dim(const Block& b);

/// A system of one of the base models.
class ModelObject {
 public:
  static ModelObject classical(std::size_t n, Backend backend = Backend::ClassicalNonneg);
  /// Unfactored blocks of the given Hilbert dimensions.
  static ModelObject quantum(const std::vector<int>& block_dims);
  static ModelObject quantum_blocks(std::vector<Block> blocks);
  /// Same blocks with an explicit slot map; throws unless the slots are a
  /// permutation of the coordinates with one entry per block slot.
  static ModelObject with_layout(const ModelObject& o, std::vector<std::vector<std::size_t>> slots);
  static ModelObject zero(Backend backend);
  static ModelObject unit(Backend backend);

  Backend backend() const { return backend_; }
  bool is_quantum() const { return backend_ == Backend::QuantumCP; }
  bool is_zero() const { return ambient_ == 0; }
  std::size_t ambient_dim() const { return ambient_; }

  /// Quantum only.
  const std::vector<Block>& blocks() const { return blocks_; }
  /// Global coordinate index of each block-local slot. Blocks of a tensor
  /// product are not contiguous: slot (k, l) of block (r, u) sits at
  /// slots_r[k] * n_U + slots_u[l].
  const std::vector<std::vector<std::size_t>>& block_slots() const { return slots_; }
  std::vector<int> block_dims() const;

  /// "3" for classical objects, "[2,1]" or "[2x2]" for quantum ones.
  std::string describe() const;

  friend bool operator==(const ModelObject&, const ModelObject&) = default;
  friend ModelObject tensor_object(const ModelObject& a, const ModelObject& b);
  friend ModelObject biproduct_object(const ModelObject& a, const ModelObject& b);

 private:
  ModelObject() = default;
  Backend backend_ = Backend::ClassicalNonneg;
  std::size_t ambient_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::vector<std::size_t>> slots_;
};

/// Throws BackendError unless both objects come from the same base model.
void require_same_backend(const ModelObject& a, const ModelObject& b);

/// Weights g with <e, x> = sum_i g_i e_i x_i. Classical objects use all ones;
/// quantum coordinates carry 1 on diagonal slots, 2 on real off-diagonal slots
/// and -2 on imaginary ones (trace pairing under the transpose identification).
RationalVector pairing_weights(const ModelObject& o);

struct StructureVectors {
  RationalVector discard;
  RationalVector uniform;
  std::optional<Rational> dim_scalar;  ///< unset on the zero object
  std::vector<RationalVector> causal_basis;
  bool zero_object = false;
};

StructureVectors structure_vectors(const ModelObject& o);

RationalVector discard_vector(const ModelObject& o);
RationalVector uniform_vector(const ModelObject& o);

/// Positivity cone membership: entrywise >= 0, always true, or blockwise PSD.
bool cone_member(const ModelObject& o, const RationalVector& x);

struct TensorStructure {
  ModelObject object;
  /// Maps coordinates of A (x) B to those of B (x) A.
  RationalMatrix swap;
};

ModelObject tensor_object(const ModelObject& a, const ModelObject& b);
TensorStructure tensor_structure(const ModelObject& a, const ModelObject& b);

/// Coordinates of x (x) y on tensor_object(a, b); plain Kronecker product.
RationalVector kron_coords(const RationalVector& x, const RationalVector& y);

/// Permutation matrix sending kron(x_0, ..., x_{m-1}) (factor i of length
/// sizes[i]) to kron(x_{order[0]}, ..., x_{order[m-1]}).
RationalMatrix factor_permutation(const std::vector<std::size_t>& sizes, const std::vector<std::size_t>& order);

struct BiproductStructure {
  ModelObject object;
  RationalMatrix inject1, inject2;    ///< A -> A+B, B -> A+B
  RationalMatrix project1, project2;  ///< A+B -> A, A+B -> B
};

ModelObject biproduct_object(const ModelObject& a, const ModelObject& b);
BiproductStructure biproduct_structure(const ModelObject& a, const ModelObject& b);

/// Full pairing <e, x> on one object.
Rational pairing(const ModelObject& o, const RationalVector& e, const RationalVector& x);
/// Contracts the B-indices of a state h on A (x) B against an effect e on B; result lives on A.
RationalVector partial_right(const ModelObject& a, const ModelObject& b, const RationalVector& e,
                             const RationalVector& h);
/// Contracts the A-indices of h against an effect e on A; result lives on B.
RationalVector partial_left(const ModelObject& a, const ModelObject& b, const RationalVector& e,
                            const RationalVector& h);

struct Complement {
  RationalVector complement;
  Rational lambda;
};

/// pi + pi' = lambda * discard with pi' in the effect cone and lambda > 0.
/// Classical: lambda = max entry (1 when that is not positive); quantum: lambda = trace (1 for zero).
Complement effect_complement(const ModelObject& o, const RationalVector& effect);

struct ProcessComplement {
  RationalMatrix complement;
  Rational lambda;
};

/// f + f' = lambda * (discard_A ; uniform_B) for f : A -> B in the morphism cone.
ProcessComplement process_complement(const ModelObject& a, const ModelObject& b, const RationalMatrix& f);

/// Choi-style state on A (x) B of the map f : A -> B (matrix acting on coordinates).
RationalVector bend(const ModelObject& a, const ModelObject& b, const RationalMatrix& f);
RationalMatrix unbend(const ModelObject& a, const ModelObject& b, const RationalVector& h);

/// Positivity of the map: entrywise, always, or complete positivity via its Choi state.
bool morphism_cone_member(const ModelObject& a, const ModelObject& b, const RationalMatrix& f);

}  // namespace caus
