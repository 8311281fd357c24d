#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "caus/causal_set.hpp"
#include "caus/io.hpp"

namespace caus {

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct CheckReport {
  std::string check;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  double elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// {check, instances, failures[], elapsed_ms}.
Json to_json(const CheckReport& r, bool with_timing = true);

/// A flat closed set together with the cone points whose hull it is.
struct FlatSample {
  CausalSet set;
  std::vector<RationalVector> generators;
};

/// Deterministic source of objects, cone points and flat sets.
class RandomTypeGenerator {
 public:
  RandomTypeGenerator(std::uint64_t seed, Backend backend, std::size_t max_ambient);

  Backend backend() const { return backend_; }
  std::size_t max_ambient() const { return max_ambient_; }

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);

  /// A non-zero object with ambient_dim <= max_ambient.
  ModelObject object();
  /// A non-zero point of the positivity cone pairing to 1 with discard.
  RationalVector cone_point(const ModelObject& o);
  /// Hull of the normalized uniform state and a few random cone points.
  FlatSample flat(const ModelObject& o);
  FlatSample flat() { return flat(object()); }
  /// Random map A -> B in the morphism cone.
  RationalMatrix process(const ModelObject& a, const ModelObject& b);

 private:
  std::mt19937_64 rng_;
  Backend backend_;
  std::size_t max_ambient_;
};

struct CheckParams {
  std::uint64_t seed = 42;
  /// 0 selects the check's default population.
  std::size_t instances = 0;
  /// 0 selects the check's default sizes.
  std::size_t max_ambient = 0;
  /// Replaces dual() inside affine_closure; used to test that the check can fail.
  std::function<CausalSet(const CausalSet&)> dual_override;
};

/// Names accepted by run_check, in report order.
const std::vector<std::string>& check_names();

/// Throws InvalidArgument for an unknown name.
CheckReport run_check(std::string_view name, const CheckParams& params = {});

std::vector<CheckReport> run_all(std::uint64_t seed);

/// Expressions exercised by first_order_char together with whether each is first-order.
struct CatalogueEntry {
  std::string expr;
  Backend backend;
  bool first_order;
};
const std::vector<CatalogueEntry>& first_order_catalogue();

/// The p(ab|xy) = [a xor b = xy] / 2 box on the (2,2)-system tensor type, index (2x+a)*4 + (2y+b).
RationalVector pr_box();
/// p(ab|xy) = [a = 0][b = x]: the second party's outcome copies the first party's input.
RationalVector signalling_box();
/// ((I+I)&(I+I)...) with n inputs of k outcomes.
CausalSet gnst_system(std::size_t n, std::size_t k, Backend backend = Backend::ClassicalNonneg);

}  // namespace caus
