// Chow (secondary) and Hurwitz polytopes assembled from the characteristic
// vectors of all regular triangulations, with exact support queries and the
// pairing / support cross-checks.
#pragma once

#include "toric/char_vectors.hpp"
#include "toric/functionals.hpp"
#include "toric/lattice_polytope.hpp"
#include "toric/triangulation.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

enum class WeightKind { chow, hurwitz };

std::string_view to_string(WeightKind kind);

struct Generator {
  IntVector vector;
  std::vector<std::size_t> triangulations;  // ids into the enumeration
};

struct WeightPolytope {
  WeightKind kind = WeightKind::chow;
  std::vector<Generator> generators;  // distinct vectors, sorted
  std::vector<IntVector> vertices;    // extreme generators, sorted
  std::size_t ambient_dim = 0;
  std::size_t affine_dim = 0;
};

/// Builds the polytope from enumerated regular triangulations. Extreme points
/// are found by one exact separation LP per generator.
WeightPolytope build(WeightKind kind, const LatticePolytope& q, const PointConfiguration& a,
                     std::span<const RegularTriangulation> regular);

/// Exact membership test for conv(generators).
bool contains(const WeightPolytope& p, std::span<const std::int64_t> x);

struct SupportResult {
  Integer value;
  std::vector<IntVector> argmin;
};

/// min <x, lambda> over the vertices and the vertices attaining it.
SupportResult support_min(const WeightPolytope& p, std::span<const Integer> lambda);

/// Everything derived from one polytope Q.
struct ToricData {
  LatticePolytope polytope;
  PointConfiguration points;
  Degrees degrees;
  std::vector<RegularTriangulation> regular;
  WeightPolytope chow;
  WeightPolytope hurwitz;

  /// Throws IncompleteEnumeration when a cap is hit.
  static ToricData compute(LatticePolytope q, const EnumerationOptions& options = {});
};

enum class CheckStatus { pass, fail, inapplicable };

std::string_view to_string(CheckStatus status);

struct SupportReport {
  CheckStatus status = CheckStatus::inapplicable;
  Integer polytope_min;        // min over the weight polytope
  Integer triangulation_value; // <char vector of T_lambda, lambda>
  std::vector<IntVector> argmin;
  std::optional<Triangulation> induced;  // T_lambda
  std::string detail;
};

/// min over Ch of <x, lambda> against <eta_{T_lambda}, lambda>; inapplicable
/// when the lower hull of lambda is not simplicial.
SupportReport verify_chow_support(const ToricData& data, const Lifting& lambda);
/// Same with the Hurwitz polytope and xi_{T_lambda}.
SupportReport verify_hurwitz_support(const ToricData& data, const Lifting& lambda);

/// Both sides of the three pairing identities for one (T, g).
struct IdentitySides {
  Rational gkz_pairing, gkz_integral;            // (eta, g) vs (n+1)! int_Q g
  Rational boundary_pairing, boundary_integral;  // (eta_bdry, g) vs n! int_dQ g
  Rational f_scaled, hurwitz_pairing;            // (n+1)! Vol F(g) vs (n degHu eta - (n+1) degCh xi, g)

  bool holds() const {
    return gkz_pairing == gkz_integral && boundary_pairing == boundary_integral &&
           f_scaled == hurwitz_pairing;
  }
};

IdentitySides identity_sides(const ToricData& data, const Triangulation& t, const PLFunction& g);

struct VerificationReport {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// For every enumerated T and `trials` seeded random rational g on T: the three
/// pairing identities, the constant-sum invariants, and T-independence of the
/// pairings with affine functions.
VerificationReport verify_identities(const ToricData& data, std::size_t trials, std::uint64_t seed);

struct SupportSweep {
  std::size_t attempts = 0;
  std::size_t applicable = 0;
  VerificationReport report;
};

/// Draws seeded integral liftings with entries in [-range, 0] until `count`
/// of them have a simplicial lower hull (or 50 * count draws), checking both
/// support checks and that each T_lambda was enumerated.
SupportSweep verify_support_random(const ToricData& data, std::size_t count, std::uint64_t seed,
                                   std::int64_t range = 12);

/// mt19937_64 with a fixed reduction, so seeded runs are reproducible across
/// standard libraries (std::uniform_int_distribution is not).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// Integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace toric
