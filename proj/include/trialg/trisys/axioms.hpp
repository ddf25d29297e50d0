#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "trialg/trisys/report.hpp"
#include "trialg/trisys/tri_system.hpp"

namespace trialg {

/// Thrown when a finite sweep would exceed the dimension guardrail.
struct GuardrailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 12, or the value of TRIALG_MAX_DIM when set.
std::size_t default_max_dim();

struct SweepOptions {
  unsigned degree_cap = 3;
  /// Check this many random tuples per identity instead of all of them.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 20240601;
  unsigned threads = 1;
  std::size_t max_witnesses = 5;
  std::size_t max_dim = default_max_dim();
};

/// Outer-slot antisymmetry and the N=6 fundamental identity.
AxiomReport check_n6(const TriSystem& sys, const SweepOptions& opt = {});
/// Total antisymmetry and the fundamental identity.
AxiomReport check_n8(const TriSystem& sys, const SweepOptions& opt = {});
/// Symmetry in the first pair, the derivation identity and the cyclic identity.
AxiomReport check_n5(const TriSystem& sys, const SweepOptions& opt = {});

}  // namespace trialg
