#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "trialg/trisys/sparse_vec.hpp"

namespace trialg {

/// Bracket access over integer basis ids, with whatever caching the system needs.
/// Ids 0 .. test_size()-1 form the test basis; brackets may produce further ids.
/// A session is single-threaded; open one per worker.
class BracketSession {
 public:
  virtual ~BracketSession() = default;
  [[nodiscard]] virtual std::uint32_t test_size() const = 0;
  virtual const SparseVec& bracket(std::uint32_t i, std::uint32_t j, std::uint32_t k) = 0;
  virtual std::string label(std::uint32_t id) = 0;
};

class TriSystem {
 public:
  virtual ~TriSystem() = default;
  [[nodiscard]] virtual std::string name() const = 0;
  [[nodiscard]] virtual bool is_finite() const = 0;
  /// degree_cap is ignored by finite systems.
  [[nodiscard]] virtual std::unique_ptr<BracketSession> open_session(unsigned degree_cap) const = 0;
};

}  // namespace trialg
