#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rackyd {

/// Input that violates a structural requirement (bad table, failed precondition).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A failing tuple of basis/element indices. Checkers sweep tuples in
/// lexicographic order, so the first witness is the lexicographic minimum.
struct Witness {
  std::string check;
  std::vector<long> indices;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckOptions {
  std::size_t witness_limit = 1;
};

/// Witness collector honoring CheckOptions::witness_limit.
class WitnessLog {
public:
  explicit WitnessLog(const CheckOptions& opts = {}) : limit_(opts.witness_limit ? opts.witness_limit : 1) {}

  void add(std::string check, std::vector<long> indices) {
    failed_ = true;
    if (items_.size() < limit_) items_.push_back({std::move(check), std::move(indices)});
  }
  bool failed() const { return failed_; }
  bool full() const { return failed_ && items_.size() >= limit_; }
  std::vector<Witness> take() { return std::move(items_); }

private:
  std::size_t limit_;
  bool failed_ = false;
  std::vector<Witness> items_;
};

}  // namespace rackyd
