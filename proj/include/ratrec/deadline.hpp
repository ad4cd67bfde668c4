#pragma once

#include "ratrec/errors.hpp"

#include <atomic>
#include <chrono>

namespace ratrec {

/// Wall-clock deadline with an optional external cancellation flag.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget, const std::atomic<bool>* cancel = nullptr) {
    Deadline d;
    d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    d.cancel_ = cancel;
    return d;
  }

  bool expired() const {
    if (cancel_ && cancel_->load(std::memory_order_relaxed)) return true;
    return at_ != Clock::time_point::max() && Clock::now() >= at_;
  }

  void check() const {
    if (expired()) throw Timeout("deadline exceeded");
  }

 private:
  Clock::time_point at_ = Clock::time_point::max();
  const std::atomic<bool>* cancel_ = nullptr;
};

}  // namespace ratrec
