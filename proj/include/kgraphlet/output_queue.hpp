#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "kgraphlet/types.hpp"

namespace kgraphlet {

// ceil(2 * worst_leaf / mean) + 1, the queue length that turns an amortized
// per-solution bound into a worst-case delay bound.
inline std::size_t output_queue_capacity(double worst_leaf_time, double mean_time) {
  KG_REQUIRE(worst_leaf_time >= 0 && mean_time > 0, "output_queue_capacity: bad times");
  return static_cast<std::size_t>(std::ceil(2.0 * worst_leaf_time / mean_time)) + 1;
}

// Sink wrapper that holds back solutions in a bounded FIFO. Once the queue
// is full every new solution releases the oldest one, so the downstream
// sink sees a steady stream instead of bursts; flush() drains the rest.
class OutputQueue {
 public:
  OutputQueue(std::size_t capacity, SolutionSink downstream)
      : capacity_(capacity), downstream_(downstream), slots_(capacity) {
    KG_REQUIRE(capacity >= 1, "OutputQueue: capacity must be positive");
  }
  ~OutputQueue() { flush(); }
  OutputQueue(const OutputQueue&) = delete;
  OutputQueue& operator=(const OutputQueue&) = delete;

  void operator()(std::span<const std::uint32_t> ids) {
    if (size_ == capacity_) release_one();
    auto& slot = slots_[(head_ + size_) % capacity_];
    slot.assign(ids.begin(), ids.end());
    ++size_;
    ++pushed_;
  }

  void flush() {
    while (size_ > 0) release_one();
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return size_; }
  std::uint64_t pushed() const { return pushed_; }
  std::uint64_t released() const { return released_; }

 private:
  void release_one() {
    downstream_(slots_[head_]);
    head_ = (head_ + 1) % capacity_;
    --size_;
    ++released_;
  }

  std::size_t capacity_;
  SolutionSink downstream_;
  std::vector<std::vector<std::uint32_t>> slots_;
  std::size_t head_ = 0;
  std::size_t size_ = 0;
  std::uint64_t pushed_ = 0;
  std::uint64_t released_ = 0;
};

}  // namespace kgraphlet
