#ifndef SCHEDCP_GRID_HPP_
#define SCHEDCP_GRID_HPP_

#include <cassert>
#include <cstdint>
#include <vector>

namespace schedcp {

// Dense row-major H x W grid. Value type; cheap to copy for the map sizes
// used here (64x64 doubles).
template <typename T>
class Grid {
 public:
  Grid() : h_(0), w_(0) {}
  Grid(int h, int w, T init = T{}) : h_(h), w_(w), v_(static_cast<size_t>(h) * w, init) {
    assert(h >= 0 && w >= 0);
  }

  int height() const { return h_; }
  int width() const { return w_; }
  std::int64_t size() const { return static_cast<std::int64_t>(v_.size()); }

  T& operator()(int row, int col) {
    assert(row >= 0 && row < h_ && col >= 0 && col < w_);
    return v_[static_cast<size_t>(row) * w_ + col];
  }
  const T& operator()(int row, int col) const {
    assert(row >= 0 && row < h_ && col >= 0 && col < w_);
    return v_[static_cast<size_t>(row) * w_ + col];
  }

  T& operator[](std::int64_t i) { return v_[static_cast<size_t>(i)]; }
  const T& operator[](std::int64_t i) const { return v_[static_cast<size_t>(i)]; }

  T* data() { return v_.data(); }
  const T* data() const { return v_.data(); }

  auto begin() { return v_.begin(); }
  auto end() { return v_.end(); }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool same_shape(const Grid& o) const { return h_ == o.h_ && w_ == o.w_; }
  bool operator==(const Grid& o) const = default;

  void fill(T value) { v_.assign(v_.size(), value); }

 private:
  int h_, w_;
  std::vector<T> v_;
};

using ConfidenceMap = Grid<double>;
using BinaryMap = Grid<std::uint8_t>;

}  // namespace schedcp

#endif  // SCHEDCP_GRID_HPP_
