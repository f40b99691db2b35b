#ifndef ADAV_TENSOR_HPP
#define ADAV_TENSOR_HPP

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "adav/errors.hpp"

namespace adav {

// Dense row-major tensor of doubles. Images are HWC, kernels are
// [kh, kw, cin, cout].
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::initializer_list<int> dims, double fill = 0.0)
      : shape(dims), data(count(shape), fill) {}
  Tensor(std::vector<int> dims, double fill)
      : shape(std::move(dims)), data(count(shape), fill) {}

  static size_t count(const std::vector<int>& dims) {
    size_t n = 1;
    for (int d : dims) {
      if (d <= 0) throw ContractError("tensor dims must be positive");
      n *= static_cast<size_t>(d);
    }
    return n;
  }

  size_t numel() const { return data.size(); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }

  double& at3(int y, int x, int c) {
    return data[(static_cast<size_t>(y) * shape[1] + x) * shape[2] + c];
  }
  double at3(int y, int x, int c) const {
    return data[(static_cast<size_t>(y) * shape[1] + x) * shape[2] + c];
  }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }
};

inline Tensor tensor1d(std::initializer_list<double> vals) {
  Tensor t{static_cast<int>(vals.size())};
  size_t i = 0;
  for (double v : vals) t.data[i++] = v;
  return t;
}

}  // namespace adav

#endif
