#ifndef ADAV_OPTIM_HPP
#define ADAV_OPTIM_HPP

#include <cmath>
#include <vector>

#include "adav/tensor.hpp"

namespace adav {

// Adam with bias correction. step() descends; callers maximizing an
// objective pass negated gradients.
struct Adam {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  int t = 0;
  std::vector<Tensor> m, v;

  void step(std::vector<Tensor*> params, const std::vector<const Tensor*>& grads,
            double lr) {
    if (m.empty()) {
      for (Tensor* p : params) {
        m.emplace_back(p->shape, 0.0);
        v.emplace_back(p->shape, 0.0);
      }
    }
    ++t;
    const double c1 = 1.0 - std::pow(beta1, t);
    const double c2 = 1.0 - std::pow(beta2, t);
    for (size_t k = 0; k < params.size(); ++k) {
      Tensor& p = *params[k];
      const Tensor& g = *grads[k];
      for (size_t i = 0; i < p.numel(); ++i) {
        m[k].data[i] = beta1 * m[k].data[i] + (1.0 - beta1) * g.data[i];
        v[k].data[i] = beta2 * v[k].data[i] + (1.0 - beta2) * g.data[i] * g.data[i];
        const double mh = m[k].data[i] / c1;
        const double vh = v[k].data[i] / c2;
        p.data[i] -= lr * mh / (std::sqrt(vh) + eps);
      }
    }
  }
};

}  // namespace adav

#endif
