#ifndef ADAV_TAPE_HPP
#define ADAV_TAPE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "adav/tensor.hpp"

namespace adav {

// Guided mode differs from Standard only at rectifier ops: the upstream
// gradient is clamped to its positive part and then gated by the input
// positivity mask.
enum class GradMode { Standard, Guided };

enum class OpKind {
  Leaf,
  Conv2d,
  Relu,
  Sigmoid,
  ChannelActivate,  // per-channel sigmoid/exp over the last axis
  Add,
  Mean,
  Mse,
  ObjBce,    // mean binary cross-entropy on one channel vs a target grid
  BoxSqErr,  // squared error on box channels at occupied cells
  ClassBce,  // per-class BCE on class channels at occupied cells
  Overlay,   // scatter-copy of a source tensor into a constant background
};

struct TapeNode {
  OpKind kind = OpKind::Leaf;
  int a = -1, b = -1, c = -1;
  Tensor value;
  Tensor grad;
  bool requires_grad = false;
  int stride = 1, pad = 0;
  int channel = -1;  // ObjBce objectness channel
  std::shared_ptr<const Tensor> target;     // ObjBce / BoxSqErr targets
  std::shared_ptr<const Tensor> occupancy;  // BoxSqErr cell mask
  std::shared_ptr<const std::vector<int>> index_map;       // Overlay
  std::shared_ptr<const std::vector<uint8_t>> exp_channel;  // ChannelActivate
};

// Single-writer op tape. Node ids are creation-ordered, which is also a
// topological order, so one reverse sweep visits each op exactly once.
class Tape {
 public:
  int leaf(Tensor v, bool requires_grad = true);
  int constant(Tensor v) { return leaf(std::move(v), false); }

  int conv2d(int input, int kernel, int bias, int stride, int pad);
  int relu(int x);
  int sigmoid(int x);
  // exp_channel[c] selects exp for channel c, sigmoid otherwise.
  int channel_activate(int x, std::vector<uint8_t> exp_channel);
  int add(int a, int b);
  int mean(int x);
  int mse(int a, int b);
  int objectness_bce(int raw, int channel, Tensor target);
  int box_sqerr(int raw, Tensor targets, Tensor occupancy);
  // class_of holds the class index per cell, -1 where unoccupied; channels
  // [channel_base, end) are the class scores.
  int class_bce(int raw, int channel_base, Tensor class_of);
  int overlay(int src, Tensor background, std::vector<int> index_map);

  // Reverse sweep from a scalar seed node. Grads of earlier runs are reset.
  void backward(int seed, GradMode mode = GradMode::Standard);

  const Tensor& value(int id) const { return nodes_[check(id)].value; }
  const Tensor& grad(int id) const { return nodes_[check(id)].grad; }
  const TapeNode& node(int id) const { return nodes_[check(id)]; }
  int size() const { return static_cast<int>(nodes_.size()); }

 private:
  size_t check(int id) const;
  int push(TapeNode n);
  std::vector<TapeNode> nodes_;
};

// Shared forward kernels; the detector fast path uses the same routines so
// taped and untaped forwards agree bitwise.
namespace ops {

// BCE works on probabilities clamped to [sigmoid(-15), sigmoid(15)], the
// image of logits clamped to [-15, 15].
inline constexpr double kBceLogitClamp = 15.0;
// exp activation arguments are clamped so outputs stay finite.
inline constexpr double kExpArgClamp = 30.0;

std::vector<int> conv2d_out_shape(const Tensor& in, const Tensor& kernel,
                                  int stride, int pad);
void conv2d_forward(const Tensor& in, const Tensor& kernel, const Tensor& bias,
                    int stride, int pad, Tensor& out);
void channel_activate_forward(const Tensor& in,
                              const std::vector<uint8_t>& exp_channel,
                              Tensor& out);
double sigmoid(double x);
double mse_value(const Tensor& a, const Tensor& b);
double objectness_bce_value(const Tensor& raw, int channel,
                            const Tensor& target);
double box_sqerr_value(const Tensor& raw, const Tensor& targets,
                       const Tensor& occupancy);
double class_bce_value(const Tensor& raw, int channel_base,
                       const Tensor& class_of);

}  // namespace ops

}  // namespace adav

#endif
