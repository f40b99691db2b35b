#ifndef ADAV_DETECTOR_HPP
#define ADAV_DETECTOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "adav/tape.hpp"
#include "adav/tensor.hpp"

namespace adav {

// Fixed toy geometry: 128x128x3 input, 16x16 grid, one 32 px anchor,
// 3 classes. Output channels are [tx, ty, tw, th, obj, class...].
inline constexpr int kInputSize = 128;
inline constexpr int kGridSize = 16;
inline constexpr int kCellPixels = kInputSize / kGridSize;
inline constexpr int kAnchorPixels = 32;
inline constexpr int kNumClasses = 3;
inline constexpr int kOutChannels = 5 + kNumClasses;
inline constexpr int kChTx = 0, kChTy = 1, kChTw = 2, kChTh = 3, kChObj = 4,
                     kChClass = 5;

struct GtBox {
  double cx = 0, cy = 0, w = 0, h = 0;
  int cls = 0;
};

struct Detection {
  double cx = 0, cy = 0, w = 0, h = 0;
  int cls = 0;
  double conf = 0;
};

struct ConvLayer {
  Tensor kernel;  // [kh, kw, cin, cout]
  Tensor bias;    // [cout]
  int stride = 1;
  int pad = 0;
  bool relu_after = false;
};

struct LabeledFrame {
  Tensor frame;  // 128x128x3 in [0,1]
  std::vector<GtBox> boxes;
};

// Conv stack 3x3x3x16 s2, 3x3x16x32 s2, 3x3x32x32 s2 (relu after each),
// head 1x1x32x8 s1.
struct DetectorWeights {
  std::vector<ConvLayer> layers;

  static DetectorWeights init(uint64_t seed);
  bool same_shapes(const DetectorWeights& o) const;
};

// exp on tw/th, sigmoid elsewhere.
std::vector<uint8_t> head_exp_mask();

// Fast (untaped) forward producing the activated pre-NMS grid. Shares the
// per-op kernels with the taped path, so both agree bitwise.
Tensor detector_forward(const DetectorWeights& w, const Tensor& frame);

struct TapedDetector {
  int input = -1;   // frame leaf
  int logits = -1;  // head pre-activation
  int raw = -1;     // activated grid
};
TapedDetector detector_tape_forward(Tape& tape, const DetectorWeights& w,
                                    int input_node);

std::vector<Detection> decode(const Tensor& raw, double conf_threshold);
double iou(const Detection& a, const Detection& b);
std::vector<Detection> nms(const std::vector<Detection>& dets,
                           double iou_threshold);

// Cell-occupancy target (1 where a ground-truth center falls) and box
// regression targets on activated channels.
Tensor occupancy_target(const std::vector<GtBox>& gt);
void box_targets(const std::vector<GtBox>& gt, Tensor& targets,
                 Tensor& occupancy);
// Per-cell class index, -1 where no center falls (first box wins, matching
// box_targets).
Tensor class_target_map(const std::vector<GtBox>& gt);

// Mean BCE between the objectness map and the occupancy target.
double confidence_loss(const Tensor& raw, const std::vector<GtBox>& gt);

DetectorWeights train_detector(const std::vector<LabeledFrame>& dataset,
                               int epochs, double lr, uint64_t seed,
                               std::vector<double>* loss_history = nullptr);

// "ADAVWTS1" weight file: per-layer dims as 32-bit LE unsigned, payload as
// 32-bit LE floats, row-major.
std::string serialize_weights(const DetectorWeights& w);
DetectorWeights deserialize_weights(const std::string& bytes);
void save_weights(const std::string& path, const DetectorWeights& w);
DetectorWeights load_weights(const std::string& path);

}  // namespace adav

#endif
