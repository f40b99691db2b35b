#ifndef ADAV_DEFENSE_HPP
#define ADAV_DEFENSE_HPP

#include <array>
#include <deque>
#include <string>
#include <vector>

#include "adav/detector.hpp"
#include "adav/threat.hpp"

namespace adav {

struct DefenseConfig {
  double k = 0.05;        // temporal-consistency MSE threshold
  double lambda = 2.0;    // IQR multiplier in n = median + lambda * IQR
  int region_size = 20;
  int stride = 5;
  double queue_seconds = 0.5;
  std::array<double, 3> neutral = {0.5, 0.5, 0.5};
  double conf_threshold = 0.5;
  double nms_iou = 0.5;
};

std::string defense_config_to_json(const DefenseConfig& c);
DefenseConfig defense_config_from_json(const std::string& text);

struct RegionRect {
  int x = 0, y = 0, w = 0, h = 0;
};

struct SuspicionMap {
  int rows = 0, cols = 0;
  int region_size = 20, stride = 5;
  std::vector<double> scores;  // rows x cols, row-major
  double median = 0, iqr = 0, threshold = 0;

  double score(int r, int c) const {
    return scores[static_cast<size_t>(r) * cols + c];
  }
};

struct FrameReport {
  double mse_to_reference = 0;
  bool flagged = false;
  std::vector<RegionRect> masked_regions;
  int forward_passes = 0;
  int backward_passes = 0;
  double wall_time = 0;  // seconds
  bool warmup = false;
};

std::string frame_report_to_json(const FrameReport& r);

// Clean-output FIFO plus the config/weights needed to process a stream.
struct DefenseState {
  DefenseConfig config;
  double fps = 30.0;
  int capacity = 0;
  std::deque<Tensor> queue;  // oldest in front = reference
  const DetectorWeights* weights = nullptr;
};

// Queue capacity is round(queue_seconds * fps); warm-up must supply exactly
// that many outputs in temporal order.
DefenseState init_state(const DetectorWeights& weights,
                        const DefenseConfig& config, double fps,
                        const std::vector<Tensor>& warmup_outputs);

// reference = oldest queue entry (the output from queue_seconds ago).
std::pair<bool, double> check_consistency(const Tensor& current,
                                          const DefenseState& state, double k);

// Guided-backprop saliency of mse(detector(frame), reference) w.r.t. the
// frame, reduced over color channels by sum of absolute values.
Tensor saliency_map(const DetectorWeights& weights, const Tensor& frame,
                    const Tensor& reference);

// Box-filter sums over region_size windows at the given stride, with
// median/IQR threshold state (linear interpolation between order statistics).
SuspicionMap aggregate_regions(const Tensor& saliency, int region_size,
                               int stride, double lambda);

SuspicionMap localize(const DetectorWeights& weights, const Tensor& frame,
                      const Tensor& reference, const DefenseConfig& config);

// Regions scoring strictly above the threshold; an all-equal map selects
// nothing.
std::vector<RegionRect> select_regions(const SuspicionMap& map);

Tensor mask_regions(const Tensor& frame, const std::vector<RegionRect>& regions,
                    const std::array<double, 3>& neutral);

// One step of the two-stage pipeline. Consistent frames cost one forward
// pass; flagged frames cost two forwards plus one guided backward. When
// precomputed_raw is supplied the caller has already run the first forward.
std::pair<std::vector<Detection>, FrameReport> process_frame(
    DefenseState& state, const Tensor& frame,
    const Tensor* precomputed_raw = nullptr);

struct ClipRunResult {
  std::vector<std::vector<Detection>> detections;
  std::vector<FrameReport> reports;
};

// Runs a whole clip: the first queue-capacity frames seed the queue and pass
// through undefended, the rest go through process_frame. first_outputs, when
// given, supplies cached first-pass detector outputs per frame.
ClipRunResult run_defense_clip(const DetectorWeights& weights,
                               const DefenseConfig& config,
                               const VideoClip& clip,
                               const std::vector<Tensor>* first_outputs = nullptr);

// Plain per-frame detector outputs (no defense), reusable as a first-pass
// cache for repeated defense runs over the same clip.
std::vector<Tensor> clip_raw_outputs(const DetectorWeights& weights,
                                     const VideoClip& clip);

}  // namespace adav

#endif
