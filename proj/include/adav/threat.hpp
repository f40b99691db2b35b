#ifndef ADAV_THREAT_HPP
#define ADAV_THREAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adav/detector.hpp"
#include "adav/rng.hpp"
#include "adav/tensor.hpp"

namespace adav {

// Learnable square RGB patch, pixels kept in [0,1] by projection.
struct Patch {
  int base_size = 40;
  Tensor pixels;  // base_size x base_size x 3

  static Patch uniform_noise(int base_size, uint64_t seed);
};

struct PlacementTransform {
  double cx = 0, cy = 0;
  double scale = 1.0;
};

struct SinusoidParams {
  double amplitude = 0, period = 1, phase = 0, offset = 1;

  double scale_at(double t) const;
};

struct Waypoint {
  double x = 0, y = 0, t = 0;
};

struct FramePlacement {
  bool present = false;
  PlacementTransform tf;
};

struct Trajectory {
  double insertion_time = 0;
  std::vector<Waypoint> waypoints;
  SinusoidParams sinusoid;
  std::vector<FramePlacement> frames;
};

struct VideoClip {
  int width = kInputSize, height = kInputSize;
  double fps = 30.0;
  std::vector<Tensor> frames;
  std::vector<std::vector<GtBox>> labels;
  std::optional<Trajectory> trajectory;  // absent for clean clips

  double duration() const { return static_cast<double>(frames.size()) / fps; }
};

// Deterministic driving-like scene: sky/road gradient background with
// texture, 2-5 colored rectangles on linear paths with <=1 px per-frame
// jitter, and a slow global brightness drift. Labels are exact.
VideoClip gen_clean_clip(uint64_t seed, double duration_seconds, double fps);

// One independent labeled frame from the same scene distribution.
LabeledFrame sample_scene_frame(uint64_t seed);

// Nearest-neighbor index map of a scaled patch paste; -1 marks untouched
// frame entries. Shared by apply_patch and the taped overlay op.
std::vector<int> build_paste_map(int frame_h, int frame_w, int base_size,
                                 const PlacementTransform& t);

// Pastes the patch resized to round(base_size * scale), clipped at borders.
// Zero-overlap placements are rejected.
Tensor apply_patch(const Tensor& frame, const Patch& patch,
                   const PlacementTransform& t);

PlacementTransform sample_transform(Rng& rng, int frame_w, int frame_h,
                                    double scale_lo, double scale_hi);

struct PatchTrainOptions {
  int steps = 2000;
  double lr = 0.1;
  double scale_lo = 0.7;
  double scale_hi = 1.3;
};

// Expectation-over-transformation patch training: each step samples a frame
// and placement, ascends the detector confidence loss with Adam, projects
// pixels back to [0,1].
Patch train_patch(const DetectorWeights& weights,
                  const std::vector<LabeledFrame>& dataset,
                  const PatchTrainOptions& opt, uint64_t seed,
                  std::vector<double>* objective_history = nullptr);

// Inserts the patch at a random time in [1, min(10, duration-1)] s, moving
// it on a random walk (50-200 px/s waypoint traversal) with a sinusoidal
// scale inside [0.2, 2.0]. Labels are copied from the clean clip unchanged.
VideoClip make_adversarial_clip(const VideoClip& clean, const Patch& patch,
                                uint64_t seed);

// "ADAVPCH1" patch file and "ADAVVID1" clip file (JSON sidecar at
// <path>.json carries labels and trajectory).
std::string serialize_patch(const Patch& p);
Patch deserialize_patch(const std::string& bytes);
void save_patch(const std::string& path, const Patch& p);
Patch load_patch(const std::string& path);

std::string serialize_clip_frames(const VideoClip& clip);
std::string serialize_clip_sidecar(const VideoClip& clip);
void save_clip(const std::string& path, const VideoClip& clip);
VideoClip load_clip(const std::string& path);

}  // namespace adav

#endif
