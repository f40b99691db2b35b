#ifndef ADAV_TUNE_HPP
#define ADAV_TUNE_HPP

#include <functional>
#include <string>
#include <vector>

#include "adav/defense.hpp"
#include "adav/metrics.hpp"

namespace adav {

struct TunePoint {
  double k = 0, lambda = 0;
  double adv_map = 0, clean_map = 0;
  double objective = 0;  // (a - adv_map) + (b - clean_map)
};

struct TuneResult {
  std::vector<TunePoint> grid;
  double a = 0;  // best adversarial mAP on the grid
  double b = 0;  // best clean mAP on the grid
  double k_opt = 0, lambda_opt = 0;
};

// Computes a, b and objectives over raw grid measurements and picks the
// argmin; ties break toward smaller k, then smaller lambda. Pure, so tests
// can drive it with synthetic metric surfaces.
TuneResult finalize_tune(std::vector<TunePoint> points);

// Full grid search: every (k, lambda) pair runs the defense over all tuning
// clips and records the defended clean/adversarial mAP. First-pass detector
// outputs are shared across grid points (callers may pass precomputed ones).
// threads <= 0 reads ADAV_THREADS.
TuneResult tune(const DetectorWeights& weights, const DefenseConfig& base,
                const std::vector<VideoClip>& clean_clips,
                const std::vector<VideoClip>& adv_clips,
                const std::vector<double>& k_grid,
                const std::vector<double>& lambda_grid, int threads = 0,
                const std::vector<std::vector<Tensor>>* clean_outputs = nullptr,
                const std::vector<std::vector<Tensor>>* adv_outputs = nullptr);

// 10 lambda values 0.5 .. 5.0.
std::vector<double> default_lambda_grid();

// 10 log-spaced k values anchored to measured output-MSE statistics: from
// the clean-pair mean to 4x the attacked-pair mean on the tuning clips.
std::vector<double> default_k_grid(
    const std::vector<std::vector<Tensor>>& clean_outputs,
    const std::vector<std::vector<Tensor>>& adv_outputs,
    const std::vector<VideoClip>& adv_clips, int capacity);

std::string tune_csv(const TuneResult& r);

struct BenchResult {
  double clean_fps = 0, adv_fps = 0;
  double clean_forward_mean = 0, clean_backward_mean = 0;
  double adv_forward_mean = 0, adv_backward_mean = 0;
  long clean_frames = 0, adv_frames = 0;
};

// Wall-clock throughput of the live defense, measured separately on clean
// and adversarial clips (warm-up frames excluded from both).
BenchResult bench(const DetectorWeights& weights, const DefenseConfig& config,
                  const std::vector<VideoClip>& clean_clips,
                  const std::vector<VideoClip>& adv_clips);

// ADAV_THREADS when set, otherwise hardware concurrency.
int thread_budget();
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& fn);

}  // namespace adav

#endif
