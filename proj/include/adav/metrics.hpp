#ifndef ADAV_METRICS_HPP
#define ADAV_METRICS_HPP

#include <array>
#include <vector>

#include "adav/detector.hpp"

namespace adav {

struct PRPoint {
  double recall = 0, precision = 0;
};

struct MapResult {
  std::array<double, kNumClasses> ap{};        // valid where has_gt
  std::array<bool, kNumClasses> has_gt{};
  std::array<std::vector<PRPoint>, kNumClasses> curves;
  double map = 0;  // mean AP over classes present in ground truth
};

// mAP at IoU >= 0.5: greedy confidence-ordered matching, one match per GT,
// all-point (precision envelope) PR interpolation.
MapResult map50(const std::vector<std::vector<Detection>>& preds,
                const std::vector<std::vector<GtBox>>& gts);

// Fraction of GT boxes matched by a same-class detection at IoU >= iou_thr
// (one detection per GT, confidence order).
double recall_at(const std::vector<std::vector<Detection>>& preds,
                 const std::vector<std::vector<GtBox>>& gts, double iou_thr);

struct RateMetrics {
  double accuracy = 1, precision = 1, recall = 1;
  bool accuracy_degenerate = false;
  bool precision_degenerate = false;
  bool recall_degenerate = false;
  long tp = 0, fp = 0, tn = 0, fn = 0;
};

// One scored frame of a defense run.
struct FrameTruth {
  bool attacked = false;  // patch present
  double scale = 0;       // patch scale when present
  bool flagged = false;   // defense verdict
};

struct DetectionRateResult {
  double scale_split = 0.8;
  RateMetrics high_scale;  // positives: attacked frames with scale > split
  RateMetrics low_scale;   // positives: attacked frames with scale <= split
  long clean_frames = 0;
  long clean_flagged = 0;
};

// Frame-level attack detection metrics, split by patch scale. Clean frames
// are global negatives: they enter both partitions' denominators once.
// Degenerate ratios (zero denominator) report 1.0 with the flag set.
DetectionRateResult detection_rates(const std::vector<FrameTruth>& frames,
                                    double scale_split = 0.8);

// Rank-based ROC AUC (ties get half credit).
double roc_auc(const std::vector<double>& positives,
               const std::vector<double>& negatives);

}  // namespace adav

#endif
