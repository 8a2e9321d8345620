// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include "polsar/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "polsar/errors.hpp"
#include "polsar/parallel.hpp"

namespace polsar {

PrototypeSet::PrototypeSet(std::vector<PrototypeEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("prototype set is empty");
  q_ = entries_.front().wishart.sigma_hat.dim();
  looks_ = entries_.front().wishart.looks;
  std::vector<std::string> seen;
  for (const auto& e : entries_) {
    if (e.wishart.sigma_hat.dim() != q_) {
      throw DimensionMismatch("prototypes must share the same dimension");
    }
    if (e.wishart.looks != looks_) {
      throw LooksMismatch("prototypes must share the same looks");
    }
    if (e.wishart.sample_size < 1) {
      throw ValidationError("prototype sample size must be positive");
    }
    if (std::find(seen.begin(), seen.end(), e.name) != seen.end()) {
      throw ValidationError("duplicate prototype name: " + e.name);
    }
    seen.push_back(e.name);
  }
}

std::vector<std::string> PrototypeSet::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

int PrototypeSet::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if (entries_[static_cast<std::size_t>(i)].name == name) return i;
  }
  return -1;
}

namespace {

CovarianceEstimate estimate_segment(const CovarianceRaster& raster,
                                    std::span<const int> pixels) {
  CovarianceAccumulator acc(raster.q());
  for (const int p : pixels) acc.add(raster.pixel(p));
  return CovarianceEstimate{acc.mean(), acc.count(), raster.looks()};
}

GaussianEstimate estimate_segment_gaussian(const AmplitudeImage& amp,
                                           std::span<const int> pixels) {
  const int q = amp.q();
  std::vector<double> buf;
  buf.reserve(pixels.size() * static_cast<std::size_t>(q));
  for (const int p : pixels) {
    const auto v = amp.pixel(p);
    buf.insert(buf.end(), v.begin(), v.end());
  }
  return estimate_gaussian(buf, q, static_cast<int>(pixels.size()));
}

SegmentAssignment pick_minimum(int segment_id, std::vector<TestResult> stats) {
  SegmentAssignment out;
  out.segment_id = segment_id;
  out.class_index = 0;
  for (int c = 1; c < static_cast<int>(stats.size()); ++c) {
    // Strict comparison keeps the lowest index on ties.
    if (stats[static_cast<std::size_t>(c)].statistic <
        stats[static_cast<std::size_t>(out.class_index)].statistic) {
      out.class_index = c;
    }
  }
  out.winning = stats[static_cast<std::size_t>(out.class_index)];
  out.all_stats = std::move(stats);
  return out;
}

SegmentAssignment unclassified(int segment_id, const std::string& reason) {
  SegmentAssignment out;
  out.segment_id = segment_id;
  out.class_index = -1;
  out.failure = reason;
  return out;
}

}  // namespace

std::vector<SegmentAssignment> classify_segments(const CovarianceRaster& raster,
                                                 const SegmentMap& segmap,
                                                 const PrototypeSet& protos,
                                                 StatisticKind kind,
                                                 const ClassifyOptions& options) {
  if (segmap.width() != raster.width() || segmap.height() != raster.height()) {
    throw DimensionMismatch("segment map and raster dimensions differ");
  }
  if (protos.q() != raster.q()) {
    throw DimensionMismatch("prototype and raster dimensions differ");
  }
  const int r = segmap.segment_count();
  const int k = protos.size();
  std::vector<SegmentAssignment> results(static_cast<std::size_t>(r));

  if (is_wishart(kind)) {
    if (protos.looks() != raster.looks()) {
      throw LooksMismatch("prototype and raster looks differ");
    }
    // Prototype preparation failures are configuration errors and propagate.
    std::vector<PreparedWishart> prepared;
    prepared.reserve(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
      prepared.push_back(PreparedWishart::prepare(protos.entry(c).wishart));
    }

    parallel_for(r, options.threads, [&](int begin, int end) {
      for (int s = begin; s < end; ++s) {
        try {
          const PreparedWishart segment =
              PreparedWishart::prepare(estimate_segment(raster, segmap.pixels_of(s)));
          std::vector<TestResult> stats;
          stats.reserve(static_cast<std::size_t>(k));
          for (int c = 0; c < k; ++c) {
            stats.push_back(stat_between(kind, segment, prepared[static_cast<std::size_t>(c)],
                                         options.beta));
          }
          results[static_cast<std::size_t>(s)] = pick_minimum(s, std::move(stats));
        } catch (const NumericalError& e) {
          results[static_cast<std::size_t>(s)] = unclassified(s, e.what());
        }
      }
    });
    return results;
  }

  // Gaussian branch: classify ML amplitude estimates.
  for (int c = 0; c < k; ++c) {
    if (!protos.entry(c).gaussian.has_value()) {
      throw ValidationError("prototype '" + protos.entry(c).name +
                            "' carries no Gaussian estimate");
    }
  }
  const AmplitudeImage amp = amplitudes(raster);
  parallel_for(r, options.threads, [&](int begin, int end) {
    for (int s = begin; s < end; ++s) {
      try {
        const GaussianEstimate segment =
            estimate_segment_gaussian(amp, segmap.pixels_of(s));
        std::vector<TestResult> stats;
        stats.reserve(static_cast<std::size_t>(k));
        for (int c = 0; c < k; ++c) {
          stats.push_back(
              stat_gaussian_bhattacharyya(segment, *protos.entry(c).gaussian));
        }
        results[static_cast<std::size_t>(s)] = pick_minimum(s, std::move(stats));
      } catch (const NumericalError& e) {
        results[static_cast<std::size_t>(s)] = unclassified(s, e.what());
      }
    }
  });
  return results;
}

AmplitudeImage amplitudes(const CovarianceRaster& raster) {
  const int q = raster.q();
  AmplitudeImage out(raster.width(), raster.height(), q);
  for (int p = 0; p < raster.pixel_count(); ++p) {
    const auto z = raster.pixel(p);
    const auto a = out.pixel(p);
    for (int i = 0; i < q; ++i) {
      const double intensity = z[static_cast<std::size_t>(i) * q + i].real();
      if (intensity < 0.0) {
        throw NegativeIntensity("negative intensity at pixel " + std::to_string(p));
      }
      a[static_cast<std::size_t>(i)] = std::sqrt(intensity);
    }
  }
  return out;
}

std::vector<FusedAssignment> fuse_majority(
    std::span<const std::vector<SegmentAssignment>> per_kind,
    std::span<const StatisticKind> kinds) {
  if (per_kind.empty() || per_kind.size() != kinds.size()) {
    throw ValidationError("fusion needs one assignment list per statistic kind");
  }
  const std::size_t r = per_kind.front().size();
  for (const auto& list : per_kind) {
    if (list.size() != r) {
      throw MismatchedSegments("assignment lists cover different segment counts");
    }
  }

  int bhattacharyya_at = -1;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == StatisticKind::Bhattacharyya) bhattacharyya_at = static_cast<int>(i);
  }

  std::vector<FusedAssignment> fused(r);
  for (std::size_t s = 0; s < r; ++s) {
    FusedAssignment& f = fused[s];
    f.segment_id = per_kind.front()[s].segment_id;
    f.votes.reserve(per_kind.size());
    std::map<int, int> tally;
    for (const auto& list : per_kind) {
      if (list[s].segment_id != f.segment_id) {
        throw MismatchedSegments("assignment lists disagree on segment ids");
      }
      f.votes.push_back(list[s].class_index);
      if (list[s].classified()) ++tally[list[s].class_index];
    }
    if (tally.empty()) {
      f.winner = -1;
      continue;
    }
    int best_count = 0;
    for (const auto& [cls, count] : tally) best_count = std::max(best_count, count);
    std::vector<int> tied;
    for (const auto& [cls, count] : tally) {
      if (count == best_count) tied.push_back(cls);
    }
    f.winner = tied.front();  // lowest class index (map iterates in order)
    if (tied.size() > 1 && bhattacharyya_at >= 0) {
      const int b_choice = f.votes[static_cast<std::size_t>(bhattacharyya_at)];
      if (std::find(tied.begin(), tied.end(), b_choice) != tied.end()) {
        f.winner = b_choice;
      }
    }
  }
  return fused;
}

std::vector<int> fuzzy_assign(std::span<const TestResult> per_class_stats,
                              double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw ValidationError("fuzzy threshold must lie in (0, 1)");
  }
  std::vector<int> out;
  for (int c = 0; c < static_cast<int>(per_class_stats.size()); ++c) {
    if (per_class_stats[static_cast<std::size_t>(c)].p_value >= threshold) {
      out.push_back(c);
    }
  }
  return out;
}

LabelRaster assignment_labels(std::span<const SegmentAssignment> assignments,
                              const SegmentMap& segmap) {
  if (static_cast<int>(assignments.size()) != segmap.segment_count()) {
    throw MismatchedSegments("assignment count does not match segment map");
  }
  LabelRaster out(segmap.width(), segmap.height(), -1);
  for (const auto& a : assignments) {
    if (!a.classified()) continue;
    for (const int p : segmap.pixels_of(a.segment_id)) {
      out.at(p) = a.class_index;
    }
  }
  return out;
}

}  // namespace polsar
