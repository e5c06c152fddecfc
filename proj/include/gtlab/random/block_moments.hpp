#pragma once

#include <vector>

#include "gtlab/core/matrix.hpp"
#include "gtlab/random/rng.hpp"

namespace gtlab {

/// Sample moments of one entry g of sqrt(N) * (top-left k x k block of a Haar U).
struct EntryMoments {
  Index row = 0;
  Index col = 0;
  double mean_re = 0, mean_re_se = 0;
  double mean_im = 0, mean_im_se = 0;
  /// E|g|^2, target 1.
  double second = 0, second_se = 0;
  /// E|g|^4, target 2.
  double fourth = 0, fourth_se = 0;
};

struct BlockMomentReport {
  Index n = 0;
  Index k = 0;
  long trials = 0;
  int retries = 0;
  std::vector<EntryMoments> entries;  // row-major over the k x k block
};

/// Haar draws by QR, trial i on stream.child(i). Requires k <= N, trials >= 1000.
BlockMomentReport block_gaussian_moments(Index n, Index k, long trials, const RngStream& stream);

}  // namespace gtlab
