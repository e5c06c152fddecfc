#include "gtlab/random/block_moments.hpp"

#include <cmath>

#include "gtlab/numerics/parallel.hpp"
#include "gtlab/numerics/statistics.hpp"
#include "gtlab/random/ensembles.hpp"

namespace gtlab {

BlockMomentReport block_gaussian_moments(Index n, Index k, long trials, const RngStream& stream) {
  if (k < 1 || k > n) throw DomainError("block_gaussian_moments: need 1 <= k <= N");
  if (trials < 1000) throw DomainError("block_gaussian_moments: need at least 1000 trials");
  struct Draw {
    ComplexMatrix<double> g;
    int retries = 0;
  };
  const auto draws = map_trials(trials, [&](std::int64_t i) {
    RngStream s = stream.child(static_cast<std::uint64_t>(i));
    HaarDraw h = haar_unitary(n, HaarMethod::qr, s);
    return Draw{std::sqrt(double(n)) * h.u.topLeftCorner(k, k), h.retries};
  });

  BlockMomentReport out;
  out.n = n;
  out.k = k;
  out.trials = trials;
  for (const auto& d : draws) out.retries += d.retries;
  for (Index r = 0; r < k; ++r) {
    for (Index c = 0; c < k; ++c) {
      RunningStats re, im, second, fourth;
      for (const auto& d : draws) {
        const Complex<double> g = d.g(r, c);
        const double m2 = std::norm(g);
        re.push(g.real());
        im.push(g.imag());
        second.push(m2);
        fourth.push(m2 * m2);
      }
      EntryMoments e;
      e.row = r;
      e.col = c;
      e.mean_re = re.mean();
      e.mean_re_se = re.standard_error();
      e.mean_im = im.mean();
      e.mean_im_se = im.standard_error();
      e.second = second.mean();
      e.second_se = second.standard_error();
      e.fourth = fourth.mean();
      e.fourth_se = fourth.standard_error();
      out.entries.push_back(e);
    }
  }
  return out;
}

}  // namespace gtlab
