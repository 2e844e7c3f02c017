#ifndef HSCLAB_KERNELS_HPP_
#define HSCLAB_KERNELS_HPP_

#include <vector>

#include "hsclab/curvature.hpp"

// Sampling kernels. Each has a serial reference path and an OpenMP path that
// must produce identical results (fixed partitioning, ordered reductions).

namespace hsc {

enum class Exec { serial, parallel };

/// Caps the OpenMP worker count (0 restores the runtime default).
void set_max_workers(int workers);
int max_workers();

/// u_i = lo + (hi - lo) i / (count - 1), i = 0..count-1.
std::vector<double> linspace(double lo, double hi, int count);

std::vector<Abc> sample_abc(const AbcFn& f, const std::vector<double>& u, Exec exec = Exec::parallel);
std::vector<HExtremaD> sample_extrema(const AbcFn& f, const std::vector<double>& u, Exec exec = Exec::parallel);

struct GridMin {
  double value = 0.0;
  double u = 0.0;
  double t = 0.0;
};

/// Brute-force min of H over an nu x nt grid of (u, t), ties to the first.
GridMin dense_h_min(const AbcFn& f, double lo, double hi, int nu, int nt, Exec exec = Exec::parallel);

}  // namespace hsc

#endif  // HSCLAB_KERNELS_HPP_
