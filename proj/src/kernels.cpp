#include "hsclab/kernels.hpp"

#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsc {

namespace {
int g_workers = 0;
}

void set_max_workers(int workers) {
  g_workers = workers > 0 ? workers : 0;
#ifdef _OPENMP
  if (g_workers > 0) omp_set_num_threads(g_workers);
  else omp_set_num_threads(omp_get_num_procs());
#endif
}

int max_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> u(count);
  if (count == 1) {
    u[0] = lo;
    return u;
  }
  for (int i = 0; i < count; ++i) u[i] = lo + (hi - lo) * i / (count - 1);
  u[count - 1] = hi;
  return u;
}

std::vector<Abc> sample_abc(const AbcFn& f, const std::vector<double>& u, Exec exec) {
  const long n = static_cast<long>(u.size());
  std::vector<Abc> out(n);
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) out[i] = f(u[i]);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = f(u[i]);
  return out;
}

std::vector<HExtremaD> sample_extrema(const AbcFn& f, const std::vector<double>& u, Exec exec) {
  const long n = static_cast<long>(u.size());
  std::vector<HExtremaD> out(n);
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) out[i] = h_extrema(f(u[i]));
    return out;
  }
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) out[i] = h_extrema(f(u[i]));
  return out;
}

namespace {

GridMin row_min(const Abc& abc, double u, int nt) {
  GridMin best{std::numeric_limits<double>::infinity(), u, 0.0};
  for (int j = 0; j < nt; ++j) {
    double t = nt == 1 ? 0.0 : static_cast<double>(j) / (nt - 1);
    double h = h_value(abc, t);
    if (h < best.value) best = {h, u, t};
  }
  return best;
}

}  // namespace

GridMin dense_h_min(const AbcFn& f, double lo, double hi, int nu, int nt, Exec exec) {
  std::vector<double> u = linspace(lo, hi, nu);
  std::vector<GridMin> rows(nu);
  if (exec == Exec::serial) {
    for (int i = 0; i < nu; ++i) rows[i] = row_min(f(u[i]), u[i], nt);
  } else {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nu; ++i) rows[i] = row_min(f(u[i]), u[i], nt);
  }
  // Ordered reduction keeps the result independent of the worker count.
  GridMin best = rows[0];
  for (int i = 1; i < nu; ++i)
    if (rows[i].value < best.value) best = rows[i];
  return best;
}

}  // namespace hsc
