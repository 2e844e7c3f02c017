#include "hsclab/pointcurv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace hsc {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

KahlerCurvatureTensor::KahlerCurvatureTensor(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("KahlerCurvatureTensor: dim >= 1");
}

std::pair<KahlerCurvatureTensor::Index, bool> KahlerCurvatureTensor::canonical(const Index& idx) {
  // The orbit is generated by a<->c, b<->d and (a,b,c,d) -> (b,a,d,c), the
  // last one conjugating the value.
  Index best = idx;
  bool best_conj = false;
  for (int mask = 1; mask < 8; ++mask) {
    Index v = idx;
    if (mask & 1) std::swap(v[0], v[2]);
    if (mask & 2) std::swap(v[1], v[3]);
    bool conj = mask & 4;
    if (conj) v = {v[1], v[0], v[3], v[2]};
    if (v < best) {
      best = v;
      best_conj = conj;
    }
  }
  return {best, best_conj};
}

namespace {

bool self_conjugate(const KahlerCurvatureTensor::Index& idx) {
  auto [key, conj] = KahlerCurvatureTensor::canonical(idx);
  (void)conj;
  KahlerCurvatureTensor::Index flipped = {key[1], key[0], key[3], key[2]};
  for (int mask = 0; mask < 4; ++mask) {
    KahlerCurvatureTensor::Index v = key;
    if (mask & 1) std::swap(v[0], v[2]);
    if (mask & 2) std::swap(v[1], v[3]);
    if (v == flipped) return true;
  }
  return false;
}

}  // namespace

cplx KahlerCurvatureTensor::operator()(int a, int b, int c, int d) const {
  auto [key, conj] = canonical({a, b, c, d});
  auto it = stored_.find(key);
  if (it == stored_.end()) return {0.0, 0.0};
  return conj ? std::conj(it->second) : it->second;
}

void KahlerCurvatureTensor::set(int a, int b, int c, int d, cplx value) {
  for (int i : {a, b, c, d})
    if (i < 0 || i >= dim_) throw std::out_of_range("KahlerCurvatureTensor: index");
  auto [key, conj] = canonical({a, b, c, d});
  cplx v = conj ? std::conj(value) : value;
  if (self_conjugate(key)) v = {v.real(), 0.0};
  if (v == cplx{0.0, 0.0}) stored_.erase(key);
  else stored_[key] = v;
}

Eigen::MatrixXcd KahlerCurvatureTensor::ricci() const {
  MatrixXcd ric = MatrixXcd::Zero(dim_, dim_);
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c) ric(a, b) += (*this)(a, b, c, c);
  return ric;
}

std::vector<cplx> KahlerCurvatureTensor::dense() const {
  const int m = dim_;
  std::vector<cplx> out(static_cast<std::size_t>(m) * m * m * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) out[((a * m + b) * m + c) * m + d] = (*this)(a, b, c, d);
  return out;
}

KahlerCurvatureTensor KahlerCurvatureTensor::scaled(double factor) const {
  KahlerCurvatureTensor out(dim_);
  for (const auto& [key, v] : stored_) out.stored_[key] = v * factor;
  return out;
}

namespace {

// Contraction kernels on the dense array.
struct Dense {
  int m;
  std::vector<cplx> r;

  explicit Dense(const KahlerCurvatureTensor& t) : m(t.dim()), r(t.dense()) {}

  cplx at(int a, int b, int c, int d) const { return r[((a * m + b) * m + c) * m + d]; }

  // sum R x_a conj(x_b) y_c conj(y_d), no normalisation
  double quartic(const VectorXcd& x, const VectorXcd& y) const {
    cplx s = 0.0;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        cplx xab = x[a] * std::conj(x[b]);
        if (xab == cplx{0.0, 0.0}) continue;
        cplx inner = 0.0;
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d) inner += at(a, b, c, d) * y[c] * std::conj(y[d]);
        s += xab * inner;
      }
    return s.real();
  }

  double h(const VectorXcd& x) const {
    double n2 = x.squaredNorm();
    return quartic(x, x) / (n2 * n2);
  }

  // d/d conj(x_b) of the unnormalised quartic, up to the factor 2.
  VectorXcd grad_h(const VectorXcd& x) const {
    VectorXcd g = VectorXcd::Zero(m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d) g[b] += at(a, b, c, d) * x[a] * x[c] * std::conj(x[d]);
    return g;
  }

  VectorXcd grad_x(const VectorXcd& x, const VectorXcd& y) const {
    VectorXcd g = VectorXcd::Zero(m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d) g[b] += at(a, b, c, d) * x[a] * y[c] * std::conj(y[d]);
    return g;
  }

  VectorXcd grad_y(const VectorXcd& x, const VectorXcd& y) const {
    VectorXcd g = VectorXcd::Zero(m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          for (int d = 0; d < m; ++d) g[d] += at(a, b, c, d) * x[a] * std::conj(x[b]) * y[c];
    return g;
  }
};

constexpr int kChunks = 64;
constexpr int kKeep = 4;

std::mt19937_64 chunk_rng(std::uint64_t seed, int chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk)};
  return std::mt19937_64(seq);
}

VectorXcd random_unit(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  VectorXcd x(m);
  for (int i = 0; i < m; ++i) {
    double re = gauss(rng);
    double im = gauss(rng);
    x[i] = {re, im};
  }
  return x / x.norm();
}

// Lexicographic order on coordinates, used to break exact ties.
bool lex_less(const VectorXcd& a, const VectorXcd& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

struct Candidate {
  double value;
  VectorXcd x;
  VectorXcd y;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  if (lex_less(a.x, b.x)) return true;
  if (lex_less(b.x, a.x)) return false;
  return lex_less(a.y, b.y);
}

void keep_best(std::vector<Candidate>& best, Candidate c) {
  best.push_back(std::move(c));
  std::sort(best.begin(), best.end(), better);
  if (best.size() > kKeep) best.pop_back();
}

// Runs kChunks independent streams, each keeping its kKeep lowest values of
// score(x, y). Chunk results are merged in chunk order.
template <class Draw>
std::vector<Candidate> sample_chunks(int samples, std::uint64_t seed, Exec exec, Draw draw) {
  std::vector<std::vector<Candidate>> per(kChunks);
  auto run = [&](int c) {
    int count = samples / kChunks + (c < samples % kChunks ? 1 : 0);
    std::mt19937_64 rng = chunk_rng(seed, c);
    std::vector<Candidate> best;
    for (int i = 0; i < count; ++i) keep_best(best, draw(rng));
    per[c] = std::move(best);
  };
  if (exec == Exec::serial) {
    for (int c = 0; c < kChunks; ++c) run(c);
  } else {
#pragma omp parallel for schedule(static)
    for (int c = 0; c < kChunks; ++c) run(c);
  }
  std::vector<Candidate> all;
  for (auto& v : per)
    for (auto& c : v) all.push_back(std::move(c));
  std::sort(all.begin(), all.end(), better);
  return all;
}

VectorXcd tangent(const VectorXcd& x, const VectorXcd& g) {
  // Remove the radial part; the i*x part vanishes by phase invariance.
  return g - x.dot(g).real() * x;
}

// Minimises sign * H on the unit sphere.
Candidate refine_h(const Dense& d, Candidate c, double sign, int iters) {
  VectorXcd x = c.x / c.x.norm();
  double f = sign * d.h(x);
  double step = 0.1;
  for (int it = 0; it < iters; ++it) {
    VectorXcd g = tangent(x, sign * d.grad_h(x));
    double gn = g.norm();
    if (gn < 1e-15) break;
    VectorXcd dir = -g / gn;
    bool moved = false;
    while (step > 1e-16) {
      VectorXcd y = x + step * dir;
      y /= y.norm();
      double fy = sign * d.h(y);
      if (fy < f) {
        x = y;
        f = fy;
        step = std::min(2.0 * step, 1.0);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return {f, x, VectorXcd()};
}

void orthonormalise(VectorXcd& x, VectorXcd& y) {
  x /= x.norm();
  y -= x.dot(y) * x;
  y /= y.norm();
}

Candidate refine_bisectional(const Dense& d, Candidate c, int iters) {
  VectorXcd x = c.x, y = c.y;
  orthonormalise(x, y);
  double f = d.quartic(x, y);
  double step = 0.1;
  for (int it = 0; it < iters; ++it) {
    VectorXcd gx = tangent(x, d.grad_x(x, y));
    VectorXcd gy = tangent(y, d.grad_y(x, y));
    double gn = std::sqrt(gx.squaredNorm() + gy.squaredNorm());
    if (gn < 1e-15) break;
    bool moved = false;
    while (step > 1e-16) {
      VectorXcd x1 = x - (step / gn) * gx;
      VectorXcd y1 = y - (step / gn) * gy;
      orthonormalise(x1, y1);
      double f1 = d.quartic(x1, y1);
      if (f1 < f) {
        x = x1;
        y = y1;
        f = f1;
        step = std::min(2.0 * step, 1.0);
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
  }
  return {f, x, y};
}

}  // namespace

double h_of_direction(const KahlerCurvatureTensor& t, const VectorXcd& x) {
  if (x.size() != t.dim()) throw std::invalid_argument("h_of_direction: dimension mismatch");
  if (x.squaredNorm() == 0.0) throw std::invalid_argument("h_of_direction: zero vector");
  return Dense(t).h(x);
}

double bisectional(const KahlerCurvatureTensor& t, const VectorXcd& x, const VectorXcd& y) {
  if (x.size() != t.dim() || y.size() != t.dim())
    throw std::invalid_argument("bisectional: dimension mismatch");
  return Dense(t).quartic(x, y);
}

TensorExtrema h_extrema(const KahlerCurvatureTensor& t, int samples, int refine_iters, std::uint64_t seed,
                        Exec exec) {
  if (samples < 1) throw std::invalid_argument("h_extrema: samples >= 1");
  const Dense d(t);
  const int m = t.dim();
  TensorExtrema out;
  for (double sign : {1.0, -1.0}) {
    auto cands = sample_chunks(samples, seed, exec, [&](std::mt19937_64& rng) {
      VectorXcd x = random_unit(m, rng);
      return Candidate{sign * d.h(x), x, VectorXcd()};
    });
    cands.resize(std::min<std::size_t>(cands.size(), 8));
    Candidate best = cands.front();
    for (auto& c : cands) {
      Candidate r = refine_h(d, c, sign, refine_iters);
      if (better(r, best)) best = r;
    }
    if (sign > 0) {
      out.min = best.value;
      out.argmin = best.x;
    } else {
      out.max = -best.value;
      out.argmax = best.x;
    }
  }
  return out;
}

BisectionalMin orthogonal_bisectional_min(const KahlerCurvatureTensor& t, int samples, int refine_iters,
                                          std::uint64_t seed, Exec exec) {
  const int m = t.dim();
  if (m < 2) throw std::invalid_argument("orthogonal_bisectional_min: dim >= 2");
  const Dense d(t);
  auto cands = sample_chunks(samples, seed, exec, [&](std::mt19937_64& rng) {
    VectorXcd x = random_unit(m, rng);
    VectorXcd y = random_unit(m, rng);
    orthonormalise(x, y);
    return Candidate{d.quartic(x, y), x, y};
  });
  cands.resize(std::min<std::size_t>(cands.size(), 8));
  Candidate best = cands.front();
  for (auto& c : cands) {
    Candidate r = refine_bisectional(d, c, refine_iters);
    if (better(r, best)) best = r;
  }
  return {best.value, best.x, best.y};
}

BergerWindow berger_bounds(double lambda, double cos_theta) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("berger_bounds: lambda in (0,1]");
  if (!(cos_theta >= 0.0 && cos_theta <= 1.0)) throw std::invalid_argument("berger_bounds: cos in [0,1]");
  double c2 = cos_theta * cos_theta;
  return {lambda - 0.5 + 0.5 * lambda * c2, 1.0 - 0.5 * lambda + 0.5 * c2};
}

RiemannianBounds riemannian_bounds(double lambda, double cos_theta) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("riemannian_bounds: lambda in (0,1]");
  if (!(cos_theta >= 0.0 && cos_theta <= 1.0)) throw std::invalid_argument("riemannian_bounds: cos in [0,1]");
  double c2 = cos_theta * cos_theta;
  RiemannianBounds b;
  b.berger = {(7.0 * lambda - 5.0) / 8.0, (4.0 - lambda) / 3.0};
  b.bishop_goldberg = {(3.0 * (1.0 + c2) * lambda - 2.0) / 4.0, 1.0 - 0.75 * lambda * (1.0 - c2)};
  return b;
}

double product_pinching(double lambda1, double lambda2) {
  if (!(lambda1 > 0.0 && lambda1 <= 1.0 && lambda2 > 0.0 && lambda2 <= 1.0))
    throw std::invalid_argument("product_pinching: lambdas in (0,1]");
  return lambda1 * lambda2 / (lambda1 + lambda2);
}

KahlerCurvatureTensor cp_tensor(int dim, double c) {
  KahlerCurvatureTensor t(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) t.set(a, a, b, b, a == b ? c : c / 2.0);
  return t;
}

KahlerCurvatureTensor product_tensor(const KahlerCurvatureTensor& a, const KahlerCurvatureTensor& b) {
  KahlerCurvatureTensor t(a.dim() + b.dim());
  for (const auto& [key, v] : a.components()) t.set(key[0], key[1], key[2], key[3], v);
  const int s = a.dim();
  for (const auto& [key, v] : b.components()) t.set(key[0] + s, key[1] + s, key[2] + s, key[3] + s, v);
  return t;
}

KahlerCurvatureTensor flag_tensor() {
  KahlerCurvatureTensor t(3);
  t.set(0, 0, 0, 0, 1.0);
  t.set(1, 1, 1, 1, 2.0);
  t.set(2, 2, 2, 2, 2.0);
  t.set(0, 0, 1, 1, 0.5);
  t.set(0, 0, 2, 2, 0.5);
  t.set(1, 1, 2, 2, -0.5);
  return t;
}

namespace {

// Graph chart of the hypersurface and its pulled-back metric.
struct Hypersurface {
  int r, s, p;

  int dim() const { return r + s - 1; }

  // f_i(z) with z_0 = 1, and d f_i / d z_j for j = 1..r.
  cplx f(int i, const VectorXcd& z) const { return std::pow(z[i % (r + 1)], p); }
  cplx df(int i, int j, const VectorXcd& z) const {
    if (i % (r + 1) != j) return 0.0;
    return static_cast<double>(p) * std::pow(z[j], p - 1);
  }

  // Pulled-back metric at parameter t.
  MatrixXcd metric(const VectorXcd& t) const {
    const int n = dim();
    VectorXcd z(r + 1);
    z[0] = 1.0;
    for (int j = 1; j <= r; ++j) z[j] = t[j - 1];
    VectorXcd w(s + 1);
    w[1] = 1.0;
    for (int i = 2; i <= s; ++i) w[i] = t[r + i - 2];
    cplx f0 = f(0, z);
    if (std::abs(f0) < 1e-12) throw std::domain_error("induced_curvature: chart singular at point");
    cplx num = 0.0;
    for (int i = 1; i <= s; ++i) num += f(i, z) * w[i];
    w[0] = -num / f0;

    // Jacobians of z_1..z_r and of (w_0, w_2..w_s) with respect to t.
    MatrixXcd jz = MatrixXcd::Zero(r, n);
    for (int j = 0; j < r; ++j) jz(j, j) = 1.0;
    MatrixXcd jw = MatrixXcd::Zero(s, n);
    for (int j = 1; j <= r; ++j) {
      cplx d = 0.0;
      for (int i = 0; i <= s; ++i) d += df(i, j, z) * w[i];
      jw(0, j - 1) = -d / f0;
    }
    for (int i = 2; i <= s; ++i) {
      jw(0, r + i - 2) = -f(i, z) / f0;
      jw(i - 1, r + i - 2) = 1.0;
    }
    VectorXcd zi = z.tail(r);
    VectorXcd wi(s);
    wi[0] = w[0];
    for (int i = 2; i <= s; ++i) wi[i - 1] = w[i];
    return pullback(jz, fubini_study(zi)) + pullback(jw, fubini_study(wi));
  }

  // g_{ij̄} = δ_ij/(1+|z|^2) - conj(z_i) z_j/(1+|z|^2)^2
  static MatrixXcd fubini_study(const VectorXcd& z) {
    double q = 1.0 + z.squaredNorm();
    MatrixXcd g = MatrixXcd::Identity(z.size(), z.size()) / q;
    for (int i = 0; i < z.size(); ++i)
      for (int j = 0; j < z.size(); ++j) g(i, j) -= std::conj(z[i]) * z[j] / (q * q);
    return g;
  }

  // G_ab = sum J_ia conj(J_jb) g_ij
  static MatrixXcd pullback(const MatrixXcd& jac, const MatrixXcd& g) {
    return jac.transpose() * g * jac.conjugate();
  }
};

// Real coordinate alpha < n moves Re t_alpha, otherwise Im t_{alpha-n}.
VectorXcd shifted(const VectorXcd& t, int alpha, double h) {
  VectorXcd u = t;
  const int n = static_cast<int>(t.size());
  if (alpha < n) u[alpha] += h;
  else u[alpha - n] += cplx(0.0, h);
  return u;
}

template <class F>
MatrixXcd diff1(const F& f, const VectorXcd& t, int alpha, double h) {
  return (-f(shifted(t, alpha, 2 * h)) + 8.0 * f(shifted(t, alpha, h)) - 8.0 * f(shifted(t, alpha, -h)) +
          f(shifted(t, alpha, -2 * h))) /
         (12.0 * h);
}

struct Derivatives {
  std::vector<MatrixXcd> d1;               // d/dx_alpha
  std::vector<std::vector<MatrixXcd>> d2;  // d^2/dx_alpha dx_beta
};

template <class F>
Derivatives derivatives(const F& f, const VectorXcd& t, double h) {
  const int nr = 2 * static_cast<int>(t.size());
  Derivatives out;
  out.d1.resize(nr);
  out.d2.assign(nr, std::vector<MatrixXcd>(nr));
  MatrixXcd f0 = f(t);
  for (int a = 0; a < nr; ++a) {
    out.d1[a] = diff1(f, t, a, h);
    out.d2[a][a] = (-f(shifted(t, a, 2 * h)) + 16.0 * f(shifted(t, a, h)) - 30.0 * f0 +
                    16.0 * f(shifted(t, a, -h)) - f(shifted(t, a, -2 * h))) /
                   (12.0 * h * h);
  }
  for (int a = 0; a < nr; ++a)
    for (int b = a + 1; b < nr; ++b) {
      auto da = [&](const VectorXcd& u) { return diff1(f, u, a, h); };
      out.d2[a][b] = diff1(da, t, b, h);
      out.d2[b][a] = out.d2[a][b];
    }
  return out;
}

KahlerCurvatureTensor assemble(const Hypersurface& hs, const VectorXcd& t, double h, MatrixXcd* metric_out) {
  const int n = hs.dim();
  auto g = [&](const VectorXcd& u) { return hs.metric(u); };
  MatrixXcd G = g(t);
  Derivatives der = derivatives(g, t, h);
  const cplx I(0.0, 1.0);
  // d_i = (d_x - i d_y)/2, dbar_j = (d_x + i d_y)/2
  std::vector<MatrixXcd> del(n), delbar(n);
  for (int i = 0; i < n; ++i) {
    del[i] = 0.5 * (der.d1[i] - I * der.d1[n + i]);
    delbar[i] = 0.5 * (der.d1[i] + I * der.d1[n + i]);
  }
  auto ddbar = [&](int i, int j) {
    return 0.25 * (der.d2[i][j] + der.d2[n + i][n + j] + I * (der.d2[i][n + j] - der.d2[n + i][j]));
  };
  // g^{p q̄} with sum_q g^{p q̄} g_{k q̄} = δ_pk
  MatrixXcd ginv = G.inverse().transpose();

  std::vector<cplx> coord(static_cast<std::size_t>(n) * n * n * n);
  auto at = [&](int i, int j, int k, int l) -> cplx& { return coord[((i * n + j) * n + k) * n + l]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MatrixXcd second = ddbar(i, j);
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          cplx v = -second(k, l);
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) v += ginv(p, q) * del[i](k, q) * delbar[j](p, l);
          at(i, j, k, l) = v;
        }
    }

  // Unitary frame: columns of F with F^H G^T F = I, upper triangular.
  MatrixXcd K = G.transpose();
  Eigen::LLT<MatrixXcd> llt(K);
  if (llt.info() != Eigen::Success) throw std::domain_error("induced_curvature: metric not positive");
  MatrixXcd L = llt.matrixL();
  MatrixXcd F = L.adjoint().triangularView<Eigen::Upper>().solve(MatrixXcd::Identity(n, n));

  // R'_{abcd} = sum R_{ijkl} F_ia conj(F_jb) F_kc conj(F_ld), one index at a time.
  auto contract = [&](std::vector<cplx> src, int slot, bool conj) {
    std::vector<cplx> dst(src.size(), 0.0);
    std::array<int, 4> idx;
    for (idx[0] = 0; idx[0] < n; ++idx[0])
      for (idx[1] = 0; idx[1] < n; ++idx[1])
        for (idx[2] = 0; idx[2] < n; ++idx[2])
          for (idx[3] = 0; idx[3] < n; ++idx[3]) {
            std::array<int, 4> j = idx;
            cplx v = 0.0;
            for (int m = 0; m < n; ++m) {
              j[slot] = m;
              cplx fm = conj ? std::conj(F(m, idx[slot])) : F(m, idx[slot]);
              v += src[((j[0] * n + j[1]) * n + j[2]) * n + j[3]] * fm;
            }
            dst[((idx[0] * n + idx[1]) * n + idx[2]) * n + idx[3]] = v;
          }
    return dst;
  };
  coord = contract(coord, 0, false);
  coord = contract(coord, 1, true);
  coord = contract(coord, 2, false);
  coord = contract(coord, 3, true);

  KahlerCurvatureTensor out(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          auto [key, conj] = KahlerCurvatureTensor::canonical({a, b, c, d});
          if (key != KahlerCurvatureTensor::Index{a, b, c, d} || conj) continue;
          cplx v = coord[((a * n + b) * n + c) * n + d];
          // Drop finite-difference dust below the scheme's accuracy.
          if (std::abs(v.real()) < 1e-9) v.real(0.0);
          if (std::abs(v.imag()) < 1e-9) v.imag(0.0);
          out.set(a, b, c, d, v);
        }
  if (metric_out) *metric_out = G;
  return out;
}

double max_gap(const KahlerCurvatureTensor& a, const KahlerCurvatureTensor& b) {
  const int n = a.dim();
  double gap = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) gap = std::max(gap, std::abs(a(i, j, k, l) - b(i, j, k, l)));
  return gap;
}

}  // namespace

InducedCurvature induced_curvature(int r, int s, int p, const VectorXcd& point, double step) {
  if (r < 1 || s < 2 || p < 1) throw std::invalid_argument("induced_curvature: need r >= 1, s >= 2, p >= 1");
  if (!(step >= 1e-4 && step <= 1e-2)) throw std::invalid_argument("induced_curvature: step in [1e-4, 1e-2]");
  Hypersurface hs{r, s, p};
  if (point.size() != hs.dim()) throw std::invalid_argument("induced_curvature: point has r+s-1 coordinates");
  InducedCurvature out;
  out.tensor = assemble(hs, point, step, &out.metric);
  KahlerCurvatureTensor half = assemble(hs, point, step / 2, nullptr);
  out.richardson_gap = max_gap(out.tensor, half);
  return out;
}

KahlerCurvatureTensor induced_curvature_at(int r, int s, int p, const VectorXcd& point, double step) {
  InducedCurvature ic = induced_curvature(r, s, p, point, step);
  if (ic.richardson_gap > 1e-4)
    throw std::runtime_error("induced_curvature: step and step/2 disagree by " + std::to_string(ic.richardson_gap));
  return ic.tensor;
}

}  // namespace hsc
