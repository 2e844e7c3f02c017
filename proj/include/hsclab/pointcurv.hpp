#ifndef HSCLAB_POINTCURV_HPP_
#define HSCLAB_POINTCURV_HPP_

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "hsclab/kernels.hpp"

namespace hsc {

using cplx = std::complex<double>;

/// Components R_{a b̄ c d̄} of a Kähler curvature tensor at a point, in a
/// unitary frame. Indices are 0-based. Only one representative per symmetry
/// orbit is stored; R_{ab̄cd̄} = R_{cb̄ad̄} = R_{ad̄cb̄} and
/// conj(R_{ab̄cd̄}) = R_{b ā d c̄} resolve every other pattern.
class KahlerCurvatureTensor {
 public:
  using Index = std::array<int, 4>;

  explicit KahlerCurvatureTensor(int dim = 1);

  int dim() const { return dim_; }
  cplx operator()(int a, int b, int c, int d) const;
  /// Sets the whole orbit of (a,b,c,d). Self-conjugate orbits keep only the
  /// real part.
  void set(int a, int b, int c, int d, cplx value);

  /// Canonical representative of the orbit and whether reaching it conjugates.
  static std::pair<Index, bool> canonical(const Index& idx);

  const std::map<Index, cplx>& components() const { return stored_; }
  /// R_{ab̄} = sum_c R_{ab̄cc̄}
  Eigen::MatrixXcd ricci() const;
  /// Row-major m^4 array, index ((a m + b) m + c) m + d.
  std::vector<cplx> dense() const;

  KahlerCurvatureTensor scaled(double factor) const;

 private:
  int dim_;
  std::map<Index, cplx> stored_;
};

/// Sum R x_a conj(x_b) x_c conj(x_d) / |x|^4. Throws on the zero vector.
double h_of_direction(const KahlerCurvatureTensor& t, const Eigen::VectorXcd& x);

/// R(X, JX, JY, Y) = sum R x_a conj(x_b) y_c conj(y_d) for unit x, y.
double bisectional(const KahlerCurvatureTensor& t, const Eigen::VectorXcd& x, const Eigen::VectorXcd& y);

struct TensorExtrema {
  double min = 0.0;
  double max = 0.0;
  Eigen::VectorXcd argmin;
  Eigen::VectorXcd argmax;
  double pinching() const { return min / max; }
};

/// Unit-sphere sampling in fixed seeded chunks, then projected gradient
/// descent/ascent with backtracking from the best few samples.
TensorExtrema h_extrema(const KahlerCurvatureTensor& t, int samples = 100000, int refine_iters = 200,
                        std::uint64_t seed = 1, Exec exec = Exec::parallel);

/// Min of R(X,JX,JY,Y) over unit X, Y with <X, Y> = 0 (Hermitian).
struct BisectionalMin {
  double value = 0.0;
  Eigen::VectorXcd x;
  Eigen::VectorXcd y;
};
BisectionalMin orthogonal_bisectional_min(const KahlerCurvatureTensor& t, int samples = 20000,
                                          int refine_iters = 200, std::uint64_t seed = 1,
                                          Exec exec = Exec::parallel);

struct BergerWindow {
  double lower = 0.0;
  double upper = 0.0;
};
/// lambda - 1/2 + (lambda/2) cos^2 <= R(X,JX,JY,Y) <= 1 - lambda/2 + cos^2 / 2
/// for lambda <= H <= 1, g(X,Y) = 0, g(X,JY) = cos.
BergerWindow berger_bounds(double lambda, double cos_theta);

struct RiemannianBounds {
  BergerWindow berger;           ///< (7 lambda - 5)/8 <= K <= (4 - lambda)/3
  BergerWindow bishop_goldberg;  ///< (3(1+cos^2) lambda - 2)/4 <= K <= 1 - (3/4) lambda sin^2
};
RiemannianBounds riemannian_bounds(double lambda, double cos_theta = 0.0);

/// lambda1 lambda2 / (lambda1 + lambda2)
double product_pinching(double lambda1, double lambda2);

/// R = (c/2)(δ_ab δ_cd + δ_ad δ_cb): constant holomorphic sectional curvature c.
KahlerCurvatureTensor cp_tensor(int dim, double c = 1.0);
/// Block sum for the product metric.
KahlerCurvatureTensor product_tensor(const KahlerCurvatureTensor& a, const KahlerCurvatureTensor& b);

/// The hyperplane-class flag 3-fold in CP^2 x CP^2, unitary frame at a point.
KahlerCurvatureTensor flag_tensor();

/// Curvature of the product Fubini-Study metric restricted to the bidegree
/// (p,1) hypersurface sum_{i=0}^s z_{i mod (r+1)}^p w_i = 0 in CP^r x CP^s.
/// Chart: z = [1, t_1..t_r], w = [w_0(t), 1, t_{r+1}..t_{r+s-1}].
/// The tensor is expressed in the Gram-Schmidt frame of d/dt_1, d/dt_2, ...
struct InducedCurvature {
  KahlerCurvatureTensor tensor;
  Eigen::MatrixXcd metric;      ///< g(d/dt_a, conj d/dt_b) at the point
  double richardson_gap = 0.0;  ///< max component change between step and step/2
};
InducedCurvature induced_curvature(int r, int s, int p, const Eigen::VectorXcd& point, double step = 1e-3);
/// Same, returning the tensor; throws if the Richardson gap exceeds 1e-4.
KahlerCurvatureTensor induced_curvature_at(int r, int s, int p, const Eigen::VectorXcd& point,
                                           double step = 1e-3);

}  // namespace hsc

#endif  // HSCLAB_POINTCURV_HPP_
