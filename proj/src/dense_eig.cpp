#include "ghzpure/dense/eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ghzpure::dense {

namespace {

double off_norm(const DensityMatrix& a) {
  double s = 0.0;
  const std::size_t d = a.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      s += std::norm(a.at(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(DensityMatrix a) {
  if (a.hermiticity_error() > 1e-9 * (1.0 + a.max_abs())) {
    throw std::invalid_argument("matrix is not Hermitian");
  }
  const std::size_t d = a.dim();
  const double scale = 1.0 + a.max_abs();

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm(a) <= 1e-14 * scale) break;
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const cx apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        const cx phase = apq / r;  // apq = r * phase
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        // rotation angle zeroing the (p, q) element:
        //   t^2 + 2*theta*t - 1 = 0, theta = (aqq - app) / (2r)
        const double theta = (aqq - app) / (2.0 * r);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::hypot(1.0, theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;
        // unitary J: e_p -> c e_p - s conj(phase) e_q, e_q -> s phase e_p + c e_q
        for (std::size_t i = 0; i < d; ++i) {
          const cx aip = a.at(i, p), aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * std::conj(phase) * aiq;
          a.at(i, q) = s * phase * aip + c * aiq;
        }
        for (std::size_t j = 0; j < d; ++j) {
          const cx apj = a.at(p, j), aqj = a.at(q, j);
          a.at(p, j) = c * apj - s * phase * aqj;
          a.at(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        a.at(p, q) = cx{0.0, 0.0};
        a.at(q, p) = cx{0.0, 0.0};
      }
    }
  }

  std::vector<double> ev(d);
  for (std::size_t i = 0; i < d; ++i) {
    ev[i] = a.at(i, i).real();
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

double min_eigenvalue(const DensityMatrix& a) {
  return hermitian_eigenvalues(a).front();
}

}  // namespace ghzpure::dense
