#include "ghzpure/dense/reference.hpp"

#include <stdexcept>

namespace ghzpure::dense::ref {

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  DensityMatrix out(a.num_qubits() + b.num_qubits());
  const std::size_t da = a.dim(), db = b.dim();
  for (std::size_t ia = 0; ia < da; ++ia) {
    for (std::size_t ja = 0; ja < da; ++ja) {
      for (std::size_t ib = 0; ib < db; ++ib) {
        for (std::size_t jb = 0; jb < db; ++jb) {
          out.at(ia * db + ib, ja * db + jb) = a.at(ia, ja) * b.at(ib, jb);
        }
      }
    }
  }
  return out;
}

namespace {

std::size_t cnot_perm(std::size_t i, std::size_t cmask, std::size_t tmask) {
  return (i & cmask) ? (i ^ tmask) : i;
}

}  // namespace

DensityMatrix apply_cnot(const DensityMatrix& rho, int control, int target) {
  const int nq = rho.num_qubits();
  const std::size_t d = rho.dim();
  const std::size_t cmask = mask_of(control, nq), tmask = mask_of(target, nq);
  DensityMatrix out(nq);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out.at(i, j) = rho.at(cnot_perm(i, cmask, tmask), cnot_perm(j, cmask, tmask));
    }
  }
  return out;
}

DensityMatrix apply_1q(const DensityMatrix& rho, int t, const Gate1Q& u) {
  const int nq = rho.num_qubits();
  const std::size_t d = rho.dim();
  DensityMatrix out(nq);
  // out = U rho U^dagger expanded entrywise over the t-bit of both indices
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t m = mask_of(t, nq);
      const int bi = bit_of(i, t, nq), bj = bit_of(j, t, nq);
      cx acc{0.0, 0.0};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const std::size_t ia = a ? (i | m) : (i & ~m);
          const std::size_t jb = b ? (j | m) : (j & ~m);
          acc += u[bi * 2 + a] * rho.at(ia, jb) * std::conj(u[bj * 2 + b]);
        }
      }
      out.at(i, j) = acc;
    }
  }
  return out;
}

DensityMatrix project_qubit(const DensityMatrix& rho, int t, int outcome) {
  const int nq = rho.num_qubits();
  const std::size_t d = rho.dim();
  DensityMatrix out(nq);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (bit_of(i, t, nq) == outcome && bit_of(j, t, nq) == outcome) {
        out.at(i, j) = rho.at(i, j);
      }
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& drop) {
  const int nq = rho.num_qubits();
  std::vector<bool> dropped(nq, false);
  for (int t : drop) dropped[t] = true;
  std::vector<int> keep_pos;
  for (int t = 0; t < nq; ++t) {
    if (!dropped[t]) keep_pos.push_back(t);
  }
  DensityMatrix out(int(keep_pos.size()));
  const std::size_t d = rho.dim();
  // accumulate every input entry whose dropped bits agree on both sides
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      bool diag = true;
      for (int t = 0; t < nq && diag; ++t) {
        if (dropped[t] && bit_of(i, t, nq) != bit_of(j, t, nq)) diag = false;
      }
      if (!diag) continue;
      std::size_t a = 0, b = 0;
      for (std::size_t k = 0; k < keep_pos.size(); ++k) {
        if (bit_of(i, keep_pos[k], nq)) a |= mask_of(int(k), out.num_qubits());
        if (bit_of(j, keep_pos[k], nq)) b |= mask_of(int(k), out.num_qubits());
      }
      out.at(a, b) += rho.at(i, j);
    }
  }
  return out;
}

DensityMatrix permute_qubits(const DensityMatrix& rho, const std::vector<int>& new_to_old) {
  const int nq = rho.num_qubits();
  const std::size_t d = rho.dim();
  DensityMatrix out(nq);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      std::size_t oi = 0, oj = 0;
      for (int k = 0; k < nq; ++k) {
        if (bit_of(i, k, nq)) oi |= mask_of(new_to_old[k], nq);
        if (bit_of(j, k, nq)) oj |= mask_of(new_to_old[k], nq);
      }
      out.at(i, j) = rho.at(oi, oj);
    }
  }
  return out;
}

DensityMatrix depolarize_qubit(const DensityMatrix& rho, int t, double q) {
  const int nq = rho.num_qubits();
  DensityMatrix mixed = ref::partial_trace(rho, {t});
  DensityMatrix out(nq);
  const std::size_t d = rho.dim();
  const std::size_t m = mask_of(t, nq);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      cx v = q * rho.at(i, j);
      if (bit_of(i, t, nq) == bit_of(j, t, nq)) {
        // compact index of the remaining qubits, preserving order
        std::size_t a = 0, b = 0;
        int pos = 0;
        for (int k = 0; k < nq; ++k) {
          if (k == t) continue;
          if (bit_of(i, k, nq)) a |= mask_of(pos, nq - 1);
          if (bit_of(j, k, nq)) b |= mask_of(pos, nq - 1);
          ++pos;
        }
        (void)m;
        v += 0.5 * (1.0 - q) * mixed.at(a, b);
      }
      out.at(i, j) = v;
    }
  }
  return out;
}

}  // namespace ghzpure::dense::ref
