#include "ghzpure/dense/ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghzpure::dense {

namespace {

using ssize = long long;  // OpenMP loop index

void check_qubit(const DensityMatrix& rho, int t) {
  if (t < 0 || t >= rho.num_qubits()) {
    throw std::invalid_argument("qubit index out of range");
  }
}

}  // namespace

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b) {
  DensityMatrix out(a.num_qubits() + b.num_qubits());
  const std::size_t da = a.dim(), db = b.dim(), d = out.dim();
#pragma omp parallel for schedule(static)
  for (ssize i = 0; i < ssize(d); ++i) {
    const std::size_t ia = std::size_t(i) / db, ib = std::size_t(i) % db;
    for (std::size_t ja = 0; ja < da; ++ja) {
      const cx aij = a.at(ia, ja);
      for (std::size_t jb = 0; jb < db; ++jb) {
        out.at(i, ja * db + jb) = aij * b.at(ib, jb);
      }
    }
  }
  return out;
}

void apply_cnot(DensityMatrix& rho, int control, int target) {
  check_qubit(rho, control);
  check_qubit(rho, target);
  if (control == target) {
    throw std::invalid_argument("control and target must differ");
  }
  const int nq = rho.num_qubits();
  const std::size_t d = rho.dim();
  const std::size_t cmask = mask_of(control, nq), tmask = mask_of(target, nq);
  // sigma is an involution; each unordered entry pair {(i,j),(si,sj)} is
  // swapped exactly once, by the thread owning its smaller representative.
#pragma omp parallel for schedule(static)
  for (ssize i = 0; i < ssize(d); ++i) {
    const std::size_t si = (std::size_t(i) & cmask) ? (std::size_t(i) ^ tmask)
                                                    : std::size_t(i);
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t sj = (j & cmask) ? (j ^ tmask) : j;
      if (std::size_t(i) < si || (std::size_t(i) == si && j < sj)) {
        std::swap(rho.at(i, j), rho.at(si, sj));
      }
    }
  }
}

void apply_1q(DensityMatrix& rho, int t, const Gate1Q& u) {
  check_qubit(rho, t);
  const int nq = rho.num_qubits();
  const std::size_t d = rho.dim();
  const std::size_t m = mask_of(t, nq);
  // rho <- (U rho) : combine row pairs
#pragma omp parallel for schedule(static)
  for (ssize i = 0; i < ssize(d); ++i) {
    if (std::size_t(i) & m) continue;
    const std::size_t i1 = std::size_t(i) | m;
    for (std::size_t j = 0; j < d; ++j) {
      const cx a = rho.at(i, j), b = rho.at(i1, j);
      rho.at(i, j) = u[0] * a + u[1] * b;
      rho.at(i1, j) = u[2] * a + u[3] * b;
    }
  }
  // rho <- (rho U^dagger) : combine column pairs
#pragma omp parallel for schedule(static)
  for (ssize i = 0; i < ssize(d); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (j & m) continue;
      const std::size_t j1 = j | m;
      const cx a = rho.at(i, j), b = rho.at(i, j1);
      rho.at(i, j) = a * std::conj(u[0]) + b * std::conj(u[1]);
      rho.at(i, j1) = a * std::conj(u[2]) + b * std::conj(u[3]);
    }
  }
}

void project_qubit(DensityMatrix& rho, int t, int outcome) {
  check_qubit(rho, t);
  if (outcome != 0 && outcome != 1) {
    throw std::invalid_argument("outcome must be 0 or 1");
  }
  const int nq = rho.num_qubits();
  const std::size_t d = rho.dim();
#pragma omp parallel for schedule(static)
  for (ssize i = 0; i < ssize(d); ++i) {
    const bool kill_row = bit_of(std::size_t(i), t, nq) != outcome;
    for (std::size_t j = 0; j < d; ++j) {
      if (kill_row || bit_of(j, t, nq) != outcome) {
        rho.at(i, j) = cx{0.0, 0.0};
      }
    }
  }
}

namespace {

// Scatter tables mapping compact kept/dropped indices to their bit positions
// in the original index.
struct TraceTables {
  std::vector<std::size_t> keep_expand;
  std::vector<std::size_t> drop_expand;
  int kept_qubits = 0;
};

TraceTables make_trace_tables(int nq, const std::vector<int>& drop) {
  std::vector<bool> dropped(nq, false);
  for (int t : drop) {
    if (t < 0 || t >= nq || dropped[t]) {
      throw std::invalid_argument("bad qubit list for partial trace");
    }
    dropped[t] = true;
  }
  std::vector<int> keep_pos, drop_pos;
  for (int t = 0; t < nq; ++t) {
    (dropped[t] ? drop_pos : keep_pos).push_back(t);
  }
  TraceTables tab;
  tab.kept_qubits = int(keep_pos.size());
  tab.keep_expand.assign(std::size_t{1} << keep_pos.size(), 0);
  tab.drop_expand.assign(std::size_t{1} << drop_pos.size(), 0);
  for (std::size_t a = 0; a < tab.keep_expand.size(); ++a) {
    std::size_t idx = 0;
    for (std::size_t b = 0; b < keep_pos.size(); ++b) {
      if ((a >> (keep_pos.size() - 1 - b)) & 1u) idx |= mask_of(keep_pos[b], nq);
    }
    tab.keep_expand[a] = idx;
  }
  for (std::size_t x = 0; x < tab.drop_expand.size(); ++x) {
    std::size_t idx = 0;
    for (std::size_t b = 0; b < drop_pos.size(); ++b) {
      if ((x >> (drop_pos.size() - 1 - b)) & 1u) idx |= mask_of(drop_pos[b], nq);
    }
    tab.drop_expand[x] = idx;
  }
  return tab;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& drop) {
  const TraceTables tab = make_trace_tables(rho.num_qubits(), drop);
  DensityMatrix out(tab.kept_qubits);
  const std::size_t dk = out.dim();
  const std::size_t nx = tab.drop_expand.size();
#pragma omp parallel for schedule(static)
  for (ssize a = 0; a < ssize(dk); ++a) {
    const std::size_t ia = tab.keep_expand[std::size_t(a)];
    for (std::size_t b = 0; b < dk; ++b) {
      const std::size_t jb = tab.keep_expand[b];
      cx acc{0.0, 0.0};
      for (std::size_t x = 0; x < nx; ++x) {
        const std::size_t e = tab.drop_expand[x];
        acc += rho.at(ia | e, jb | e);
      }
      out.at(a, b) = acc;
    }
  }
  return out;
}

DensityMatrix permute_qubits(const DensityMatrix& rho, const std::vector<int>& new_to_old) {
  const int nq = rho.num_qubits();
  if (int(new_to_old.size()) != nq) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::vector<bool> seen(nq, false);
  for (int t : new_to_old) {
    if (t < 0 || t >= nq || seen[t]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[t] = true;
  }
  const std::size_t d = rho.dim();
  std::vector<std::size_t> remap(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    std::size_t old = 0;
    for (int k = 0; k < nq; ++k) {
      if (bit_of(i, k, nq)) old |= mask_of(new_to_old[k], nq);
    }
    remap[i] = old;
  }
  DensityMatrix out(nq);
#pragma omp parallel for schedule(static)
  for (ssize i = 0; i < ssize(d); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      out.at(i, j) = rho.at(remap[std::size_t(i)], remap[j]);
    }
  }
  return out;
}

DensityMatrix depolarize_qubit(const DensityMatrix& rho, int t, double q) {
  check_qubit(rho, t);
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
  const int nq = rho.num_qubits();
  const std::size_t d = rho.dim();
  const std::size_t m = mask_of(t, nq);
  DensityMatrix out(nq);
#pragma omp parallel for schedule(static)
  for (ssize i = 0; i < ssize(d); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      cx v = q * rho.at(i, j);
      if (bit_of(std::size_t(i), t, nq) == bit_of(j, t, nq)) {
        const std::size_t i0 = std::size_t(i) & ~m, j0 = j & ~m;
        v += 0.5 * (1.0 - q) * (rho.at(i0, j0) + rho.at(i0 | m, j0 | m));
      }
      out.at(i, j) = v;
    }
  }
  return out;
}

}  // namespace ghzpure::dense
