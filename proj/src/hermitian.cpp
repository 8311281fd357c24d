#include "caus/hermitian.hpp"

#include <utility>

#include "caus/error.hpp"

namespace caus {
namespace {

// Nonzero entry of a basis matrix: value i^phase at (row, col).
struct Entry {
  std::size_t row;
  std::size_t col;
  int phase;
};

// Slot (i, j) of a d-dimensional factor, k = i * d + j:
//   i == j : E_ii
//   i <  j : E_ij + E_ji          (coordinate = Re X_ij)
//   i >  j : i E_ji - i E_ij      (coordinate = Im X_ji)
std::vector<Entry> slot_entries(std::size_t d, std::size_t k) {
  const std::size_t i = k / d;
  const std::size_t j = k % d;
  if (i == j) return {{i, i, 0}};
  if (i < j) return {{i, j, 0}, {j, i, 0}};
  return {{j, i, 1}, {i, j, 3}};
}

int slot_weight(std::size_t d, std::size_t k) {
  const std::size_t i = k / d;
  const std::size_t j = k % d;
  if (i == j) return 1;
  return i < j ? 2 : -2;
}

// Enumerates the entries of the product basis element with multi-index given by
// the per-factor slots; calls fn(row, col, phase).
template <class Fn>
void for_each_product_entry(const Block& block, const std::vector<std::size_t>& slots, Fn&& fn) {
  const std::size_t m = block.size();
  std::vector<std::vector<Entry>> lists(m);
  for (std::size_t t = 0; t < m; ++t) lists[t] = slot_entries(static_cast<std::size_t>(block[t]), slots[t]);
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    std::size_t row = 0, col = 0;
    int phase = 0;
    for (std::size_t t = 0; t < m; ++t) {
      const auto d = static_cast<std::size_t>(block[t]);
      const Entry& e = lists[t][pick[t]];
      row = row * d + e.row;
      col = col * d + e.col;
      phase += e.phase;
    }
    fn(row, col, phase % 4);
    std::size_t t = m;
    while (t > 0) {
      --t;
      if (++pick[t] < lists[t].size()) break;
      pick[t] = 0;
      if (t == 0) return;
    }
    if (m == 0) return;
  }
}

std::vector<std::size_t> decode_slots(const Block& block, std::size_t k) {
  std::vector<std::size_t> slots(block.size());
  for (std::size_t t = block.size(); t > 0; --t) {
    const auto d = static_cast<std::size_t>(block[t - 1]);
    slots[t - 1] = k % (d * d);
    k /= d * d;
  }
  return slots;
}

}  // namespace

bool ComplexMatrix::is_hermitian() const {
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = r; c < dim; ++c) {
      if (re[r * dim + c] != re[c * dim + r]) return false;
      if (im[r * dim + c] != -im[c * dim + r]) return false;
    }
  return true;
}

ComplexMatrix block_matrix(const Block& block, const RationalVector& coords) {
  const auto d = static_cast<std::size_t>(block_dim(block));
  if (coords.size() != d * d) throw DimensionError("block_matrix: coordinate count does not match block");
  ComplexMatrix m(d);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    const Rational& x = coords[k];
    if (sgn(x) == 0) continue;
    for_each_product_entry(block, decode_slots(block, k), [&](std::size_t r, std::size_t c, int phase) {
      switch (phase) {
        case 0: m.re[r * d + c] += x; break;
        case 1: m.im[r * d + c] += x; break;
        case 2: m.re[r * d + c] -= x; break;
        default: m.im[r * d + c] -= x; break;
      }
    });
  }
  return m;
}

RationalVector block_coordinates(const Block& block, const ComplexMatrix& m) {
  const auto d = static_cast<std::size_t>(block_dim(block));
  if (m.dim != d) throw DimensionError("block_coordinates: matrix size does not match block");
  if (!m.is_hermitian()) throw InvalidArgument("block_coordinates: matrix is not Hermitian");
  RationalVector x(d * d);
  for (std::size_t k = 0; k < x.size(); ++k) {
    const auto slots = decode_slots(block, k);
    Rational acc = 0;
    for_each_product_entry(block, slots, [&](std::size_t r, std::size_t c, int phase) {
      const Rational& a = m.re[r * d + c];
      const Rational& b = m.im[r * d + c];
      switch (phase) {
        case 0: acc += a; break;
        case 1: acc -= b; break;
        case 2: acc -= a; break;
        default: acc += b; break;
      }
    });
    long weight = 1;
    for (std::size_t t = 0; t < block.size(); ++t) weight *= slot_weight(static_cast<std::size_t>(block[t]), slots[t]);
    x[k] = acc / weight;
  }
  return x;
}

std::vector<ComplexMatrix> to_blocks(const ModelObject& o, const RationalVector& x) {
  if (!o.is_quantum()) throw InvalidArgument("to_blocks: object is not quantum");
  if (x.size() != o.ambient_dim()) throw DimensionError("to_blocks: vector length differs from ambient dimension");
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < o.blocks().size(); ++i) {
    const auto& slots = o.block_slots()[i];
    RationalVector part(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) part[k] = x[slots[k]];
    out.push_back(block_matrix(o.blocks()[i], part));
  }
  return out;
}

RationalVector from_blocks(const ModelObject& o, const std::vector<ComplexMatrix>& blocks) {
  if (!o.is_quantum()) throw InvalidArgument("from_blocks: object is not quantum");
  if (blocks.size() != o.blocks().size()) throw DimensionError("from_blocks: block count mismatch");
  RationalVector x(o.ambient_dim());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const auto part = block_coordinates(o.blocks()[i], blocks[i]);
    const auto& slots = o.block_slots()[i];
    if (part.size() != slots.size()) throw DimensionError("from_blocks: block dimension mismatch");
    for (std::size_t k = 0; k < slots.size(); ++k) x[slots[k]] = part[k];
  }
  return x;
}

bool is_psd_symmetric(RationalMatrix a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw DimensionError("is_psd_symmetric: matrix is not square");
  std::vector<bool> alive(n, true);
  Rational f;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      const int s = sgn(a(i, i));
      if (s < 0) return false;
      if (s > 0 && pivot == n) pivot = i;
    }
    if (pivot == n) {
      // Every remaining diagonal entry is zero, so the remaining block must vanish.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (alive[i] && alive[j] && sgn(a(i, j)) != 0) return false;
        }
      return true;
    }
    alive[pivot] = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!alive[i] || sgn(a(i, pivot)) == 0) continue;
      f = a(i, pivot) / a(pivot, pivot);
      for (std::size_t j = 0; j < n; ++j) {
        if (alive[j] && sgn(a(pivot, j)) != 0) a(i, j) -= f * a(pivot, j);
      }
    }
  }
  return true;
}

bool is_psd(const ComplexMatrix& m) {
  if (!m.is_hermitian()) return false;
  const std::size_t d = m.dim;
  RationalMatrix s(2 * d, 2 * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const Rational& x = m.re[r * d + c];
      const Rational& y = m.im[r * d + c];
      s(r, c) = x;
      s(r, d + c) = -y;
      s(d + r, c) = y;
      s(d + r, d + c) = x;
    }
  return is_psd_symmetric(std::move(s));
}

}  // namespace caus
