#include "scd/oracle.hpp"

#include <string>

namespace scd {

namespace {

bool arc_form(const std::vector<Code>& m, int s) {
  std::uint64_t rows = 0, cols = 0;
  for (int r = 0; r < s; ++r)
    for (int c = r + 1; c < s; ++c) {
      if (m[r * s + c] == 0) continue;
      if ((rows >> r) & 1u || (cols >> c) & 1u) return false;
      rows |= 1ull << r;
      cols |= 1ull << c;
    }
  return true;
}

}  // namespace

OrbitCensus::OrbitCensus(FieldPtr field, int size, std::uint64_t state_budget)
    : field_(std::move(field)), size_(size), cell_index_(size * size, -1) {
  if (size < 0) throw Error(ErrorKind::malformed_input, "negative matrix size");
  const unsigned q = field_->q();
  std::uint64_t w = 1;
  for (int r = 0; r < size; ++r)
    for (int c = r + 1; c < size; ++c) {
      if (w > state_budget) break;
      cell_index_[r * size + c] = static_cast<int>(cells_.size());
      cells_.emplace_back(r, c);
      weight_.push_back(w);
      w *= q;
    }
  const std::size_t dim = static_cast<std::size_t>(size) * (size - 1) / 2;
  if (cells_.size() < dim || w > state_budget)
    throw Error(ErrorKind::budget_exceeded, "u_" + std::to_string(size) + "(" + std::to_string(q) + ") has q^" +
                                                std::to_string(dim) + " elements, above the budget of " +
                                                std::to_string(state_budget));
  states_ = w;
  orbit_id_.assign(states_, 0);
}

std::uint64_t OrbitCensus::encode(const UTMatrix& m) const {
  if (m.size() != size_ || !m.field()->same_as(*field_))
    throw Error(ErrorKind::context_mismatch, "matrix does not belong to this census");
  if (!membership(m, MatrixSet::algebra_A)) throw Error(ErrorKind::membership, "matrix is not strictly upper triangular");
  std::uint64_t idx = 0;
  for (std::size_t k = 0; k < cells_.size(); ++k) idx += m(cells_[k].first, cells_[k].second) * weight_[k];
  return idx;
}

UTMatrix OrbitCensus::decode(std::uint64_t index) const {
  UTMatrix m(field_, size_);
  const unsigned q = field_->q();
  for (auto [r, c] : cells_) {
    m.set(r, c, static_cast<Code>(index % q));
    index /= q;
  }
  return m;
}

std::uint32_t OrbitCensus::explore(std::uint64_t start) {
  const Field& f = *field_;
  const unsigned q = f.q();
  const std::vector<Code> basis = f.prime_basis();
  const std::uint32_t id = static_cast<std::uint32_t>(orbits_.size() + 1);
  orbits_.emplace_back();
  Orbit& orbit = orbits_.back();

  std::vector<std::uint64_t> queue{start};
  orbit_id_[start] = id;
  std::vector<Code> m(static_cast<std::size_t>(size_) * size_, 0);
  auto at = [&](int r, int c) { return m[r * size_ + c]; };
  auto push = [&](std::uint64_t next) {
    if (orbit_id_[next] == 0) {
      orbit_id_[next] = id;
      queue.push_back(next);
    }
  };

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint64_t idx = queue[head];
    std::uint64_t rest = idx;
    for (auto [r, c] : cells_) {
      m[r * size_ + c] = static_cast<Code>(rest % q);
      rest /= q;
    }
    if (arc_form(m, size_)) orbit.arc_forms.push_back(decode(idx));

    for (Code t : basis) {
      // Left by I + t e_{i,i+1}: row i += t row i+1.
      for (int i = 0; i + 1 < size_; ++i) {
        std::uint64_t next = idx;
        for (int c = i + 2; c < size_; ++c) {
          const Code v = at(i + 1, c);
          if (v == 0) continue;
          const int k = cell_index_[i * size_ + c];
          const Code old = at(i, c);
          next = next - old * weight_[k] + f.add(old, f.mul(t, v)) * weight_[k];
        }
        push(next);
      }
      // Right by I + t e_{j,j+1}: column j+1 += t column j.
      for (int j = 0; j + 1 < size_; ++j) {
        std::uint64_t next = idx;
        for (int r = 0; r < j; ++r) {
          const Code v = at(r, j);
          if (v == 0) continue;
          const int k = cell_index_[r * size_ + j + 1];
          const Code old = at(r, j + 1);
          next = next - old * weight_[k] + f.add(old, f.mul(t, v)) * weight_[k];
        }
        push(next);
      }
    }
  }
  orbit.size = queue.size();
  visited_ += queue.size();
  return id;
}

const OrbitCensus::Orbit& OrbitCensus::orbit_of(const UTMatrix& m) {
  const std::uint64_t idx = encode(m);
  std::uint32_t id = orbit_id_[idx];
  if (id == 0) id = explore(idx);
  return orbits_[id - 1];
}

void OrbitCensus::explore_all() {
  for (std::uint64_t idx = 0; idx < states_; ++idx)
    if (orbit_id_[idx] == 0) explore(idx);
}

}  // namespace scd
