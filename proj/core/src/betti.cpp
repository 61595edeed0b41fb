#include "depolar/betti.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "depolar/errors.hpp"
#include "depolar/rational.hpp"

namespace depolar {

std::map<std::pair<int, int>, long> BettiTable::graded() const {
  std::map<std::pair<int, int>, long> out;
  for (const auto& [key, value] : entries)
    out[{key.first, key.second.total_degree()}] += value;
  return out;
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> out;
  for (const auto& [key, value] : entries) {
    if (static_cast<int>(out.size()) <= key.first) out.resize(key.first + 1, 0);
    out[key.first] += value;
  }
  return out;
}

int BettiTable::proj_dim() const {
  int pd = 0;
  for (const auto& [key, value] : entries)
    if (value > 0) pd = std::max(pd, key.first);
  return pd;
}

int BettiTable::regularity() const {
  int reg = 0;
  for (const auto& [key, value] : entries)
    if (value > 0) reg = std::max(reg, key.second.total_degree() - key.first);
  return reg;
}

namespace {

// Exact rank over the rationals by Gaussian elimination.  The matrices
// here are small (faces of a complex on at most generator_limit vertices).
int rational_rank(std::vector<std::vector<Rational>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int c2 = c; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
    }
    ++rank;
  }
  return rank;
}

// Reduced rational homology dimensions of the simplicial complex whose
// faces are the given vertex subsets (bitmasks over nvert vertices; the
// empty face is implicit).  homology[d] = dim H~_d.
std::vector<int> reduced_homology(const std::vector<unsigned>& faces, int nvert) {
  // Bucket faces by dimension; face_index[d] maps a mask to its column.
  std::vector<std::vector<unsigned>> by_dim(nvert);
  for (unsigned f : faces) {
    int d = __builtin_popcount(f) - 1;
    by_dim[d].push_back(f);
  }
  for (auto& bucket : by_dim) std::sort(bucket.begin(), bucket.end());

  int top = nvert - 1;
  while (top >= 0 && by_dim[top].empty()) --top;
  std::vector<int> homology(top + 1, 0);
  if (top < 0) return homology;

  // rank of the boundary map C_d -> C_{d-1}; C_{-1} is the empty face.
  auto boundary_rank = [&](int d) -> int {
    const auto& faces_d = by_dim[d];
    if (faces_d.empty()) return 0;
    if (d == 0) return 1;  // augmentation onto the empty face
    const auto& faces_lower = by_dim[d - 1];
    std::vector<std::vector<Rational>> m(
        faces_lower.size(), std::vector<Rational>(faces_d.size(), Rational(0)));
    for (std::size_t col = 0; col < faces_d.size(); ++col) {
      unsigned f = faces_d[col];
      int sign = 1;
      for (unsigned rest = f; rest;) {
        unsigned low = rest & (~rest + 1);
        unsigned sub = f & ~low;
        auto it = std::lower_bound(faces_lower.begin(), faces_lower.end(), sub);
        assert(it != faces_lower.end() && *it == sub);
        m[it - faces_lower.begin()][col] = Rational(sign);
        sign = -sign;
        rest &= rest - 1;
      }
    }
    return rational_rank(std::move(m));
  };

  std::vector<int> ranks(top + 2, 0);
  for (int d = 0; d <= top; ++d) ranks[d] = boundary_rank(d);
  for (int d = 0; d <= top; ++d) {
    int fd = static_cast<int>(by_dim[d].size());
    homology[d] = fd - ranks[d] - (d + 1 <= top ? ranks[d + 1] : 0);
  }
  return homology;
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& ideal, int generator_limit) {
  if (!ideal.is_proper())
    throw ImproperIdealError("Betti numbers need a proper nonzero ideal");
  const auto& gens = ideal.generators();
  int r = static_cast<int>(gens.size());
  if (r > generator_limit || r > 25)
    throw LimitExceededError(
        "ideal has " + std::to_string(r) + " generators, over the limit of " +
        std::to_string(std::min(generator_limit, 25)) +
        " for exact Betti numbers; consider Mayer-Vietoris bounds");

  // The lcm lattice: closure of the generators under lcm.
  std::set<Monomial> lattice(gens.begin(), gens.end());
  std::vector<Monomial> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Monomial m = std::move(queue.back());
    queue.pop_back();
    for (const Monomial& g : gens) {
      Monomial l = lcm(m, g);
      if (lattice.insert(l).second) queue.push_back(l);
    }
  }

  BettiTable table;
  table.num_vars = ideal.num_vars();
  for (const Monomial& mu : lattice) {
    std::vector<int> divisors;
    for (int i = 0; i < r; ++i)
      if (divides(gens[i], mu)) divisors.push_back(i);
    int s = static_cast<int>(divisors.size());

    // Faces: subsets whose lcm stays strictly below mu.  lcms are built
    // bottom-up over the subset lattice.
    std::vector<unsigned> faces;
    std::vector<Monomial> sub_lcm(1u << s);
    sub_lcm[0] = Monomial(std::vector<int>(ideal.num_vars(), 0));
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
      unsigned low = mask & (~mask + 1);
      int idx = __builtin_ctz(mask);
      sub_lcm[mask] = lcm(sub_lcm[mask & ~low], gens[divisors[idx]]);
      if (sub_lcm[mask] != mu) faces.push_back(mask);
    }

    std::vector<int> homology = reduced_homology(faces, s);
    for (int d = 0; d < static_cast<int>(homology.size()); ++d)
      if (homology[d] > 0) table.entries[{d + 1, mu}] += homology[d];
    // A generator itself: beta_0 contribution (empty complex below it).
    if (s == 1 && ideal.contains(mu)) table.entries[{0, mu}] += 1;
  }
  return table;
}

int proj_dim(const MonomialIdeal& ideal, int generator_limit) {
  return betti_numbers(ideal, generator_limit).proj_dim();
}

int regularity(const MonomialIdeal& ideal, int generator_limit) {
  return betti_numbers(ideal, generator_limit).regularity();
}

}  // namespace depolar
