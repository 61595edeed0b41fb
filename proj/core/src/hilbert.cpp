#include "depolar/hilbert.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "depolar/errors.hpp"

namespace depolar {

std::size_t HilbertCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return table_.size() + graded_table_.size();
}

void HilbertCache::clear() {
  std::lock_guard<std::mutex> lock(mutex_);
  table_.clear();
  graded_table_.clear();
  hits_ = 0;
}

namespace {

struct CanonicalForm {
  std::string key;
  std::vector<Monomial> rows;  // restricted + reordered, ascending lex
  std::vector<int> colmap;     // canonical column -> original variable
  int k = 0;                   // number of canonical columns
};

// Restrict the generators to their support and reorder the remaining
// columns by their content.  The result is deterministic, and ideals that
// differ only by unused variables or by a permutation the signature sort
// resolves the same way share a key.  Correctness does not depend on the
// sort being a perfect canonical form: the key always describes the matrix
// actually recursed on, and colmap maps the cached result back.
CanonicalForm canonicalize(const std::vector<Monomial>& gens, int n) {
  CanonicalForm cf;
  std::vector<int> used;
  for (int c = 0; c < n; ++c) {
    for (const Monomial& g : gens)
      if (g[c] > 0) {
        used.push_back(c);
        break;
      }
  }
  cf.k = static_cast<int>(used.size());
  cf.colmap = used;
  std::vector<std::vector<int>> mat(gens.size(), std::vector<int>(cf.k));
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (int c = 0; c < cf.k; ++c) mat[r][c] = gens[r][used[c]];

  for (int iter = 0; iter < 2; ++iter) {
    std::sort(mat.begin(), mat.end());
    std::vector<int> order(cf.k);
    for (int c = 0; c < cf.k; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      for (std::size_t r = 0; r < mat.size(); ++r) {
        if (mat[r][a] != mat[r][b]) return mat[r][a] < mat[r][b];
      }
      return false;
    });
    std::vector<int> new_colmap(cf.k);
    for (int c = 0; c < cf.k; ++c) new_colmap[c] = cf.colmap[order[c]];
    cf.colmap = std::move(new_colmap);
    for (auto& row : mat) {
      std::vector<int> nr(cf.k);
      for (int c = 0; c < cf.k; ++c) nr[c] = row[order[c]];
      row = std::move(nr);
    }
  }
  std::sort(mat.begin(), mat.end());

  cf.key.reserve(2 + mat.size() * cf.k * 2);
  cf.key.push_back(static_cast<char>(cf.k));
  cf.key.push_back(static_cast<char>(cf.k >> 8));
  for (const auto& row : mat)
    for (int e : row) {
      cf.key.push_back(static_cast<char>(e & 0xff));
      cf.key.push_back(static_cast<char>((e >> 8) & 0xff));
    }

  cf.rows.reserve(mat.size());
  for (auto& row : mat) cf.rows.emplace_back(std::move(row));
  return cf;
}

// Re-express a polynomial over the canonical columns in the original ring.
MultigradedPolynomial embed(const MultigradedPolynomial& p,
                            const std::vector<int>& colmap, int n) {
  std::vector<MultigradedPolynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [mono, coeff] : p.terms()) {
    std::vector<int> e(n, 0);
    for (int c = 0; c < mono.num_vars(); ++c) e[colmap[c]] = mono[c];
    terms.emplace_back(Monomial(std::move(e)), coeff);
  }
  return MultigradedPolynomial::from_terms(n, std::move(terms));
}

}  // namespace

class HilbertEngine {
public:
  explicit HilbertEngine(HilbertCache& cache) : cache_(cache) {}

  MultigradedPolynomial run(const MonomialIdeal& ideal) {
    int n = ideal.num_vars();
    if (ideal.is_zero()) return MultigradedPolynomial(n);
    MultigradedPolynomial num = unit(n);
    num -= quotient_numerator(ideal.generators(), n);
    return num;
  }

private:
  static MultigradedPolynomial unit(int n) {
    return MultigradedPolynomial::term(Monomial(std::vector<int>(n, 0)));
  }

  static MultigradedPolynomial one_minus(const Monomial& g) {
    MultigradedPolynomial out = unit(g.num_vars());
    out -= MultigradedPolynomial::term(g);
    return out;
  }

  // Numerator of the Hilbert series of S/I over the common denominator
  // prod (1 - x_i); unused variables contribute no factor.  gens is a
  // minimal generating set.
  MultigradedPolynomial quotient_numerator(const std::vector<Monomial>& gens,
                                           int n) {
    if (gens.empty()) return unit(n);
    if (gens[0].is_unit()) return MultigradedPolynomial(n);
    if (gens.size() == 1) return one_minus(gens[0]);
    if (gens.size() == 2) {
      MultigradedPolynomial out = unit(n);
      out -= MultigradedPolynomial::term(gens[0]);
      out -= MultigradedPolynomial::term(gens[1]);
      out += MultigradedPolynomial::term(lcm(gens[0], gens[1]));
      return out;
    }

    CanonicalForm cf = canonicalize(gens, n);
    {
      std::lock_guard<std::mutex> lock(cache_.mutex_);
      auto it = cache_.table_.find(cf.key);
      if (it != cache_.table_.end()) {
        ++cache_.hits_;
        return embed(it->second, cf.colmap, n);
      }
    }
    MultigradedPolynomial value = split(cf.rows, cf.k);
    {
      std::lock_guard<std::mutex> lock(cache_.mutex_);
      cache_.table_.emplace(cf.key, value);
    }
    return embed(value, cf.colmap, n);
  }

  // Factor over connected components of the variable/support graph: the
  // quotient is a tensor product, so the numerators multiply.
  MultigradedPolynomial split(const std::vector<Monomial>& rows, int k) {
    std::vector<int> root(k);
    for (int c = 0; c < k; ++c) root[c] = c;
    auto find = [&](int c) {
      while (root[c] != c) c = root[c] = root[root[c]];
      return c;
    };
    for (const Monomial& g : rows) {
      int first = -1;
      for (int c = 0; c < k; ++c) {
        if (g[c] == 0) continue;
        if (first < 0)
          first = find(c);
        else
          root[find(c)] = first;
      }
    }
    std::vector<std::vector<int>> comp_cols(k);
    for (int c = 0; c < k; ++c) comp_cols[find(c)].push_back(c);

    int components = 0;
    for (int c = 0; c < k; ++c)
      if (!comp_cols[c].empty()) ++components;
    if (components <= 1) return pivot(rows, k);

    MultigradedPolynomial product = unit(k);
    for (int c = 0; c < k; ++c) {
      const std::vector<int>& cols = comp_cols[c];
      if (cols.empty()) continue;
      std::vector<Monomial> sub;
      for (const Monomial& g : rows) {
        // each generator's support lies inside exactly one component
        std::vector<int> e(cols.size());
        bool inside = false;
        for (std::size_t i = 0; i < cols.size(); ++i) {
          e[i] = g[cols[i]];
          if (e[i] > 0) inside = true;
        }
        if (inside) sub.emplace_back(std::move(e));
      }
      std::sort(sub.begin(), sub.end());
      product = product *
                embed(quotient_numerator(sub, static_cast<int>(cols.size())),
                      cols, k);
    }
    return product;
  }

  // One step of the standard divide-and-conquer on a connected instance:
  // pick a frequent variable v and a mid-range exponent e, then
  //   num(S/I) = num(S/(I + v^e)) + v^e * num(S/(I : v^e)).
  // Both sides are strictly smaller, and the memo collapses repeats.
  MultigradedPolynomial pivot(const std::vector<Monomial>& rows, int k) {
    // Closed form when all generators but one are pure powers: with
    // P = <x_i^{a_i}> and g mixed,
    //   num(S/(P + g)) = prod (1 - x_i^{a_i}) - g * prod (1 - x_i^{a_i - g_i}).
    {
      int mixed = -1, pure = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].support().size()) == 1)
          ++pure;
        else
          mixed = static_cast<int>(r);
      }
      if (pure == static_cast<int>(rows.size()) - 1 && mixed >= 0)
        return pure_plus_one(rows, static_cast<std::size_t>(mixed), k);
    }

    std::vector<int> count(k, 0);
    for (const Monomial& g : rows)
      for (int c = 0; c < k; ++c)
        if (g[c] > 0) ++count[c];
    int v = 0;
    for (int c = 1; c < k; ++c)
      if (count[c] > count[v]) v = c;

    std::vector<int> exps;
    int pure_exp = 0;  // exponent of a pure power of v, if one is present
    for (const Monomial& g : rows)
      if (g[v] > 0) {
        exps.push_back(g[v]);
        if (g.support().size() == 1) pure_exp = g[v];
      }
    std::sort(exps.begin(), exps.end());
    int e = exps[(exps.size() - 1) / 2];
    if (pure_exp > 0) e = std::min(e, pure_exp - 1);
    if (e < 1) e = 1;  // pure_exp == 1 cannot occur on a connected instance

    std::vector<int> pe(k, 0);
    pe[v] = e;
    Monomial q{std::move(pe)};

    std::vector<Monomial> plus_gens = rows;
    plus_gens.push_back(q);
    MonomialIdeal plus(k, std::move(plus_gens));

    std::vector<Monomial> colon_gens;
    colon_gens.reserve(rows.size());
    for (const Monomial& g : rows) colon_gens.push_back(quotient(g, q));
    MonomialIdeal colon(k, std::move(colon_gens));

    MultigradedPolynomial value = quotient_numerator(plus.generators(), k);
    value += quotient_numerator(colon.generators(), k).shifted(q);
    return value;
  }

  MultigradedPolynomial pure_plus_one(const std::vector<Monomial>& rows,
                                      std::size_t mixed, int k) {
    const Monomial& g = rows[mixed];
    MultigradedPolynomial head = unit(k);
    MultigradedPolynomial tail = unit(k);
    bool tail_zero = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == mixed) continue;
      head = head * one_minus(rows[r]);
      if (tail_zero) continue;
      int var = rows[r].support()[0];
      int rem = rows[r][var] - g[var];
      if (rem <= 0) {
        tail_zero = true;  // the colon ideal is improper
        continue;
      }
      std::vector<int> e(k, 0);
      e[var] = rem;
      tail = tail * one_minus(Monomial(std::move(e)));
    }
    if (!tail_zero) head -= tail.shifted(g);
    return head;
  }

  HilbertCache& cache_;
};

MultigradedPolynomial hilbert_numerator(const MonomialIdeal& ideal,
                                        HilbertCache& cache) {
  return HilbertEngine(cache).run(ideal);
}

MultigradedPolynomial hilbert_numerator(const MonomialIdeal& ideal) {
  HilbertCache cache;
  return hilbert_numerator(ideal, cache);
}

namespace {

// Dense univariate polynomials in the grading variable t: coeffs[d] is the
// coefficient of t^d.  No trailing zeros.
using Dense = std::vector<Int>;

void dense_trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a += sign * t^shift * b
void dense_add(Dense& a, const Dense& b, int sign, int shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Int(0));
  for (std::size_t d = 0; d < b.size(); ++d)
    if (sign > 0)
      a[d + shift] += b[d];
    else
      a[d + shift] -= b[d];
  dense_trim(a);
}

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  dense_trim(out);
  return out;
}

Dense dense_one_minus(int degree) {
  Dense out(degree + 1, Int(0));
  out[0] = 1;
  out[degree] -= 1;
  dense_trim(out);  // degree 0 gives the zero polynomial
  return out;
}

}  // namespace

// Same recursion as HilbertEngine, but every value is specialized to the
// single grading x_i -> t on the fly.  Memo values are coefficient vectors,
// so instances whose multigraded numerator is astronomically large still
// run in modest memory.
class GradedHilbertEngine {
public:
  explicit GradedHilbertEngine(HilbertCache& cache) : cache_(cache) {}

  Dense run(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return {};
    Dense num{Int(1)};
    dense_add(num, quotient_numerator(ideal.generators(), ideal.num_vars()),
              -1);
    return num;
  }

private:
  Dense quotient_numerator(const std::vector<Monomial>& gens, int n) {
    if (gens.empty()) return Dense{Int(1)};
    if (gens[0].is_unit()) return {};
    if (gens.size() == 1) return dense_one_minus(gens[0].total_degree());
    if (gens.size() == 2) {
      Dense out{Int(1)};
      dense_add(out, Dense{Int(1)}, -1, gens[0].total_degree());
      dense_add(out, Dense{Int(1)}, -1, gens[1].total_degree());
      dense_add(out, Dense{Int(1)}, 1, lcm(gens[0], gens[1]).total_degree());
      return out;
    }

    CanonicalForm cf = canonicalize(gens, n);
    {
      std::lock_guard<std::mutex> lock(cache_.mutex_);
      auto it = cache_.graded_table_.find(cf.key);
      if (it != cache_.graded_table_.end()) {
        ++cache_.hits_;
        return it->second;
      }
    }
    Dense value = split(cf.rows, cf.k);
    {
      std::lock_guard<std::mutex> lock(cache_.mutex_);
      cache_.graded_table_.emplace(cf.key, value);
    }
    return value;
  }

  Dense split(const std::vector<Monomial>& rows, int k) {
    std::vector<int> root(k);
    for (int c = 0; c < k; ++c) root[c] = c;
    auto find = [&](int c) {
      while (root[c] != c) c = root[c] = root[root[c]];
      return c;
    };
    for (const Monomial& g : rows) {
      int first = -1;
      for (int c = 0; c < k; ++c) {
        if (g[c] == 0) continue;
        if (first < 0)
          first = find(c);
        else
          root[find(c)] = first;
      }
    }
    std::vector<std::vector<int>> comp_cols(k);
    for (int c = 0; c < k; ++c) comp_cols[find(c)].push_back(c);

    int components = 0;
    for (int c = 0; c < k; ++c)
      if (!comp_cols[c].empty()) ++components;
    if (components <= 1) return pivot(rows, k);

    Dense product{Int(1)};
    for (int c = 0; c < k; ++c) {
      const std::vector<int>& cols = comp_cols[c];
      if (cols.empty()) continue;
      std::vector<Monomial> sub;
      for (const Monomial& g : rows) {
        std::vector<int> e(cols.size());
        bool inside = false;
        for (std::size_t i = 0; i < cols.size(); ++i) {
          e[i] = g[cols[i]];
          if (e[i] > 0) inside = true;
        }
        if (inside) sub.emplace_back(std::move(e));
      }
      std::sort(sub.begin(), sub.end());
      product = dense_mul(
          product, quotient_numerator(sub, static_cast<int>(cols.size())));
    }
    return product;
  }

  Dense pivot(const std::vector<Monomial>& rows, int k) {
    {
      int mixed = -1, pure = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (static_cast<int>(rows[r].support().size()) == 1)
          ++pure;
        else
          mixed = static_cast<int>(r);
      }
      if (pure == static_cast<int>(rows.size()) - 1 && mixed >= 0)
        return pure_plus_one(rows, static_cast<std::size_t>(mixed));
    }

    std::vector<int> count(k, 0);
    for (const Monomial& g : rows)
      for (int c = 0; c < k; ++c)
        if (g[c] > 0) ++count[c];
    int v = 0;
    for (int c = 1; c < k; ++c)
      if (count[c] > count[v]) v = c;

    std::vector<int> exps;
    int pure_exp = 0;
    for (const Monomial& g : rows)
      if (g[v] > 0) {
        exps.push_back(g[v]);
        if (g.support().size() == 1) pure_exp = g[v];
      }
    std::sort(exps.begin(), exps.end());
    int e = exps[(exps.size() - 1) / 2];
    if (pure_exp > 0) e = std::min(e, pure_exp - 1);
    if (e < 1) e = 1;

    std::vector<int> pe(k, 0);
    pe[v] = e;
    Monomial q{std::move(pe)};

    std::vector<Monomial> plus_gens = rows;
    plus_gens.push_back(q);
    MonomialIdeal plus(k, std::move(plus_gens));

    std::vector<Monomial> colon_gens;
    colon_gens.reserve(rows.size());
    for (const Monomial& g : rows) colon_gens.push_back(quotient(g, q));
    MonomialIdeal colon(k, std::move(colon_gens));

    Dense value = quotient_numerator(plus.generators(), k);
    dense_add(value, quotient_numerator(colon.generators(), k), 1, e);
    return value;
  }

  Dense pure_plus_one(const std::vector<Monomial>& rows, std::size_t mixed) {
    const Monomial& g = rows[mixed];
    Dense head{Int(1)};
    Dense tail{Int(1)};
    bool tail_zero = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == mixed) continue;
      head = dense_mul(head, dense_one_minus(rows[r].total_degree()));
      if (tail_zero) continue;
      int var = rows[r].support()[0];
      int rem = rows[r][var] - g[var];
      if (rem <= 0) {
        tail_zero = true;
        continue;
      }
      tail = dense_mul(tail, dense_one_minus(rem));
    }
    if (!tail_zero) dense_add(head, tail, -1, g.total_degree());
    return head;
  }

  HilbertCache& cache_;
};

std::vector<Int> hilbert_numerator_graded(const MonomialIdeal& ideal,
                                          HilbertCache& cache) {
  return GradedHilbertEngine(cache).run(ideal);
}

std::vector<Int> hilbert_numerator_graded(const MonomialIdeal& ideal) {
  HilbertCache cache;
  return hilbert_numerator_graded(ideal, cache);
}

}  // namespace depolar
