#pragma once

// Integer factorisations G = A^T A of positive-definite Gram matrices and
// norm-2 vector systems in the orthogonal complement of Col A.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "linkbound/exactla.hpp"

namespace linkbound {

using IntVector = std::vector<long long>;

struct EmbeddingSolution {
  /// l x m with a^T a = G.
  IntMatrix a;
  /// Rows sign-normalised and sorted, zero rows last, minimised over the
  /// column permutations that fix G.
  IntMatrix canonical_form;
};

class NotPositiveDefinite : public std::invalid_argument {
 public:
  NotPositiveDefinite() : std::invalid_argument("Gram matrix is not positive definite") {}
};

namespace detail {

inline int sign_of_leading(const IntVector& r) {
  for (long long v : r)
    if (v != 0) return v > 0 ? 1 : -1;
  return 0;
}

inline IntVector sign_normalised(IntVector r) {
  if (sign_of_leading(r) < 0)
    for (auto& v : r) v = -v;
  return r;
}

inline bool is_zero_row(const IntVector& r) {
  return std::all_of(r.begin(), r.end(), [](long long v) { return v == 0; });
}

/// Zero rows sort after every nonzero row; otherwise lexicographic descending.
inline bool row_before(const IntVector& a, const IntVector& b) {
  const bool za = is_zero_row(a), zb = is_zero_row(b);
  if (za != zb) return zb;
  return a > b;
}

inline std::vector<IntVector> rows_of(const IntMatrix& a) {
  std::vector<IntVector> out(a.rows(), IntVector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = static_cast<long long>(a(i, j));
  return out;
}

inline IntMatrix matrix_of(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix a(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rows[i][j];
  return a;
}

inline std::vector<std::vector<long long>> small_entries(const IntMatrix& g) {
  std::vector<std::vector<long long>> out(g.rows(), std::vector<long long>(g.cols()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out[i][j] = static_cast<long long>(g(i, j));
  return out;
}

}  // namespace detail

/// Column permutations p with G(p_i, p_j) = G(i, j).
inline std::vector<std::vector<int>> gram_automorphisms(const IntMatrix& g) {
  const int m = static_cast<int>(g.rows());
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < m && ok; ++j)
        if (g(static_cast<std::size_t>(p[static_cast<std::size_t>(i)]), static_cast<std::size_t>(p[static_cast<std::size_t>(j)])) !=
            g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)))
          ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Canonical representative of `a` under row permutations, row signs and the
/// column permutations in `autos`.
inline IntMatrix canonical_embedding(const IntMatrix& a, const std::vector<std::vector<int>>& autos) {
  const auto rows = detail::rows_of(a);
  std::vector<IntVector> best;
  for (const auto& p : autos) {
    std::vector<IntVector> cand;
    for (const auto& r : rows) {
      IntVector s(r.size());
      for (std::size_t j = 0; j < r.size(); ++j) s[j] = r[static_cast<std::size_t>(p[j])];
      cand.push_back(detail::sign_normalised(std::move(s)));
    }
    std::sort(cand.begin(), cand.end(), detail::row_before);
    if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end(),
                                                     detail::row_before))
      best = std::move(cand);
  }
  return detail::matrix_of(best, a.cols());
}

inline IntMatrix canonical_embedding(const IntMatrix& a, const IntMatrix& g) {
  return canonical_embedding(a, gram_automorphisms(g));
}

/// Depth-first enumeration of all l x m integer A with A^T A = G, one per
/// orbit of row permutations and row signs.  `visit` returns false to stop.
/// Returns false when stopped early.
inline bool for_each_embedding(const IntMatrix& g, int l, const std::function<bool(const IntMatrix&)>& visit) {
  if (!g.is_symmetric() || !is_positive_definite(g)) throw NotPositiveDefinite();
  const int m = static_cast<int>(g.rows());
  if (l < m) return true;
  const auto gs = detail::small_entries(g);
  // Candidate rows r: sign-normalised, r_j^2 <= g_jj and r^T G^{-1} r <= 1,
  // the latter tested as r^T adj(G) r <= det G.
  const Integer det = det_exact(g);
  IntMatrix adj(g.rows(), g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      adj(j, i) = ((i + j) % 2 ? -1 : 1) * det_exact(g.minor_matrix(i, j));
  std::vector<long long> bound(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    bound[static_cast<std::size_t>(j)] = static_cast<long long>(isqrt(g(static_cast<std::size_t>(j), static_cast<std::size_t>(j))));
  std::vector<IntVector> cands;
  std::vector<int> lead;
  IntVector r(static_cast<std::size_t>(m));
  std::function<void(int)> gen = [&](int j) {
    if (j == m) {
      if (detail::sign_of_leading(r) <= 0) return;
      Integer q = 0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) q += adj(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) * r[static_cast<std::size_t>(a)] * r[static_cast<std::size_t>(b)];
      if (q <= det) cands.push_back(r);
      return;
    }
    for (long long v = bound[static_cast<std::size_t>(j)]; v >= -bound[static_cast<std::size_t>(j)]; --v) {
      r[static_cast<std::size_t>(j)] = v;
      gen(j + 1);
    }
  };
  gen(0);
  // Group candidates by leading column so that column j is finished once
  // the search moves past rows led by column j.
  std::stable_sort(cands.begin(), cands.end(), [](const IntVector& a, const IntVector& b) {
    auto first = [](const IntVector& v) {
      return static_cast<int>(std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; }) - v.begin());
    };
    return first(a) < first(b);
  });
  for (const auto& c : cands)
    lead.push_back(static_cast<int>(std::find_if(c.begin(), c.end(), [](long long x) { return x != 0; }) - c.begin()));

  std::vector<std::vector<long long>> rem = gs;
  std::vector<std::size_t> chosen;
  bool stopped = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t from) {
    if (stopped) return;
    bool done = true;
    for (int j = 0; j < m && done; ++j)
      if (rem[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] != 0) done = false;
    if (done) {
      std::vector<IntVector> rows;
      for (auto i : chosen) rows.push_back(cands[i]);
      while (static_cast<int>(rows.size()) < l) rows.emplace_back(static_cast<std::size_t>(m), 0);
      if (!visit(detail::matrix_of(rows, static_cast<std::size_t>(m)))) stopped = true;
      return;
    }
    if (static_cast<int>(chosen.size()) >= l) return;
    int first_open = 0;
    while (rem[static_cast<std::size_t>(first_open)][static_cast<std::size_t>(first_open)] == 0) ++first_open;
    for (std::size_t i = from; i < cands.size() && !stopped; ++i) {
      if (lead[i] > first_open) break;
      if (lead[i] < first_open) continue;
      const auto& c = cands[i];
      bool ok = true;
      for (int a = 0; a < m && ok; ++a) {
        const long long daa = rem[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] - c[static_cast<std::size_t>(a)] * c[static_cast<std::size_t>(a)];
        if (daa < 0) ok = false;
        for (int b = 0; b < a && ok; ++b) {
          const long long dbb = rem[static_cast<std::size_t>(b)][static_cast<std::size_t>(b)] - c[static_cast<std::size_t>(b)] * c[static_cast<std::size_t>(b)];
          const long long dab = rem[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] - c[static_cast<std::size_t>(a)] * c[static_cast<std::size_t>(b)];
          if (daa * dbb < dab * dab) ok = false;
          if ((daa == 0 || dbb == 0) && dab != 0) ok = false;
        }
      }
      if (!ok) continue;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) rem[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -= c[static_cast<std::size_t>(a)] * c[static_cast<std::size_t>(b)];
      chosen.push_back(i);
      dfs(i);
      chosen.pop_back();
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) rem[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += c[static_cast<std::size_t>(a)] * c[static_cast<std::size_t>(b)];
    }
  };
  dfs(0);
  return !stopped;
}

/// All factorisations G = A^T A with A an l x m integer matrix, up to row
/// permutations, row signs and column permutations fixing G, in canonical order.
inline std::vector<EmbeddingSolution> orthogonal_embeddings(const IntMatrix& g, int l) {
  const auto autos = gram_automorphisms(g);
  std::set<std::vector<IntVector>> seen;
  std::vector<EmbeddingSolution> out;
  for_each_embedding(g, l, [&](const IntMatrix& a) {
    auto canon = canonical_embedding(a, autos);
    if (seen.insert(detail::rows_of(canon)).second) out.push_back(EmbeddingSolution{a, canon});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const EmbeddingSolution& x, const EmbeddingSolution& y) {
    const auto a = detail::rows_of(x.canonical_form), b = detail::rows_of(y.canonical_form);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), detail::row_before);
  });
  return out;
}

/// All vectors +-e_i +-e_j (i < j) in Z^l.
inline std::vector<IntVector> norm2_universe(int l) {
  std::vector<IntVector> out;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          IntVector v(static_cast<std::size_t>(l), 0);
          v[static_cast<std::size_t>(i)] = si;
          v[static_cast<std::size_t>(j)] = sj;
          out.push_back(std::move(v));
        }
  return out;
}

class DependentVectors : public std::invalid_argument {
 public:
  DependentVectors() : std::invalid_argument("vectors are linearly dependent") {}
};

/// True iff the vectors span a primitive sublattice of Z^l.
inline bool primitive_check(const std::vector<IntVector>& vs) {
  if (vs.empty()) return true;
  IntMatrix m(vs.size(), vs.front().size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs[i].size(); ++j) m(i, j) = vs[i][j];
  const auto f = snf(m);
  if (f.rank() < vs.size()) throw DependentVectors();
  return std::all_of(f.invariant_factors.begin(), f.invariant_factors.end(), [](const Integer& a) { return a == 1; });
}

/// Sets of q pairwise orthogonal norm-2 vectors in (Col A)^perp spanning a
/// primitive sublattice, one vector per +- pair.  With `first_only` the
/// search stops at the first system.
inline std::vector<std::vector<IntVector>> norm2_complement_systems(const IntMatrix& a, int q, bool first_only = false) {
  const int l = static_cast<int>(a.rows());
  std::vector<IntVector> pool;
  for (auto& v : norm2_universe(l)) {
    if (detail::sign_of_leading(v) < 0) continue;
    bool perp = true;
    for (std::size_t j = 0; j < a.cols() && perp; ++j) {
      Integer s = 0;
      for (int i = 0; i < l; ++i) s += a(static_cast<std::size_t>(i), j) * v[static_cast<std::size_t>(i)];
      perp = s == 0;
    }
    if (perp) pool.push_back(std::move(v));
  }
  auto dot = [](const IntVector& x, const IntVector& y) {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
  };
  std::vector<std::vector<IntVector>> out;
  std::vector<IntVector> cur;
  std::function<bool(std::size_t)> grow = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == q) {
      if (!primitive_check(cur)) return true;
      out.push_back(cur);
      return !first_only;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (std::any_of(cur.begin(), cur.end(), [&](const IntVector& w) { return dot(w, pool[i]) != 0; })) continue;
      cur.push_back(pool[i]);
      const bool go_on = grow(i + 1);
      cur.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  if (q <= 0) return {{}};
  grow(0);
  return out;
}

}  // namespace linkbound
