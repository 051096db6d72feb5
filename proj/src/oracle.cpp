#include "coxgrowth/oracle.hpp"

#include <algorithm>

#include "coxgrowth/error.hpp"

namespace coxgrowth {

namespace {

std::string matrix_key(const FMatrix& m) {
  std::string key;
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) m(i, j).serialize(key);
  return key;
}

FMatrix identity_matrix(int n) {
  FMatrix id(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) id(i, j) = FieldElement(i == j ? 1 : 0);
  return id;
}

// rho(w s_i) = rho(w) rho(s_i): column update using the old column i,
// col_j -= 2 B(i,j) col_i for j != i, then col_i flips sign.
FMatrix right_multiply(const FMatrix& m, const FMatrix& twoB, int i) {
  const int n = static_cast<int>(m.rows());
  FMatrix out = m;
  for (int j = 0; j < n; ++j) {
    if (j == i || twoB(i, j).is_zero()) continue;
    for (int r = 0; r < n; ++r) out(r, j) -= twoB(i, j) * m(r, i);
  }
  for (int r = 0; r < n; ++r) out(r, i) = -m(r, i);
  return out;
}

// rho(s_i w): only row i changes, row_i -> -row_i - sum_{k!=i} 2B(i,k) row_k.
FMatrix left_multiply(const FMatrix& twoB, int i, const FMatrix& m) {
  const int n = static_cast<int>(m.rows());
  FMatrix out = m;
  for (int c = 0; c < n; ++c) {
    FieldElement acc = -m(i, c);
    for (int k = 0; k < n; ++k) {
      if (k == i || twoB(i, k).is_zero()) continue;
      acc -= twoB(i, k) * m(k, c);
    }
    out(i, c) = acc;
  }
  return out;
}

FMatrix scaled_gram(const CoxeterDiagram& d, const Caps& caps) {
  auto field = diagram_field(d, caps.field_degree);
  FMatrix B = gram_matrix(d, field);
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) B(i, j) *= FieldElement(2);
  return B;
}

}  // namespace

int GroupTable::find(const FMatrix& m) const {
  auto it = index_.find(matrix_key(m));
  return it == index_.end() ? -1 : it->second;
}

FMatrix reflection_matrix(const FMatrix& B, int i) {
  const int n = static_cast<int>(B.rows());
  FMatrix twoB = B;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) twoB(r, c) *= FieldElement(2);
  return right_multiply(identity_matrix(n), twoB, i);
}

GroupTable bfs_group(const CoxeterDiagram& d, int K, const Caps& caps) {
  d.validate();
  if (K < 0) throw InputError("bfs_group: negative depth");
  const int n = d.rank;
  FMatrix twoB = scaled_gram(d, caps);

  GroupTable t;
  t.rank = n;
  t.elements.push_back(identity_matrix(n));
  t.depth.push_back(0);
  t.index_[matrix_key(t.elements[0])] = 0;
  t.w.assign(K + 1, Int(0));
  t.g.assign(K + 1, Int(0));
  t.w[0] = 1;
  t.g[0] = 1;

  std::vector<Int> geo{Int(1)};  // geodesic words reaching each element
  std::vector<int> level{0};
  for (int k = 0; k < K && !level.empty(); ++k) {
    std::vector<int> next;
    for (int e : level) {
      for (int i = 0; i < n; ++i) {
        FMatrix child = right_multiply(t.elements[e], twoB, i);
        std::string key = matrix_key(child);
        auto it = t.index_.find(key);
        if (it == t.index_.end()) {
          if (t.elements.size() >= caps.elements)
            throw CapError("oracle element count exceeds cap " +
                           std::to_string(caps.elements));
          int id = static_cast<int>(t.elements.size());
          t.index_.emplace(std::move(key), id);
          t.elements.push_back(std::move(child));
          t.depth.push_back(k + 1);
          geo.push_back(geo[e]);
          next.push_back(id);
        } else if (t.depth[it->second] == k + 1) {
          geo[it->second] += geo[e];
        }
        // depth <= k: the word is not geodesic, drop it
      }
    }
    t.w[k + 1] = static_cast<long>(next.size());
    for (int id : next) t.g[k + 1] += geo[id];
    level = std::move(next);
  }
  return t;
}

std::vector<Int> word_counts(const CoxeterDiagram& d, int K, const Caps& caps) {
  return bfs_group(d, K, caps).w;
}

std::vector<Int> geodesic_counts(const CoxeterDiagram& d, int K,
                                 const Caps& caps) {
  return bfs_group(d, K, caps).g;
}

std::vector<Int> shortlex_language_counts(const CoxeterDiagram& d,
                                          std::vector<int> order, int K,
                                          const Caps& caps) {
  const int n = d.rank;
  if (order.empty()) {
    order.resize(n);
    for (int i = 0; i < n; ++i) order[i] = i;
  }
  if (static_cast<int>(order.size()) != n)
    throw InputError("generator order must cover all generators");

  GroupTable t = bfs_group(d, K, caps);
  FMatrix twoB = scaled_gram(d, caps);
  std::vector<int> by_order(n);
  for (int i = 0; i < n; ++i) by_order[i] = i;
  std::sort(by_order.begin(), by_order.end(),
            [&](int a, int b) { return order[a] < order[b]; });

  std::vector<Int> counts(K + 1, Int(0));
  counts[0] = 1;
  for (std::size_t e = 1; e < t.elements.size(); ++e) {
    // The shortlex-least geodesic word starts with the least left
    // descent and continues recursively; walk it down to the identity.
    FMatrix m = t.elements[e];
    int len = t.depth[e];
    int walked = len;
    while (walked > 0) {
      bool stepped = false;
      for (int a : by_order) {
        FMatrix down = left_multiply(twoB, a, m);
        int idx = t.find(down);
        if (idx >= 0 && t.depth[idx] == walked - 1) {
          m = t.elements[idx];
          --walked;
          stepped = true;
          break;
        }
      }
      if (!stepped)
        throw InternalError("oracle: element with no left descent in table");
    }
    if (t.find(m) != 0)
      throw InternalError("oracle: left-descent walk missed the identity");
    counts[len] += 1;
  }
  return counts;
}

}  // namespace coxgrowth
