#include "coxgrowth/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "coxgrowth/error.hpp"

namespace coxgrowth {

namespace {

std::string root_key(const FVector& v) {
  std::string key;
  for (int k = 0; k < v.size(); ++k) v(k).serialize(key);
  return key;
}

FieldElement coordinate_sum(const FVector& v) {
  FieldElement s;
  for (int k = 0; k < v.size(); ++k) s += v(k);
  return s;
}

}  // namespace

std::optional<int> SmallRootSet::find(const FVector& v) const {
  auto it = index.find(root_key(v));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

SmallRootSet small_roots(const CoxeterDiagram& d, const Caps& caps) {
  d.validate();
  SmallRootSet s;
  s.diagram = d;
  s.field = diagram_field(d, caps.field_degree);
  s.gram = gram_matrix(d, s.field);
  const int n = d.rank;

  std::map<std::string, int>& index = s.index;
  std::deque<int> work;
  for (int i = 0; i < n; ++i) {
    s.roots.push_back(simple_root(n, i));
    index[root_key(s.roots.back())] = i;
    work.push_back(i);
  }

  while (!work.empty()) {
    int r = work.front();
    work.pop_front();
    for (int i = 0; i < n; ++i) {
      FieldElement p = inner(s.gram, s.roots[r], simple_root(n, i));
      if (p.sign() < 0 && (p + FieldElement(1)).sign() > 0) {
        FVector image = apply_reflection(s.gram, i, s.roots[r]);
        std::string key = root_key(image);
        if (!index.count(key)) {
          if (s.roots.size() >= caps.sigma)
            throw CapError("small-root count exceeds cap " +
                           std::to_string(caps.sigma));
          int id = static_cast<int>(s.roots.size());
          s.roots.push_back(std::move(image));
          index[key] = id;
          work.push_back(id);
        }
      }
    }
  }

  // Canonical order: simple roots first by index, then by coordinate
  // sum and coordinatewise numeric order.
  std::vector<int> order(s.roots.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::vector<FieldElement> sums;
  sums.reserve(s.roots.size());
  for (const auto& r : s.roots) sums.push_back(coordinate_sum(r));
  std::sort(order.begin() + n, order.end(), [&](int a, int b) {
    int c = (sums[a] - sums[b]).sign();
    if (c != 0) return c < 0;
    for (int k = 0; k < n; ++k) {
      c = (s.roots[a](k) - s.roots[b](k)).sign();
      if (c != 0) return c < 0;
    }
    return false;
  });
  std::vector<FVector> sorted;
  sorted.reserve(s.roots.size());
  for (int id : order) sorted.push_back(std::move(s.roots[id]));
  s.roots = std::move(sorted);
  index.clear();
  for (std::size_t k = 0; k < s.roots.size(); ++k)
    index[root_key(s.roots[k])] = static_cast<int>(k);

  const int total = s.size();
  s.action.resize(n, total);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < total; ++r) {
      if (r == i) {
        s.action(i, r) = SmallRootSet::kNegativeSelf;
        continue;
      }
      FVector image = apply_reflection(s.gram, i, s.roots[r]);
      auto it = index.find(root_key(image));
      s.action(i, r) = it == index.end() ? SmallRootSet::kNotSmall : it->second;
    }
  }
  return s;
}

std::vector<int> stabilizer_roots(const SmallRootSet& s, int i, int j) {
  if (!s.diagram.is_infinite(i, j))
    throw InputError("stabilizer_roots requires m_ij = infinity");
  std::vector<int> out;
  for (int r = 0; r < s.size(); ++r)
    if (s.act(i, r) == r && s.act(j, r) == r) out.push_back(r);
  return out;
}

std::optional<long> cycle_escape(const SmallRootSet& s, int i, int j, int r) {
  if (!s.diagram.is_infinite(i, j))
    throw InputError("cycle_escape requires m_ij = infinity");
  if (s.act(i, r) == r && s.act(j, r) == r) return std::nullopt;
  // Iterate on actual coordinate vectors: once the orbit leaves Sigma
  // the action table no longer applies, but intermediate images may
  // still re-enter only through the full (sigma_i sigma_j) step.
  const long bound = 4L * s.size();
  FVector v = s.roots[r];
  for (long n = 1; n <= bound; ++n) {
    v = apply_reflection(s.gram, j, v);
    v = apply_reflection(s.gram, i, v);
    if (!s.find(v)) return n;
  }
  throw InternalError(
      "cycle_escape exceeded 4|Sigma| iterations; arithmetic bug suspected");
}

}  // namespace coxgrowth
