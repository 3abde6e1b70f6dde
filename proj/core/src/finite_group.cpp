#include "ftatlas/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ftatlas/error.hpp"

namespace ftatlas {

namespace {

[[noreturn]] void invalid(const std::string& why) { throw Error(ErrorCode::kInvalidGroup, why); }

void check_associative(const std::vector<std::vector<Element>>& t) {
  const std::size_t n = t.size();
  auto check = [&](Element a, Element b, Element c) {
    if (t[t[a][b]][c] != t[a][t[b][c]])
      invalid("not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
              ")");
  };
  if (n <= 128) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  for (int i = 0; i < 200000; ++i) check(pick(rng), pick(rng), pick(rng));
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) invalid("empty Cayley table");
  for (const auto& row : table)
    if (row.size() != n) invalid("Cayley table is not square");
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = table[i][j];
      if (v >= n || seen[v]) invalid("row " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const Element v = table[j][i];
      if (seen[v]) invalid("column " + std::to_string(i) + " is not a permutation");
      seen[v] = 1;
    }
  }
  FiniteGroup g(std::move(table), std::move(name));
  const auto& t = g.table_;
  Element e = n;
  for (Element a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = t[a][x] == x && t[x][a] == x;
    if (ok) e = a;
  }
  if (e == n) invalid("no two-sided identity");
  g.identity_ = e;
  check_associative(t);
  g.inverse_.assign(n, n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (t[a][b] == e) g.inverse_[a] = b;
  for (Element a = 0; a < n; ++a)
    if (t[g.inverse_[a]][a] != e) invalid("left and right inverses differ at " + std::to_string(a));
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) invalid("cyclic group needs n >= 1");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return from_table(std::move(t), "Z/" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) invalid("dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  std::vector<std::vector<Element>> t(order, std::vector<Element>(order));
  // s^a r^k s^b r^l = s^(a+b) r^((-1)^b k + l)
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a = x / n, k = x % n, b = y / n, l = y % n;
      const std::size_t rot = ((b == 0 ? k : n - k) + l) % n;
      t[x][y] = ((a + b) % 2) * n + rot;
    }
  return from_table(std::move(t), "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t k) {
  if (k == 0 || k > 5) invalid("symmetric groups are bundled for 1 <= k <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t n = perms.size();
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  std::vector<int> comp(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) comp[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      t[a][b] = index_of(comp);
    }
  return from_table(std::move(t), "S" + std::to_string(k));
}

FiniteGroup FiniteGroup::heisenberg_mod(std::size_t p) {
  if (p != 2 && p != 3) invalid("Heisenberg group mod p is bundled for p in {2, 3}");
  const std::size_t n = p * p * p;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
      const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      t[x][y] = ((a + a2) % p) * p * p + ((b + b2) % p) * p + (c + c2 + a * b2) % p;
    }
  return from_table(std::move(t), "Heis(Z/" + std::to_string(p) + ")");
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::conjugacy_classes() const {
  const std::size_t n = order();
  std::vector<char> done(n);
  std::vector<std::vector<Element>> classes;
  for (Element a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::vector<Element> cls;
    for (Element x = 0; x < n; ++x) {
      const Element c = mul(mul(x, a), inverse(x));
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::size_t Subgroup::local_index(Element parent) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), parent);
  if (it == elements.end() || *it != parent) return elements.size();
  return static_cast<std::size_t>(it - elements.begin());
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<Element> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) throw Error(ErrorCode::kNotASubgroup, "empty subset");
  if (subset.back() >= g.order()) throw Error(ErrorCode::kNotASubgroup, "element index out of range");
  if (!std::binary_search(subset.begin(), subset.end(), g.identity()))
    throw Error(ErrorCode::kNotASubgroup, "subset misses the identity");
  const std::size_t m = subset.size();
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Element prod = g.mul(subset[i], subset[j]);
      const auto it = std::lower_bound(subset.begin(), subset.end(), prod);
      if (it == subset.end() || *it != prod)
        throw Error(ErrorCode::kNotASubgroup, "subset not closed: " + std::to_string(subset[i]) + " * " +
                                                  std::to_string(subset[j]) + " = " + std::to_string(prod));
      t[i][j] = static_cast<Element>(it - subset.begin());
    }
  // Closed finite subsets containing e are subgroups, so this cannot throw.
  FiniteGroup h = FiniteGroup::from_table(std::move(t), g.name() + " subgroup");
  return Subgroup{std::move(subset), std::move(h)};
}

FiniteGroup group_family(const std::string& family, std::size_t parameter) {
  if (family == "cyclic") return FiniteGroup::cyclic(parameter);
  if (family == "dihedral") return FiniteGroup::dihedral(parameter);
  if (family == "symmetric") return FiniteGroup::symmetric(parameter);
  if (family == "heisenberg_mod") return FiniteGroup::heisenberg_mod(parameter);
  throw Error(ErrorCode::kUnknownName, "unknown group family '" + family + "'");
}

}  // namespace ftatlas
