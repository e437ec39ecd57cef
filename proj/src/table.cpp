#include "gpa/table.hpp"

#include <random>
#include <set>

#include "gpa/errors.hpp"

namespace gpa {

namespace {

void check_associativity(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
            throw InputError("group table is not associative at (" +
                             std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + ")");
    return;
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < 10000; ++i) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
      throw InputError("group table is not associative at (" +
                       std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + ")");
  }
}

}  // namespace

FiniteGroupTable FiniteGroupTable::from_data(std::vector<std::string> elements,
                                             std::vector<std::vector<int>> mul) {
  const int n = static_cast<int>(elements.size());
  if (n < 1) throw InputError("group table must have at least one element");
  if (static_cast<int>(mul.size()) != n)
    throw InputError("group table has " + std::to_string(mul.size()) +
                     " rows for " + std::to_string(n) + " elements");
  std::set<std::string> seen;
  for (const auto& name : elements)
    if (!seen.insert(name).second)
      throw InputError("duplicate element name '" + name + "' in group table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(mul[i].size()) != n)
      throw InputError("group table row " + std::to_string(i) +
                       " has wrong length");
    for (int j = 0; j < n; ++j)
      if (mul[i][j] < 0 || mul[i][j] >= n)
        throw InputError("group table entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") out of range");
  }
  for (int i = 0; i < n; ++i) {
    if (mul[0][i] != i || mul[i][0] != i)
      throw InputError("element 0 of a group table must be the identity");
  }
  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul[a][b] == 0 && mul[b][a] == 0) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] < 0)
      throw InputError("element " + std::to_string(a) +
                       " has no two-sided inverse");
  }
  check_associativity(mul);

  FiniteGroupTable t;
  t.elements_ = std::move(elements);
  t.mul_ = std::move(mul);
  t.inverse_ = std::move(inverse);
  return t;
}

FiniteGroupTable FiniteGroupTable::cyclic(int n) {
  std::vector<std::string> elements;
  elements.reserve(n);
  elements.emplace_back("e");
  for (int i = 1; i < n; ++i) elements.push_back("g" + std::to_string(i));
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return from_data(std::move(elements), std::move(mul));
}

}  // namespace gpa
