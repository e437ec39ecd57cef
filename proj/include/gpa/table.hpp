#ifndef GPA_TABLE_HPP
#define GPA_TABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gpa {

// Multiplication table of a concrete finite group. Index 0 is the identity.
// Construction validates the group axioms: identity behavior, two-sided
// inverses, and associativity (exhaustive up to order 64, random sampling of
// at least 10^4 triples above that).
class FiniteGroupTable {
 public:
  FiniteGroupTable() = default;

  // Throws InputError if the data is not a group table.
  static FiniteGroupTable from_data(std::vector<std::string> elements,
                                    std::vector<std::vector<int>> mul);

  static FiniteGroupTable cyclic(int n);

  int size() const { return static_cast<int>(elements_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::string& element_name(int i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& mul_table() const { return mul_; }

  bool operator==(const FiniteGroupTable& other) const {
    return elements_ == other.elements_ && mul_ == other.mul_;
  }

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inverse_;
};

}  // namespace gpa

#endif
