#pragma once

#include <span>
#include <string>
#include <vector>

#include "trislice/subset.hpp"

namespace trislice {

// An ordered family of distinct subsets over one shared ground size.
class SetFamily {
 public:
  explicit SetFamily(int n) : n_(GroundSize(n).value()) {}
  SetFamily(int n, std::vector<Subset> members);
  static SetFamily from_elements(int n, const std::vector<std::vector<int>>& members);

  int ground() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  const Subset& member(int i) const { return members_.at(static_cast<std::size_t>(i)); }
  std::span<const Subset> members() const noexcept { return members_; }

  bool contains(const Subset& s) const;
  // Appends a member; duplicates are a duplication error.
  void push_back(Subset s);
  // Copy with member i replaced; a collision with another member is a duplication error.
  SetFamily with_replaced(int i, const Subset& replacement) const;

  bool is_lex_sorted() const;
  SetFamily sorted_lex() const;
  // Ascending by member size; ties keep input order.
  SetFamily sorted_by_size() const;
  // Permutation applied by sorted_by_size: entry r is the input index placed at row r.
  std::vector<int> size_order_permutation() const;

  // Canonical JSON line: {"n":4,"sets":[[1,2],[1,3]]}.
  std::string to_json_line() const;
  // Strict parse of the canonical form (sets sorted ascending, members distinct).
  static SetFamily from_json_line(const std::string& line);

  bool operator==(const SetFamily& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }

 private:
  int n_;
  std::vector<Subset> members_;
};

// One family per line. Parse errors carry 1-based line numbers.
std::vector<SetFamily> read_family_file(const std::string& path);
void write_family_file(const std::string& path, std::span<const SetFamily> families);

}  // namespace trislice
