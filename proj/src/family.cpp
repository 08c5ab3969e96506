#include "trislice/family.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <unordered_set>

#include <json.hpp>

namespace trislice {

namespace {

void check_distinct(const std::vector<Subset>& members) {
  std::unordered_set<Subset, SubsetHash> seen;
  seen.reserve(members.size());
  for (const Subset& m : members) {
    if (!seen.insert(m).second)
      fail(ErrorKind::Duplication, "duplicate family member " + m.to_string());
  }
}

}  // namespace

SetFamily::SetFamily(int n, std::vector<Subset> members)
    : n_(GroundSize(n).value()), members_(std::move(members)) {
  for (const Subset& m : members_) {
    if (m.ground() != n_)
      fail(ErrorKind::Context, "family member " + m.to_string() +
                                   " has ground size " + std::to_string(m.ground()) +
                                   ", family declares " + std::to_string(n_));
  }
  check_distinct(members_);
}

SetFamily SetFamily::from_elements(int n, const std::vector<std::vector<int>>& members) {
  std::vector<Subset> subsets;
  subsets.reserve(members.size());
  for (const auto& elems : members) subsets.push_back(Subset::from_elements(n, elems));
  return SetFamily(n, std::move(subsets));
}

bool SetFamily::contains(const Subset& s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

void SetFamily::push_back(Subset s) {
  if (s.ground() != n_) fail(ErrorKind::Context, "push_back: mismatched ground size");
  if (contains(s)) fail(ErrorKind::Duplication, "duplicate family member " + s.to_string());
  members_.push_back(std::move(s));
}

SetFamily SetFamily::with_replaced(int i, const Subset& replacement) const {
  if (i < 0 || i >= size())
    fail(ErrorKind::Parameter, "member index " + std::to_string(i) + " out of range");
  if (replacement.ground() != n_)
    fail(ErrorKind::Context, "with_replaced: mismatched ground size");
  for (int j = 0; j < size(); ++j) {
    if (j != i && members_[static_cast<std::size_t>(j)] == replacement)
      fail(ErrorKind::Duplication,
           "replacement " + replacement.to_string() + " collides with member " +
               std::to_string(j + 1));
  }
  SetFamily out = *this;
  out.members_[static_cast<std::size_t>(i)] = replacement;
  return out;
}

bool SetFamily::is_lex_sorted() const {
  for (int i = 0; i + 1 < size(); ++i)
    if (lex_compare(members_[static_cast<std::size_t>(i)],
                    members_[static_cast<std::size_t>(i + 1)]) == LexOrder::Greater)
      return false;
  return true;
}

SetFamily SetFamily::sorted_lex() const {
  SetFamily out = *this;
  std::sort(out.members_.begin(), out.members_.end());
  return out;
}

std::vector<int> SetFamily::size_order_permutation() const {
  std::vector<int> order(static_cast<std::size_t>(size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return members_[static_cast<std::size_t>(a)].size() <
           members_[static_cast<std::size_t>(b)].size();
  });
  return order;
}

SetFamily SetFamily::sorted_by_size() const {
  std::vector<Subset> out;
  out.reserve(members_.size());
  for (int idx : size_order_permutation()) out.push_back(members_[static_cast<std::size_t>(idx)]);
  return SetFamily(n_, std::move(out));
}

std::string SetFamily::to_json_line() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  auto sets = nlohmann::ordered_json::array();
  for (const Subset& m : members_) sets.push_back(m.elements());
  j["sets"] = std::move(sets);
  return j.dump();
}

SetFamily SetFamily::from_json_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("family line is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
    fail(ErrorKind::Parse, "family line must be an object with fields \"n\" and \"sets\"");
  if (!j["n"].is_number_integer())
    fail(ErrorKind::Parse, "family field \"n\" must be an integer");
  int n = j["n"].get<int>();
  if (!j["sets"].is_array()) fail(ErrorKind::Parse, "family field \"sets\" must be an array");
  std::vector<std::vector<int>> members;
  for (const auto& arr : j["sets"]) {
    if (!arr.is_array()) fail(ErrorKind::Parse, "every set must be an array of integers");
    std::vector<int> elems;
    for (const auto& v : arr) {
      if (!v.is_number_integer()) fail(ErrorKind::Parse, "set elements must be integers");
      elems.push_back(v.get<int>());
    }
    for (std::size_t i = 1; i < elems.size(); ++i)
      if (elems[i - 1] >= elems[i])
        fail(ErrorKind::Parse, "set elements must be sorted strictly ascending");
    members.push_back(std::move(elems));
  }
  return SetFamily::from_elements(n, members);
}

std::vector<SetFamily> read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open family file " + path);
  std::vector<SetFamily> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(SetFamily::from_json_line(line));
    } catch (const Error& e) {
      fail(e.kind(), path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_family_file(const std::string& path, std::span<const SetFamily> families) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Io, "cannot write family file " + path);
  for (const SetFamily& f : families) out << f.to_json_line() << '\n';
}

}  // namespace trislice
