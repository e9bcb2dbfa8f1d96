#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bruhat/bitset.hpp"
#include "bruhat/quotient.hpp"

namespace bruhat {

// Finite graded poset with a unique minimum of rank 0. Stores ranks and the
// Hasse diagram; the full order relation is materialised as bitset rows when
// the size permits and walked on demand otherwise.
class PointedPoset {
 public:
  static constexpr int kMaterializeLimit = 1 << 15;

  PointedPoset() = default;
  // Validates gradedness (covers step rank by one), pointedness, and that
  // every positive-rank element covers something.
  PointedPoset(std::vector<int> ranks, std::vector<std::pair<int, int>> covers);

  int size() const { return static_cast<int>(ranks_.size()); }
  int rank(int v) const { return ranks_[v]; }
  int length() const { return length_; }
  const std::vector<int>& ranks() const { return ranks_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& up(int v) const { return up_[v]; }
  const std::vector<int>& down(int v) const { return down_[v]; }
  const std::vector<int>& elements_of_rank(int r) const;
  std::vector<int> rank_sizes() const;

  bool leq(int a, int b) const;
  bool materialized() const { return !below_.empty(); }
  const Bitset& below(int v) const { return below_[v]; }

  bool operator==(const PointedPoset& o) const {
    return ranks_ == o.ranks_ && covers_ == o.covers_;
  }

 private:
  std::vector<int> ranks_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::vector<int>> by_rank_;
  std::vector<Bitset> below_;
  int length_ = 0;
};

// Bruhat order on the parabolic quotient: reflection moves give the order
// relation, covers are its rank-adjacent pairs.
PointedPoset bruhat_order(const QuotientTable& q);

// Abstract grading of a relation list (pairs a < b, any transitive
// generators). Throws NotGradable when the input is not a pointed graded
// partial order.
PointedPoset grade_abstract(int n, const std::vector<std::pair<int, int>>& relations);

std::string poset_to_json(const PointedPoset& p);
PointedPoset poset_from_json(const std::string& text);
std::string poset_to_dot(const PointedPoset& p);

}  // namespace bruhat
