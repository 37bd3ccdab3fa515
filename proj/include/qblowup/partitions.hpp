#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qblowup/rational.hpp"

namespace qb {

// A cell (row, col) of a Young diagram, 1-based, row i is the i-th part.
struct Cell {
    int row = 1;
    int col = 1;
};

// Partition with weakly decreasing positive parts; no trailing zeros stored.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const {  // 1-based, 0 beyond the last row
        return (i >= 1 && i <= num_parts()) ? parts_[i - 1] : 0;
    }
    std::int64_t weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    bool contains(const Cell& s) const { return s.col <= part(s.row); }
    Partition transpose() const;

    std::vector<Cell> cells() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::string str() const;

  private:
    std::vector<int> parts_;
    std::int64_t weight_ = 0;
};

// Arm a_lambda(s) = lambda_row - col and leg l_lambda(s) = lambda'_col - row.
// s need not lie in lambda; cross-diagram lengths may be negative and are
// returned as-is (the combinatorial block needs them).
int arm_length(const Partition& la, const Cell& s);
int leg_length(const Partition& la, const Cell& s);

// Hook length a(s) + l(s) + 1 for s inside la.
int hook_length(const Partition& la, const Cell& s);

// Number of standard Young tableaux of shape la: |la|! / prod of hooks.
BigInt dim_partition(const Partition& la);

// All partitions of k for 0 <= k <= kmax, in reverse lexicographic order
// (largest first part first), so enumeration order and cache keys are
// reproducible.
std::map<int, std::vector<Partition>> partitions_up_to(int kmax);

// Convenience: the list for a single weight, same canonical order.
std::vector<Partition> partitions_of(int k);

}  // namespace qb
