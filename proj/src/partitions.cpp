#include "qblowup/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qb {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(parts_[0], 0);
    for (int col = 1; col <= parts_[0]; ++col) {
        int n = 0;
        for (int p : parts_)
            if (p >= col) ++n;
        t[col - 1] = n;
    }
    return Partition(std::move(t));
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(weight_));
    for (int i = 1; i <= num_parts(); ++i)
        for (int j = 1; j <= part(i); ++j) out.push_back(Cell{i, j});
    return out;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

int arm_length(const Partition& la, const Cell& s) { return la.part(s.row) - s.col; }

int leg_length(const Partition& la, const Cell& s) {
    // lambda'_col - row without materializing the transpose
    int n = 0;
    for (int p : la.parts())
        if (p >= s.col) ++n;
    return n - s.row;
}

int hook_length(const Partition& la, const Cell& s) {
    return arm_length(la, s) + leg_length(la, s) + 1;
}

BigInt dim_partition(const Partition& la) {
    BigInt num = 1;
    for (std::int64_t i = 2; i <= la.weight(); ++i) num *= i;
    BigInt hooks = 1;
    for (const Cell& s : la.cells()) hooks *= hook_length(la, s);
    BigInt dim = num / hooks;
    if (dim * hooks != num) throw std::logic_error("hook product does not divide |la|!");
    return dim;
}

namespace {
void enumerate(int remaining, int maxpart, std::vector<int>& prefix,
               std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(maxpart, remaining); p >= 1; --p) {
        prefix.push_back(p);
        enumerate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}
}  // namespace

std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate(k, k == 0 ? 1 : k, prefix, out);
    return out;
}

std::map<int, std::vector<Partition>> partitions_up_to(int kmax) {
    if (kmax < 0) throw std::invalid_argument("partitions_up_to: negative bound");
    std::map<int, std::vector<Partition>> out;
    for (int k = 0; k <= kmax; ++k) out[k] = partitions_of(k);
    return out;
}

}  // namespace qb
