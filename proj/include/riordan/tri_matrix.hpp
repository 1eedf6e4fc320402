#pragma once

#include <initializer_list>
#include <sstream>
#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Exact lower-triangular matrix prefix: row n holds entries (n,0)..(n,n).
class TriMatrix {
public:
    TriMatrix() = default;

    explicit TriMatrix(std::vector<std::vector<Rat>> rows) : rows_(std::move(rows)) {
        for (size_t n = 0; n < rows_.size(); ++n)
            if (rows_[n].size() != n + 1)
                throw std::invalid_argument("TriMatrix: row " + std::to_string(n) +
                                            " must have " + std::to_string(n + 1) + " entries");
    }

    static TriMatrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
        std::vector<std::vector<Rat>> out;
        for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
        return TriMatrix(std::move(out));
    }

    int size() const { return static_cast<int>(rows_.size()); }

    // zero above the diagonal, by triangularity
    Rat entry(int n, int k) const {
        if (k > n) return 0;
        return rows_[static_cast<size_t>(n)][static_cast<size_t>(k)];
    }

    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

    std::vector<std::vector<Rat>>& rows() { return rows_; }

    bool operator==(const TriMatrix& other) const { return rows_ == other.rows_; }

private:
    std::vector<std::vector<Rat>> rows_;
};

inline std::string to_string(const TriMatrix& m) {
    std::ostringstream os;
    for (int n = 0; n < m.size(); ++n) {
        for (int k = 0; k <= n; ++k) {
            if (k) os << ' ';
            os << m.entry(n, k).str();
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace riordan
