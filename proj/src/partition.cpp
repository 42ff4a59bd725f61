#include "qct/partition.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qct {

namespace {

void validate(const std::vector<int>& parts) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    validate(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate(parts_);
}

int64_t Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), int64_t{0});
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ')';
    return os.str();
}

bool dominance_leq(const Partition& lam, const Partition& mu) {
    if (lam.size() != mu.size())
        throw std::invalid_argument("dominance_leq: sizes differ");
    int64_t sl = 0, sm = 0;
    const size_t n = std::max(lam.parts().size(), mu.parts().size());
    for (size_t i = 0; i < n; ++i) {
        sl += i < lam.parts().size() ? lam.parts()[i] : 0;
        sm += i < mu.parts().size() ? mu.parts()[i] : 0;
        if (sl > sm) return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: d >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    // depth-first with a cap on the next part
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

int64_t z_lambda(const Partition& lam) {
    std::map<int, int> mult;
    for (int p : lam.parts()) ++mult[p];
    int64_t z = 1;
    for (auto [part, m] : mult) {
        for (int i = 0; i < m; ++i) z *= part;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

}  // namespace qct
