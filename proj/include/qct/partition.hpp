#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qct {

/* weakly decreasing list of positive integers */
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    int64_t size() const;
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // "(2,1)", "()" for empty

  private:
    std::vector<int> parts_;
};

/* prefix sums of lam never exceed those of mu; sizes must agree */
bool dominance_leq(const Partition& lam, const Partition& mu);

/* all partitions of d >= 0, in decreasing lex order; d = 0 gives {()} */
std::vector<Partition> partitions_of(int d);

/* order of the stabilizer: prod_i i^{m_i} m_i! for multiplicities m_i */
int64_t z_lambda(const Partition& lam);

}  // namespace qct
