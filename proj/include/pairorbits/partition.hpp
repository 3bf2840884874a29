#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace pairorbits {

struct PartPair {
    long part;
    long mult;
    friend auto operator<=>(const PartPair&, const PartPair&) = default;
};

// A partition in multiplicity form: parts strictly decreasing, every
// multiplicity positive. The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<PartPair> pairs);
    // From any list of positive parts, in any order.
    static Partition from_parts(const std::vector<long>& parts);

    const std::vector<PartPair>& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }
    long weight() const;
    long largest() const { return pairs_.empty() ? 0 : pairs_.front().part; }
    long multiplicity(long part) const;
    bool has_part(long part) const { return multiplicity(part) > 0; }
    std::vector<long> distinct_parts() const;
    // Parts expanded by multiplicity, weakly decreasing.
    std::vector<long> parts() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<PartPair> pairs_;
};

// Each multiplicity replaced by min(m_i, cap).
Partition cap_multiplicities(const Partition& lambda, long cap);

// Removes one copy of each listed part; throws InputError if a part is missing.
Partition remove_parts(const Partition& lambda, const std::vector<long>& parts);

// All partitions of n in reverse lexicographic order of their part lists.
std::vector<Partition> partitions_of(long n);

// "5,4^2,2,1"; the empty partition renders as "".
std::string to_string(const Partition& lambda);
// "(5, 4, 4, 2, 1)" as in printed tables.
std::string to_display_string(const Partition& lambda);
// Accepts "5,4,4,2,1", "5,4^2,2,1", optional surrounding parentheses and
// whitespace. Throws ParseError.
Partition parse_partition(std::string_view text);

}  // namespace pairorbits
