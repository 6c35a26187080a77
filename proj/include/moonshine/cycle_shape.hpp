#pragma once

#include <string>
#include <utility>
#include <vector>

namespace moonshine {

// Multiset of cycle lengths with multiplicities, e.g. 1^4.2^4 on 12 points.
class CycleShape {
public:
    CycleShape() = default;
    explicit CycleShape(std::vector<std::pair<long, long>> parts);

    // Accepts "1^4.2^4", "1^4 2^4" and bare cycles like "4.8" or "12".
    static CycleShape parse(const std::string& text);

    const std::vector<std::pair<long, long>>& parts() const { return parts_; }
    long points() const;
    long order() const;  // lcm of cycle lengths
    long part_count() const;  // sum of multiplicities
    long multiplicity(long j) const;
    std::string str() const;  // canonical, exponent-sorted ascending

    // Union of the two multisets (a 12+12 -> 24 point concatenation).
    friend CycleShape concatenate(const CycleShape& a, const CycleShape& b);
    friend bool operator==(const CycleShape&, const CycleShape&) = default;

private:
    std::vector<std::pair<long, long>> parts_;  // (length, multiplicity), ascending
};

}  // namespace moonshine
