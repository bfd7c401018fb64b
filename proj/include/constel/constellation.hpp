#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace constel {

// A prime constellation candidate: a pattern of J gaps between J+1 points.
// Stored as the gap sequence; every gap is a positive even integer. The
// points are the prefix sums of the gaps, starting at 0.
class Constellation {
public:
    Constellation() = default;
    explicit Constellation(std::vector<int64_t> gaps);

    int64_t length() const { return static_cast<int64_t>(gaps_.size()); }  // J
    int64_t span() const { return span_; }                                 // sum of gaps
    const std::vector<int64_t>& gaps() const { return gaps_; }
    std::vector<int64_t> points() const;  // J+1 values, first is 0, last is span()

    Constellation reverse() const;

    // One-gap contractions and extensions. head_child drops the last gap,
    // tail_child the first; with s = 2 s' 2 these are [2 s'] and [s' 2].
    Constellation head_child() const;
    Constellation tail_child() const;
    Constellation extend_left(int64_t gap) const;
    Constellation extend_right(int64_t gap) const;

    bool operator==(const Constellation&) const = default;

    std::string str() const;  // gaps, space separated

private:
    std::vector<int64_t> gaps_;
    int64_t span_ = 0;
};

// Parse a gap list like "2 4 2" or "2,4,2".
Constellation parse_gap_list(const std::string& text);

}  // namespace constel
