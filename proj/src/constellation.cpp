#include "constel/constellation.hpp"

#include <sstream>

#include "constel/errors.hpp"

namespace constel {

Constellation::Constellation(std::vector<int64_t> gaps) : gaps_(std::move(gaps)) {
    for (int64_t g : gaps_) {
        if (g <= 0 || g % 2 != 0)
            throw input_error("gap " + std::to_string(g) + " is not a positive even integer");
        span_ += g;
    }
}

std::vector<int64_t> Constellation::points() const {
    std::vector<int64_t> pts;
    pts.reserve(gaps_.size() + 1);
    int64_t x = 0;
    pts.push_back(0);
    for (int64_t g : gaps_) {
        x += g;
        pts.push_back(x);
    }
    return pts;
}

Constellation Constellation::reverse() const {
    return Constellation({gaps_.rbegin(), gaps_.rend()});
}

Constellation Constellation::head_child() const {
    if (gaps_.empty()) throw input_error("head_child of an empty pattern");
    return Constellation({gaps_.begin(), gaps_.end() - 1});
}

Constellation Constellation::tail_child() const {
    if (gaps_.empty()) throw input_error("tail_child of an empty pattern");
    return Constellation({gaps_.begin() + 1, gaps_.end()});
}

Constellation Constellation::extend_left(int64_t gap) const {
    std::vector<int64_t> g;
    g.reserve(gaps_.size() + 1);
    g.push_back(gap);
    g.insert(g.end(), gaps_.begin(), gaps_.end());
    return Constellation(std::move(g));
}

Constellation Constellation::extend_right(int64_t gap) const {
    std::vector<int64_t> g = gaps_;
    g.push_back(gap);
    return Constellation(std::move(g));
}

std::string Constellation::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < gaps_.size(); ++i) {
        if (i) os << ' ';
        os << gaps_[i];
    }
    return os.str();
}

Constellation parse_gap_list(const std::string& text) {
    std::string t = text;
    for (char& c : t)
        if (c == ',') c = ' ';
    std::istringstream is(t);
    std::vector<int64_t> gaps;
    int64_t g;
    while (is >> g) gaps.push_back(g);
    if (!is.eof()) throw input_error("bad gap list: " + text);
    return Constellation(std::move(gaps));
}

}  // namespace constel
