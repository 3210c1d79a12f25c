#include "ccw/circle.hpp"

#include <algorithm>
#include <sstream>

#include "ccw/errors.hpp"

namespace ccw {

int distinct_count(const CyclicArrangement& a) {
    int m = 0;
    for (int r : a.ranks) m = std::max(m, r + 1);
    return m;
}

bool ranks_contiguous(const std::vector<int>& ranks) {
    if (ranks.empty()) return false;
    int m = 0;
    for (int r : ranks) {
        if (r < 0) return false;
        m = std::max(m, r + 1);
    }
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int r : ranks) seen[static_cast<std::size_t>(r)] = true;
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void validate(const CyclicArrangement& a) {
    if (!ranks_contiguous(a.ranks)) {
        std::ostringstream os;
        os << "ranks are not a contiguous relabeling 0..m-1: [";
        for (std::size_t i = 0; i < a.ranks.size(); ++i)
            os << (i ? "," : "") << a.ranks[i];
        os << "]";
        throw MalformedRanks(os.str());
    }
}

CyclicArrangement canonicalize(const CyclicArrangement& a) {
    validate(a);
    const int m = distinct_count(a);
    const int shift = a.ranks[0];
    CyclicArrangement out = a;
    for (int& r : out.ranks) r = (r - shift + m) % m;
    return out;
}

int orientation(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    const bool ccw = (a < b && b < c) || (b < c && c < a) || (c < a && a < b);
    return ccw ? +1 : -1;
}

bool interleaves(const CyclicArrangement& arr,
                 std::pair<int, int> pairA,
                 std::pair<int, int> pairB) {
    const auto rank_at = [&arr](int i) {
        if (i < 0 || static_cast<std::size_t>(i) >= arr.ranks.size())
            throw Error("interleaves: index out of range");
        return arr.ranks[static_cast<std::size_t>(i)];
    };
    const int a = rank_at(pairA.first), b = rank_at(pairA.second);
    const int c = rank_at(pairB.first), d = rank_at(pairB.second);
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw DegeneratePoints("interleaves: the four points must be pairwise distinct");
    // The chords cross iff c and d lie on opposite sides of the chord (a,b),
    // i.e. the cyclic orientations of (a,c,b) and (a,d,b) differ.
    return orientation(a, c, b) * orientation(a, d, b) == -1;
}

}  // namespace ccw
