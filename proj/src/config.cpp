#include "ccw/config.hpp"

#include <algorithm>
#include <set>

#include "ccw/errors.hpp"

namespace ccw {

void validate(const Configuration& c) {
    if (c.x.length() != c.y.length())
        throw MalformedRanks("configuration factors have different lengths");
    validate(c.x);
    validate(c.y);
}

std::pair<int, int> counts(const Configuration& c) {
    return {distinct_count(c.x), distinct_count(c.y)};
}

Configuration canonical(const Configuration& c) {
    return {canonicalize(c.x), canonicalize(c.y)};
}

Configuration permuted(const Configuration& c, const std::vector<int>& perm) {
    const std::size_t t = c.length();
    if (perm.size() != t) throw Error("permuted: permutation length mismatch");
    Configuration out;
    out.x.ranks.resize(t);
    out.y.ranks.resize(t);
    for (std::size_t i = 0; i < t; ++i) {
        const auto j = static_cast<std::size_t>(perm[i]);
        out.x.ranks[i] = c.x.ranks[j];
        out.y.ranks[i] = c.y.ranks[j];
    }
    return canonical(out);
}

namespace {

CyclicArrangement reflect(const CyclicArrangement& a) {
    const int m = distinct_count(a);
    CyclicArrangement out = a;
    for (int& r : out.ranks) r = (m - r) % m;
    return canonicalize(out);
}

// Relabel the given ranks to contiguous values 0..m'-1, preserving order.
std::vector<int> compress(const std::vector<int>& ranks) {
    std::set<int> values(ranks.begin(), ranks.end());
    std::vector<int> out;
    out.reserve(ranks.size());
    for (int r : ranks) {
        const auto pos = std::distance(values.begin(), values.find(r));
        out.push_back(static_cast<int>(pos));
    }
    return out;
}

}  // namespace

Configuration reflected_x(const Configuration& c) { return {reflect(c.x), c.y}; }

Configuration reflected_y(const Configuration& c) { return {c.x, reflect(c.y)}; }

Configuration swapped(const Configuration& c) { return {c.y, c.x}; }

Configuration subconfig(const Configuration& c, const std::vector<int>& indices) {
    std::vector<int> xr, yr;
    xr.reserve(indices.size());
    yr.reserve(indices.size());
    for (int i : indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= c.length())
            throw Error("subconfig: index out of range");
        xr.push_back(c.x.ranks[static_cast<std::size_t>(i)]);
        yr.push_back(c.y.ranks[static_cast<std::size_t>(i)]);
    }
    Configuration out{compress(xr), compress(yr)};
    return canonical(out);
}

Configuration face(const Configuration& c, int i) {
    std::vector<int> keep;
    keep.reserve(c.length() - 1);
    for (std::size_t j = 0; j < c.length(); ++j)
        if (static_cast<int>(j) != i) keep.push_back(static_cast<int>(j));
    return subconfig(c, keep);
}

bool lemma_crossed_chords_applies(const Configuration& c) {
    if (c.length() != 4) throw Error("lemma_crossed_chords_applies: length must be 4");
    if (distinct_count(c.x) < 4 || distinct_count(c.y) < 4) return false;
    const bool xc = interleaves(c.x, {0, 2}, {1, 3});
    const bool yc = interleaves(c.y, {0, 2}, {1, 3});
    return xc != yc;
}

}  // namespace ccw
