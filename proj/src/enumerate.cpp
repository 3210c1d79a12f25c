#include "ccw/enumerate.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "ccw/errors.hpp"

namespace ccw {

namespace {

void check_length(int t) {
    if (t < 1 || t > kMaxTupleLength)
        throw SizeLimit("tuple length " + std::to_string(t) + " outside supported range 1.." +
                        std::to_string(kMaxTupleLength));
}

std::vector<CyclicArrangement> build_arrangements(int t) {
    std::vector<CyclicArrangement> out;
    // Odometer over all vectors in {0..t-1}^t with leading 0, filtered for
    // contiguity; each canonical arrangement appears exactly once.  At
    // t = 6 this scans 6^5 candidates; negligible.
    std::vector<int> v(static_cast<std::size_t>(t), 0);
    while (true) {
        if (ranks_contiguous(v)) out.emplace_back(v);
        int i = t - 1;
        while (i >= 1 && v[static_cast<std::size_t>(i)] == t - 1) {
            v[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i == 0) break;  // leading rank stays 0: canonical form
        ++v[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct Tables {
    std::array<std::vector<CyclicArrangement>, kMaxTupleLength + 1> types;
    // Packed-key lookup: key = sum ranks[i] * 6^i < 6^6; value = index into
    // types[t], or -1.  One table per length.
    std::array<std::vector<std::int32_t>, kMaxTupleLength + 1> index_of_key;
    std::array<bool, kMaxTupleLength + 1> built{};
    std::mutex mu;
};

Tables& tables() {
    static Tables t;
    return t;
}

constexpr int kKeySpace = 6 * 6 * 6 * 6 * 6 * 6;  // 6^6

int packed_key(const std::vector<int>& ranks) {
    int key = 0, w = 1;
    for (int r : ranks) {
        key += r * w;
        w *= 6;
    }
    return key;
}

void ensure_built(int t) {
    check_length(t);
    Tables& tb = tables();
    std::lock_guard<std::mutex> lock(tb.mu);
    if (tb.built[static_cast<std::size_t>(t)]) return;
    auto types = build_arrangements(t);
    std::vector<std::int32_t> idx(kKeySpace, -1);
    for (std::size_t i = 0; i < types.size(); ++i)
        idx[static_cast<std::size_t>(packed_key(types[i].ranks))] = static_cast<std::int32_t>(i);
    tb.types[static_cast<std::size_t>(t)] = std::move(types);
    tb.index_of_key[static_cast<std::size_t>(t)] = std::move(idx);
    tb.built[static_cast<std::size_t>(t)] = true;
}

std::int32_t arrangement_index(int t, const std::vector<int>& ranks) {
    const std::int32_t i =
        tables().index_of_key[static_cast<std::size_t>(t)][static_cast<std::size_t>(
            packed_key(ranks))];
    if (i < 0) throw Error("arrangement_index: not a canonical arrangement");
    return i;
}

}  // namespace

const std::vector<CyclicArrangement>& arrangement_types(int t) {
    ensure_built(t);
    return tables().types[static_cast<std::size_t>(t)];
}

std::int64_t configuration_count(int t) {
    const auto n = static_cast<std::int64_t>(arrangement_types(t).size());
    return n * n;
}

std::int64_t configuration_index(const Configuration& c) {
    const int t = static_cast<int>(c.length());
    ensure_built(t);
    const auto n = static_cast<std::int64_t>(tables().types[static_cast<std::size_t>(t)].size());
    return static_cast<std::int64_t>(arrangement_index(t, c.x.ranks)) * n +
           arrangement_index(t, c.y.ranks);
}

Configuration configuration_at(int t, std::int64_t index) {
    const auto& types = arrangement_types(t);
    const auto n = static_cast<std::int64_t>(types.size());
    if (index < 0 || index >= n * n) throw Error("configuration_at: index out of range");
    return {types[static_cast<std::size_t>(index / n)],
            types[static_cast<std::size_t>(index % n)]};
}

void for_each_configuration(int t, const std::function<void(const Configuration&)>& fn) {
    const auto& types = arrangement_types(t);
    Configuration c;
    for (const auto& xa : types) {
        c.x = xa;
        for (const auto& ya : types) {
            c.y = ya;
            fn(c);
        }
    }
}

void for_each_configuration(int t,
                            const std::function<void(std::int64_t, const Configuration&)>& fn) {
    std::int64_t index = 0;
    for_each_configuration(t, [&](const Configuration& c) { fn(index++, c); });
}

}  // namespace ccw
