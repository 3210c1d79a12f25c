#include "ccw/orbits.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "ccw/enumerate.hpp"
#include "ccw/errors.hpp"

namespace ccw {

namespace {

// Fast path over raw rank buffers: all generator applications below keep the
// value multiset of a factor intact (transposition) or replace it by the
// reflected one (reflection), so contiguity is preserved and canonicalizing
// is a single rotation by the leading rank.

int packed_canonical_key(const int* r, int t, int m) {
    const int shift = r[0];
    int key = 0, w = 1;
    for (int i = 0; i < t; ++i) {
        key += ((r[i] - shift + m) % m) * w;
        w *= 6;
    }
    return key;
}

struct FactorOps {
    // index_of_key for this tuple length (borrowed from the enumeration).
    const std::vector<CyclicArrangement>* types;
    std::vector<std::int32_t> key_to_index;
    std::vector<std::int32_t> transposed;  // [k * n + i]: swap ranks k,k+1
    std::vector<std::int32_t> reflected;   // [i]: r -> (m - r) mod m
    int t = 0;

    explicit FactorOps(int t_in) : t(t_in) {
        types = &arrangement_types(t);
        const auto n = static_cast<std::int32_t>(types->size());
        key_to_index.assign(6 * 6 * 6 * 6 * 6 * 6, -1);
        for (std::int32_t i = 0; i < n; ++i) {
            int key = 0, w = 1;
            for (int r : (*types)[static_cast<std::size_t>(i)].ranks) {
                key += r * w;
                w *= 6;
            }
            key_to_index[static_cast<std::size_t>(key)] = i;
        }
        transposed.assign(static_cast<std::size_t>((t > 1 ? t - 1 : 0)) * n, -1);
        reflected.assign(static_cast<std::size_t>(n), -1);
        int buf[6];
        for (std::int32_t i = 0; i < n; ++i) {
            const auto& ranks = (*types)[static_cast<std::size_t>(i)].ranks;
            const int m = distinct_count((*types)[static_cast<std::size_t>(i)]);
            for (int k = 0; k + 1 < t; ++k) {
                for (int j = 0; j < t; ++j) buf[j] = ranks[static_cast<std::size_t>(j)];
                std::swap(buf[k], buf[k + 1]);
                transposed[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(i)] =
                    key_to_index[static_cast<std::size_t>(packed_canonical_key(buf, t, m))];
            }
            for (int j = 0; j < t; ++j) buf[j] = (m - ranks[static_cast<std::size_t>(j)]) % m;
            reflected[static_cast<std::size_t>(i)] =
                key_to_index[static_cast<std::size_t>(packed_canonical_key(buf, t, m))];
        }
    }
};

std::unique_ptr<OrbitTable> build_orbit_table(int t, Mode mode) {
    auto out = std::make_unique<OrbitTable>();
    out->t = t;
    out->mode = mode;

    const FactorOps ops(t);
    const auto n = static_cast<std::int64_t>(ops.types->size());
    const std::int64_t total = n * n;
    out->orbit_of.assign(static_cast<std::size_t>(total), -1);
    out->sign_of.assign(static_cast<std::size_t>(total), 0);

    // Generators: adjacent coordinate transpositions (sign -1); in twisted
    // mode additionally the per-factor reflections (sign -1) and the factor
    // swap (sign +1).  Any sign conflict along a BFS edge marks the orbit
    // forced-zero: some closed symmetry path then fixes a member with net
    // sign -1, and conversely every closed path is a sum of edge-checked
    // fundamental cycles.
    const int ntrans = t - 1;
    const bool twisted = mode == Mode::HTwisted;

    std::vector<std::int64_t> queue;
    for (std::int64_t start = 0; start < total; ++start) {
        if (out->orbit_of[static_cast<std::size_t>(start)] != -1) continue;
        const auto orbit_id = static_cast<std::int32_t>(out->orbits.size());
        bool forced = false;
        std::int32_t size = 0;
        queue.clear();
        queue.push_back(start);
        out->orbit_of[static_cast<std::size_t>(start)] = orbit_id;
        out->sign_of[static_cast<std::size_t>(start)] = 1;
        const auto visit = [&](std::int64_t next, int sign_edge, std::int8_t sign_here) {
            auto& slot = out->orbit_of[static_cast<std::size_t>(next)];
            const auto expected = static_cast<std::int8_t>(sign_edge * sign_here);
            if (slot == -1) {
                slot = orbit_id;
                out->sign_of[static_cast<std::size_t>(next)] = expected;
                queue.push_back(next);
            } else if (out->sign_of[static_cast<std::size_t>(next)] != expected) {
                forced = true;
            }
        };
        while (!queue.empty()) {
            const std::int64_t cur = queue.back();
            queue.pop_back();
            ++size;
            const auto ix = static_cast<std::int32_t>(cur / n);
            const auto iy = static_cast<std::int32_t>(cur % n);
            const std::int8_t s = out->sign_of[static_cast<std::size_t>(cur)];
            for (int k = 0; k < ntrans; ++k) {
                const std::int32_t jx =
                    ops.transposed[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(ix)];
                const std::int32_t jy =
                    ops.transposed[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(iy)];
                visit(static_cast<std::int64_t>(jx) * n + jy, -1, s);
            }
            if (twisted) {
                visit(static_cast<std::int64_t>(ops.reflected[static_cast<std::size_t>(ix)]) * n +
                          iy,
                      -1, s);
                visit(static_cast<std::int64_t>(ix) * n +
                          ops.reflected[static_cast<std::size_t>(iy)],
                      -1, s);
                visit(static_cast<std::int64_t>(iy) * n + ix, +1, s);
            }
        }
        out->orbits.push_back(OrbitClass{start, size, forced});
    }

    out->basis_position.assign(out->orbits.size(), -1);
    for (std::size_t i = 0; i < out->orbits.size(); ++i) {
        if (!out->orbits[i].forced_zero) {
            out->basis_position[i] = static_cast<std::int32_t>(out->basis.size());
            out->basis.push_back(static_cast<std::int32_t>(i));
        }
    }
    return out;
}

}  // namespace

const OrbitTable& orbit_table(int t, Mode mode) {
    if (t < 1 || t > kMaxTupleLength)
        throw SizeLimit("orbit_table: tuple length " + std::to_string(t) +
                        " outside supported range 1.." + std::to_string(kMaxTupleLength));
    static std::map<std::pair<int, int>, std::unique_ptr<OrbitTable>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{t, static_cast<int>(mode)}];
    if (!slot) slot = build_orbit_table(t, mode);
    return *slot;
}

bool forced_zero(const Configuration& c, Mode mode) {
    const auto& table = orbit_table(static_cast<int>(c.length()), mode);
    const std::int64_t index = configuration_index(canonical(c));
    return table.orbits[static_cast<std::size_t>(
                            table.orbit_of[static_cast<std::size_t>(index)])]
        .forced_zero;
}

std::vector<OrbitClass> basis(int q, Mode mode) {
    const auto& table = orbit_table(q + 1, mode);
    std::vector<OrbitClass> out;
    out.reserve(table.basis.size());
    for (std::int32_t id : table.basis) out.push_back(table.orbits[static_cast<std::size_t>(id)]);
    return out;
}

}  // namespace ccw
