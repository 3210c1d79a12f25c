#include "ccw/theta.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "ccw/enumerate.hpp"
#include "ccw/errors.hpp"
#include "ccw/orbits.hpp"

namespace ccw {

namespace {

void require_length(const Configuration& c, std::size_t len, const char* who) {
    validate(c);
    if (c.length() != len) {
        throw MalformedRanks(std::string(who) + ": expected a " + std::to_string(len) +
                             "-point configuration, got length " + std::to_string(c.length()));
    }
}

}  // namespace

Rational or1(const Configuration& c) {
    require_length(c, 3, "or1");
    return orientation(c.x.ranks[0], c.x.ranks[1], c.x.ranks[2]);
}

Rational or2(const Configuration& c) {
    require_length(c, 3, "or2");
    return orientation(c.y.ranks[0], c.y.ranks[1], c.y.ranks[2]);
}

int theta30(const int* xr, const int* yr) {
    // Thirty terms: for each cyclic rotation p of the five coordinates, six
    // products pairing an x-orientation with the complementary y-orientation.
    int total = 0;
    for (int k = 0; k < 5; ++k) {
        const int p0 = k, p1 = (k + 1) % 5, p2 = (k + 2) % 5, p3 = (k + 3) % 5,
                  p4 = (k + 4) % 5;
        total += orientation(xr[p0], xr[p1], xr[p2]) * orientation(yr[p0], yr[p3], yr[p4]);
        total += orientation(xr[p0], xr[p3], xr[p4]) * orientation(yr[p0], yr[p1], yr[p2]);
        total -= orientation(xr[p0], xr[p1], xr[p3]) * orientation(yr[p0], yr[p2], yr[p4]);
        total -= orientation(xr[p0], xr[p2], xr[p4]) * orientation(yr[p0], yr[p1], yr[p3]);
        total += orientation(xr[p0], xr[p1], xr[p4]) * orientation(yr[p0], yr[p2], yr[p3]);
        total += orientation(xr[p0], xr[p2], xr[p3]) * orientation(yr[p0], yr[p1], yr[p4]);
    }
    return total;
}

Rational theta(const Configuration& c) {
    require_length(c, 5, "theta");
    return Rational(theta30(c.x.ranks.data(), c.y.ranks.data()), 30);
}

Rational theta_full(const Configuration& c) {
    require_length(c, 5, "theta_full");
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    const auto& xr = c.x.ranks;
    const auto& yr = c.y.ranks;
    long long total = 0;
    // Iterate all 120 permutations with the parity tracked from inversion
    // counts; accumulate sign * or1(coords 0,1,2) * or2(coords 2,3,4).
    do {
        int inversions = 0;
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        const int sgn = (inversions % 2 == 0) ? 1 : -1;
        total += sgn * orientation(xr[perm[0]], xr[perm[1]], xr[perm[2]]) *
                 orientation(yr[perm[2]], yr[perm[3]], yr[perm[4]]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Rational(total, 120);
}

const CochainVector& theta_vector() {
    static const CochainVector vec = [] {
        return project_function(
            4, Mode::HTwisted, [](const Configuration& c) { return theta(c); },
            /*verify_invariance=*/true);
    }();
    return vec;
}

const Configuration& extremal_config() {
    static const Configuration c({0, 1, 2, 3, 4}, {0, 2, 4, 1, 3});
    return c;
}

NormCertificate theta_norm_certificate(const std::optional<Configuration>& corrupt_at) {
    const OrbitTable* table = nullptr;
    std::int64_t target_orbit = -1;
    if (corrupt_at) {
        table = &orbit_table(5, Mode::HTwisted);
        const std::int64_t idx = configuration_index(canonical(*corrupt_at));
        target_orbit = table->orbit_of[static_cast<std::size_t>(idx)];
    }
    NormCertificate cert;
    int best = 0;
    for_each_configuration(5, [&](std::int64_t index, const Configuration& c) {
        int v = theta30(c.x.ranks.data(), c.y.ranks.data());
        if (table && table->orbit_of[static_cast<std::size_t>(index)] == target_orbit)
            v += 30 * table->sign_of[static_cast<std::size_t>(index)];
        v = std::abs(v);
        ++cert.config_count;
        ++cert.histogram[v];
        if (v > best) {
            best = v;
            cert.argmax.clear();
        }
        if (v == best && best > 0) cert.argmax.push_back(c);
    });
    cert.sup = Rational(best, 30);
    return cert;
}

namespace {

// 30*Theta with the fault-injection indicator added: +30 on the symmetry
// orbit of the target type, with the member's twisted sign.
int theta30_corrupted(const int* xr, const int* yr, const Configuration& face,
                      std::int64_t target_orbit, const OrbitTable& table) {
    int v = theta30(xr, yr);
    const std::int64_t idx = configuration_index(canonical(face));
    if (table.orbit_of[static_cast<std::size_t>(idx)] == target_orbit) {
        v += 30 * table.sign_of[static_cast<std::size_t>(idx)];
    }
    return v;
}

struct FaceTables {
    // For each length-6 arrangement index and drop position: the raw
    // length-5 rank array of the remaining points (uncompressed; orientation
    // only needs relative order).
    std::vector<std::array<int, 5>> face;  // [index * 6 + drop]
    int count = 0;

    explicit FaceTables(int t) {
        const auto& types = arrangement_types(t);
        count = static_cast<int>(types.size());
        face.resize(static_cast<std::size_t>(count) * 6);
        for (int i = 0; i < count; ++i) {
            for (int d = 0; d < 6; ++d) {
                auto& out = face[static_cast<std::size_t>(i) * 6 + d];
                int w = 0;
                for (int j = 0; j < 6; ++j) {
                    if (j != d) out[w++] = types[i].ranks[j];
                }
            }
        }
    }
};

const FaceTables& face_tables6() {
    static const FaceTables t(6);
    return t;
}

// delta(Theta) at the 6-point configuration with factor indices (ix, iy),
// as an integer multiple of 1/30.
int delta_theta30_at(int ix, int iy, const CocycleScanOptions& opts,
                     std::int64_t corrupt_orbit, const OrbitTable* table5) {
    const FaceTables& ft = face_tables6();
    int total = 0;
    int sign = 1;
    for (int d = 0; d < 6; ++d) {
        const auto& fx = ft.face[static_cast<std::size_t>(ix) * 6 + d];
        const auto& fy = ft.face[static_cast<std::size_t>(iy) * 6 + d];
        int v;
        if (table5 != nullptr) {
            // Negative-control path, off the hot loop: the raw windows keep
            // their 6-point ranks, so compress them through face() before
            // the orbit lookup.
            const Configuration cfg6(arrangement_types(6)[static_cast<std::size_t>(ix)].ranks,
                                     arrangement_types(6)[static_cast<std::size_t>(iy)].ranks);
            const Configuration face_cfg = face(cfg6, d);
            v = theta30_corrupted(fx.data(), fy.data(), face_cfg, corrupt_orbit, *table5);
        } else {
            v = theta30(fx.data(), fy.data());
        }
        total += sign * v;
        sign = -sign;
        (void)opts;
    }
    return total;
}

CocycleReport scan_indices(const std::vector<std::int64_t>* indices,
                           const CocycleScanOptions& opts) {
    const int n = face_tables6().count;
    const std::int64_t total =
        indices ? static_cast<std::int64_t>(indices->size())
                : static_cast<std::int64_t>(n) * static_cast<std::int64_t>(n);

    std::int64_t corrupt_orbit = -1;
    const OrbitTable* table5 = nullptr;
    if (opts.corrupt_at) {
        const Configuration target = canonical(*opts.corrupt_at);
        require_length(target, 5, "cocycle scan fault target");
        table5 = &orbit_table(5, Mode::HTwisted);
        corrupt_orbit =
            table5->orbit_of[static_cast<std::size_t>(configuration_index(target))];
    }

    const int jobs = std::max(1, opts.jobs);
    std::atomic<std::int64_t> failures{0};
    std::mutex first_mutex;
    std::optional<std::int64_t> first_index;

    auto work = [&](int shard) {
        for (std::int64_t k = shard; k < total; k += jobs) {
            const std::int64_t idx = indices ? (*indices)[static_cast<std::size_t>(k)] : k;
            const int ix = static_cast<int>(idx / n);
            const int iy = static_cast<int>(idx % n);
            if (delta_theta30_at(ix, iy, opts, corrupt_orbit, table5) != 0) {
                failures.fetch_add(1, std::memory_order_relaxed);
                std::lock_guard<std::mutex> lock(first_mutex);
                if (!first_index || idx < *first_index) first_index = idx;
            }
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        std::mutex error_mutex;
        std::exception_ptr error;
        for (int s = 0; s < jobs; ++s) {
            pool.emplace_back([&, s] {
                try {
                    work(s);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (error) std::rethrow_exception(error);
    }

    CocycleReport report;
    report.checked = total;
    report.failures = failures.load();
    if (first_index) report.first_failure = configuration_at(6, *first_index);
    return report;
}

}  // namespace

CocycleReport verify_theta_cocycle(const CocycleScanOptions& opts) {
    return scan_indices(nullptr, opts);
}

CocycleReport verify_theta_cocycle_sampled(std::int64_t samples, std::uint64_t seed,
                                           const CocycleScanOptions& opts) {
    const std::int64_t count = configuration_count(6);
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> indices;
    indices.reserve(static_cast<std::size_t>(samples));
    for (std::int64_t i = 0; i < samples; ++i) {
        indices.push_back(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(count)));
    }
    return scan_indices(&indices, opts);
}

const Configuration& lambda_config(int k) {
    static const std::array<Configuration, 5> configs = {
        Configuration({0, 0, 1, 1, 2}, {0, 1, 0, 1, 2}),
        Configuration({0, 1, 2, 2, 2}, {0, 0, 0, 1, 2}),
        Configuration({0, 1, 1, 2, 2}, {0, 0, 1, 1, 2}),
        Configuration({0, 1, 1, 1, 2}, {0, 0, 1, 2, 2}),
        Configuration({0, 0, 1, 2, 2}, {0, 1, 1, 1, 2}),
    };
    if (k < 0 || k > 4) throw SizeLimit("lambda_config: index must be 0..4");
    return configs[static_cast<std::size_t>(k)];
}

int lambda_sign(int k) {
    if (k < 0 || k > 4) throw SizeLimit("lambda_sign: index must be 0..4");
    return k == 2 ? -1 : 1;
}

LambdaProfile lambda_profile(const TypeFunction& f) {
    LambdaProfile p;
    p.l0 = lambda_sign(0) * f(lambda_config(0));
    p.l1 = lambda_sign(1) * f(lambda_config(1));
    p.l2 = lambda_sign(2) * f(lambda_config(2));
    p.l3 = lambda_sign(3) * f(lambda_config(3));
    p.l4 = lambda_sign(4) * f(lambda_config(4));
    return p;
}

LambdaProfile lambda_profile(const CochainVector& v) {
    if (v.degree() != 4) throw SizeLimit("lambda_profile: expects a degree-4 cochain");
    return lambda_profile(v.as_function());
}

std::vector<Rational> lambda_functional_row(Mode mode) {
    const auto basis_orbits = basis(4, mode);
    std::vector<Rational> row(basis_orbits.size(), Rational(0));
    for (std::size_t j = 0; j < basis_orbits.size(); ++j) {
        CochainVector e(4, mode);
        e.coeff(j) = 1;
        row[j] = lambda_profile(e).functional();
    }
    return row;
}

const Configuration& lambda_identity_config() {
    static const Configuration c({0, 1, 1, 2, 2, 2}, {0, 0, 1, 1, 2, 0});
    return c;
}

}  // namespace ccw
