#include "ccw/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ccw/errors.hpp"

namespace ccw {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kCoincidenceTol = 1e-12;
constexpr double kSeparationTol = 1e-9;

// Cluster a list of circle angles into cyclic ranks (0 = smallest angle of
// the first cluster, increasing counterclockwise; the wraparound pair of
// clusters merges when it, too, is coincident).
std::vector<int> ranks_from_angles(const std::vector<double>& angles) {
    const std::size_t n = angles.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return angles[a] < angles[b]; });

    std::vector<int> cluster_of_sorted(n, 0);
    int clusters = 1;
    for (std::size_t i = 1; i < n; ++i) {
        const double gap = angles[order[i]] - angles[order[i - 1]];
        if (gap <= kCoincidenceTol) {
            cluster_of_sorted[i] = clusters - 1;
        } else if (gap < kSeparationTol) {
            throw NearCoincidence("angle gap " + std::to_string(gap) +
                                  " falls in the ambiguity band");
        } else {
            cluster_of_sorted[i] = clusters++;
        }
    }
    if (n > 1 && clusters > 1) {
        const double wrap_gap = angles[order[0]] + 2 * kPi - angles[order[n - 1]];
        if (wrap_gap <= kCoincidenceTol) {
            const int last = clusters - 1;
            for (auto& c : cluster_of_sorted)
                if (c == last) c = 0;
            --clusters;
        } else if (wrap_gap < kSeparationTol) {
            throw NearCoincidence("wraparound angle gap " + std::to_string(wrap_gap) +
                                  " falls in the ambiguity band");
        }
    }
    std::vector<int> ranks(n);
    for (std::size_t i = 0; i < n; ++i) ranks[order[i]] = cluster_of_sorted[i];
    return ranks;
}

}  // namespace

int GroupChain::degree() const {
    if (terms.empty()) throw Error("degree of an empty chain is undefined");
    const std::size_t len = terms.front().points.size();
    for (const auto& t : terms)
        if (t.points.size() != len) throw Error("chain terms have mismatched tuple lengths");
    return static_cast<int>(len) - 1;
}

GroupChain genus2_cycle(const SurfaceGroupData& g) {
    // Staircase of the word l0 l1 l2 l3: triples (1, prefix, prefix*letter)
    // for the three steps that extend a nontrivial prefix.
    auto staircase = [](std::array<const MobiusMap*, 4> letters, int sign, GroupChain& out) {
        MobiusMap prefix = *letters[0];
        for (int k = 1; k < 4; ++k) {
            const MobiusMap next = prefix * (*letters[static_cast<std::size_t>(k)]);
            ChainTerm term;
            term.coeff = sign;
            term.points = {{MobiusMap(), MobiusMap()}, {prefix, prefix}, {next, next}};
            out.terms.push_back(std::move(term));
            prefix = next;
        }
    };
    GroupChain z;
    staircase({&g.a1, &g.b1, &g.a2, &g.b2}, +1, z);
    staircase({&g.b2, &g.a2, &g.b1, &g.a1}, -1, z);
    return z;
}

GroupChain product_chain(const GroupChain& c, const GroupChain& d) {
    if (!c.empty() && c.degree() != 2) throw Error("product_chain expects degree-2 chains");
    if (!d.empty() && d.degree() != 2) throw Error("product_chain expects degree-2 chains");
    static constexpr int kPattern[6][5][2] = {
        {{0, 0}, {0, 1}, {0, 2}, {1, 2}, {2, 2}}, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}},
        {{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 2}}, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}},
        {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}}, {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}}};
    static constexpr int kSign[6] = {+1, -1, +1, +1, -1, +1};

    GroupChain out;
    for (const auto& s : c.terms) {
        for (const auto& t : d.terms) {
            for (int p = 0; p < 6; ++p) {
                ChainTerm term;
                term.coeff = s.coeff * t.coeff * kSign[p];
                term.points.reserve(5);
                for (int k = 0; k < 5; ++k) {
                    const auto& gi = s.points[static_cast<std::size_t>(kPattern[p][k][0])].first;
                    const auto& kj = t.points[static_cast<std::size_t>(kPattern[p][k][1])].second;
                    term.points.emplace_back(gi, kj);
                }
                out.terms.push_back(std::move(term));
            }
        }
    }
    return out;
}

Configuration term_configuration(const std::vector<std::pair<MobiusMap, MobiusMap>>& points,
                                 double base_angle) {
    std::vector<double> xa, ya;
    xa.reserve(points.size());
    ya.reserve(points.size());
    for (const auto& p : points) {
        xa.push_back(mobius_boundary(p.first, base_angle));
        ya.push_back(mobius_boundary(p.second, base_angle));
    }
    return Configuration(ranks_from_angles(xa), ranks_from_angles(ya));
}

Rational pair_chain(const TypeFunction& f, const GroupChain& chain, const SurfaceGroupData& g) {
    Rational total(0);
    for (const auto& term : chain.terms)
        total += Rational(term.coeff) * f(term_configuration(term.points, g.base_point));
    return total;
}

std::vector<int> orientation_summands(const GroupChain& z, const SurfaceGroupData& g) {
    if (!z.empty() && z.degree() != 2)
        throw Error("orientation_summands expects a degree-2 chain");
    std::vector<int> out;
    out.reserve(z.size());
    for (const auto& term : z.terms) {
        const double t0 = mobius_boundary(term.points[0].first, g.base_point);
        const double t1 = mobius_boundary(term.points[1].first, g.base_point);
        const double t2 = mobius_boundary(term.points[2].first, g.base_point);
        out.push_back(term.coeff * angle_orientation(t0, t1, t2));
    }
    return out;
}

int pair_orientation(const GroupChain& z, const SurfaceGroupData& g) {
    const auto summands = orientation_summands(z, g);
    return std::accumulate(summands.begin(), summands.end(), 0);
}

std::array<int, 4> claim_orientation_values(const SurfaceGroupData& g) {
    const auto summands = orientation_summands(genus2_cycle(g), g);
    if (summands.size() != 6) throw Error("claim_orientation_values: unexpected cycle shape");
    return {summands[1], summands[2], summands[3], summands[4]};
}

std::vector<BoundaryClass> boundary_classes(const GroupChain& z, double cluster_tol) {
    if (!z.empty() && z.degree() != 2) throw Error("boundary_classes expects a degree-2 chain");
    std::vector<BoundaryClass> classes;
    auto add = [&](const std::pair<MobiusMap, MobiusMap>& u,
                   const std::pair<MobiusMap, MobiusMap>& v, int coeff) {
        const MobiusMap sx = u.first.inverse() * v.first;
        const MobiusMap sy = u.second.inverse() * v.second;
        for (auto& cls : classes) {
            if (projective_gap(cls.step_x, sx) < cluster_tol &&
                projective_gap(cls.step_y, sy) < cluster_tol) {
                cls.coeff += coeff;
                return;
            }
        }
        classes.push_back({sx, sy, coeff});
    };
    for (const auto& term : z.terms) {
        // d(z0, z1, z2) = (z1, z2) - (z0, z2) + (z0, z1)
        add(term.points[1], term.points[2], term.coeff);
        add(term.points[0], term.points[2], -term.coeff);
        add(term.points[0], term.points[1], term.coeff);
    }
    std::erase_if(classes, [](const BoundaryClass& c) { return c.coeff == 0; });
    return classes;
}

}  // namespace ccw
