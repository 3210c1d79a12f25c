#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"

#include "ccw/cochain.hpp"
#include "ccw/config.hpp"
#include "ccw/decompose.hpp"
#include "ccw/invariants.hpp"
#include "ccw/theta.hpp"

namespace ccw {

// Certificate that the cohomology-class norm of the central cochain equals
// its sup norm: the upper bound is the exhaustive sup-norm scan; the lower
// bound holds because every face of the maximizing 5-tuple satisfies the
// crossed-chords vanishing criterion, so coboundaries of twisted 3-cochains
// cannot lower the value there.  The certificate re-verifies both the
// geometric predicate and its orbit-level shadow (the faces land in
// sign-forced orbits), then spot-checks |f + delta b| at the extremal
// configuration for seeded random b.
struct ClassNormCertificate {
    Rational value;  // the certified class norm (= sup norm)
    Configuration extremal;
    int faces_total = 0;
    int faces_crossed_chords = 0;  // faces passing the geometric predicate
    int faces_forced = 0;          // faces in sign-forced twisted orbits
    int random_trials = 0;
    std::uint64_t seed = 0;
    int trials_matching = 0;  // trials with |f + delta b|(extremal) == value

    bool ok() const {
        return faces_crossed_chords == faces_total && faces_forced == faces_total &&
               trials_matching == random_trials;
    }
};

// Builds the certificate for the central cochain.  `extremal_override`
// replaces the maximizing configuration (negative-control hook: a
// non-extremal pattern makes the face predicate fail).  Throws
// CertificateFailure as soon as any face or trial check fails.
ClassNormCertificate class_norm_certificate_theta(
    int random_trials = 100, std::uint64_t seed = 7,
    const std::optional<Configuration>& extremal_override = {});

// ------------------------------------------------------------------- JSON
// All rationals are serialized as "p/q" strings; the volume is serialized
// as its exact coefficient of pi^2 plus a float convenience field.

nlohmann::ordered_json norm_certificate_json(const NormCertificate& cert);
nlohmann::ordered_json class_norm_certificate_json(const ClassNormCertificate& cert);
nlohmann::ordered_json cocycle_report_json(const CocycleReport& report, bool sampled,
                                           std::optional<std::uint64_t> seed);
nlohmann::ordered_json decomposition_report_json(const DecompositionReport& report);
nlohmann::ordered_json invariants_report_json(const InvariantsReport& report);

}  // namespace ccw
