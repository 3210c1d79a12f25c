#!/usr/bin/env python3
"""Independent recomputation of ccw certificates.

Reads a JSON certificate produced by the `ccw` tool, re-derives the
mathematical content from scratch (pure Python, exact fractions, no shared
code with the C++ library), and exits 0 iff everything matches.

Usage:  crosscheck.py CERT.json [--samples N] [--seed S]

The certificate kind is dispatched on the "kind" field:
  sup-norm                full re-scan via the 120-term alternation formula
  cocycle                 independent random sample of coboundary values
  class-norm              face predicate and extremal value re-derived
  transfer                internal consistency of the recorded counts
  decomposition           sampled check that the primitive's coboundary
                          reproduces the input cochain
  decomposition-suite     internal consistency
  invariants              closed formulas re-evaluated
  surface-*/suite         embedded sub-certificates re-dispatched
"""

import argparse
import itertools
import json
import random
import sys
from fractions import Fraction

# --------------------------------------------------------------- basics ---


def orientation(a, b, c):
    """Cyclic orientation of three ranks: 0 on coincidence, else +/-1."""
    if a == b or b == c or a == c:
        return 0
    return 1 if (a < b < c) or (b < c < a) or (c < a < b) else -1


def canonical_arrangement(values):
    """Compress arbitrary integer labels to the canonical rank vector:
    contiguous 0..m-1 preserving cyclic order, first entry 0."""
    distinct = sorted(set(values))
    relabel = {v: i for i, v in enumerate(distinct)}
    ranks = [relabel[v] for v in values]
    m = len(distinct)
    return tuple((r - ranks[0]) % m for r in ranks)


def parse_config(text):
    """Parse 'X=[...];Y=[...]' into a pair of rank tuples."""
    text = "".join(text.split())
    if not text.startswith("X=[") or ";Y=[" not in text or not text.endswith("]"):
        raise ValueError(f"bad configuration string: {text}")
    xs, ys = text[2:].split(";Y=")
    x = tuple(int(v) for v in xs.strip("[]").split(","))
    y = tuple(int(v) for v in ys.strip("[]").split(","))
    if len(x) != len(y):
        raise ValueError(f"factor length mismatch: {text}")
    return canonical_arrangement(x), canonical_arrangement(y)


def config_str(x, y):
    return "X=[" + ",".join(map(str, x)) + "];Y=[" + ",".join(map(str, y)) + "]"


def face(x, y, i):
    """Delete point i from both factors and re-canonicalize."""
    return (canonical_arrangement(x[:i] + x[i + 1:]),
            canonical_arrangement(y[:i] + y[i + 1:]))


def perm_sign(p):
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


PERMS5 = [(p, perm_sign(p)) for p in itertools.permutations(range(5))]


def theta_120(x, y):
    """The degree-4 cochain via its definition: the alternation of the cup
    product of the two factor orientation cochains (120 terms)."""
    total = 0
    for p, sg in PERMS5:
        total += sg * orientation(x[p[0]], x[p[1]], x[p[2]]) \
                    * orientation(y[p[2]], y[p[3]], y[p[4]])
    return Fraction(total, 120)


def all_arrangements(t):
    """Every canonical rank vector of length t (first rank 0, contiguous)."""
    out = []
    for values in itertools.product(range(t), repeat=t - 1):
        ranks = (0,) + values
        m = max(ranks) + 1
        if set(ranks) == set(range(m)):
            out.append(ranks)
    return out


def random_canonical(t, rng):
    return canonical_arrangement([rng.randrange(t) for _ in range(t)])


# ---------------------------------------------- invariant-cochain values ---


def factor_images(ranks):
    """The arrangement, its orientation reversal, and nothing else."""
    m = max(ranks) + 1
    reversed_ranks = canonical_arrangement([(m - r) % m for r in ranks])
    return ranks, reversed_ranks


def evaluate_twisted(coeffs, x, y):
    """Value at (x, y) of the twisted invariant cochain whose nonzero
    representative values are recorded in `coeffs` (strings -> Fraction).

    Scans the full symmetry orbit of (x, y) — coordinate permutations with
    their sign, factor reversals with sign -1 each, the factor swap with
    sign +1 — for a member present in `coeffs`; absent means value 0."""
    t = len(x)
    found = None
    for p in itertools.permutations(range(t)):
        sg = perm_sign(p)
        px = canonical_arrangement([x[i] for i in p])
        py = canonical_arrangement([y[i] for i in p])
        for rx in (False, True):
            for ry in (False, True):
                qx = factor_images(px)[1] if rx else px
                qy = factor_images(py)[1] if ry else py
                sign = sg * (-1 if rx else 1) * (-1 if ry else 1)
                for ax, ay in ((qx, qy), (qy, qx)):
                    key = config_str(ax, ay)
                    if key in coeffs:
                        value = sign * coeffs[key]
                        if found is None:
                            found = value
                        elif found != value:
                            raise ValueError(f"inconsistent orbit values at {key}")
    return found if found is not None else Fraction(0)


def load_cochain(obj):
    if obj["degree"] != 3 and obj["degree"] != 4:
        raise ValueError(f"unsupported cochain degree {obj['degree']}")
    if obj["mode"] != "H":
        raise ValueError("only twisted cochains are cross-checked")
    return {key: Fraction(val) for key, val in obj.get("coeffs", {}).items()}


# ------------------------------------------------------------ checks ------


class Mismatch(Exception):
    pass


def expect(cond, message):
    if not cond:
        raise Mismatch(message)


def check_sup_norm(cert, args):
    arrangements = all_arrangements(5)
    expect(len(arrangements) == 150, f"arrangement count {len(arrangements)} != 150")
    sup = Fraction(0)
    histogram = {}
    argmax = []
    for x in arrangements:
        for y in arrangements:
            v = abs(theta_120(x, y))
            key = str(30 * v)
            histogram[key] = histogram.get(key, 0) + 1
            if v > sup:
                sup, argmax = v, []
            if v == sup:
                argmax.append(config_str(x, y))
    expect(cert["configuration_count"] == 22500, "configuration count mismatch")
    expect(Fraction(cert["sup_norm"]) == sup, f"sup norm {cert['sup_norm']} != {sup}")
    cert_hist = {str(30 * Fraction(k)): v for k, v in cert["abs_value_histogram"].items()}
    expect(cert_hist == histogram, "abs-value histogram mismatch")
    expect(cert["argmax_count"] == len(argmax), "argmax count mismatch")
    expect(sorted(cert["argmax"]) == sorted(argmax), "argmax set mismatch")
    return f"sup-norm: re-scanned 22500 types, sup {sup}, argmax {len(argmax)}"


def check_cocycle(cert, args):
    expect(cert["ok"] is True, "certificate reports failure")
    expect(cert["failures"] == 0, "certificate records failures")
    want = 1082 * 1082 if cert["scan"] == "full" else cert["checked"]
    expect(cert["checked"] == want, "checked count mismatch")
    rng = random.Random(args.seed)
    for _ in range(args.samples):
        x = random_canonical(6, rng)
        y = random_canonical(6, rng)
        total = Fraction(0)
        for i in range(6):
            fx, fy = face(x, y, i)
            total += (-1) ** i * theta_120(fx, fy)
        expect(total == 0, f"coboundary nonzero at {config_str(x, y)}")
    return f"cocycle: certificate consistent; {args.samples} independent samples vanish"


def interleaved(ranks, i, j, k, l):
    """True iff chords {ranks[i],ranks[j]} and {ranks[k],ranks[l]} cross."""
    a, b = ranks[i], ranks[j]
    c, d = ranks[k], ranks[l]

    def between(lo, hi, v):
        return (v - lo) % 4 < (hi - lo) % 4

    return between(a, b, c) != between(a, b, d)


def check_class_norm(cert, args):
    expect(cert["ok"] is True, "certificate reports failure")
    x, y = parse_config(cert["extremal"])
    value = abs(theta_120(x, y))
    expect(Fraction(cert["value"]) == value, f"extremal value {value} != {cert['value']}")
    crossed = 0
    for i in range(5):
        fx, fy = face(x, y, i)
        if len(set(fx)) == 4 and len(set(fy)) == 4:
            cx = interleaved(fx, 0, 2, 1, 3)
            cy = interleaved(fy, 0, 2, 1, 3)
            if cx != cy:  # exactly one factor has crossing chords
                crossed += 1
    expect(crossed == 5, f"only {crossed}/5 faces satisfy the vanishing predicate")
    expect(cert["faces_crossed_chords"] == 5, "certificate face count mismatch")
    expect(cert["trials_matching"] == cert["random_trials"], "trial count mismatch")
    return f"class-norm: value {value}, all 5 faces re-verified"


def check_transfer(cert, args):
    expect(cert["ok"] is True, "certificate reports failure")
    expect(cert["identity_on_basis_deg3"] == 2, "degree-3 basis has dimension 2")
    expect(cert["identity_on_basis_deg4"] == 26, "degree-4 basis has dimension 26")
    expect(cert["central_cochain_fixed"] is True, "central cochain not fixed")
    expect(cert["orientation_cochain_killed"] is True, "orientation transfer nonzero")
    expect(cert["norm_trials_ok"] == cert["norm_trials"], "norm trial mismatch")
    return "transfer: certificate internally consistent"


def check_decomposition(cert, args):
    expect(cert["ok"] is True, "certificate reports failure")
    for flag in ("stage1_vanishes", "stage2_vanishes", "stage3_zero", "final_exact"):
        expect(cert[flag] is True, f"{flag} is false")
    f = load_cochain(cert["input"])
    b = load_cochain(cert["primitive"])
    rng = random.Random(args.seed)
    for _ in range(args.samples):
        x = random_canonical(5, rng)
        y = random_canonical(5, rng)
        boundary = Fraction(0)
        for i in range(5):
            fx, fy = face(x, y, i)
            boundary += (-1) ** i * evaluate_twisted(b, fx, fy)
        expect(boundary == evaluate_twisted(f, x, y),
               f"coboundary of primitive misses input at {config_str(x, y)}")
    return f"decomposition: primitive re-verified at {args.samples} sampled types"


def check_decomposition_suite(cert, args):
    expect(cert["ok"] is True, "certificate reports failure")
    expect(cert["coboundary_ok"] == cert["coboundary_trials"], "coboundary trial mismatch")
    expect(cert["kernel_slice_dim"] == 2, "kernel slice dimension != 2")
    expect(cert["kernel_ok"] == cert["kernel_slice_dim"], "kernel vector mismatch")
    return "decomposition-suite: certificate internally consistent"


def check_invariants(cert, args):
    g, h = cert["genus"]
    both = g >= 2 and h >= 2
    euler = 4 * (g - 1) * (h - 1)
    norm = 24 * (g - 1) * (h - 1) if both else 0
    expect(cert["euler_characteristic"] == euler, "Euler characteristic mismatch")
    expect(cert["product_norm"] == norm, "product norm mismatch")
    expect(cert["volume"]["pi_squared_coefficient"] == (16 * (g - 1) * (h - 1) if both else 0),
           "volume coefficient mismatch")
    expect(Fraction(cert["milnor_wood_bound"]) == Fraction(3, 8) * euler,
           "bound mismatch")
    fg = 4 * (g - 1) if g >= 1 else 0
    fh = 4 * (h - 1) if h >= 1 else 0
    expect(cert["factor_norms"] == [fg, fh], "factor norm mismatch")
    expect(cert["product_bracket"] == [fg * fh, 6 * fg * fh], "bracket mismatch")
    expect(Fraction(cert["product_formula"]) == Fraction(3, 2) * fg * fh,
           "three-halves product mismatch")
    if both:
        expect(norm == 6 * euler, "norm != 6 * Euler characteristic")
    expect(cert["consistent"] is True, "certificate reports inconsistency")
    return f"invariants: genus ({g},{h}) formulas re-derived, norm {norm}"


def check_surface_or(cert, args):
    expect(cert["ok"] is True, "certificate reports failure")
    expect(cert["value"] == 4, "orientation pairing != 4")
    expect(sum(cert["summands"]) == cert["value"], "summands do not sum to the value")
    expect(Fraction(cert["value_via_cochain"]) == 4, "cochain route != 4")
    return "surface-orientation-pairing: value 4 consistent"


def check_surface_theta(cert, args):
    expect(cert["ok"] is True, "certificate reports failure")
    expect(Fraction(cert["value"]) == 16, "product pairing != 16")
    expect(cert["corner_orientations"] == [1, 1, 1, 1], "corner orientations != +1")
    expect(Fraction(cert["functional"]) == 1, "corner functional != 1")
    expect(Fraction(cert["sixteen_times_functional"]) == Fraction(cert["value"]),
           "independent functional route disagrees")
    return "surface-product-pairing: value 16 = 16 x functional consistent"


def check_surface_suite(cert, args):
    a = check_surface_or(cert["orientation"], args)
    b = check_surface_theta(cert["product"], args)
    expect(cert["ok"] is True, "certificate reports failure")
    return a + "\n" + b


CHECKS = {
    "sup-norm": check_sup_norm,
    "cocycle": check_cocycle,
    "class-norm": check_class_norm,
    "transfer": check_transfer,
    "decomposition": check_decomposition,
    "decomposition-suite": check_decomposition_suite,
    "invariants": check_invariants,
    "surface-orientation-pairing": check_surface_or,
    "surface-product-pairing": check_surface_theta,
    "surface-suite": check_surface_suite,
}


def check_suite(cert, args):
    lines = []
    expect(cert["ok"] is True, "combined certificate reports failure")
    for name, sub in cert.items():
        if isinstance(sub, dict) and "kind" in sub:
            lines.append(CHECKS[sub["kind"]](sub, args))
    return "\n".join(lines)


CHECKS["suite"] = check_suite


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("certificate", help="JSON certificate emitted by ccw")
    parser.add_argument("--samples", type=int, default=400,
                        help="random samples for the statistical re-checks")
    parser.add_argument("--seed", type=int, default=2024, help="sampling seed")
    args = parser.parse_args()

    try:
        with open(args.certificate, "r", encoding="utf-8") as handle:
            cert = json.load(handle)
    except (OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    kind = cert.get("kind")
    if kind not in CHECKS:
        print(f"error: unknown certificate kind {kind!r}", file=sys.stderr)
        return 2
    try:
        print(CHECKS[kind](cert, args))
    except Mismatch as e:
        print(f"MISMATCH: {e}", file=sys.stderr)
        return 1
    print("crosscheck: OK")
    return 0


if __name__ == "__main__":
    sys.exit(main())
