#!/usr/bin/env python3
"""Regenerates the JSON documents under corpus/.

Each document describes one global quotient: the group, the fixed-locus
sector presentations at single, pair and triple level, the connecting
pullbacks and pushforwards, normal-bundle classes, eigenvalue data, the
inversion correspondence and the group action. Everything is exact; the
files are inputs for the checks, not derived output, so the generator only
spells out presentations that were worked out by hand.
"""

import json
import os
import sys
from fractions import Fraction


def rat(x):
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def mat(rows):
    return [[rat(x) for x in row] for row in rows]


def identity(n):
    return mat([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def zeros(r, c):
    return mat([[0] * c for _ in range(r)])


def algebra(basis, bidegree, products, unit=0, parity=None):
    out = {"basis": basis, "bidegree": bidegree, "unit": unit, "products": products}
    if parity is not None:
        out["parity"] = parity
    return out


POINT = algebra(["1"], [[0, 0]], [])


def pull(comp, matrix):
    return {"component": comp, "matrix": matrix}


def mu(comp, pullm, pushm):
    return {"component": comp, "pullback": pullm, "pushforward": pushm}


# ---------------------------------------------------------------------------
# Quotients of a point: the full product table is the group ring.

def point_fixture(group_block, order):
    doc = {"group": group_block}
    doc["sectors"] = [{"g": g, "component": 0, "dim": 0, "algebra": POINT} for g in range(order)]
    doc["double_sectors"] = [
        {"g": [a, b], "component": 0, "dim": 0, "algebra": POINT} for a in range(order) for b in range(order)
    ]
    doc["triple_sectors"] = [
        {"g": [a, b, c], "component": 0, "dim": 0, "algebra": POINT}
        for a in range(order) for b in range(order) for c in range(order)
    ]
    one = [["1"]]
    doc["correspondences"] = {
        "sigma": [{"g": g, "component": 0, "to_component": 0, "matrix": one} for g in range(order)],
        "double": [
            {"g": [a, b], "component": 0, "e1": pull(0, one), "e2": pull(0, one),
             "mu": mu(0, one, one), "sigma_mu": pull(0, one)}
            for a in range(order) for b in range(order)
        ],
        "triple": [
            {"g": [a, b, c], "component": 0,
             "e12": pull(0, one), "e23": pull(0, one), "mu12_3": pull(0, one), "mu1_23": pull(0, one),
             "j1": pull(0, one), "j2": pull(0, one), "j3": pull(0, one), "j4": pull(0, one)}
            for a in range(order) for b in range(order) for c in range(order)
        ],
    }
    doc["gaction"] = [
        {"h": h, "maps": [{"g": g, "component": 0, "to_component": 0, "matrix": one} for g in range(order)]}
        for h in range(1, order)
    ]
    return doc


# ---------------------------------------------------------------------------
# Cyclic quotient surface singularities: the plane with a diagonal linear
# action, every nontrivial fixed locus the origin. All sector presentations
# are one-dimensional, so only dimensions, normals, eigenvalues and the
# degree-two pushforward fillers vary.

def cone_fixture(table, eigen_map):
    order = len(table)

    def dim_of(gs):
        return 2 if all(g == 0 for g in gs) else 0

    doc = {"group": {"table": table}}
    doc["sectors"] = [{"g": g, "component": 0, "dim": dim_of([g]), "algebra": POINT} for g in range(order)]
    doc["double_sectors"] = [
        {"g": [a, b], "component": 0, "dim": dim_of([a, b]), "algebra": POINT}
        for a in range(order) for b in range(order)
    ]
    doc["triple_sectors"] = [
        {"g": [a, b, c], "component": 0, "dim": dim_of([a, b, c]), "algebra": POINT}
        for a in range(order) for b in range(order) for c in range(order)
    ]
    normal = []
    for g in range(order):
        if dim_of([g]) == 0:
            normal.append({"sector": [g], "component": 0, "lines": [[[], "2"]]})
    for a in range(order):
        for b in range(order):
            if dim_of([a, b]) == 0:
                normal.append({"sector": [a, b], "component": 0, "lines": [[[], "2"]]})
    for a in range(order):
        for b in range(order):
            for c in range(order):
                if dim_of([a, b, c]) == 0:
                    normal.append({"sector": [a, b, c], "component": 0, "lines": [[[], "2"]]})
    doc["normal"] = normal
    doc["eigen"] = [
        {"sector": [g], "component": 0,
         "entries": [{"alpha": a, "lines": [[[], str(m)]]} for (a, m) in entries]}
        for g, entries in sorted(eigen_map.items())
    ]
    one = [["1"]]
    doubles = []
    for a in range(order):
        for b in range(order):
            ab = table[a][b]
            push = one if dim_of([ab]) == dim_of([a, b]) else [["0"]]
            doubles.append({"g": [a, b], "component": 0, "e1": pull(0, one), "e2": pull(0, one),
                            "mu": mu(0, one, push), "sigma_mu": pull(0, one)})
    triples = [
        {"g": [a, b, c], "component": 0,
         "e12": pull(0, one), "e23": pull(0, one), "mu12_3": pull(0, one), "mu1_23": pull(0, one),
         "j1": pull(0, one), "j2": pull(0, one), "j3": pull(0, one), "j4": pull(0, one)}
        for a in range(order) for b in range(order) for c in range(order)
    ]
    doc["correspondences"] = {
        "sigma": [{"g": g, "component": 0, "to_component": 0, "matrix": one} for g in range(order)],
        "double": doubles,
        "triple": triples,
    }
    doc["gaction"] = [
        {"h": h, "maps": [{"g": g, "component": 0, "to_component": 0, "matrix": one} for g in range(order)]}
        for h in range(1, order)
    ]
    return doc


# ---------------------------------------------------------------------------
# An abelian surface modulo the involution. The untwisted sector is presented
# by the even cohomology (rank one in degrees 0 and 4, rank six in degree 2,
# with the wedge pairing), the involution fixes sixteen points, and every
# point sector contributes a line with the two eigenvalue-1/2 directions.

def kummer_fixture():
    NPTS = 16
    ub = ["1", "b1", "b2", "b3", "b4", "b5", "b6", "v"]
    ubideg = [[0, 0]] + [[1, 0]] * 6 + [[2, 0]]
    uprod = [[1, 6, [[7, "1"]]], [2, 5, [[7, "-1"]]], [3, 4, [[7, "1"]]]]
    U = algebra(ub, ubideg, uprod)
    restrict_m = mat([[1] + [0] * 7])
    include = [[0] for _ in range(8)]
    include[7] = [1]
    include_m = mat(include)
    one = [["1"]]

    doc = {"group": {"table": [[0, 1], [1, 0]]}}
    doc["sectors"] = [{"g": 0, "component": 0, "dim": 2, "algebra": U}] + [
        {"g": 1, "component": p, "dim": 0, "algebra": POINT} for p in range(NPTS)
    ]
    doc["double_sectors"] = (
        [{"g": [0, 0], "component": 0, "dim": 2, "algebra": U}]
        + [{"g": [0, 1], "component": p, "dim": 0, "algebra": POINT} for p in range(NPTS)]
        + [{"g": [1, 0], "component": p, "dim": 0, "algebra": POINT} for p in range(NPTS)]
        + [{"g": [1, 1], "component": p, "dim": 0, "algebra": POINT} for p in range(NPTS)]
    )
    triples = []
    for a in range(2):
        for b in range(2):
            for c in range(2):
                if a == b == c == 0:
                    triples.append({"g": [0, 0, 0], "component": 0, "dim": 2, "algebra": U})
                else:
                    triples.extend(
                        {"g": [a, b, c], "component": p, "dim": 0, "algebra": POINT} for p in range(NPTS)
                    )
    doc["triple_sectors"] = triples

    normal = [{"sector": [1], "component": p, "lines": [[[], "2"]]} for p in range(NPTS)]
    for pair in ([0, 1], [1, 0], [1, 1]):
        normal.extend({"sector": pair, "component": p, "lines": [[[], "2"]]} for p in range(NPTS))
    for a in range(2):
        for b in range(2):
            for c in range(2):
                if a == b == c == 0:
                    continue
                normal.extend({"sector": [a, b, c], "component": p, "lines": [[[], "2"]]} for p in range(NPTS))
    doc["normal"] = normal
    doc["eigen"] = [
        {"sector": [1], "component": p, "entries": [{"alpha": "1/2", "lines": [[[], "2"]]}]} for p in range(NPTS)
    ]

    sigma = [{"g": 0, "component": 0, "to_component": 0, "matrix": identity(8)}] + [
        {"g": 1, "component": p, "to_component": p, "matrix": one} for p in range(NPTS)
    ]
    doubles = [
        {"g": [0, 0], "component": 0, "e1": pull(0, identity(8)), "e2": pull(0, identity(8)),
         "mu": mu(0, identity(8), identity(8)), "sigma_mu": pull(0, identity(8))}
    ]
    for p in range(NPTS):
        doubles.append({"g": [0, 1], "component": p, "e1": pull(0, restrict_m), "e2": pull(p, one),
                        "mu": mu(p, one, one), "sigma_mu": pull(p, one)})
    for p in range(NPTS):
        doubles.append({"g": [1, 0], "component": p, "e1": pull(p, one), "e2": pull(0, restrict_m),
                        "mu": mu(p, one, one), "sigma_mu": pull(p, one)})
    for p in range(NPTS):
        doubles.append({"g": [1, 1], "component": p, "e1": pull(p, one), "e2": pull(p, one),
                        "mu": mu(0, restrict_m, include_m), "sigma_mu": pull(0, restrict_m)})

    def dpull(a, b, p):
        # pullback from the (a, b) pair sector to a point of the triple locus
        return pull(0, restrict_m) if a == b == 0 else pull(p, one)

    def spull(g, p):
        return pull(0, restrict_m) if g == 0 else pull(p, one)

    tcorr = [{"g": [0, 0, 0], "component": 0,
              "e12": pull(0, identity(8)), "e23": pull(0, identity(8)),
              "mu12_3": pull(0, identity(8)), "mu1_23": pull(0, identity(8)),
              "j1": pull(0, identity(8)), "j2": pull(0, identity(8)),
              "j3": pull(0, identity(8)), "j4": pull(0, identity(8))}]
    for a in range(2):
        for b in range(2):
            for c in range(2):
                if a == b == c == 0:
                    continue
                ab, bc, abc = a ^ b, b ^ c, a ^ b ^ c
                for p in range(NPTS):
                    tcorr.append({"g": [a, b, c], "component": p,
                                  "e12": dpull(a, b, p), "e23": dpull(b, c, p),
                                  "mu12_3": dpull(ab, c, p), "mu1_23": dpull(a, bc, p),
                                  "j1": spull(a, p), "j2": spull(b, p), "j3": spull(c, p),
                                  "j4": spull(abc, p)})
    doc["correspondences"] = {"sigma": sigma, "double": doubles, "triple": tcorr}
    doc["gaction"] = [
        {"h": 1, "maps": [{"g": 0, "component": 0, "to_component": 0, "matrix": identity(8)}] + [
            {"g": 1, "component": p, "to_component": p, "matrix": one} for p in range(NPTS)
        ]}
    ]
    return doc


def kummer_resolution():
    NPTS = 16
    basis = ["1"] + [f"f{i}" for i in range(1, 7)] + [f"E{p}" for p in range(NPTS)] + ["pt"]
    bideg = [[0, 0]] + [[1, 0]] * (6 + NPTS) + [[2, 0]]
    top = len(basis) - 1
    prods = [[1, 6, [[top, "1"]]], [2, 5, [[top, "-1"]]], [3, 4, [[top, "1"]]]]
    prods += [[7 + p, 7 + p, [[top, "-2"]]] for p in range(NPTS)]
    integral = ["0"] * top + ["1"]
    return {"resolution": {"dim": 2, "algebra": algebra(basis, bideg, prods), "integral": integral}}


def kummer_iso():
    pairs = [{"orb": "g0c0:1", "res": "1"}]
    pairs += [{"orb": f"g0c0:b{i}", "res": f"f{i}"} for i in range(1, 7)]
    pairs.append({"orb": "g0c0:v", "res": "pt"})
    pairs += [{"orb": f"g1c{p}:1", "res": f"E{p}", "scalable": True} for p in range(16)]
    return {"iso_skeleton": {"pairs": pairs}}


# ---------------------------------------------------------------------------
# A synthetic surface with an involution whose fixed locus is a curve,
# built to exercise odd classes, nonzero first Chern roots in the normal
# data, a pushforward with a genuine degree shift, and a sign-reversing
# group action. The untwisted presentation carries two odd generators whose
# product changes sign under the involution.

def signs_fixture():
    X6 = algebra(
        ["1", "h", "t1", "t2", "w", "k"],
        [[0, 0], [1, 0], [1, 1], [1, 1], [2, 0], [2, 2]],
        [[1, 1, [[4, "1"]]], [2, 3, [[5, "1"]]]],
    )
    E2 = algebra(["1", "q"], [[0, 0], [1, 0]], [])
    one2 = identity(2)
    restrict_m = mat([[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]])
    include_m = mat([[0, 0], [1, 0], [0, 0], [0, 0], [0, 1], [0, 0]])
    root2q = [[1, "2"]]

    doc = {"group": {"table": [[0, 1], [1, 0]]}}
    doc["sectors"] = [
        {"g": 0, "component": 0, "dim": 2, "algebra": X6},
        {"g": 1, "component": 0, "dim": 1, "algebra": E2},
    ]
    doc["double_sectors"] = [
        {"g": [0, 0], "component": 0, "dim": 2, "algebra": X6},
        {"g": [0, 1], "component": 0, "dim": 1, "algebra": E2},
        {"g": [1, 0], "component": 0, "dim": 1, "algebra": E2},
        {"g": [1, 1], "component": 0, "dim": 1, "algebra": E2},
    ]
    doc["triple_sectors"] = [
        {"g": [a, b, c], "component": 0, "dim": 2 if a == b == c == 0 else 1,
         "algebra": X6 if a == b == c == 0 else E2}
        for a in range(2) for b in range(2) for c in range(2)
    ]
    normal = [{"sector": [1], "component": 0, "lines": [[root2q, "1"]]}]
    for pair in ([0, 1], [1, 0], [1, 1]):
        normal.append({"sector": pair, "component": 0, "lines": [[root2q, "1"]]})
    for a in range(2):
        for b in range(2):
            for c in range(2):
                if a == b == c == 0:
                    continue
                normal.append({"sector": [a, b, c], "component": 0, "lines": [[root2q, "1"]]})
    doc["normal"] = normal
    doc["eigen"] = [{"sector": [1], "component": 0, "entries": [{"alpha": "1/2", "lines": [[root2q, "1"]]}]}]

    doubles = [
        {"g": [0, 0], "component": 0, "e1": pull(0, identity(6)), "e2": pull(0, identity(6)),
         "mu": mu(0, identity(6), identity(6)), "sigma_mu": pull(0, identity(6))},
        {"g": [0, 1], "component": 0, "e1": pull(0, restrict_m), "e2": pull(0, one2),
         "mu": mu(0, one2, one2), "sigma_mu": pull(0, one2)},
        {"g": [1, 0], "component": 0, "e1": pull(0, one2), "e2": pull(0, restrict_m),
         "mu": mu(0, one2, one2), "sigma_mu": pull(0, one2)},
        {"g": [1, 1], "component": 0, "e1": pull(0, one2), "e2": pull(0, one2),
         "mu": mu(0, restrict_m, include_m), "sigma_mu": pull(0, restrict_m)},
    ]

    def dpull(a, b):
        return pull(0, restrict_m) if a == b == 0 else pull(0, one2)

    def spull(g):
        return pull(0, restrict_m) if g == 0 else pull(0, one2)

    tcorr = []
    for a in range(2):
        for b in range(2):
            for c in range(2):
                if a == b == c == 0:
                    tcorr.append({"g": [0, 0, 0], "component": 0,
                                  "e12": pull(0, identity(6)), "e23": pull(0, identity(6)),
                                  "mu12_3": pull(0, identity(6)), "mu1_23": pull(0, identity(6)),
                                  "j1": pull(0, identity(6)), "j2": pull(0, identity(6)),
                                  "j3": pull(0, identity(6)), "j4": pull(0, identity(6))})
                    continue
                tcorr.append({"g": [a, b, c], "component": 0,
                              "e12": dpull(a, b), "e23": dpull(b, c),
                              "mu12_3": dpull(a ^ b, c), "mu1_23": dpull(a, b ^ c),
                              "j1": spull(a), "j2": spull(b), "j3": spull(c), "j4": spull(a ^ b ^ c)})
    doc["correspondences"] = {
        "sigma": [
            {"g": 0, "component": 0, "to_component": 0, "matrix": identity(6)},
            {"g": 1, "component": 0, "to_component": 0, "matrix": one2},
        ],
        "double": doubles,
        "triple": tcorr,
    }
    swap = mat([
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [0, 0, 0, 0, 1, 0],
        [0, 0, 0, 0, 0, -1],
    ])
    doc["gaction"] = [
        {"h": 1, "maps": [
            {"g": 0, "component": 0, "to_component": 0, "matrix": swap},
            {"g": 1, "component": 0, "to_component": 0, "matrix": one2},
        ]}
    ]
    return doc


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "corpus")
    os.makedirs(out_dir, exist_ok=True)
    z3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    files = {
        "bg_z2.json": point_fixture({"table": [[0, 1], [1, 0]]}, 2),
        "bg_s3.json": point_fixture(
            {"permutation_generators": {"degree": 3, "perms": [[1, 0, 2], [1, 2, 0]]}}, 6),
        "c2_z2.json": cone_fixture([[0, 1], [1, 0]], {1: [("1/2", 2)]}),
        "c2_z3.json": cone_fixture(z3, {1: [("1/3", 1), ("2/3", 1)], 2: [("1/3", 1), ("2/3", 1)]}),
        "kummer.json": kummer_fixture(),
        "kummer_resolution.json": kummer_resolution(),
        "kummer_iso.json": kummer_iso(),
        "signs_z2.json": signs_fixture(),
    }
    for name, doc in files.items():
        path = os.path.join(out_dir, name)
        with open(path, "w") as f:
            json.dump(doc, f, indent=1)
            f.write("\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
