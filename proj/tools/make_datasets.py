#!/usr/bin/env python3
"""Generate the bundled group, irrep and system-rep datasets under data/.

Element orderings are fixed here and everything downstream is index-based,
so this script is the single source of truth for the conventions:
  - cyclic Z_n: elements 0..n-1
  - S3: permutations of {0,1,2} in lexicographic one-line order,
        composition (g*h)(x) = g(h(x))
  - D4: [e, r, r^2, r^3, s, sr, sr^2, sr^3], r = 90-degree rotation,
        s = reflection about the x axis
  - Q8: [1, -1, i, -i, j, -j, k, -k] via the standard 2x2 complex matrices
  - H(Z_n), n odd: triples (theta, a, v) with index theta*n^2 + a*n + v and
        (t1,a1,v1)*(t2,a2,v2) = (t1+t2+(a2*v1-a1*v2)/2, a1+a2, v1+v2) mod n
"""

import cmath
import itertools
import json
import math
import os

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def cx(z, tol=1e-15):
    re = z.real if abs(z.real) > tol else 0.0
    im = z.imag if abs(z.imag) > tol else 0.0
    return [re, im]


def matrix(rows):
    return [[cx(complex(v)) for v in row] for row in rows]


def write(path, obj):
    full = os.path.join(OUT, path)
    os.makedirs(os.path.dirname(full), exist_ok=True)
    with open(full, "w") as f:
        json.dump(obj, f, indent=1)
        f.write("\n")
    print(full)


def group_from_mult(name, mult):
    return {"name": name, "order": len(mult), "mult": mult}


def mult_from_matrices(mats, tol=1e-9):
    n = len(mats)

    def close(a, b):
        return all(
            abs(a[i][j] - b[i][j]) < tol
            for i in range(len(a))
            for j in range(len(a))
        )

    def mat_mul(a, b):
        d = len(a)
        return [
            [sum(a[i][k] * b[k][j] for k in range(d)) for j in range(d)]
            for i in range(d)
        ]

    mult = []
    for g in range(n):
        row = []
        for h in range(n):
            p = mat_mul(mats[g], mats[h])
            idx = [k for k in range(n) if close(p, mats[k])]
            assert len(idx) == 1, (g, h)
            row.append(idx[0])
        mult.append(row)
    return mult


def cyclic(n):
    return [[(g + h) % n for h in range(n)] for g in range(n)]


def cyclic_irreps(n):
    w = cmath.exp(2j * math.pi / n)
    return [
        {
            "label": f"chi{k}",
            "dim": 1,
            "matrices": [matrix([[w ** (k * g)]]) for g in range(n)],
        }
        for k in range(n)
    ]


def s3_data():
    perms = sorted(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    mult = [
        [idx[tuple(g[h[x]] for x in range(3))] for h in perms] for g in perms
    ]

    def sign(p):
        s = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if p[i] > p[j]:
                    s = -s
        return s

    # standard 2-dim irrep: permutation action restricted to the plane
    # orthogonal to (1,1,1)
    b = [
        [1 / math.sqrt(2), 1 / math.sqrt(6)],
        [-1 / math.sqrt(2), 1 / math.sqrt(6)],
        [0.0, -2 / math.sqrt(6)],
    ]

    def std(p):
        # D = B^T P B with P the permutation matrix P[p[x]][x] = 1
        out = [[0.0, 0.0], [0.0, 0.0]]
        for i in range(2):
            for j in range(2):
                out[i][j] = sum(b[p[x]][i] * b[x][j] for x in range(3))
        return out

    irreps = [
        {"label": "triv", "dim": 1, "matrices": [matrix([[1]]) for _ in perms]},
        {
            "label": "sign",
            "dim": 1,
            "matrices": [matrix([[sign(p)]]) for p in perms],
        },
        {"label": "std", "dim": 2, "matrices": [matrix(std(p)) for p in perms]},
    ]
    return mult, irreps


def d4_data():
    r = [[0.0, -1.0], [1.0, 0.0]]
    s = [[1.0, 0.0], [0.0, -1.0]]

    def mat_mul(a, b):
        return [
            [sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)
        ]

    e = [[1.0, 0.0], [0.0, 1.0]]
    rots = [e]
    for _ in range(3):
        rots.append(mat_mul(r, rots[-1]))
    mats = rots + [mat_mul(s, m) for m in rots]
    mult = mult_from_matrices(mats)
    chars = []
    for cr, cs in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        vals = [cr ** k for k in range(4)] + [cs * cr ** k for k in range(4)]
        chars.append(vals)
    irreps = [
        {
            "label": lab,
            "dim": 1,
            "matrices": [matrix([[v]]) for v in vals],
        }
        for lab, vals in zip(["a1", "a2", "b1", "b2"], chars)
    ]
    irreps.append(
        {"label": "e2", "dim": 2, "matrices": [matrix(m) for m in mats]}
    )
    return mult, irreps


def q8_data():
    i2 = [[1, 0], [0, 1]]
    qi = [[1j, 0], [0, -1j]]
    qj = [[0, 1], [-1, 0]]
    qk = [[0, 1j], [1j, 0]]

    def neg(m):
        return [[-v for v in row] for row in m]

    mats = [i2, neg(i2), qi, neg(qi), qj, neg(qj), qk, neg(qk)]
    mult = mult_from_matrices([[complex(v) for v in row] for row in m] for m in mats) \
        if False else mult_from_matrices(mats)
    chars = []
    for ci, cj in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
        # character on Q8/{+-1}: value on [1,-1,i,-i,j,-j,k,-k]
        ck = ci * cj
        chars.append([1, 1, ci, ci, cj, cj, ck, ck])
    irreps = [
        {
            "label": lab,
            "dim": 1,
            "matrices": [matrix([[v]]) for v in vals],
        }
        for lab, vals in zip(["triv", "ki", "kj", "kk"], chars)
    ]
    irreps.append(
        {"label": "e2", "dim": 2, "matrices": [matrix(m) for m in mats]}
    )
    return mult, irreps


def heis_data(n):
    assert n % 2 == 1
    inv2 = pow(2, -1, n)

    def index(t, a, v):
        return (t * n + a) * n + v

    elems = [(t, a, v) for t in range(n) for a in range(n) for v in range(n)]
    mult = []
    for (t1, a1, v1) in elems:
        row = []
        for (t2, a2, v2) in elems:
            phi = ((a2 * v1 - a1 * v2) * inv2) % n
            row.append(index((t1 + t2 + phi) % n, (a1 + a2) % n, (v1 + v2) % n))
        mult.append(row)

    w = cmath.exp(2j * math.pi / n)
    irreps = []
    for r in range(n):
        for s in range(n):
            irreps.append(
                {
                    "label": f"chi{r}{s}",
                    "dim": 1,
                    "matrices": [
                        matrix([[w ** (r * a + s * v)]]) for (t, a, v) in elems
                    ],
                }
            )
    # Weyl representations with nontrivial central character w^k:
    # D(t,a,v)|j> = w^{k(t + inv2*a*v + v*j)} |j+a>
    for k in range(1, n):
        mats = []
        for (t, a, v) in elems:
            m = [[0j] * n for _ in range(n)]
            for j in range(n):
                m[(j + a) % n][j] = w ** (k * (t + inv2 * a * v + v * j))
            mats.append(matrix(m))
        irreps.append({"label": f"weyl{k}", "dim": n, "matrices": mats})
    return mult, irreps


def rep_from_irreps(name, irreps, picks):
    """Direct sum of the picked irreps as a standalone system rep."""
    by_label = {ir["label"]: ir for ir in irreps}
    dims = [by_label[p]["dim"] for p in picks]
    total = sum(dims)
    nelem = len(by_label[picks[0]]["matrices"])
    mats = []
    for g in range(nelem):
        m = [[[0.0, 0.0] for _ in range(total)] for _ in range(total)]
        off = 0
        for p in picks:
            blk = by_label[p]["matrices"][g]
            d = by_label[p]["dim"]
            for i in range(d):
                for j in range(d):
                    m[off + i][off + j] = blk[i][j]
            off += d
        mats.append(m)
    return {"name": name, "dim": total, "matrices": mats}


def main():
    for n in (2, 3, 6, 12):
        name = f"z{n}"
        write(f"groups/{name}.json", group_from_mult(name, cyclic(n)))
        write(
            f"irreps/{name}.json",
            {"group": name, "irreps": cyclic_irreps(n)},
        )

    for name, (mult, irreps) in [
        ("s3", s3_data()),
        ("d4", d4_data()),
        ("q8", q8_data()),
        ("heis3", heis_data(3)),
    ]:
        write(f"groups/{name}.json", group_from_mult(name, mult))
        write(f"irreps/{name}.json", {"group": name, "irreps": irreps})

    # system representations used by the verification suites and demos
    write(
        "reps/z2_flip.json",
        {
            "name": "z2_flip",
            "dim": 2,
            "matrices": [
                matrix([[1, 0], [0, 1]]),
                matrix([[0, 1], [1, 0]]),
            ],
        },
    )
    w3 = cyclic_irreps(3)
    write("reps/z3_sum12.json", rep_from_irreps("z3_sum12", w3, ["chi1", "chi2"]))
    w2 = cyclic_irreps(2)
    write("reps/z2_sum01.json", rep_from_irreps("z2_sum01", w2, ["chi0", "chi1"]))
    _, s3irr = s3_data()
    write("reps/s3_std.json", rep_from_irreps("s3_std", s3irr, ["std"]))
    _, h3irr = heis_data(3)
    write("reps/heis3_weyl1.json", rep_from_irreps("heis3_weyl1", h3irr, ["weyl1"]))
    w6 = cyclic_irreps(6)
    write("reps/z6_sum15.json", rep_from_irreps("z6_sum15", w6, ["chi1", "chi5"]))
    for name in ("z2", "z3", "s3", "z6", "d4", "q8", "heis3"):
        write(
            f"reps/{name}_trivial.json",
            {
                "name": f"{name}_trivial",
                "dim": 1,
                "matrices": [
                    matrix([[1]])
                    for _ in range(
                        {"z2": 2, "z3": 3, "s3": 6, "z6": 6, "d4": 8,
                         "q8": 8, "heis3": 27}[name]
                    )
                ],
            },
        )


if __name__ == "__main__":
    main()
