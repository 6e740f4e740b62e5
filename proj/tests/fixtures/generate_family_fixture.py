#!/usr/bin/env python3
"""Independent expansion of the 18-dimensional bracket at the example
coefficients (a,b,c,d,a1,a2,a3) = (0, 1, -1/2, 0, 1, -1, 0).

This script shares no code with the C++ implementation: the cross products,
the quaternion multiplication table and the bilinear bracket formula are
spelled out from scratch, and the output is frozen as
family_structure_example.json in the sparse-triple serialization
({dim, basis_names, structure: [[i, j, k, "coeff"], ...]}, i < j).
"""

import json
from fractions import Fraction
from pathlib import Path

A, B, C, D, A1, A2, A3 = (
    Fraction(0),
    Fraction(1),
    Fraction(-1, 2),
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(0),
)

ETA = [-1, 1, 1]


def lorentz_cross(u, v):
    # (u x v)^a = eta^{aa} eps_{acd} u^c v^d with eps_{012} = +1
    eps = {}
    for (x, y, z), s in [((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                         ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)]:
        eps[(x, y, z)] = s
    out = [Fraction(0)] * 3
    for a in range(3):
        s = Fraction(0)
        for c in range(3):
            for d in range(3):
                if (a, c, d) in eps:
                    s += eps[(a, c, d)] * u[c] * v[d]
        out[a] = Fraction(1, ETA[a]) * s
    return out


def euclid_cross(p, q):
    return [p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]]


# quaternion multiplication on coordinates (1, i, j, k)
def quat_mul(p, q):
    p0, pv = p[0], p[1:]
    q0, qv = q[0], q[1:]
    dot = sum(x * y for x, y in zip(pv, qv))
    cr = euclid_cross(pv, qv)
    return [p0 * q0 - dot] + [p0 * qv[m] + q0 * pv[m] + cr[m] for m in range(3)]


def unit3(i):
    v = [Fraction(0)] * 3
    v[i] = Fraction(1)
    return v


def unit4(i):
    v = [Fraction(0)] * 4
    v[i] = Fraction(1)
    return v


DIM = 18


def m_index(u, beta):
    return 6 + 4 * u + beta


def zero_vec():
    return [Fraction(0)] * DIM


def bracket_basis(i, j):
    """[e_i, e_j] for basis indices, from the displayed formulas only."""
    out = zero_vec()

    def is_l(t):
        return t < 3

    def is_c(t):
        return 3 <= t < 6

    if is_l(i) and is_l(j):
        cr = lorentz_cross(unit3(i), unit3(j))
        for k in range(3):
            out[k] = cr[k]
        return out
    if is_c(i) and is_c(j):
        cr = euclid_cross(unit3(i - 3), unit3(j - 3))
        for k in range(3):
            out[3 + k] = 2 * cr[k]
        return out
    if (is_l(i) and is_c(j)) or (is_c(i) and is_l(j)):
        return out
    if is_l(i) and i < 3 and j >= 6:
        u, beta = divmod(j - 6, 4)
        cr = lorentz_cross(unit3(i), unit3(u))
        for w in range(3):
            out[m_index(w, beta)] = cr[w]
        return out
    if is_c(i) and j >= 6:
        u, beta = divmod(j - 6, 4)
        em = unit4(i - 3 + 1)
        comm = [x - y for x, y in zip(quat_mul(em, unit4(beta)), quat_mul(unit4(beta), em))]
        for g in range(4):
            out[m_index(u, g)] = comm[g]
        return out
    if i >= 6 and j < 6:
        return [-x for x in bracket_basis(j, i)]
    # both in m: the seven-coefficient display
    u, bp = divmod(i - 6, 4)
    v, bq = divmod(j - 6, 4)
    p0 = Fraction(1) if bp == 0 else Fraction(0)
    q0 = Fraction(1) if bq == 0 else Fraction(0)
    pvec = unit3(bp - 1) if bp >= 1 else [Fraction(0)] * 3
    qvec = unit3(bq - 1) if bq >= 1 else [Fraction(0)] * 3
    dot = sum(x * y for x, y in zip(pvec, qvec))
    eta_uv = Fraction(ETA[u]) if u == v else Fraction(0)
    cr_uv = lorentz_cross(unit3(u), unit3(v))
    # (a p0 q0 + b <p,q>) K(u x v)
    coeff_l = A * p0 * q0 + B * dot
    for k in range(3):
        out[k] += coeff_l * cr_uv[k]
    # eta(u,v) (c iota(p x q) + d iota(p0 q - q0 p))
    if eta_uv:
        cpq = euclid_cross(pvec, qvec)
        for k in range(3):
            out[3 + k] += eta_uv * (C * cpq[k] + D * (p0 * qvec[k] - q0 * pvec[k]))
    # (u x v) (a1 p0 q0 + a2 <p,q> + a3/2 (p0 q + q0 p))
    coeff_re = A1 * p0 * q0 + A2 * dot
    for w in range(3):
        out[m_index(w, 0)] += coeff_re * cr_uv[w]
        for k in range(3):
            out[m_index(w, k + 1)] += cr_uv[w] * A3 / 2 * (p0 * qvec[k] + q0 * pvec[k])
    return out


def main():
    names = ["L0", "L1", "L2", "C1", "C2", "C3"]
    for u in range(3):
        for q in "1ijk":
            names.append(f"e{u}x{q}")
    triples = []
    for i in range(DIM):
        for j in range(i + 1, DIM):
            br = bracket_basis(i, j)
            for k in range(DIM):
                if br[k]:
                    triples.append([i, j, k, str(br[k])])
    doc = {"dim": DIM, "basis_names": names, "structure": triples}
    out = Path(__file__).with_name("family_structure_example.json")
    out.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {out} with {len(triples)} triples")


if __name__ == "__main__":
    main()
