"""Brute-force reference implementations used only by the test suite.

Everything here trades efficiency for obviousness: direct enumeration,
no Groebner bases, no lattice transforms, no linear algebra beyond
what the statement itself demands.  Production code must agree with
these on every case small enough to enumerate.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from fsig.poly import Polynomial, iter_box_monomials


def invariant_monomial_count(n: int, weights: tuple[int, ...], q: int) -> int:
    """#{u in [0,q)^d : sum(w_i u_i) = 0 mod n}.

    For a small cyclic quotient these are exactly the free summands of
    the e-th Frobenius pushforward, counted one ambient residue at a
    time.
    """
    count = 0
    for u in itertools.product(range(q), repeat=len(weights)):
        if sum(w * x for w, x in zip(weights, u)) % n == 0:
            count += 1
    return count


def brute_invariant_hilbert_basis(n: int, weights: tuple[int, ...], degree_bound: int = 40) -> set:
    """Minimal generators of the invariant-monomial semigroup, by enumeration.

    Collects every nonzero invariant exponent vector up to the degree
    bound and discards those that split as a sum of two smaller ones.
    The bound must exceed twice the largest generator degree for the
    answer to be trustworthy; callers pick it per case.
    """
    d = len(weights)
    members = set()
    for u in itertools.product(range(degree_bound + 1), repeat=d):
        if sum(u) == 0 or sum(u) > degree_bound:
            continue
        if sum(w * x for w, x in zip(weights, u)) % n == 0:
            members.add(u)
    generators = set()
    for u in members:
        splits = any(
            tuple(a - b for a, b in zip(u, v)) in members
            for v in members
            if v != u and all(b <= a for a, b in zip(u, v))
        )
        if not splits:
            generators.add(u)
    return generators


def brute_colon_complement_length(g: Polynomial, q: int) -> int:
    """lambda(P/(m^[q] : g)) by direct linear algebra over GF(p).

    Builds the full matrix of multiplication by g on the monomial basis
    of P/m^[q] (one row per box monomial, entries read off from the
    product reduced mod m^[q]) and row-reduces it with textbook Gaussian
    elimination.  The row rank is the length of the colon quotient:
    P/(m^[q] : g) embeds into P/m^[q] as the image of the map.
    """
    p = g.p
    box = list(iter_box_monomials((q,) * g.nvars))
    col = {m: i for i, m in enumerate(box)}
    rows = []
    for mu in box:
        prod = g.multiply_monomial(mu)
        row = [0] * len(box)
        nonzero = False
        for m, c in prod.terms.items():
            if all(e < q for e in m):
                row[col[m]] = c % p
                nonzero = True
        if nonzero:
            rows.append(row)
    rank = 0
    ncols = len(box)
    pivot_col = 0
    while rows and pivot_col < ncols:
        pivot_row = next((r for r in rows if r[pivot_col] % p), None)
        if pivot_row is None:
            pivot_col += 1
            continue
        rows.remove(pivot_row)
        inv = pow(pivot_row[pivot_col], p - 2, p)
        pivot_row = [(inv * x) % p for x in pivot_row]
        rows = [
            [(x - r[pivot_col] * v) % p for x, v in zip(r, pivot_row)]
            if r[pivot_col] % p
            else r
            for r in rows
        ]
        rank += 1
        pivot_col += 1
    return rank


def brute_window_count(normals, q: int, caps: tuple[int, ...] | None = None) -> int:
    """#{c in Z^d : 0 <= <v_F, c> <= cap_F for all F} by grid search.

    Enumerates intrinsic coordinates c over a crude bounding box derived
    from the constraint polytope; correct whenever the polytope is
    bounded, which the callers guarantee by passing simplicial data.
    """
    from fsig.toric import fraction_matrix_inverse

    d = len(normals[0])
    caps = caps if caps is not None else (q - 1,) * len(normals)
    inv = fraction_matrix_inverse([list(v) for v in normals])
    # c = A^{-1} y with 0 <= y_F <= cap_F bounds each |c_i| explicitly.
    box = max(
        int(sum(abs(inv[i][j]) * caps[j] for j in range(d))) + 1 for i in range(d)
    )
    count = 0
    for c in itertools.product(range(-box, box + 1), repeat=d):
        ok = True
        for v, cap in zip(normals, caps):
            val = sum(a * b for a, b in zip(v, c))
            if val < 0 or val > cap:
                ok = False
                break
        if ok:
            count += 1
    return count


def normalized_window_fraction(normals, q: int) -> Fraction:
    """Window count over q^d, the discrete approximation of the volume
    of {0 <= <v_F, x> <= 1}; exact toric signatures must agree with its
    q -> infinity limit and stay within O(1/q) of it at finite q.
    """
    d = len(normals[0])
    return Fraction(brute_window_count(normals, q, (q - 1,) * len(normals)), q**d)
