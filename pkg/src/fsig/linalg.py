"""Exact dense linear algebra over GF(p) and multiplication-map ranks.

Ranks are computed by blocked right-looking LU in floating point with
BLAS trailing updates.  Block sizes are capped so every intermediate dot
product stays below the float mantissa, which keeps the arithmetic exact
before each reduction mod p.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from .poly import Polynomial

_F32_LIMIT = 2**24
_F64_LIMIT = 2**53
_MAX_BLOCK = 128
_MAX_DENSE = 4000
_MAX_BOX = 40_000_000


def _plan(p: int) -> tuple[type | None, int]:
    """Dtype and block cap keeping b*(p-1)^2 below the mantissa limit."""
    unit = (p - 1) ** 2
    if unit == 0:
        return np.float32, _MAX_BLOCK
    b32 = (_F32_LIMIT - 1) // unit
    if b32 >= 8:
        return np.float32, min(_MAX_BLOCK, int(b32))
    b64 = (_F64_LIMIT - 1) // unit
    if b64 >= 1:
        return np.float64, min(_MAX_BLOCK, int(b64))
    return None, 0


def _rank_inplace(A: np.ndarray, p: int, block: int) -> int:
    """LU rank of A, destroying A; entries must already be residues."""
    m, n = A.shape
    rank = 0
    col = 0
    while rank < m and col < n:
        b = min(block, n - col)
        pivcols: list[int] = []
        r = rank
        for j in range(col, col + b):
            if r >= m:
                break
            nz = np.nonzero(A[r:m, j])[0]
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                A[[r, piv], :] = A[[piv, r], :]
            inv = float(pow(int(A[r, j]), p - 2, p))
            if r + 1 < m:
                mults = np.mod(A[r + 1 : m, j] * inv, p)
                A[r + 1 : m, j] = mults
                if j + 1 < col + b:
                    A[r + 1 : m, j + 1 : col + b] = np.mod(
                        A[r + 1 : m, j + 1 : col + b]
                        - np.outer(mults, A[r, j + 1 : col + b]),
                        p,
                    )
            pivcols.append(j)
            r += 1
        k = len(pivcols)
        if k and col + b < n:
            trail = A[rank : rank + k, col + b : n]
            lower = A[rank : rank + k, pivcols]
            for i in range(1, k):
                trail[i] = np.mod(trail[i] - lower[i, :i] @ trail[:i], p)
            below = A[rank + k : m, pivcols]
            if below.shape[0]:
                A[rank + k : m, col + b : n] = np.mod(
                    A[rank + k : m, col + b : n] - below @ trail, p
                )
        rank += k
        col += b
    return rank


def rank_mod_p(matrix, p: int) -> int:
    """Rank of an integer matrix over GF(p)."""
    A = np.asarray(matrix)
    if A.ndim != 2:
        raise ValueError("expected a two dimensional array")
    m, n = A.shape
    if m == 0 or n == 0:
        return 0
    dtype, block = _plan(p)
    if dtype is None:
        return rank_mod_p_reference(A.tolist(), p)
    A = np.mod(A, p).astype(dtype)
    return _rank_inplace(A, p, block)


def rank_mod_p_reference(rows: Sequence[Sequence[int]], p: int) -> int:
    """Plain Gaussian elimination in Python integers; the slow reference."""
    work = [[int(x) % p for x in row] for row in rows]
    if not work or not work[0]:
        return 0
    ncols = len(work[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = pow(work[r][c], p - 2, p)
        work[r] = [(v * inv) % p for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def rational_nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> list[tuple[Fraction, ...]]:
    """Basis of the rational kernel of the matrix given by ``rows``."""
    work = [list(map(Fraction, row)) for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = 1 / work[r][c]
        work[r] = [v * inv for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    basis = []
    free = [c for c in range(width) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * width
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -work[i][fc]
        basis.append(tuple(vec))
    return basis


def _primitive_integer(vec: Sequence[Fraction]) -> tuple[int, ...]:
    denom = math.lcm(*(f.denominator for f in vec))
    ints = [int(f * denom) for f in vec]
    g = math.gcd(*ints)
    if g:
        ints = [v // g for v in ints]
    return tuple(ints)


def find_positive_weights(f: Polynomial) -> tuple[int, ...] | None:
    """Positive integer weights making f homogeneous, or None.

    The difference vectors of the exponents span the constraints; small
    integer combinations of their rational kernel basis are scanned for a
    strictly positive vector.
    """
    d = f.nvars
    if d == 0:
        return ()
    exps = list(f.terms)
    if len(exps) <= 1:
        return (1,) * d
    ones = (1,) * d
    if f.is_homogeneous(ones):
        return ones
    anchor = exps[0]
    rows = [[Fraction(e[i] - anchor[i]) for i in range(d)] for e in exps[1:]]
    basis = rational_nullspace(rows, d)
    if not basis:
        return None
    k = len(basis)
    combos: list[tuple[int, ...]] = [(1,) * k]
    if k <= 4:
        grid = sorted(product(range(-6, 7), repeat=k), key=lambda c: sum(abs(x) for x in c))
        combos += [c for c in grid if any(c)]
    else:
        for i in range(k):
            unit = [0] * k
            unit[i] = 1
            combos.append(tuple(unit))
            unit[i] = -1
            combos.append(tuple(unit))
    for c in combos:
        w = [sum(ci * b[i] for ci, b in zip(c, basis)) for i in range(d)]
        if all(wi > 0 for wi in w):
            return _primitive_integer(w)
    return None


def _box_exponents(caps: Sequence[int]) -> tuple[np.ndarray, np.ndarray]:
    """All exponent vectors below ``caps`` plus the flat-index strides."""
    caps = tuple(int(c) for c in caps)
    total = math.prod(caps)
    if total > _MAX_BOX:
        raise ValueError(f"monomial box of size {total} is too large to enumerate")
    flat = np.arange(total, dtype=np.int64)
    exps = np.stack(np.unravel_index(flat, caps), axis=1).astype(np.int32)
    strides = np.ones(len(caps), dtype=np.int64)
    for i in range(len(caps) - 2, -1, -1):
        strides[i] = strides[i + 1] * caps[i + 1]
    return exps, strides


def _block_matrix(
    g: Polynomial,
    caps_arr: np.ndarray,
    exps: np.ndarray,
    strides: np.ndarray,
    pos: np.ndarray,
    src: np.ndarray,
    n_tgt: int,
    dtype,
) -> np.ndarray:
    # one entry per (source monomial, term): targets collide only for
    # equal term exponents, so plain assignment is safe
    mat = np.zeros((n_tgt, len(src)), dtype=dtype)
    src_exps = exps[src].astype(np.int64)
    for t, c in g.terms.items():
        shifted = src_exps + np.asarray(t, dtype=np.int64)
        valid = np.all(shifted < caps_arr, axis=1)
        if not valid.any():
            continue
        flats = shifted[valid] @ strides
        mat[pos[flats], np.nonzero(valid)[0]] = c
    return mat


def multiplication_rank(
    g: Polynomial,
    caps: Sequence[int],
    weights: Sequence[int] | None = None,
    use_duality: bool = True,
) -> int:
    """Rank of multiplication by g on GF(p)[x]/(x_i^{caps_i}).

    With positive ``weights`` under which g is homogeneous the map is
    computed blockwise per weighted degree; the quotient pairs perfectly
    into its socle degree, so blocks past the midpoint mirror the early
    ones and are not rebuilt.
    """
    p = g.p
    caps = tuple(int(c) for c in caps)
    if len(caps) != g.nvars:
        raise ValueError("caps length must match the number of variables")
    if any(c <= 0 for c in caps):
        return 0
    if g.is_zero():
        return 0
    total = math.prod(caps)
    if g.is_monomial():
        t = next(iter(g.terms))
        return math.prod(max(c - e, 0) for c, e in zip(caps, t))
    dtype, block = _plan(p)
    if dtype is None:
        raise ValueError(f"characteristic {p} too large for the dense backend")
    if weights is None:
        if total > _MAX_DENSE:
            raise ValueError(
                "quotient too large for a dense ungraded rank; supply weights"
            )
        exps, strides = _box_exponents(caps)
        caps_arr = np.asarray(caps, dtype=np.int64)
        everything = np.arange(total, dtype=np.int64)
        mat = _block_matrix(g, caps_arr, exps, strides, everything, everything, total, dtype)
        return _rank_inplace(mat, p, block)
    weights = tuple(int(w) for w in weights)
    if any(w <= 0 for w in weights):
        raise ValueError("weights must be positive")
    if not g.is_homogeneous(weights):
        raise ValueError("polynomial is not homogeneous under the given weights")
    deg_g = g.weighted_degree(weights)
    exps, strides = _box_exponents(caps)
    caps_arr = np.asarray(caps, dtype=np.int64)
    degrees = exps @ np.asarray(weights, dtype=np.int64)
    order = np.argsort(degrees, kind="stable")
    sorted_degs = degrees[order]
    uniq, starts = np.unique(sorted_degs, return_index=True)
    ends = np.append(starts[1:], len(sorted_degs))
    blocks: dict[int, np.ndarray] = {}
    pos = np.empty(total, dtype=np.int64)
    for val, a, b in zip(uniq.tolist(), starts.tolist(), ends.tolist()):
        idx = order[a:b]
        blocks[val] = idx
        pos[idx] = np.arange(b - a, dtype=np.int64)
    socle = sum(w * (c - 1) for w, c in zip(weights, caps))
    center = socle - deg_g
    rank = 0
    for j, src in blocks.items():
        if use_duality and 2 * j > center:
            continue
        tgt = blocks.get(j + deg_g)
        if tgt is None or len(tgt) == 0:
            block_rank = 0
        else:
            mat = _block_matrix(g, caps_arr, exps, strides, pos, src, len(tgt), dtype)
            block_rank = _rank_inplace(mat, p, block)
        if use_duality and 2 * j < center:
            rank += 2 * block_rank
        else:
            rank += block_rank
    return rank


def box_dimension(caps: Sequence[int]) -> int:
    """Vector space dimension of GF(p)[x]/(x_i^{caps_i})."""
    return math.prod(int(c) for c in caps)
