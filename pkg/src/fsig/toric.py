"""Exact F-signature machinery for simplicial affine semigroup rings.

A ring is presented by the primitive facet normals of its semigroup
inside the intrinsic lattice Z^d, together with an embedding matrix
mapping intrinsic coordinates to ambient monomial exponents.  Splitting
numbers are certified class by class: a residue class of M/qM is free
exactly when it contains a lattice point pairing into [0, q-1] with every
facet normal, and such a window point is provably the unique minimal
element of its class.  The F-signature is the exact rational volume of
the limiting window polytope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Vector = tuple[int, ...]


# -- small exact linear algebra over Z / Q --------------------------------


def primitive_vector(v: Sequence[int]) -> Vector:
    g = math.gcd(*(int(x) for x in v))
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(int(x) // g for x in v)


def fraction_matrix_inverse(rows: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    d = len(rows)
    work = [[Fraction(rows[i][j]) for j in range(d)] + [Fraction(int(i == j)) for j in range(d)] for i in range(d)]
    for c in range(d):
        piv = next((i for i in range(c, d) if work[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        work[c], work[piv] = work[piv], work[c]
        inv = 1 / work[c][c]
        work[c] = [x * inv for x in work[c]]
        for i in range(d):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return [row[d:] for row in work]


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    d = len(rows)
    work = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for c in range(d):
        piv = next((i for i in range(c, d) if work[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            det = -det
        det *= work[c][c]
        inv = 1 / work[c][c]
        for i in range(c + 1, d):
            if work[i][c] != 0:
                f = work[i][c] * inv
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    assert det.denominator == 1
    return int(det)


def adjugate(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], int]:
    """Integer adjugate and determinant, with adj(A) @ A = det * I."""
    det = integer_det(rows)
    if det == 0:
        raise ValueError("matrix is singular")
    inv = fraction_matrix_inverse(rows)
    adj = []
    for row in inv:
        out = []
        for x in row:
            y = x * det
            assert y.denominator == 1
            out.append(int(y))
        adj.append(out)
    return adj, det


def row_reduction_transform(row: Sequence[int]) -> tuple[int, list[Vector]]:
    """Unimodular columns turning ``row`` into (g, 0, ..., 0).

    Returns g = gcd and the column vectors U_j with row . U_0 = g and
    row . U_j = 0 for j >= 1; the U_j form a basis of Z^m.
    """
    m = len(row)
    r = [int(x) for x in row]
    cols = [[int(i == j) for i in range(m)] for j in range(m)]
    pivot = next((i for i, x in enumerate(r) if x), None)
    if pivot is None:
        raise ValueError("zero row has full kernel; not supported here")
    if pivot != 0:
        r[0], r[pivot] = r[pivot], r[0]
        cols[0], cols[pivot] = cols[pivot], cols[0]
    for j in range(1, m):
        if r[j] == 0:
            continue
        g, s, t = _xgcd(r[0], r[j])
        a, b = r[0] // g, r[j] // g
        c0 = [s * cols[0][i] + t * cols[j][i] for i in range(m)]
        cj = [-b * cols[0][i] + a * cols[j][i] for i in range(m)]
        cols[0], cols[j] = c0, cj
        r[0], r[j] = g, 0
    if r[0] < 0:
        r[0] = -r[0]
        cols[0] = [-x for x in cols[0]]
    return r[0], [tuple(c) for c in cols]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_s, s = s, old_s - qt * s
        old_t, t = t, old_t - qt * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def solve_pairing(v: Sequence[int], target: int) -> Vector:
    """An integer z with <v, z> = target; v must be nonzero."""
    g, cols = row_reduction_transform(v)
    if target % g:
        raise ValueError(f"{target} is not a multiple of gcd {g}")
    k = target // g
    return tuple(k * x for x in cols[0])


def row_lattice_basis(gens: Sequence[Sequence[int]]) -> list[Vector]:
    """Echelon basis of the lattice spanned by the given integer rows."""
    ncols = len(gens[0])
    work = [list(map(int, g)) for g in gens if any(g)]
    basis: list[Vector] = []
    col = 0
    while col < ncols and work:
        pivots = [r for r in work if r[col] != 0]
        rest = [r for r in work if r[col] == 0]
        if not pivots:
            col += 1
            work = rest
            continue
        while len(pivots) > 1:
            pivots.sort(key=lambda r: abs(r[col]))
            p0 = pivots[0]
            reduced = [p0]
            for r in pivots[1:]:
                f = r[col] // p0[col]
                rr = [a - f * b for a, b in zip(r, p0)]
                if rr[col] != 0:
                    reduced.append(rr)
                elif any(rr):
                    rest.append(rr)
            pivots = reduced
        row = pivots[0]
        if row[col] < 0:
            row = [-x for x in row]
        basis.append(tuple(row))
        work = rest
        col += 1
    return basis


def congruence_lattice_basis(amb_weights: Sequence[int], n: int) -> list[Vector]:
    """Basis of the lattice {u in Z^d : sum a_i u_i = 0 mod n}."""
    d = len(amb_weights)
    row = list(amb_weights) + [n]
    _, cols = row_reduction_transform(row)
    basis = [c[:d] for c in cols[1:]]
    if len(basis) != d:
        raise ValueError("degenerate congruence data")
    return [tuple(b) for b in basis]


# -- divisors --------------------------------------------------------------


@dataclass(frozen=True)
class TorusQDivisor:
    """Rational coefficients on the torus-invariant prime divisors, one per facet."""

    coefficients: tuple[Fraction, ...]

    @classmethod
    def of(cls, coeffs: Iterable) -> TorusQDivisor:
        return cls(tuple(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls, nfacets: int) -> TorusQDivisor:
        return cls((Fraction(0),) * nfacets)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coefficients)

    def check_pair_range(self) -> None:
        for c in self.coefficients:
            if not (0 <= c < 1):
                raise ValueError(f"pair coefficient {c} outside [0, 1)")

    def __add__(self, other: TorusQDivisor) -> TorusQDivisor:
        self._match(other)
        return TorusQDivisor(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: TorusQDivisor) -> TorusQDivisor:
        self._match(other)
        return TorusQDivisor(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, s) -> TorusQDivisor:
        s = Fraction(s)
        return TorusQDivisor(tuple(s * c for c in self.coefficients))

    def _match(self, other: TorusQDivisor) -> None:
        if len(self.coefficients) != len(other.coefficients):
            raise ValueError("divisors live on different facet sets")


def divisor_round(delta: TorusQDivisor, scalar, mode: str) -> TorusQDivisor:
    """Componentwise floor or ceiling of scalar * delta, exactly."""
    s = Fraction(scalar)
    if mode == "floor":
        vals = [Fraction(math.floor(s * c)) for c in delta.coefficients]
    elif mode == "ceil":
        vals = [Fraction(math.ceil(s * c)) for c in delta.coefficients]
    else:
        raise ValueError(f"unknown rounding mode {mode!r}")
    return TorusQDivisor(tuple(vals))


# -- rings -----------------------------------------------------------------


class SimplicialityError(ValueError):
    """The cone is not simplicial; exact guarantees do not apply."""


@dataclass(frozen=True)
class RationalCone:
    """A full-dimensional simplicial cone given by its primitive ray generators.

    The rays live in the dual of the monomial lattice: a monomial exponent
    u belongs to the semigroup exactly when it pairs nonnegatively with
    every ray, so the rays double as the facet normals of the dual cone.
    """

    rays: tuple[Vector, ...]

    def __post_init__(self):
        d = len(self.rays[0]) if self.rays else 0
        if not self.rays or any(len(r) != d for r in self.rays):
            raise ValueError("rays must be nonempty vectors of equal length")
        if len(self.rays) != d:
            raise SimplicialityError(
                f"{len(self.rays)} rays in rank {d}; only simplicial cones are supported"
            )
        if integer_det(self.rays) == 0:
            raise ValueError("rays are linearly dependent; cone is not full-dimensional")
        for r in self.rays:
            if primitive_vector(r) != tuple(r):
                raise ValueError(f"ray {r} is not primitive")

    @property
    def dim(self) -> int:
        return len(self.rays)

    @property
    def facet_normals(self) -> tuple[Vector, ...]:
        return self.rays


class ToricRing:
    """A simplicial affine semigroup ring over GF(p).

    ``normals`` are the primitive facet pairings in intrinsic lattice
    coordinates; ``embedding`` maps intrinsic coordinates c to ambient
    monomial exponents u = c @ embedding.
    """

    def __init__(
        self,
        p: int,
        normals: Sequence[Sequence[int]],
        embedding: Sequence[Sequence[int]] | None = None,
        group_order: int | None = None,
        group_weights: tuple[int, ...] | None = None,
        small: bool | None = None,
        label: str = "",
    ):
        self.p = p
        self.normals: tuple[Vector, ...] = tuple(tuple(int(x) for x in row) for row in normals)
        self.d = len(self.normals)
        if any(len(row) != self.d for row in self.normals):
            raise SimplicialityError("facet normal matrix must be square (simplicial cone)")
        det = integer_det(self.normals)
        if det == 0:
            raise ValueError("facet normals are linearly dependent")
        for row in self.normals:
            if primitive_vector(row) != row:
                raise ValueError(f"facet normal {row} is not primitive")
        if embedding is None:
            embedding = [[int(i == j) for j in range(self.d)] for i in range(self.d)]
        self.embedding: tuple[Vector, ...] = tuple(tuple(int(x) for x in row) for row in embedding)
        self.group_order = group_order
        self.group_weights = group_weights
        self.small = small
        self.label = label or f"toric ring on {self.normals}"
        self._adj, self._det = adjugate(self.normals)
        self._hilbert: tuple[tuple[Vector, ...], int] | None = None

    @classmethod
    def regular(cls, p: int, d: int) -> ToricRing:
        eye = [[int(i == j) for j in range(d)] for i in range(d)]
        return cls(p, eye, label=f"regular rank {d}")

    @classmethod
    def from_cone(cls, cone: RationalCone, p: int) -> ToricRing:
        return cls(p, cone.facet_normals)

    # -- lattice plumbing --

    @property
    def index(self) -> int:
        return abs(self._det)

    @property
    def nfacets(self) -> int:
        return self.d

    def is_regular(self) -> bool:
        return self.index == 1

    def embed(self, c: Sequence[int]) -> Vector:
        return tuple(
            sum(int(c[i]) * self.embedding[i][j] for i in range(self.d))
            for j in range(len(self.embedding[0]))
        )

    def pairing(self, c: Sequence[int]) -> Vector:
        return tuple(sum(v[i] * int(c[i]) for i in range(self.d)) for v in self.normals)

    def in_semigroup(self, c: Sequence[int]) -> bool:
        return all(x >= 0 for x in self.pairing(c))

    def intrinsic_from_ambient(self, u: Sequence[int]) -> Vector | None:
        """Solve c @ embedding = u over the integers, or None."""
        emb_t = [[self.embedding[i][j] for i in range(self.d)] for j in range(len(u))]
        # embedding may be rectangular only in theory; here it is square
        adj, det = adjugate(emb_t)
        c = []
        for i in range(self.d):
            num = sum(adj[i][j] * int(u[j]) for j in range(self.d))
            if num % det:
                return None
            c.append(num // det)
        return tuple(c)

    def extreme_rays(self) -> list[Vector]:
        """Primitive generators of the semigroup cone, intrinsic coordinates."""
        inv = fraction_matrix_inverse(self.normals)
        rays = []
        for j in range(self.d):
            col = [inv[i][j] for i in range(self.d)]
            denom = math.lcm(*(x.denominator for x in col))
            vec = [int(x * denom) for x in col]
            rays.append(primitive_vector(vec))
        return rays

    def descent_vector(self, facet: int) -> Vector:
        """m with <v_facet, m> = -1 and <v_G, m> >= 0 for the other facets."""
        z = solve_pairing(self.normals[facet], -1)
        rays = self.extreme_rays()
        u_f = [sum(r[i] for j, r in enumerate(rays) if j != facet) for i in range(self.d)]
        n_shift = 0
        for g_idx in range(self.d):
            if g_idx == facet:
                continue
            num = -sum(self.normals[g_idx][i] * z[i] for i in range(self.d))
            den = sum(self.normals[g_idx][i] * u_f[i] for i in range(self.d))
            assert den > 0
            if num > 0:
                n_shift = max(n_shift, -(-num // den))
        m = tuple(z[i] + n_shift * u_f[i] for i in range(self.d))
        pairing = self.pairing(m)
        assert pairing[facet] == -1
        assert all(x >= 0 for i, x in enumerate(pairing) if i != facet)
        return m

    # -- Hilbert basis --

    def hilbert_basis(self) -> tuple[tuple[Vector, ...], int]:
        """Minimal generators in ambient coordinates plus the degree bound.

        The bound is the sum of the extreme-ray degrees; every semigroup
        element decomposes over the fundamental parallelepiped, so all
        generators lie below it.  The enumeration double-checks that every
        bounded element is a sum of generators.
        """
        if self._hilbert is not None:
            return self._hilbert
        rays = self.extreme_rays()
        deg = lambda c: sum(self.pairing(c))
        bound = sum(deg(r) for r in rays)
        elements = self._enumerate_by_degree(bound)
        elements.sort(key=lambda c: (deg(c), c))
        generators: list[Vector] = []
        for c in elements:
            if deg(c) == 0:
                continue
            if not self._decomposes(c, generators):
                generators.append(c)
        ambient = tuple(self.embed(c) for c in generators)
        self._hilbert = (ambient, bound)
        return self._hilbert

    def _decomposes(self, c: Vector, generators: list[Vector]) -> bool:
        for h in generators:
            rest = tuple(a - b for a, b in zip(c, h))
            if all(x >= 0 for x in self.pairing(rest)):
                return True
        return False

    def _enumerate_by_degree(self, bound: int) -> list[Vector]:
        """All semigroup elements with total facet degree <= bound."""
        out = []
        widths = [bound + 1] * self.d
        total = math.prod(widths)
        if total > 5_000_000:
            raise ValueError("degree bound too large to enumerate")
        grid = np.indices(widths).reshape(self.d, -1)
        adj = np.asarray(self._adj, dtype=np.int64)
        det = self._det
        ok = (adj @ grid) % abs(det) == 0
        mask = np.all(ok, axis=0) & (grid.sum(axis=0) <= bound)
        ys = grid[:, mask]
        cs = (adj @ ys) // det
        for k in range(cs.shape[1]):
            out.append(tuple(int(x) for x in cs[:, k]))
        return out

    def __repr__(self) -> str:
        return f"ToricRing(p={self.p}, {self.label})"


def quotient_singularity(n: int, weights: Sequence[int], p: int) -> ToricRing:
    """The invariant ring of the order-n cyclic action with the given weights.

    Records whether the action is small (free in codimension one): no
    group element fixes a hyperplane, equivalently for every 1 <= j < n
    at most d-2 of the j*a_i vanish mod n.
    """
    weights = tuple(int(a) % n if n > 1 else 0 for a in weights)
    d = len(weights)
    if d < 1:
        raise ValueError("need at least one weight")
    if n < 1:
        raise ValueError("n must be positive")
    if n > 1 and p > 0 and n % p == 0:
        raise ValueError(
            f"p = {p} divides n = {n}: the cover degree must be prime to p"
        )
    if n > 1 and math.gcd(n, *weights) != 1:
        raise ValueError("gcd(n, weights) must be 1")
    if n == 1:
        ring = ToricRing.regular(p, d)
        ring.group_order = 1
        ring.group_weights = weights
        ring.small = True
        ring.label = "regular (trivial quotient)"
        return ring
    small = True
    for j in range(1, n):
        fixed = sum(1 for a in weights if (j * a) % n == 0)
        if fixed > d - 2:
            small = False
            break
    basis = congruence_lattice_basis(weights, n)
    det_b = integer_det(basis)
    assert abs(det_b) == n
    normals = []
    for i in range(d):
        col = [basis[r][i] for r in range(d)]
        normals.append(primitive_vector(col))
    ring = ToricRing(
        p,
        normals,
        embedding=basis,
        group_order=n,
        group_weights=weights,
        small=small,
        label=f"1/{n}{weights}",
    )
    return ring


# -- splitting numbers and certificates ------------------------------------


@dataclass(frozen=True)
class FreeClassCertificate:
    """Per-residue-class evidence for the Frobenius pushforward decomposition.

    A window witness w pairs into [0, q-1-c_F] with every facet normal and
    is then the unique minimal element of its class, so the class summand
    is free; an obstruction is a pair of incomparable minimal elements.
    """

    q: int
    residue: Vector
    residue_ambient: Vector
    free: bool
    counted: bool
    witness: Vector | None = None
    witness_ambient: Vector | None = None
    obstruction: tuple[Vector, Vector] | None = None
    obstruction_ambient: tuple[Vector, Vector] | None = None
    region_bound: tuple[int, ...] | None = None


def _window_widths(ring: ToricRing, delta: TorusQDivisor | None, q: int) -> list[int] | None:
    """Facet windows q - 1 - floor(q * t_F); None when some window is empty."""
    if delta is None:
        delta = TorusQDivisor.zero(ring.nfacets)
    if len(delta.coefficients) != ring.nfacets:
        raise ValueError("divisor does not match the facet count")
    delta.check_pair_range()
    rounded = divisor_round(delta, q, "floor")
    widths = []
    for c in rounded.coefficients:
        w = q - 1 - int(c)
        if w < 0:
            return None
        widths.append(w)
    return widths


def _window_points(ring: ToricRing, widths: Sequence[int]) -> list[Vector]:
    """Lattice points with 0 <= <v_F, c> <= widths[F] for every facet."""
    total = math.prod(w + 1 for w in widths)
    if total > 20_000_000:
        raise ValueError("window too large to enumerate")
    grid = np.indices([w + 1 for w in widths]).reshape(ring.d, -1)
    adj = np.asarray(ring._adj, dtype=np.int64)
    det = ring._det
    ok = np.all((adj @ grid) % abs(det) == 0, axis=0)
    ys = grid[:, ok]
    cs = (adj @ ys) // det
    return [tuple(int(x) for x in cs[:, k]) for k in range(cs.shape[1])]


def toric_splitting_number(ring: ToricRing, delta: TorusQDivisor | None = None, e: int = 1) -> int:
    """a_e: the number of free residue classes of the e-th pushforward."""
    if e < 1:
        raise ValueError("e must be a positive integer")
    q = ring.p**e
    widths = _window_widths(ring, delta, q)
    if widths is None:
        return 0
    return len(_window_points(ring, widths))


def toric_splitting_certificates(
    ring: ToricRing,
    delta: TorusQDivisor | None = None,
    e: int = 1,
    include_obstructions: bool = False,
) -> list[FreeClassCertificate]:
    """Certificates for the free classes; optionally audit every class.

    With include_obstructions, all q^d residue classes are visited and
    each non-free class receives a pair of incomparable minimal elements.
    """
    q = ring.p**e
    widths = _window_widths(ring, delta, q)
    free_widths = [q - 1] * ring.nfacets
    certs: dict[Vector, FreeClassCertificate] = {}
    for w in _window_points(ring, free_widths):
        residue = tuple(x % q for x in w)
        counted = widths is not None and all(
            x <= limit for x, limit in zip(ring.pairing(w), widths)
        )
        certs[residue] = FreeClassCertificate(
            q=q,
            residue=residue,
            residue_ambient=ring.embed(residue),
            free=True,
            counted=counted,
            witness=w,
            witness_ambient=ring.embed(w),
            region_bound=tuple(free_widths),
        )
    out = list(certs.values())
    if include_obstructions:
        if q**ring.d > 200_000:
            raise ValueError("class audit too large; lower e")
        shape = (q,) * ring.d
        for flat in range(q**ring.d):
            residue = tuple(int(x) for x in np.unravel_index(flat, shape))
            if residue in certs:
                continue
            m1, m2, bound = _obstruction_pair(ring, residue, q)
            out.append(
                FreeClassCertificate(
                    q=q,
                    residue=residue,
                    residue_ambient=ring.embed(residue),
                    free=False,
                    counted=False,
                    obstruction=(m1, m2),
                    obstruction_ambient=(ring.embed(m1), ring.embed(m2)),
                    region_bound=bound,
                )
            )
    return out


def _class_points_below(ring: ToricRing, residue: Vector, q: int, caps: Sequence[int]) -> list[Vector]:
    """Class members v = residue mod q with 0 <= <v_F, v> <= caps[F]."""
    total = math.prod(int(c) + 1 for c in caps)
    if total > 5_000_000:
        raise ValueError("lower set too large to enumerate")
    grid = np.indices([int(c) + 1 for c in caps]).reshape(ring.d, -1)
    adj = np.asarray(ring._adj, dtype=np.int64)
    det = ring._det
    ok = np.all((adj @ grid) % abs(det) == 0, axis=0)
    ys = grid[:, ok]
    cs = (adj @ ys) // det
    res = np.asarray(residue, dtype=np.int64)
    match = np.all((cs - res[:, None]) % q == 0, axis=0)
    cs = cs[:, match]
    return [tuple(int(x) for x in cs[:, k]) for k in range(cs.shape[1])]


def _minimal_elements(ring: ToricRing, points: list[Vector]) -> list[Vector]:
    pairs = {v: ring.pairing(v) for v in points}
    minimal = []
    for v in points:
        pv = pairs[v]
        dominated = any(
            w != v and all(a <= b for a, b in zip(pairs[w], pv)) for w in points
        )
        if not dominated:
            minimal.append(v)
    return minimal


def _obstruction_pair(ring: ToricRing, residue: Vector, q: int) -> tuple[Vector, Vector, tuple[int, ...]]:
    """Two incomparable minimal elements of a non-free residue class."""
    rays = ring.extreme_rays()
    rho = tuple(sum(r[i] for r in rays) for i in range(ring.d))
    rho_pair = ring.pairing(rho)
    assert all(x > 0 for x in rho_pair)
    k = 0
    v0 = residue
    while not all(x >= 0 for x in ring.pairing(v0)):
        k += 1
        v0 = tuple(residue[i] + q * k * rho[i] for i in range(ring.d))
    caps = ring.pairing(v0)
    points = _class_points_below(ring, residue, q, caps)
    minimals = _minimal_elements(ring, points)
    assert minimals
    m1 = min(minimals)
    p1 = ring.pairing(m1)
    facet = next(i for i, x in enumerate(p1) if x >= q)
    shift = ring.descent_vector(facet)
    z = tuple(m1[i] + q * shift[i] for i in range(ring.d))
    caps2 = ring.pairing(z)
    assert all(x >= 0 for x in caps2)
    points2 = _class_points_below(ring, residue, q, caps2)
    minimals2 = _minimal_elements(ring, points2)
    m2 = next(m for m in minimals2 if m != m1)
    pair1, pair2 = ring.pairing(m1), ring.pairing(m2)
    assert any(a < b for a, b in zip(pair1, pair2)) and any(
        a > b for a, b in zip(pair1, pair2)
    )
    bound = tuple(max(a, b) for a, b in zip(caps, caps2))
    return m1, m2, bound


def toric_fsig_exact(ring: ToricRing, delta: TorusQDivisor | None = None) -> Fraction:
    """The exact F-signature: volume of the limiting window polytope.

    For a simplicial cone the window {0 <= <v_F, x> <= 1 - t_F} maps
    under the facet pairing to a box, so the volume is the product of
    the widths over the pairing determinant.
    """
    if delta is None:
        delta = TorusQDivisor.zero(ring.nfacets)
    if len(delta.coefficients) != ring.nfacets:
        raise ValueError("divisor does not match the facet count")
    for t in delta.coefficients:
        if t < 0:
            raise ValueError("pair coefficients must be nonnegative")
        if t >= 1:
            return Fraction(0)
    volume = Fraction(1, ring.index)
    for t in delta.coefficients:
        volume *= 1 - t
    return volume


def canonical_divisor(ring: ToricRing) -> TorusQDivisor:
    """K = -(sum of the torus-invariant prime divisors)."""
    return TorusQDivisor((Fraction(-1),) * ring.nfacets)
