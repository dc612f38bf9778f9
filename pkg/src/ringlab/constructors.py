"""Builders for the ring constructions: Z/n, finite fields, products, full and
triangular matrix rings, skew triangular / truncated skew polynomial rings,
trivial extensions, DT(R, M), group rings, formal triangular rings, K_s(R),
M_n(R; s) and trivial Morita contexts.

Tuple-shaped rings number their elements in mixed radix with the first
coordinate most significant, so ids follow lexicographic order of the
coordinate tuples (row-major for matrices).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce
from typing import Callable, Sequence

import numpy as np

from .errors import ConstructionError, ResourceCapExceeded
from .ring import (
    SIZE_LIMIT,
    TABLE_CAP,
    FiniteRing,
    RingHom,
    Subset,
    index_dtype,
    is_ideal,
    subring_generated,
)

ENDO_CAP = 64
_CHUNK = 1 << 20


# ---------------------------------------------------------------------------
# additive building blocks

class _Coords:
    def __init__(self, sizes: Sequence[int]):
        self.sizes = [int(s) for s in sizes]
        self.size = int(np.prod(self.sizes, dtype=object))
        radix, r = [], 1
        for s in reversed(self.sizes):
            radix.append(r)
            r *= s
        self.radix = list(reversed(radix))

    def decode(self, ids: np.ndarray) -> list[np.ndarray]:
        ids = np.asarray(ids, dtype=np.int64)
        return [(ids // r) % s for r, s in zip(self.radix, self.sizes)]

    def encode(self, comps: Sequence[np.ndarray]) -> np.ndarray:
        out = np.zeros(np.shape(comps[0]), dtype=np.int64)
        for c, r in zip(comps, self.radix):
            out += np.asarray(c, dtype=np.int64) * r
        return out

    def encode_one(self, tup: Sequence[int]) -> int:
        return int(sum(int(c) * r for c, r in zip(tup, self.radix)))

    def decode_one(self, i: int) -> tuple[int, ...]:
        return tuple((i // r) % s for r, s in zip(self.radix, self.sizes))


def _tuple_ring(parts, mul: Callable, *, one: Sequence[int], provenance,
                labeler: Callable[[tuple], str], meta: dict | None = None) -> FiniteRing:
    """Ring on tuples over the additive groups ``parts`` (rings or bimodules)
    with componentwise addition and the vectorised product ``mul``."""
    coords = _Coords([p.size for p in parts])
    N = coords.size
    if N > SIZE_LIMIT:
        raise ResourceCapExceeded(f"{provenance} would have {N} elements (limit {SIZE_LIMIT})")
    for p in parts:
        if not p.has_tables:
            raise ResourceCapExceeded(f"component of {provenance} is too large to tabulate")

    def addv(a, b):
        A, B = coords.decode(a), coords.decode(b)
        return coords.encode([p.add_table[x, y] for p, x, y in zip(parts, A, B)])

    def negv(a):
        return coords.encode([p.neg_table[x] for p, x in zip(parts, coords.decode(a))])

    def mulv(a, b):
        return coords.encode(mul(coords.decode(a), coords.decode(b)))

    def lab(i):
        return labeler(coords.decode_one(i))

    one_id = coords.encode_one(one)
    meta = dict(meta or {})
    meta["coords"] = coords
    if N > TABLE_CAP:
        return FiniteRing(N, one=one_id, addv=addv, mulv=mulv, negv=negv,
                          labeler=lab, provenance=provenance, meta=meta)
    dt = index_dtype(N)
    ids = np.arange(N)
    comps = coords.decode(ids)
    add_t = np.empty((N, N), dtype=dt)
    step = max(1, _CHUNK // N)
    for lo in range(0, N, step):
        hi = min(N, lo + step)
        add_t[lo:hi] = coords.encode([p.add_table[c[lo:hi, None], c[None, :]]
                                      for p, c in zip(parts, comps)])
    # Multiplication is biadditive, so rows of elements supported on a single
    # coordinate determine everything: row(a) = row(a - a_k e_k) + row(a_k e_k)
    # with k the last nonzero coordinate of a.
    support = np.zeros(N, dtype=np.int64)
    for k, c in enumerate(comps):
        support[c != 0] = k
    pure_part = np.zeros(N, dtype=np.int64)
    for k, (c, r) in enumerate(zip(comps, coords.radix)):
        sel = support == k
        pure_part[sel] = c[sel] * r
    head = ids - pure_part
    pure = np.unique(pure_part)
    mul_t = np.empty((N, N), dtype=dt)
    for lo in range(0, len(pure), step):
        chunk = pure[lo:lo + step]
        mul_t[chunk] = mulv(np.repeat(chunk, N), np.tile(ids, len(chunk))).reshape(len(chunk), N)
    is_pure = np.zeros(N, dtype=bool)
    is_pure[pure] = True
    for a in np.flatnonzero(~is_pure):
        mul_t[a] = add_t[mul_t[head[a]], mul_t[pure_part[a]]]
    # the row recurrence presumes left distributivity; compare some rows
    # against the defining formula
    probe = np.flatnonzero(~is_pure)[::max(1, (N - len(pure)) // 64)]
    if len(probe):
        direct = mulv(np.repeat(probe, N), np.tile(ids, len(probe))).reshape(len(probe), N)
        if (direct != mul_t[probe]).any():
            raise ConstructionError(f"product formula of {provenance} is not left distributive")
    return FiniteRing(N, add_t, mul_t, one=one_id, labeler=lab,
                      provenance=provenance, meta=meta)


def _sum(R, terms):
    return reduce(lambda x, y: R.add_table[x, y], terms)


# ---------------------------------------------------------------------------
# bimodules, endomorphisms, groups

@dataclass
class Bimodule:
    """An (R, S)-bimodule given by tables: additive group plus the actions
    ``lact[r, m]`` and ``ract[m, s]``."""
    left: FiniteRing
    right: FiniteRing
    add_table: np.ndarray
    lact: np.ndarray
    ract: np.ndarray
    name: str = "M"
    labels: list | None = None

    def __post_init__(self):
        self.size = len(self.add_table)
        self.neg_table = np.argmax(self.add_table == 0, axis=1)
        self.has_tables = True

    def label(self, m: int) -> str:
        return self.labels[m] if self.labels is not None else str(m)

    def violations(self) -> list[tuple]:
        A, L, Rt = self.add_table, self.lact, self.ract
        R, S = self.left, self.right
        n = self.size
        out = []
        ar = np.arange(n)

        def first(mask, name, *pre):
            hit = np.argwhere(mask)
            if len(hit):
                out.append((name, tuple(int(p) for p in pre) + tuple(int(h) for h in hit[0])))

        first(A != A.T, "add-commutative")
        first(A[0] != ar, "add-identity")
        first(A[ar, self.neg_table] != 0, "add-inverse")
        for x in range(n):
            if A[A[x]].tolist() != A[x][A].tolist():
                first(A[A[x]] != A[x][A], "add-associative", x)
                break
        first(L[R.one] != ar, "left-unital")
        first(Rt[:, S.one] != ar, "right-unital")
        # r(m + m') = rm + rm' ; (r + r')m = rm + r'm ; (rr')m = r(r'm)
        first(L[:, A] != A[L[:, :, None], L[:, None, :]], "left-additive")
        first(L[R.add_table] != A[L[:, None, :], L[None, :, :]], "left-distributive")
        first(L[R.mul_table] != L[:, L], "left-associative")
        # (m + m')s = ms + m's ; m(s + s') = ms + ms' ; m(ss') = (ms)s'
        first(Rt[A] != A[Rt[:, None, :], Rt[None, :, :]], "right-additive")
        first(Rt[:, S.add_table] != A[Rt[:, :, None], Rt[:, None, :]], "right-distributive")
        first(Rt[:, S.mul_table] != Rt[Rt], "right-associative")
        # (rm)s = r(ms)
        first(Rt[L] != L[:, Rt], "balanced")
        return out

    def verify(self) -> "Bimodule":
        bad = self.violations()
        if bad:
            name, wit = bad[0]
            raise ConstructionError(f"bimodule {self.name} fails {name} at {wit}")
        return self


def regular_bimodule(R: FiniteRing) -> Bimodule:
    return Bimodule(R, R, R.add_table, R.mul_table, R.mul_table, name=R.name,
                    labels=[R.label(i) for i in range(R.size)])


def zero_bimodule(R: FiniteRing, S: FiniteRing) -> Bimodule:
    z = np.zeros((1, 1), dtype=np.int64)
    return Bimodule(R, S, z, np.zeros((R.size, 1), dtype=np.int64),
                    np.zeros((1, S.size), dtype=np.int64), name="0", labels=["0"])


def morita_sum_bimodule(P: FiniteRing, M: Bimodule, N: Bimodule) -> Bimodule:
    """M (+) N over P = A x B, acting by (a,b)(m,n) = (am, bn) and
    (m,n)(a,b) = (mb, na); M is an (A,B)- and N a (B,A)-bimodule."""
    coords = P.meta["coords"]
    A_, B_ = M.left, M.right
    mc = _Coords([M.size, N.size])
    ids = np.arange(mc.size)
    mm, nn = mc.decode(ids)
    pids = np.arange(P.size)
    pa, pb = coords.decode(pids)
    add = mc.encode([M.add_table[mm[:, None], mm[None, :]], N.add_table[nn[:, None], nn[None, :]]])
    lact = mc.encode([M.lact[pa[:, None], mm[None, :]], N.lact[pb[:, None], nn[None, :]]])
    ract = mc.encode([M.ract[mm[:, None], pb[None, :]], N.ract[nn[:, None], pa[None, :]]])
    labels = [f"({M.label(a)}, {N.label(b)})" for a, b in zip(mm, nn)]
    return Bimodule(P, P, add, lact, ract, name=f"{M.name}+{N.name}", labels=labels)


@dataclass
class Endomorphism:
    ring: FiniteRing
    mapping: np.ndarray
    name: str = "alpha"

    def __call__(self, i):
        return self.mapping[i]

    def as_hom(self) -> RingHom:
        return RingHom(self.ring, self.ring, self.mapping)

    def verify(self) -> "Endomorphism":
        bad = self.as_hom().violations()
        if bad:
            raise ConstructionError(f"{self.name} is not a ring endomorphism of "
                                    f"{self.ring.name}: fails {bad[0][0]} at {bad[0][1]}")
        return self

    @property
    def is_identity(self) -> bool:
        return bool((self.mapping == np.arange(self.ring.size)).all())

    @property
    def is_alpha_compatible(self) -> bool:
        """ab = 0 iff a*alpha(b) = 0, for all a, b."""
        M = self.ring.mul_table
        return bool(((M == 0) == (M[:, self.mapping] == 0)).all())

    def power(self, k: int) -> np.ndarray:
        m = np.arange(self.ring.size)
        for _ in range(k):
            m = self.mapping[m]
        return m


def identity_endomorphism(R: FiniteRing) -> Endomorphism:
    return Endomorphism(R, np.arange(R.size), "id")


def frobenius(R: FiniteRing) -> Endomorphism:
    """x -> x^p for R of prime characteristic p."""
    p = R.characteristic()
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ConstructionError(f"frobenius needs prime characteristic; {R.name} has {p}")
    return Endomorphism(R, R.powv(np.arange(R.size), p), "frob").verify()


def _ring_generators(R: FiniteRing) -> list[int]:
    gens = []
    S = subring_generated(R, [])
    while len(S) < R.size:
        x = int(np.flatnonzero(~S.bits)[0])
        gens.append(x)
        S = subring_generated(R, gens)
    return gens


def endomorphisms(R: FiniteRing, cap: int = ENDO_CAP) -> list[Endomorphism]:
    """All unital ring endomorphisms, by trying every image of a ring
    generating set and propagating along a derivation of each element."""
    if R.size > cap:
        raise ResourceCapExceeded(f"endomorphism search is limited to size {cap}")
    A, M = R.add_table, R.mul_table
    gens = _ring_generators(R)
    # derivation: each element reached as (op, x, y) from earlier elements
    known = {0: None, R.one: None}
    for g in gens:
        known.setdefault(g, None)
    order = list(known)
    recipe = []
    i = 0
    while len(known) < R.size:
        grew = False
        for x in list(order):
            for y in list(order):
                for op, tbl in (("+", A), ("*", M)):
                    z = int(tbl[x, y])
                    if z not in known:
                        known[z] = (op, x, y)
                        order.append(z)
                        recipe.append((z, op, x, y))
                        grew = True
        i += 1
        if not grew:
            raise ConstructionError("ring generators do not generate")
    out = []
    for images in itertools.product(range(R.size), repeat=len(gens)):
        f = np.full(R.size, -1, dtype=np.int64)
        f[0], f[R.one] = 0, R.one
        ok = True
        for g, im in zip(gens, images):
            if f[g] not in (-1, im):
                ok = False
            f[g] = im
        if not ok:
            continue
        for z, op, x, y in recipe:
            f[z] = (A if op == "+" else M)[f[x], f[y]]
        e = Endomorphism(R, f)
        if not e.as_hom().violations():
            out.append(e)
    uniq = {tuple(e.mapping.tolist()): e for e in out}
    result = []
    for k, key in enumerate(sorted(uniq)):
        e = uniq[key]
        e.name = "id" if e.is_identity else f"endo#{k}"
        result.append(e)
    return result


@dataclass
class GroupTable:
    table: np.ndarray
    labels: list[str]
    name: str
    identity: int = 0

    @property
    def size(self) -> int:
        return len(self.table)

    def violations(self) -> list[tuple]:
        T, n = self.table, self.size
        out = []
        ar = np.arange(n)
        if not ((T[self.identity] == ar).all() and (T[:, self.identity] == ar).all()):
            out.append(("identity", (self.identity,)))
        for a in range(n):
            if (T[T[a]] != T[a][T]).any():
                out.append(("associative", (a,)))
                break
        if not all(self.identity in T[a] for a in range(n)):
            out.append(("inverse", ()))
        return out

    def inverse(self, g: int) -> int:
        return int(np.flatnonzero(self.table[g] == self.identity)[0])

    def is_p_group(self, p: int) -> bool:
        n = self.size
        while n % p == 0:
            n //= p
        return n == 1


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise ConstructionError("cyclic group order must be positive")
    ar = np.arange(n)
    labels = ["e"] + ["g" if k == 1 else f"g^{k}" for k in range(1, n)]
    return GroupTable((ar[:, None] + ar[None, :]) % n, labels, f"C({n})")


def direct_product_group(G: GroupTable, H: GroupTable) -> GroupTable:
    c = _Coords([G.size, H.size])
    ids = np.arange(c.size)
    g, h = c.decode(ids)
    T = c.encode([G.table[g[:, None], g[None, :]], H.table[h[:, None], h[None, :]]])
    labels = [f"({G.labels[a]},{H.labels[b]})" for a, b in zip(g, h)]
    return GroupTable(T, labels, f"{G.name}x{H.name}")


# ---------------------------------------------------------------------------
# rings

def zmod(n: int, provenance=None) -> FiniteRing:
    if n < 2:
        raise ConstructionError(f"Zmod needs n >= 2, got {n}")
    if n > TABLE_CAP:
        raise ResourceCapExceeded(f"Zmod({n}) exceeds the table cap {TABLE_CAP}")
    ar = np.arange(n)
    return FiniteRing(n, (ar[:, None] + ar[None, :]) % n, (ar[:, None] * ar[None, :]) % n,
                      one=1 % n, provenance=provenance or f"Zmod({n})",
                      meta={"kind": "zmod", "n": n})


def is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            return (p, k) if q == 1 else None
    return None


def _polymod(coeffs: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of ``coeffs`` (low to high) by the monic ``mod``."""
    c = list(coeffs)
    d = len(mod) - 1
    for i in range(len(c) - 1, d - 1, -1):
        t = c[i] % p
        if t:
            for j in range(d + 1):
                c[i - d + j] = (c[i - d + j] - t * mod[j]) % p
    return [x % p for x in c[:d]]


def least_irreducible(p: int, k: int) -> list[int]:
    """Lexicographically least monic irreducible of degree k over F_p,
    comparing coefficients from the constant term up; returned low to high
    including the leading 1."""
    for low in itertools.product(range(p), repeat=k):
        f = list(low) + [1]
        if k == 1:
            return f
        reducible = False
        for d in range(1, k // 2 + 1):
            for glow in itertools.product(range(p), repeat=d):
                g = list(glow) + [1]
                if not any(_polymod(f, g, p)):
                    reducible = True
                    break
            if reducible:
                break
        if not reducible:
            return f
    raise ConstructionError(f"no irreducible polynomial of degree {k} over F_{p}")


def _poly_label(coeffs, var="x") -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        coef = str(c) if (c != 1 or i == 0) else ""
        terms.append(coef + mono)
    return "+".join(terms) if terms else "0"


def gf(p: int, k: int = 1, provenance=None) -> FiniteRing:
    """F_{p^k} as F_p[x]/(f) for the least irreducible f.  The element with
    coefficients c_0 + c_1 x + ... has id sum c_i p^i."""
    if not is_prime(p):
        raise ConstructionError(f"GF needs a prime characteristic, got {p}")
    if k < 1:
        raise ConstructionError("GF needs degree k >= 1")
    q = p ** k
    if q > TABLE_CAP:
        raise ResourceCapExceeded(f"GF({p},{k}) exceeds the table cap {TABLE_CAP}")
    f = least_irreducible(p, k)
    ids = np.arange(q)
    digits = np.stack([(ids // p ** i) % p for i in range(k)], axis=1)  # q x k
    add = (digits[:, None, :] + digits[None, :, :]) % p @ (p ** np.arange(k))
    mul = np.empty((q, q), dtype=np.int64)
    step = max(1, _CHUNK // (q * max(1, 2 * k - 1)))
    for lo in range(0, q, step):
        a = digits[lo:lo + step]
        conv = np.zeros((len(a), q, 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                conv[:, :, i + j] += a[:, None, i] * digits[None, :, j]
        for top in range(2 * k - 2, k - 1, -1):
            t = conv[:, :, top] % p
            for j in range(k + 1):
                conv[:, :, top - k + j] -= t * f[j]
        mul[lo:lo + step] = (conv[:, :, :k] % p) @ (p ** np.arange(k))
    labels = [_poly_label(list(d)) for d in digits]
    return FiniteRing(q, add, mul, one=1, labeler=lambda i: labels[i],
                      provenance=provenance or f"GF({p},{k})",
                      meta={"kind": "gf", "p": p, "k": k, "modulus": f})


def product(rings: Sequence[FiniteRing], provenance=None) -> FiniteRing:
    rings = list(rings)
    if not rings:
        raise ConstructionError("product of an empty list of rings")

    def mul(a, b):
        return [R.mul_table[x, y] for R, x, y in zip(rings, a, b)]

    return _tuple_ring(rings, mul, one=[R.one for R in rings],
                       provenance=provenance or f"Prod({', '.join(R.name for R in rings)})",
                       labeler=lambda t: "(" + ", ".join(R.label(x) for R, x in zip(rings, t)) + ")",
                       meta={"kind": "product", "components": rings})


def _matrix_label(R, entries, k, positions):
    grid = [["0"] * k for _ in range(k)]
    for (i, j), x in zip(positions, entries):
        grid[i][j] = R.label(x)
    return "[" + ", ".join("[" + ", ".join(row) + "]" for row in grid) + "]"


def _check_size(base: int, exponent: int, what: str):
    if base ** exponent > SIZE_LIMIT:
        raise ResourceCapExceeded(f"{what} would have {base}^{exponent} elements (limit {SIZE_LIMIT})")


def matrix(k: int, R: FiniteRing, provenance=None) -> FiniteRing:
    """Full k x k matrix ring, entries row-major."""
    if k < 1:
        raise ConstructionError("matrix size must be at least 1")
    _check_size(R.size, k * k, f"Mat({k}, {R.name})")
    pos = [(i, j) for i in range(k) for j in range(k)]
    M = R.mul_table

    def mul(a, b):
        return [_sum(R, [M[a[i * k + l], b[l * k + j]] for l in range(k)]) for i, j in pos]

    one = [R.one if i == j else 0 for i, j in pos]
    return _tuple_ring([R] * (k * k), mul, one=one,
                       provenance=provenance or f"Mat({k}, {R.name})",
                       labeler=lambda t: _matrix_label(R, t, k, pos),
                       meta={"kind": "matrix", "k": k, "base": R, "positions": pos})


def upper_triangular(k: int, R: FiniteRing, provenance=None) -> FiniteRing:
    """Upper triangular k x k matrices; coordinates are the entries (i <= j)
    in row-major order."""
    if k < 1:
        raise ConstructionError("matrix size must be at least 1")
    _check_size(R.size, k * (k + 1) // 2, f"UT({k}, {R.name})")
    pos = [(i, j) for i in range(k) for j in range(i, k)]
    where = {p: n for n, p in enumerate(pos)}
    M = R.mul_table

    def mul(a, b):
        return [_sum(R, [M[a[where[i, l]], b[where[l, j]]] for l in range(i, j + 1)])
                for i, j in pos]

    one = [R.one if i == j else 0 for i, j in pos]
    return _tuple_ring([R] * len(pos), mul, one=one,
                       provenance=provenance or f"UT({k}, {R.name})",
                       labeler=lambda t: _matrix_label(R, t, k, pos),
                       meta={"kind": "upper_triangular", "k": k, "base": R, "positions": pos})


def skew_triangular(k: int, R: FiniteRing, alpha: Endomorphism | None = None,
                    provenance=None) -> FiniteRing:
    """T_k(R, alpha): tuples (a_0..a_{k-1}) with
    c_i = sum_{j<=i} a_j * alpha^j(b_{i-j})."""
    if k < 1:
        raise ConstructionError("skew triangular size must be at least 1")
    alpha = identity_endomorphism(R) if alpha is None else alpha.verify()
    _check_size(R.size, k, f"SkewUT({k}, {R.name})")
    M = R.mul_table
    pows = [alpha.power(j) for j in range(k)]

    def mul(a, b):
        return [_sum(R, [M[a[j], pows[j][b[i - j]]] for j in range(i + 1)]) for i in range(k)]

    one = [R.one] + [0] * (k - 1)
    return _tuple_ring([R] * k, mul, one=one,
                       provenance=provenance or f"SkewUT({k}, {R.name}, {alpha.name})",
                       labeler=lambda t: _poly_label_ring(R, t),
                       meta={"kind": "skew_triangular", "k": k, "base": R, "alpha": alpha})


def _poly_label_ring(R, t, var="x") -> str:
    terms = []
    for i, c in enumerate(t):
        if c == 0:
            continue
        lab = R.label(c)
        if i == 0:
            terms.append(lab)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == R.one else f"({lab}){mono}")
    return " + ".join(terms) if terms else "0"


def poly_quot(R: FiniteRing, alpha: Endomorphism | None, n: int, provenance=None) -> FiniteRing:
    """R[x; alpha]/(x^n), identified with T_n(R, alpha) via a_0 + a_1 x + ...
    -> (a_0, a_1, ...)."""
    alpha = identity_endomorphism(R) if alpha is None else alpha
    S = skew_triangular(n, R, alpha,
                        provenance=provenance or f"PolyQ({R.name}, {alpha.name}, {n})")
    S.meta["kind"] = "poly_quot"
    return S


def trivial_extension(R: FiniteRing, M: Bimodule | None = None, provenance=None) -> FiniteRing:
    """T(R, M): pairs (r, m) with (r, m)(s, n) = (rs, rn + ms)."""
    M = regular_bimodule(R) if M is None else M
    if M.left is not R or M.right is not R:
        if not (M.left.size == R.size and M.right.size == R.size):
            raise ConstructionError("bimodule is not over the given ring")
    M.verify()
    Rm = R.mul_table

    def mul(a, b):
        r, m = a
        s, n = b
        return [Rm[r, s], M.add_table[M.lact[r, n], M.ract[m, s]]]

    return _tuple_ring([R, M], mul, one=[R.one, 0],
                       provenance=provenance or f"Triv({R.name})",
                       labeler=lambda t: f"({R.label(t[0])}, {M.label(t[1])})",
                       meta={"kind": "trivial_extension", "base": R, "module": M})


def dt(R: FiniteRing, M: Bimodule | None = None, provenance=None) -> FiniteRing:
    """DT(R, M): 4-tuples (a, m, b, n) with
    (a1,m1,b1,n1)(a2,m2,b2,n2) =
    (a1a2, a1m2 + m1a2, a1b2 + b1a2, a1n2 + m1b2 + b1m2 + n1a2)."""
    M = regular_bimodule(R) if M is None else M
    M.verify()
    Rm, Ma, L, Rt = R.mul_table, M.add_table, M.lact, M.ract
    Ra = R.add_table

    def mul(x, y):
        a1, m1, b1, n1 = x
        a2, m2, b2, n2 = y
        return [Rm[a1, a2],
                Ma[L[a1, m2], Rt[m1, a2]],
                Ra[Rm[a1, b2], Rm[b1, a2]],
                Ma[Ma[L[a1, n2], Rt[m1, b2]], Ma[L[b1, m2], Rt[n1, a2]]]]

    return _tuple_ring([R, M, R, M], mul, one=[R.one, 0, 0, 0],
                       provenance=provenance or f"DT({R.name})",
                       labeler=lambda t: "(" + ", ".join(
                           (R.label(v) if i % 2 == 0 else M.label(v)) for i, v in enumerate(t)) + ")",
                       meta={"kind": "dt", "base": R, "module": M})


def group_ring(R: FiniteRing, G: GroupTable, provenance=None) -> FiniteRing:
    """RG: functions G -> R with convolution, coordinates in the group's order."""
    bad = G.violations()
    if bad:
        raise ConstructionError(f"{G.name} is not a group: {bad[0][0]}")
    _check_size(R.size, G.size, f"GrpRing({R.name}, {G.name})")
    n = G.size
    # pairs[k] = [(g, h) with gh = k]
    pairs = [[(g, h) for g in range(n) for h in range(n) if G.table[g, h] == k] for k in range(n)]
    Mt = R.mul_table

    def mul(a, b):
        return [_sum(R, [Mt[a[g], b[h]] for g, h in pairs[k]]) for k in range(n)]

    def lab(t):
        terms = []
        for g, c in enumerate(t):
            if c:
                terms.append(G.labels[g] if c == R.one else f"{R.label(c)}{G.labels[g]}")
        return " + ".join(terms) if terms else "0"

    one = [R.one if g == G.identity else 0 for g in range(n)]
    return _tuple_ring([R] * n, mul, one=one,
                       provenance=provenance or f"GrpRing({R.name}, {G.name})",
                       labeler=lab, meta={"kind": "group_ring", "base": R, "group": G})


def augmentation_map(RG: FiniteRing) -> RingHom:
    """epsilon(sum a_g g) = sum a_g, as a ring map RG -> R."""
    if RG.meta.get("kind") != "group_ring":
        raise ConstructionError(f"{RG.name} was not built as a group ring")
    R = RG.meta["base"]
    comps = RG.meta["coords"].decode(np.arange(RG.size))
    return RingHom(RG, R, _sum(R, comps))


def augmentation_ideal(RG: FiniteRing) -> Subset:
    K = augmentation_map(RG).kernel()
    if not is_ideal(RG, K):
        raise ConstructionError("augmentation kernel is not an ideal")
    return K


def formal_triangular(R: FiniteRing, S: FiniteRing, M: Bimodule | None = None,
                      provenance=None) -> FiniteRing:
    """T(R, S, M): triples (r, m, s) with (r,m,s)(r',m',s') = (rr', rm' + ms', ss')."""
    if M is None:
        M = regular_bimodule(R) if R is S else zero_bimodule(R, S)
    M.verify()
    Rm, Sm = R.mul_table, S.mul_table

    def mul(a, b):
        r, m, s = a
        r2, m2, s2 = b
        return [Rm[r, r2], M.add_table[M.lact[r, m2], M.ract[m, s2]], Sm[s, s2]]

    return _tuple_ring([R, M, S], mul, one=[R.one, 0, S.one],
                       provenance=provenance or f"FTri({R.name}, {S.name})",
                       labeler=lambda t: f"[[{R.label(t[0])}, {M.label(t[1])}], [0, {S.label(t[2])}]]",
                       meta={"kind": "formal_triangular", "left": R, "right": S, "module": M})


def _central(R: FiniteRing, s: int) -> int:
    M = R.mul_table
    if not (M[s] == M[:, s]).all():
        raise ConstructionError(f"element {R.label(s)} is not central in {R.name}")
    return int(s)


def k_s(R: FiniteRing, s: int, provenance=None) -> FiniteRing:
    """K_s(R): [[a, x], [y, b]] with
    (a1a2 + s x1y2, a1x2 + x1b2; y1a2 + b1y2, s y1x2 + b1b2)."""
    s = _central(R, s)
    _check_size(R.size, 4, f"Ks({R.name})")
    M, A = R.mul_table, R.add_table

    def mul(p, q):
        a1, x1, y1, b1 = p
        a2, x2, y2, b2 = q
        return [A[M[a1, a2], M[s, M[x1, y2]]],
                A[M[a1, x2], M[x1, b2]],
                A[M[y1, a2], M[b1, y2]],
                A[M[s, M[y1, x2]], M[b1, b2]]]

    pos = [(0, 0), (0, 1), (1, 0), (1, 1)]
    return _tuple_ring([R] * 4, mul, one=[R.one, 0, 0, R.one],
                       provenance=provenance or f"Ks({R.name}, #{s})",
                       labeler=lambda t: _matrix_label(R, t, 2, pos),
                       meta={"kind": "k_s", "base": R, "s": s})


def m_n_s(k: int, R: FiniteRing, s: int, provenance=None) -> FiniteRing:
    """M_k(R; s): c_ij = sum_l s^e(i,l,j) a_il b_lj with
    e(i,l,j) = 1 + [i=j] - [i=l] - [l=j]."""
    if k < 1:
        raise ConstructionError("matrix size must be at least 1")
    s = _central(R, s)
    _check_size(R.size, k * k, f"Mns({k}, {R.name})")
    M = R.mul_table
    spow = [R.one, s, int(M[s, s])]
    pos = [(i, j) for i in range(k) for j in range(k)]

    def e(i, l, j):
        return 1 + (i == j) - (i == l) - (l == j)

    def mul(a, b):
        return [_sum(R, [M[spow[e(i, l, j)], M[a[i * k + l], b[l * k + j]]] for l in range(k)])
                for i, j in pos]

    one = [R.one if i == j else 0 for i, j in pos]
    return _tuple_ring([R] * (k * k), mul, one=one,
                       provenance=provenance or f"Mns({k}, {R.name}, #{s})",
                       labeler=lambda t: _matrix_label(R, t, k, pos),
                       meta={"kind": "m_n_s", "k": k, "base": R, "s": s})


def trivial_morita(A: FiniteRing, B: FiniteRing, M: Bimodule | None = None,
                   N: Bimodule | None = None, provenance=None) -> FiniteRing:
    """[[A, M], [N, B]] with both context products zero; coordinates
    (a, m, n, b)."""
    if M is None:
        M = regular_bimodule(A) if A is B else zero_bimodule(A, B)
    if N is None:
        N = regular_bimodule(B) if A is B else zero_bimodule(B, A)
    M.verify()
    N.verify()
    Am, Bm = A.mul_table, B.mul_table

    def mul(p, q):
        a1, m1, n1, b1 = p
        a2, m2, n2, b2 = q
        return [Am[a1, a2],
                M.add_table[M.lact[a1, m2], M.ract[m1, b2]],
                N.add_table[N.ract[n1, a2], N.lact[b1, n2]],
                Bm[b1, b2]]

    return _tuple_ring([A, M, N, B], mul, one=[A.one, 0, 0, B.one],
                       provenance=provenance or f"TrivMorita({A.name}, {B.name})",
                       labeler=lambda t: f"[[{A.label(t[0])}, {M.label(t[1])}], "
                                         f"[{N.label(t[2])}, {B.label(t[3])}]]",
                       meta={"kind": "trivial_morita", "left": A, "right": B,
                             "M": M, "N": N})
