"""Finite unital rings over dense element ids, with subsets, homomorphisms and
the ideal / quotient / corner / subring machinery built on top of them.

Elements of a ring of size N are the integers 0..N-1 and the zero element is
always id 0.  Rings up to ``TABLE_CAP`` elements carry full addition and
multiplication tables; larger rings only expose vectorised structural
evaluators (``addv``/``mulv``/``negv``) and are rejected by the table-based
algorithms with :class:`ResourceCapExceeded`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
from numba import njit

from .errors import (
    ConstructionError,
    EngineBugError,
    NotAnIdealError,
    NotIdempotentError,
    ResourceCapExceeded,
    RingMismatchError,
)

TABLE_CAP = 4096
AXIOM_CAP = 4096
IDEAL_CAP = 256
SUBRING_CAP = 16
SIZE_LIMIT = 1 << 20
SAMPLE_SEED = 0xA5A5
SAMPLE_TRIPLES = 1_000_000
# literal triple scan below this size, generator-reduced exact check above it
_TRIPLE_SCAN_CAP = 256
_CHUNK = 1 << 20


def index_dtype(n: int):
    return np.uint16 if n <= 1 << 16 else np.int32


ArrayFn = Callable[[np.ndarray, np.ndarray], np.ndarray]


class FiniteRing:
    """A finite associative unital ring on element ids ``0..size-1``."""

    def __init__(
        self,
        size: int,
        add_table: np.ndarray | None = None,
        mul_table: np.ndarray | None = None,
        *,
        one: int,
        addv: ArrayFn | None = None,
        mulv: ArrayFn | None = None,
        negv: Callable[[np.ndarray], np.ndarray] | None = None,
        labeler: Callable[[int], str] | None = None,
        provenance=None,
        meta: dict | None = None,
    ):
        if size < 1:
            raise ConstructionError("a ring needs at least one element")
        if size > SIZE_LIMIT:
            raise ResourceCapExceeded(
                f"ring of size {size} exceeds the limit of {SIZE_LIMIT} elements")
        self.size = int(size)
        self.zero = 0
        self.one = int(one)
        self.provenance = provenance
        self.meta = dict(meta or {})
        self._labeler = labeler
        self._cache: dict = {}
        if add_table is not None:
            dt = index_dtype(size)
            self._add = np.ascontiguousarray(add_table, dtype=dt)
            self._mul = np.ascontiguousarray(mul_table, dtype=dt)
            self._add.flags.writeable = False
            self._mul.flags.writeable = False
            neg = np.argmax(self._add == 0, axis=1).astype(dt)
            neg.flags.writeable = False
            self._neg = neg
        else:
            if addv is None or mulv is None or negv is None:
                raise ConstructionError("structural rings need addv, mulv and negv")
            self._add = self._mul = self._neg = None
            self._addv, self._mulv, self._negv = addv, mulv, negv

    # -- identity -----------------------------------------------------------
    @property
    def name(self) -> str:
        return str(self.provenance) if self.provenance is not None else f"<ring of size {self.size}>"

    def __repr__(self) -> str:
        return f"FiniteRing({self.name}, size={self.size})"

    @property
    def degenerate(self) -> bool:
        """True for the zero ring, which only appears as a corner edge case."""
        return self.size == 1

    @property
    def has_tables(self) -> bool:
        return self._add is not None

    def _need_tables(self):
        if self._add is None:
            raise ResourceCapExceeded(
                f"{self.name} has {self.size} elements; table-based computations "
                f"are limited to {TABLE_CAP}")

    @property
    def add_table(self) -> np.ndarray:
        self._need_tables()
        return self._add

    @property
    def mul_table(self) -> np.ndarray:
        self._need_tables()
        return self._mul

    @property
    def neg_table(self) -> np.ndarray:
        self._need_tables()
        return self._neg

    # -- element arithmetic ---------------------------------------------------
    def addv(self, a, b) -> np.ndarray:
        if self._add is not None:
            return self._add[a, b]
        return self._addv(np.asarray(a), np.asarray(b))

    def mulv(self, a, b) -> np.ndarray:
        if self._mul is not None:
            return self._mul[a, b]
        return self._mulv(np.asarray(a), np.asarray(b))

    def negv(self, a) -> np.ndarray:
        if self._neg is not None:
            return self._neg[a]
        return self._negv(np.asarray(a))

    def subv(self, a, b) -> np.ndarray:
        return self.addv(a, self.negv(b))

    def add(self, a: int, b: int) -> int:
        return int(self.addv(np.array([a]), np.array([b]))[0])

    def mul(self, a: int, b: int) -> int:
        return int(self.mulv(np.array([a]), np.array([b]))[0])

    def neg(self, a: int) -> int:
        return int(self.negv(np.array([a]))[0])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def power(self, a: int, k: int) -> int:
        result, base = self.one, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def powv(self, a: np.ndarray, k: int) -> np.ndarray:
        a = np.asarray(a)
        result = np.full(a.shape, self.one, dtype=a.dtype if a.dtype != bool else np.int64)
        base = a
        while k:
            if k & 1:
                result = self.mulv(result, base)
            base = self.mulv(base, base)
            k >>= 1
        return result

    def times(self, k: int, a: int) -> int:
        """The integer multiple k*a (k may be negative)."""
        if k < 0:
            return self.times(-k, self.neg(a))
        result, base = 0, a
        while k:
            if k & 1:
                result = self.add(result, base)
            base = self.add(base, base)
            k >>= 1
        return result

    def characteristic(self) -> int:
        k, x = 1, self.one
        while x != 0:
            x = self.add(x, self.one)
            k += 1
        return k

    def label(self, i: int) -> str:
        if self._labeler is None:
            return str(i)
        return self._labeler(int(i))

    def elements(self) -> np.ndarray:
        return np.arange(self.size, dtype=index_dtype(self.size))

    def is_commutative(self) -> bool:
        m = self.mul_table
        return bool((m == m.T).all())


# ---------------------------------------------------------------------------
class Subset:
    """Membership bitset over the element ids of one ring."""

    __slots__ = ("ring", "bits")

    def __init__(self, ring: FiniteRing, bits):
        bits = np.asarray(bits, dtype=bool)
        if bits.shape != (ring.size,):
            raise RingMismatchError(
                f"bitset of shape {bits.shape} does not fit a ring of size {ring.size}")
        self.ring = ring
        self.bits = bits

    @classmethod
    def from_ids(cls, ring: FiniteRing, ids: Iterable[int]) -> "Subset":
        bits = np.zeros(ring.size, dtype=bool)
        ids = np.fromiter((int(i) for i in ids), dtype=np.int64) if not isinstance(ids, np.ndarray) else ids
        if ids.size and (ids.min() < 0 or ids.max() >= ring.size):
            raise RingMismatchError("element id out of range for this ring")
        bits[ids] = True
        return cls(ring, bits)

    @classmethod
    def whole(cls, ring: FiniteRing) -> "Subset":
        return cls(ring, np.ones(ring.size, dtype=bool))

    @classmethod
    def zero(cls, ring: FiniteRing) -> "Subset":
        return cls.from_ids(ring, [0])

    def _check(self, other: "Subset"):
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.ring is not self.ring:
            raise RingMismatchError("subsets of different rings cannot be combined")

    @property
    def ids(self) -> np.ndarray:
        return np.flatnonzero(self.bits)

    def __len__(self) -> int:
        return int(self.bits.sum())

    def __contains__(self, i) -> bool:
        return bool(self.bits[int(i)])

    def __iter__(self):
        return (int(i) for i in self.ids)

    def __and__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ring, self.bits & other.bits)

    def __or__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ring, self.bits | other.bits)

    def __sub__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.ring, self.bits & ~other.bits)

    def __le__(self, other: "Subset") -> bool:
        self._check(other)
        return not bool((self.bits & ~other.bits).any())

    def __ge__(self, other: "Subset") -> bool:
        return other <= self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subset):
            return NotImplemented
        self._check(other)
        return bool((self.bits == other.bits).all())

    def __hash__(self) -> int:
        return hash((id(self.ring), np.packbits(self.bits).tobytes()))

    def key(self) -> bytes:
        return np.packbits(self.bits).tobytes()

    def labels(self) -> list[str]:
        return [self.ring.label(i) for i in self]

    def __repr__(self) -> str:
        shown = list(self)[:12]
        more = ", ..." if len(self) > 12 else ""
        return f"Subset({self.ring.name}, {{{', '.join(map(str, shown))}{more}}})"


@dataclass
class RingHom:
    source: FiniteRing
    target: FiniteRing
    mapping: np.ndarray

    def __call__(self, i: int) -> int:
        return int(self.mapping[i])

    @property
    def surjective(self) -> bool:
        return len(np.unique(self.mapping)) == self.target.size

    @property
    def injective(self) -> bool:
        return len(np.unique(self.mapping)) == self.source.size

    def kernel(self) -> Subset:
        return Subset(self.source, self.mapping == 0)

    def image(self) -> Subset:
        return Subset.from_ids(self.target, np.unique(self.mapping))

    def violations(self) -> list[tuple]:
        """Exhaustive check; returns (property, witness) pairs."""
        f, S, T = self.mapping, self.source, self.target
        out = []
        if f[0] != 0:
            out.append(("zero", (0,)))
        if f[S.one] != T.one:
            out.append(("one", (S.one,)))
        fa = f[S.add_table]
        ta = T.add_table[f[:, None], f[None, :]]
        bad = np.argwhere(fa != ta)
        if len(bad):
            out.append(("add", tuple(int(x) for x in bad[0])))
        fm = f[S.mul_table]
        tm = T.mul_table[f[:, None], f[None, :]]
        bad = np.argwhere(fm != tm)
        if len(bad):
            out.append(("mul", tuple(int(x) for x in bad[0])))
        return out

    def is_homomorphism(self) -> bool:
        return not self.violations()


# ---------------------------------------------------------------------------
@dataclass
class AxiomReport:
    ring: str
    size: int
    method: str
    violations: list = field(default_factory=list)
    seed: int | None = None
    samples: int | None = None
    degenerate: bool = False

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        out = {"ring": self.ring, "size": self.size, "method": self.method,
               "status": "pass" if self.ok else "fail",
               "violations": [{"axiom": a, "witness": list(w)} for a, w in self.violations]}
        if self.seed is not None:
            out["seed"] = self.seed
            out["samples"] = self.samples
        if self.degenerate:
            out["degenerate"] = True
        return out


def _first(mask: np.ndarray, *prefix) -> tuple | None:
    hit = np.argwhere(mask)
    if len(hit) == 0:
        return None
    return tuple(int(p) for p in prefix) + tuple(int(x) for x in hit[0])


def additive_generators(R: FiniteRing) -> list[int]:
    """A small set whose additive closure is the whole ring (greedy)."""
    H = additive_span(R, [])
    gens = []
    while len(H) < R.size:
        x = int(np.flatnonzero(~H.bits)[0])
        gens.append(x)
        H = additive_span(R, [x], start=H)
    return gens


def _additive_closure_reaches_all(R: FiniteRing, gens: Sequence[int]) -> bool:
    """Closure under the addition table alone, making no associativity assumption."""
    A = R.add_table
    seen = np.zeros(R.size, dtype=bool)
    seen[list(gens)] = True
    frontier = np.array(list(gens), dtype=np.int64)
    g = np.array(list(gens), dtype=np.int64)
    while frontier.size:
        new = np.unique(np.concatenate([A[frontier[:, None], g[None, :]].ravel(),
                                        A[g[:, None], frontier[None, :]].ravel()]))
        new = new[~seen[new]]
        seen[new] = True
        frontier = new
    return bool(seen.all())


def verify_axioms(R: FiniteRing, axiom_cap: int = AXIOM_CAP) -> AxiomReport:
    """Check the ring axioms.

    Up to ``axiom_cap`` elements the check is exact: a literal scan of every
    triple for small rings, and above that Light's associativity test plus
    distributivity on an additive generating set, which are equivalent to the
    full triple scan.  Larger rings are sampled with a fixed seed.
    """
    if not R.has_tables or R.size > axiom_cap:
        return _sampled_axioms(R)
    N, A, M = R.size, R.add_table, R.mul_table
    rep = AxiomReport(R.name, N, "exhaustive" if N <= _TRIPLE_SCAN_CAP else "generator-reduced",
                      degenerate=R.degenerate)
    v = rep.violations
    if N > 1 and R.one == 0:
        v.append(("zero-ne-one", (0,)))
    if int(A.max()) >= N or int(M.max()) >= N:
        v.append(("closure", (int(np.argmax(A.max(axis=1) >= N)),)))
        return rep
    ar = np.arange(N)
    if (w := _first(A != A.T)) is not None:
        v.append(("add-commutative", w))
    if (w := _first(A[0] != ar)) is not None:
        v.append(("add-identity", w))
    if (w := _first(A[ar, R.neg_table] != 0)) is not None:
        v.append(("add-inverse", w))
    if (w := _first(M[R.one] != ar)) is not None:
        v.append(("mul-left-identity", w))
    if (w := _first(M[:, R.one] != ar)) is not None:
        v.append(("mul-right-identity", w))

    if N <= _TRIPLE_SCAN_CAP:
        # every triple, one first coordinate at a time
        for a in range(N):
            checks = (
                ("add-associative", A[A[a]], A[a][A]),
                ("mul-associative", M[M[a]], M[a][M]),
                ("left-distributive", M[a][A], A[M[a][:, None], M[a][None, :]]),
                ("right-distributive", M[A, a], A[M[:, a][:, None], M[:, a][None, :]]),
            )
            for name, lhs, rhs in checks:
                if any(x[0] == name for x in v):
                    continue
                w = _first(lhs != rhs, a)
                if w is not None:
                    v.append((name, w))
        return rep

    gens = additive_generators(R)
    if not _additive_closure_reaches_all(R, gens):
        v.append(("additive-generation", tuple(gens)))
        return rep
    names = ("add-associative", "left-distributive", "right-distributive", "mul-associative")
    wits = _light_scan(A, np.ascontiguousarray(A.T), M, np.ascontiguousarray(M.T),
                       np.asarray(gens, dtype=np.int64))
    for k, name in enumerate(names):
        if wits[k, 0] >= 0:
            v.append((name, tuple(int(t) for t in wits[k])))
    return rep


@njit(cache=True)
def _light_scan(A, At, M, Mt, gens):
    """Light's test over the generators g, for all x, y:
    (x+g)+y = x+(g+y), x(y+g) = xy+xg, (y+g)x = yx+gx, (xg)y = x(gy).
    Returns the first witness triple of each identity (or -1s).  The
    transposes keep the inner loop on contiguous rows."""
    N = A.shape[0]
    out = np.full((4, 3), -1, dtype=np.int64)
    for gi in range(gens.shape[0]):
        g = gens[gi]
        for x in range(N):
            xg_add = A[x, g]
            xg_mul = M[x, g]
            gx_mul = M[g, x]
            for y in range(N):
                yg = At[g, y]
                if out[0, 0] < 0 and A[xg_add, y] != A[x, A[g, y]]:
                    out[0, 0], out[0, 1], out[0, 2] = x, g, y
                if out[1, 0] < 0 and M[x, yg] != At[xg_mul, M[x, y]]:
                    out[1, 0], out[1, 1], out[1, 2] = x, y, g
                if out[2, 0] < 0 and Mt[x, yg] != At[gx_mul, Mt[x, y]]:
                    out[2, 0], out[2, 1], out[2, 2] = y, g, x
                if out[3, 0] < 0 and M[xg_mul, y] != M[x, M[g, y]]:
                    out[3, 0], out[3, 1], out[3, 2] = x, g, y
    return out


def _sampled_axioms(R: FiniteRing) -> AxiomReport:
    rng = np.random.default_rng(SAMPLE_SEED)
    n = SAMPLE_TRIPLES
    rep = AxiomReport(R.name, R.size, "sampled", seed=SAMPLE_SEED, samples=n,
                      degenerate=R.degenerate)
    a, b, c = (rng.integers(0, R.size, n) for _ in range(3))
    ad, mu = R.addv, R.mulv
    checks = (
        ("add-commutative", ad(a, b), ad(b, a)),
        ("add-identity", ad(a, np.zeros_like(a)), a),
        ("add-inverse", ad(a, R.negv(a)), np.zeros_like(a)),
        ("mul-left-identity", mu(np.full_like(a, R.one), a), a),
        ("mul-right-identity", mu(a, np.full_like(a, R.one)), a),
        ("add-associative", ad(ad(a, b), c), ad(a, ad(b, c))),
        ("mul-associative", mu(mu(a, b), c), mu(a, mu(b, c))),
        ("left-distributive", mu(a, ad(b, c)), ad(mu(a, b), mu(a, c))),
        ("right-distributive", mu(ad(b, c), a), ad(mu(b, a), mu(c, a))),
    )
    for name, lhs, rhs in checks:
        bad = np.flatnonzero(lhs != rhs)
        if bad.size:
            i = bad[0]
            rep.violations.append((name, (int(a[i]), int(b[i]), int(c[i]))))
    return rep


# ---------------------------------------------------------------------------
def additive_span(R: FiniteRing, elems: Iterable[int], start: Subset | None = None) -> Subset:
    """The additive subgroup generated by ``elems`` (and ``start``, itself a subgroup)."""
    A = R.add_table
    bits = np.zeros(R.size, dtype=bool) if start is None else start.bits.copy()
    bits[0] = True
    members = np.flatnonzero(bits)
    for x in elems:
        x = int(x)
        if bits[x]:
            continue
        # H + <x> as the union of the cosets H + kx
        cur, pieces = x, [members]
        while not bits[cur]:
            coset = A[members, cur]
            pieces.append(coset)
            cur = int(A[cur, x])
        for p in pieces[1:]:
            bits[p] = True
        members = np.flatnonzero(bits)
    return Subset(R, bits)


def _check_subset(R: FiniteRing, S: Subset):
    if S.ring is not R:
        raise RingMismatchError("subset belongs to a different ring")


def is_additive_subgroup(R: FiniteRing, S: Subset) -> bool:
    ids = S.ids
    if 0 not in S:
        return False
    return bool(S.bits[R.add_table[ids[:, None], ids[None, :]]].all()) and bool(S.bits[R.neg_table[ids]].all())


def is_ideal(R: FiniteRing, S: Subset) -> bool:
    _check_subset(R, S)
    if not is_additive_subgroup(R, S):
        return False
    ids, M = S.ids, R.mul_table
    return bool(S.bits[M[:, ids]].all() and S.bits[M[ids, :]].all())


def ideal_generated(R: FiniteRing, gens: Iterable[int]) -> Subset:
    """Smallest two-sided ideal containing ``gens``.

    RaR is spanned additively by g*a*h with g, h ranging over an additive
    generating set of R (multiplication is biadditive), so the ideal is the
    additive span of those products.
    """
    gens = [int(g) for g in gens]
    if not gens:
        return Subset.zero(R)
    M = R.mul_table
    ag = np.array(_additive_gens_cached(R) + [R.one])
    g = np.array(gens)
    prods = M[M[ag[:, None], g[None, :]][:, :, None], ag[None, None, :]]
    return additive_span(R, np.unique(prods))


def _additive_gens_cached(R: FiniteRing) -> list[int]:
    key = "additive_generators"
    if key not in R._cache:
        R._cache[key] = additive_generators(R)
    return list(R._cache[key])


def ideals_in(R: FiniteRing, bound: Subset | None = None, limit: int | None = None) -> list[Subset]:
    """All two-sided ideals contained in ``bound`` (an ideal; default: R).

    Every ideal is a sum of principal ideals, so the set is the closure of the
    principal ideals of elements of ``bound`` under pairwise sums.
    """
    bound = Subset.whole(R) if bound is None else bound
    _check_subset(R, bound)
    found: dict[bytes, Subset] = {}
    zero = Subset.zero(R)
    found[zero.key()] = zero
    principal: dict[bytes, Subset] = {}
    for a in bound.ids:
        if a == 0:
            continue
        I = ideal_generated(R, [int(a)])
        principal.setdefault(I.key(), I)
    found.update(principal)
    if limit is not None and len(found) > limit:
        raise ResourceCapExceeded(f"more than {limit} ideals in {R.name}")
    gens = list(principal.values())
    frontier = list(principal.values())
    while frontier:
        nxt = []
        for I in frontier:
            for P in gens:
                if P <= I:
                    continue
                S = additive_span(R, P.ids, start=I)
                k = S.key()
                if k not in found:
                    found[k] = S
                    nxt.append(S)
                    if limit is not None and len(found) > limit:
                        raise ResourceCapExceeded(
                            f"more than {limit} ideals in {R.name}")
        frontier = nxt
    return sorted(found.values(), key=lambda s: (len(s), tuple(s.ids)))


def all_ideals(R: FiniteRing, cap: int = IDEAL_CAP) -> list[Subset]:
    if R.size > cap:
        raise ResourceCapExceeded(f"all_ideals is limited to rings of size {cap}; {R.name} has {R.size}")
    return ideals_in(R)


# ---------------------------------------------------------------------------
def subring_from_ids(R: FiniteRing, ids: Sequence[int], *, one: int | None = None,
                     provenance=None, meta: dict | None = None) -> FiniteRing:
    """The ring on a subset closed under + and * with identity ``one``."""
    ids = np.asarray(sorted(int(i) for i in ids))
    if ids[0] != 0:
        raise ConstructionError("a subring must contain zero")
    index = np.full(R.size, -1, dtype=np.int64)
    index[ids] = np.arange(len(ids))
    A = index[R.add_table[ids[:, None], ids[None, :]]]
    M = index[R.mul_table[ids[:, None], ids[None, :]]]
    if (A < 0).any() or (M < 0).any():
        raise ConstructionError("subset is not closed under the ring operations")
    one = R.one if one is None else one
    if index[one] < 0:
        raise ConstructionError("identity is not in the subset")
    parent_label = R.label
    m = {"parent": R, "embedding": ids}
    m.update(meta or {})
    return FiniteRing(len(ids), A, M, one=int(index[one]),
                      labeler=lambda i: parent_label(int(ids[i])),
                      provenance=provenance, meta=m)


def embedding(S: FiniteRing) -> RingHom:
    """Inclusion of a sub-/corner ring into its parent (not unital for corners)."""
    return RingHom(S, S.meta["parent"], np.asarray(S.meta["embedding"]))


def quotient(R: FiniteRing, I: Subset, provenance=None) -> tuple[FiniteRing, RingHom]:
    """Coset ring R/I and its canonical projection.

    Cosets are numbered by their least element id, so the zero coset is 0.
    """
    _check_subset(R, I)
    if not is_ideal(R, I):
        raise NotAnIdealError(f"the given subset is not an ideal of {R.name}")
    A = R.add_table
    ids = I.ids
    reps_of = np.empty(R.size, dtype=np.int64)
    step = max(1, _CHUNK // max(1, len(ids)))
    for lo in range(0, R.size, step):
        hi = min(R.size, lo + step)
        reps_of[lo:hi] = A[np.arange(lo, hi)[:, None], ids[None, :]].min(axis=1)
    reps = np.unique(reps_of)
    cls = np.searchsorted(reps, reps_of)
    QA = cls[A[reps[:, None], reps[None, :]]]
    QM = cls[R.mul_table[reps[:, None], reps[None, :]]]
    parent_label = R.label
    Q = FiniteRing(len(reps), QA, QM, one=int(cls[R.one]),
                   labeler=lambda i: f"[{parent_label(int(reps[i]))}]",
                   provenance=provenance,
                   meta={"parent": R, "ideal": I, "representatives": reps})
    proj = RingHom(R, Q, cls.astype(index_dtype(Q.size)))
    return Q, proj


def corner(R: FiniteRing, e: int, provenance=None) -> FiniteRing:
    """The corner ring eRe with identity e (the zero ring when e = 0)."""
    M = R.mul_table
    if M[e, e] != e:
        raise NotIdempotentError(f"element {R.label(e)} of {R.name} is not idempotent")
    vals = np.unique(M[M[e], e])
    C = subring_from_ids(R, vals, one=e, provenance=provenance, meta={"idempotent": int(e)})
    if C.degenerate:
        C.meta["degenerate"] = True
    return C


def subring_generated(R: FiniteRing, gens: Iterable[int]) -> Subset:
    """Smallest unital subring containing ``gens``."""
    M = R.mul_table
    S = additive_span(R, list(gens) + [R.one])
    while True:
        ids = S.ids
        prods = np.unique(M[ids[:, None], ids[None, :]])
        new = prods[~S.bits[prods]]
        if new.size == 0:
            return S
        S = additive_span(R, new, start=S)


def unit_subring(R: FiniteRing) -> tuple[FiniteRing, RingHom]:
    """The subring generated by the units, with its inclusion map."""
    from .invariants import units
    S = subring_generated(R, units(R).ids)
    T = subring_from_ids(R, S.ids, provenance=f"unit_subring({R.name})")
    return T, embedding(T)


def unital_subrings(R: FiniteRing, cap: int = SUBRING_CAP) -> list[FiniteRing]:
    """Every subring containing 1, found by adjoining one element at a time
    to the prime subring."""
    if R.size > cap:
        raise ResourceCapExceeded(f"unital_subrings is limited to size {cap}; {R.name} has {R.size}")
    base = subring_generated(R, [])
    seen = {base.key(): base}
    frontier = [base]
    while frontier:
        nxt = []
        for S in frontier:
            for x in np.flatnonzero(~S.bits):
                T = subring_generated(R, list(S.ids) + [int(x)])
                if T.key() not in seen:
                    seen[T.key()] = T
                    nxt.append(T)
        frontier = nxt
    subsets = sorted(seen.values(), key=lambda s: (len(s), tuple(s.ids)))
    return [subring_from_ids(R, s.ids, provenance=f"subring({R.name}, {list(map(int, s.ids))})")
            for s in subsets]


def central_idempotents(R: FiniteRing) -> list[int]:
    from .invariants import center, idempotents
    return list((center(R) & idempotents(R)).ids)


def semisimple_decomposition(S: FiniteRing) -> list[FiniteRing]:
    """Split a ring with zero Jacobson radical along its primitive central
    idempotents; returns the corner rings e_i S e_i."""
    from .invariants import jacobson
    if len(jacobson(S)) != 1:
        raise ConstructionError(f"{S.name} has a nonzero Jacobson radical")
    M = S.mul_table
    ci = [e for e in central_idempotents(S) if e != 0]
    primitive = [e for e in ci if all(M[f, e] in (0, e) for f in ci)]
    total = 0
    for e in primitive:
        total = int(S.add_table[total, e])
    comps = [corner(S, e, provenance=f"{S.name}*e{e}") for e in primitive]
    if total != S.one or int(np.prod([c.size for c in comps], dtype=object)) != S.size:
        raise EngineBugError(f"central idempotent decomposition of {S.name} is inconsistent")
    return comps
