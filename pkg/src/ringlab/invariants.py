"""Distinguished subsets and numeric invariants of a finite ring.

Everything here is computed from the definitions over the ring's tables and
cached on the ring object (rings are immutable, so compute-once is safe).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .errors import EngineBugError
from .ring import IDEAL_CAP, FiniteRing, Subset, all_ideals, quotient, unit_subring


def _cached(name):
    def deco(fn):
        def wrapper(R: FiniteRing, *args, **kwargs):
            key = (name, args, tuple(sorted(kwargs.items())))
            if key not in R._cache:
                R._cache[key] = fn(R, *args, **kwargs)
            return R._cache[key]
        wrapper.__name__ = fn.__name__
        wrapper.__doc__ = fn.__doc__
        wrapper.__wrapped__ = fn
        return wrapper
    return deco


def one_minus(R: FiniteRing) -> np.ndarray:
    """Lookup array x -> 1 - x."""
    return R.add_table[R.one, R.neg_table]


@_cached("units")
def units(R: FiniteRing) -> Subset:
    """Elements whose left multiplication map is a bijection.

    x -> ax is an additive endomorphism, so it is bijective exactly when its
    kernel is {0}.  For each such a the inverse found in its row is checked to
    be two-sided.
    """
    M = R.mul_table
    bij = (M == 0).sum(axis=1) == 1
    if R.degenerate:
        bij[:] = True
    ids = np.flatnonzero(bij)
    inv = np.argmax(M[ids] == R.one, axis=1)
    if not ((M[ids, inv] == R.one).all() and (M[inv, ids] == R.one).all()):
        raise EngineBugError(f"left-bijective element without a two-sided inverse in {R.name}")
    return Subset(R, bij)


@_cached("inverses")
def inverses(R: FiniteRing) -> np.ndarray:
    """inv[u] for units u, -1 elsewhere."""
    U = units(R).ids
    out = np.full(R.size, -1, dtype=np.int64)
    out[U] = np.argmax(R.mul_table[U] == R.one, axis=1)
    return out


def _quasi_regular_cols(R: FiniteRing, rows: np.ndarray | None, left: bool) -> np.ndarray:
    """For each r: is 1 - a*r (left) / 1 - r*a (right) a unit for all a in rows?"""
    M, om, isu = R.mul_table, one_minus(R), units(R).bits
    if rows is None:
        rows = np.arange(R.size)
    if left:
        return isu[om[M[rows, :]]].all(axis=0)
    return isu[om[M[:, rows]]].all(axis=1)


@_cached("jacobson")
def jacobson(R: FiniteRing) -> Subset:
    """{r : 1 - ar is a unit for every a}, cross-checked with the right-hand version."""
    left = _quasi_regular_cols(R, None, left=True)
    right = _quasi_regular_cols(R, None, left=False)
    if not (left == right).all():
        raise EngineBugError(f"left and right quasi-regular sets differ in {R.name}")
    return Subset(R, left)


def delta_definitional(R: FiniteRing, side: str = "left") -> Subset:
    U = units(R).ids
    return Subset(R, _quasi_regular_cols(R, U, left=(side == "left")))


def delta_via_unit_subring(R: FiniteRing) -> Subset:
    """Pull back J(T), T the subring generated by the units, along the inclusion."""
    T, inc = unit_subring(R)
    JT = jacobson(T)
    return Subset.from_ids(R, inc.mapping[JT.ids])


@_cached("delta")
def delta(R: FiniteRing, check: bool = True) -> Subset:
    """{a : 1 - ua is a unit for every unit u}.

    With ``check`` the set is also computed with units on the right and as the
    pullback of J(unit subring); any disagreement is an engine bug.
    """
    D = delta_definitional(R, "left")
    if check:
        if not D == delta_definitional(R, "right"):
            raise EngineBugError(f"left and right definitions of Delta differ in {R.name}")
        if not D == delta_via_unit_subring(R):
            raise EngineBugError(f"Delta differs from J(unit subring) in {R.name}")
    return D


@_cached("nilpotents")
def nilpotents(R: FiniteRing) -> Subset:
    M = R.mul_table
    p = np.arange(R.size)
    # a^(2^k) with 2^k >= size covers every nilpotency index
    for _ in range(max(1, R.size.bit_length())):
        p = M[p, p]
    return Subset(R, p == 0)


@_cached("idempotents")
def idempotents(R: FiniteRing) -> Subset:
    ar = np.arange(R.size)
    return Subset(R, R.mul_table[ar, ar] == ar)


@_cached("center")
def center(R: FiniteRing) -> Subset:
    M = R.mul_table
    return Subset(R, (M == M.T).all(axis=0))


@_cached("unit_orders")
def unit_orders(R: FiniteRing) -> dict[int, int]:
    M = R.mul_table
    U = units(R).ids
    order = np.zeros(len(U), dtype=np.int64)
    cur = U.copy()
    k = 1
    while (order == 0).any():
        done = (cur == R.one) & (order == 0)
        order[done] = k
        cur = M[cur, U]
        k += 1
    return {int(u): int(o) for u, o in zip(U, order)}


def exponent_bound(R: FiniteRing) -> int:
    """lcm of the unit orders: u^L = 1 for every unit."""
    return lcm(*unit_orders(R).values()) if R.size > 1 else 1


def prime_ideals(R: FiniteRing, cap: int = IDEAL_CAP) -> list[Subset]:
    """Proper ideals P with aRb in P implying a in P or b in P.

    The condition is tested in R/P, where it says that aQb = 0 forces a = 0
    or b = 0; the quotient is usually far smaller than R.
    """
    primes = []
    for P in all_ideals(R, cap):
        if len(P) == R.size:
            continue
        Q, _ = quotient(R, P)
        M = Q.mul_table
        ar = np.arange(1, Q.size)
        aQb = M[M[ar[:, None], np.arange(Q.size)[None, :]][:, :, None], ar[None, None, :]]
        if not (aQb == 0).all(axis=1).any():
            primes.append(P)
    return primes


@_cached("prime_radical_oracle")
def prime_radical_oracle(R: FiniteRing, cap: int = IDEAL_CAP) -> Subset:
    """Literal intersection of all prime ideals."""
    bits = np.ones(R.size, dtype=bool)
    for P in prime_ideals(R, cap):
        bits &= P.bits
    return Subset(R, bits)


@_cached("prime_radical")
def prime_radical(R: FiniteRing, check: bool = True) -> Subset:
    """Nil_*(R).  A finite ring is artinian, so this is J(R); rings within the
    ideal cap are cross-checked against the intersection of prime ideals."""
    J = jacobson(R)
    if check and R.size <= IDEAL_CAP:
        if not J == prime_radical_oracle(R):
            raise EngineBugError(f"prime radical oracle disagrees with J in {R.name}")
    return J


def unit_powers_minus_one(R: FiniteRing, n: int) -> tuple[np.ndarray, np.ndarray]:
    """(units, u^n - 1) as parallel arrays."""
    U = units(R).ids
    P = R.powv(U, n)
    return U, R.subv(P, np.full_like(P, R.one))


@_cached("delta_u_exponent")
def delta_u_exponent(R: FiniteRing) -> tuple[int, list[int]]:
    """Least n with u^n - 1 in Delta for all units, and all valid n up to the
    lcm L of the unit orders (L itself is always valid)."""
    M, D = R.mul_table, delta(R).bits
    U = units(R).ids
    L = exponent_bound(R)
    om = one_minus(R)
    valid = []
    cur = U.copy()
    for n in range(1, L + 1):
        # 1 - u^n in Delta iff u^n - 1 in Delta (Delta is additively closed)
        if D[om[cur]].all():
            valid.append(n)
        cur = M[cur, U]
    return valid[0], valid


@dataclass
class InvariantBundle:
    units: Subset
    idempotents: Subset
    nilpotents: Subset
    center: Subset
    jacobson: Subset
    delta: Subset
    prime_radical: Subset
    unit_orders: dict
    delta_u_exponent: int
    valid_exponents: list

    def violations(self) -> list[str]:
        out = []
        if not self.jacobson <= self.delta:
            out.append("J not contained in Delta")
        if self.units.ring.size > 1 and len(self.nilpotents & self.units):
            out.append("nilpotent unit")
        if self.units.ring.one not in self.units:
            out.append("1 is not a unit")
        if not self.prime_radical <= self.jacobson:
            out.append("prime radical not inside J")
        return out


def invariant_bundle(R: FiniteRing) -> InvariantBundle:
    n_min, valid = delta_u_exponent(R)
    return InvariantBundle(
        units=units(R), idempotents=idempotents(R), nilpotents=nilpotents(R),
        center=center(R), jacobson=jacobson(R), delta=delta(R),
        prime_radical=prime_radical(R), unit_orders=unit_orders(R),
        delta_u_exponent=n_min, valid_exponents=valid)
