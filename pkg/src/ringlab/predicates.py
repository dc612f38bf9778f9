"""Decision procedures for the ring classes, each a direct scan of its
definition over the ring's tables.

Every predicate returns a :class:`PredicateResult`; universally quantified
predicates that fail carry the offending element(s) as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConstructionError, EngineBugError, NotAnIdealError
from .invariants import (
    _cached,
    center,
    delta,
    idempotents,
    jacobson,
    nilpotents,
    one_minus,
    prime_radical,
    units,
)
from .ring import FiniteRing, Subset, is_ideal, quotient


@dataclass
class PredicateResult:
    name: str
    value: bool
    params: dict = field(default_factory=dict)
    witness: tuple | None = None
    labels: tuple | None = None

    def __bool__(self) -> bool:
        return self.value

    def to_dict(self) -> dict:
        d = {"name": self.name, "params": dict(self.params), "value": self.value}
        if self.witness is not None:
            d["witness"] = {"ids": list(self.witness), "labels": list(self.labels)}
        return d


def _result(R: FiniteRing, name: str, bad: np.ndarray | None, **params) -> PredicateResult:
    """``bad`` is a boolean mask of counterexample elements (or None for true)."""
    if bad is None or not bad.any():
        return PredicateResult(name, True, params)
    w = int(np.flatnonzero(bad)[0])
    return PredicateResult(name, False, params, (w,), (R.label(w),))


def _check_n(n: int, what: str = "n"):
    if int(n) < 1:
        raise ConstructionError(f"{what} must be a positive integer, got {n}")


@_cached("principal_right")
def principal_right_ideals(R: FiniteRing) -> np.ndarray:
    """in_aR[a, x] is True iff x lies in aR."""
    N = R.size
    out = np.zeros((N, N), dtype=bool)
    out[np.arange(N)[:, None], R.mul_table] = True
    return out


def _unit_condition(R: FiniteRing, target: Subset, n: int) -> np.ndarray:
    """Mask of units u with u^n - 1 outside ``target``."""
    _check_n(n)
    U = units(R).ids
    P = R.powv(U, int(n))
    diff = R.subv(P, np.full_like(P, R.one))
    bad = np.zeros(R.size, dtype=bool)
    bad[U[~target.bits[diff]]] = True
    return bad


def is_n_delta_u(R: FiniteRing, n: int) -> PredicateResult:
    """u^n - 1 in Delta(R) for every unit u."""
    return _result(R, "n_delta_u", _unit_condition(R, delta(R), n), n=int(n))


def is_n_uj(R: FiniteRing, n: int) -> PredicateResult:
    return _result(R, "n_uj", _unit_condition(R, jacobson(R), n), n=int(n))


def is_n_uu(R: FiniteRing, n: int) -> PredicateResult:
    return _result(R, "n_uu", _unit_condition(R, nilpotents(R), n), n=int(n))


def is_delta_u(R: FiniteRing) -> PredicateResult:
    """U(R) = 1 + Delta(R).  The inclusion 1 + Delta in U holds by definition
    and is asserted."""
    D, U = delta(R), units(R)
    shifted = R.add_table[R.one, D.ids]
    if not U.bits[shifted].all():
        raise EngineBugError(f"1 + Delta is not inside U in {R.name}")
    in_shift = np.zeros(R.size, dtype=bool)
    in_shift[shifted] = True
    return _result(R, "delta_u", U.bits & ~in_shift)


def is_clean(R: FiniteRing) -> PredicateResult:
    """Every a is e + u with e idempotent and u a unit."""
    E = idempotents(R).ids
    isu = units(R).bits
    # a - e for every a and every idempotent e
    diffs = R.add_table[:, R.neg_table[E]]
    return _result(R, "clean", ~isu[diffs].any(axis=1))


def is_exchange(R: FiniteRing) -> PredicateResult:
    """For every a some idempotent e lies in aR with 1 - e in (1 - a)R."""
    E = idempotents(R).ids
    inR = principal_right_ideals(R)
    om = one_minus(R)
    ok = (inR[:, E] & inR[om][:, om[E]]).any(axis=1)
    return _result(R, "exchange", ~ok)


def _aXa(R: FiniteRing) -> np.ndarray:
    """T[a, x] = a x a."""
    M = R.mul_table
    return M[M, np.arange(R.size)[:, None]]


def _regular_mask(R: FiniteRing) -> np.ndarray:
    ar = np.arange(R.size)
    return (_aXa(R) == ar[:, None]).any(axis=1)


def is_regular(R: FiniteRing) -> PredicateResult:
    """a = axa for some x."""
    return _result(R, "regular", ~_regular_mask(R))


def is_unit_regular(R: FiniteRing) -> PredicateResult:
    """a = aua for some unit u."""
    ar = np.arange(R.size)
    ok = (_aXa(R)[:, units(R).ids] == ar[:, None]).any(axis=1)
    return _result(R, "unit_regular", ~ok)


def is_strongly_regular(R: FiniteRing) -> PredicateResult:
    """a in a^2 R."""
    ar = np.arange(R.size)
    sq = R.mul_table[ar, ar]
    return _result(R, "strongly_regular", ~principal_right_ideals(R)[sq, ar])


def _power_search(R: FiniteRing, test: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> np.ndarray:
    """Mask of a for which test(a^n, a^(n+1)) fails for every n >= 1.

    Powers of a are eventually periodic with preperiod plus period at most
    |R|, so n = 1..|R| covers every distinct power."""
    M = R.mul_table
    ar = np.arange(R.size)
    cur = ar.copy()
    found = np.zeros(R.size, dtype=bool)
    for _ in range(R.size):
        nxt = M[cur, ar]
        found |= test(cur, nxt)
        if found.all():
            break
        cur = nxt
    return ~found


def is_pi_regular(R: FiniteRing) -> PredicateResult:
    """Some power a^n lies in a^n R a^n."""
    reg = _regular_mask(R)
    return _result(R, "pi_regular", _power_search(R, lambda p, _: reg[p]))


def is_strongly_pi_regular(R: FiniteRing) -> PredicateResult:
    """Some power a^n lies in a^(n+1) R."""
    inR = principal_right_ideals(R)
    return _result(R, "strongly_pi_regular", _power_search(R, lambda p, q: inR[q, p]))


def is_semiregular(R: FiniteRing) -> PredicateResult:
    """R/J(R) is regular and idempotents lift modulo J(R).  A failing result
    carries an element of R whose coset is non-regular or a non-liftable
    idempotent."""
    Q, proj = quotient(R, jacobson(R))
    reps = Q.meta["representatives"]
    reg = is_regular(Q)
    if not reg.value:
        w = int(reps[reg.witness[0]])
        return PredicateResult("semiregular", False, {}, (w,), (R.label(w),))
    lifted = np.zeros(Q.size, dtype=bool)
    lifted[proj.mapping[idempotents(R).ids]] = True
    bad = idempotents(Q).bits & ~lifted
    if bad.any():
        w = int(reps[np.flatnonzero(bad)[0]])
        return PredicateResult("semiregular", False, {}, (w,), (R.label(w),))
    return PredicateResult("semiregular", True, {})


def is_reduced(R: FiniteRing) -> PredicateResult:
    bad = nilpotents(R).bits.copy()
    bad[0] = False
    return _result(R, "reduced", bad)


def is_abelian(R: FiniteRing) -> PredicateResult:
    """Every idempotent is central."""
    return _result(R, "abelian", idempotents(R).bits & ~center(R).bits)


def is_2_primal(R: FiniteRing) -> PredicateResult:
    """The prime radical consists of all nilpotent elements."""
    return _result(R, "two_primal", nilpotents(R).bits & ~prime_radical(R).bits)


def is_dedekind_finite(R: FiniteRing) -> PredicateResult:
    """ab = 1 implies ba = 1; the witness is the pair (a, b)."""
    M = R.mul_table
    hit = np.argwhere((M == R.one) & (M.T != R.one))
    if len(hit) == 0:
        return PredicateResult("dedekind_finite", True, {})
    a, b = (int(x) for x in hit[0])
    return PredicateResult("dedekind_finite", False, {}, (a, b), (R.label(a), R.label(b)))


def satisfies_power_identity(R: FiniteRing, m: int) -> PredicateResult:
    """x^m = x for all x."""
    if int(m) < 2:
        raise ConstructionError(f"the power identity needs m >= 2, got {m}")
    ar = np.arange(R.size)
    return _result(R, "power_identity", R.powv(ar, int(m)) != ar, m=int(m))


def right_ideals_have_idempotents(R: FiniteRing) -> PredicateResult:
    """Every nonzero right ideal contains a nonzero idempotent.  Checking the
    principal right ideals aR suffices; the witness is a generator a."""
    E = idempotents(R).ids
    E = E[E != 0]
    ok = principal_right_ideals(R)[:, E].any(axis=1)
    ok[0] = True
    return _result(R, "right_ideals_idempotents", ~ok)


def units_lift(R: FiniteRing, I: Subset) -> PredicateResult:
    """Every unit of R/I is the image of a unit of R; the witness is a
    representative of a non-liftable unit coset."""
    if not is_ideal(R, I):
        raise NotAnIdealError(f"the given subset is not an ideal of {R.name}")
    Q, proj = quotient(R, I)
    hit = np.zeros(Q.size, dtype=bool)
    hit[proj.mapping[units(R).ids]] = True
    bad = units(Q).bits & ~hit
    if bad.any():
        w = int(Q.meta["representatives"][np.flatnonzero(bad)[0]])
        return PredicateResult("units_lift", False, {}, (w,), (R.label(w),))
    return PredicateResult("units_lift", True, {})


def is_commutative(R: FiniteRing) -> PredicateResult:
    M = R.mul_table
    return _result(R, "commutative", (M != M.T).any(axis=1))


@dataclass(frozen=True)
class PredicateSpec:
    name: str
    fn: Callable
    param: str | None = None
    aliases: tuple = ()

    def __call__(self, R: FiniteRing, arg: int | None = None) -> PredicateResult:
        if self.param is None:
            if arg is not None:
                raise ConstructionError(f"predicate {self.name} takes no parameter")
            return self.fn(R)
        if arg is None:
            raise ConstructionError(f"predicate {self.name} needs the parameter {self.param}")
        return self.fn(R, arg)


PREDICATES: dict[str, PredicateSpec] = {p.name: p for p in (
    PredicateSpec("n_delta_u", is_n_delta_u, "n"),
    PredicateSpec("delta_u", is_delta_u),
    PredicateSpec("n_uj", is_n_uj, "n"),
    PredicateSpec("n_uu", is_n_uu, "n"),
    PredicateSpec("clean", is_clean),
    PredicateSpec("exchange", is_exchange),
    PredicateSpec("regular", is_regular),
    PredicateSpec("strongly_regular", is_strongly_regular),
    PredicateSpec("unit_regular", is_unit_regular),
    PredicateSpec("pi_regular", is_pi_regular),
    PredicateSpec("strongly_pi_regular", is_strongly_pi_regular),
    PredicateSpec("semiregular", is_semiregular),
    PredicateSpec("reduced", is_reduced),
    PredicateSpec("abelian", is_abelian),
    PredicateSpec("two_primal", is_2_primal, aliases=("2_primal",)),
    PredicateSpec("dedekind_finite", is_dedekind_finite),
    PredicateSpec("power_identity", satisfies_power_identity, "m"),
    PredicateSpec("right_ideals_idempotents", right_ideals_have_idempotents),
    PredicateSpec("commutative", is_commutative),
)}

_ALIASES = {a: p.name for p in PREDICATES.values() for a in p.aliases}


def lookup(name: str) -> PredicateSpec:
    """Find a predicate by name; hyphens and underscores are interchangeable."""
    key = name.strip().lower().replace("-", "_")
    key = _ALIASES.get(key, key)
    if key not in PREDICATES:
        raise KeyError(name)
    return PREDICATES[key]
