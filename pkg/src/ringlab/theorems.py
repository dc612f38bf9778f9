"""Registry of executable checks, one per claim, run over a ring corpus.

Each check inspects one corpus ring and produces a :class:`CheckResult`:

* ``pass``     every instance agreed with the claim;
* ``fail``     a counterexample was found (recorded as the witness);
* ``vacuous``  the ring qualified but no hypothesis instance held;
* ``flagged``  a known misstatement disagrees with the computed truth while
               the corrected reading holds (the semilocal divisor);
* ``skipped``  a resource cap stopped the computation.

Implications count vacuous instances; equivalences count agreements on
both sides so a filter that excludes everything stays visible.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Iterable

import numpy as np

from . import constructors as C
from .corpus import CorpusSpec, RingEntry, SkippedRing, entries_for, expand
from .errors import ConstructionError, ResourceCapExceeded, RingLabError
from .expr import Call, Endo, Num, parse_ring_expr
from .invariants import (
    center,
    delta,
    delta_definitional,
    delta_u_exponent,
    delta_via_unit_subring,
    idempotents,
    invariant_bundle,
    jacobson,
    nilpotents,
    prime_radical,
    units,
)
from .predicates import (
    is_clean,
    is_dedekind_finite,
    is_delta_u,
    is_exchange,
    is_n_delta_u,
    is_pi_regular,
    is_reduced,
    is_regular,
    is_semiregular,
    is_strongly_pi_regular,
    is_strongly_regular,
    is_unit_regular,
    right_ideals_have_idempotents,
    satisfies_power_identity,
    units_lift,
)
from .ring import (
    IDEAL_CAP,
    SUBRING_CAP,
    FiniteRing,
    RingHom,
    Subset,
    all_ideals,
    corner,
    embedding,
    ideals_in,
    is_ideal,
    quotient,
    semisimple_decomposition,
    subring_from_ids,
    unital_subrings,
    verify_axioms,
)

STATUSES = ("pass", "fail", "vacuous", "flagged", "skipped")
J_IDEAL_LIMIT = 4096


# ---------------------------------------------------------------------------
# results

@dataclass
class CheckResult:
    check_id: str
    ring: str
    status: str
    params: dict = field(default_factory=dict)
    witness: dict | None = None
    tier: str = "discriminating"
    counts: dict = field(default_factory=dict)
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"check_id": self.check_id, "ring": self.ring, "status": self.status,
             "params": self.params, "tier": self.tier, "counts": self.counts}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.detail:
            d["detail"] = self.detail
        return d


class Tally:
    """Accumulates instances of one claim on one ring."""

    def __init__(self):
        self.counts: Counter = Counter()
        self.failure: dict | None = None
        self.flag: dict | None = None
        self.detail: dict = {}

    def _fail(self, witness: dict):
        if self.failure is None:
            self.failure = witness

    def implies(self, hyp: bool, concl: bool, **witness):
        if not hyp:
            self.counts["vacuous"] += 1
            return
        self.counts["held"] += 1
        if not concl:
            self._fail(dict(witness, direction="hypothesis holds, conclusion fails"))

    def equiv(self, left: bool, right: bool, **witness):
        self.counts["both_true" if left and right else
                    "both_false" if not (left or right) else "disagree"] += 1
        if left != right:
            self._fail(dict(witness, left=bool(left), right=bool(right)))

    def all_equal(self, values: dict, **witness):
        vals = set(bool(v) for v in values.values())
        self.counts["all_true" if vals == {True} else
                    "all_false" if vals == {False} else "disagree"] += 1
        if len(vals) > 1:
            self._fail(dict(witness, values={k: bool(v) for k, v in values.items()}))

    def require(self, ok: bool, **witness):
        self.counts["checked"] += 1
        if not ok:
            self._fail(witness)

    def flagged(self, **witness):
        self.counts["flagged"] += 1
        if self.flag is None:
            self.flag = witness

    @property
    def status(self) -> str:
        if self.failure is not None:
            return "fail"
        if self.flag is not None:
            return "flagged"
        if not any(v for k, v in self.counts.items() if k != "vacuous"):
            return "vacuous"
        return "pass"


# ---------------------------------------------------------------------------
# per-ring context

class Ctx:
    def __init__(self, entry: RingEntry, ns: list[int]):
        self.entry = entry
        self.R = entry.ring
        self.ns = ns

    @property
    def node(self) -> Call:
        return self.entry.expr

    @property
    def kind(self) -> str | None:
        return self.R.meta.get("kind")

    def sub(self, i: int) -> FiniteRing:
        return self.entry.sub(self.node.args[i])

    def build(self, node: Call) -> FiniteRing:
        return self.entry.sub(node)


def ndu(S: FiniteRing, n: int) -> bool:
    key = ("ndu", int(n))
    if key not in S._cache:
        S._cache[key] = is_n_delta_u(S, n).value
    return S._cache[key]


def _label(R: FiniteRing, i) -> str:
    return R.label(int(i))


def _elem(R: FiniteRing, i) -> dict:
    return {"id": int(i), "label": _label(R, i)}


def _ids_of(S: FiniteRing, sub: Subset) -> np.ndarray:
    """Ids in the parent ring of a subset of a sub-/corner ring."""
    return np.asarray(S.meta["embedding"])[sub.ids]


def is_field(F: FiniteRing) -> bool:
    return F.size > 1 and F.is_commutative() and len(units(F)) == F.size - 1


def _prime_power_base(n: int) -> int | None:
    pk = C.prime_power(n)
    return pk[0] if pk else None


# ---------------------------------------------------------------------------
# checks: exponents, quotients, subrings and regularity

def chk_axioms(c: Ctx, t: Tally):
    rep = verify_axioms(c.R)
    t.detail["method"] = rep.method
    if rep.seed is not None:
        t.detail["seed"] = rep.seed
    t.require(rep.ok, violations=[[name, list(w)] for name, w in rep.violations])


def chk_delta_ax(c: Ctx, t: Tally):
    R = c.R
    A, M, neg = R.add_table, R.mul_table, R.neg_table
    D = delta_definitional(R, "left")
    J = jacobson(R)
    U = units(R).ids
    t.require(D == delta_definitional(R, "right"), identity="left and right definitions agree")
    t.require(D == delta_via_unit_subring(R), identity="Delta equals J of the unit subring")
    t.require(J <= D, identity="J inside Delta")
    t.require((D == J) == is_ideal(R, D), identity="Delta = J iff Delta is an ideal",
              delta_is_ideal=is_ideal(R, D), delta_equals_j=(D == J))
    d = D.ids
    t.require(D.bits[A[d][:, neg[d]]].all(), identity="Delta closed under subtraction")
    t.require(D.bits[M[d][:, d]].all(), identity="Delta closed under multiplication")
    t.require(D.bits[M[U][:, d]].all() and D.bits[M[d][:, U]].all(),
              identity="u Delta = Delta u = Delta for units u")
    if c.kind == "trivial_extension":
        base = R.meta["base"]
        r = R.meta["coords"].decode(np.arange(R.size))[0]
        t.require((D.bits == delta(base).bits[r]).all(), identity="Delta(T(R,M)) = T(Delta(R), M)")


def chk_sanity(c: Ctx, t: Tally):
    R = c.R
    bundle = invariant_bundle(R)
    t.require(not bundle.violations(), identity="invariant bundle", violations=bundle.violations())
    if R.size <= IDEAL_CAP:
        t.require(prime_radical(R, check=True) == jacobson(R), identity="prime radical = J (oracle)")
    for pred in (is_clean, is_exchange, is_semiregular, is_pi_regular,
                 is_strongly_pi_regular, is_dedekind_finite):
        res = pred(R)
        t.require(res.value, identity=res.name, witness=list(res.labels or ()))
    t.require(is_delta_u(R).value == is_n_delta_u(R, 1).value, identity="delta_u = 1-delta_u")


def chk_p2_3(c: Ctx, t: Tally):
    comps = c.R.meta["components"]
    R = c.R
    decoded = R.meta["coords"].decode(np.arange(R.size))
    for name, fn in (("units", units), ("delta", delta), ("jacobson", jacobson),
                     ("idempotents", idempotents)):
        want = np.ones(R.size, dtype=bool)
        for S, x in zip(comps, decoded):
            want &= fn(S).bits[x]
        t.require((fn(R).bits == want).all(), identity=f"{name} of a product is the product")
    for n in c.ns:
        t.equiv(ndu(R, n), all(ndu(S, n) for S in comps), n=n)


def chk_p2_4(c: Ctx, t: Tally):
    R = c.R
    two_in_delta = R.times(2, R.one) in delta(R)
    remark = []
    for n in c.ns:
        if n % 2:
            t.implies(ndu(R, n), two_in_delta, n=n)
        elif ndu(R, n) and not two_in_delta:
            remark.append(n)
    if remark:
        # even exponents where the conclusion fails: the oddness hypothesis matters
        t.detail["even_n_without_2_in_delta"] = remark


def chk_p2_5(c: Ctx, t: Tally):
    R = c.R
    for I in all_ideals(R):
        if len(I) == R.size:
            continue
        if not units_lift(R, I).value:
            t.counts["units_do_not_lift"] += 1
            continue
        Q, _ = quotient(R, I)
        for n in c.ns:
            t.implies(ndu(R, n), ndu(Q, n), n=n, ideal=I.labels())


def chk_p2_6(c: Ctx, t: Tally):
    R = c.R
    D = delta(R)
    subs = []
    if R.size <= SUBRING_CAP:
        for S in unital_subrings(R):
            inside = np.zeros(R.size, dtype=bool)
            inside[_ids_of(S, delta(S))] = True
            emb = np.asarray(S.meta["embedding"])
            if (D.bits[emb] & ~inside[emb]).any():
                t.counts["hypothesis_fails"] += 1
                continue
            subs.append(S)
    Z = subring_from_ids(R, center(R).ids, provenance=f"center({R.name})")
    subs.append(Z)
    for S in subs:
        for n in c.ns:
            t.implies(ndu(R, n), ndu(S, n), n=n, subring=[_label(R, i) for i in S.meta["embedding"]])


def chk_t2_7(c: Ctx, t: Tally):
    R = c.R
    J = jacobson(R)
    try:
        ideals = ideals_in(R, bound=J, limit=J_IDEAL_LIMIT)
    except ResourceCapExceeded:
        t.detail["truncated"] = True
        raise
    t.detail["ideals_in_J"] = len(ideals)
    for I in ideals:
        Q, _ = quotient(R, I)
        for n in c.ns:
            t.equiv(ndu(R, n), ndu(Q, n), n=n, ideal_size=len(I))


def chk_c2_8(c: Ctx, t: Tally):
    Q, _ = quotient(c.R, jacobson(c.R))
    for n in c.ns:
        t.equiv(ndu(c.R, n), ndu(Q, n), n=n)


def chk_p2_9(c: Ctx, t: Tally):
    R = c.R
    for e in idempotents(R).ids:
        if e == 0:
            continue
        E = corner(R, int(e))
        for n in c.ns:
            t.implies(ndu(R, n), ndu(E, n), n=n, idempotent=_label(R, e))


def chk_p2_10(c: Ctx, t: Tally):
    R = c.R
    for n in c.ns:
        if n % 2:
            res = is_n_delta_u(R, n)
            t.require(not res.value, n=n)
            if not res.value:
                t.detail.setdefault("witness_units", {})[str(n)] = res.labels[0]


def chk_p2_11(c: Ctx, t: Tally):
    df = is_dedekind_finite(c.R).value
    for n in c.ns:
        if n % 2:
            t.implies(ndu(c.R, n), df, n=n)


def chk_p2_sl(c: Ctx, t: Tally):
    R = c.R
    Q, _ = quotient(R, jacobson(R))
    comps = semisimple_decomposition(Q)
    fields = all(is_field(F) for F in comps)
    qs = sorted(F.size for F in comps)
    L = lcm(*(q - 1 for q in qs)) if fields else 1
    t.detail.update(components=qs, all_fields=fields, lcm=L)
    literal_bad = []
    for n in sorted(set(c.ns) | {L}):
        truth = ndu(R, 2 * n - 1)
        literal = fields and all(n % (q - 1) == 0 for q in qs)
        variant = fields and all((2 * n - 1) % (q - 1) == 0 for q in qs)
        t.equiv(variant, truth, n=n, reading="(q-1) | (2n-1)")
        if literal != truth:
            literal_bad.append(n)
            t.flagged(n=n, exponent=2 * n - 1, literal_predicts=literal, computed=truth,
                      reading="(q-1) | n")
    if literal_bad:
        t.detail["literal_reading_refuted_at_n"] = literal_bad


def chk_l2_12(c: Ctx, t: Tally):
    R = c.R
    hyp0 = len(jacobson(R)) == 1 and right_ideals_have_idempotents(R).value
    red = is_reduced(R).value
    for n in c.ns:
        t.implies(hyp0 and ndu(R, 2 * n - 1), red, n=n)


def _odd_ns(c: Ctx, top: int = 4) -> list[int]:
    return [n for n in c.ns if n <= top]


def chk_t2_13(c: Ctx, t: Tally):
    R = c.R
    reg, pireg, red = is_regular(R).value, is_pi_regular(R).value, is_reduced(R).value
    for n in _odd_ns(c):
        d = ndu(R, 2 * n - 1)
        t.all_equal({"regular": reg and d, "pi_regular_reduced": pireg and red and d,
                     "power_identity": satisfies_power_identity(R, 2 * n).value}, n=n)


def chk_c2_14(c: Ctx, t: Tally):
    R = c.R
    reg, sreg, ureg = is_regular(R).value, is_strongly_regular(R).value, is_unit_regular(R).value
    for n in _odd_ns(c):
        d = ndu(R, 2 * n - 1)
        t.all_equal({"regular": reg and d, "strongly_regular": sreg and d,
                     "unit_regular": ureg and d,
                     "power_identity": satisfies_power_identity(R, 2 * n).value}, n=n)


def chk_p2_15(c: Ctx, t: Tally):
    R = c.R
    D = delta(R)
    ar = np.arange(R.size)
    du = is_delta_u(R).value
    two = R.times(2, R.one) in D
    for k in (1, 2, 3):
        m = 2 ** k
        lifts = not (D.bits[R.powv(ar, m)] & ~D.bits).any()
        t.equiv(du, two and ndu(R, m) and lifts, k=k)


def chk_t2_16(c: Ctx, t: Tally):
    ex, cl = is_exchange(c.R).value, is_clean(c.R).value
    for n in c.ns:
        if ndu(c.R, 2 * n - 1):
            t.equiv(ex, cl, n=n)
        else:
            t.counts["vacuous"] += 1


def chk_t2_22(c: Ctx, t: Tally):
    R = c.R
    vals = {"semiregular": is_semiregular(R).value, "exchange": is_exchange(R).value,
            "clean": is_clean(R).value}
    for k in (1, 2, 3):
        if ndu(R, 2 ** k - 1):
            t.all_equal(vals, k=k)
        else:
            t.counts["vacuous"] += 1


def chk_p2_17(c: Ctx, t: Tally):
    R = c.R
    _, valid = delta_u_exponent(R)
    L = valid[-1]
    vs = set(valid)
    for n in valid:
        for k in range(2 * n, L + 1, n):
            t.require(k in vs, n=n, k=k, source="valid exponent set")
    for n in c.ns:
        for k in range(2 * n, 3 * max(c.ns) + 1, n):
            t.implies(ndu(R, n), ndu(R, k), n=n, k=k)


def chk_l2_20(c: Ctx, t: Tally):
    q = c.R.size
    for n in range(1, 13):
        t.equiv(ndu(c.R, n), n % (q - 1) == 0, n=n)


# ---------------------------------------------------------------------------
# checks: extensions, triangular and matrix-type rings

def _transfer(c: Ctx, t: Tally, others: dict[str, FiniteRing], combine=all):
    for n in c.ns:
        vals = {k: ndu(S, n) for k, S in others.items()}
        t.equiv(ndu(c.R, n), combine(vals.values()), n=n, components=vals)


def chk_p3_4a(c: Ctx, t: Tally):
    R, base = c.R, c.R.meta["base"]
    r = R.meta["coords"].decode(np.arange(R.size))[0]
    t.require((units(R).bits == units(base).bits[r]).all(), identity="U(T(R,M)) = T(U(R), M)")
    t.require((delta(R).bits == delta(base).bits[r]).all(), identity="Delta(T(R,M)) = T(Delta(R), M)")
    _transfer(c, t, {"R": base})


def chk_p3_4b(c: Ctx, t: Tally):
    _transfer(c, t, {"R": c.R.meta["base"]})


def chk_p3_3(c: Ctx, t: Tally):
    _transfer(c, t, {"R": c.R.meta["base"]})


def chk_c3_11(c: Ctx, t: Tally):
    _transfer(c, t, {"R": c.R.meta["base"]})


def chk_c3_5(c: Ctx, t: Tally):
    R = c.R
    base_node = c.node.args[0]
    base = c.sub(0)
    poly = c.build(Call("PolyQ", (Call("PolyQ", (base_node, Num(2))), Num(2))))
    tt = c.build(Call("Triv", (Call("Triv", (base_node,)),)))
    t.require((poly.mul_table == R.mul_table).all() and (poly.add_table == R.add_table).all(),
              identity="DT(R,R) tables equal R[x,y]/(x^2,y^2) under a+bx+cy+dxy -> (a,b,c,d)")
    same = (tt.size == R.size and len(units(tt)) == len(units(R))
            and len(jacobson(tt)) == len(jacobson(R)) and len(delta(tt)) == len(delta(R)))
    t.require(same, identity="DT(R,R) and T(T(R,R)) agree on size, |U|, |J|, |Delta|")
    for n in c.ns:
        t.all_equal({"R": ndu(base, n), "DT(R,M)": ndu(R, n), "DT(R,R)": ndu(R, n),
                     "R[x,y]/(x^2,y^2)": ndu(poly, n)}, n=n)


def _morita_parts(R: FiniteRing):
    """Corner rings A = e1 R e1, B = e2 R e2 and the trace conditions
    MN in J(A), NM in J(B), computed from the ring itself."""
    kind = R.meta["kind"]
    one_a = R.meta["left"].one if kind == "trivial_morita" else R.meta["base"].one
    e1 = R.meta["coords"].encode_one([one_a, 0, 0, 0])
    e2 = R.sub(R.one, e1)
    M = R.mul_table
    ar = np.arange(R.size)
    A, B = corner(R, e1), corner(R, e2)
    Mset = np.unique(M[M[e1, ar], e2])
    Nset = np.unique(M[M[e2, ar], e1])
    MN = np.unique(M[Mset[:, None], Nset[None, :]])
    NM = np.unique(M[Nset[:, None], Mset[None, :]])
    JA = np.zeros(R.size, dtype=bool)
    JA[_ids_of(A, jacobson(A))] = True
    JB = np.zeros(R.size, dtype=bool)
    JB[_ids_of(B, jacobson(B))] = True
    return A, B, bool(JA[MN].all()), bool(JB[NM].all())


def chk_p3_14(c: Ctx, t: Tally):
    A, B, mn, nm = _morita_parts(c.R)
    t.detail.update(MN_in_JA=mn, NM_in_JB=nm)
    for n in c.ns:
        m = 2 * n - 1
        t.equiv(ndu(c.R, m), ndu(A, m) and ndu(B, m) and mn and nm, n=n, exponent=m)


def chk_p3_6(c: Ctx, t: Tally):
    A, B, mn, nm = _morita_parts(c.R)
    t.detail.update(MN_in_JA=mn, NM_in_JB=nm)
    for n in c.ns:
        if mn and nm:
            t.equiv(ndu(c.R, n), ndu(A, n) and ndu(B, n), n=n)
        else:
            t.counts["vacuous"] += 1


def chk_c3_7(c: Ctx, t: Tally):
    _transfer(c, t, {"R": c.R.meta["left"], "S": c.R.meta["right"]})


def chk_c3_8(c: Ctx, t: Tally):
    base, s = c.R.meta["base"], c.R.meta["s"]
    if s not in jacobson(base):
        t.counts["vacuous"] += len(c.ns)
        t.detail["s_in_J"] = False
        return
    _transfer(c, t, {"R": base})


def chk_c3_9(c: Ctx, t: Tally):
    R, base, s = c.R, c.R.meta["base"], c.R.meta["s"]
    if R.meta["k"] == 2:
        K = C.k_s(base, base.mul(s, s))
        t.require((K.mul_table == R.mul_table).all() and (K.add_table == R.add_table).all(),
                  identity="M_2(R;s) tables equal K_{s^2}(R)")
    if s not in jacobson(base):
        t.counts["vacuous"] += len(c.ns)
        t.detail["s_in_J"] = False
        return
    _transfer(c, t, {"R": base})


def chk_c3_10(c: Ctx, t: Tally):
    R = c.R
    A, B, M, N = R.meta["left"], R.meta["right"], R.meta["M"], R.meta["N"]
    P = C.product([A, B])
    T = C.trivial_extension(P, C.morita_sum_bimodule(P, M, N))
    a, m, n_, b = R.meta["coords"].decode(np.arange(R.size))
    pc, tc = P.meta["coords"], T.meta["coords"]
    mc = C._Coords([M.size, N.size])
    phi = tc.encode([pc.encode([a, b]), mc.encode([m, n_])])
    h = RingHom(R, T, phi)
    t.require(h.surjective and h.injective and h.is_homomorphism(),
              identity="[[a,m],[n,b]] -> ((a,b),(m,n)) is an isomorphism onto T(AxB, M+N)")
    _transfer(c, t, {"A": A, "B": B})


# ---------------------------------------------------------------------------
# checks: group rings

def _p_group_hyp(c: Ctx):
    R, RG = c.R.meta["base"], c.R
    G = RG.meta["group"]
    p = _prime_power_base(G.size)
    return R, p, (p is not None and R.times(p, R.one) in jacobson(R))


def chk_gr1(c: Ctx, t: Tally):
    base = c.R.meta["base"]
    for n in c.ns:
        t.implies(ndu(c.R, n), ndu(base, n), n=n)


def chk_l4_14(c: Ctx, t: Tally):
    RG = c.R
    eps = C.augmentation_map(RG)
    K = C.augmentation_ideal(RG)
    t.require(eps.surjective and eps.is_homomorphism() and K == eps.kernel(),
              identity="augmentation map is a surjective homomorphism with kernel eps(RG)")
    _, p, hyp = _p_group_hyp(c)
    t.detail.update(p=p, p_in_J=bool(hyp))
    t.implies(hyp, K <= jacobson(RG))


def chk_gr2(c: Ctx, t: Tally):
    base, p, hyp = _p_group_hyp(c)
    for n in c.ns:
        t.implies(hyp and ndu(base, n), ndu(c.R, n), n=n)


# ---------------------------------------------------------------------------
# registry

@dataclass(frozen=True)
class TheoremCheck:
    id: str
    summary: str
    anchor: str
    checker: Callable[[Ctx, Tally], None]
    applies: Callable[[Ctx], bool] = lambda c: True
    tier: str = "discriminating"


def _kind_is(*kinds):
    return lambda c: c.kind in kinds


def _is_polyq(c: Ctx) -> bool:
    return c.kind == "poly_quot" and c.R.meta["k"] >= 2


def _is_polyq_id(c: Ctx) -> bool:
    return _is_polyq(c) and c.R.meta["alpha"].is_identity


def _is_context(c: Ctx) -> bool:
    return c.kind in ("k_s", "trivial_morita") or (c.kind == "m_n_s" and c.R.meta["k"] == 2)


REGISTRY: dict[str, TheoremCheck] = {t.id: t for t in (
    TheoremCheck("AXIOMS", "ring axioms hold", "associative ring with identity element", chk_axioms,
                 tier="property"),
    TheoremCheck("DELTA-AX", "Delta = J(unit subring); J in Delta; Delta = J iff ideal; Delta closed",
                 "Delta(R)=J(T), where T is the subring", chk_delta_ax, tier="anti-bug"),
    TheoremCheck("SANITY", "finite rings are clean, exchange, semiregular, strongly pi-regular, "
                 "Dedekind-finite; prime radical = J", "every finite ring is clean", chk_sanity,
                 tier="consistency"),
    TheoremCheck("P2.3", "product is n-DU iff every factor is", "each direct component R_i is",
                 chk_p2_3, _kind_is("product")),
    TheoremCheck("P2.4", "n odd and n-DU implies 2 in Delta", "where n is an odd number", chk_p2_4),
    TheoremCheck("P2.5", "n-DU passes to quotients whose units lift", "all units of T lift to units",
                 chk_p2_5, lambda c: c.R.size <= IDEAL_CAP),
    TheoremCheck("P2.6", "unital subrings with S meet Delta(R) in Delta(S), and the center, inherit n-DU",
                 "S ∩ Δ(R) ⊆ Δ(S)", chk_p2_6),
    TheoremCheck("T2.7", "R is n-DU iff R/I is, for ideals I in J", "R is n-ΔU if, and only if, so is R/I",
                 chk_t2_7),
    TheoremCheck("C2.8", "R is n-DU iff R/J is", "R/J(R) is n-ΔU", chk_c2_8),
    TheoremCheck("P2.9", "corner rings inherit n-DU", "eRe is an n-ΔU", chk_p2_9),
    TheoremCheck("P2.10", "M_k(R) is not (2j-1)-DU", "M_n(R) is not a (2k−1)-ΔU", chk_p2_10,
                 lambda c: c.kind == "matrix" and c.R.meta["k"] >= 2),
    TheoremCheck("P2.11", "(2k-1)-DU rings are Dedekind-finite", "Every (2k−1)-ΔU ring is Dedekind-finite",
                 chk_p2_11, tier="consistency"),
    TheoremCheck("P2.17", "n-DU and n | k imply k-DU", "R is a k-ΔU ring", chk_p2_17),
    TheoremCheck("P2.SL", "semilocal: (2n-1)-DU iff R/J is a product of fields F_q with (q-1) | n",
                 "R/J(R) ≅ ∏ F_{p^{k_i}}", chk_p2_sl),
    TheoremCheck("L2.12", "J = 0, right ideals have idempotents, (2n-1)-DU imply reduced",
                 "then R is reduced", chk_l2_12),
    TheoremCheck("T2.13", "regular (2n-1)-DU iff pi-regular reduced (2n-1)-DU iff x^(2n) = x",
                 "R has the identity x^{2n} = x", chk_t2_13),
    TheoremCheck("C2.14", "regular / strongly regular / unit-regular (2n-1)-DU iff x^(2n) = x",
                 "unit-regular (2n−1)-ΔU", chk_c2_14),
    TheoremCheck("P2.15", "DU iff 2 in Delta, 2^k-DU and x^(2^k) in Delta implies x in Delta",
                 "x^{2^k} ∈ Δ(R), then x ∈ Δ(R)", chk_p2_15),
    TheoremCheck("T2.16", "(2n-1)-DU: exchange iff clean", "R is a clean ring", chk_t2_16,
                 tier="consistency"),
    TheoremCheck("L2.20", "a finite field F is n-DU iff (|F|-1) | n", "F is finite and (|F|−1) | n",
                 chk_l2_20, lambda c: is_field(c.R)),
    TheoremCheck("T2.22", "(2^k-1)-DU: semiregular iff exchange iff clean", "R is a semi-regular ring",
                 chk_t2_22, tier="consistency"),
    TheoremCheck("P3.4a", "T(R,M) is n-DU iff R is; U and Delta of T(R,M)", "trivial extension T(R,M) is an n-ΔU",
                 chk_p3_4a, _kind_is("trivial_extension")),
    TheoremCheck("P3.4b", "T_k(R) is n-DU iff R is", "upper triangular matrix ring T_n(R)",
                 chk_p3_4b, _kind_is("upper_triangular")),
    TheoremCheck("P3.3", "T_k(R, alpha) is n-DU iff R is", "T_n(R,α) is a k-ΔU ring", chk_p3_3,
                 _kind_is("skew_triangular")),
    TheoremCheck("C3.11", "R[x;alpha]/(x^k) is n-DU iff R is", "R[x;α]/(xⁿ) is a k-ΔU", chk_c3_11, _is_polyq),
    TheoremCheck("C3.12", "R[x]/(x^k) is n-DU iff R is", "R[x]/(xⁿ) is a k-ΔU", chk_c3_11, _is_polyq_id),
    TheoremCheck("C3.5", "R, DT(R,M), DT(R,R), R[x,y]/(x^2,y^2) are n-DU together", "DT(R, M) is an n-ΔU",
                 chk_c3_5, _kind_is("dt")),
    TheoremCheck("P3.14", "context ring (2n-1)-DU iff A, B are and MN in J(A), NM in J(B)",
                 "MN ⊆ J(A), NM ⊆ J(B)", chk_p3_14, _is_context),
    TheoremCheck("P3.6", "with MN in J(A), NM in J(B): context ring n-DU iff A and B are",
                 "both A and B are n-ΔU", chk_p3_6, _is_context),
    TheoremCheck("C3.7", "T(R,S,M) is n-DU iff R and S are", "T(R,S,M)", chk_c3_7, _kind_is("formal_triangular")),
    TheoremCheck("C3.8", "s in J: K_s(R) is n-DU iff R is", "K_s(R) is an n-ΔU", chk_c3_8, _kind_is("k_s")),
    TheoremCheck("C3.9", "s in J: M_k(R;s) is n-DU iff R is; M_2(R;s) = K_{s^2}(R)",
                 "M_n(R;s) is a k-ΔU", chk_c3_9, _kind_is("m_n_s")),
    TheoremCheck("C3.10", "trivial Morita context is n-DU iff A and B are", "trivial Morita context",
                 chk_c3_10, _kind_is("trivial_morita")),
    TheoremCheck("GR1", "RG n-DU implies R n-DU", "then R is too n-ΔU", chk_gr1, _kind_is("group_ring")),
    TheoremCheck("L4.14", "p in J(R), G a p-group: eps(RG) in J(RG)", "ε(RG) ⊆ J(RG)", chk_l4_14,
                 _kind_is("group_ring")),
    TheoremCheck("GR2", "R n-DU, G a p-group, p in J(R) imply RG n-DU", "RG is an n-ΔU ring", chk_gr2,
                 _kind_is("group_ring")),
)}


def check_ids() -> list[str]:
    return sorted(REGISTRY)


# ---------------------------------------------------------------------------
# running

def _ns_for(R: FiniteRing, base: Iterable[int]) -> list[int]:
    return sorted(set(base) | {delta_u_exponent(R)[0]})


def run_entry(entry: RingEntry, ids: Iterable[str], n_values: Iterable[int]) -> list[CheckResult]:
    out = []
    ns = None
    for cid in ids:
        chk = REGISTRY[cid]
        try:
            if ns is None:
                ns = _ns_for(entry.ring, n_values)
            ctx = Ctx(entry, ns)
            if not chk.applies(ctx):
                continue
            t = Tally()
            chk.checker(ctx, t)
            out.append(CheckResult(cid, entry.text, t.status, {"n": ns}, t.failure or t.flag,
                                   chk.tier, dict(sorted(t.counts.items())), t.detail))
        except RingLabError as e:
            out.append(CheckResult(cid, entry.text, "skipped", {"n": ns or []}, None, chk.tier,
                                   {}, {"error": e.to_dict()}))
    return out


def _resolve_ids(only: Iterable[str] | None) -> list[str]:
    if not only:
        return check_ids()
    ids = []
    for i in only:
        key = i.strip()
        match = {k.upper(): k for k in REGISTRY}.get(key.upper())
        if match is None:
            raise KeyError(key)
        ids.append(match)
    return sorted(set(ids))


def _work(args) -> tuple[list[dict], list[dict], list[str]]:
    text, quotients, ids, n_values = args
    results, skipped, names = [], [], []
    for e in entries_for(parse_ring_expr(text), quotients):
        if isinstance(e, SkippedRing):
            skipped.append({"ring": e.text, "error": e.error})
            continue
        names.append(e.text)
        results.extend(r.to_dict() for r in run_entry(e, ids, n_values))
    return results, skipped, names


def run_suite(corpus: CorpusSpec | list, only: Iterable[str] | None = None, jobs: int = 1,
              n_values: Iterable[int] | None = None, progress: Callable[[str], None] | None = None):
    """Run checks over a corpus; returns (results, skipped rings, ring names),
    each sorted canonically."""
    ids = _resolve_ids(only)
    if isinstance(corpus, CorpusSpec):
        nodes, quotients = expand(corpus), corpus.quotients_by_jacobson
        n_values = list(n_values) if n_values is not None else corpus.ns
    else:
        nodes = [parse_ring_expr(x) if isinstance(x, str) else x for x in corpus]
        quotients = False
        n_values = list(n_values) if n_values is not None else list(range(1, 9))
    tasks = [(str(n), quotients, ids, n_values) for n in nodes]
    results, skipped, names = [], [], []

    def collect(out):
        r, s, nm = out
        results.extend(r)
        skipped.extend(s)
        names.extend(nm)
        if progress:
            for x in nm:
                progress(x)

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for out in pool.map(_work, tasks, chunksize=4):
                collect(out)
    else:
        for task in tasks:
            collect(_work(task))
    results.sort(key=lambda r: (r["check_id"], r["ring"]))
    skipped.sort(key=lambda s: s["ring"])
    return results, skipped, names


def run_check(check_id: str, corpus: CorpusSpec | list, **params) -> list[CheckResult]:
    """Run one registered check; ``n=`` (int or list) overrides the n-range."""
    ids = _resolve_ids([check_id])
    n = params.get("n")
    n_values = None if n is None else ([n] if isinstance(n, int) else list(n))
    if isinstance(corpus, CorpusSpec):
        nodes, quotients = expand(corpus), corpus.quotients_by_jacobson
        n_values = n_values or corpus.ns
    else:
        nodes = [parse_ring_expr(x) if isinstance(x, str) else x for x in corpus]
        quotients = False
        n_values = n_values or list(range(1, 9))
    out = []
    for node in nodes:
        for e in entries_for(node, quotients):
            if isinstance(e, RingEntry):
                out.extend(run_entry(e, ids, n_values) if n is None else _run_fixed(e, ids, n_values))
    return sorted(out, key=lambda r: (r.check_id, r.ring))


def _run_fixed(entry: RingEntry, ids, n_values) -> list[CheckResult]:
    """Like run_entry but with exactly the given exponents."""
    out = []
    for cid in ids:
        chk = REGISTRY[cid]
        ctx = Ctx(entry, sorted(set(n_values)))
        if not chk.applies(ctx):
            continue
        t = Tally()
        chk.checker(ctx, t)
        out.append(CheckResult(cid, entry.text, t.status, {"n": ctx.ns}, t.failure or t.flag,
                               chk.tier, dict(sorted(t.counts.items())), t.detail))
    return out


def summarize(results: list[dict]) -> dict:
    by_check: dict[str, Counter] = {}
    for r in results:
        by_check.setdefault(r["check_id"], Counter())[r["status"]] += 1
    totals = Counter(r["status"] for r in results)
    flagged = [{"check_id": r["check_id"], "ring": r["ring"], "witness": r.get("witness")}
               for r in results if r["status"] == "flagged"]
    fails = [{"check_id": r["check_id"], "ring": r["ring"], "witness": r.get("witness")}
             for r in results if r["status"] == "fail"]
    return {
        "by_check": {k: {s: v[s] for s in STATUSES if v[s]} for k, v in sorted(by_check.items())},
        "totals": {s: totals[s] for s in STATUSES},
        "counterexamples": fails,
        "flagged_discrepancies": flagged,
    }
