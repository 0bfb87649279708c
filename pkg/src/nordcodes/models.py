"""Concrete algebras carrying near-order / near-weight functions, plus
finite-sample axiom and filtration checkers.

Four models are provided: the constant map on a polynomial ring, the
ideal-membership map on a polynomial ring, the Laurent ring F[X,Y]/(XY-1)
graded by the Y-degree, and valuation adapters over a Hermitian curve.

All verdicts are exhaustive over a bounded, deterministically enumerated
sample; nothing is probabilistic.  When the full coefficient space is too
large the sample is every element supported on at most two basis monomials,
and triple-quantified axioms run over leading-coefficient-1 representatives
(equivalent under scalar invariance, which is itself checked exhaustively).
"""

from __future__ import annotations

import json
from math import gcd

import numpy as np

from .errors import GIsConstant, SampleTooLarge, TrivialModel
from .field import Field
from .hermitian import HermitianCurve

NEG_INF = float("-inf")

_FULL_ENUM_LIMIT = 4096
_SAMPLE_CAP = 2000
_FULL_TRIPLE_LIMIT = 260


# ---------------------------------------------------------------------------
# model interface


class NWeightModel:
    """An F-algebra with a value map rho; elements are hashable payloads."""

    name: str
    field: Field

    # algebra ops, overridden per model
    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, f, g):
        raise NotImplementedError

    def neg(self, f):
        raise NotImplementedError

    def scale(self, lam: int, f):
        raise NotImplementedError

    def mul(self, f, g):
        raise NotImplementedError

    def rho(self, f):
        raise NotImplementedError

    def basis(self, bound: int) -> list:
        """Deterministic monomial-like spanning set for enumeration."""
        raise NotImplementedError

    def sub(self, f, g):
        return self.add(f, self.neg(g))

    def is_zero(self, f) -> bool:
        return f == self.zero()

    def in_unit_part(self, f) -> bool:
        return self.rho(f) <= self.rho(self.one())

    def in_m_part(self, f) -> bool:
        return self.rho(f) > self.rho(self.one())

    def elements(self, bound: int) -> list:
        """Sample: the full span of basis(bound) if small enough, otherwise
        every combination of at most two basis monomials.  Zero comes first."""
        basis = self.basis(bound)
        q = self.field.q
        if q ** len(basis) <= _FULL_ENUM_LIMIT:
            out = [self.zero()]
            for mono in basis:
                new = []
                for f in out:
                    for c in range(1, q):
                        new.append(self.add(f, self.scale(c, mono)))
                out.extend(new)
            # rebuild in a canonical deterministic order
            return sorted(set(out), key=_sort_key)
        out = {self.zero()}
        for i, m1 in enumerate(basis):
            for c1 in range(1, q):
                f1 = self.scale(c1, m1)
                out.add(f1)
                for m2 in basis[i + 1 :]:
                    for c2 in range(1, q):
                        out.add(self.add(f1, self.scale(c2, m2)))
        return sorted(out, key=_sort_key)

    def describe(self) -> str:
        return self.name


def _sort_key(payload):
    if hasattr(payload, "support"):
        return repr(payload.support)
    return repr(payload)


# ---------------------------------------------------------------------------
# polynomial-ring models (payload: trimmed low-to-high coefficient tuple)


class _PolynomialAlgebra(NWeightModel):
    def __init__(self, field: Field):
        self.field = field

    def zero(self):
        return ()

    def one(self):
        return (1,)

    def add(self, f, g):
        F = self.field
        n = max(len(f), len(g))
        out = [F.add(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0) for i in range(n)]
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def neg(self, f):
        return tuple(self.field.neg(c) for c in f)

    def scale(self, lam, f):
        if lam == 0:
            return ()
        F = self.field
        return tuple(F.mul(lam, c) for c in f)

    def mul(self, f, g):
        if not f or not g:
            return ()
        F = self.field
        out = [0] * (len(f) + len(g) - 1)
        for i, ci in enumerate(f):
            if ci:
                for j, cj in enumerate(g):
                    out[i + j] = F.add(out[i + j], F.mul(ci, cj))
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def basis(self, bound):
        return [tuple([0] * d + [1]) for d in range(bound + 1)]


class ConstantModel(_PolynomialAlgebra):
    """rho(f) = c for every nonzero f; the trivial n-order of a constant map."""

    def __init__(self, field: Field, c: int):
        super().__init__(field)
        self.c = c
        self.name = f"constant(c={c})"

    def rho(self, f):
        return NEG_INF if not f else self.c


class IdealModel(_PolynomialAlgebra):
    """rho(f) = 0 on the nonzero multiples of a fixed nonconstant g, else 1."""

    def __init__(self, field: Field, g):
        super().__init__(field)
        g = tuple(g)
        while g and g[-1] == 0:
            g = g[:-1]
        if len(g) < 2:
            raise GIsConstant("g must have degree >= 1")
        self.g = g
        self.name = f"ideal(g={list(g)})"

    def _divisible(self, f) -> bool:
        F = self.field
        rem = list(f)
        g = self.g
        lead_inv = F.inv(g[-1])
        while len(rem) >= len(g):
            if rem[-1] == 0:
                rem.pop()
                continue
            factor = F.mul(rem[-1], lead_inv)
            shift = len(rem) - len(g)
            for i, ci in enumerate(g):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(factor, ci))
            rem.pop()
        return not any(rem)

    def rho(self, f):
        if not f:
            return NEG_INF
        return 0 if self._divisible(f) else 1


# ---------------------------------------------------------------------------
# Laurent model F[X,Y]/(XY-1): payload is a sorted tuple of (exponent, coeff)
# with y^e identified with x^(-e); the f2 part is the negative exponents.


class LaurentModel(NWeightModel):
    def __init__(self, field: Field):
        self.field = field
        self.name = "laurent"

    def zero(self):
        return ()

    def one(self):
        return ((0, 1),)

    def add(self, f, g):
        F = self.field
        acc = dict(f)
        for e, c in g:
            acc[e] = F.add(acc.get(e, 0), c)
        return tuple(sorted((e, c) for e, c in acc.items() if c != 0))

    def neg(self, f):
        return tuple((e, self.field.neg(c)) for e, c in f)

    def scale(self, lam, f):
        if lam == 0:
            return ()
        F = self.field
        return tuple((e, F.mul(lam, c)) for e, c in f)

    def mul(self, f, g):
        F = self.field
        acc: dict[int, int] = {}
        for e1, c1 in f:
            for e2, c2 in g:
                e = e1 + e2
                acc[e] = F.add(acc.get(e, 0), F.mul(c1, c2))
        return tuple(sorted((e, c) for e, c in acc.items() if c != 0))

    def rho(self, f):
        if not f:
            return NEG_INF
        lowest = f[0][0]
        return -lowest if lowest < 0 else 0

    def basis(self, bound):
        return [((e, 1),) for e in range(-bound, bound + 1)]


# ---------------------------------------------------------------------------
# curve adapters


class CurveValuationModel(NWeightModel):
    """rho (pole order at infinity) or sigma (pole order at the origin) on the
    coordinate ring of a Hermitian curve; sample drawn from R_bound^bound."""

    def __init__(self, curve: HermitianCurve, which: str):
        if which not in ("rho", "sigma"):
            raise ValueError("which must be 'rho' or 'sigma'")
        self.curve = curve
        self.field = curve.field
        self.which = which
        self.name = f"curve(q={curve.q}, {which})"

    def zero(self):
        return self.curve.zero_function()

    def one(self):
        return self.curve.one_function()

    def add(self, f, g):
        return f + g

    def neg(self, f):
        return -f

    def scale(self, lam, f):
        return f.scale(lam)

    def mul(self, f, g):
        return f * g

    def rho(self, f):
        if f.is_zero():
            return NEG_INF
        val = f.valuations()
        return val.rho if self.which == "rho" else val.sigma

    def basis(self, bound):
        return [self.curve.monomial(a, b) for a, b in self.curve.riemann_roch_basis(bound, bound)]


def model_constant(field: Field, c: int) -> ConstantModel:
    return ConstantModel(field, c)


def model_ideal(field: Field, g) -> IdealModel:
    return IdealModel(field, g)


def model_laurent(field: Field) -> LaurentModel:
    return LaurentModel(field)


def model_curve(curve: HermitianCurve, which: str) -> CurveValuationModel:
    return CurveValuationModel(curve, which)


# ---------------------------------------------------------------------------
# axiom checking


class AxiomReport:
    def __init__(self, model_name: str, bound: int, sample_size: int):
        self.model_name = model_name
        self.bound = bound
        self.sample_size = sample_size
        self.entries: dict[str, dict] = {}

    def record(self, axiom: str, ok: bool, witness=None):
        entry = {"axiom": axiom, "verdict": "PASS" if ok else "FAIL"}
        if not ok:
            entry["witness"] = witness
        self.entries[axiom] = entry

    def passed(self, axiom: str) -> bool:
        return self.entries[axiom]["verdict"] == "PASS"

    def all_near_order_pass(self) -> bool:
        return all(self.passed(a) for a in ("N0", "N1", "N2", "N3", "N4"))

    def all_near_weight_pass(self) -> bool:
        return self.all_near_order_pass() and self.passed("N5")

    def order_axioms_pass(self) -> bool:
        return all(self.passed(a) for a in ("O3", "O4"))

    def to_json(self) -> dict:
        return {
            "model": self.model_name,
            "bound": self.bound,
            "sample_size": self.sample_size,
            "results": [self.entries[k] for k in sorted(self.entries)],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, default=str)


def _canonical_reps(model: NWeightModel, sample):
    """Leading-coefficient-1 representatives (plus zero), deduplicated in
    first-occurrence order."""
    F = model.field
    seen = {}
    zero = model.zero()
    reps = [zero]
    seen[zero] = True
    for f in sample:
        if model.is_zero(f):
            continue
        lead = _leading_coeff(f)
        g = model.scale(F.inv(lead), f)
        if g not in seen:
            seen[g] = True
            reps.append(g)
    return reps


def _leading_coeff(payload):
    # payloads are coeff tuples, tuples of (key, coeff) pairs, or curve
    # functions exposing .support
    if hasattr(payload, "support"):
        return payload.support[0][1]
    for item in payload:
        if isinstance(item, tuple):
            if item[1] != 0:
                return item[1]
        elif item != 0:
            return item
    raise ValueError("zero payload has no leading coefficient")


def _rho_vec(model, elems):
    return np.array([model.rho(f) for f in elems], dtype=float)


def axiom_check(model: NWeightModel, bound: int) -> AxiomReport:
    """Exhaustively check (N0)-(N5), the order axioms (O3)/(O4), and the
    companion lemmas over the bounded sample."""
    sample = model.elements(bound)
    if len(sample) > _SAMPLE_CAP:
        raise SampleTooLarge(f"sample has {len(sample)} elements (> {_SAMPLE_CAP})")
    report = AxiomReport(model.describe(), bound, len(sample))
    F = model.field
    units = [c for c in range(1, F.q)]
    rho1 = model.rho(model.one())
    zero = model.zero()

    rhos = _rho_vec(model, sample)

    # N0: rho(f) = -inf iff f = 0
    bad = next(
        (f for f, r in zip(sample, rhos) if (r == NEG_INF) != model.is_zero(f)), None
    )
    report.record("N0", bad is None, witness={"f": bad})

    # N1: scalar invariance
    witness = None
    for f, r in zip(sample, rhos):
        for lam in units:
            if model.rho(model.scale(lam, f)) != r:
                witness = {"f": f, "lambda": lam}
                break
        if witness:
            break
    report.record("N1", witness is None, witness)

    # N2 + Lemma 3.13(3): subadditivity of max, equality on distinct values
    n2_witness = max_witness = None
    for i, f in enumerate(sample):
        rf = rhos[i]
        for j in range(i, len(sample)):
            g = sample[j]
            rg = rhos[j]
            rsum = model.rho(model.add(f, g))
            hi = max(rf, rg)
            if rsum > hi and n2_witness is None:
                n2_witness = {"f": f, "g": g, "rho(f+g)": rsum}
            if rf != rg and rsum != hi and max_witness is None:
                max_witness = {"f": f, "g": g, "rho(f+g)": rsum}
        if n2_witness and max_witness:
            break
    report.record("N2", n2_witness is None, n2_witness)
    report.record("lemma_max_rule", max_witness is None, max_witness)

    # representatives and product-value matrix for triple-quantified axioms
    if len(sample) <= _FULL_TRIPLE_LIMIT:
        reps = list(sample)
    else:
        reps = _canonical_reps(model, sample)
    rrhos = _rho_vec(model, reps)
    nrep = len(reps)
    prodrho = np.empty((nrep, nrep), dtype=float)
    products = [[None] * nrep for _ in range(nrep)]
    for i in range(nrep):
        prodrho[i, i] = model.rho(model.mul(reps[i], reps[i]))
        for j in range(i + 1, nrep):
            p = model.mul(reps[i], reps[j])
            products[i][j] = products[j][i] = p
            prodrho[i, j] = prodrho[j, i] = model.rho(p)
    m_mask = rrhos > rho1
    nonzero_mask = rrhos > NEG_INF

    # N3: rho(f) < rho(g) implies rho(fh) <= rho(gh), strict for h in M
    n3_witness = None
    for i in range(nrep):
        if n3_witness:
            break
        greater = np.where(rrhos > rrhos[i])[0]
        if greater.size == 0:
            continue
        weak_bad = prodrho[i] > prodrho[greater]  # (|greater|, nrep)
        strict_bad = (prodrho[i] >= prodrho[greater]) & m_mask[np.newaxis, :]
        bad = weak_bad | strict_bad
        if bad.any():
            gi, h = np.argwhere(bad)[0]
            n3_witness = {"f": reps[i], "g": reps[greater[gi]], "h": reps[h]}
    report.record("N3", n3_witness is None, n3_witness)

    # O3: rho(f) < rho(g), h != 0 implies strict inequality
    o3_witness = None
    for i in range(nrep):
        if o3_witness:
            break
        greater = np.where(rrhos > rrhos[i])[0]
        if greater.size == 0:
            continue
        bad = (prodrho[i] >= prodrho[greater]) & nonzero_mask[np.newaxis, :]
        if bad.any():
            gi, h = np.argwhere(bad)[0]
            o3_witness = {"f": reps[i], "g": reps[greater[gi]], "h": reps[h]}
    report.record("O3", o3_witness is None, o3_witness)

    # N4 (+ uniqueness of lambda) on M-pairs, O4 on all equal-rho pairs
    n4_witness = unique_witness = o4_witness = None
    by_rho: dict[float, list] = {}
    for f, r in zip(sample, rhos):
        if r > NEG_INF:
            by_rho.setdefault(r, []).append(f)
    for r, group in sorted(by_rho.items()):
        in_m = r > rho1
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                f, g = group[a], group[b]
                lams = [
                    lam
                    for lam in units
                    if model.rho(model.sub(f, model.scale(lam, g))) < r
                ]
                if in_m:
                    if not lams and n4_witness is None:
                        n4_witness = {"f": f, "g": g, "rho": r}
                    if len(lams) > 1 and unique_witness is None:
                        unique_witness = {"f": f, "g": g, "lambdas": lams}
                if not lams and o4_witness is None:
                    o4_witness = {"f": f, "g": g, "rho": r}
    report.record("N4", n4_witness is None, n4_witness)
    report.record("lemma_lambda_unique", unique_witness is None, unique_witness)
    report.record("O4", o4_witness is None, o4_witness)

    # N5: rho(fg) <= rho(f) + rho(g); equality on M x M
    n5_witness = None
    nz = np.where(nonzero_mask)[0]
    for i in nz:
        sums = rrhos[i] + rrhos[nz]
        row = prodrho[i, nz]
        over = row > sums
        eq_required = m_mask[i] & m_mask[nz]
        uneq = eq_required & (row != sums)
        bad = over | uneq
        if bad.any():
            j = nz[np.argwhere(bad)[0][0]]
            n5_witness = {
                "f": reps[i],
                "g": reps[j],
                "rho(fg)": prodrho[i, j],
                "rho(f)+rho(g)": rrhos[i] + rrhos[j],
            }
            break
    report.record("N5", n5_witness is None, n5_witness)

    # Lemma 3.12: M contains no zero divisors
    zd_witness = None
    m_idx = np.where(m_mask)[0]
    if m_idx.size:
        bad = prodrho[np.ix_(m_idx, nz)] == NEG_INF
        if bad.any():
            a, b = np.argwhere(bad)[0]
            zd_witness = {"f": reps[m_idx[a]], "g": reps[nz[b]]}
    report.record("lemma_no_zero_divisors", zd_witness is None, zd_witness)

    # Lemma 3.11 classification: U cap sample = F  iff  O0-O4 pass
    u_sample = [f for f, r in zip(sample, rhos) if r <= rho1]
    constants = {zero} | {model.scale(lam, model.one()) for lam in units}
    u_is_field = set(u_sample) == constants
    orders_ok = report.order_axioms_pass()
    report.record(
        "order_classification",
        u_is_field == orders_ok,
        witness={"U_equals_F": u_is_field, "order_axioms_pass": orders_ok},
    )
    report.entries["order_classification"]["U_equals_F"] = u_is_field
    report.entries["order_classification"]["is_order"] = u_is_field and orders_ok

    return report


# ---------------------------------------------------------------------------
# normalization


class NormalizedModel(NWeightModel):
    """Same algebra, rho divided by the sampled gcd on M and clamped to 0
    on U.  The gcd is taken over the finite sample only."""

    def __init__(self, base: NWeightModel, divisor: int):
        self.base = base
        self.field = base.field
        self.divisor = divisor
        self.name = f"normalized({base.describe()}, d={divisor})"

    def zero(self):
        return self.base.zero()

    def one(self):
        return self.base.one()

    def add(self, f, g):
        return self.base.add(f, g)

    def neg(self, f):
        return self.base.neg(f)

    def scale(self, lam, f):
        return self.base.scale(lam, f)

    def mul(self, f, g):
        return self.base.mul(f, g)

    def basis(self, bound):
        return self.base.basis(bound)

    def rho(self, f):
        r = self.base.rho(f)
        if r == NEG_INF:
            return NEG_INF
        if r <= self.base.rho(self.base.one()):
            return 0
        return r // self.divisor


def normalize(model: NWeightModel, bound: int) -> NormalizedModel:
    sample = model.elements(bound)
    m_values = [model.rho(f) for f in sample if not model.is_zero(f) and model.in_m_part(f)]
    if not m_values:
        raise TrivialModel("no non-unit elements in the sample")
    d = 0
    for v in m_values:
        d = gcd(d, int(v))
    return NormalizedModel(model, d)


# ---------------------------------------------------------------------------
# filtration checks (subspace chain seen through sampled representatives)


def filtration_check(model: NWeightModel, bound: int) -> dict:
    sample = model.elements(bound)
    nonzero = [f for f in sample if not model.is_zero(f)]
    if not any(model.in_m_part(f) for f in nonzero):
        raise TrivialModel("no non-unit elements in the sample")
    F = model.field
    units = list(range(1, F.q))
    rhos = {f: model.rho(f) for f in nonzero}
    values = sorted({int(r) for r in rhos.values()})
    if values[0] != 0:
        values.insert(0, 0)

    def iota(h):
        r = rhos.get(h, model.rho(h))
        for idx, v in enumerate(values):
            if r <= v:
                return idx
        return None

    reps = []
    for v in values:
        reps.append(next(f for f in nonzero if rhos[f] == v))

    failures = []
    skipped = 0

    # Remark-style representative sanity: iota(f_i) = i, rho(f_i) = rho_i
    for i, f in enumerate(reps):
        if iota(f) != i or rhos[f] != values[i]:
            failures.append({"check": "representative", "i": i, "f": f})

    # one-step growth: each new level is one-dimensional over the previous
    for i in range(len(values) - 1):
        level = [f for f in nonzero if rhos[f] == values[i + 1]]
        if not level:
            failures.append({"check": "level_nonempty", "i": i + 1})
            continue
        for a in range(len(level)):
            for b in range(a + 1, len(level)):
                f, g = level[a], level[b]
                lams = [
                    lam
                    for lam in units
                    if model.rho(model.sub(f, model.scale(lam, g))) <= values[i]
                ]
                if len(lams) != 1:
                    failures.append(
                        {"check": "one_step_growth", "f": f, "g": g, "lambdas": lams}
                    )

    # l(i, j) monotonicity and the n-weight product rule, via representatives
    max_v = values[-1]
    is_weight = True  # checked below through the product rule
    ell_cache = {}

    def ell(i, j):
        if (i, j) in ell_cache:
            return ell_cache[(i, j)]
        p = model.mul(reps[i], reps[j])
        r = model.rho(p)
        if r == NEG_INF or r > max_v or int(r) not in values:
            ell_cache[(i, j)] = None
        else:
            ell_cache[(i, j)] = values.index(int(r))
        return ell_cache[(i, j)]

    u_sample = [f for f in nonzero if model.in_unit_part(f)]
    n = len(values)
    for j in range(1, n):
        for i in range(n - 1):
            a, b = ell(i, j), ell(i + 1, j)
            if a is None or b is None:
                skipped += 1
                continue
            if not a < b:
                failures.append({"check": "l_strict_growth", "i": i, "j": j, "l": (a, b)})
    # j = 0: lower estimate over sampled unit-part elements
    for i in range(n - 1):
        def est(k):
            vals = []
            for g in u_sample:
                r = model.rho(model.mul(reps[k], g))
                if r != NEG_INF and r <= max_v and int(r) in values:
                    vals.append(values.index(int(r)))
            return max(vals, default=None)

        a, b = est(i), est(i + 1)
        if a is None or b is None:
            skipped += 1
        elif not a <= b:
            failures.append({"check": "l_weak_growth_j0", "i": i, "l": (a, b)})

    for i in range(1, n):
        for j in range(1, n):
            if values[i] + values[j] > max_v:
                skipped += 1
                continue
            lij = ell(i, j)
            if lij is None:
                skipped += 1
                continue
            if values[lij] != values[i] + values[j]:
                failures.append(
                    {"check": "weight_product_rule", "i": i, "j": j, "rho": values[lij]}
                )
                is_weight = False

    return {
        "model": model.describe(),
        "bound": bound,
        "levels": len(values),
        "verdict": "PASS" if not failures else "FAIL",
        "failures": failures,
        "skipped": skipped,
        "weight_product_rule": is_weight,
    }
