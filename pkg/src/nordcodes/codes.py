"""Two-point evaluation codes E_l^m, their duals C_l^m, syndrome matrices and
brute-force ground truth for the minimum distance.

The evaluation support is every affine point of the curve except the base
point (0, 0), in lexicographic (x-index, y-index) order, so n = q^3 - 1 and
all matrices are bit-reproducible.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from . import bounds, linalg
from .errors import (
    MBelowLambda,
    SaturationNotReached,
    SearchTooLarge,
    WordNotInLayer,
)
from .field import Field
from .hermitian import HermitianCurve

_BRUTE_FORCE_CAP = 1 << 24


@dataclass(frozen=True)
class LinearCode:
    field: Field
    n: int
    generator: tuple[tuple[int, ...], ...]  # row-reduced, independent rows

    @property
    def k(self) -> int:
        return len(self.generator)

    @classmethod
    def from_rows(cls, rows, field: Field, n: int) -> "LinearCode":
        reduced, _ = linalg.rref(rows, field)
        return cls(field, n, tuple(tuple(r) for r in reduced))

    def dual(self) -> "LinearCode":
        null = linalg.nullspace([list(r) for r in self.generator], self.field, self.n)
        return LinearCode.from_rows(null, self.field, self.n)

    def contains(self, word) -> bool:
        aug = [list(r) for r in self.generator] + [list(word)]
        return linalg.rank(aug, self.field) == self.k

    def codewords(self):
        """All codewords, message-lexicographic order; includes zero."""
        F = self.field
        for msg in itertools.product(range(F.q), repeat=self.k):
            word = [0] * self.n
            for coef, row in zip(msg, self.generator):
                if coef:
                    for c in range(self.n):
                        word[c] = F.add(word[c], F.mul(coef, row[c]))
            yield tuple(word)

    def min_distance_bruteforce(self) -> int | None:
        """Minimum Hamming weight over all nonzero codewords; None if k = 0."""
        if self.k == 0:
            return None
        if self.field.q**self.k > _BRUTE_FORCE_CAP:
            raise SearchTooLarge(f"{self.field.q}^{self.k} messages exceed the cap")
        best = self.n + 1
        for word in self.codewords():
            wt = sum(1 for v in word if v)
            if 0 < wt < best:
                best = wt
                if best == 1:
                    break
        return best

    def to_json(self) -> dict:
        dual = self.dual()
        return {
            "n": self.n,
            "k": self.k,
            "generator": [list(r) for r in self.generator],
            "parity_check": [list(r) for r in dual.generator],
        }


# ---------------------------------------------------------------------------
# curve codes


def evaluation_points(curve: HermitianCurve) -> list[tuple[int, int]]:
    """All affine points except the base point (0, 0), lexicographic order."""
    return sorted(p for p in curve.points if p != (0, 0))


def _check_m(curve: HermitianCurve, m: int):
    lam = curve.profile_closed_form().lambda_sigma
    if m < lam:
        raise MBelowLambda(f"m = {m} < lambda_sigma = {lam}")


def evaluation_matrix(curve: HermitianCurve, ell: int, m: int) -> list[list[int]]:
    pts = evaluation_points(curve)
    rows = []
    for a, b in curve.riemann_roch_basis(ell, m):
        f = curve.monomial(a, b)
        rows.append([f.evaluate(p) for p in pts])
    return rows


def build_E(curve: HermitianCurve, ell: int, m: int) -> LinearCode:
    _check_m(curve, m)
    pts = evaluation_points(curve)
    return LinearCode.from_rows(evaluation_matrix(curve, ell, m), curve.field, len(pts))


def build_C(curve: HermitianCurve, ell: int, m: int) -> LinearCode:
    _check_m(curve, m)
    return build_E(curve, ell, m).dual()


def saturation_index(curve: HermitianCurve, m: int) -> int:
    """Least L with E_L^m = the full space F^n."""
    _check_m(curve, m)
    n = len(evaluation_points(curve))
    cap = n + 2 * curve.genus + 1
    for ell in range(cap + 1):
        if linalg.rank(evaluation_matrix(curve, ell, m), curve.field) == n:
            return ell
    raise SaturationNotReached(f"rank never reached {n} up to ell = {cap}")


# ---------------------------------------------------------------------------
# syndromes


@dataclass(frozen=True)
class SyndromeMatrix:
    entries: tuple[tuple[int, ...], ...]  # (L+1) x (L+1) field indices
    word: tuple[int, ...]

    def rank(self, field: Field) -> int:
        return linalg.rank([list(r) for r in self.entries], field)


def basis_images(curve: HermitianCurve, count: int) -> list[list[int]]:
    """h_t = evaluation of the canonical good-basis function f_t, t = 0..count-1."""
    pts = evaluation_points(curve)
    return [
        [curve.good_basis_function(t).evaluate(p) for p in pts] for t in range(count)
    ]


def syndrome_matrix(curve: HermitianCurve, m: int, word, L: int) -> SyndromeMatrix:
    F = curve.field
    h = basis_images(curve, L + 1)
    n = len(word)
    entries = []
    for i in range(L + 1):
        row = []
        for j in range(L + 1):
            total = 0
            for c in range(n):
                total = F.add(total, F.mul(F.mul(h[i][c], h[j][c]), word[c]))
            row.append(total)
        entries.append(tuple(row))
    return SyndromeMatrix(tuple(entries), tuple(word))


def layer_membership(curve: HermitianCurve, ell: int, m: int, word) -> tuple[bool, bool]:
    """(word in C_ell^m, word in C_{ell+1}^m) via orthogonality tests."""
    F = curve.field

    def orthogonal(l):
        return all(
            linalg.mat_vec_dot(row, word, F) == 0
            for row in evaluation_matrix(curve, l, m)
        )

    return orthogonal(ell), orthogonal(ell + 1)


def verify_prop63(curve: HermitianCurve, ell: int, m: int, word) -> dict:
    """Check the zero/nonzero syndrome pattern for a word in the layer
    C_ell^m minus C_{ell+1}^m, and the rank bound rank S(y) >= #N_ell^m."""
    _check_m(curve, m)
    in_l, in_l1 = layer_membership(curve, ell, m, word)
    if not in_l or in_l1:
        raise WordNotInLayer(f"word not in C_{ell}^{m} \\ C_{ell + 1}^{m}")
    profile = curve.profile_closed_form()
    nset = bounds.n_set(profile, ell, m)
    L = saturation_index(curve, m)
    S = syndrome_matrix(curve, m, word, L)
    zero_ok = True
    diag_ok = True
    pattern = []
    for u, (iu, _) in enumerate(nset.pairs):
        for v, (_, jv) in enumerate(nset.pairs):
            if iu > L or jv > L:
                continue
            val = S.entries[iu][jv]
            if u < v and val != 0:
                zero_ok = False
                pattern.append({"u": u, "v": v, "value": val})
            if u == v and val == 0:
                diag_ok = False
                pattern.append({"u": u, "v": v, "value": 0})
    rank_s = S.rank(curve.field)
    rank_ok = rank_s >= len(nset)
    return {
        "ell": ell,
        "m": m,
        "n_set_size": len(nset),
        "rank": rank_s,
        "zero_pattern": zero_ok,
        "diagonal_nonzero": diag_ok,
        "rank_bound": rank_ok,
        "verdict": "PASS" if (zero_ok and diag_ok and rank_ok) else "FAIL",
        "violations": pattern,
    }


def verify_thm61(curve: HermitianCurve, ell: int, m: int) -> dict:
    """Brute-force d(C_ell^m) against the n-order and Goppa bounds."""
    _check_m(curve, m)
    code = build_C(curve, ell, m)
    d_true = code.min_distance_bruteforce()
    profile = curve.profile_closed_form()
    dn = bounds.d_nord(profile, ell, m)
    dg = bounds.d_goppa(ell, m, curve.genus)
    ok = d_true is None or d_true >= dn
    return {
        "ell": ell,
        "m": m,
        "n": code.n,
        "k": code.k,
        "d_true": d_true,
        "d_nord": dn,
        "d_goppa": dg,
        "goppa_ok": d_true is None or dg <= 0 or d_true >= dg,
        "verdict": "PASS" if ok else "FAIL",
    }


def code_to_json(curve: HermitianCurve, ell: int, m: int) -> str:
    code = build_E(curve, ell, m)
    payload = {"q": curve.q, "ell": ell, "m": m}
    payload.update(code.to_json())
    return json.dumps(payload, sort_keys=True)
