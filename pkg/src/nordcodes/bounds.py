"""The n-order minimum-distance bound and its companions.

Everything here is a pure function of a GoodBasisProfile: the running maximum
Sigma(s), the sets N_r^m, the bound d_nord, the Goppa bound, their difference
delta, the A/B/C decomposition of N_r^m and a diagnostic that compares the
closed formula d_nord = l + 2 - genus + #A against direct enumeration.

Direct enumeration is normative; closed formulas are cross-checks only.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .errors import HypothesisNotMet, MBelowLambda
from .semigroup import GoodBasisProfile

CSV_HEADER = ["ell", "m", "n_set_size", "d_nord", "d_goppa", "delta"]


def _require_m(profile: GoodBasisProfile, m: int):
    if m < profile.lambda_sigma:
        raise MBelowLambda(f"m = {m} < lambda_sigma = {profile.lambda_sigma}")


def capital_sigma(profile: GoodBasisProfile, s: int) -> int:
    """Sigma(s) = max of sigma(f_0..f_s); nondecreasing in s."""
    return max((v for i, v in profile.entries if i <= s), default=0)


@dataclass(frozen=True)
class NSet:
    r: int
    m: int
    pairs: tuple[tuple[int, int], ...]  # lexicographic; i+j = r+1 throughout

    def __len__(self):
        return len(self.pairs)


def n_set(profile: GoodBasisProfile, r: int, m: int) -> NSet:
    """Pairs (i, j) with i + j = r + 1 and sigma(f_i) + Sigma(j) <= m."""
    _require_m(profile, m)
    pairs = tuple(
        (i, r + 1 - i)
        for i in range(r + 2)
        if profile.sigma(i) + capital_sigma(profile, r + 1 - i) <= m
    )
    return NSet(r, m, pairs)


def d_nord(profile: GoodBasisProfile, ell: int, m: int) -> int:
    """min #N_r^m over r >= ell; the window r in [ell, ell+genus] suffices."""
    _require_m(profile, m)
    return min(len(n_set(profile, r, m)) for r in range(ell, ell + profile.genus + 1))


def d_goppa(ell: int, m: int, genus: int) -> int:
    """ell + m - 2*genus + 2, returned raw (may be nonpositive)."""
    return ell + m - 2 * genus + 2


def delta(profile: GoodBasisProfile, ell: int, m: int) -> int:
    _require_m(profile, m)
    return d_nord(profile, ell, m) - d_goppa(ell, m, profile.genus)


def abc_decomposition(profile: GoodBasisProfile, r: int, m: int):
    """Split the interior indices of N_r^m into the nongap part A, the
    saturated-gap part B and the boundary-gap part C.

    #N_r^m = 2 + #A + #B + #C (the endpoints (0, r+1), (r+1, 0) always
    qualify since m >= lambda_sigma).
    """
    _require_m(profile, m)
    s = profile.s_index
    lam = profile.lambda_sigma
    gaps = profile.rho_gaps
    a_set = {i for i in range(1, r + 1) if i not in gaps}
    b_set = {
        i for i in gaps if 1 <= i <= r + 1 - s and profile.sigma(i) + lam <= m
    }
    c_set = {
        i
        for i in gaps
        if r + 2 - s <= i <= r
        and profile.sigma(i) + capital_sigma(profile, r + 1 - i) <= m
    }
    return a_set, b_set, c_set


def lemma62_diagnostic(profile: GoodBasisProfile, ell: int, m: int) -> dict:
    """Compare the closed formula ell + 2 - genus + #A_ell^m (and its equality
    claims against the Goppa bound) with direct enumeration.

    Reports AGREE or DISAGREE; never asserts either side as ground truth.
    Requires lambda_sigma <= m < 2*lambda_sigma and ell >= lambda_rho + s - 1.
    """
    lam = profile.lambda_sigma
    if not (lam <= m < 2 * lam):
        raise HypothesisNotMet(f"need lambda_sigma <= m < 2*lambda_sigma, got m={m}, lambda_sigma={lam}")
    if ell < profile.lambda_rho + profile.s_index - 1:
        raise HypothesisNotMet(
            f"need ell >= lambda_rho + s - 1 = {profile.lambda_rho + profile.s_index - 1}, got {ell}"
        )
    direct = d_nord(profile, ell, m)
    a_set, _, _ = abc_decomposition(profile, ell, m)
    formula = ell + 2 - profile.genus + len(a_set)
    dg = d_goppa(ell, m, profile.genus)
    return {
        "ell": ell,
        "m": m,
        "direct": direct,
        "formula": formula,
        "verdict": "AGREE" if direct == formula else "DISAGREE",
        "claim2": {
            "applicable": lam >= profile.genus + 1,
            "formula_says_below_goppa": formula < dg,
            "direct_below_goppa": direct < dg,
        },
        "claim3": {
            "lambda_sigma_equals_genus": lam == profile.genus,
            "direct_equals_goppa": direct == dg,
        },
    }


def bound_table(profile: GoodBasisProfile, ell_range, m_range) -> list[tuple]:
    """Rows (ell, m, #N_ell^m, d_nord, d_goppa, delta) in ell-major order."""
    rows = []
    for ell in ell_range:
        for m in m_range:
            _require_m(profile, m)
            nsz = len(n_set(profile, ell, m))
            dn = d_nord(profile, ell, m)
            dg = d_goppa(ell, m, profile.genus)
            rows.append((ell, m, nsz, dn, dg, dn - dg))
    return rows


def bound_table_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue()
