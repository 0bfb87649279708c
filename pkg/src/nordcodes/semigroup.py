"""Numerical semigroups, two-point semigroups and good-basis profiles.

A numerical semigroup is stored by its finite gap set; a two-point semigroup
by its finite set of gap pairs in N0^2.  The good-basis profile maps each gap
i of the first projection to the minimal second value attainable over the
column i; it is the only input the bound engine needs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

from .errors import (
    ClosureViolation,
    NotCoprime,
    ProfileBijectionViolation,
    ZeroExcludedViolation,
)


# ---------------------------------------------------------------------------
# numerical semigroups


@dataclass(frozen=True)
class NumericalSemigroup:
    gaps: frozenset[int]

    def __post_init__(self):
        if 0 in self.gaps or any(g < 0 for g in self.gaps):
            raise ZeroExcludedViolation("gaps must be positive integers")
        lam = self.largest_gap
        for x in range(1, lam + 1):
            if x in self.gaps:
                continue
            for y in range(x, lam + 1 - x):
                if y not in self.gaps and (x + y) in self.gaps:
                    raise ClosureViolation(x, y, x + y)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def largest_gap(self) -> int:
        return max(self.gaps) if self.gaps else 0

    @property
    def conductor(self) -> int:
        return self.largest_gap + 1 if self.gaps else 0

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n not in self.gaps

    def nth_nongap(self, i: int) -> int:
        """m_i with 0 = m_0 < m_1 < ... (0-indexed)."""
        n, count = 0, -1
        while True:
            if n in self:
                count += 1
                if count == i:
                    return n
            n += 1

    def nongaps_upto(self, bound: int) -> list[int]:
        return [n for n in range(bound + 1) if n in self]

    def to_json(self) -> dict:
        return {"gaps": sorted(self.gaps)}

    @classmethod
    def from_json(cls, data: dict) -> "NumericalSemigroup":
        return cls(frozenset(data["gaps"]))


def ns_from_generators(gens: list[int]) -> NumericalSemigroup:
    """Semigroup generated by gens; requires gcd(gens) = 1."""
    gens = sorted(set(g for g in gens if g > 0))
    if not gens:
        raise NotCoprime("need at least one positive generator")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise NotCoprime(f"gcd of generators is {g}, not 1")
    if gens[0] == 1:
        return NumericalSemigroup(frozenset())
    # Frobenius number is below (a-1)(b-1) for any coprime pair; reach up there
    bound = (gens[0] - 1) * (gens[-1] - 1) + max(gens)
    reachable = [False] * (bound + 1)
    reachable[0] = True
    for n in range(1, bound + 1):
        for x in gens:
            if x <= n and reachable[n - x]:
                reachable[n] = True
                break
    return NumericalSemigroup(frozenset(n for n in range(1, bound + 1) if not reachable[n]))


# ---------------------------------------------------------------------------
# two-point semigroups


@dataclass(frozen=True)
class TwoPointSemigroup:
    gapset: frozenset[tuple[int, int]]

    def __post_init__(self):
        if (0, 0) in self.gapset:
            raise ZeroExcludedViolation("(0, 0) must be a nongap")
        if any(a < 0 or b < 0 for a, b in self.gapset):
            raise ZeroExcludedViolation("gap pairs must be nonnegative")
        # componentwise closure: every decomposition of a gap must use a gap.
        # Summands of a gap are dominated by it, so checking below each gap
        # is exhaustive.
        for ga, gb in self.gapset:
            for xa in range(ga + 1):
                for xb in range(gb + 1):
                    if (xa, xb) == (0, 0) or (xa, xb) == (ga, gb):
                        continue
                    if (xa, xb) not in self.gapset and (ga - xa, gb - xb) not in self.gapset:
                        raise ClosureViolation((xa, xb), (ga - xa, gb - xb), (ga, gb))

    @property
    def genus2(self) -> int:
        return len(self.gapset)

    @property
    def box(self) -> tuple[int, int]:
        if not self.gapset:
            return (0, 0)
        return (max(a for a, _ in self.gapset), max(b for _, b in self.gapset))

    def __contains__(self, pair: tuple[int, int]) -> bool:
        a, b = pair
        return a >= 0 and b >= 0 and (a, b) not in self.gapset

    def project_rho(self) -> NumericalSemigroup:
        return NumericalSemigroup(frozenset(a for a, b in self.gapset if b == 0))

    def project_sigma(self) -> NumericalSemigroup:
        return NumericalSemigroup(frozenset(b for a, b in self.gapset if a == 0))

    def profile(self) -> "GoodBasisProfile":
        """Column minima over the gap columns: i -> min{t : (i, t) in H}."""
        max_b = self.box[1]
        entries = {}
        for i in sorted({a for a, _ in self.gapset}):
            t = 0
            while (i, t) in self.gapset:
                t += 1
                if t > max_b + 1:  # unreachable: gapset is finite
                    break
            if t > 0:
                entries[i] = t
        return GoodBasisProfile.from_entries(entries)

    def to_json(self) -> dict:
        return {"gaps": [list(p) for p in sorted(self.gapset)]}

    @classmethod
    def from_json(cls, data: dict) -> "TwoPointSemigroup":
        return cls(frozenset(tuple(p) for p in data["gaps"]))


def tps_from_gapset(pairs) -> TwoPointSemigroup:
    return TwoPointSemigroup(frozenset(tuple(p) for p in pairs))


# ---------------------------------------------------------------------------
# good-basis profiles


@dataclass(frozen=True)
class GoodBasisProfile:
    """The map i -> sigma(f_i), stored sparsely on its nonzero entries.

    Keys are the gaps of H(rho), values the gaps of H(sigma), bijectively;
    the genus is the common number of gaps.
    """

    genus: int
    entries: tuple[tuple[int, int], ...]  # sorted (i, sigma(f_i)) pairs
    _map: dict = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_map", dict(self.entries))

    @classmethod
    def from_entries(cls, entries: dict[int, int]) -> "GoodBasisProfile":
        prof = cls(genus=len(entries), entries=tuple(sorted(entries.items())))
        report = prof.check_gap_bijection()
        if not report["ok"]:
            raise ProfileBijectionViolation("; ".join(report["violations"]))
        return prof

    def sigma(self, i: int) -> int:
        """sigma(f_i); zero off the stored support."""
        return self._map.get(i, 0)

    @property
    def lambda_sigma(self) -> int:
        return max((v for _, v in self.entries), default=0)

    @property
    def lambda_rho(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    @property
    def s_index(self) -> int:
        """Smallest index attaining lambda_sigma (0 for the empty profile)."""
        lam = self.lambda_sigma
        return min((i for i, v in self.entries if v == lam), default=0)

    @property
    def rho_gaps(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.entries)

    @property
    def sigma_gaps(self) -> frozenset[int]:
        return frozenset(v for _, v in self.entries)

    def rho_semigroup(self) -> NumericalSemigroup:
        return NumericalSemigroup(self.rho_gaps)

    def check_gap_bijection(self) -> dict:
        """Report-valued validation of the profile invariants."""
        violations = []
        keys = [i for i, _ in self.entries]
        vals = [v for _, v in self.entries]
        if any(i <= 0 for i in keys) or any(v <= 0 for v in vals):
            violations.append("entries must have positive keys and values")
        if len(set(vals)) != len(vals):
            dup = sorted(v for v in set(vals) if vals.count(v) > 1)
            violations.append(f"values repeated: {dup}")
        if len(keys) != self.genus:
            violations.append(f"#keys {len(keys)} != genus {self.genus}")
        if not violations:
            for label, gaps in (("H(rho)", keys), ("H(sigma)", vals)):
                try:
                    NumericalSemigroup(frozenset(gaps))
                except (ClosureViolation, ZeroExcludedViolation) as exc:
                    violations.append(f"complement of {label} gaps is not a semigroup: {exc}")
        return {"ok": not violations, "violations": violations}

    def to_json(self) -> dict:
        return {"genus": self.genus, "entries": {str(i): v for i, v in self.entries}}

    @classmethod
    def from_json(cls, data: dict) -> "GoodBasisProfile":
        return cls.from_entries({int(k): v for k, v in data["entries"].items()})

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def hyperelliptic_profile(genus: int) -> GoodBasisProfile:
    """Profile with sigma(f_i) = i for i = 1..genus (hyperelliptic shape)."""
    if genus < 1:
        raise ProfileBijectionViolation("genus must be >= 1")
    return GoodBasisProfile.from_entries({i: i for i in range(1, genus + 1)})
