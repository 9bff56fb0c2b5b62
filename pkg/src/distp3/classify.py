"""Admissible Chern classes of degree-3 distributions on P^3.

The tangent sheaf of a degree-3 distribution has ``c1 = -1``, and its other
Chern classes are determined by the singular curve ``C``:

    c2 = 11 - deg C,        c3 = 49 - 7 deg C + 2 P_a(C).

Enumerating ``deg C`` and the allowed genera, then filtering by the
reflexive-sheaf bounds, produces the classification table.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace


class UnsupportedDegreeError(ValueError):
    pass


class _Unbounded:
    """Marker for a genus range with no lower bound."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNBOUNDED"

    def __bool__(self):
        return False


UNBOUNDED = _Unbounded()

SPECIAL_GENUS = {0: (1, 1), 1: (0, 0), 2: (-3, 0)}

# how far below zero enumerate() looks for c3 when c3 >= 0 is switched off
C3_SEARCH_BELOW = 64


@dataclass(frozen=True)
class ConstraintPolicy:
    """Which constraints :func:`admissible` and :func:`enumerate` enforce.

    Attributes
    ----------
    apply_parity
        ``c2 + c3`` even.
    apply_c3_nonneg
        ``c3 >= 0``.
    apply_genus_bounds
        ``P_a(C)`` between :func:`min_genus` and :func:`max_genus`.
    hartshorne_weak
        ``c3 <= c2^2 + 2 c2``.
    hartshorne_stable
        ``c3 <= c2^2`` for ``c2 >= stable_from``.
    stable_from
        First ``c2`` where the stable bound applies. The default 4 matches the
        published table; the strict policy uses 3.
    degc_max
        Largest degree of the singular curve.
    split_rows
        Rows for split tangent sheaves ``O(-1)+O`` and ``O(-2)+O(1)``, which
        bypass the stable-sheaf bounds.
    """

    apply_parity: bool = True
    apply_c3_nonneg: bool = True
    apply_genus_bounds: bool = True
    hartshorne_weak: bool = True
    hartshorne_stable: bool = True
    stable_from: int = 4
    degc_max: int = 13
    split_rows: tuple[tuple[int, int], ...] = ((0, 0), (-2, 0))

    @classmethod
    def default(cls) -> ConstraintPolicy:
        return cls()

    @classmethod
    def strict(cls) -> ConstraintPolicy:
        return cls(stable_from=3)

    @classmethod
    def named(cls, name: str) -> ConstraintPolicy:
        if name == "default":
            return cls.default()
        if name == "strict":
            return cls.strict()
        raise ValueError(f"unknown policy {name!r}; use 'default' or 'strict'")

    def with_options(self, **kw) -> ConstraintPolicy:
        return replace(self, **kw)

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["split_rows"] = [list(r) for r in self.split_rows]
        return out

    @classmethod
    def from_json(cls, data: dict) -> ConstraintPolicy:
        data = dict(data)
        if "split_rows" in data:
            data["split_rows"] = tuple(tuple(r) for r in data["split_rows"])
        return cls(**data)


def max_genus(deg_c: int) -> int:
    """Castelnuovo-type upper bound ``(deg C - 1)(deg C - 2) / 2`` for the genus."""
    if deg_c <= 0:
        raise ValueError("max_genus needs a curve of positive degree")
    return (deg_c - 1) * (deg_c - 2) // 2


def min_genus(deg_c: int):
    """Lower genus bound, or :data:`UNBOUNDED` when ``c3 >= 0`` is what binds."""
    if deg_c < 0:
        raise ValueError("degree must be non-negative")
    if deg_c in SPECIAL_GENUS:
        return SPECIAL_GENUS[deg_c][0]
    return UNBOUNDED


def degc_bound(d: int, override: int | None = None) -> int:
    if override is not None:
        return override
    if d != 3:
        raise UnsupportedDegreeError(
            f"no curve degree bound known for d = {d}; pass an explicit bound"
        )
    return 13


def _genus_ok(deg_c: int, genus: int) -> bool:
    if deg_c in SPECIAL_GENUS:
        lo, hi = SPECIAL_GENUS[deg_c]
        return lo <= genus <= hi
    return genus <= max_genus(deg_c)


def admissible(c1: int, c2: int, c3: int, policy: ConstraintPolicy | None = None):
    """Check a Chern triple against ``policy``.

    Returns
    -------
    (bool, list of str)
        Whether every enabled constraint holds, and the names of those that fail.

    Examples
    --------
    >>> admissible(-1, 3, 17)
    (False, ['hartshorne_weak'])
    """
    policy = policy or ConstraintPolicy.default()
    if c1 != -1:
        raise UnsupportedDegreeError("only c1 = -1 (degree-3 distributions) is classified")
    if (c2, c3) in policy.split_rows:
        return True, []
    violations = []
    deg_c = 11 - c2
    if not 0 <= deg_c <= policy.degc_max:
        violations.append("degc_range")
    if policy.apply_parity and (c2 + c3) % 2:
        violations.append("parity")
    if policy.apply_c3_nonneg and c3 < 0:
        violations.append("c3_nonneg")
    if policy.apply_genus_bounds and "parity" not in violations and 0 <= deg_c:
        twice_genus = c3 - 49 + 7 * deg_c
        if twice_genus % 2 or not _genus_ok(deg_c, twice_genus // 2):
            violations.append("genus")
    if policy.hartshorne_weak and c3 > c2 * c2 + 2 * c2:
        violations.append("hartshorne_weak")
    if policy.hartshorne_stable and c2 >= policy.stable_from and c3 > c2 * c2:
        violations.append("hartshorne_stable")
    return not violations, violations


@dataclass(frozen=True)
class ClassificationRow:
    deg_c: int
    c2: int
    c3: tuple[int, ...]


@dataclass(frozen=True)
class ClassificationTable:
    rows: tuple[ClassificationRow, ...]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self):
        return len(self.rows)

    def row(self, deg_c: int) -> ClassificationRow | None:
        return next((r for r in self.rows if r.deg_c == deg_c), None)

    def to_json(self) -> list[dict]:
        return [{"degC": r.deg_c, "c2": r.c2, "c3": list(r.c3)} for r in self.rows]

    def to_markdown(self) -> str:
        lines = ["| deg(C) | c2 | c3 |", "|---|---|---|"]
        for r in self.rows:
            lines.append(f"| {r.deg_c} | {r.c2} | {', '.join(map(str, r.c3))} |")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["degC", "c2", "c3"])
        for r in self.rows:
            w.writerow([r.deg_c, r.c2, " ".join(map(str, r.c3))])
        return buf.getvalue()

    def render(self, fmt: str = "md") -> str:
        if fmt == "md":
            return self.to_markdown()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2) + "\n"
        raise ValueError(f"unknown format {fmt!r}")


def enumerate(d: int = 3, policy: ConstraintPolicy | None = None, degc_max=None):
    """All admissible ``(deg C, c2, c3)`` rows; rows with nothing admissible are dropped."""
    policy = policy or ConstraintPolicy.default()
    if d != 3:
        raise UnsupportedDegreeError(
            f"genus and Chern bounds are only encoded for d = 3, not d = {d}"
        )
    top = degc_bound(d, policy.degc_max if degc_max is None else degc_max)
    rows = []
    for deg_c in range(top + 1):
        c2 = 11 - deg_c
        # c3 <= c2^2 + 2 c2 always holds for the split rows, so this range covers them
        hi = max(c2 * c2 + 2 * c2, 49 - 7 * deg_c + 2 * (max_genus(deg_c) if deg_c else 1))
        lo = 0 if policy.apply_c3_nonneg else -C3_SEARCH_BELOW
        vals = tuple(
            c3 for c3 in range(lo, hi + 1)
            if admissible(-1, c2, c3, policy)[0]
        )
        if vals:
            rows.append(ClassificationRow(deg_c, c2, vals))
    return ClassificationTable(tuple(rows))
