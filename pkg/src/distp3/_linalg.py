"""Exact sparse row reduction over QQ or F_p."""

from __future__ import annotations

from .coeffs import PrimeField


def rank(rows, field) -> int:
    """Rank of the matrix whose rows are ``{column: coefficient}`` dicts."""
    mod = field.characteristic if isinstance(field, PrimeField) else 0
    pivots: dict = {}
    r = 0
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                inv = field.inv(row[col])
                if mod:
                    pivots[col] = {k: v * inv % mod for k, v in row.items()}
                else:
                    pivots[col] = {k: v * inv for k, v in row.items()}
                r += 1
                break
            c = row[col]
            get = row.get
            for k, v in prow.items():
                w = get(k, 0) - c * v
                if mod:
                    w %= mod
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
    return r
