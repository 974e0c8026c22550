"""Exact feasibility of ``B w = a, w >= 0`` over the rationals.

Feasibility is decided by Fourier-Motzkin elimination in which every derived
inequality remembers the combination of input constraints it came from, so an
infeasible system comes with a Farkas certificate ``y``:

    y^T B >= 0 componentwise  and  y^T a = -1,

which no nonnegative ``w`` can satisfy.  A feasible system is answered with the
basic solution of the first feasible column basis in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence, Tuple

from valinterp.linalg import rank, solve
from valinterp.polyhedron import MAX_DIM, DimensionError


class InconsistencyError(RuntimeError):
    """Two independent computations that must agree did not."""


@dataclass(frozen=True)
class LPResult:
    solution: Optional[Tuple[Fraction, ...]]
    certificate: Optional[Tuple[Fraction, ...]]

    @property
    def feasible(self) -> bool:
        return self.solution is not None


@dataclass
class _Row:
    # coeffs . w >= rhs, with coeffs = sum_j y_j beta_j + mu and rhs = sum_j y_j a_j
    coeffs: list
    rhs: Fraction
    y: list
    mu: list


def _combine(p: _Row, cp: Fraction, q: _Row, cq: Fraction) -> _Row:
    return _Row(
        [cp * a + cq * b for a, b in zip(p.coeffs, q.coeffs)],
        cp * p.rhs + cq * q.rhs,
        [cp * a + cq * b for a, b in zip(p.y, q.y)],
        [cp * a + cq * b for a, b in zip(p.mu, q.mu)],
    )


def _normalized_key(row: _Row):
    lead = next((abs(c) for c in row.coeffs if c != 0), None)
    if lead is None:
        return None
    return tuple(c / lead for c in row.coeffs), row.rhs / lead


def fourier_motzkin(B: Sequence[Sequence], a: Sequence) -> Optional[Tuple[Fraction, ...]]:
    """Return None if ``B w = a, w >= 0`` is feasible, else a Farkas certificate."""
    m, n = len(B), len(B[0])
    rows = []
    for j in range(m):
        e = [Fraction(int(i == j)) for i in range(m)]
        beta = [Fraction(v) for v in B[j]]
        rows.append(_Row(beta, Fraction(a[j]), e, [Fraction(0)] * n))
        rows.append(_Row([-v for v in beta], -Fraction(a[j]), [-v for v in e], [Fraction(0)] * n))
    for i in range(n):
        rows.append(_Row([Fraction(int(k == i)) for k in range(n)], Fraction(0),
                         [Fraction(0)] * m, [Fraction(int(k == i)) for k in range(n)]))

    for k in range(n):
        pos = [r for r in rows if r.coeffs[k] > 0]
        neg = [r for r in rows if r.coeffs[k] < 0]
        new = [r for r in rows if r.coeffs[k] == 0]
        for p in pos:
            for q in neg:
                new.append(_combine(p, -q.coeffs[k], q, p.coeffs[k]))
        # drop positive multiples of rows already present
        seen = set()
        rows = []
        for r in new:
            key = _normalized_key(r)
            if key is None:
                rows.append(r)
            elif key not in seen:
                seen.add(key)
                rows.append(r)

    for r in rows:
        if r.rhs > 0:
            # 0 >= rhs > 0; negate and scale so that y . a = -1
            scale = -1 / r.rhs
            return tuple(v * scale for v in r.y)
    return None


def check_certificate(B: Sequence[Sequence], a: Sequence, y: Sequence) -> bool:
    n = len(B[0])
    yB = [sum((Fraction(y[j]) * B[j][i] for j in range(len(B))), Fraction(0)) for i in range(n)]
    ya = sum((Fraction(yj) * aj for yj, aj in zip(y, a)), Fraction(0))
    return all(v >= 0 for v in yB) and ya < 0


def first_basic_solution(B: Sequence[Sequence], a: Sequence) -> Optional[Tuple[Fraction, ...]]:
    """Nonnegative basic solution from the lexicographically first feasible basis."""
    m, n = len(B), len(B[0])
    r = rank(B)
    for S in combinations(range(n), r):
        sub = [[Fraction(B[j][i]) for i in S] for j in range(m)]
        if rank(sub) != r:
            continue
        x = solve(sub, [Fraction(v) for v in a])
        if x is None or any(v < 0 for v in x):
            continue
        w = [Fraction(0)] * n
        for i, v in zip(S, x):
            w[i] = v
        return tuple(w)
    return None


def feasibility_lp(rows: Sequence[Tuple[Sequence[int], Fraction]], max_dim: int = MAX_DIM) -> LPResult:
    """Solve ``beta_j . w = a_j`` for all j with ``w >= 0``, exactly.

    >>> feasibility_lp([((2, 1), 4)]).solution
    (Fraction(2, 1), Fraction(0, 1))
    """
    if not rows:
        raise ValueError("feasibility_lp needs at least one row")
    B = [[Fraction(v) for v in beta] for beta, _ in rows]
    a = [Fraction(v) for _, v in rows]
    n = len(B[0])
    if any(len(row) != n for row in B):
        raise ValueError("rows have mixed dimensions")
    if n > max_dim:
        raise DimensionError(f"dimension {n} exceeds bound {max_dim}")
    cert = fourier_motzkin(B, a)
    if cert is not None:
        if not check_certificate(B, a, cert):
            raise InconsistencyError("Fourier-Motzkin produced an invalid certificate")
        return LPResult(None, cert)
    w = first_basic_solution(B, a)
    if w is None:
        raise InconsistencyError("elimination reports feasible but no basic solution exists")
    return LPResult(w, None)
