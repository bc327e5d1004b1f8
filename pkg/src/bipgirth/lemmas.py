"""Closed-form inequality lab: quadratic lower bounds, summation checks,
the large-k threshold, delta constants, and the numeric fact catalog.

Everything scanned is evaluated in exact rationals at grid points; scan
results are evidence at the stated resolution, not proofs.  The quadratic
minimization oracle is deliberately independent of the bound formulas:
it grids the feasible set and descends, and can only overestimate the
true minimum, so "oracle >= bound - tol" is a sound acceptance check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

from .digraph import BipartiteDigraph, Side, VertexRef, girth
from .errors import (
    BadEdgeSets,
    CaseNotApplicable,
    HypothesisViolated,
    InfeasibleTriple,
    UnknownFact,
)

Real = Union[int, float, Fraction]

DELTA3 = Fraction(2886, 1000)
DELTA4 = Fraction(34814, 10000)
DELTA12 = Fraction(5219, 1000)  # claimed-only constant of the girth-12 sketch


# ---------------------------------------------------------------------------
# Delta constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DeltaEntry:
    """out-degree >= |V|/delta forces girth <= girth_bound (at this k)."""
    delta: Fraction
    girth_bound: int
    source: str
    claimed_only: bool = False


def delta_table(k: int) -> list[DeltaEntry]:
    """All CH-approximation constants applicable at k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    entries = []
    if k == 3:
        entries.append(DeltaEntry(DELTA3, 3, "delta3"))
    if k == 4:
        entries.append(DeltaEntry(DELTA4, 4, "delta4"))
    entries.append(DeltaEntry(Fraction(3 * k, 4), k, "3k/4"))
    if k > 74:
        entries.append(DeltaEntry(Fraction(k - 74), k - 1, "k-74"))
    if k == 6:
        entries.append(DeltaEntry(DELTA12, 6, "girth-12 sketch", claimed_only=True))
    return entries


# ---------------------------------------------------------------------------
# The quadratic lower bound (three cases)
# ---------------------------------------------------------------------------

def _sq_over(num: Real, den: Real) -> Real:
    """num^2/den with the stated convention: a zero denominator is taken
    to come with a zero numerator, and the whole term is zero."""
    if den == 0:
        return 0 if isinstance(num, (int, Fraction)) and isinstance(den, (int, Fraction)) else 0.0
    return num * num / den


@dataclass(frozen=True)
class NewineqInstance:
    x: Real
    y: Real
    beta: Real
    gamma: Real
    mu: Real

    def __post_init__(self):
        if not (0 <= self.x <= self.y <= 1):
            raise ValueError(f"need 0 <= x <= y <= 1, got x={self.x}, y={self.y}")
        if self.beta < 0 or self.gamma < 0 or self.mu < 0:
            raise ValueError("beta, gamma, mu must be nonnegative")

    def eligible(self, case: str) -> bool:
        x, y, b, g, m = self.x, self.y, self.beta, self.gamma, self.mu
        if case == "a":
            return b <= x * g
        if case == "b":
            return b >= x * g
        if case == "c":
            return b >= x * g and y * b + x * (1 - y) * g <= m
        raise ValueError(f"unknown case {case!r}")

    def applicable_cases(self) -> list[str]:
        return [c for c in "abc" if self.eligible(c)]


@dataclass(frozen=True)
class FeasibleTriple:
    p: Real
    q: Real
    r: Real


def _check_feasible(inst: NewineqInstance, t: FeasibleTriple) -> None:
    if t.p < 0 or t.q < 0 or t.r < 0:
        raise InfeasibleTriple("p, q, r must be nonnegative")
    head = t.p * inst.x + t.q * (inst.y - inst.x)
    total = head + t.r * (1 - inst.y)
    exact = all(isinstance(v, (int, Fraction))
                for v in (t.p, t.q, t.r, inst.x, inst.y, inst.beta, inst.mu))
    tol = 0 if exact else 1e-12
    if abs(total - inst.beta) > tol:
        raise InfeasibleTriple(f"weights sum to {total}, expected {inst.beta}")
    if head < inst.mu - tol:
        raise InfeasibleTriple(f"px+q(y-x) = {head} below mu = {inst.mu}")


def f_value(inst: NewineqInstance, t: FeasibleTriple) -> Real:
    """x(p-gamma)^2 + (y-x)q^2 + (1-y)r^2, exact when inputs are rational."""
    _check_feasible(inst, t)
    x, y, g = inst.x, inst.y, inst.gamma
    return x * (t.p - g) ** 2 + (y - x) * t.q ** 2 + (1 - y) * t.r ** 2


def newineq_bound(inst: NewineqInstance, case: str) -> Real:
    """Proved lower bound for f over the feasible set, per case."""
    if not inst.eligible(case):
        raise CaseNotApplicable(f"case {case} ineligible for {inst}")
    x, y, b, g, m = inst.x, inst.y, inst.beta, inst.gamma, inst.mu
    if case == "a":
        return _sq_over(b - x * g, x)
    if case == "b":
        return (b - x * g) ** 2
    return _sq_over(m - x * g, y) + _sq_over(b - m, 1 - y)


def newineq_min_oracle(inst: NewineqInstance, grid_n: int, rounds: int = 4) -> float:
    """Independent approximate minimum of f over the feasible set.

    Grids the free coordinates over [0, P_max] with P_max = 4(beta+gamma+1),
    projects each grid point onto the constraint slab mu <= px+q(y-x) <= beta,
    and zooms in around the best point.  Every evaluated point is feasible,
    so the returned value can only overestimate the true minimum.
    """
    if grid_n < 10:
        raise ValueError("grid_n must be >= 10")
    x = float(inst.x)
    y = float(inst.y)
    beta = float(inst.beta)
    gamma = float(inst.gamma)
    mu = float(inst.mu)
    wp, wq, wr = x, y - x, 1.0 - y
    if mu > beta + 1e-12:
        return math.inf  # no feasible triple at all
    p_max = 4.0 * (beta + gamma + 1.0)

    def evaluate(p: float, q: float) -> Optional[float]:
        # project (p, q) onto mu <= head <= beta, then solve r
        head = wp * p + wq * q
        if head < mu:
            if head <= 0.0:
                if mu > 0.0:
                    return None
            else:
                scale = mu / head
                p *= scale
                q *= scale
                head = mu
        if head > beta:
            scale = beta / head
            p *= scale
            q *= scale
            head = beta
        if wr > 0.0:
            r = (beta - head) / wr
        else:
            if abs(head - beta) > 1e-9 * (1.0 + beta):
                return None
            r = 0.0
        return wp * (p - gamma) ** 2 + wq * q * q + wr * r * r

    best = math.inf
    best_pt = (0.0, 0.0)
    lo_p, hi_p = 0.0, p_max
    lo_q, hi_q = 0.0, p_max
    for _ in range(rounds):
        step_p = (hi_p - lo_p) / grid_n
        step_q = (hi_q - lo_q) / grid_n
        for i in range(grid_n + 1):
            p = lo_p + i * step_p
            for j in range(grid_n + 1):
                v = evaluate(p, lo_q + j * step_q)
                if v is not None and v < best:
                    best = v
                    best_pt = (p, lo_q + j * step_q)
        # zoom in around the incumbent
        half_p = max(2.0 * step_p, 1e-9)
        half_q = max(2.0 * step_q, 1e-9)
        lo_p = max(0.0, best_pt[0] - half_p)
        hi_p = best_pt[0] + half_p
        lo_q = max(0.0, best_pt[1] - half_q)
        hi_q = best_pt[1] + half_q
    if best is math.inf:
        # constraint slab too thin for the grid; take the boundary point q=0
        if wp > 0.0:
            v = evaluate(beta / wp, 0.0)
        elif wq > 0.0:
            v = evaluate(0.0, beta / wq)
        else:
            v = evaluate(0.0, 0.0)
        if v is not None:
            best = v
    return best


def check_newineq(inst: NewineqInstance, grid_n: int = 400, tol: float = 1e-9) -> bool:
    """Oracle minimum respects the proved bound in every applicable case."""
    for case in inst.applicable_cases():
        if newineq_min_oracle(inst, grid_n) < float(newineq_bound(inst, case)) - tol:
            return False
    return True


def random_newineq_instance(case: str, rng: random.Random) -> NewineqInstance:
    """Seeded instance eligible for the given case, with a nonempty feasible set."""
    while True:
        x = rng.random()
        y = x + rng.random() * (1 - x)
        beta = rng.random()
        gamma = rng.random()
        if case == "a":
            if beta <= x * gamma:
                return NewineqInstance(x, y, beta, gamma, rng.random() * beta)
        elif case == "b":
            if beta >= x * gamma:
                return NewineqInstance(x, y, beta, gamma, rng.random() * beta)
        elif case == "c":
            lo = y * beta + x * (1 - y) * gamma
            if beta >= x * gamma and lo <= beta:
                return NewineqInstance(x, y, beta, gamma,
                                       lo + rng.random() * (beta - lo))
        else:
            raise ValueError(f"unknown case {case!r}")


# ---------------------------------------------------------------------------
# Summation inequality and its on-graph version
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IneqParams:
    x: Real
    y: Real
    beta: Real
    gamma: Real
    lam: Real
    mu: Real


@dataclass(frozen=True)
class CheckReport:
    hypotheses_held: bool
    conclusion_held: bool
    lhs: Real
    rhs: Real


def appliedineq_check(samples: Sequence[tuple[Real, Real]], params: IneqParams,
                      X_set: Iterable[int], Y_set: Iterable[int],
                      tol: float = 1e-9) -> CheckReport:
    """Verify the summation inequality on a concrete sample set.

    samples[v] = (a(v), b(v)); X_set and Y_set index into samples.  The
    five hypothesis bullets are checked, not assumed.
    """
    n = len(samples)
    if n == 0:
        raise HypothesisViolated("bullet 1", "empty sample set")
    X = frozenset(X_set)
    Y = frozenset(Y_set)
    x, y, beta, gamma, lam, mu = (params.x, params.y, params.beta,
                                  params.gamma, params.lam, params.mu)
    if abs(sum(b for _, b in samples) - beta * n) > tol:
        raise HypothesisViolated("bullet 1", "sum of b(v) differs from beta|B|")
    if any(a < lam - tol for a, _ in samples):
        raise HypothesisViolated("bullet 2", "some a(v) below lambda")
    if abs(len(X) - x * n) > tol:
        raise HypothesisViolated("bullet 3", "|X| differs from x|B|")
    if any(samples[v][0] < gamma + lam - tol for v in range(n) if v not in X):
        raise HypothesisViolated("bullet 3", "a(v) below gamma+lambda off X")
    if abs(len(Y) - y * n) > tol:
        raise HypothesisViolated("bullet 4", "|Y| differs from y|B|")
    if sum(samples[v][1] for v in Y) < mu * n - tol:
        raise HypothesisViolated("bullet 4", "sum of b over Y below mu|B|")
    if beta < x * gamma or y * beta + x * (1 - y) * gamma > mu:
        raise HypothesisViolated("bullet 5", "parameter inequalities fail")
    lhs = sum(b * b + 2 * a * b for a, b in samples)
    rhs = (_sq_over(mu - x * gamma, y) + _sq_over(beta - mu, 1 - y)
           + 2 * beta * (lam + gamma) - x * gamma * gamma) * n
    return CheckReport(True, lhs >= rhs - tol, lhs, rhs)


Edge = tuple[VertexRef, VertexRef]


def _mixed_four_cycle(g: BipartiteDigraph, R: frozenset[Edge],
                      S: frozenset[Edge]) -> bool:
    """Is there a directed 4-cycle with an edge in R and a different edge in S?"""
    from .digraph import _bits
    for b1 in range(g.b_size):
        for a2 in _bits(g.b_out[b1]):
            e1 = (VertexRef(Side.B, b1), VertexRef(Side.A, a2))
            for b2 in _bits(g.a_out[a2]):
                if b2 == b1:
                    continue
                for a1 in _bits(g.b_out[b2]):
                    if a1 == a2 or not (g.a_out[a1] >> b1) & 1:
                        continue
                    e2 = (VertexRef(Side.B, b2), VertexRef(Side.A, a1))
                    if (e1 in R and e2 in S) or (e1 in S and e2 in R):
                        return True
    return False


def bellsandwhistles_check(g: BipartiteDigraph, R: Iterable[Edge], S: Iterable[Edge],
                           params: IneqParams, X_set: Iterable[VertexRef],
                           Y_set: Iterable[VertexRef],
                           tol: float = 1e-9) -> CheckReport:
    """Check the six on-graph hypotheses, then the conclusion inequality.

    On hypothesis-holding instances the conclusion must hold (the statement
    is proved); a contrary instance signals an implementation bug.
    """
    R = frozenset(R)
    S = frozenset(S)
    for t, h in R | S:
        if t.side is not Side.B or h.side is not Side.A:
            raise BadEdgeSets(f"edge {t}->{h} does not run from B to A")
        if not (g.b_out[t.index] >> h.index) & 1:
            raise BadEdgeSets(f"edge {t}->{h} not present in the digraph")
    x, y, beta, gamma, lam, mu = (params.x, params.y, params.beta,
                                  params.gamma, params.lam, params.mu)
    na, nb = g.a_size, g.b_size
    a_r = [0] * nb
    a_s = [0] * nb
    for t, _ in R:
        a_r[t.index] += 1
    for t, _ in S:
        a_s[t.index] += 1
    a_val = [Fraction(a_r[j] + a_s[j], 2 * na) for j in range(nb)]
    X = frozenset(v.index for v in X_set)
    Y = frozenset(v.index for v in Y_set)

    if beta < x * gamma or y * beta + x * (1 - y) * gamma > mu:
        raise HypothesisViolated("bullet 1", "parameter inequalities fail")
    if any(m.bit_count() < beta * nb - tol for m in g.a_out):
        raise HypothesisViolated("bullet 2", "A-vertex with out-degree below beta|B|")
    gr = girth(g)
    if gr is not None and gr.length < 4:
        raise HypothesisViolated("bullet 3", "girth below four")
    if _mixed_four_cycle(g, R, S):
        raise HypothesisViolated("bullet 3", "4-cycle with an R-edge and a different S-edge")
    if any(a < lam - tol for a in a_val):
        raise HypothesisViolated("bullet 4", "some a(v) below lambda")
    if len(X) > x * nb + tol:
        raise HypothesisViolated("bullet 5", "|X| exceeds x|B|")
    if any(a_val[j] < gamma + lam - tol for j in range(nb) if j not in X):
        raise HypothesisViolated("bullet 5", "a(v) below gamma+lambda off X")
    if len(Y) > y * nb + tol:
        raise HypothesisViolated("bullet 6", "|Y| exceeds y|B|")
    heads_in_y = sum(g.b_in[j].bit_count() for j in Y)
    if heads_in_y < mu * na * nb - tol:
        raise HypothesisViolated("bullet 6", "fewer than mu|A||B| edges head in Y")

    lhs = (_sq_over(mu - x * gamma, y) + _sq_over(beta - mu, 1 - y)
           + 2 * beta * (lam + gamma) - x * gamma * gamma)
    return CheckReport(True, lhs <= beta + tol, lhs, beta)


# ---------------------------------------------------------------------------
# Large-k threshold arithmetic
# ---------------------------------------------------------------------------

def threshold_k(r: int) -> int:
    """Threshold for the large-k hypothesis 2k^2 + 4(r+r^2)^2 + 4r^2 >
    k(r^3+8r^2+8r) (the stated inequality cleared of its half-integer term
    by doubling), with k >= r(r+2).

    Returns the least integer above the larger real root of the quadratic,
    rounded outward: the root (b + sqrt(D))/4 is replaced by the integer
    ceiling of (b + isqrt(D))/4 and the threshold sits strictly above it.
    This conservative rounding reproduces the stated thresholds exactly
    (r=0 -> 1, r=1 -> 8, r=74 -> 224539) in pure integer arithmetic; the
    small-root branch is excluded by the k >= r(r+2) side condition.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    b = r ** 3 + 8 * r * r + 8 * r
    c = 4 * (r + r * r) ** 2 + 4 * r * r
    k_lo = max(1, r * (r + 2))
    disc = b * b - 8 * c
    if disc < 0:
        return k_lo  # the quadratic is positive everywhere
    s = math.isqrt(disc)
    above_root = -((b + s) // -4) + 1  # ceil((b+s)/4) + 1
    k = max(k_lo, above_root)
    assert 2 * k * k + c > b * k, "threshold must satisfy the cleared inequality"
    return k


def bigk_params(k: int, r: int) -> IneqParams:
    """Exact parameter substitution used at the end of the large-k argument."""
    return IneqParams(x=Fraction(2 * r, k), y=Fraction(1, 2),
                      beta=Fraction(1, k), gamma=Fraction(r, 2 * k),
                      lam=Fraction(k - r - 1, 2 * k), mu=Fraction(k - r, k * k))


def bigk_simplify_check(k: int, r: int) -> bool:
    """The conclusion expression at the large-k substitution simplifies, times
    k^4, to exactly k^2 + 2(r+r^2)^2 + 2r^2 - k(r^3/2 + 4r^2 + 4r)."""
    if not k > r >= 0:
        raise ValueError("need k > r >= 0")
    p = bigk_params(k, r)
    expr = (_sq_over(p.mu - p.x * p.gamma, p.y) + _sq_over(p.beta - p.mu, 1 - p.y)
            + 2 * p.beta * (p.lam + p.gamma) - p.x * p.gamma * p.gamma)
    target = (k * k + 2 * (r + r * r) ** 2 + 2 * r * r
              - k * (Fraction(r ** 3, 2) + 4 * r * r + 4 * r))
    return (expr - p.beta) * k ** 4 == target


# ---------------------------------------------------------------------------
# Numeric fact catalog
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactReport:
    fact_id: str
    description: str
    holds_everywhere: bool
    first_violation: Optional[Fraction]
    margin_min: Optional[Fraction]
    grid_step: Fraction
    points_checked: int


def _grid(lo: Fraction, hi: Fraction, step: Fraction,
          open_lo: bool, open_hi: bool):
    # walk in exact multiples of step starting at the first in-range point
    start = math.ceil(lo / step)
    if open_lo and Fraction(start) * step == lo:
        start += 1
    stop = math.floor(hi / step)
    if open_hi and Fraction(stop) * step == hi:
        stop -= 1
    for m in range(start, stop + 1):
        yield m * step


PointCheck = Callable[[Fraction], tuple[bool, Optional[Fraction]]]


def _f1(b):
    if (3 * b - Fraction(1, 2)) * (1 - b) >= (1 - 2 * b) * b:
        return b > Fraction(219, 1000), b - Fraction(219, 1000)
    return True, None


def _f2(b):
    if b * DELTA3 <= (1 - b * DELTA3) / (1 - 2 * b):
        return b < Fraction(223, 1000), Fraction(223, 1000) - b
    return True, None


def _f3(b):
    m = (1 - 2 * b) * b / (3 * b - Fraction(1, 2)) - (1 - b * DELTA3) / (1 - 2 * b)
    return m >= 0, m


def _f4(_b):
    m = Fraction(258, 1000) - 1 / (1 + DELTA3)
    return m > 0, m


def _f5(b):
    m = (1 - b * DELTA4) - (b / 5 + Fraction(9) / (3 + 5 * b) - 2)
    return m > 0, m


def _f6(b):
    if (Fraction(4, 5) - 2 * b) * b <= (1 - b) * (1 / DELTA4 - b):
        return b < Fraction(19, 100), Fraction(19, 100) - b
    return True, None


def _f7(b):
    m1 = 5 * b / (3 + 5 * b) + 3 * b / 5 - Fraction(32, 100)
    m2 = (Fraction(2, 5) - b) * (Fraction(3, 5) + 1 / (1 - b)) - Fraction(38, 100)
    return m1 >= 0 and m2 >= 0, min(m1, m2)


def _f8(b):
    # the final display of the girth-8 argument must exceed 1 throughout;
    # the left side is concave in alpha, so its minimum over the admissible
    # range [2/5 - beta, 1/2] is at an endpoint
    xp = (b * (DELTA4 + 1) - Fraction(1, 2)) / (b * (DELTA4 + 1) - Fraction(32, 100))

    def lhs(alpha):
        u = 2 * alpha - Fraction(38, 100)
        return u * xp * (2 - u * (1 - xp) / b) + Fraction(76, 100) + b

    m = min(lhs(Fraction(2, 5) - b), lhs(Fraction(1, 2))) - 1
    return m > 0, m


def _f9(_b):
    m1 = DELTA12 / 49 - Fraction(2667, 10000) * Fraction(3993, 10000)
    m2 = Fraction(2667, 10000) - (1 - DELTA12 / 7)
    return m1 >= 0 and m2 > 0, min(m1, m2)


_F10_RATIOS = [Fraction(1, 2), Fraction(3, 4), DELTA3 / 3,
               1 - Fraction(74, 224539)]


def _f10(xi):
    # out-degree-counting step as a biconditional in the ratio xi = |X|/|B|,
    # for representative values c = delta/k
    for c in _F10_RATIOS:
        premise = c <= xi / 2 + (1 - xi)
        conclusion = xi <= 2 * (1 - c)
        if premise != conclusion:
            return False, None
    return True, None


def _f11(b):
    lhs_holds = Fraction(36, 100) + 2 * b + (6 * b - Fraction(64, 100)) / 5 <= 1
    return lhs_holds == (b <= Fraction(24, 100)), None


@dataclass(frozen=True)
class _Fact:
    check: PointCheck
    lo: Fraction
    hi: Fraction
    open_lo: bool
    open_hi: bool
    description: str


_CATALOG: dict[str, _Fact] = {
    "F1": _Fact(_f1, Fraction(0), Fraction(1, 2), True, False,
                "in-degree premise forces beta > 0.219"),
    "F2": _Fact(_f2, Fraction(0), Fraction(223, 1000), True, False,
                "delta3 comparison forces beta < 0.223"),
    "F3": _Fact(_f3, Fraction(219, 1000), Fraction(223, 1000), True, True,
                "second lower bound dominates on (0.219, 0.223)"),
    "F4": _Fact(_f4, Fraction(0), Fraction(0), False, False,
                "1/(1+delta3) < 0.258"),
    "F5": _Fact(_f5, Fraction(0), Fraction(1, 5), True, False,
                "1 - beta*delta4 exceeds the rational bound on (0, 1/5]"),
    "F6": _Fact(_f6, Fraction(0), Fraction(1, 5), True, False,
                "edge-count premise forces beta < 0.19"),
    "F7": _Fact(_f7, Fraction(17, 100), Fraction(19, 100), True, True,
                "y >= 0.32 and z >= 0.38 on (0.17, 0.19)"),
    "F8": _Fact(_f8, Fraction(17, 100), Fraction(19, 100), True, True,
                "final girth-8 display exceeds 1 throughout (0.17, 0.19)"),
    "F9": _Fact(_f9, Fraction(0), Fraction(0), False, False,
                "girth-12 chain: 0.2667 in-degree and 0.2667 > 1 - delta/7"),
    "F10": _Fact(_f10, Fraction(0), Fraction(1), False, False,
                 "|X| counting step as a biconditional in |X|/|B|"),
    "F11": _Fact(_f11, Fraction(0), Fraction(1, 2), True, False,
                 "0.36 + 2b + (6b-0.64)/5 <= 1 iff b <= 0.24"),
}


def fact_scan(fact_id: str, step: Fraction = Fraction(1, 100000)) -> FactReport:
    """Evaluate a catalogued fact at every grid point of its interval."""
    fact = _CATALOG.get(fact_id)
    if fact is None:
        raise UnknownFact(f"no fact {fact_id!r} (known: {sorted(_CATALOG)})")
    if fact.lo == fact.hi:
        points = [fact.lo]  # point facts: a single exact evaluation
    else:
        points = _grid(fact.lo, fact.hi, step, fact.open_lo, fact.open_hi)
    holds = True
    first_violation = None
    margin_min = None
    count = 0
    for b in points:
        count += 1
        ok, margin = fact.check(b)
        if not ok and holds:
            holds = False
            first_violation = b
        if margin is not None and (margin_min is None or margin < margin_min):
            margin_min = margin
    return FactReport(fact_id, fact.description, holds, first_violation,
                      margin_min, step, count)


def all_fact_ids() -> list[str]:
    return sorted(_CATALOG, key=lambda s: int(s[1:]))


def f1_root_bracket(width: Fraction = Fraction(1, 10 ** 9)) -> tuple[Fraction, Fraction]:
    """Bisection bracket for the root of (3b - 1/2)(1-b) = (1-2b)b near 0.219."""
    def h(b: Fraction) -> Fraction:
        return (3 * b - Fraction(1, 2)) * (1 - b) - (1 - 2 * b) * b

    lo, hi = Fraction(21, 100), Fraction(23, 100)
    assert h(lo) < 0 < h(hi)
    while hi - lo > width:
        mid = (lo + hi) / 2
        if h(mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi
