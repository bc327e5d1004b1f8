"""Audits that replay the proved layer-size dichotomies on concrete digraphs.

Both theorems audited here are proved, so a reported violation means the
layer machinery (or the audit itself) is buggy; the audits are the
strongest available oracle for that machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .digraph import (
    BipartiteDigraph,
    Side,
    VertexRef,
    backward_layers,
    forward_layers,
    girth,
    is_compliant,
    star_union,
)
from .errors import PreconditionViolated
from .lemmas import delta_table


@dataclass(frozen=True)
class AuditEntry:
    i: int
    branch: str          # "layer", "star", or "both"
    layer_size: int
    star_size: int       # |N*_{i-1}(v)|
    layer_needed: Fraction
    star_needed: Fraction
    ok: bool


@dataclass(frozen=True)
class AuditReport:
    kind: str
    passed: bool
    entries: tuple[AuditEntry, ...]
    detail: str = ""


def audit_bigset(g: BipartiteDigraph, k: int, alpha: Fraction, beta: Fraction,
                 delta: Fraction, v: VertexRef,
                 horizon: Optional[int] = None) -> AuditReport:
    """Check, for each i up to the horizon, that either layer i is large
    or the star union below it is very large (side-appropriate thresholds)."""
    if not is_compliant(g, alpha, beta):
        raise PreconditionViolated("digraph is not (alpha,beta)-compliant")
    gr = girth(g)
    if gr is not None and gr.length <= 2 * k:
        raise PreconditionViolated(f"girth {gr.length} is not more than 2k={2 * k}")
    if delta not in {e.delta for e in delta_table(k)}:
        raise PreconditionViolated(f"delta={delta} is not a table entry at k={k}")
    if horizon is None:
        horizon = 2 * k + 2
    profile = forward_layers(g, v, horizon)
    entries = []
    for i in range(1, horizon + 1):
        layer = profile.layers[i]
        layer_side = v.side if i % 2 == 0 else v.side.complement
        if layer_side is Side.A:
            layer_needed = alpha * g.a_size
            star_needed = beta * delta * g.b_size
        else:
            layer_needed = beta * g.b_size
            star_needed = alpha * delta * g.a_size
        star_size = len(star_union(profile, i - 1)) if i >= 2 else 0
        by_layer = len(layer) >= layer_needed
        by_star = star_size > star_needed
        branch = {(True, True): "both", (True, False): "layer",
                  (False, True): "star", (False, False): "none"}[(by_layer, by_star)]
        entries.append(AuditEntry(i, branch, len(layer), star_size,
                                  layer_needed, star_needed, by_layer or by_star))
    passed = all(e.ok for e in entries)
    return AuditReport("bigset", passed, tuple(entries),
                       detail=f"v={v}, k={k}, delta={delta}")


def audit_bigindeg(g: BipartiteDigraph, alpha: Fraction, beta: Fraction) -> AuditReport:
    """Some B-vertex has |M1(v)| + |M3(v)| at least (alpha+beta)|A|."""
    if not is_compliant(g, alpha, beta):
        raise PreconditionViolated("digraph is not (alpha,beta)-compliant")
    gr = girth(g)
    if gr is not None and gr.length < 4:
        raise PreconditionViolated(f"girth {gr.length} below four")
    needed = (alpha + beta) * g.a_size
    best = -1
    best_v = None
    entries = []
    for j in range(g.b_size):
        v = VertexRef(Side.B, j)
        prof = backward_layers(g, v, 3)
        total = len(prof.layers[1]) + len(prof.layers[3])
        if total > best:
            best = total
            best_v = v
        entries.append(AuditEntry(j, "layer", total, 0, needed, Fraction(0),
                                  total >= needed))
    passed = best >= needed
    return AuditReport("bigindeg", passed, tuple(entries),
                       detail=f"max |M1|+|M3| = {best} at {best_v}, "
                              f"needed {needed}")
