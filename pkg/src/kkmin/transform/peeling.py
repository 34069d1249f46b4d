"""Iterative clique peeling.

Starting from a family of disjoint (t+1)-cliques, each round picks the
boundary vertex with the most neighbours in the surviving cliques, records
the class of boundary vertices sharing exactly that neighbourhood, and
discards every clique the chosen vertex touches.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..graph import Graph, members
from .cliques import CliqueFamily, PreconditionError

ALPHA = Fraction(4, 7)


@dataclass(frozen=True)
class PeelStep:
    index: int                      # 1-based iteration number
    chosen: int                     # u_i
    klass: tuple[int, ...]          # U_i, chosen vertex first
    f_chosen: int                   # f_i(u_i)
    surviving: tuple[int, ...]      # indices into the family of D_i
    boundary: tuple[int, ...]       # B_i
    cliques_touched: int            # k'(u_i)
    f_values: tuple[tuple[int, int], ...]   # (u, f_i(u)) for u in B_1

    @property
    def size(self) -> int:
        return len(self.klass)


@dataclass(frozen=True)
class PeelingTrace:
    family: CliqueFamily
    steps: tuple[PeelStep, ...]
    adjacency: tuple[int, ...]

    @property
    def xi(self) -> int:
        return len(self.steps)

    @property
    def lam(self) -> int:
        """The first maximizer degree f_1(u_1); 0 for an empty trace."""
        return self.steps[0].f_chosen if self.steps else 0

    @property
    def f_sequence(self) -> list[int]:
        return [s.f_chosen for s in self.steps]

    @property
    def b1_vertices(self) -> tuple[int, ...]:
        return self.steps[0].boundary if self.steps else ()

    def f(self, i: int, u: int) -> int:
        """f_i(u) for u in B_1."""
        return dict(self.steps[i - 1].f_values)[u]

    def step(self, i: int) -> PeelStep:
        if not 1 <= i <= self.xi:
            raise IndexError(f"step index {i} outside 1..{self.xi}")
        return self.steps[i - 1]

    @cached_property
    def b_values(self) -> tuple[int, ...]:
        return tuple(b_interval(self, i) for i in range(1, self.xi + 1))

    def z_partition(self, b: int | None = None) -> "ZPartition":
        """Split the classes U_1..U_b (b = b_1 by default) by whether they
        contain a vertex with no neighbours in other classes."""
        if not self.steps:
            return ZPartition(0, 0, (), (), ())
        if b is None:
            b = self.b_values[0]
        classes = [self.steps[i].klass for i in range(b)]
        union = 0
        for k in classes:
            for v in k:
                union |= 1 << v
        z = []
        u1, u2 = [], []
        for idx, k in enumerate(classes, start=1):
            own = 0
            for v in k:
                own |= 1 << v
            zs = [v for v in k if not self.adjacency[v] & union & ~own]
            z.extend(zs)
            (u2 if zs else u1).append(idx)
        return ZPartition(b, len(u1), tuple(sorted(z)), tuple(u1), tuple(u2))

    # -- serialization ----------------------------------------------------

    def to_records(self) -> list[dict]:
        return [{"i": s.index, "u": s.chosen, "f": s.f_chosen, "a": s.size,
                 "surviving": len(s.surviving), "U": list(s.klass),
                 "k_prime": s.cliques_touched} for s in self.steps]

    def to_text(self) -> str:
        lines = ["i\tu_i\tf_i\t|U_i|\t|D_i|"]
        for s in self.steps:
            lines.append(f"{s.index}\t{s.chosen}\t{s.f_chosen}\t{s.size}\t{len(s.surviving)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "t": self.family.t,
            "cliques": [list(c) for c in self.family.cliques],
            "xi": self.xi,
            "lambda": self.lam,
            "b": list(self.b_values),
            "steps": self.to_records(),
        }
        if self.steps:
            zp = self.z_partition()
            doc["z_partition"] = {"b": zp.b, "b_prime": zp.b_prime, "Z": list(zp.z),
                                  "U1": list(zp.u1), "U2": list(zp.u2)}
        return json.dumps(doc, sort_keys=True)


@dataclass(frozen=True)
class ZPartition:
    b: int
    b_prime: int
    z: tuple[int, ...]
    u1: tuple[int, ...]     # 1-based class indices with no Z vertex
    u2: tuple[int, ...]


def peel(g: Graph, d: CliqueFamily) -> PeelingTrace:
    """Run the peeling procedure; ties go to the smallest vertex label."""
    d.validate_in(g, no_cross_edges=True, external_neighbors=True)
    masks = d.masks()
    alive = list(range(len(masks)))
    b1 = None
    steps = []
    while alive:
        vd = 0
        for j in alive:
            vd |= masks[j]
        boundary = g.neighborhood_of_set(vd) & ~vd
        if b1 is None:
            b1 = boundary
        if not boundary:
            break
        f_vals = {u: (g.adj[u] & vd).bit_count() for u in members(b1)}
        best = max(f_vals[u] for u in members(boundary))
        chosen = min(u for u in members(boundary) if f_vals[u] == best)
        target = g.adj[chosen] & vd
        klass = [chosen] + [v for v in members(boundary) if v != chosen and g.adj[v] & vd == target]
        touched = [j for j in alive if masks[j] & target]
        steps.append(PeelStep(len(steps) + 1, chosen, tuple(klass), best, tuple(alive),
                              tuple(members(boundary)), len(touched), tuple(sorted(f_vals.items()))))
        alive = [j for j in alive if not masks[j] & target]
    return PeelingTrace(d, tuple(steps), g.adj)


def _threshold(f: int, alpha: Fraction) -> Fraction:
    if f >= 3:
        return Fraction(math.ceil(2 * alpha * f), 2) + 1
    return Fraction(f)


def b_interval(trace: PeelingTrace, i: int, alpha: Fraction = ALPHA) -> int:
    """Length of the run of maximizer degrees from step ``i`` staying at or
    above the decay threshold of ``f_i(u_i)``."""
    if not 1 <= i <= trace.xi:
        raise IndexError(f"step index {i} outside 1..{trace.xi}")
    seq = trace.f_sequence
    thr = _threshold(seq[i - 1], alpha)
    b = 0
    for j in range(i, trace.xi + 1):
        if seq[j - 1] >= thr:
            b = j - i + 1
    return b
