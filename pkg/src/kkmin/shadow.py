"""Uniform set families, shadows and the Lovász form of Kruskal-Katona.

Families are stored as sorted tuples of sorted tuples in colexicographic
order, so two families are equal exactly when they have the same members.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational
from typing import Iterable

from scipy.optimize import brentq

from .graph import Graph


def colex_key(s: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(reversed(s))


@dataclass(frozen=True)
class KFamily:
    k: int
    universe_n: int
    sets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for s in self.sets:
            if len(s) != self.k:
                raise ValueError(f"member {s} does not have size {self.k}")
            if s and (s[0] < 0 or s[-1] >= self.universe_n):
                raise ValueError(f"member {s} outside universe 0..{self.universe_n - 1}")

    @classmethod
    def from_sets(cls, k: int, sets: Iterable[Iterable[int]], universe_n: int | None = None) -> "KFamily":
        canon = set()
        for s in sets:
            t = tuple(sorted(s))
            if len(set(t)) != len(t):
                raise ValueError(f"member {t} has repeated elements")
            canon.add(t)
        if universe_n is None:
            universe_n = max((s[-1] + 1 for s in canon if s), default=0)
        return cls(k, universe_n, tuple(sorted(canon, key=colex_key)))

    def __len__(self):
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s):
        return tuple(sorted(s)) in set(self.sets)

    def degree(self, v: int) -> int:
        return sum(1 for s in self.sets if v in s)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.universe_n)), default=0)

    def to_text(self) -> str:
        lines = [f"{self.k} {self.universe_n}"]
        lines.extend(",".join(map(str, s)) for s in self.sets)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "KFamily":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines:
            raise ValueError("empty family file")
        head = lines[0].split()
        if len(head) != 2:
            raise ValueError(f"header must be 'k n', got {lines[0]!r}")
        k, n = int(head[0]), int(head[1])
        sets = [tuple(int(x) for x in ln.split(",")) for ln in lines[1:]]
        return cls.from_sets(k, sets, universe_n=n)


def shadow(f: KFamily, ell: int) -> KFamily:
    """The ``ell``-shadow: every ``ell``-subset of some member."""
    if not 1 <= ell <= f.k:
        raise ValueError(f"ell must lie in 1..{f.k}, got {ell}")
    out = set()
    for s in f.sets:
        out.update(combinations(s, ell))
    return KFamily(ell, f.universe_n, tuple(sorted(out, key=colex_key)))


def gen_binomial(x, k: int):
    """``x(x-1)...(x-k+1)/k!`` for real ``x >= k``.

    Integers and fractions give exact results; floats give floats.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if x < k:
        raise ValueError(f"generalized binomial needs x >= k, got x={x}, k={k}")
    if isinstance(x, int):
        return math.comb(x, k)
    if isinstance(x, Rational):
        num = Fraction(1)
        for i in range(k):
            num *= Fraction(x) - i
        return num / math.factorial(k)
    num = 1.0
    for i in range(k):
        num *= x - i
    return num / math.factorial(k)


def binomial_inverse(m, k: int) -> float:
    """The unique ``x >= k`` with ``C(x, k) = m``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if m < 1:
        raise ValueError(f"m must be at least 1, got {m}")
    if m == 1:
        return float(k)
    if k == 1:
        return float(m)
    # C(x,k) <= x^k/k! and C(x,k) >= (x-k+1)^k/k! bracket the root
    root = (math.factorial(k) * float(m)) ** (1.0 / k)
    lo, hi = max(float(k), root - 1.0), root + k
    x = brentq(lambda y: gen_binomial(y, k) - float(m), lo, hi, xtol=1e-14, maxiter=200)
    near = round(x)
    if abs(x - near) < 1e-9 and near >= k and math.comb(near, k) == m:
        return float(near)
    return x


def lovasz_shadow_bound(m: int, k: int, ell: int) -> float:
    """Lower bound ``C(x, ell)`` on the ``ell``-shadow of any ``k``-uniform
    family of size ``m``, where ``C(x, k) = m``."""
    if not 1 <= ell <= k:
        raise ValueError(f"ell must lie in 1..{k}, got {ell}")
    x = binomial_inverse(m, k)
    return float(gen_binomial(x, ell))


def colex_segment(m: int, k: int) -> KFamily:
    """The first ``m`` ``k``-subsets of the naturals in colex order."""
    if m < 0:
        raise ValueError("m must be non-negative")
    sets = []
    for r in range(m):
        s = []
        rest = r
        for i in range(k, 0, -1):
            c = i - 1
            while math.comb(c + 1, i) <= rest:
                c += 1
            s.append(c)
            rest -= math.comb(c, i)
        sets.append(tuple(reversed(s)))
    universe = max((s[-1] + 1 for s in sets if s), default=0)
    return KFamily(k, universe, tuple(sets))


@dataclass(frozen=True)
class LinkGraph:
    graph: Graph
    triangle_counts: tuple[int, ...]
    family_degrees: tuple[int, ...]

    @property
    def containment_holds(self) -> bool:
        """Every member {v,a,b} is a triangle of the shadow graph through v."""
        return all(d <= c for d, c in zip(self.family_degrees, self.triangle_counts))


def family_to_link_graph(f: KFamily) -> LinkGraph:
    """Graph whose edges are the 2-shadow of a 3-uniform family."""
    if f.k != 3:
        raise ValueError(f"link graph correspondence needs a 3-uniform family, got k={f.k}")
    g = Graph.from_edges(f.universe_n, shadow(f, 2).sets) if f.sets else Graph.empty(f.universe_n)
    degs = tuple(f.degree(v) for v in range(f.universe_n))
    return LinkGraph(g, tuple(g.triangle_degrees()), degs)
