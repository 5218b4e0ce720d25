"""Finite root systems, weights and Weyl group words.

Roots are integer tuples of coefficients over the simple roots; weights are
:class:`Weight` objects holding integer marks over the fundamental weights.
Simple roots are labelled as in Bourbaki and indexed from 0, so ``alpha_1`` of
the usual notation is index 0.  Reducible systems such as ``"B2+A1"`` are the
concatenation of their irreducible blocks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence, Union

Root = tuple  # tuple[int, ...]
WeylWord = tuple  # tuple[int, ...], applied right to left

VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


class RootSystemError(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    marks: tuple

    def __post_init__(self):
        object.__setattr__(self, "marks", tuple(int(m) for m in self.marks))

    @property
    def is_dominant(self) -> bool:
        return all(m >= 0 for m in self.marks)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.marks, other.marks)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.marks, other.marks)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.marks))

    def __lt__(self, other):
        return self.marks < other.marks

    def __iter__(self):
        return iter(self.marks)

    def __len__(self):
        return len(self.marks)

    def __repr__(self):
        return f"Weight({self.marks})"


def _simple_vectors(family: str, n: int) -> list[list[Fraction]]:
    """Simple roots as explicit vectors in a Euclidean space (Bourbaki)."""
    h = Fraction(1, 2)

    def e(i, dim, c=1):
        v = [Fraction(0)] * dim
        v[i] = Fraction(c)
        return v

    def diff(i, j, dim):
        v = e(i, dim)
        v[j] -= 1
        return v

    if family == "A":
        return [diff(i, i + 1, n + 1) for i in range(n)]
    if family in "BCD":
        roots = [diff(i, i + 1, n) for i in range(n - 1)]
        if family == "B":
            roots.append(e(n - 1, n))
        elif family == "C":
            roots.append(e(n - 1, n, 2))
        else:
            v = e(n - 2, n)
            v[n - 1] = Fraction(1)
            roots.append(v)
        return roots
    if family == "E":
        roots = [[h, -h, -h, -h, -h, -h, -h, h]]
        v = e(0, 8)
        v[1] = Fraction(1)
        roots.append(v)
        roots += [diff(i + 1, i, 8) for i in range(6)]
        return roots[:n]
    if family == "F":
        return [diff(1, 2, 4), diff(2, 3, 4), e(3, 4), [h, -h, -h, -h]]
    if family == "G":
        return [[Fraction(1), Fraction(-1), Fraction(0)], [Fraction(-2), Fraction(1), Fraction(1)]]
    raise RootSystemError(f"unknown family {family!r}")


def parse_system(text: str) -> list[tuple[str, int]]:
    """Parse ``"B2+A1"`` into ``[("B", 2), ("A", 1)]``."""
    parts = [p.strip() for p in str(text).split("+")]
    out = []
    for p in parts:
        m = re.fullmatch(r"([A-Ga-g])\s*_?(\d+)", p)
        if not m:
            raise RootSystemError(f"cannot parse root system component {p!r}")
        out.append((m.group(1).upper(), int(m.group(2))))
    return out


@dataclass(frozen=True, eq=False)
class RootSystem:
    components: tuple
    gram: tuple  # symmetric bilinear form on simple roots, Fractions
    cartan: tuple  # cartan[i][j] = <alpha_i, alpha_j> = 2(a_i, a_j)/(a_j, a_j)
    roots: tuple
    positive_roots: tuple
    blocks: tuple = field(repr=False)  # index range of each component

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def name(self) -> str:
        return "+".join(f"{f}{n}" for f, n in self.components)

    @property
    def rho(self) -> Weight:
        return Weight((1,) * self.rank)

    @property
    def negative_roots(self) -> tuple:
        return tuple(neg(a) for a in self.positive_roots)

    @cached_property
    def root_set(self) -> frozenset:
        return frozenset(self.roots)

    @cached_property
    def index(self) -> dict:
        return {a: i for i, a in enumerate(self.roots)}

    @cached_property
    def simple_roots(self) -> tuple:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def highest_roots(self) -> tuple:
        """Highest root of each irreducible component."""
        out = []
        for lo, hi in self.blocks:
            comp = [a for a in self.positive_roots if any(a[lo:hi])]
            out.append(max(comp, key=height))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"RootSystem({self.name!r})"

    def is_root(self, x) -> bool:
        return tuple(x) in self.root_set

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        """Symmetric form ``(x, y)`` for vectors in simple-root coordinates."""
        g = self.gram
        return sum(
            (Fraction(a) * b * g[i][j] for i, a in enumerate(x) if a for j, b in enumerate(y) if b),
            Fraction(0),
        )

    def norm(self, x: Sequence) -> Fraction:
        return self.inner(x, x)

    def root_to_weight(self, a: Sequence) -> Weight:
        return Weight(tuple(sum(c * self.cartan[i][j] for i, c in enumerate(a)) for j in range(self.rank)))

    def coroot(self, a: Sequence) -> tuple:
        """``h_a`` in coordinates over the simple coroots ``h_{alpha_i}``."""
        na = self.norm(a)
        return tuple(Fraction(c) * self.gram[i][i] / na for i, c in enumerate(a))

    def component_of(self, a: Sequence) -> int:
        for k, (lo, hi) in enumerate(self.blocks):
            if any(a[lo:hi]):
                return k
        raise RootSystemError("zero vector has no component")


def height(a: Sequence) -> int:
    return sum(a)


def neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def root_sort_key(a: Sequence):
    """Height first, then coefficient vectors in decreasing lexicographic order."""
    return (sum(a), tuple(-x for x in a))


def build_root_system(spec: Union[str, Iterable[tuple[str, int]]]) -> RootSystem:
    """Build a (possibly reducible) root system from ``"A3"`` or ``[("A", 3)]``."""
    components = parse_system(spec) if isinstance(spec, str) else [(str(f).upper(), int(n)) for f, n in spec]
    if not components:
        raise RootSystemError("empty root system")
    for fam, n in components:
        if fam not in VALID_RANKS or not VALID_RANKS[fam](n):
            raise RootSystemError(f"invalid simple type {fam}{n}")

    rank = sum(n for _, n in components)
    gram = [[Fraction(0)] * rank for _ in range(rank)]
    blocks = []
    offset = 0
    for fam, n in components:
        vecs = _simple_vectors(fam, n)
        local = [[sum(x * y for x, y in zip(u, v)) for v in vecs] for u in vecs]
        shortest = min(local[i][i] for i in range(n))
        for i in range(n):
            for j in range(n):
                # short roots get squared length 2 in every component
                gram[offset + i][offset + j] = 2 * local[i][j] / shortest
        blocks.append((offset, offset + n))
        offset += n
    cartan = tuple(
        tuple(int(2 * gram[i][j] / gram[j][j]) for j in range(rank)) for i in range(rank)
    )

    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found = set(simple) | {neg(a) for a in simple}
    frontier = list(found)
    while frontier:
        nxt = []
        for a in frontier:
            for i in range(rank):
                b = _reflect_root(cartan, i, a)
                if b not in found:
                    found.add(b)
                    nxt.append(b)
        frontier = nxt
    roots = tuple(sorted(found, key=root_sort_key))
    positive = tuple(a for a in roots if sum(a) > 0)
    return RootSystem(
        components=tuple(components),
        gram=tuple(tuple(r) for r in gram),
        cartan=cartan,
        roots=roots,
        positive_roots=positive,
        blocks=tuple(blocks),
    )


def _reflect_root(cartan, i: int, a: Sequence) -> tuple:
    c = sum(x * cartan[k][i] for k, x in enumerate(a))
    if not c:
        return tuple(a)
    out = list(a)
    out[i] -= c
    return tuple(out)


def pairing(phi: RootSystem, x, beta: Sequence) -> int:
    """``<x, beta> = 2(x, beta)/(beta, beta)`` for a root/weight ``x`` and root ``beta``."""
    beta = tuple(beta)
    if beta not in phi.root_set:
        raise RootSystemError(f"{beta} is not a root of {phi.name}")
    nb = phi.norm(beta)
    if isinstance(x, Weight):
        val = sum(Fraction(b) * phi.gram[j][j] * m for j, (b, m) in enumerate(zip(beta, x.marks))) / nb
    else:
        val = 2 * phi.inner(x, beta) / nb
    if val.denominator != 1:
        raise RootSystemError(f"non-integral pairing <{x}, {beta}> = {val}")
    return int(val)


def reflect(phi: RootSystem, i: int, x):
    """Simple reflection ``s_i`` applied to a root (tuple) or a :class:`Weight`."""
    if not 0 <= i < phi.rank:
        raise RootSystemError(f"simple index {i} out of range for {phi.name}")
    if isinstance(x, Weight):
        c = x.marks[i]
        if not c:
            return x
        return Weight(tuple(m - c * phi.cartan[i][j] for j, m in enumerate(x.marks)))
    return _reflect_root(phi.cartan, i, x)


def check_word(phi: RootSystem, w: Sequence[int]) -> tuple:
    w = tuple(int(i) for i in w)
    bad = [i for i in w if not 0 <= i < phi.rank]
    if bad:
        raise RootSystemError(f"invalid letters {bad} in Weyl word for {phi.name}")
    return w


def apply_word_to(phi: RootSystem, w: Sequence[int], x):
    for i in reversed(check_word(phi, w)):
        x = reflect(phi, i, x)
    return x


def apply_word(phi: RootSystem, w: Sequence[int], S: Iterable) -> frozenset:
    """Image of a set of roots under ``w`` (letters act right to left)."""
    w = check_word(phi, w)
    return frozenset(apply_word_to(phi, w, tuple(a)) for a in S)


def apply_word_coroot(phi: RootSystem, w: Sequence[int], h: Sequence) -> tuple:
    """Weyl action on ``h`` in simple-coroot coordinates: ``s_i(h) = h - alpha_i(h) h_i``."""
    h = [Fraction(x) for x in h]
    for i in reversed(check_word(phi, w)):
        ai = sum(c * phi.cartan[i][j] for j, c in enumerate(h))
        h[i] -= ai
    return tuple(h)


def longest_element(phi: RootSystem) -> WeylWord:
    """Reduced word for ``w_0`` by greedy descent from ``rho`` to ``-rho``."""
    x = phi.rho
    letters = []
    while True:
        i = next((k for k, m in enumerate(x.marks) if m > 0), None)
        if i is None:
            break
        x = reflect(phi, i, x)
        letters.append(i)
    return tuple(reversed(letters))


def weyl_group_elements(phi: RootSystem, limit: int = 100000) -> list[WeylWord]:
    """All elements of W as reduced words, breadth first (small ranks only)."""
    seen = {phi.rho: ()}
    frontier = [phi.rho]
    while frontier:
        nxt = []
        for x in frontier:
            for i in range(phi.rank):
                y = reflect(phi, i, x)
                if y not in seen:
                    seen[y] = (i,) + seen[x]
                    nxt.append(y)
                    if len(seen) > limit:
                        raise RootSystemError("Weyl group too large to enumerate")
        frontier = nxt
    return list(seen.values())


def weyl_dimension(phi: RootSystem, lam: Weight) -> int:
    """Weyl dimension formula in exact arithmetic."""
    lam = lam if isinstance(lam, Weight) else Weight(lam)
    if len(lam) != phi.rank:
        raise RootSystemError("weight has wrong length")
    if not lam.is_dominant:
        raise RootSystemError(f"{lam} is not dominant")
    lr = lam + phi.rho
    num = Fraction(1)
    for a in phi.positive_roots:
        num *= Fraction(pairing(phi, lr, a), pairing(phi, phi.rho, a))
    assert num.denominator == 1
    return int(num)


def dominant_weights(phi: RootSystem, max_dim: int) -> list[Weight]:
    """All dominant weights with ``weyl_dimension <= max_dim``, sorted by (dim, marks)."""
    zero = Weight((0,) * phi.rank)
    found = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for lam in frontier:
            for i in range(phi.rank):
                mu = Weight(tuple(m + (j == i) for j, m in enumerate(lam.marks)))
                if mu not in found and weyl_dimension(phi, mu) <= max_dim:
                    found.add(mu)
                    nxt.append(mu)
        frontier = nxt
    return sorted(found, key=lambda w: (weyl_dimension(phi, w), w.marks))


def fundamental_weight(phi: RootSystem, i: int) -> Weight:
    return Weight(tuple(int(j == i) for j in range(phi.rank)))


def root_label(phi: RootSystem, a: Sequence) -> str:
    """``a_{p,q}`` notation for type A roots (1-based), coefficient vector otherwise."""
    a = tuple(a)
    if len(phi.components) == 1 and phi.components[0][0] == "A":
        sign = "-" if sum(a) < 0 else ""
        support = [i for i, c in enumerate(a) if c]
        p, q = support[0] + 1, support[-1] + 1
        return f"{sign}a{p}" if p == q else f"{sign}a{p},{q}"
    return "[" + ",".join(str(c) for c in a) + "]"
