"""Closed subsets of root systems.

A subset ``T`` of roots is closed when ``x, y in T`` and ``x + y`` a root force
``x + y in T``.  Internally subsets are bitmasks over ``phi.roots`` so that
closure and enumeration stay cheap; the public surface speaks frozensets of
root tuples and :class:`ClosedSubset`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional

from .rootsys import (
    RootSystem,
    apply_word,
    apply_word_coroot,
    longest_element,
    neg,
    weyl_group_elements,
)
from . import linalg

DEFAULT_ENUMERATION_BOUND = 18


class ClosedSetError(ValueError):
    pass


class _Table:
    """Root-sum lookup for one root system."""

    def __init__(self, phi: RootSystem):
        self.phi = phi
        roots = phi.roots
        index = phi.index
        m = len(roots)
        self.size = m
        self.sums = [[-1] * m for _ in range(m)]
        for i, a in enumerate(roots):
            for j, b in enumerate(roots):
                k = index.get(tuple(x + y for x, y in zip(a, b)))
                if k is not None:
                    self.sums[i][j] = k
        # partners[i] = [(j, k)] with roots[i] + roots[j] = roots[k]
        self.partners = [[(j, k) for j, k in enumerate(row) if k >= 0] for row in self.sums]
        self.negation = [index[neg(a)] for a in roots]
        self.full = (1 << m) - 1

    def mask(self, S: Iterable) -> int:
        out = 0
        for a in S:
            a = tuple(a)
            k = self.phi.index.get(a)
            if k is None:
                raise ClosedSetError(f"{a} is not a root of {self.phi.name}")
            out |= 1 << k
        return out

    def members(self, mask: int) -> frozenset:
        roots = self.phi.roots
        return frozenset(roots[i] for i in range(self.size) if mask >> i & 1)

    def closure_add(self, mask: int, new: Iterable[int]) -> int:
        """Close ``mask | new`` assuming ``mask`` already closed."""
        todo = [i for i in new if not mask >> i & 1]
        for i in todo:
            mask |= 1 << i
        while todo:
            i = todo.pop()
            for j, k in self.partners[i]:
                if mask >> j & 1 and not mask >> k & 1:
                    mask |= 1 << k
                    todo.append(k)
        return mask

    def closure(self, mask: int) -> int:
        return self.closure_add(0, [i for i in range(self.size) if mask >> i & 1])

    def is_closed(self, mask: int) -> bool:
        for i in range(self.size):
            if mask >> i & 1:
                for j, k in self.partners[i]:
                    if mask >> j & 1 and not mask >> k & 1:
                        return False
        return True

    def negate(self, mask: int) -> int:
        out = 0
        for i in range(self.size):
            if mask >> i & 1:
                out |= 1 << self.negation[i]
        return out


@lru_cache(maxsize=None)
def table(phi: RootSystem) -> _Table:
    return _Table(phi)


class ClosedSubset:
    """A closed subset ``T`` of ``phi`` with its symmetric/special split."""

    def __init__(self, phi: RootSystem, members: Iterable, *, check: bool = True):
        self.ambient = phi
        self.mask = table(phi).mask(members)
        if check and not table(phi).is_closed(self.mask):
            raise ClosedSetError("subset is not closed")

    @classmethod
    def _from_mask(cls, phi: RootSystem, mask: int) -> "ClosedSubset":
        obj = cls.__new__(cls)
        obj.ambient = phi
        obj.mask = mask
        return obj

    @cached_property
    def members(self) -> frozenset:
        return table(self.ambient).members(self.mask)

    @cached_property
    def split(self) -> tuple[frozenset, frozenset]:
        tab = table(self.ambient)
        sym = self.mask & tab.negate(self.mask)
        return tab.members(sym), tab.members(self.mask & ~sym)

    @property
    def symmetric(self) -> frozenset:
        return self.split[0]

    @property
    def special(self) -> frozenset:
        return self.split[1]

    def sorted_roots(self) -> list:
        return [a for a in self.ambient.roots if a in self.members]

    def __contains__(self, a):
        return tuple(a) in self.members

    def __iter__(self):
        return iter(self.sorted_roots())

    def __len__(self):
        return bin(self.mask).count("1")

    def __eq__(self, other):
        return isinstance(other, ClosedSubset) and self.ambient == other.ambient and self.mask == other.mask

    def __hash__(self):
        return hash((self.ambient, self.mask))

    def __repr__(self):
        return f"ClosedSubset({self.ambient.name}, {self.sorted_roots()})"

    def to_json(self) -> list:
        return [list(a) for a in self.sorted_roots()]


def is_closed(phi: RootSystem, S: Iterable) -> bool:
    return table(phi).is_closed(table(phi).mask(S))


def closure(phi: RootSystem, S: Iterable) -> ClosedSubset:
    """Smallest closed subset of ``phi`` containing ``S`` (pairwise saturation)."""
    tab = table(phi)
    return ClosedSubset._from_mask(phi, tab.closure(tab.mask(S)))


def decompose(T: ClosedSubset) -> tuple[frozenset, frozenset]:
    """``(T^r, T^u)``: roots whose negatives are / are not in ``T``."""
    sym, spec = T.split
    phi = T.ambient
    assert is_closed(phi, sym) and is_closed(phi, spec)
    return sym, spec


def is_parabolic(T: ClosedSubset) -> bool:
    tab = table(T.ambient)
    return (T.mask | tab.negate(T.mask)) == tab.full


def symmetric_hull(T: ClosedSubset) -> ClosedSubset:
    """``[T u -T]``, the closure of ``T`` together with its negative."""
    tab = table(T.ambient)
    hull = tab.closure(T.mask | tab.negate(T.mask))
    assert hull == tab.negate(hull) and hull & T.mask == T.mask
    return ClosedSubset._from_mask(T.ambient, hull)


def is_special_closed(phi: RootSystem, S: Iterable) -> bool:
    tab = table(phi)
    mask = tab.mask(S)
    return tab.is_closed(mask) and not mask & tab.negate(mask)


def _separating_vector(phi: RootSystem, S: list) -> list[Fraction]:
    """Vector ``v`` with ``(v, a) > 0`` for all ``a`` in ``S`` (perceptron, exact).

    Terminates because a special closed subset lies in an open half-space.
    """
    v = [Fraction(0)] * phi.rank
    for _ in range(100000):
        bad = next((a for a in S if phi.inner(v, a) <= 0), None)
        if bad is None:
            return v
        v = [x + y for x, y in zip(v, bad)]
    raise ClosedSetError("no separating vector found")


def _walk_to_dominant(phi: RootSystem, v: list[Fraction]) -> tuple:
    letters = []
    while True:
        i = next((k for k in range(phi.rank) if phi.inner(v, phi.simple_roots[k]) < 0), None)
        if i is None:
            return tuple(reversed(letters))
        c = 2 * phi.inner(v, phi.simple_roots[i]) / phi.gram[i][i]
        v = list(v)
        v[i] -= c
        letters.append(i)


def conjugate_special_positive(phi: RootSystem, S: Iterable) -> tuple[tuple, frozenset]:
    """Weyl word ``w`` with ``w(S)`` inside the positive roots."""
    S = [tuple(a) for a in S]
    if not is_special_closed(phi, S):
        raise ClosedSetError("input is not a special closed subset")
    if not S:
        return (), frozenset()
    w = _walk_to_dominant(phi, _separating_vector(phi, S))
    image = apply_word(phi, w, S)
    assert all(sum(a) > 0 for a in image)
    return w, image


def conjugate_special_negative(phi: RootSystem, S: Iterable) -> tuple[tuple, frozenset]:
    """Weyl word ``w`` with ``w(S)`` inside the negative roots.

    First moves ``S`` into the positive roots, then applies ``w_0``.
    """
    S = [tuple(a) for a in S]
    if not is_special_closed(phi, S):
        raise ClosedSetError("input is not a special closed subset")
    if all(sum(a) < 0 for a in S):
        return (), frozenset(S)
    w1, _ = conjugate_special_positive(phi, S)
    w = longest_element(phi) + w1
    image = apply_word(phi, w, S)
    if not all(sum(a) < 0 for a in image):
        raise AssertionError("conjugation failed")  # pragma: no cover
    return w, image


def conjugate_special_negative_search(phi: RootSystem, S: Iterable) -> tuple[tuple, frozenset]:
    """Exhaustive search over W; the fallback for small ranks."""
    S = [tuple(a) for a in S]
    for w in weyl_group_elements(phi):
        image = apply_word(phi, w, S)
        if all(sum(a) < 0 for a in image):
            return w, image
    raise ClosedSetError("no Weyl element maps the set into the negative roots")


def enumerate_closed_subsets(phi: RootSystem, bound: int = DEFAULT_ENUMERATION_BOUND) -> Iterator[ClosedSubset]:
    """Every closed subset of ``phi`` exactly once, by backtracking in root order."""
    tab = table(phi)
    if tab.size > bound:
        raise ClosedSetError(f"{phi.name} has {tab.size} roots, above the enumeration bound {bound}")
    m = tab.size

    def rec(k: int, inc: int, exc: int):
        while k < m and (inc | exc) >> k & 1:
            k += 1
        if k == m:
            yield ClosedSubset._from_mask(phi, inc)
            return
        yield from rec(k + 1, inc, exc | (1 << k))
        new = tab.closure_add(inc, [k])
        if not new & exc:
            yield from rec(k + 1, new, exc)

    yield from rec(0, 0, 0)


def conjugating_word(
    phi: RootSystem,
    T1: Iterable,
    T2: Iterable,
    t1: Optional[list] = None,
    t2: Optional[list] = None,
) -> Optional[tuple]:
    """A Weyl word ``w`` with ``w(T1) = T2`` (and ``w(t1) = t2`` as subspaces), or None.

    This is the corrected reading of the conjugacy criterion for regular
    subalgebras ``s_{T,t}``; the search runs over all of W.
    """
    T1 = frozenset(tuple(a) for a in T1)
    T2 = frozenset(tuple(a) for a in T2)
    span2 = linalg.row_space(t2, phi.rank) if t2 is not None else None
    for w in weyl_group_elements(phi):
        if apply_word(phi, w, T1) != T2:
            continue
        if t1 is not None and t2 is not None:
            image = [apply_word_coroot(phi, w, h) for h in t1]
            if linalg.row_space(image, phi.rank) != span2:
                continue
        return w
    return None


def random_special_closed(phi: RootSystem, rng, size_hint: int = 3) -> frozenset:
    """Random special closed subset: closure of a few roots of a random positive system."""
    w = tuple(rng.randrange(phi.rank) for _ in range(rng.randrange(0, 3 * phi.rank + 1)))
    pos = sorted(apply_word(phi, w, phi.positive_roots))
    k = rng.randrange(0, min(size_hint, len(pos)) + 1)
    seed = rng.sample(pos, k)
    S = closure(phi, seed).members
    assert is_special_closed(phi, S)
    return S

