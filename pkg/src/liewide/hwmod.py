"""Explicit simple highest-weight modules and their restrictions.

Everything is weight graded: a vector space is a dict from weight (marks
tuple) to its dimension, and a root-vector action is a :class:`GradedOp`
holding one small exact block per source weight.  Dense matrices are only
produced on request (tests, JSON dumps, the generic commutant).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import linalg
from .regsub import ChevalleyBasis, RegularSubalgebra, chevalley_constants, is_levi_decomposable
from .rootsys import RootSystem, Weight, neg, weyl_dimension

DEFAULT_CAP = 2000


class ModuleError(ValueError):
    pass


def dimension_cap() -> int:
    return int(os.environ.get("LIEWIDE_CAP", DEFAULT_CAP))


def _shift(mu: tuple, d: tuple) -> tuple:
    return tuple(a + b for a, b in zip(mu, d))


class GradedOp:
    """Linear map sending the ``mu`` weight space to the ``mu + shift`` one."""

    __slots__ = ("shift", "blocks")

    def __init__(self, shift: tuple, blocks: Optional[dict] = None):
        self.shift = tuple(shift)
        self.blocks = {} if blocks is None else blocks

    def __call__(self, mu: tuple, vec: Sequence) -> Optional[list]:
        """Apply to a vector of the ``mu`` space; ``None`` means zero."""
        b = self.blocks.get(mu)
        if b is None:
            return None
        out = linalg.matvec(b, vec)
        return out if any(out) else None

    def compose(self, other: "GradedOp") -> "GradedOp":
        """``self o other``."""
        blocks = {}
        for mu, b in other.blocks.items():
            a = self.blocks.get(_shift(mu, other.shift))
            if a is not None:
                blocks[mu] = linalg.matmul(a, b)
        return GradedOp(_shift(self.shift, other.shift), blocks)

    def combine(self, other: "GradedOp", ca=1, cb=1) -> "GradedOp":
        """``ca * self + cb * other`` (equal shifts)."""
        assert self.shift == other.shift
        blocks = {}
        for mu in set(self.blocks) | set(other.blocks):
            a = self.blocks.get(mu)
            b = other.blocks.get(mu)
            if a is None:
                blk = [[cb * y for y in row] for row in b]
            elif b is None:
                blk = [[ca * x for x in row] for row in a]
            else:
                blk = [[ca * x + cb * y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]
            if any(any(row) for row in blk):
                blocks[mu] = blk
        return GradedOp(self.shift, blocks)

    def scale(self, c) -> "GradedOp":
        c = Fraction(c)
        return GradedOp(self.shift, {mu: [[c * x for x in row] for row in b] for mu, b in self.blocks.items()})

    def is_zero(self) -> bool:
        return not any(any(any(row) for row in b) for b in self.blocks.values())


def commutator(a: GradedOp, b: GradedOp) -> GradedOp:
    return a.compose(b).combine(b.compose(a), 1, -1)


class WeightModule:
    """Finite-dimensional weight module with exact root-vector actions.

    ``spaces`` maps each weight to its multiplicity, in a fixed basis order.
    Actions of the Cartan subalgebra are read off the weights; root vectors
    are stored in ``ops`` and, for modules over all of ``g`` built from simple
    generators, derived on demand through the extraspecial pairs.
    """

    def __init__(self, phi: RootSystem, spaces: dict, ops: dict, *, highest=None, cb: ChevalleyBasis | None = None):
        self.phi = phi
        self.spaces = dict(spaces)
        if highest is not None:
            self.order = sorted(self.spaces, key=lambda mu: (_level(phi, highest, mu), tuple(-x for x in mu)))
        else:
            self.order = sorted(self.spaces, reverse=True)
        self._ops = dict(ops)
        self.highest = highest
        self.cb = cb
        self.degenerate = False
        self._cache: dict = {}
        off = 0
        self.offsets = {}
        for mu in self.order:
            self.offsets[mu] = off
            off += self.spaces[mu]
        self.dim = off

    def __repr__(self):
        hw = f", highest={self.highest}" if self.highest is not None else ""
        return f"WeightModule({self.phi.name}, dim={self.dim}{hw})"

    @property
    def weights(self) -> list[Weight]:
        return [Weight(mu) for mu in self.order for _ in range(self.spaces[mu])]

    @property
    def highest_vector(self) -> Optional[int]:
        return None if self.highest is None else self.offsets[self.highest]

    def has_op(self, root) -> bool:
        return tuple(root) in self._ops or self.cb is not None

    def op(self, root: Sequence) -> GradedOp:
        """Action of the Chevalley root vector ``e_root``."""
        root = tuple(root)
        got = self._ops.get(root)
        if got is not None:
            return got
        if self.cb is None:
            raise ModuleError(f"no action stored for root {root}")
        cb = self.cb
        pos = root if sum(root) > 0 else neg(root)
        xi, zeta = cb.extraspecial[pos]
        if sum(root) < 0:
            xi, zeta = neg(xi), neg(zeta)
        res = commutator(self.op(xi), self.op(zeta)).scale(Fraction(1, cb.N(xi, zeta)))
        res.shift = tuple(self.phi.root_to_weight(root).marks)
        self._ops[root] = res
        return res

    def h_value(self, mu: tuple, h: Sequence) -> Fraction:
        """``mu(h)`` for ``h`` in simple-coroot coordinates."""
        return sum((Fraction(c) * m for c, m in zip(h, mu) if c), Fraction(0))

    # -- dense views --------------------------------------------------------

    def matrix(self, root: Sequence) -> list[list[Fraction]]:
        op = self.op(root)
        out = linalg.zeros(self.dim, self.dim)
        for mu, b in op.blocks.items():
            tgt = _shift(mu, op.shift)
            if tgt not in self.offsets or mu not in self.offsets:
                continue
            r0, c0 = self.offsets[tgt], self.offsets[mu]
            for i, row in enumerate(b):
                for j, x in enumerate(row):
                    out[r0 + i][c0 + j] = x
        return out

    def h_matrix(self, h: Sequence) -> list[list[Fraction]]:
        out = linalg.zeros(self.dim, self.dim)
        for mu in self.order:
            v = self.h_value(mu, h)
            o = self.offsets[mu]
            for k in range(self.spaces[mu]):
                out[o + k][o + k] = v
        return out

    def to_dense_vector(self, graded: dict) -> list[Fraction]:
        out = [Fraction(0)] * self.dim
        for mu, vec in graded.items():
            o = self.offsets[mu]
            for k, x in enumerate(vec):
                out[o + k] = Fraction(x)
        return out

    def to_json(self) -> dict:
        """Debug dump: weights and action matrices as exact rational strings."""
        roots = [a for a in self.phi.roots if self.has_op(a)]
        return {
            "system": self.phi.name,
            "highest_weight": list(self.highest) if self.highest is not None else None,
            "dim": self.dim,
            "weights": [list(w.marks) for w in self.weights],
            "e": {
                json.dumps(list(a)): [[linalg.fmt(x) for x in row] for row in self.matrix(a)] for a in roots
            },
            "h": {
                str(i): [linalg.fmt(w.marks[i]) for w in self.weights] for i in range(self.phi.rank)
            },
        }


def _level(phi, highest, mu) -> int:
    """Depth of ``mu`` below ``highest`` (sum of simple-root coefficients)."""
    diff = [a - b for a, b in zip(highest, mu)]
    # marks -> simple-root coordinates via the inverse Cartan matrix
    inv = _inverse_cartan(phi)
    return sum(sum(Fraction(d) * inv[j][i] for j, d in enumerate(diff)) for i in range(phi.rank))


_INV_CACHE: dict = {}


def _inverse_cartan(phi):
    inv = _INV_CACHE.get(phi)
    if inv is None:
        inv = linalg.inverse(phi.cartan)
        _INV_CACHE[phi] = inv
    return inv


def build_simple_module(phi: RootSystem, cb: ChevalleyBasis | None, lam, cap: int | None = None) -> WeightModule:
    """The simple module ``V(lam)`` with exact actions of ``e_i``, ``f_i``.

    Weight spaces are built top-down.  Candidates at weight ``mu`` are
    ``f_i b`` for basis vectors ``b`` of ``mu + alpha_i``; a candidate is
    represented by its images under all ``e_j`` (computed by commuting ``e_j``
    past ``f_i``).  In the simple module these raising images determine a
    vector below the top, so a maximal family of candidates with independent
    images is a basis and every other candidate is expressed through it.
    """
    lam = lam if isinstance(lam, Weight) else Weight(lam)
    cb = cb or chevalley_constants(phi)
    cap = dimension_cap() if cap is None else cap
    d = weyl_dimension(phi, lam)
    if d > cap:
        raise ModuleError(f"dim V({list(lam.marks)}) = {d} exceeds the cap {cap}")
    n = phi.rank
    alphas = [tuple(phi.cartan[i]) for i in range(n)]
    top = lam.marks
    spaces = {top: 1}
    E = [GradedOp(alphas[i]) for i in range(n)]
    F = [GradedOp(neg(alphas[i])) for i in range(n)]
    level = [top]
    while level:
        cand_weights = sorted({_shift(mu, neg(alphas[i])) for mu in level for i in range(n)}, reverse=True)
        nxt = []
        for mu in cand_weights:
            up = [_shift(mu, alphas[j]) for j in range(n)]
            targets = [j for j in range(n) if up[j] in spaces]
            cands = [(i, b) for i in targets for b in range(spaces[up[i]])]
            images = []
            for i, b in cands:
                src = up[i]
                img = []
                for j in targets:
                    vec = [Fraction(0)] * spaces[up[j]]
                    ej = E[j].blocks.get(src)
                    if ej is not None:
                        mid = _shift(src, alphas[j])
                        fi = F[i].blocks.get(mid)
                        if fi is not None:
                            col = [row[b] for row in ej]
                            vec = linalg.matvec(fi, col)
                    if i == j:
                        vec[b] += src[i]
                    img.extend(vec)
                images.append(img)
            basis = linalg.EchelonBasis(len(images[0]) if images else 0)
            chosen = [k for k, img in enumerate(images) if basis.add(img)]
            m = len(chosen)
            if not m:
                continue
            spaces[mu] = m
            nxt.append(mu)
            # e_j on the new basis: the raising images themselves
            pos = 0
            for j in targets:
                dj = spaces[up[j]]
                E[j].blocks[mu] = [[images[k][pos + r] for k in chosen] for r in range(dj)]
                pos += dj
            # f_i from mu + alpha_i: coordinates of every candidate
            for i in targets:
                cols = []
                for b in range(spaces[up[i]]):
                    k = cands.index((i, b))
                    cols.append(basis.coords(images[k]))
                F[i].blocks[up[i]] = linalg.transpose(cols)
        level = nxt
    ops = {}
    for i in range(n):
        simple = tuple(int(j == i) for j in range(n))
        ops[simple] = E[i]
        ops[neg(simple)] = F[i]
    V = WeightModule(phi, spaces, ops, highest=top, cb=cb)
    if V.dim != d:
        raise AssertionError(f"constructed dim {V.dim} != Weyl dimension {d}")  # pragma: no cover
    return V


def direct_sum(*modules: WeightModule) -> WeightModule:
    """Direct sum of modules over the same root system (all root actions)."""
    phi = modules[0].phi
    spaces: dict = {}
    for M in modules:
        for mu, d in M.spaces.items():
            spaces[mu] = spaces.get(mu, 0) + d
    ops = {}
    for a in phi.roots:
        shift = tuple(phi.root_to_weight(a).marks)
        blocks = {}
        for mu in spaces:
            tgt = _shift(mu, shift)
            if tgt not in spaces:
                continue
            blk = linalg.zeros(spaces[tgt], spaces[mu])
            r0 = c0 = 0
            nonzero = False
            for M in modules:
                dm, dt = M.spaces.get(mu, 0), M.spaces.get(tgt, 0)
                b = M.op(a).blocks.get(mu) if dm and dt else None
                if b is not None:
                    nonzero = True
                    for i, row in enumerate(b):
                        for j, x in enumerate(row):
                            blk[r0 + i][c0 + j] = x
                r0 += dt
                c0 += dm
            if nonzero:
                blocks[mu] = blk
        ops[a] = GradedOp(shift, blocks)
    return WeightModule(phi, spaces, ops)


def action_of_root_vector(V: WeightModule, cb: ChevalleyBasis | None, alpha: Sequence) -> list[list[Fraction]]:
    """Dense matrix of ``e_alpha`` on ``V``."""
    return V.matrix(alpha)


# -- subspaces -----------------------------------------------------------------


class Submodule:
    """Weight-graded subspace; ``spaces[mu]`` is an rref basis of its ``mu`` part."""

    def __init__(self, ambient: WeightModule, spaces: dict):
        self.ambient = ambient
        self.spaces = {mu: rows for mu, rows in spaces.items() if rows}

    @property
    def dim(self) -> int:
        return sum(len(r) for r in self.spaces.values())

    @property
    def basis(self) -> list[list[Fraction]]:
        """Dense rows (reduced echelon form) spanning the subspace."""
        V = self.ambient
        out = []
        for mu in V.order:
            for row in self.spaces.get(mu, []):
                out.append(V.to_dense_vector({mu: row}))
        return out

    def contains(self, mu: tuple, vec: Sequence) -> bool:
        if not any(vec):
            return True
        rows = self.spaces.get(mu)
        if not rows:
            return False
        return linalg.rank(rows + [list(vec)]) == len(rows)

    def is_invariant(self, op: GradedOp) -> bool:
        for mu, rows in self.spaces.items():
            tgt = _shift(mu, op.shift)
            for row in rows:
                img = op(mu, row)
                if img is not None and not self.contains(tgt, img):
                    return False
        return True

    def intersection_dim(self, other: "Submodule") -> int:
        total = 0
        for mu, rows in self.spaces.items():
            o = other.spaces.get(mu)
            if o:
                total += len(rows) + len(o) - linalg.rank(rows + o)
        return total

    def sum_dim(self, other: "Submodule") -> int:
        return self.dim + other.dim - self.intersection_dim(other)

    def weights(self) -> list[Weight]:
        return [Weight(mu) for mu in self.ambient.order if mu in self.spaces for _ in self.spaces[mu]]


def span_closure(V: WeightModule, seeds: dict, ops: Iterable[GradedOp]) -> Submodule:
    """Smallest subspace containing ``seeds`` and stable under ``ops``."""
    ops = list(ops)
    spans: dict = {}
    todo = []
    for mu, vecs in seeds.items():
        for v in vecs:
            eb = spans.setdefault(mu, linalg.EchelonBasis(V.spaces[mu]))
            if eb.add(v):
                todo.append((mu, eb.vectors[-1]))
    while todo:
        mu, v = todo.pop()
        for op in ops:
            w = op(mu, v)
            if w is None:
                continue
            tgt = _shift(mu, op.shift)
            eb = spans.setdefault(tgt, linalg.EchelonBasis(V.spaces[tgt]))
            if eb.add(w):
                todo.append((tgt, eb.vectors[-1]))
    return Submodule(V, {mu: linalg.row_space(eb.vectors) for mu, eb in spans.items() if len(eb)})


# -- restriction to a regular subalgebra ------------------------------------------


@dataclass
class Restriction:
    """``V`` viewed as a module over ``s``: generators ``e_a`` (a in T) and ``t``."""

    module: WeightModule
    sub: RegularSubalgebra

    def root_ops(self) -> list[tuple[tuple, GradedOp]]:
        return [(a, self.module.op(a)) for a in self.sub.T.sorted_roots()]

    def dense_generators(self) -> tuple[list, list]:
        """``(root-vector matrices, t matrices)`` in dense form."""
        V = self.module
        return [V.matrix(a) for a in self.sub.T.sorted_roots()], [V.h_matrix(h) for h in self.sub.t_basis]


def restrict(V: WeightModule, s: RegularSubalgebra) -> Restriction:
    if V.phi != s.ambient:
        raise ModuleError("module and subalgebra live over different root systems")
    return Restriction(V, s)


def radical_image(V: WeightModule, s: RegularSubalgebra) -> Submodule:
    """``r . V`` for the radical ``r = s_{T^u, k_perp}``."""
    if not is_levi_decomposable(s):
        raise ModuleError("subalgebra is not Levi decomposable")
    spaces: dict = {}
    for beta in sorted(s.Tu):
        op = V.op(beta)
        for mu, b in op.blocks.items():
            tgt = _shift(mu, op.shift)
            spaces.setdefault(tgt, []).extend(linalg.transpose(b))
    for mu in V.order:
        if any(V.h_value(mu, h) for h in s.kperp_basis):
            d = V.spaces[mu]
            spaces[mu] = linalg.identity(d)
    W = Submodule(V, {mu: linalg.row_space(rows, V.spaces[mu]) for mu, rows in spaces.items()})
    for a in s.T.sorted_roots():
        assert W.is_invariant(V.op(a)), "radical image is not s-stable"
    return W


def cyclic_levi_submodule(V: WeightModule, s: RegularSubalgebra) -> Submodule:
    """Span of ``e_{-b1} ... e_{-bm} v_lam`` with ``-b_i`` in ``T^r`` negative."""
    if V.highest is None:
        raise ModuleError("module has no highest weight vector")
    lowering = [V.op(neg(b)) for b in s.levi_positive_roots]
    U = span_closure(V, {V.highest: [[Fraction(1)] + [Fraction(0)] * (V.spaces[V.highest] - 1)]}, lowering)
    assert singular_dimension_of(V, U, s.levi_positive_roots) == 1
    return U


def singular_dimension_of(V: WeightModule, U: Submodule, roots: Sequence) -> int:
    """Dimension of the vectors of ``U`` killed by all ``e_b``, ``b`` in ``roots``."""
    total = 0
    ops = [V.op(b) for b in roots]
    for mu, rows in U.spaces.items():
        cols = []
        for op in ops:
            blk = op.blocks.get(mu)
            if blk is not None:
                cols.append(linalg.matmul(blk, linalg.transpose(rows)))
        stacked = [r for c in cols for r in c]
        total += len(rows) - (linalg.rank(stacked) if stacked else 0)
    return total


# -- quotients and Levi structure ---------------------------------------------------


def quotient_module(V: WeightModule, W: Submodule, s: RegularSubalgebra, *, check: bool = True) -> WeightModule:
    """``V / W`` as a module over the Levi factor ``s_{T^r, k}``.

    A zero quotient is reported as the trivial module ``V(0)``.  ``check``
    verifies that ``W`` is ``s``-stable (skip it for a known radical image).
    """
    if check:
        for a in s.T.sorted_roots():
            if not W.is_invariant(V.op(a)):
                raise ModuleError(f"subspace is not invariant under e_{list(a)}")
    comp: dict = {}
    for mu in V.order:
        rows = W.spaces.get(mu, [])
        piv = {next(j for j, x in enumerate(r) if x) for r in rows}
        free = [j for j in range(V.spaces[mu]) if j not in piv]
        if free:
            comp[mu] = (free, rows)
    levi = list(s.levi_positive_roots)
    if not comp:
        zero = tuple(0 for _ in range(V.phi.rank))
        Q = WeightModule(V.phi, {zero: 1}, {b: GradedOp(V.phi.root_to_weight(b).marks) for b in levi + [neg(b) for b in levi]})
        Q.degenerate = True
        Q.levi_roots = levi
        return Q
    ops = {}
    for b in levi + [neg(b) for b in levi]:
        op = V.op(b)
        blocks = {}
        for mu, (free, _) in comp.items():
            blk = op.blocks.get(mu)
            tgt = _shift(mu, op.shift)
            if blk is None or tgt not in comp:
                continue
            tfree, trows = comp[tgt]
            tpiv = [next(j for j, x in enumerate(r) if x) for r in trows]
            cols = []
            for c in free:
                x = [row[c] for row in blk]
                for r, p in zip(trows, tpiv):
                    f = x[p]
                    if f:
                        x = [u - f * v for u, v in zip(x, r)]
                cols.append([x[j] for j in tfree])
            mat = linalg.transpose(cols)
            if any(any(r) for r in mat):
                blocks[mu] = mat
        ops[b] = GradedOp(op.shift, blocks)
    Q = WeightModule(V.phi, {mu: len(f) for mu, (f, _) in comp.items()}, ops)
    Q.levi_roots = levi
    return Q


def singular_dimension(M: WeightModule, roots: Sequence | None = None) -> int:
    """Dimension of the joint kernel of ``e_b`` over the Levi positive roots.

    For a completely reducible Levi module this counts its simple summands.
    """
    if roots is None:
        roots = getattr(M, "levi_roots", None)
        if roots is None:
            raise ModuleError("Levi roots unknown for this module")
    U = Submodule(M, {mu: linalg.identity(d) for mu, d in M.spaces.items()})
    return singular_dimension_of(M, U, roots)


def is_simple_over_levi(M: WeightModule, roots: Sequence | None = None) -> bool:
    return singular_dimension(M, roots) == 1


# -- endomorphism algebras ---------------------------------------------------------


class EndomorphismAlgebra:
    """Commutant of a restricted module, stored as sparse coordinate vectors.

    Coordinates live in an ambient matrix algebra described by ``partner``
    and ``weight``: ``tr(XY) = sum_u X[u] * weight[u] * Y[partner[u]]``.
    Diagonal coordinates are those with ``partner[u] == u``.
    """

    def __init__(self, basis: list, partner: list, weight: list, module_dim: int, method: str, materialize):
        self.basis = basis
        self.partner = partner
        self.weight = weight
        self.module_dim = module_dim
        self.method = method
        self._materialize = materialize

    def __repr__(self):
        return f"EndomorphismAlgebra(dim={self.dim}, method={self.method!r})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def trace(self, X: dict) -> Fraction:
        return sum((x * self.weight[u] for u, x in X.items() if self.partner[u] == u), Fraction(0))

    def trace_pairing(self, X: dict, Y: dict) -> Fraction:
        """``tr(XY)`` on the module."""
        p, w = self.partner, self.weight
        return sum((x * w[u] * Y[p[u]] for u, x in X.items() if p[u] in Y), Fraction(0))

    @cached_property
    def radical_dim(self) -> int:
        """Dimension of the trace-form radical (the Jacobson radical)."""
        gram = [[self.trace_pairing(X, Y) for Y in self.basis] for X in self.basis]
        return self.dim - (linalg.rank(gram) if gram else 0)

    @property
    def semisimple_dim(self) -> int:
        return self.dim - self.radical_dim

    def is_local(self) -> bool:
        """``End / rad = scalars``, tested as ``tr(XY) dim V = tr(X) tr(Y)``.

        That identity says the trace form has rank one; it is checked pair by
        pair and stops at the first failure.
        """
        if self.dim == 0 or self.module_dim == 0:
            return False
        if self.dim == 1:
            return True
        n = self.module_dim
        tr = [self.trace(X) for X in self.basis]
        for k, X in enumerate(self.basis):
            for l in range(k, self.dim):
                if self.trace_pairing(X, self.basis[l]) * n != tr[k] * tr[l]:
                    return False
        return True

    def matrices(self) -> list[list[list[Fraction]]]:
        """Explicit basis of commuting matrices (dense)."""
        return self._materialize(self.basis)


def _solve_commutant(equations: Iterable[dict], nunknowns: int) -> list[dict]:
    """Null space of a homogeneous system that is known to contain the identity.

    Elimination stops as soon as the rank leaves a one-dimensional solution
    space, which then must be the scalars.
    """
    ech = linalg.SparseEchelon(nunknowns)
    seen = set()
    for eq in equations:
        key = tuple(sorted((u, x) for u, x in eq.items() if x))
        if not key or key in seen:
            continue
        seen.add(key)
        ech.add(eq)
        if ech.rank >= nunknowns - 1:
            break
    return ech.nullspace()


def commutant(mats: Sequence, diagonals: Sequence = (), dim: int | None = None) -> list[list[list[Fraction]]]:
    """Basis of ``{X : XA = AX}`` via the stacked Sylvester null space.

    Diagonal matrices are handled analytically: ``X`` may only connect basis
    vectors with equal eigenvalues under each of them.
    """
    return _sylvester(mats, diagonals, dim).matrices()


def _sylvester(mats: Sequence, diagonals: Sequence = (), dim: int | None = None) -> EndomorphismAlgebra:
    if dim is None:
        dim = len(mats[0]) if mats else len(diagonals[0])
    labels = [tuple(D[i][i] for D in diagonals) for i in range(dim)]
    unknowns = [(r, c) for r in range(dim) for c in range(dim) if labels[r] == labels[c]]
    uidx = {u: k for k, u in enumerate(unknowns)}

    def equations():
        for A in mats:
            nzcols = [[(k, A[k][c]) for k in range(dim) if A[k][c]] for c in range(dim)]
            nzrows = [[(k, x) for k, x in enumerate(A[r]) if x] for r in range(dim)]
            for r in range(dim):
                for c in range(dim):
                    eq: dict = {}
                    for k, x in nzcols[c]:
                        u = uidx.get((r, k))
                        if u is not None:
                            eq[u] = eq.get(u, 0) + x
                    for k, x in nzrows[r]:
                        u = uidx.get((k, c))
                        if u is not None:
                            eq[u] = eq.get(u, 0) - x
                    yield eq

    basis = _solve_commutant(equations(), len(unknowns))
    partner = [uidx[(c, r)] for r, c in unknowns]

    def materialize(vecs):
        out = []
        for vec in vecs:
            X = linalg.zeros(dim, dim)
            for u, x in vec.items():
                r, c = unknowns[u]
                X[r][c] = x
            out.append(X)
        return out

    return EndomorphismAlgebra(basis, partner, [1] * len(unknowns), dim, "sylvester", materialize)


def _generic_endomorphisms(R: Restriction) -> EndomorphismAlgebra:
    roots, tmats = R.dense_generators()
    return _sylvester(roots, tmats, R.module.dim)


class LeviData:
    """Decomposition of ``V`` over the Levi factor ``s_{T^r, k}``.

    Singular vectors are grouped by their ``k`` weight; each group spans a
    multiplicity space for one simple Levi module.  Every group carries a
    lowering tree whose node vectors form a basis of the simple module
    generated by each singular vector, and the union over all groups is a
    weight-graded basis of ``V``.
    """

    def __init__(self, V: WeightModule, levi_roots: Sequence, k_basis: Sequence):
        self.V = V
        pos = [tuple(b) for b in levi_roots]
        raise_ops = [V.op(b) for b in pos]
        lower_ops = [(neg(b), V.op(neg(b))) for b in pos]
        groups: dict = {}
        for mu in V.order:
            d = V.spaces[mu]
            blocks = [op.blocks[mu] for op in raise_ops if mu in op.blocks]
            stacked = [r for b in blocks for r in b]
            kernel = linalg.nullspace(stacked, d) if stacked else linalg.identity(d)
            nu = tuple(V.h_value(mu, h) for h in k_basis)
            for v in kernel:
                groups.setdefault(nu, []).append((mu, v))
        self.groups = groups
        self.nus = sorted(groups, key=lambda nu: tuple(-x for x in nu))
        self.trees: dict = {}
        columns = {}  # weight -> list of (key, vector)
        for nu in self.nus:
            members = groups[nu]
            mu0, v0 = members[0]
            tree = [(-1, None, mu0)]
            vecs0 = [v0]
            spans = {mu0: linalg.EchelonBasis(V.spaces[mu0])}
            spans[mu0].add(v0)
            k = 0
            while k < len(tree):
                _, _, mu = tree[k]
                for r, op in lower_ops:
                    w = op(mu, vecs0[k])
                    if w is None:
                        continue
                    tgt = _shift(mu, op.shift)
                    eb = spans.setdefault(tgt, linalg.EchelonBasis(V.spaces[tgt]))
                    if eb.add(w):
                        tree.append((k, r, tgt))
                        vecs0.append(w)
                k += 1
            self.trees[nu] = tree
            for j, (mu_j, v_j) in enumerate(members):
                vecs = [v_j]
                weights = [mu_j]
                for node, (parent, r, _) in enumerate(tree):
                    if node == 0:
                        continue
                    op = V.op(r)
                    w = op(weights[parent], vecs[parent])
                    tgt = _shift(weights[parent], op.shift)
                    vecs.append(w if w is not None else [Fraction(0)] * V.spaces[tgt])
                    weights.append(tgt)
                for node, (w, mu) in enumerate(zip(vecs, weights)):
                    columns.setdefault(mu, []).append(((nu, j, node), w))
        self.keys: dict = {}
        self.inv: dict = {}
        for mu, cols in columns.items():
            if len(cols) != V.spaces[mu]:
                raise AssertionError("Levi basis has the wrong size")  # pragma: no cover
            self.keys[mu] = [key for key, _ in cols]
            self.inv[mu] = linalg.inverse(linalg.transpose([w for _, w in cols]))

    def multiplicity(self, nu) -> int:
        return len(self.groups[nu])

    def module_dim(self, nu) -> int:
        return len(self.trees[nu])

    def summands(self) -> list[int]:
        """Dimensions of the simple Levi summands, largest first."""
        return sorted((self.module_dim(nu) for nu in self.nus for _ in self.groups[nu]), reverse=True)

    def coords(self, mu: tuple, vec: Sequence) -> dict:
        """Coordinates of a ``mu`` weight vector over the Levi basis."""
        c = linalg.matvec(self.inv[mu], vec)
        return {key: x for key, x in zip(self.keys[mu], c) if x}


def levi_data(V: WeightModule, s: RegularSubalgebra) -> LeviData:
    key = ("levi", tuple(s.levi_positive_roots), tuple(tuple(h) for h in s.k_basis))
    got = V._cache.get(key)
    if got is None:
        got = LeviData(V, s.levi_positive_roots, s.k_basis)
        V._cache[key] = got
    return got


def levi_decomposition(V: WeightModule, s: RegularSubalgebra) -> list[int]:
    """Dimensions of the simple summands of ``V`` restricted to the Levi factor."""
    return levi_data(V, s).summands()


def _levi_endomorphisms(R: Restriction) -> EndomorphismAlgebra:
    """Commutant computed inside ``End_Levi(V) = prod_nu Mat(m_nu)``.

    ``X`` is fixed by matrices ``A_nu`` acting on singular vectors.  Since the
    radical is an ideal, ``X`` commutes with it as soon as it does so on the
    singular vectors, which gives a small linear system in the ``A_nu``.
    """
    V, s = R.module, R.sub
    L = levi_data(V, s)
    unknowns = {}
    for nu in L.nus:
        m = L.multiplicity(nu)
        for i in range(m):
            for j in range(m):
                unknowns[(nu, i, j)] = len(unknowns)
    radical = [V.op(b) for b in sorted(s.Tu)]

    def images(nu):
        """For each radical generator, coordinates of x.s_{nu,j} for all j."""
        out = []
        for op in radical:
            row = []
            for mu, v in L.groups[nu]:
                w = op(mu, v)
                row.append(L.coords(_shift(mu, op.shift), w) if w is not None else {})
            out.append(row)
        for h in s.kperp_basis:
            row = []
            for j, (mu, v) in enumerate(L.groups[nu]):
                c = V.h_value(mu, h)
                row.append({(nu, j, 0): c} if c else {})
            out.append(row)
        return out

    def equations():
        for nu in L.nus:
            m = L.multiplicity(nu)
            for per_j in images(nu):
                for j in range(m):
                    eq: dict = {}
                    for (nu2, j2, node), c in per_j[j].items():
                        for i2 in range(L.multiplicity(nu2)):
                            d = eq.setdefault((nu2, i2, node), {})
                            u = unknowns[(nu2, i2, j2)]
                            d[u] = d.get(u, 0) + c
                    for i in range(m):
                        u = unknowns[(nu, i, j)]
                        for key, c in per_j[i].items():
                            d = eq.setdefault(key, {})
                            d[u] = d.get(u, 0) - c
                    yield from eq.values()

    basis = _solve_commutant(equations(), len(unknowns))
    partner = [unknowns[(nu, j, i)] for nu, i, j in unknowns]
    weight = [L.module_dim(nu) for nu, _, _ in unknowns]

    def materialize(vecs):
        # P: Levi basis -> standard basis (block diagonal by weight)
        keys = [key for mu in V.order for key in L.keys[mu]]
        pos = {key: n for n, key in enumerate(keys)}
        P = linalg.zeros(V.dim, V.dim)
        Pinv = linalg.zeros(V.dim, V.dim)
        for mu in V.order:
            o, d = V.offsets[mu], V.spaces[mu]
            blk = linalg.inverse(L.inv[mu])
            for r in range(d):
                P[o + r][o:o + d] = blk[r]
                Pinv[o + r][o:o + d] = L.inv[mu][r]
        out = []
        for vec in vecs:
            M = linalg.zeros(V.dim, V.dim)
            for (nu, j, node), col in pos.items():
                for i in range(L.multiplicity(nu)):
                    a = vec.get(unknowns[(nu, i, j)])
                    if a:
                        M[pos[(nu, i, node)]][col] = a
            out.append(linalg.matmul(linalg.matmul(P, M), Pinv))
        return out

    return EndomorphismAlgebra(basis, partner, weight, V.dim, "levi", materialize)


def endomorphism_algebra(R: Restriction, method: str | None = None) -> EndomorphismAlgebra:
    """``End_s(V)`` with its trace form.

    ``method`` is ``"levi"`` (default when ``T^r`` is nonempty) or
    ``"sylvester"`` (plain commutant of all generator matrices).
    """
    if method is None:
        method = "levi" if R.sub.Tr else "sylvester"
    if method == "levi":
        return _levi_endomorphisms(R)
    if method == "sylvester":
        return _generic_endomorphisms(R)
    raise ValueError(f"unknown method {method!r}")


def is_indecomposable(R: Restriction, method: str | None = None) -> bool:
    """True iff ``End_s(V)`` modulo its radical is one-dimensional."""
    return endomorphism_algebra(R, method).is_local()


def is_cyclic_indecomposable(V: WeightModule, s: RegularSubalgebra) -> bool:
    if not is_levi_decomposable(s):
        raise ModuleError("subalgebra is not Levi decomposable")
    if not is_indecomposable(restrict(V, s)):
        return False
    return is_simple_over_levi(quotient_module(V, radical_image(V, s), s))
