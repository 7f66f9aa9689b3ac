"""Finite polygraph presentations and their linearization.

A presentation lists generators dimension by dimension; every generator of
positive dimension carries a source and a target expression one dimension
below.  Expressions are freely built from generators, identities and binary
compositions.  Well-typedness of the boundary expressions is checked when a
presentation is constructed, by evaluating them to cell tables over the
linearized complex; that check is sound for the class of presentations this
package cares about and is what makes later classification trustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from . import nu
from .adc import (
    Adc,
    Chain,
    RelationGraph,
    loop_free_report,
    validate_adc,
)
from .zlin import IntVector


class InconsistentClassification(Exception):
    """The classification verdicts violate a proven implication."""

    code = "INCONSISTENT"


# ---------------------------------------------------------------------------
# cell expressions

class CellExpr:
    """Base class for the expression language; see Gen, Id and Comp."""

    __slots__ = ()


@dataclass(frozen=True)
class Gen(CellExpr):
    name: str


@dataclass(frozen=True)
class Id(CellExpr):
    inner: CellExpr


@dataclass(frozen=True)
class Comp(CellExpr):
    """Composition of two equal-dimensional cells along a shared p-face."""

    level: int
    left: CellExpr
    right: CellExpr


class PolyPresentation:
    """A finite polygraph presentation.

    ``generators[q]`` lists the dimension-q generator names in declaration
    order; ``boundary`` maps each generator of dimension >= 1 to its
    (source, target) pair of expressions of the dimension below.
    """

    def __init__(self, generators: Sequence[Sequence[str]],
                 boundary: Mapping[str, tuple]):
        levels = [tuple(level) for level in generators]
        while levels and not levels[-1]:
            levels.pop()
        self.generators = tuple(levels)
        dim = {}
        for q, level in enumerate(self.generators):
            for name in level:
                if not isinstance(name, str) or not name:
                    raise ValueError("generator names must be non-empty strings")
                if name in dim:
                    raise ValueError("duplicate generator name %r" % name)
                dim[name] = q
        self._dim = dim

        bnd = {}
        for name, pair in boundary.items():
            if name not in dim:
                raise ValueError("boundary given for unknown generator %r" % name)
            if dim[name] == 0:
                raise ValueError("dimension-0 generator %r cannot have a boundary" % name)
            try:
                src, tgt = pair
            except (TypeError, ValueError):
                raise ValueError("boundary of %r must be a (source, target) pair" % name)
            bnd[name] = (src, tgt)
        for q in range(1, len(self.generators)):
            for name in self.generators[q]:
                if name not in bnd:
                    raise ValueError("missing boundary for generator %r" % name)
        self._boundary = bnd

        for q in range(1, len(self.generators)):
            for name in self.generators[q]:
                src, tgt = bnd[name]
                for side, expr in (("source", src), ("target", tgt)):
                    d = expr_dim(self, expr)
                    if d != q - 1:
                        raise ValueError(
                            "%s of %r has dimension %d, expected %d"
                            % (side, name, d, q - 1)
                        )

        self._lambda = None
        self._table_cache = {}
        self._check_boundaries()

    # -- accessors ------------------------------------------------------

    @property
    def max_dim(self) -> int:
        return len(self.generators) - 1

    def dims(self, q: int) -> tuple:
        if 0 <= q < len(self.generators):
            return self.generators[q]
        return ()

    def all_generators(self):
        for level in self.generators:
            for name in level:
                yield name

    def dim_of(self, name: str) -> int:
        try:
            return self._dim[name]
        except KeyError:
            raise ValueError("unknown generator %r" % name) from None

    def boundary_of(self, name: str) -> tuple:
        if self.dim_of(name) == 0:
            raise ValueError("dimension-0 generator %r has no boundary" % name)
        return self._boundary[name]

    def src(self, name: str) -> CellExpr:
        return self.boundary_of(name)[0]

    def tgt(self, name: str) -> CellExpr:
        return self.boundary_of(name)[1]

    # -- construction-time checking --------------------------------------

    def _check_boundaries(self):
        """Evaluate every generator boundary to a table and check it.

        Runs bottom-up in the dimension, so a failure is reported for the
        lowest generator responsible.  Checks validity of both tables,
        parallelism of source and target, and finally the chain complex
        laws of the linearization.
        """
        lam = lambda_presentation(self)
        for q in range(1, len(self.generators)):
            for name in self.generators[q]:
                src, tgt = self._boundary[name]
                try:
                    ts = eval_table(self, src)
                    tt = eval_table(self, tgt)
                except nu.NotComposable as exc:
                    raise ValueError(
                        "boundary of %r is not composable: %s" % (name, exc)
                    ) from exc
                for side, table in (("source", ts), ("target", tt)):
                    ok, cond = nu.is_valid_table(lam, table)
                    if not ok:
                        raise ValueError(
                            "%s of %r violates cell condition %d" % (side, name, cond)
                        )
                if q >= 2 and ts.rows[:-1] != tt.rows[:-1]:
                    raise ValueError(
                        "source and target of %r are not parallel" % name
                    )
        check = validate_adc(lam)
        if not check.ok:
            law, gen, detail = check.failures[0]
            raise ValueError(
                "linearization fails %s at %r (%s)" % (law, gen, detail)
            )

    def __repr__(self):
        return "PolyPresentation(%s)" % ", ".join(
            "%d:%d" % (q, len(level)) for q, level in enumerate(self.generators)
        )


# ---------------------------------------------------------------------------
# expression-level operations

def expr_dim(pres: PolyPresentation, expr: CellExpr) -> int:
    if isinstance(expr, Gen):
        return pres.dim_of(expr.name)
    if isinstance(expr, Id):
        return expr_dim(pres, expr.inner) + 1
    if isinstance(expr, Comp):
        dl = expr_dim(pres, expr.left)
        dr = expr_dim(pres, expr.right)
        if dl != dr:
            raise ValueError(
                "composition of cells of different dimensions %d and %d" % (dl, dr)
            )
        if not 0 <= expr.level < dl:
            raise ValueError(
                "DIM: level-%d composition of %d-cells" % (expr.level, dl)
            )
        return dl
    raise TypeError("not a cell expression: %r" % (expr,))


def face_expr(pres: PolyPresentation, expr: CellExpr, p: int, sign: int) -> CellExpr:
    """The p-dimensional source (sign -1) or target (sign +1) of an expression."""
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    q = expr_dim(pres, expr)
    if not 0 <= p < q:
        raise ValueError("DIM: face level %d out of range for a %d-cell" % (p, q))
    if isinstance(expr, Gen):
        side = pres.src(expr.name) if sign < 0 else pres.tgt(expr.name)
        if p == q - 1:
            return side
        return face_expr(pres, side, p, sign)
    if isinstance(expr, Id):
        if p == q - 1:
            return expr.inner
        return face_expr(pres, expr.inner, p, sign)
    # Comp
    if p <= expr.level:
        side = expr.left if sign < 0 else expr.right
        return face_expr(pres, side, p, sign)
    return Comp(expr.level,
                face_expr(pres, expr.left, p, sign),
                face_expr(pres, expr.right, p, sign))


def linearize(pres: PolyPresentation, expr: CellExpr) -> Chain:
    """The class of an expression in the linearized complex.

    Generators map to basis vectors, identities to zero, compositions to
    sums.
    """
    q = expr_dim(pres, expr)

    def lin(e):
        if isinstance(e, Gen):
            return IntVector.unit(e.name)
        if isinstance(e, Id):
            return IntVector()
        return lin(e.left) + lin(e.right)

    return Chain(q, lin(expr))


def support_expr(pres: PolyPresentation, expr: CellExpr) -> frozenset:
    return linearize(pres, expr).support()


def lambda_presentation(pres: PolyPresentation) -> Adc:
    """The linearization: one basis element per generator, differential
    target-minus-source, augmentation 1 on every dimension-0 generator."""
    if pres._lambda is not None:
        return pres._lambda
    diff = {}
    for q in range(1, len(pres.generators)):
        for name in pres.generators[q]:
            src, tgt = pres.boundary_of(name)
            diff[name] = linearize(pres, tgt).vector - linearize(pres, src).vector
    aug = {name: 1 for name in (pres.generators[0] if pres.generators else ())}
    lam = Adc(pres.generators, diff, aug)
    pres._lambda = lam
    return lam


def eval_table(pres: PolyPresentation, expr: CellExpr) -> nu.NuTable:
    """Evaluate an expression to a cell table over the linearization.

    A generator's rows come from its declared boundary expressions, not
    from the differential: the two agree unless the differential cancels
    (as it does for endo cells), and the declared boundaries are the ones
    the adjunction unit uses.
    """
    lambda_presentation(pres)
    if isinstance(expr, Gen):
        table = pres._table_cache.get(expr.name)
        if table is None:
            q = pres.dim_of(expr.name)
            rows = []
            for p in range(q):
                rows.append((
                    linearize(pres, face_expr(pres, expr, p, -1)).vector,
                    linearize(pres, face_expr(pres, expr, p, +1)).vector,
                ))
            top = IntVector.unit(expr.name)
            rows.append((top, top))
            table = nu.NuTable(rows=tuple(rows))
            pres._table_cache[expr.name] = table
        return table
    if isinstance(expr, Id):
        return nu.identity(eval_table(pres, expr.inner))
    if isinstance(expr, Comp):
        left = eval_table(pres, expr.left)
        right = eval_table(pres, expr.right)
        return nu.compose(left, right, expr.level)
    raise TypeError("not a cell expression: %r" % (expr,))


# ---------------------------------------------------------------------------
# atomicity

@dataclass(frozen=True)
class AtomicityReport:
    ok: bool
    witness: tuple | None  # (generator, level, common support)


def is_atomic(pres: PolyPresentation) -> AtomicityReport:
    """Sources and targets of every generator have disjoint supports in
    every dimension strictly below the generator."""
    for name in pres.all_generators():
        q = pres.dim_of(name)
        for p in range(q):
            common = (support_expr(pres, face_expr(pres, Gen(name), p, -1))
                      & support_expr(pres, face_expr(pres, Gen(name), p, +1)))
            if common:
                return AtomicityReport(ok=False, witness=(name, p, frozenset(common)))
    return AtomicityReport(ok=True, witness=None)


# ---------------------------------------------------------------------------
# the two categorical preorders

@dataclass(frozen=True)
class PreorderReport:
    codim1: RelationGraph
    full: RelationGraph
    codim1_antisymmetric: bool
    codim1_cycle: tuple | None
    full_antisymmetric: bool
    full_cycle: tuple | None


def preorder_report(pres: PolyPresentation) -> PreorderReport:
    """Generating graphs of the two support preorders on the generators.

    The codimension-1 graph relates a generator to the supports of its
    immediate source and target; the full graph does the same for faces of
    every lower dimension.
    """
    nodes = tuple(pres.all_generators())
    codim1 = set()
    full = set()
    for name in nodes:
        q = pres.dim_of(name)
        for p in range(q):
            src_supp = support_expr(pres, face_expr(pres, Gen(name), p, -1))
            tgt_supp = support_expr(pres, face_expr(pres, Gen(name), p, +1))
            for a in src_supp:
                full.add((a, name))
            for b in tgt_supp:
                full.add((name, b))
            if p == q - 1:
                codim1.update((a, name) for a in src_supp)
                codim1.update((name, b) for b in tgt_supp)
    g_codim1 = RelationGraph(nodes=nodes, edges=frozenset(codim1))
    g_full = RelationGraph(nodes=nodes, edges=frozenset(full))
    ok1, cyc1 = g_codim1.antisymmetry()
    okf, cycf = g_full.antisymmetry()
    return PreorderReport(
        codim1=g_codim1,
        full=g_full,
        codim1_antisymmetric=ok1,
        codim1_cycle=cyc1,
        full_antisymmetric=okf,
        full_cycle=cycf,
    )


def is_algebraically_loop_free(pres: PolyPresentation) -> bool:
    """Antisymmetry of the generating relation on the linearization."""
    return loop_free_report(lambda_presentation(pres)).is_partial_order


# ---------------------------------------------------------------------------
# orderability in the sense of Steiner

@dataclass(frozen=True)
class OrderabilityReport:
    ok: bool
    order: tuple | None  # witness linear order on all generators
    cycle: tuple | None  # constraint cycle; length 1 means a self-constraint


def is_steiner_orderable(pres: PolyPresentation) -> OrderabilityReport:
    """Look for a linear order putting every face-source strictly below
    every face-target, at all levels below each generator."""
    nodes = tuple(pres.all_generators())
    position = {name: i for i, name in enumerate(nodes)}
    succ = {name: set() for name in nodes}
    for name in nodes:
        q = pres.dim_of(name)
        for p in range(q):
            src_supp = support_expr(pres, face_expr(pres, Gen(name), p, -1))
            tgt_supp = support_expr(pres, face_expr(pres, Gen(name), p, +1))
            for a in src_supp:
                for b in tgt_supp:
                    succ[a].add(b)
    for name in nodes:
        if name in succ[name]:
            return OrderabilityReport(ok=False, order=None, cycle=(name,))

    indeg = {name: 0 for name in nodes}
    for a in nodes:
        for b in succ[a]:
            indeg[b] += 1
    ready = {name for name in nodes if indeg[name] == 0}
    order = []
    while ready:
        name = min(ready, key=position.__getitem__)
        ready.discard(name)
        order.append(name)
        for b in succ[name]:
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.add(b)
    if len(order) == len(nodes):
        return OrderabilityReport(ok=True, order=tuple(order), cycle=None)

    # every stuck node keeps a predecessor among the stuck nodes, so walking
    # backwards must close a cycle
    member = {name for name in nodes if indeg[name] > 0}
    preds = {name: [] for name in member}
    for a in member:
        for b in succ[a]:
            if b in member:
                preds[b].append(a)
    start = min(member, key=position.__getitem__)
    seen = {}
    node = start
    path = []
    while node not in seen:
        seen[node] = len(path)
        path.append(node)
        node = min(preds[node], key=position.__getitem__)
    cycle = tuple(reversed(path[seen[node]:]))
    return OrderabilityReport(ok=False, order=None, cycle=cycle)


# ---------------------------------------------------------------------------
# classification

@dataclass(frozen=True)
class Verdict:
    """Everything the classifiers can say about one presentation."""

    atomic: bool
    atomic_witness: tuple | None
    codim1_antisymmetric: bool
    codim1_cycle: tuple | None
    full_antisymmetric: bool
    full_cycle: tuple | None
    strongly_loop_free_algebraic: bool
    algebraic_cycle: tuple | None
    steiner_orderable: bool
    steiner_order: tuple | None
    steiner_cycle: tuple | None

    @property
    def strongly_loop_free_categorical(self) -> bool:
        return self.full_antisymmetric

    @property
    def strong_steiner(self) -> bool:
        return self.full_antisymmetric

    def as_dict(self) -> dict:
        return {
            "atomic": self.atomic,
            "atomic_witness": (
                None if self.atomic_witness is None else
                [self.atomic_witness[0], self.atomic_witness[1],
                 sorted(self.atomic_witness[2])]
            ),
            "codim1_antisymmetric": self.codim1_antisymmetric,
            "codim1_cycle": _maybe_list(self.codim1_cycle),
            "full_antisymmetric": self.full_antisymmetric,
            "full_cycle": _maybe_list(self.full_cycle),
            "strongly_loop_free_categorical": self.strongly_loop_free_categorical,
            "strongly_loop_free_algebraic": self.strongly_loop_free_algebraic,
            "algebraic_cycle": _maybe_list(self.algebraic_cycle),
            "steiner_orderable": self.steiner_orderable,
            "steiner_order": _maybe_list(self.steiner_order),
            "steiner_cycle": _maybe_list(self.steiner_cycle),
            "strong_steiner": self.strong_steiner,
        }


def _maybe_list(value):
    return None if value is None else list(value)


def classify(pres: PolyPresentation) -> Verdict:
    """Run every classifier and cross-check the implications between them.

    The implications (categorical loop-freeness forces atomicity and
    algebraic loop-freeness; atomic plus algebraic forces categorical) are
    theorems, so a violation means an implementation bug and raises
    :class:`InconsistentClassification`.
    """
    atom = is_atomic(pres)
    pre = preorder_report(pres)
    alg = loop_free_report(lambda_presentation(pres))
    order = is_steiner_orderable(pres)
    verdict = Verdict(
        atomic=atom.ok,
        atomic_witness=atom.witness,
        codim1_antisymmetric=pre.codim1_antisymmetric,
        codim1_cycle=pre.codim1_cycle,
        full_antisymmetric=pre.full_antisymmetric,
        full_cycle=pre.full_cycle,
        strongly_loop_free_algebraic=alg.is_partial_order,
        algebraic_cycle=alg.cycle,
        steiner_orderable=order.ok,
        steiner_order=order.order,
        steiner_cycle=order.cycle,
    )
    if verdict.strongly_loop_free_categorical:
        if not verdict.atomic:
            raise InconsistentClassification(
                "categorically loop-free but not atomic: %r" % (verdict.atomic_witness,)
            )
        if not verdict.strongly_loop_free_algebraic:
            raise InconsistentClassification(
                "categorically but not algebraically loop-free: %r"
                % (verdict.algebraic_cycle,)
            )
    if verdict.atomic and verdict.strongly_loop_free_algebraic:
        if not verdict.strongly_loop_free_categorical:
            raise InconsistentClassification(
                "atomic and algebraically loop-free but not categorically: %r"
                % (verdict.full_cycle,)
            )
    return verdict
