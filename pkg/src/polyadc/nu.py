"""Cells over an augmented directed complex, presented as tables.

A q-cell over a complex C is a table of chain pairs (x-_p, x+_p) for p from
0 to q satisfying the four conditions checked by :func:`is_valid_table`:
positivity, the boundary condition, augmentation 1 in degree 0, and equal
top rows.  Faces, identities and binary composition are simple row surgery
on such tables, which is what makes this representation attractive to
compute with.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .adc import Adc, atom_table
from .zlin import IntVector


class NotComposable(Exception):
    """The two tables do not share the required face."""

    code = "NOT_COMPOSABLE"


class EnumerationCapExceeded(Exception):
    """Cell enumeration hit the cell-count or coefficient cap."""

    code = "ENUM_CAP"


@dataclass(frozen=True)
class NuTable:
    """An immutable source/target table; ``rows[p]`` is (negative, positive)."""

    rows: tuple

    @property
    def dim(self) -> int:
        return len(self.rows) - 1

    def row(self, p: int):
        return self.rows[p]

    def is_trivial(self) -> bool:
        """True for identity tables: positive dimension with zero top row."""
        if self.dim == 0:
            return False
        neg, pos = self.rows[-1]
        return neg.is_zero() and pos.is_zero()

    def max_coeff(self) -> int:
        best = 0
        for neg, pos in self.rows:
            for _, c in neg.items():
                best = max(best, abs(c))
            for _, c in pos.items():
                best = max(best, abs(c))
        return best

    def key(self):
        """A canonical sorting key; total on tables of equal dimension."""
        return tuple((neg.items(), pos.items()) for neg, pos in self.rows)

    def __repr__(self):
        return "NuTable(dim=%d, top=%r)" % (self.dim, self.rows[-1][1])


def atom_to_table(complex_: Adc, name: str) -> NuTable:
    return NuTable(rows=atom_table(complex_, name).rows)


def is_valid_table(complex_: Adc, table: NuTable):
    """Check the four cell conditions; returns (ok, violated condition index).

    Conditions, in the order they are checked:
      1. every entry lies in the positivity cone of its degree;
      2. boundaries of the rows match the row below;
      3. both degree-0 entries have augmentation 1;
      4. the two top entries coincide.
    """
    q = table.dim
    for p in range(q + 1):
        gens = set(complex_.generators(p))
        for vec in table.rows[p]:
            if not vec.is_nonnegative() or (vec.support() - gens):
                return False, 1
    for p in range(1, q + 1):
        below_neg, below_pos = table.rows[p - 1]
        want = below_pos - below_neg
        for vec in table.rows[p]:
            if complex_.boundary_vec(p, vec) != want:
                return False, 2
    neg0, pos0 = table.rows[0]
    if complex_.eps(neg0) != 1 or complex_.eps(pos0) != 1:
        return False, 3
    top_neg, top_pos = table.rows[q]
    if top_neg != top_pos:
        return False, 4
    return True, None


def face(table: NuTable, p: int, sign: int) -> NuTable:
    """The p-dimensional source (sign -1) or target (sign +1) of a table."""
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    if not 0 <= p < table.dim:
        raise ValueError("face level %d out of range for a %d-cell" % (p, table.dim))
    picked = table.rows[p][0 if sign < 0 else 1]
    return NuTable(rows=table.rows[:p] + ((picked, picked),))


def identity(table: NuTable) -> NuTable:
    zero = IntVector()
    return NuTable(rows=table.rows + ((zero, zero),))


def composable(x: NuTable, y: NuTable, p: int) -> bool:
    if x.dim != y.dim or not 0 <= p < x.dim:
        return False
    return face(x, p, +1) == face(y, p, -1)


def compose(x: NuTable, y: NuTable, p: int) -> NuTable:
    """Compose x then y along their shared p-face.

    Requires the p-target of x to equal the p-source of y.
    """
    if x.dim != y.dim:
        raise NotComposable("tables of dimensions %d and %d" % (x.dim, y.dim))
    if not 0 <= p < x.dim:
        raise NotComposable("no level-%d composition of %d-cells" % (p, x.dim))
    if face(x, p, +1) != face(y, p, -1):
        raise NotComposable("p-target of the first factor differs from "
                            "p-source of the second (p=%d)" % p)
    rows = []
    for r in range(p + 1):
        rows.append((x.rows[r][0], y.rows[r][1]))
    for r in range(p + 1, x.dim + 1):
        rows.append((x.rows[r][0] + y.rows[r][0], x.rows[r][1] + y.rows[r][1]))
    return NuTable(rows=tuple(rows))


# ---------------------------------------------------------------------------
# enumeration by closure from the atoms

@dataclass
class EnumeratedOmegaCat:
    """The compositional closure of the atom tables, one layer per dimension."""

    complex: Adc
    max_dim: int
    cells: dict  # dim -> tuple of NuTable, in discovery order
    atom_names: dict = field(default_factory=dict)  # NuTable -> generator name

    def __post_init__(self):
        self._sets = {q: frozenset(ts) for q, ts in self.cells.items()}

    def cell_set(self, q: int) -> frozenset:
        return self._sets.get(q, frozenset())

    def __contains__(self, table: NuTable) -> bool:
        return table in self.cell_set(table.dim)

    def nontrivial(self, q: int) -> tuple:
        return tuple(t for t in self.cells.get(q, ()) if not t.is_trivial())

    def total(self) -> int:
        return sum(len(ts) for ts in self.cells.values())


def enumerate_nu(complex_: Adc, max_dim=None, max_cells: int = 10000,
                 max_coeff: int = 8) -> EnumeratedOmegaCat:
    """Close the atom tables of dimension <= max_dim under identities and
    binary composition.

    Raises :class:`EnumerationCapExceeded` when more than ``max_cells``
    tables appear or some coefficient exceeds ``max_coeff``, and ValueError
    when an atom table is not actually a cell (which happens for complexes
    that are not unital).
    """
    if max_dim is None:
        max_dim = complex_.max_degree
    cells = {q: {} for q in range(max_dim + 1)}  # dict as ordered set
    total = [0]
    queue = deque()

    def add(table: NuTable):
        bucket = cells[table.dim]
        if table in bucket:
            return
        if table.max_coeff() > max_coeff:
            raise EnumerationCapExceeded(
                "coefficient above %d in a %d-cell" % (max_coeff, table.dim)
            )
        bucket[table] = None
        total[0] += 1
        if total[0] > max_cells:
            raise EnumerationCapExceeded("more than %d cells" % max_cells)
        queue.append(table)

    atom_names = {}
    for q in range(min(max_dim, complex_.max_degree) + 1):
        for name in complex_.generators(q):
            table = atom_to_table(complex_, name)
            ok, cond = is_valid_table(complex_, table)
            if not ok:
                raise ValueError(
                    "atom table of %r violates cell condition %d; "
                    "the complex is not unital enough to enumerate" % (name, cond)
                )
            atom_names[table] = name
            add(table)

    while queue:
        t = queue.popleft()
        if t.dim < max_dim:
            add(identity(t))
        for u in list(cells[t.dim]):
            for p in range(t.dim):
                if composable(t, u, p):
                    add(compose(t, u, p))
                if u is not t and composable(u, t, p):
                    add(compose(u, t, p))

    return EnumeratedOmegaCat(
        complex=complex_,
        max_dim=max_dim,
        cells={q: tuple(bucket) for q, bucket in cells.items()},
        atom_names=atom_names,
    )


# ---------------------------------------------------------------------------
# brute-force cell search (the independent oracle for the enumeration)

def brute_force_nu(complex_: Adc, q: int, coeff_cap: int) -> tuple:
    """All q-cells whose coefficients are bounded by ``coeff_cap``.

    Generates every candidate table degree by degree straight from the cell
    conditions, with no reference to atoms or composition.  Exponential in
    the basis sizes; useful only as ground truth on small complexes.
    """
    if q < 0:
        return ()

    def vectors(p):
        gens = complex_.generators(p)
        out = []
        for combo in product(range(coeff_cap + 1), repeat=len(gens)):
            out.append(IntVector(zip(gens, combo)))
        return out

    level0 = [v for v in vectors(0) if complex_.eps(v) == 1]
    if q == 0:
        return tuple(sorted((NuTable(rows=((v, v),)) for v in level0),
                            key=NuTable.key))

    by_boundary = {}
    for p in range(1, q + 1):
        bucket = {}
        for v in vectors(p):
            bucket.setdefault(complex_.boundary_vec(p, v), []).append(v)
        by_boundary[p] = bucket

    results = []

    def extend(rows, p):
        below_neg, below_pos = rows[-1]
        want = below_pos - below_neg
        candidates = by_boundary[p].get(want, ())
        if p == q:
            for v in candidates:
                results.append(NuTable(rows=tuple(rows) + ((v, v),)))
            return
        for vn in candidates:
            for vp in candidates:
                extend(rows + [(vn, vp)], p + 1)

    for vn in level0:
        for vp in level0:
            extend([(vn, vp)], 1)

    return tuple(sorted(results, key=NuTable.key))


# ---------------------------------------------------------------------------
# indecomposables

def indecomposables(enum: EnumeratedOmegaCat) -> dict:
    """Per dimension, the non-identity cells with no two-factor splitting.

    A cell counts as decomposable only when it is a composite of two
    non-identity cells; padding with identities does not count.
    """
    out = {}
    for q in range(enum.max_dim + 1):
        candidates = [t for t in enum.cells.get(q, ()) if not t.is_trivial()]
        split = set()
        for x in candidates:
            for y in candidates:
                for p in range(q):
                    if composable(x, y, p):
                        split.add(compose(x, y, p))
        out[q] = tuple(t for t in candidates if t not in split)
    return out
