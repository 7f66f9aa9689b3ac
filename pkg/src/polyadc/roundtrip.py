"""Linearizing an enumerated cell set and checking it against the complex.

The linearization of a cell set is the free group on its cells modulo the
relation identifying each composite with the sum of its factors, one degree
at a time.  When the starting complex is well-behaved the atoms form a basis
of that quotient and the whole construction collapses back onto the complex
it came from; :func:`verify_equivalence` checks exactly that, degreewise,
with explicit matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import nu
from .adc import Adc, atom_table, is_strong_steiner_complex, validate_adc
from .zlin import (
    IntMatrix,
    IntVector,
    determinant,
    monoid_coordinates,
    quotient_free_basis,
)


@dataclass
class QuotientLambda:
    """The degreewise quotient of an enumerated cell set.

    ``complex`` carries the induced differential and augmentation on the
    fresh quotient bases; ``projections[q]`` maps the free group on the
    degree-q cells onto the degree-q part.
    """

    complex: Adc
    cells: dict          # q -> tuple of NuTable, ambient order
    cell_names: dict     # q -> tuple of str, aligned with cells
    projections: dict    # q -> IntMatrix (quotient basis x cell names)
    sections: dict       # q -> IntMatrix (cell names x quotient basis)

    def __post_init__(self):
        self._index = {}
        for q, tables in self.cells.items():
            names = self.cell_names[q]
            for table, name in zip(tables, names):
                self._index[table] = (q, name)

    def class_of(self, table: nu.NuTable) -> IntVector:
        """The image of a cell in the quotient basis of its degree."""
        entry = self._index.get(table)
        if entry is None:
            raise ValueError("table is not among the enumerated cells")
        q, name = entry
        return self.projections[q].column(name)

    def rank(self, q: int) -> int:
        return len(self.complex.generators(q))


def lambda_of_enumerated(enum: nu.EnumeratedOmegaCat) -> QuotientLambda:
    """Quotient the free groups on the enumerated cells by composition.

    One relation per composable pair (composite minus the two factors); the
    differential of a quotient generator is transported through a section,
    using the faces of the cells, which must themselves be enumerated.
    """
    cells = {q: tuple(ts) for q, ts in enum.cells.items()}
    cell_names = {
        q: tuple("c%d_%d" % (q, i) for i in range(len(ts)))
        for q, ts in cells.items()
    }
    name_of = {}
    by_name = {}
    for q, ts in cells.items():
        for table, nm in zip(ts, cell_names[q]):
            name_of[table] = nm
            by_name[nm] = table

    projections = {}
    sections = {}
    basis_levels = []
    for q in range(enum.max_dim + 1):
        ambient = cell_names.get(q, ())
        tables = cells.get(q, ())
        relations = []
        for p in range(q):
            for x in tables:
                for y in tables:
                    if nu.composable(x, y, p):
                        comp = nu.compose(x, y, p)
                        relations.append(
                            IntVector.unit(name_of[comp])
                            - IntVector.unit(name_of[x])
                            - IntVector.unit(name_of[y])
                        )
        qb = quotient_free_basis(ambient, relations, name_prefix="q%d_" % q)
        projections[q] = qb.projection
        sections[q] = qb.section
        basis_levels.append(qb.basis)

    differential = {}
    augmentation = {}
    for q, level in enumerate(basis_levels):
        for gen in level:
            section_col = sections[q].column(gen)
            if q == 0:
                augmentation[gen] = sum(c for _, c in section_col.items())
                continue
            dvec = IntVector()
            for cell_name, coeff in section_col.items():
                table = by_name[cell_name]
                src = nu.face(table, q - 1, -1)
                tgt = nu.face(table, q - 1, +1)
                for f in (src, tgt):
                    if f not in enum.cell_set(q - 1):
                        raise ValueError(
                            "a face of an enumerated %d-cell was not enumerated; "
                            "the cell set is not face-closed" % q
                        )
                step = (projections[q - 1].column(name_of[tgt])
                        - projections[q - 1].column(name_of[src]))
                dvec = dvec + step.scaled(coeff)
            differential[gen] = dvec

    quotient = Adc(basis_levels, differential, augmentation)
    check = validate_adc(quotient)
    if not check.ok:
        raise ValueError("induced quotient complex is broken: %r" % (check.failures[0],))
    return QuotientLambda(
        complex=quotient,
        cells=cells,
        cell_names=cell_names,
        projections=projections,
        sections=sections,
    )


# ---------------------------------------------------------------------------
# basis checking

@dataclass(frozen=True)
class OmegaBasisReport:
    ok: bool
    failed: str | None   # generation | injectivity | z-basis | n-basis
    detail: str | None


def check_omega_basis(enum: nu.EnumeratedOmegaCat, candidate,
                      quotient: QuotientLambda | None = None) -> OmegaBasisReport:
    """Is the candidate cell family a basis of the enumerated category?

    Four checks, in order: the candidates generate everything under
    composition; their classes are pairwise distinct; they form a Z-basis
    of each quotient degree; and every cell class is a unique N-combination
    of candidate classes.
    """
    if quotient is None:
        quotient = lambda_of_enumerated(enum)
    per_dim = {q: [] for q in range(enum.max_dim + 1)}
    for table in candidate:
        if table not in enum:
            raise ValueError("candidate table is not among the enumerated cells")
        per_dim[table.dim].append(table)

    # generation: close the candidates under identities and composition
    closure = {q: set() for q in range(enum.max_dim + 1)}
    queue = []
    for q, tables in per_dim.items():
        for t in tables:
            if t not in closure[q]:
                closure[q].add(t)
                queue.append(t)
    while queue:
        t = queue.pop()
        if t.dim < enum.max_dim:
            ident = nu.identity(t)
            if ident not in closure[t.dim + 1]:
                closure[t.dim + 1].add(ident)
                queue.append(ident)
        for u in list(closure[t.dim]):
            for p in range(t.dim):
                for a, b in ((t, u), (u, t)):
                    if nu.composable(a, b, p):
                        c = nu.compose(a, b, p)
                        if c not in closure[c.dim]:
                            closure[c.dim].add(c)
                            queue.append(c)
    for q in range(enum.max_dim + 1):
        missing = enum.cell_set(q) - closure[q]
        if missing:
            return OmegaBasisReport(
                ok=False, failed="generation",
                detail="%d of the %d-cells are not generated" % (len(missing), q),
            )

    # injectivity of classes on the candidate family
    for q, tables in per_dim.items():
        classes = [quotient.class_of(t) for t in tables]
        if len(set(classes)) != len(classes):
            return OmegaBasisReport(
                ok=False, failed="injectivity",
                detail="two candidate %d-cells share a class" % q,
            )

    # Z-basis degreewise: square and unimodular
    for q in range(enum.max_dim + 1):
        tables = per_dim[q]
        rank = quotient.rank(q)
        if len(tables) != rank:
            return OmegaBasisReport(
                ok=False, failed="z-basis",
                detail="%d candidates against rank %d in degree %d"
                       % (len(tables), rank, q),
            )
        if rank == 0:
            continue
        basis_names = quotient.complex.generators(q)
        dense = []
        cols = [quotient.class_of(t) for t in tables]
        for name in basis_names:
            dense.append([col[name] for col in cols])
        if abs(determinant(dense)) != 1:
            return OmegaBasisReport(
                ok=False, failed="z-basis",
                detail="candidate classes are not unimodular in degree %d" % q,
            )

    # N-basis: every cell class is a (necessarily unique) N-combination
    for q in range(enum.max_dim + 1):
        gens = [quotient.class_of(t) for t in per_dim[q]]
        for table in enum.cells.get(q, ()):
            coords = monoid_coordinates(quotient.class_of(table), gens)
            if coords is None:
                return OmegaBasisReport(
                    ok=False, failed="n-basis",
                    detail="a %d-cell class is not a non-negative combination" % q,
                )

    return OmegaBasisReport(ok=True, failed=None, detail=None)


# ---------------------------------------------------------------------------
# the full equivalence check

@dataclass(frozen=True)
class RoundtripReport:
    ok: bool
    reason: str | None
    cell_counts: dict
    ranks: dict


def verify_equivalence(complex_: Adc, max_cells: int = 10000,
                       max_coeff: int = 8) -> RoundtripReport:
    """Enumerate the cells of the complex, linearize them back, and check
    that the atoms realize an isomorphism onto the original complex.

    The complex must classify as strong Steiner; if it does not, the
    report says so rather than raising.
    """
    if not is_strong_steiner_complex(complex_):
        return RoundtripReport(
            ok=False, reason="not a strong Steiner complex",
            cell_counts={}, ranks={},
        )
    enum = nu.enumerate_nu(complex_, max_dim=complex_.max_degree,
                           max_cells=max_cells, max_coeff=max_coeff)
    quotient = lambda_of_enumerated(enum)
    counts = {q: len(ts) for q, ts in enum.cells.items()}
    ranks = {q: quotient.rank(q) for q in range(enum.max_dim + 1)}

    atoms = [nu.atom_to_table(complex_, name) for name in complex_.all_generators()]
    basis_report = check_omega_basis(enum, atoms, quotient)
    if not basis_report.ok:
        return RoundtripReport(
            ok=False,
            reason="atoms are not a basis (%s: %s)"
                   % (basis_report.failed, basis_report.detail),
            cell_counts=counts, ranks=ranks,
        )

    # the atom classes must carry the differential and augmentation of the
    # original generators
    phi = {}
    for name in complex_.all_generators():
        phi[name] = quotient.class_of(nu.atom_to_table(complex_, name))
    for q in range(1, complex_.max_degree + 1):
        for name in complex_.generators(q):
            image = IntVector()
            for gen, coeff in phi[name].items():
                image = image + quotient.complex.diff(gen).scaled(coeff)
            want = IntVector()
            for below, coeff in complex_.diff(name).items():
                want = want + phi[below].scaled(coeff)
            if image != want:
                return RoundtripReport(
                    ok=False,
                    reason="differential mismatch at %r" % name,
                    cell_counts=counts, ranks=ranks,
                )
    for name in complex_.generators(0):
        if quotient.complex.eps(phi[name]) != complex_.eps_gen(name):
            return RoundtripReport(
                ok=False,
                reason="augmentation mismatch at %r" % name,
                cell_counts=counts, ranks=ranks,
            )

    return RoundtripReport(ok=True, reason=None, cell_counts=counts, ranks=ranks)
