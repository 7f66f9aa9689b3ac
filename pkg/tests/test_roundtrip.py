"""Quotient linearization of cell sets and the equivalence checker."""

import pytest

from polyadc import (
    EnumeratedOmegaCat,
    EnumerationCapExceeded,
    IntVector,
    atom_to_table,
    build,
    check_omega_basis,
    compose,
    enumerate_nu,
    identity,
    lambda_of_enumerated,
    lambda_presentation,
    verify_equivalence,
)


def triangle():
    return build("oriental", (2,)).as_adc()


def all_atoms(k):
    return [atom_to_table(k, name) for name in k.all_generators()]


def test_quotient_of_the_interval():
    k = build("oriental", (1,)).as_adc()
    ql = lambda_of_enumerated(enumerate_nu(k, max_coeff=2))
    assert {q: ql.rank(q) for q in (0, 1)} == {0: 2, 1: 1}
    # identity 1-cells die in the quotient, the edge does not
    assert ql.class_of(identity(atom_to_table(k, "0"))) == IntVector()
    assert ql.class_of(atom_to_table(k, "01")) != IntVector()
    assert all(ql.complex.eps_gen(g) == 1 for g in ql.complex.generators(0))
    with pytest.raises(ValueError):
        ql.class_of(atom_to_table(triangle(), "012"))


def test_quotient_sends_composition_to_addition():
    k = triangle()
    ql = lambda_of_enumerated(enumerate_nu(k, max_coeff=2))
    a01, a12 = atom_to_table(k, "01"), atom_to_table(k, "12")
    both = compose(a01, a12, 0)
    assert ql.class_of(both) == ql.class_of(a01) + ql.class_of(a12)
    assert {q: ql.rank(q) for q in (0, 1, 2)} == {0: 3, 1: 3, 2: 1}


def test_quotient_requires_face_closed_input():
    k = triangle()
    partial = EnumeratedOmegaCat(
        complex=k,
        max_dim=1,
        cells={0: (atom_to_table(k, "0"),), 1: (atom_to_table(k, "01"),)},
    )
    with pytest.raises(ValueError):
        lambda_of_enumerated(partial)


def test_atoms_are_a_basis_of_the_triangle():
    k = triangle()
    enum = enumerate_nu(k, max_coeff=2)
    rep = check_omega_basis(enum, all_atoms(k))
    assert rep.ok
    assert rep.failed is None


def test_basis_check_flags_missing_generators():
    k = triangle()
    enum = enumerate_nu(k, max_coeff=2)
    atoms = [atom_to_table(k, n) for n in ("0", "1", "2", "01", "02", "12")]
    rep = check_omega_basis(enum, atoms)
    assert not rep.ok
    assert rep.failed == "generation"


def test_basis_check_flags_shared_classes():
    k = triangle()
    enum = enumerate_nu(k, max_coeff=2)
    padded = all_atoms(k) + [
        identity(atom_to_table(k, "0")),
        identity(atom_to_table(k, "1")),
    ]
    rep = check_omega_basis(enum, padded)
    assert not rep.ok
    assert rep.failed == "injectivity"


def test_basis_check_flags_wrong_rank():
    k = triangle()
    enum = enumerate_nu(k, max_coeff=2)
    a01, a12 = atom_to_table(k, "01"), atom_to_table(k, "12")
    padded = all_atoms(k) + [compose(a01, a12, 0)]
    rep = check_omega_basis(enum, padded)
    assert not rep.ok
    assert rep.failed == "z-basis"


def test_basis_check_rejects_foreign_tables():
    k = triangle()
    enum = enumerate_nu(k, max_coeff=2)
    stranger = atom_to_table(build("oriental", (3,)).as_adc(), "0123")
    with pytest.raises(ValueError):
        check_omega_basis(enum, [stranger])


def test_equivalence_on_the_triangle():
    rep = verify_equivalence(triangle())
    assert rep.ok
    assert rep.cell_counts == {0: 3, 1: 7, 2: 8}
    assert rep.ranks == {0: 3, 1: 3, 2: 1}


def test_equivalence_on_the_empty_complex():
    rep = verify_equivalence(build("sphere", (-1,)).as_adc())
    assert rep.ok
    assert rep.cell_counts == {}


def test_equivalence_precondition_is_reported_not_raised():
    loop = lambda_presentation(build("loop").as_presentation())
    rep = verify_equivalence(loop)
    assert not rep.ok
    assert rep.reason == "not a strong Steiner complex"


def test_equivalence_propagates_enumeration_caps():
    with pytest.raises(EnumerationCapExceeded):
        verify_equivalence(build("oriental", (3,)).as_adc(), max_cells=10)
