"""Superalgebra core: validation, brackets, structural invariants, quotients."""

import pytest

from superwedge.catalog import abelian, backhouse, heisenberg_odd, heisenberg_special, thm58
from superwedge.scalars import Q
from superwedge.superlie import (
    BracketTableError,
    GradedSubspace,
    NotIdealError,
    SuperAlgebra,
    algebra_from_brackets,
    bracket,
    center,
    derived,
    direct_sum,
    is_graded_ideal,
    lower_central_series,
    quotient,
    validate,
)


def _unit(a, i):
    return list(a.basis_vector(i))


def test_validate_abelian():
    assert validate(abelian(2, 1)) == []


def test_validate_heisenberg():
    assert validate(heisenberg_special(1, 0)) == []


def test_validate_catches_sign_error():
    # both [x1,x2] and [x2,x1] set to +z breaks super-skew-symmetry at (x1,x2)
    h = heisenberg_special(1, 0)
    table = [list(map(list, row)) for row in h.structure]
    table[1][0][2] = Q(1)
    broken = SuperAlgebra(
        h.name, h.basis_names, h.parities,
        tuple(tuple(tuple(v) for v in row) for row in table),
    )
    kinds = {v.identity for v in validate(broken)}
    assert "super-skew-symmetry" in kinds
    skew = [v for v in validate(broken) if v.identity == "super-skew-symmetry"]
    assert skew[0].indices == (0, 1)


def test_validate_catches_grading_violation():
    # an even-even bracket may not land on an odd coordinate
    h = heisenberg_special(1, 1)
    table = [list(map(list, row)) for row in h.structure]
    table[0][1][3] = Q(1)
    table[1][0][3] = Q(-1)
    broken = SuperAlgebra(
        h.name, h.basis_names, h.parities,
        tuple(tuple(tuple(v) for v in row) for row in table),
    )
    assert "grading" in {v.identity for v in validate(broken)}


def test_validate_catches_jacobi_violation():
    # skew-consistent, grading-consistent edit that breaks the Jacobi identity
    h = heisenberg_special(1, 0)
    table = [list(map(list, row)) for row in h.structure]
    table[0][2][0] = Q(1)   # [x1, z] = x1
    table[2][0][0] = Q(-1)
    broken = SuperAlgebra(
        h.name, h.basis_names, h.parities,
        tuple(tuple(tuple(v) for v in row) for row in table),
    )
    kinds = {v.identity for v in validate(broken)}
    assert "graded-jacobi" in kinds
    assert "super-skew-symmetry" not in kinds


def test_bracket_bilinear_zero():
    h = heisenberg_special(1, 1)
    zero = [Q(0)] * h.dim
    assert bracket(h, _unit(h, 0), zero) == zero


def test_bracket_odd_square():
    h = heisenberg_special(1, 1)  # basis x1,x2,z | y1
    assert bracket(h, _unit(h, 3), _unit(h, 3)) == [Q(0), Q(0), Q(1), Q(0)]


def test_bracket_odd_center_signs():
    h = heisenberg_odd(1)  # basis x1 | y1, z
    assert bracket(h, _unit(h, 0), _unit(h, 1)) == [Q(0), Q(0), Q(1)]
    assert bracket(h, _unit(h, 1), _unit(h, 0)) == [Q(0), Q(0), Q(-1)]


def test_bracket_parity_additive():
    for alg in (heisenberg_special(1, 1), heisenberg_odd(2), backhouse("nontrivial:L_(2,1)")):
        for i in range(alg.dim):
            for j in range(alg.dim):
                out = bracket(alg, _unit(alg, i), _unit(alg, j))
                p = alg.vector_parity(out)
                if p is not None:
                    assert p == (alg.parity(i) + alg.parity(j)) % 2


def test_center_abelian_is_everything():
    a = abelian(2, 2)
    c = center(a)
    assert c.dim == 4


def test_center_heisenberg():
    c = center(heisenberg_special(1, 1))
    assert c.even.dim == 1 and c.odd.dim == 0
    assert tuple(c.even.basis.entries[0]) == (Q(0), Q(0), Q(1))


def test_center_thm58():
    c = center(thm58())
    assert c.even.dim == 1
    assert tuple(c.even.basis.entries[0]) == (Q(0),) * 4 + (Q(1),)


def test_derived_cases():
    assert derived(abelian(3, 2)).dim == 0
    d = derived(heisenberg_special(2, 1))
    assert d.dim == 1 and d.even.dim == 1
    assert derived(thm58()).dim == 3


def test_derived_and_center_are_ideals():
    for alg in (heisenberg_special(1, 1), heisenberg_odd(2), thm58(),
                backhouse("nontrivial:L7_(2,2)")):
        assert is_graded_ideal(alg, derived(alg))
        assert is_graded_ideal(alg, center(alg))


def test_lcs_abelian():
    _, cls = lower_central_series(abelian(1, 2))
    assert cls == 1


def test_lcs_heisenberg():
    series, cls = lower_central_series(heisenberg_special(1, 1))
    assert cls == 2
    assert series[1].dim == 1


def test_lcs_thm58_class_four():
    series, cls = lower_central_series(thm58())
    assert cls == 4
    assert [s.dim for s in series] == [5, 3, 2, 1, 0]


def test_lcs_not_nilpotent():
    series, cls = lower_central_series(backhouse("trivial:L_(1,1)"))
    assert cls is None
    assert series[-1].dim == 1


def test_direct_sum_abelian():
    s = direct_sum(abelian(1, 0), abelian(0, 1))
    assert (s.even_dim, s.odd_dim) == (1, 1)
    assert validate(s) == []
    assert derived(s).dim == 0


def test_direct_sum_heisenberg_abelian():
    s = direct_sum(heisenberg_special(1, 0), abelian(1, 1))
    assert (s.even_dim, s.odd_dim) == (4, 1)
    assert validate(s) == []
    assert derived(s).dim == 1


def test_direct_sum_symmetric_invariants():
    a, b = heisenberg_special(1, 1), heisenberg_odd(1)
    ab, ba = direct_sum(a, b), direct_sum(b, a)
    assert validate(ab) == [] and validate(ba) == []
    assert (ab.even_dim, ab.odd_dim) == (ba.even_dim, ba.odd_dim)
    assert derived(ab).dim == derived(ba).dim
    assert center(ab).dim == center(ba).dim
    assert lower_central_series(ab)[1] == lower_central_series(ba)[1]


def test_derived_additive_over_sums():
    pairs = [
        (heisenberg_special(1, 0), heisenberg_odd(1)),
        (thm58(), abelian(1, 1)),
        (backhouse("nontrivial:L9_(2,2)"), heisenberg_special(0, 1)),
    ]
    for a, b in pairs:
        assert derived(direct_sum(a, b)).dim == derived(a).dim + derived(b).dim


def test_quotient_by_zero_ideal():
    h = heisenberg_special(1, 1)
    q, proj = quotient(h, GradedSubspace.zero(h))
    assert q.dim == h.dim
    assert validate(q) == []
    assert q.structure == h.structure


def test_quotient_heisenberg_by_center():
    h = heisenberg_special(1, 0)
    q, _ = quotient(h, derived(h))
    assert (q.even_dim, q.odd_dim) == (2, 0)
    assert derived(q).dim == 0  # quotient is abelian
    assert validate(q) == []


def test_quotient_rejects_non_ideal():
    h = heisenberg_special(1, 0)
    span_x1 = GradedSubspace.from_homogeneous_vectors(h, [h.basis_vector(0)])
    assert not is_graded_ideal(h, span_x1)
    with pytest.raises(NotIdealError) as err:
        quotient(h, span_x1)
    assert err.value.witness is not None


def test_quotient_projection_is_homomorphism():
    for alg, ideal in [
        (heisenberg_special(1, 1), None),
        (thm58(), None),
    ]:
        ideal = derived(alg)
        q, proj = quotient(alg, ideal)
        for i in range(alg.dim):
            for j in range(alg.dim):
                left = proj.apply(bracket(alg, _unit(alg, i), _unit(alg, j)))
                right = bracket(
                    q, proj.apply(_unit(alg, i)), proj.apply(_unit(alg, j))
                )
                assert left == right


def test_is_graded_ideal_examples():
    h = heisenberg_special(1, 0)
    assert is_graded_ideal(h, GradedSubspace.zero(h))
    assert is_graded_ideal(h, center(h))


def test_builder_fills_mirror_with_sign():
    a = algebra_from_brackets("t", ["a", "b"], ["u"], {("a", "b"): {"b": 1}})
    assert bracket(a, _unit(a, 1), _unit(a, 0)) == [Q(0), Q(-1), Q(0)]


def test_builder_consistent_double_listing_ok():
    a = algebra_from_brackets(
        "t", ["a", "b"], [], {("a", "b"): {"b": 1}, ("b", "a"): {"b": -1}}
    )
    assert validate(a) == []


def test_builder_rejects_inconsistent_double_listing():
    with pytest.raises(BracketTableError):
        algebra_from_brackets(
            "t", ["a", "b"], [], {("a", "b"): {"b": 1}, ("b", "a"): {"b": 1}}
        )


def test_builder_rejects_unknown_and_duplicate_symbols():
    with pytest.raises(BracketTableError):
        algebra_from_brackets("t", ["a"], [], {("a", "c"): {"a": 1}})
    with pytest.raises(BracketTableError):
        algebra_from_brackets("t", ["a"], ["a"], {})
