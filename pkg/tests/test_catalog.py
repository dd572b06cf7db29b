"""Catalog constructors, parameter constraints and entry enumeration."""

import pytest

from superwedge.catalog import (
    ParameterError,
    UnknownEntryError,
    abelian,
    backhouse,
    backhouse_family,
    backhouse_ids,
    entries,
    heisenberg_odd,
    heisenberg_special,
    resolve,
    thm58,
)
from superwedge.scalars import Q
from superwedge.superlie import bracket, center, derived, lower_central_series, validate


def test_heisenberg_special_dims():
    for m, n in ((1, 0), (0, 1), (1, 1), (2, 2), (3, 1)):
        h = heisenberg_special(m, n)
        assert (h.even_dim, h.odd_dim) == (2 * m + 1, n)
        assert validate(h) == []


def test_heisenberg_special_classical_case():
    h = heisenberg_special(1, 0)
    assert h.odd_dim == 0 and h.dim == 3
    i, j = h.basis_names.index("x1"), h.basis_names.index("x2")
    out = bracket(h, h.basis_vector(i), h.basis_vector(j))
    assert out[h.basis_names.index("z")] == Q(1)


def test_heisenberg_special_odd_square():
    h = heisenberg_special(0, 1)
    assert (h.even_dim, h.odd_dim) == (1, 1)
    out = bracket(h, h.basis_vector(1), h.basis_vector(1))
    assert out == [Q(1), Q(0)]


def test_heisenberg_special_derived():
    h = heisenberg_special(2, 2)
    d = derived(h)
    assert d.dim == 1 and d.even.dim == 1


def test_heisenberg_special_rejects_empty():
    with pytest.raises(ParameterError):
        heisenberg_special(0, 0)


def test_heisenberg_odd_dims():
    for m in (1, 2, 3):
        h = heisenberg_odd(m)
        assert (h.even_dim, h.odd_dim) == (m, m + 1)
        assert validate(h) == []


def test_heisenberg_odd_center():
    c = center(heisenberg_odd(2))
    assert c.even.dim == 0 and c.odd.dim == 1
    assert tuple(c.odd.basis.entries[0]) == (Q(0), Q(0), Q(1))


def test_heisenberg_odd_rejects_zero():
    with pytest.raises(ParameterError):
        heisenberg_odd(0)


def test_abelian():
    z = abelian(0, 0)
    assert z.dim == 0 and validate(z) == []
    for m, n in ((1, 1), (2, 3)):
        a = abelian(m, n)
        assert derived(a).dim == 0
        assert center(a).dim == m + n


def test_thm58_structure():
    t = thm58()
    assert validate(t) == []
    assert lower_central_series(t)[1] == 4
    assert derived(t).dim == 3
    assert center(t).dim == 1


def test_backhouse_trivial_l11():
    a = backhouse("trivial:L_(1,1)")
    assert validate(a) == []
    out = bracket(a, a.basis_vector(0), a.basis_vector(1))
    assert out == [Q(0), Q(1)]


def test_backhouse_nontrivial_l21():
    a = backhouse("nontrivial:L_(2,1)")
    names = a.basis_names
    al = names.index("alpha")
    assert bracket(a, a.basis_vector(0), a.basis_vector(al))[al] == Q(1, 2)
    assert bracket(a, a.basis_vector(al), a.basis_vector(al))[names.index("b")] == Q(1)


def test_backhouse_trivial_l4_12_at_p1():
    a = backhouse("trivial:L4_(1,2)", {"p": Q(1)})
    names = a.basis_names
    al, be = names.index("alpha"), names.index("beta")
    out = bracket(a, a.basis_vector(0), a.basis_vector(al))
    assert out[al] == Q(1) and out[be] == Q(-1)
    out = bracket(a, a.basis_vector(0), a.basis_vector(be))
    assert out[al] == Q(1) and out[be] == Q(1)


def test_backhouse_all_samples_validate():
    for ident in backhouse_ids():
        fam = backhouse_family(ident)
        samples = fam.samples if fam.params else ({},)
        for s in samples:
            assert validate(fam.build(dict(s) if s else None)) == [], ident


def test_backhouse_parameter_constraints():
    with pytest.raises(ParameterError) as err:
        backhouse("trivial:L_(2,1)", {"p": Q(0)})
    assert "p != 0" in str(err.value)
    with pytest.raises(ParameterError) as err:
        backhouse("trivial:L1_(1,2)", {"p": Q(2)})
    assert "0 < |p| <= 1" in str(err.value)
    with pytest.raises(ParameterError):
        backhouse("nontrivial:L4_(2,2)", {"p": Q(1)})  # needs p <= 1/2
    with pytest.raises(ParameterError):
        backhouse("nontrivial:L11_(2,2)", {"p": Q(-1)})  # needs p > 0


def test_backhouse_unknown_ids():
    with pytest.raises(UnknownEntryError):
        backhouse("trivial:L9_(9,9)")
    with pytest.raises(ParameterError):
        backhouse("trivial:L_(1,1)", {"q": Q(1)})


def test_backhouse_counts():
    assert len(backhouse_ids("trivial")) == 22
    assert len(backhouse_ids("nontrivial")) == 27
    n22 = [i for i in backhouse_ids("nontrivial") if i.endswith("_(2,2)")]
    assert len(n22) == 17


def test_corrected_entries_are_flagged():
    assert "beta+gamma" in backhouse_family("trivial:L3_(1,3)").notes
    assert "[alpha,beta]=b" in backhouse_family("nontrivial:L15_(2,2)").notes
    assert "q != 0" in backhouse_family("trivial:L2_(3,1)").notes


def test_entries_listing():
    table = {e.key: e for e in entries()}
    assert len(table) >= 40
    e = table["heisenberg_special(1,1)"]
    assert e.expected_trivial and e.source == "Thm 5.5"
    e = table["thm58"]
    assert not e.expected_trivial and e.source == "Thm 5.8"
    assert "backhouse(nontrivial:L17_(2,2))" in table


def test_resolve_keys():
    assert resolve("thm58").dim == 5
    assert resolve("heisenberg_special(2,1)").dim == 6
    assert resolve("abelian(2,3)").dim == 5
    a = resolve("backhouse(trivial:L_(2,1),p=1/2)")
    al = a.basis_names.index("alpha")
    assert bracket(a, a.basis_vector(0), a.basis_vector(al))[al] == Q(1, 2)
    with pytest.raises(UnknownEntryError):
        resolve("nosuchfamily(1)")
    with pytest.raises(UnknownEntryError):
        resolve("thm58(3)")
