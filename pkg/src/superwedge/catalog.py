"""Builtin algebra families with exact structure constants.

Heisenberg-type superalgebras, abelian algebras, one distinguished 5-dim
nilpotent Lie algebra with nonzero Bogomolov multiplier, and the classified
real Lie superalgebras of dimension at most 4 (trivial means the odd part
brackets to zero).  Family labels follow the classification tables the
entries were transcribed from, so reports cross-reference them directly.

Parametrized families are exposed for rational parameter values only, with
the printed admissibility constraint enforced on construction.  Entries
whose printed presentation needed a minimal correction to define a Lie
superalgebra carry the correction in ``notes``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .scalars import Q, format_scalar, parse_scalar
from .superlie import SuperAlgebra, algebra_from_brackets


class UnknownEntryError(KeyError):
    pass


class ParameterError(ValueError):
    pass


def heisenberg_special(m: int, n: int) -> SuperAlgebra:
    """Heisenberg superalgebra with even 1-dim center, dimension (2m+1|n).

    Even basis x1..x2m, z with [x_i, x_{m+i}] = z; odd basis y1..yn with
    [y_j, y_j] = z.
    """
    if m < 0 or n < 0 or m + n < 1:
        raise ParameterError("heisenberg_special requires m+n >= 1")
    even = [f"x{i}" for i in range(1, 2 * m + 1)] + ["z"]
    odd = [f"y{j}" for j in range(1, n + 1)]
    brackets = {}
    for i in range(1, m + 1):
        brackets[(f"x{i}", f"x{m + i}")] = {"z": Q(1)}
    for j in range(1, n + 1):
        brackets[(f"y{j}", f"y{j}")] = {"z": Q(1)}
    return algebra_from_brackets(f"H_({m},{n})", even, odd, brackets)


def heisenberg_odd(m: int) -> SuperAlgebra:
    """Heisenberg superalgebra with odd 1-dim center, dimension (m|m+1).

    Even basis x1..xm; odd basis y1..ym, z with [x_j, y_j] = z.
    """
    if m < 1:
        raise ParameterError("heisenberg_odd requires m >= 1")
    even = [f"x{i}" for i in range(1, m + 1)]
    odd = [f"y{j}" for j in range(1, m + 1)] + ["z"]
    brackets = {(f"x{j}", f"y{j}"): {"z": Q(1)} for j in range(1, m + 1)}
    return algebra_from_brackets(f"H_{m}", even, odd, brackets)


def abelian(m: int, n: int) -> SuperAlgebra:
    """Abelian superalgebra A(m|n): every bracket vanishes."""
    if m < 0 or n < 0:
        raise ParameterError("abelian requires m, n >= 0")
    even = [f"e{i}" for i in range(1, m + 1)]
    odd = [f"f{j}" for j in range(1, n + 1)]
    return algebra_from_brackets(f"A({m}|{n})", even, odd, {})


def thm58() -> SuperAlgebra:
    """The 5-dim nilpotent Lie algebra [a,b]=c, [a,c]=d, [a,d]=[b,c]=e.

    Purely even, nilpotency class 4; the unique corank-4 nilpotent case
    with nonzero Bogomolov multiplier.
    """
    brackets = {
        ("a", "b"): {"c": Q(1)},
        ("a", "c"): {"d": Q(1)},
        ("a", "d"): {"e": Q(1)},
        ("b", "c"): {"e": Q(1)},
    }
    return algebra_from_brackets("thm58", ["a", "b", "c", "d", "e"], [], brackets)


def _nonzero(name):
    def check(params):
        if params[name] == 0:
            raise ParameterError(f"constraint violated: {name} != 0")

    return check


def _positive(name):
    def check(params):
        if params[name] <= 0:
            raise ParameterError(f"constraint violated: {name} > 0")

    return check


def _nonnegative(name):
    def check(params):
        if params[name] < 0:
            raise ParameterError(f"constraint violated: {name} >= 0")

    return check


def _unit_interval_nonzero(name):
    def check(params):
        p = params[name]
        if p == 0 or abs(p) > 1:
            raise ParameterError(f"constraint violated: 0 < |{name}| <= 1")

    return check


def _at_least(name, other):
    def check(params):
        if params[name] < params[other]:
            raise ParameterError(f"constraint violated: {name} >= {other}")

    return check


def _at_most(name, bound):
    def check(params):
        if params[name] > bound:
            raise ParameterError(f"constraint violated: {name} <= {format_scalar(bound)}")

    return check


def _all(*checks):
    def check(params):
        for c in checks:
            c(params)

    return check


def _q(x) -> Q:
    return parse_scalar(x) if isinstance(x, str) else Q(x)


@dataclass(frozen=True)
class BackhouseFamily:
    ident: str  # e.g. "trivial:L4_(1,2)"
    even: tuple
    odd: tuple
    bracket_spec: object  # callable params -> brackets dict
    params: tuple = ()
    constraint: object = None
    constraint_text: str = ""
    samples: tuple = ()  # admissible parameter sample dicts
    source: str = ""
    notes: str = ""

    def build(self, params: dict | None = None) -> SuperAlgebra:
        values = dict(self.samples[0]) if self.samples else {}
        if params:
            unknown = set(params) - set(self.params)
            if unknown:
                raise ParameterError(
                    f"{self.ident}: unknown parameter(s) {sorted(unknown)}"
                )
            values.update({k: _q(v) for k, v in params.items()})
        missing = set(self.params) - set(values)
        if missing:
            raise ParameterError(f"{self.ident}: missing parameter(s) {sorted(missing)}")
        if self.constraint is not None:
            try:
                self.constraint(values)
            except ParameterError as exc:
                raise ParameterError(f"{self.ident}: {exc} ({self.constraint_text})")
        name = self.ident
        if values:
            tail = ",".join(f"{k}={format_scalar(values[k])}" for k in self.params)
            name = f"{self.ident}[{tail}]"
        return algebra_from_brackets(
            name, self.even, self.odd, self.bracket_spec(values)
        )


def _fam(ident, even, odd, spec, *, params=(), constraint=None, constraint_text="",
         samples=({},), source="", notes=""):
    samples = tuple({k: _q(v) for k, v in s.items()} for s in samples)
    return BackhouseFamily(
        ident=ident,
        even=tuple(even),
        odd=tuple(odd),
        bracket_spec=spec,
        params=tuple(params),
        constraint=constraint,
        constraint_text=constraint_text,
        samples=samples,
        source=source,
        notes=notes,
    )


_ONE = Q(1)
_HALF = Q(1, 2)


_BACKHOUSE_TRIVIAL = (
    _fam("trivial:L_(0,1)", [], ["alpha"], lambda P: {}, source="Thm 6.1"),
    _fam(
        "trivial:L_(1,1)",
        ["a"],
        ["alpha"],
        lambda P: {("a", "alpha"): {"alpha": _ONE}},
        source="Thm 6.2",
    ),
    _fam(
        "trivial:L_(2,1)",
        ["a", "b"],
        ["alpha"],
        lambda P: {("a", "b"): {"b": _ONE}, ("a", "alpha"): {"alpha": P["p"]}},
        params=("p",),
        constraint=_nonzero("p"),
        constraint_text="p != 0",
        samples=({"p": "1/2"}, {"p": "1"}, {"p": "2"}),
        source="Thm 6.3",
    ),
    _fam(
        "trivial:L1_(1,2)",
        ["a"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "alpha"): {"alpha": _ONE},
            ("a", "beta"): {"beta": P["p"]},
        },
        params=("p",),
        constraint=_unit_interval_nonzero("p"),
        constraint_text="0 < |p| <= 1",
        samples=({"p": "1/3"}, {"p": "-1/2"}, {"p": "1"}),
        source="Thm 6.3",
    ),
    _fam(
        "trivial:L2_(1,2)",
        ["a"],
        ["alpha", "beta"],
        lambda P: {("a", "beta"): {"alpha": _ONE}},
        source="Thm 6.3",
    ),
    _fam(
        "trivial:L3_(1,2)",
        ["a"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "alpha"): {"alpha": _ONE},
            ("a", "beta"): {"alpha": _ONE, "beta": _ONE},
        },
        source="Thm 6.3",
    ),
    _fam(
        "trivial:L4_(1,2)",
        ["a"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "alpha"): {"alpha": P["p"], "beta": -_ONE},
            ("a", "beta"): {"alpha": _ONE, "beta": P["p"]},
        },
        params=("p",),
        constraint=_nonnegative("p"),
        constraint_text="p >= 0",
        samples=({"p": "0"}, {"p": "1/2"}, {"p": "1"}),
        source="Thm 6.3",
    ),
    _fam(
        "trivial:L1_(3,1)",
        ["a", "b", "c"],
        ["alpha"],
        lambda P: {("b", "c"): {"a": _ONE}, ("b", "alpha"): {"alpha": _ONE}},
        source="Thm 6.4",
        notes="printed presentation kept verbatim; it passes all identity checks",
    ),
    _fam(
        "trivial:L2_(3,1)",
        ["a", "b", "c"],
        ["alpha"],
        lambda P: {
            ("a", "c"): {"a": _ONE},
            ("b", "c"): {"a": _ONE, "b": _ONE},
            ("c", "alpha"): {"alpha": P["q"]},
        },
        params=("q",),
        constraint=_nonzero("q"),
        constraint_text="q != 0",
        samples=({"q": "1/2"}, {"q": "1"}, {"q": "2"}),
        source="Thm 6.4",
        notes="printed constraint 'pq != 0' names a parameter absent from the "
        "printed brackets; enforced as q != 0",
    ),
    _fam(
        "trivial:L3_(3,1)",
        ["a", "b", "c"],
        ["alpha"],
        lambda P: {
            ("a", "c"): {"a": P["p"], "b": -_ONE},
            ("b", "c"): {"a": _ONE, "b": P["p"]},
            ("c", "alpha"): {"alpha": P["q"]},
        },
        params=("p", "q"),
        constraint=_nonzero("q"),
        constraint_text="q != 0",
        samples=({"p": "0", "q": "1"}, {"p": "1", "q": "1/2"}, {"p": "-1", "q": "2"}),
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L1_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "alpha"): {"alpha": _ONE},
            ("a", "beta"): {"beta": _ONE},
            ("b", "beta"): {"alpha": _ONE},
        },
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L2_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "alpha"): {"alpha": _ONE},
            ("a", "beta"): {"beta": _ONE},
            ("b", "alpha"): {"beta": -_ONE},
            ("b", "beta"): {"alpha": _ONE},
        },
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L3_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": P["p"]},
            ("a", "beta"): {"beta": P["q"]},
        },
        params=("p", "q"),
        constraint=_all(_nonzero("p"), _nonzero("q"), _at_least("p", "q")),
        constraint_text="pq != 0, p >= q",
        samples=({"p": "1", "q": "1"}, {"p": "2", "q": "1/2"}, {"p": "-1/2", "q": "-1"}),
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L4_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": P["p"]},
            ("a", "beta"): {"alpha": _ONE, "beta": P["p"]},
        },
        params=("p",),
        constraint=_nonzero("p"),
        constraint_text="p != 0",
        samples=({"p": "1/2"}, {"p": "1"}, {"p": "-2"}),
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L5_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": P["p"], "beta": -P["q"]},
            ("a", "beta"): {"alpha": P["q"], "beta": P["p"]},
        },
        params=("p", "q"),
        constraint=_positive("q"),
        constraint_text="q > 0",
        samples=({"p": "0", "q": "1"}, {"p": "1", "q": "1/2"}, {"p": "-1", "q": "2"}),
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L6_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": P["p"] + 1},
            ("a", "beta"): {"beta": P["p"]},
            ("b", "beta"): {"alpha": _ONE},
        },
        params=("p",),
        samples=({"p": "0"}, {"p": "1"}, {"p": "-1/2"}),
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L1_(1,3)",
        ["a"],
        ["alpha", "beta", "gamma"],
        lambda P: {
            ("a", "alpha"): {"alpha": _ONE},
            ("a", "beta"): {"beta": P["p"]},
            ("a", "gamma"): {"gamma": P["q"]},
        },
        params=("p", "q"),
        samples=({"p": "1", "q": "1"}, {"p": "1/2", "q": "-1"}, {"p": "0", "q": "2"}),
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L2_(1,3)",
        ["a"],
        ["alpha", "beta", "gamma"],
        lambda P: {
            ("a", "alpha"): {"alpha": _ONE},
            ("a", "gamma"): {"beta": _ONE},
        },
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L3_(1,3)",
        ["a"],
        ["alpha", "beta", "gamma"],
        lambda P: {
            ("a", "alpha"): {"alpha": P["p"]},
            ("a", "beta"): {"beta": _ONE},
            ("a", "gamma"): {"beta": _ONE, "gamma": _ONE},
        },
        params=("p",),
        constraint=_nonzero("p"),
        constraint_text="p != 0",
        samples=({"p": "1/2"}, {"p": "1"}, {"p": "-1"}),
        source="Thm 6.4",
        notes="printed '[a,gamma]=b+gamma' names no basis element b; "
        "read as beta+gamma",
    ),
    _fam(
        "trivial:L4_(1,3)",
        ["a"],
        ["alpha", "beta", "gamma"],
        lambda P: {
            ("a", "alpha"): {"alpha": P["p"]},
            ("a", "beta"): {"beta": P["q"], "gamma": -_ONE},
            ("a", "gamma"): {"beta": _ONE, "gamma": P["q"]},
        },
        params=("p", "q"),
        constraint=_all(_nonzero("p"), _nonnegative("q")),
        constraint_text="q >= 0, p != 0",
        samples=({"p": "1", "q": "0"}, {"p": "1/2", "q": "1"}, {"p": "-1", "q": "2"}),
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L5_(1,3)",
        ["a"],
        ["alpha", "beta", "gamma"],
        lambda P: {
            ("a", "beta"): {"alpha": _ONE},
            ("a", "gamma"): {"beta": _ONE},
        },
        source="Thm 6.4",
    ),
    _fam(
        "trivial:L6_(1,3)",
        ["a"],
        ["alpha", "beta", "gamma"],
        lambda P: {
            ("a", "alpha"): {"alpha": _ONE},
            ("a", "beta"): {"alpha": _ONE, "beta": _ONE},
            ("a", "gamma"): {"beta": _ONE, "gamma": _ONE},
        },
        source="Thm 6.4",
    ),
)


_BACKHOUSE_NONTRIVIAL = (
    _fam(
        "nontrivial:L_(1,1)",
        ["a"],
        ["alpha"],
        lambda P: {("alpha", "alpha"): {"a": _ONE}},
        source="Thm 6.5",
    ),
    _fam(
        "nontrivial:L_(2,1)",
        ["a", "b"],
        ["alpha"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _HALF},
            ("alpha", "alpha"): {"b": _ONE},
        },
        source="Thm 6.6",
    ),
    _fam(
        "nontrivial:L1_(1,2)",
        ["a"],
        ["alpha", "beta"],
        lambda P: {
            ("alpha", "alpha"): {"a": _ONE},
            ("beta", "beta"): {"a": _ONE},
        },
        source="Thm 6.6",
    ),
    _fam(
        "nontrivial:L2_(1,2)",
        ["a"],
        ["alpha", "beta"],
        lambda P: {
            ("alpha", "alpha"): {"a": _ONE},
            ("beta", "beta"): {"a": -_ONE},
        },
        source="Thm 6.6",
    ),
    _fam(
        "nontrivial:L1_(3,1)",
        ["a", "b", "c"],
        ["alpha"],
        lambda P: {("b", "c"): {"a": _ONE}, ("alpha", "alpha"): {"a": _ONE}},
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L2_(3,1)",
        ["a", "b", "c"],
        ["alpha"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "c"): {"c": P["p"]},
            ("a", "alpha"): {"alpha": _HALF},
            ("alpha", "alpha"): {"b": _ONE},
        },
        params=("p",),
        constraint=_nonzero("p"),
        constraint_text="p != 0",
        samples=({"p": "1/2"}, {"p": "1"}, {"p": "-1"}),
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L3_(3,1)",
        ["a", "b", "c"],
        ["alpha"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "c"): {"b": _ONE, "c": _ONE},
            ("a", "alpha"): {"alpha": _HALF},
            ("alpha", "alpha"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L4_(3,1)",
        ["a", "b", "c"],
        ["alpha"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "c"): {"b": -_ONE, "c": _ONE},
            ("a", "alpha"): {"alpha": _HALF},
            ("alpha", "alpha"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L1_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _HALF},
            ("a", "beta"): {"beta": _HALF},
            ("alpha", "alpha"): {"b": _ONE},
            ("beta", "beta"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L2_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _HALF},
            ("a", "beta"): {"beta": _HALF},
            ("alpha", "alpha"): {"b": _ONE},
            ("beta", "beta"): {"b": -_ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L3_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _HALF},
            ("a", "beta"): {"beta": _HALF},
            ("alpha", "alpha"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L4_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": P["p"]},
            ("a", "beta"): {"beta": 1 - P["p"]},
            ("alpha", "beta"): {"b": _ONE},
        },
        params=("p",),
        constraint=_at_most("p", _HALF),
        constraint_text="p <= 1/2",
        samples=({"p": "1/2"}, {"p": "0"}, {"p": "-1"}),
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L5_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _HALF},
            ("a", "beta"): {"alpha": _ONE, "beta": _HALF},
            ("beta", "beta"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L6_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _HALF, "beta": -P["p"]},
            ("a", "beta"): {"alpha": P["p"], "beta": _HALF},
            ("alpha", "alpha"): {"b": _ONE},
            ("beta", "beta"): {"b": _ONE},
        },
        params=("p",),
        constraint=_positive("p"),
        constraint_text="p > 0",
        samples=({"p": "1/2"}, {"p": "1"}, {"p": "2"}),
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L7_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _ONE},
            ("b", "beta"): {"alpha": _ONE},
            ("beta", "beta"): {"a": _ONE},
            ("alpha", "beta"): {"b": -_HALF},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L8_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _ONE},
            ("b", "beta"): {"alpha": _ONE},
            ("beta", "beta"): {"a": -_ONE},
            ("alpha", "beta"): {"b": _HALF},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L9_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("alpha", "alpha"): {"a": _ONE},
            ("beta", "beta"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L10_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("alpha", "alpha"): {"a": _ONE},
            ("beta", "beta"): {"b": _ONE},
            ("alpha", "beta"): {"a": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L11_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("alpha", "alpha"): {"a": _ONE},
            ("beta", "beta"): {"b": _ONE},
            ("alpha", "beta"): {"a": P["p"], "b": P["p"]},
        },
        params=("p",),
        constraint=_positive("p"),
        constraint_text="p > 0",
        samples=({"p": "1/2"}, {"p": "1"}, {"p": "2"}),
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L12_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("alpha", "alpha"): {"a": _ONE},
            ("beta", "beta"): {"b": _ONE},
            ("alpha", "beta"): {"a": P["p"], "b": -P["p"]},
        },
        params=("p",),
        constraint=_positive("p"),
        constraint_text="p > 0",
        samples=({"p": "1/2"}, {"p": "1"}, {"p": "2"}),
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L13_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _ONE},
            ("alpha", "beta"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L14_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "b"): {"b": _ONE},
            ("a", "alpha"): {"alpha": _HALF},
            ("alpha", "alpha"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L15_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "alpha"): {"alpha": _ONE},
            ("a", "beta"): {"beta": -_ONE},
            ("alpha", "beta"): {"b": _ONE},
        },
        source="Thm 6.7",
        notes="printed list assigns [a,beta] twice; the second entry is read "
        "as [alpha,beta]=b (grading forces an odd-odd bracket)",
    ),
    _fam(
        "nontrivial:L16_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "beta"): {"alpha": _ONE},
            ("beta", "beta"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L17_(2,2)",
        ["a", "b"],
        ["alpha", "beta"],
        lambda P: {
            ("a", "alpha"): {"beta": -_ONE},
            ("a", "beta"): {"alpha": _ONE},
            ("alpha", "alpha"): {"b": _ONE},
            ("beta", "beta"): {"b": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L1_(1,3)",
        ["a"],
        ["alpha", "beta", "gamma"],
        lambda P: {
            ("alpha", "alpha"): {"a": _ONE},
            ("beta", "beta"): {"a": _ONE},
            ("gamma", "gamma"): {"a": _ONE},
        },
        source="Thm 6.7",
    ),
    _fam(
        "nontrivial:L2_(1,3)",
        ["a"],
        ["alpha", "beta", "gamma"],
        lambda P: {
            ("alpha", "alpha"): {"a": _ONE},
            ("beta", "beta"): {"a": _ONE},
            ("gamma", "gamma"): {"a": -_ONE},
        },
        source="Thm 6.7",
    ),
)


_BACKHOUSE = {fam.ident: fam for fam in _BACKHOUSE_TRIVIAL + _BACKHOUSE_NONTRIVIAL}


def backhouse_ids(kind: str | None = None) -> list[str]:
    """Stable list of family identifiers; kind in {trivial, nontrivial, None}."""
    fams = _BACKHOUSE_TRIVIAL + _BACKHOUSE_NONTRIVIAL
    if kind is not None:
        fams = tuple(f for f in fams if f.ident.startswith(kind + ":"))
    return [f.ident for f in fams]


def backhouse_family(ident: str) -> BackhouseFamily:
    try:
        return _BACKHOUSE[ident]
    except KeyError:
        raise UnknownEntryError(f"unknown classified family {ident!r}")


def backhouse(ident: str, params: dict | None = None) -> SuperAlgebra:
    """Build a classified dim<=4 family member at rational parameter values."""
    return backhouse_family(ident).build(params)


@dataclass(frozen=True)
class CatalogEntry:
    """One catalog id with its construction recipe and expected result."""

    key: str
    family: str
    args: tuple = ()
    param_names: tuple = ()
    samples: tuple = ({},)
    expected_trivial: bool = True
    source: str = ""
    notes: str = ""

    def build(self, params: dict | None = None) -> SuperAlgebra:
        if self.family == "heisenberg_special":
            return heisenberg_special(*self.args)
        if self.family == "heisenberg_odd":
            return heisenberg_odd(*self.args)
        if self.family == "abelian":
            return abelian(*self.args)
        if self.family == "thm58":
            return thm58()
        if self.family == "backhouse":
            return backhouse(self.args[0], params)
        raise UnknownEntryError(self.family)


def entries() -> list[CatalogEntry]:
    """All catalog entries in a stable order."""
    out: list[CatalogEntry] = []
    for m, n in ((1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (1, 2), (2, 2)):
        out.append(
            CatalogEntry(
                key=f"heisenberg_special({m},{n})",
                family="heisenberg_special",
                args=(m, n),
                expected_trivial=True,
                source="Thm 5.5",
            )
        )
    for m in (1, 2, 3):
        out.append(
            CatalogEntry(
                key=f"heisenberg_odd({m})",
                family="heisenberg_odd",
                args=(m,),
                expected_trivial=True,
                source="Thm 5.4",
            )
        )
    for m, n in ((1, 1), (2, 0), (0, 2), (2, 3)):
        out.append(
            CatalogEntry(
                key=f"abelian({m},{n})",
                family="abelian",
                args=(m, n),
                expected_trivial=True,
                source="abelian",
            )
        )
    out.append(
        CatalogEntry(
            key="thm58",
            family="thm58",
            expected_trivial=False,
            source="Thm 5.8",
        )
    )
    for fam in _BACKHOUSE_TRIVIAL + _BACKHOUSE_NONTRIVIAL:
        out.append(
            CatalogEntry(
                key=f"backhouse({fam.ident})",
                family="backhouse",
                args=(fam.ident,),
                param_names=fam.params,
                samples=fam.samples,
                expected_trivial=True,
                source=fam.source,
                notes=fam.notes,
            )
        )
    return out


_ENTRY_RE = re.compile(r"^(\w+)(?:\((.*)\))?$")


def resolve(key: str) -> SuperAlgebra:
    """Build the algebra named by a catalog key.

    Accepted forms: ``thm58``, ``abelian(2,3)``, ``heisenberg_special(1,1)``,
    ``heisenberg_odd(2)``, ``backhouse(trivial:L4_(1,2))`` and the latter
    with parameter overrides, ``backhouse(trivial:L_(2,1),p=1/2)``.
    """
    match = _ENTRY_RE.match(key.strip())
    if match is None:
        raise UnknownEntryError(f"malformed catalog key {key!r}")
    head, payload = match.group(1), match.group(2)
    if head == "thm58":
        if payload:
            raise UnknownEntryError("thm58 takes no arguments")
        return thm58()
    if head in ("heisenberg_special", "heisenberg_odd", "abelian"):
        if payload is None:
            raise UnknownEntryError(f"{head} needs integer arguments")
        try:
            args = tuple(int(x) for x in payload.split(","))
        except ValueError:
            raise UnknownEntryError(f"bad arguments for {head}: {payload!r}")
        fn = {"heisenberg_special": heisenberg_special,
              "heisenberg_odd": heisenberg_odd,
              "abelian": abelian}[head]
        return fn(*args)
    if head == "backhouse":
        if payload is None:
            raise UnknownEntryError("backhouse needs a family identifier")
        # family idents contain commas ("L7_(2,2)"); only k=v tails are params
        parts = payload.split(",")
        ident_parts = [parts[0]]
        params = {}
        for part in parts[1:]:
            if "=" in part:
                k, v = part.split("=", 1)
                params[k.strip()] = parse_scalar(v)
            elif params:
                raise UnknownEntryError(f"bad parameter assignment {part!r}")
            else:
                ident_parts.append(part)
        ident = ",".join(ident_parts).strip()
        return backhouse(ident, params or None)
    raise UnknownEntryError(f"unknown catalog key {key!r}")
