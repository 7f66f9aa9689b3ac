"""Built-in example complexes and presentations.

Each entry carries whichever of the two forms (polygraph presentation,
augmented directed complex) is primary for it, plus hand-checked
classification facts in ``expected`` that the test-suite pins against the
classifiers.  Simplex-shaped entries use vertex-string names ("01", "012")
in both forms, so the linearization of the presentation and the directly
built complex agree on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .adc import Adc
from .polygraph import Comp, Gen, Id, PolyPresentation, lambda_presentation
from .zlin import IntVector


@dataclass
class CatalogEntry:
    name: str
    params: tuple
    presentation: PolyPresentation | None
    complex: Adc | None
    native: str  # "polygraph" or "adc"
    expressions: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)

    def as_adc(self) -> Adc:
        if self.complex is not None:
            return self.complex
        return lambda_presentation(self.presentation)

    def as_presentation(self) -> PolyPresentation:
        if self.presentation is None:
            raise ValueError(
                "catalog entry %r has no polygraph form" % self.name
            )
        return self.presentation


def _disk(n: int) -> CatalogEntry:
    if n < 0:
        raise ValueError("disk needs a dimension >= 0")
    levels = [["s%d" % q, "t%d" % q] for q in range(n)]
    levels.append(["c%d" % n])
    boundary = {}
    for q in range(1, n):
        pair = (Gen("s%d" % (q - 1)), Gen("t%d" % (q - 1)))
        boundary["s%d" % q] = pair
        boundary["t%d" % q] = pair
    if n >= 1:
        boundary["c%d" % n] = (Gen("s%d" % (n - 1)), Gen("t%d" % (n - 1)))
    pres = PolyPresentation(levels, boundary)
    return CatalogEntry(
        name="disk", params=(n,), presentation=pres, complex=None,
        native="polygraph",
        expected={"atomic": True, "strong_steiner": True},
    )


def _sphere(n: int) -> CatalogEntry:
    if n < -1:
        raise ValueError("sphere needs a dimension >= -1")
    levels = [["s%d" % q, "t%d" % q] for q in range(n + 1)]
    boundary = {}
    for q in range(1, n + 1):
        pair = (Gen("s%d" % (q - 1)), Gen("t%d" % (q - 1)))
        boundary["s%d" % q] = pair
        boundary["t%d" % q] = pair
    pres = PolyPresentation(levels, boundary)
    return CatalogEntry(
        name="sphere", params=(n,), presentation=pres, complex=None,
        native="polygraph",
        expected={"atomic": True, "strong_steiner": True},
    )


def _ordinal(m: int) -> CatalogEntry:
    if m < 0:
        raise ValueError("ordinal needs m >= 0")
    levels = [["v%d" % i for i in range(m + 1)]]
    boundary = {}
    if m >= 1:
        levels.append(["e%d" % i for i in range(1, m + 1)])
        for i in range(1, m + 1):
            boundary["e%d" % i] = (Gen("v%d" % (i - 1)), Gen("v%d" % i))
    pres = PolyPresentation(levels, boundary)
    return CatalogEntry(
        name="ordinal", params=(m,), presentation=pres, complex=None,
        native="polygraph",
        expected={"atomic": True, "strong_steiner": True},
    )


def _theta2(params) -> CatalogEntry:
    if not params:
        raise ValueError("theta2 needs at least the number of columns")
    m, ks = params[0], params[1:]
    if m < 0 or len(ks) != m or any(k < 0 for k in ks):
        raise ValueError("theta2 parameters must be m followed by m widths")
    levels = [["v%d" % i for i in range(m + 1)]]
    ones = []
    twos = []
    boundary = {}
    for i in range(1, m + 1):
        k = ks[i - 1]
        for j in range(k + 1):
            name = "f%d_%d" % (i, j)
            ones.append(name)
            boundary[name] = (Gen("v%d" % (i - 1)), Gen("v%d" % i))
        for j in range(1, k + 1):
            name = "a%d_%d" % (i, j)
            twos.append(name)
            boundary[name] = (Gen("f%d_%d" % (i, j - 1)), Gen("f%d_%d" % (i, j)))
    if ones:
        levels.append(ones)
    if twos:
        levels.append(twos)
    pres = PolyPresentation(levels, boundary)
    return CatalogEntry(
        name="theta2", params=tuple(params), presentation=pres, complex=None,
        native="polygraph",
        expected={"atomic": True, "strong_steiner": True},
    )


def _simplex_name(vertices) -> str:
    return "".join(str(v) for v in vertices)


def _oriental_complex(n: int) -> Adc:
    basis = []
    for q in range(n + 1):
        basis.append([_simplex_name(c) for c in combinations(range(n + 1), q + 1)])
    diff = {}
    for q in range(1, n + 1):
        for combo in combinations(range(n + 1), q + 1):
            vec = IntVector()
            for i in range(len(combo)):
                sub = combo[:i] + combo[i + 1:]
                term = IntVector.unit(_simplex_name(sub))
                vec = vec + (term if i % 2 == 0 else -term)
            diff[_simplex_name(combo)] = vec
    aug = {str(v): 1 for v in range(n + 1)}
    return Adc(basis, diff, aug)


def _oriental_presentation(n: int):
    if n > 3:
        return None
    if n == 0:
        return PolyPresentation([["0"]], {})
    if n == 1:
        return PolyPresentation(
            [["0", "1"], ["01"]],
            {"01": (Gen("0"), Gen("1"))},
        )
    if n == 2:
        return PolyPresentation(
            [["0", "1", "2"], ["01", "02", "12"], ["012"]],
            {
                "01": (Gen("0"), Gen("1")),
                "02": (Gen("0"), Gen("2")),
                "12": (Gen("1"), Gen("2")),
                "012": (Gen("02"), Comp(0, Gen("01"), Gen("12"))),
            },
        )
    boundary = {
        "01": (Gen("0"), Gen("1")),
        "02": (Gen("0"), Gen("2")),
        "03": (Gen("0"), Gen("3")),
        "12": (Gen("1"), Gen("2")),
        "13": (Gen("1"), Gen("3")),
        "23": (Gen("2"), Gen("3")),
        "012": (Gen("02"), Comp(0, Gen("01"), Gen("12"))),
        "013": (Gen("03"), Comp(0, Gen("01"), Gen("13"))),
        "023": (Gen("03"), Comp(0, Gen("02"), Gen("23"))),
        "123": (Gen("13"), Comp(0, Gen("12"), Gen("23"))),
        "0123": (
            Comp(1, Gen("023"), Comp(0, Gen("012"), Id(Gen("23")))),
            Comp(1, Gen("013"), Comp(0, Id(Gen("01")), Gen("123"))),
        ),
    }
    return PolyPresentation(
        [
            ["0", "1", "2", "3"],
            ["01", "02", "03", "12", "13", "23"],
            ["012", "013", "023", "123"],
            ["0123"],
        ],
        boundary,
    )


def _oriental(n: int) -> CatalogEntry:
    if n < 0:
        raise ValueError("oriental needs a dimension >= 0")
    return CatalogEntry(
        name="oriental", params=(n,),
        presentation=_oriental_presentation(n),
        complex=_oriental_complex(n),
        native="adc",
        expected={"atomic": True, "strong_steiner": True},
    )


def _loop() -> CatalogEntry:
    pres = PolyPresentation(
        [["a", "b"], ["f", "g"]],
        {"f": (Gen("a"), Gen("b")), "g": (Gen("b"), Gen("a"))},
    )
    return CatalogEntry(
        name="loop", params=(), presentation=pres, complex=None,
        native="polygraph",
        expected={
            "atomic": True,
            "codim1_antisymmetric": False,
            "strongly_loop_free_categorical": False,
            "strongly_loop_free_algebraic": False,
            "steiner_orderable": False,
            "strong_steiner": False,
        },
    )


def _endo2cell() -> CatalogEntry:
    pres = PolyPresentation(
        [["x"], [], ["alpha"]],
        {"alpha": (Id(Gen("x")), Id(Gen("x")))},
    )
    return CatalogEntry(
        name="endo2cell", params=(), presentation=pres, complex=None,
        native="polygraph",
        expected={
            "atomic": False,
            "codim1_antisymmetric": True,
            "strongly_loop_free_categorical": False,
            "strongly_loop_free_algebraic": True,
            "steiner_orderable": False,
            "strong_steiner": False,
        },
    )


def _square() -> CatalogEntry:
    pres = PolyPresentation(
        [["x", "y", "z"], ["f", "g", "h"], ["alpha"]],
        {
            "f": (Gen("x"), Gen("y")),
            "g": (Gen("y"), Gen("z")),
            "h": (Gen("y"), Gen("z")),
            "alpha": (Comp(0, Gen("f"), Gen("g")), Comp(0, Gen("f"), Gen("h"))),
        },
    )
    return CatalogEntry(
        name="square", params=(), presentation=pres, complex=None,
        native="polygraph",
        expected={
            "atomic": False,
            "codim1_antisymmetric": False,
            "strongly_loop_free_categorical": False,
            "strongly_loop_free_algebraic": True,
            "steiner_orderable": False,
            "strong_steiner": False,
        },
    )


def _forest_a() -> CatalogEntry:
    boundary = {}
    for name, (u, v) in {
        "a": ("x", "y"), "b": ("x", "y"), "c": ("x", "y"),
        "d": ("y", "z"), "e": ("y", "z"), "f": ("y", "z"),
    }.items():
        boundary[name] = (Gen(u), Gen(v))
    for name, (u, v) in {
        "alpha": ("a", "b"), "alpha'": ("a", "b"),
        "beta": ("b", "c"), "beta'": ("b", "c"),
        "gamma": ("d", "e"), "gamma'": ("d", "e"),
        "delta": ("e", "f"), "delta'": ("e", "f"),
    }.items():
        boundary[name] = (Gen(u), Gen(v))
    boundary["A"] = (
        Comp(0, Gen("alpha"), Gen("delta")),
        Comp(0, Gen("alpha'"), Gen("delta'")),
    )
    boundary["B"] = (
        Comp(0, Gen("beta"), Gen("gamma")),
        Comp(0, Gen("beta'"), Gen("gamma'")),
    )
    pres = PolyPresentation(
        [
            ["x", "y", "z"],
            ["a", "b", "c", "d", "e", "f"],
            ["alpha", "alpha'", "beta", "beta'",
             "gamma", "gamma'", "delta", "delta'"],
            ["A", "B"],
        ],
        boundary,
    )

    # two routes through A and B with the same linearization
    w1 = Comp(0, Id(Gen("a")), Gen("gamma"))
    w2 = Comp(0, Gen("beta"), Id(Gen("f")))
    w3 = Comp(0, Gen("alpha'"), Id(Gen("d")))
    w4 = Comp(0, Id(Gen("c")), Gen("delta'"))
    h1 = Comp(
        2,
        Comp(1, Id(w1), Comp(1, Gen("A"), Id(w2))),
        Comp(1, Id(w3), Comp(1, Gen("B"), Id(w4))),
    )
    u1 = Comp(0, Gen("alpha"), Id(Gen("d")))
    u2 = Comp(0, Id(Gen("c")), Gen("delta"))
    u3 = Comp(0, Id(Gen("a")), Gen("gamma'"))
    u4 = Comp(0, Gen("beta'"), Id(Gen("f")))
    h2 = Comp(
        2,
        Comp(1, Id(u1), Comp(1, Gen("B"), Id(u2))),
        Comp(1, Id(u3), Comp(1, Gen("A"), Id(u4))),
    )
    return CatalogEntry(
        name="forestA", params=(), presentation=pres, complex=None,
        native="polygraph",
        expressions={"H1": h1, "H2": h2},
        expected={
            "atomic": True,
            "strongly_loop_free_categorical": False,
            "strongly_loop_free_algebraic": False,
            "steiner_orderable": False,
            "strong_steiner": False,
        },
    )


_BUILDERS = {
    "disk": (_disk, 1),
    "sphere": (_sphere, 1),
    "ordinal": (_ordinal, 1),
    "theta2": (_theta2, None),  # variadic
    "oriental": (_oriental, 1),
    "loop": (_loop, 0),
    "endo2cell": (_endo2cell, 0),
    "square": (_square, 0),
    "forestA": (_forest_a, 0),
}


def names() -> tuple:
    return tuple(sorted(_BUILDERS))


def build(name: str, params=()) -> CatalogEntry:
    """Build a catalog entry by name; integer parameters as documented."""
    try:
        builder, arity = _BUILDERS[name]
    except KeyError:
        raise ValueError(
            "unknown catalog entry %r (known: %s)" % (name, ", ".join(names()))
        ) from None
    params = tuple(params)
    if arity is None:
        return builder(params)
    if len(params) != arity:
        raise ValueError(
            "catalog entry %r takes %d parameter(s), got %d"
            % (name, arity, len(params))
        )
    return builder(*params)
