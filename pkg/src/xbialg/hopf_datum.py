"""Hopf data: the fourteen structure morphisms, derived maps and axiom checks.

A Hopf datum lives on two objects ``B1`` and ``B2`` of a braided category
of finite dimensional vector spaces.  Every identity is evaluated exactly
and reported line by line in an :class:`AxiomReport`.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Mapping, Optional

from .diagram_engine import (
    GENERATORS, SIGNATURES, Context, _relabel, diagram, pi_rotate, row_of,
)
from .exact_linear import Mor, SignatureError, Word, compose, identity, tensor

# words B_0 = B1 B2, B_1 = B1, B_2 = B2 used by the grid notation
INDEX_WORDS = {0: "12", 1: "1", 2: "2"}
INDEX_LEN = {0: 2, 1: 1, 2: 1}


class PreflightError(ValueError):
    """Raised by :func:`build_bialgebra` when a datum fails its axioms."""

    def __init__(self, failing):
        self.failing = list(failing)
        super().__init__("preflight failed: " + ", ".join(self.failing))


# ---------------------------------------------------------------- reports


@dataclass(frozen=True)
class ReportLine:
    id: str
    passed: bool
    residual: Optional[tuple] = None      # (row, col, lhs, rhs) as strings

    def __str__(self):
        if self.passed:
            return f"{self.id} PASS"
        i, j, a, b = self.residual
        return f"{self.id} FAIL row={i} col={j} lhs={a} rhs={b}"


@dataclass
class AxiomReport:
    """Ordered identity results; ``str(report)`` gives one line per identity."""

    lines: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(l.passed for l in self.lines)

    def failures(self) -> list:
        return [l for l in self.lines if not l.passed]

    def ids(self) -> list:
        return [l.id for l in self.lines]

    def __getitem__(self, ident: str) -> ReportLine:
        for l in self.lines:
            if l.id == ident:
                return l
        raise KeyError(ident)

    def __contains__(self, ident):
        return any(l.id == ident for l in self.lines)

    def __iter__(self):
        return iter(self.lines)

    def __len__(self):
        return len(self.lines)

    def __add__(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.lines + other.lines)

    def add(self, line: ReportLine):
        self.lines.append(line)

    def __str__(self):
        return "\n".join(str(l) for l in self.lines)


def compare(ident: str, lhs: Mor, rhs: Mor) -> ReportLine:
    """Exact comparison of two morphisms with the same signature."""
    diff = lhs.first_difference(rhs)
    if diff is None:
        return ReportLine(ident, True)
    i, j, a, b = diff
    fs = lhs.field
    return ReportLine(ident, False, (i, j, fs.format_scalar(a), fs.format_scalar(b)))


def compare_all(ident: str, pairs) -> ReportLine:
    """One report line for several equalities; the first failure is reported."""
    for lhs, rhs in pairs:
        line = compare(ident, lhs, rhs)
        if not line.passed:
            return line
    return ReportLine(ident, True)


# ---------------------------------------------------------------- the datum


TRIVIAL_FORMS = {
    "mul": ("21", ["e |"]),
    "mur": ("21", ["| e"]),
    "nul": ("1", ["u2 |"]),
    "nur": ("2", ["| u1"]),
    "sigma": ("22", ["e e", "u1"]),
    "rho": ("2", ["e", "u1 u1"]),
}

DERIVED_ROWS = {
    "phi12": ("12", ["ld rd", "| x |", "m m"]),
    "phi21": ("21", ["d d", "| x |", "lu ru"]),
    "phi11": ("11", ["ld |", "| x", "lu |"]),
    "phi22": ("22", ["| rd", "x |", "| ru"]),
    "sighat": ("22", ["d d", "| | rd |", "| x | |", "s ru |", "| m"]),
    "rhohat": ("12", ["d r", "| ld | |", "| | x |", "| lu | |", "m m"]),
}


class HopfDatum:
    """The fourteen structure morphisms of a Hopf datum over a :class:`Context`.

    ``morphisms`` maps each name of :data:`GENERATORS` to a :class:`Mor`
    whose signature must match the standard one (e.g. ``mul: B2 B1 -> B1``).
    """

    def __init__(self, ctx: Context, morphisms: Mapping, name: str = None):
        missing = [g for g in GENERATORS if g not in morphisms]
        extra = [g for g in morphisms if g not in GENERATORS]
        if missing or extra:
            raise ValueError(f"missing morphisms {missing}, unknown {extra}")
        self.ctx = ctx
        self.name = name
        self._m = {}
        for g in GENERATORS:
            f = morphisms[g]
            dom, cod = (ctx.word(w) for w in SIGNATURES[g])
            if f.dom.letters != dom.letters or f.cod.letters != cod.letters:
                raise SignatureError(f"{g} must be {dom} -> {cod}, got {f.dom} -> {f.cod}")
            if f.dom.dims != dom.dims or f.cod.dims != cod.dims:
                raise SignatureError(f"{g}: dimensions {f.dom}->{f.cod} do not match context")
            if f.field != ctx.field:
                raise SignatureError(f"{g} is over {f.field}, context over {ctx.field}")
            self._m[g] = f
        self._cache = {}

    @property
    def field(self):
        return self.ctx.field

    @property
    def dims(self):
        return self.ctx.dims

    @property
    def morphisms(self) -> dict:
        return dict(self._m)

    def morphism(self, name: str) -> Mor:
        if name in self._m:
            return self._m[name]
        hit = self._cache.get(name)
        if hit is None:
            if name in DERIVED_ROWS:
                dom, rows = DERIVED_ROWS[name]
                hit = diagram(self, dom, *rows)
            elif name in ("m_B", "d_B"):
                hit = cross_product_maps(self)[0 if name == "m_B" else 1]
            else:
                raise KeyError(f"unknown morphism {name!r}")
            self._cache[name] = hit
        return hit

    __getitem__ = morphism

    def replace(self, name: str = None, **changes) -> "HopfDatum":
        m = dict(self._m)
        m.update(changes)
        return HopfDatum(self.ctx, m, name=name if name is not None else self.name)

    def __eq__(self, other):
        return (isinstance(other, HopfDatum) and self.ctx == other.ctx
                and all(self._m[g] == other._m[g] for g in GENERATORS))

    def __hash__(self):
        return hash(tuple(self._m[g] for g in GENERATORS))

    def first_difference(self, other: "HopfDatum"):
        """``(name, row, col, mine, theirs)`` for the first differing generator."""
        for g in GENERATORS:
            d = self._m[g].first_difference(other._m[g])
            if d is not None:
                return (g,) + d
        return None

    def is_trivial(self, name: str) -> bool:
        dom, rows = TRIVIAL_FORMS[name]
        return self._m[name] == diagram(self, dom, *rows)

    @property
    def derived(self) -> "DerivedMorphisms":
        hit = self._cache.get("_derived")
        if hit is None:
            hit = self._cache["_derived"] = derived_morphisms(self)
        return hit

    @property
    def artifacts(self):
        hit = self._cache.get("_artifacts")
        if hit is None:
            from .proof_replay import ProofArtifacts
            hit = self._cache["_artifacts"] = ProofArtifacts(self)
        return hit

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return (f"HopfDatum{tag}(dims B1={self.dims['B1']}, B2={self.dims['B2']}, "
                f"{self.field}, braiding={self.ctx.braiding.kind})")


def check_signatures(d: HopfDatum) -> None:
    """Raise unless every generator has its standard signature (done on construction)."""
    HopfDatum(d.ctx, d.morphisms)


# ---------------------------------------------------------------- derived maps


@dataclass
class DerivedMorphisms:
    phi12: Mor
    phi21: Mor
    sighat: Mor
    rhohat: Mor
    phi11: Mor
    phi22: Mor
    m_grid: dict          # (i, j, k) -> m_{i,jk}: B_j B_k -> B_i
    d_grid: dict          # (i, j, k) -> Delta_{ij,k}: B_k -> B_i B_j
    m_star: dict          # (l, m) -> m*_{l,2m}: B2 B_m -> B_l
    d_star: dict          # (l, m) -> Delta*_{l1,m}: B_m -> B_l B1


INJ = {0: "| |", 1: "I1", 2: "I2"}
PROJ = {0: "| |", 1: "P1", 2: "P2"}


def grid_env(d: HopfDatum) -> dict:
    """Boxes for the unit/counit insertions ``inj_i`` and ``proj_i``."""
    hit = d._cache.get("_grid_env")
    if hit is None:
        hit = {
            "I1": diagram(d, "1", "| u2"), "I2": diagram(d, "2", "u1 |"),
            "P1": diagram(d, "12", "| e"), "P2": diagram(d, "12", "e |"),
        }
        d._cache["_grid_env"] = hit
    return hit


def cross_product_maps(d: HopfDatum):
    """``(m_B, Delta_B)`` on ``B = B1 B2`` for a strong datum."""
    m = diagram(d, "1212", "| p21 |", "m sh", "m |")
    dl = diagram(d, "12", "| d", "rh d", "| p12 |")
    return m, dl


def grid_m(d: HopfDatum, i: int, j: int, k: int) -> Mor:
    key = ("m", i, j, k)
    hit = d._cache.get(key)
    if hit is None:
        env = dict(grid_env(d), MB=d.morphism("m_B"))
        hit = diagram(d, INDEX_WORDS[j] + INDEX_WORDS[k],
                      row_of(INJ[j], INJ[k]), "MB", PROJ[i], env=env)
        d._cache[key] = hit
    return hit


def grid_d(d: HopfDatum, i: int, j: int, k: int) -> Mor:
    key = ("d", i, j, k)
    hit = d._cache.get(key)
    if hit is None:
        env = dict(grid_env(d), DB=d.morphism("d_B"))
        hit = diagram(d, INDEX_WORDS[k], INJ[k], "DB", row_of(PROJ[i], PROJ[j]), env=env)
        d._cache[key] = hit
    return hit


def grid_m_star(d: HopfDatum, l: int, m: int) -> Mor:
    key = ("m*", l, m)
    hit = d._cache.get(key)
    if hit is None:
        ms = diagram(d, "212", "ru |", "sh")
        env = dict(grid_env(d), MS=ms)
        hit = diagram(d, "2" + INDEX_WORDS[m], row_of(1, INJ[m]), "MS", PROJ[l], env=env)
        d._cache[key] = hit
    return hit


def grid_d_star(d: HopfDatum, l: int, m: int) -> Mor:
    key = ("d*", l, m)
    hit = d._cache.get(key)
    if hit is None:
        ds = diagram(d, "12", "rh", "| ld")
        env = dict(grid_env(d), DS=ds)
        hit = diagram(d, INDEX_WORDS[m], INJ[m], "DS", row_of(PROJ[l], 1), env=env)
        d._cache[key] = hit
    return hit


def derived_morphisms(d: HopfDatum) -> DerivedMorphisms:
    r = range(3)
    return DerivedMorphisms(
        phi12=d.morphism("phi12"), phi21=d.morphism("phi21"),
        sighat=d.morphism("sighat"), rhohat=d.morphism("rhohat"),
        phi11=d.morphism("phi11"), phi22=d.morphism("phi22"),
        m_grid={(i, j, k): grid_m(d, i, j, k) for i in r for j in r for k in r},
        d_grid={(i, j, k): grid_d(d, i, j, k) for i in r for j in r for k in r},
        m_star={(l, m): grid_m_star(d, l, m) for l in r for m in r},
        d_star={(l, m): grid_d_star(d, l, m) for l in r for m in r},
    )


# ---------------------------------------------------------------- identity tables

# (id, domain, lhs rows, rhs rows); an empty row list is the identity

COUNITAL = [
    ("hp1.d1-unit", "", ["u1", "d"], ["u1 u1"]),
    ("hp1.d1-counit-right", "1", ["d", "| e"], []),
    ("hp1.d1-counit-left", "1", ["d", "e |"], []),
    ("hp1.m2-counit", "22", ["m", "e"], ["e e"]),
    ("hp1.m2-unit-right", "2", ["| u2", "m"], []),
    ("hp1.m2-unit-left", "2", ["u2 |", "m"], []),
    ("hp1.mur-unit-left", "1", ["u2 |", "ru"], ["e", "u2"]),
    ("hp1.mur-counit", "21", ["ru", "e"], ["e e"]),
    ("hp1.nul-counit-right", "1", ["ld", "| e"], ["e", "u2"]),
    ("hp1.nul-unit", "", ["u1", "ld"], ["u2 u1"]),
    ("hp1.mul-unit-left", "1", ["u2 |", "lu"], []),
    ("hp1.mul-unit-right", "2", ["| u1", "lu"], ["e", "u1"]),
    ("hp1.mul-counit", "21", ["lu", "e"], ["e e"]),
    ("hp1.nur-counit-right", "2", ["rd", "| e"], []),
    ("hp1.nur-counit-left", "2", ["rd", "e |"], ["e", "u1"]),
    ("hp1.nur-unit", "", ["u2", "rd"], ["u2 u1"]),
    ("hp1.sigma-unit-left", "2", ["u2 |", "s"], ["e", "u1"]),
    ("hp1.sigma-unit-right", "2", ["| u2", "s"], ["e", "u1"]),
    ("hp1.sigma-counit", "22", ["s", "e"], ["e e"]),
    ("hp1.rho-counit-right", "2", ["r", "| e"], ["e", "u1"]),
    ("hp1.rho-counit-left", "2", ["r", "e |"], ["e", "u1"]),
    ("hp1.rho-unit", "", ["u2", "r"], ["u1 u1"]),
    ("hp.b1-algebra.assoc", "111", ["m |", "m"], ["| m", "m"]),
    ("hp.b1-algebra.unit-left", "1", ["u1 |", "m"], []),
    ("hp.b1-algebra.unit-right", "1", ["| u1", "m"], []),
    ("hp.eps1-algebra-map.mult", "11", ["m", "e"], ["e e"]),
    ("hp.eps1-algebra-map.unit", "", ["u1", "e"], []),
    ("hp.b2-coalgebra.coassoc", "2", ["d", "d |"], ["d", "| d"]),
    ("hp.b2-coalgebra.counit-left", "2", ["d", "e |"], []),
    ("hp.b2-coalgebra.counit-right", "2", ["d", "| e"], []),
    ("hp.eta2-coalgebra-map.comult", "", ["u2", "d"], ["u2 u2"]),
    ("hp.eta2-coalgebra-map.counit", "", ["u2", "e"], []),
    ("hp.nul-comodule.coassoc", "1", ["ld", "| ld"], ["ld", "d |"]),
    ("hp.nul-comodule.counit", "1", ["ld", "e |"], []),
    ("hp.mur-module.assoc", "211", ["ru |", "ru"], ["| m", "ru"]),
    ("hp.mur-module.unit", "2", ["| u1", "ru"], []),
]

COMPATIBILITIES = [
    ("hp.weak-assoc-m2", "222", ["m |", "m"], ["| sh", "ru |", "m"]),
    ("hp.weak-coassoc-d1", "1", ["d", "| d"], ["d", "| ld", "rh |"]),
    ("hp.weak-assoc-mul", "221", ["sh |", "| lu", "m"], ["| p21", "p21 |", "| s", "m"]),
    ("hp.weak-coassoc-nur", "2", ["d", "rd |", "| rh"], ["d", "r |", "| p12", "p12 |"]),
    ("hp.module-algebra.1", "211", ["| m", "lu"], ["p21 |", "| lu", "m"]),
    ("hp.module-algebra.2", "221", ["m |", "ru"], ["| p21", "ru |", "m"]),
    ("hp.comodule-coalgebra.1", "1", ["ld", "| d"], ["d", "| ld", "p12 |"]),
    ("hp.comodule-coalgebra.2", "2", ["rd", "d |"], ["d", "rd |", "| p12"]),
    ("hp.cocycle", "222", ["sh |", "| s", "m"], ["| sh", "p21 |", "| s", "m"]),
    ("hp.cycle", "2", ["d", "r |", "| rh"], ["d", "r |", "| p12", "rh |"]),
    ("hp.algebra-coalgebra.1", "11", ["m", "d"],
     ["d d", "| ld | |", "| | x |", "| lu | |", "m m"]),
    ("hp.algebra-coalgebra.2", "22", ["m", "d"],
     ["d d", "| | rd |", "| x | |", "| | ru |", "m m"]),
    ("hp.module-coalgebra.1", "21", ["p21", "rh"],
     ["d d", "r d | ld", "| p12 x | |", "| | x x |", "| p21 x | |", "m s | lu", "m m"]),
    ("hp.module-coalgebra.2", "21", ["ru", "d"], ["d d", "| x ld", "ru x |", "m ru"]),
    ("hp.comodule-algebra.1", "11", ["m", "ld"], ["ld d", "| x ld", "ru x |", "m m"]),
    ("hp.comodule-algebra.2", "22", ["sh", "p12"],
     ["d d", "rd | r d", "| | x p12 |", "| x x | |", "| | x p21 |", "ru | m s", "m m"]),
    ("hp.module-comodule", "21", ["p21", "p12"], ["d d", "rd x ld", "| x x |", "ru x lu", "m m"]),
    ("hp.cycle-cocycle", "22", ["sh", "rh"],
     ["d d", "r d r d", "| p12 x p12 |", "| | x x | |", "| p21 x p21 |", "m s m s", "m m"]),
]

STRONG = [
    ("strong.act-coact-triv.1", "11", ["ld |", "| x", "ru |"], ["ld e"]),
    ("strong.act-coact-triv.2", "21", ["| ld", "x |", "| ru"], ["u2 ru"]),
    ("strong.cocycle-triv1.1", "12", ["ld |", "rd x", "| x |", "s | |"], ["u1 u1 | e"]),
    ("strong.cocycle-triv1.2", "222", ["| | r", "| x |", "x lu", "| ru"], ["u1 | e e"]),
    ("strong.cocycle-triv1.3", "21", ["| ld", "s |"], ["e |", "u1 |"]),
    ("strong.cocycle-triv1.4", "22", ["| r", "ru |"], ["| e", "| u1"]),
    ("strong.combo.left", "212",
     ["| | r", "| | d |", "| x | |", "| | ld | |", "x | x |", "| | lu | |", "| ru | |"],
     ["| | r", "| | d |", "| x | |", "x x |", "| ru | |"]),
    ("strong.combo.right", "2212",
     ["| | ld |", "| | rd | |", "| x | x", "| | ru | |", "| | x |", "| m | |", "s | |"],
     ["| | ld |", "| x x", "| | x |", "| m | |", "s | |"]),
]

FACTORIZATION = [
    ("fact.alg.1", "1", ["u2 |", "p21"], ["| u2"]),
    ("fact.alg.2", "2", ["| u1", "p21"], ["u1 |"]),
    ("fact.alg.3", "2", ["u2 |", "sh"], ["u1 |"]),
    ("fact.alg.4", "2", ["| u2", "sh"], ["u1 |"]),
    ("fact.alg.5", "211", ["| m", "p21"], ["p21 |", "| p21", "m |"]),
    ("fact.alg.6", "222", ["| sh", "p21 |", "| sh", "m |"], ["sh |", "| sh", "m |"]),
    ("fact.alg.7", "221", ["| p21", "p21 |", "| sh", "m |"], ["sh |", "| p21", "m |"]),
    ("fact.coalg.1", "12", ["p12", "| e"], ["e |"]),
    ("fact.coalg.2", "12", ["p12", "e |"], ["| e"]),
    ("fact.coalg.3", "12", ["rh", "| e"], ["| e"]),
    ("fact.coalg.4", "12", ["rh", "e |"], ["| e"]),
    ("fact.coalg.5", "12", ["p12", "d |"], ["| d", "p12 |", "| p12"]),
    ("fact.coalg.6", "12", ["| d", "rh |", "| p12", "rh |"], ["| d", "rh |", "| rh"]),
    ("fact.coalg.7", "12", ["| d", "rh |", "| p12", "p12 |"], ["| d", "p12 |", "| rh"]),
]


def run_table(d: HopfDatum, table, env: Mapping = None) -> AxiomReport:
    """Evaluate ``(id, dom, lhs rows, rhs rows)`` entries or ``(id, callable)`` pairs."""
    rep = AxiomReport()
    for entry in table:
        if len(entry) == 2:
            ident, fn = entry
            out = fn(d)
            if isinstance(out, list):
                rep.add(compare_all(ident, out))
            else:
                rep.add(compare(ident, *out))
            continue
        ident, dom, lhs, rhs = entry
        rep.add(compare(ident, diagram(d, dom, *lhs, env=env), diagram(d, dom, *rhs, env=env)))
    return rep


# ---------------------------------------------------------------- checkers


def check_naturality(d: HopfDatum) -> AxiomReport:
    """The braiding is natural with respect to all fourteen generators."""
    ctx = d.ctx
    rep = AxiomReport()
    for g in GENERATORS:
        f = d.morphism(g)
        pairs = []
        for letter in ("B1", "B2"):
            x = ctx.word(letter)
            ix = identity(x, ctx.field)
            pairs.append((compose(ctx.braid(x, f.cod), tensor(ix, f)),
                          compose(tensor(f, ix), ctx.braid(x, f.dom))))
            pairs.append((compose(ctx.braid(f.cod, x), tensor(f, ix)),
                          compose(tensor(ix, f), ctx.braid(f.dom, x))))
        rep.add(compare_all(f"nat.{g}", pairs))
    return rep


def check_counital(d: HopfDatum) -> AxiomReport:
    """(Co)unit identities plus the algebra, coalgebra, module and comodule laws."""
    return run_table(d, COUNITAL)


def check_compatibilities(d: HopfDatum) -> AxiomReport:
    """The eighteen compatibility diagrams between the structure morphisms."""
    return run_table(d, COMPATIBILITIES)


def check_strong(d: HopfDatum) -> AxiomReport:
    """The additional identities making a Hopf datum strong."""
    return run_table(d, STRONG)


def check_factorization_axioms(d: HopfDatum) -> AxiomReport:
    """Unit, associativity and twisting conditions for (phi21, sighat) and dually."""
    return run_table(d, FACTORIZATION)


def check_all(d: HopfDatum) -> AxiomReport:
    """Preflight order: naturality, counital, compatibilities, strong."""
    return check_naturality(d) + check_counital(d) + check_compatibilities(d) + check_strong(d)


# ---------------------------------------------------------------- construction


def build_bialgebra(d: HopfDatum, override: bool = False):
    """The cross product bialgebra on ``B1 B2``.

    Runs the full preflight first; failing data raise :class:`PreflightError`
    unless ``override`` is set, in which case the result is marked unverified.
    """
    from .universal import Bialgebra

    rep = check_all(d)
    if not rep.passed and not override:
        raise PreflightError(l.id for l in rep.failures())
    m, dl = d.morphism("m_B"), d.morphism("d_B")
    eta = diagram(d, "", "u1 u2")
    eps = diagram(d, "12", "e e")
    return Bialgebra(d.ctx, d.ctx.word("12"), m, eta, dl, eps,
                     verified=rep.passed, name=d.name)


# ---------------------------------------------------------------- pi symmetry

PI_PARTNER = {
    "m1": "d2", "eta1": "eps2", "d1": "m2", "eps1": "eta2",
    "m2": "d1", "eta2": "eps1", "d2": "m1", "eps2": "eta1",
    "mul": "nur", "mur": "nul", "nul": "mur", "nur": "mul",
    "sigma": "rho", "rho": "sigma",
}


def pi_dual(d: HopfDatum) -> HopfDatum:
    """The datum obtained by rotating every diagram by pi and exchanging B1, B2."""
    ctx = d.ctx
    if not ctx.is_symmetric():
        raise ValueError("pi_dual needs a symmetric braiding")
    sw = {"B1": "B2", "B2": "B1"}
    new = {g: _relabel(pi_rotate(d.morphism(PI_PARTNER[g])), sw) for g in GENERATORS}
    name = None
    if d.name:
        name = d.name[:-3] if d.name.endswith("^pi") else d.name + "^pi"
    return HopfDatum(ctx.swapped(), new, name=name)


def pi_counterpart(check: Callable) -> Callable:
    """``d -> check(pi_dual(d))``: the pi-rotated version of a checker."""
    def run(d):
        return check(pi_dual(d))
    return run
