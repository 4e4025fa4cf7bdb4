"""Built-in example data and a generator of random counital perturbations."""
from __future__ import annotations

import random

from .diagram_engine import Braiding, Context, diagram
from .exact_linear import QQ, FieldSpec, Mor, Word, compose, identity, tensor_all
from .hopf_datum import TRIVIAL_FORMS, HopfDatum


def cyclic_group_algebra(ctx: Context, letter: str) -> dict:
    """``m, eta, d, eps`` of the group algebra of Z_n on the basis g^0..g^{n-1}."""
    n = ctx.dims[letter]
    x = ctx.word(letter)
    f = ctx.field
    return {
        "m": Mor.from_function(x + x, x, lambda j: {(j // n + j % n) % n: 1}, f),
        "eta": Mor(Word(), x, {0: {0: 1}}, f),
        "d": Mor.from_function(x, x + x, lambda j: {j * n + j: 1}, f),
        "eps": Mor(x, Word(), {j: {0: 1} for j in range(n)}, f),
    }


def dual_numbers(ctx: Context, letter: str) -> dict:
    """span{1, x} with x^2 = 0 and x primitive."""
    x = ctx.word(letter)
    f = ctx.field
    return {
        "m": Mor(x + x, x, {0: {0: 1}, 1: {1: 1}, 2: {1: 1}}, f),
        "eta": Mor(Word(), x, {0: {0: 1}}, f),
        "d": Mor(x, x + x, {0: {0: 1}, 1: {2: 1, 1: 1}}, f),
        "eps": Mor(x, Word(), {0: {0: 1}}, f),
    }


class _Stub:
    """Just enough of a datum to evaluate the trivial forms."""

    def __init__(self, ctx, m):
        self.ctx, self._m = ctx, m

    def morphism(self, name):
        return self._m[name]


def trivial_datum(ctx: Context, b1: dict, b2: dict, name: str = None, **overrides) -> HopfDatum:
    """The datum with trivial actions, coactions, cocycle and cycle.

    ``b1``/``b2`` give ``m, eta, d, eps``; keyword arguments replace any of
    the fourteen morphisms.
    """
    m = {k + "1": v for k, v in b1.items()}
    m.update({k + "2": v for k, v in b2.items()})
    stub = _Stub(ctx, m)
    for g, (dom, rows) in TRIVIAL_FORMS.items():
        m[g] = diagram(stub, dom, *rows)
    m.update(overrides)
    return HopfDatum(ctx, m, name=name)


def _flip_ctx(n1, n2, field=QQ):
    return Context(field, {"B1": n1, "B2": n2}, Braiding("flip"))


def example_triv(field: FieldSpec = QQ) -> HopfDatum:
    ctx = _flip_ctx(2, 2, field)
    return trivial_datum(ctx, cyclic_group_algebra(ctx, "B1"), cyclic_group_algebra(ctx, "B2"),
                         name="triv")


def example_s3(field: FieldSpec = QQ) -> HopfDatum:
    ctx = _flip_ctx(3, 2, field)
    w21 = ctx.word("21")
    # g^k . c^i = c^{(-1)^k i}
    mul = Mor.from_function(w21, ctx.word("1"),
                            lambda j: {(j % 3) if j < 3 else (-(j % 3)) % 3: 1}, field)
    return trivial_datum(ctx, cyclic_group_algebra(ctx, "B1"), cyclic_group_algebra(ctx, "B2"),
                         name="s3", mul=mul)


def example_z4(field: FieldSpec = QQ) -> HopfDatum:
    ctx = _flip_ctx(2, 2, field)
    # sigma(x^a, x^b) = h^{ab}: the carry of addition modulo 4
    sigma = Mor.from_function(ctx.word("22"), ctx.word("1"),
                              lambda j: {1 if j == 3 else 0: 1}, field)
    return trivial_datum(ctx, cyclic_group_algebra(ctx, "B1"), cyclic_group_algebra(ctx, "B2"),
                         name="z4", sigma=sigma)


def example_sweedler(field: FieldSpec = QQ) -> HopfDatum:
    ctx = _flip_ctx(2, 2, field)
    # basis 1, x of B1 and 1, g of B2; g acts by x -> -x, x coacts to g (x) x
    mul = Mor(ctx.word("21"), ctx.word("1"), {0: {0: 1}, 1: {1: 1}, 2: {0: 1}, 3: {1: -1}}, field)
    nul = Mor(ctx.word("1"), ctx.word("21"), {0: {0: 1}, 1: {3: 1}}, field)
    return trivial_datum(ctx, dual_numbers(ctx, "B1"), cyclic_group_algebra(ctx, "B2"),
                         name="sweedler", mul=mul, nul=nul)


EXAMPLES = {
    "triv": example_triv,
    "s3": example_s3,
    "z4": example_z4,
    "sweedler": example_sweedler,
}

# classification boxes in the order (mu_l, mu_r, sigma, rho, nu_l, nu_r); '*' marks nontrivial
DECLARED_BOXES = {
    "triv": "......",
    "s3": "*.....",
    "z4": "..*...",
    "sweedler": "*...*.",
}


def example(name: str) -> HopfDatum:
    try:
        return EXAMPLES[name]()
    except KeyError:
        raise KeyError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}") from None


# ---------------------------------------------------------------- random data

PERTURBABLE = ("m1", "d1", "m2", "d2", "mul", "mur", "nul", "nur", "sigma", "rho")


def _augmentation_projector(ctx, letter, parts):
    """``id - eta eps`` on one letter; kills the unit and lands in ker(eps)."""
    w = ctx.word(letter)
    return identity(w, ctx.field) - compose(parts["eta"], parts["eps"])


def random_perturbation(d: HopfDatum, name: str, rng: random.Random, scale: int = 2) -> Mor:
    """A random morphism with the signature of ``name`` that vanishes after
    inserting a unit into any input and before applying a counit to any output."""
    ctx = d.ctx
    f = d.morphism(name)
    parts = {
        "B1": {"eta": d.morphism("eta1"), "eps": d.morphism("eps1")},
        "B2": {"eta": d.morphism("eta2"), "eps": d.morphism("eps2")},
    }
    p_in = tensor_all(*(_augmentation_projector(ctx, a, parts[a]) for a in f.dom.letters))
    p_out = tensor_all(*(_augmentation_projector(ctx, a, parts[a]) for a in f.cod.letters))
    cols = {j: {i: rng.randint(-scale, scale) for i in range(f.cod.dim)}
            for j in range(f.dom.dim)}
    x = Mor(f.dom, f.cod, cols, ctx.field)
    return compose(p_out, compose(x, p_in))


def random_datum(field: FieldSpec, rng: random.Random, max_dim: int = 3,
                 max_perturbed: int = 2, braiding: str = "flip") -> HopfDatum:
    """Trivial datum on cyclic group algebras plus counital-preserving noise.

    Each of up to ``max_perturbed`` randomly chosen structure morphisms gets
    a random perturbation from :func:`random_perturbation`; the (co)units
    are never touched, so every unit/counit identity keeps holding.
    """
    n1, n2 = rng.randint(1, max_dim), rng.randint(1, max_dim)
    if braiding == "sign":
        degrees = {"B1": [rng.randint(0, 1) for _ in range(n1)],
                   "B2": [rng.randint(0, 1) for _ in range(n2)]}
        br = Braiding("sign", degrees)
    else:
        br = Braiding("flip")
    ctx = Context(field, {"B1": n1, "B2": n2}, br)
    d = trivial_datum(ctx, cyclic_group_algebra(ctx, "B1"), cyclic_group_algebra(ctx, "B2"),
                      name="random")
    k = rng.randint(0, max_perturbed)
    changes = {}
    for name in rng.sample(PERTURBABLE, k):
        changes[name] = d.morphism(name) + random_perturbation(d, name, rng)
    return d.replace(**changes) if changes else d

