"""Seeded random elements shared by the test modules."""

import random

from scaffoldkit.diagram import TensorElem
from scaffoldkit.groupalg import GroupAlgebraElem
from scaffoldkit.series import TruncatedSeries


def random_series(F, rng, lo=-3, hi=3, density=0.5):
    return TruncatedSeries.from_dict(F, {k: rng.randrange(1, F.q) for k in range(lo, hi) if rng.random() < density})


def random_element(ext, rng, lo=-3, hi=3, density=0.5):
    return ext.element([random_series(ext.F, rng, lo, hi, density) for _ in range(ext.P)])


def random_xi(ext, rng, support=None, lo=-2, hi=2):
    """A nonzero element of K[G] with Laurent polynomial coefficients."""
    G = ext.group()
    while True:
        k = support or rng.randint(1, len(G))
        coeffs = {s: random_series(ext.F, rng, lo, hi, 0.6) for s in rng.sample(G, k)}
        xi = GroupAlgebraElem(ext, coeffs)
        if not xi.is_zero():
            return xi


def random_tensor(ext, rng, terms=2, lo=-1, hi=2):
    return TensorElem(ext, [(random_element(ext, rng, lo, hi, 0.4), random_element(ext, rng, lo, hi, 0.4))
                            for _ in range(terms)])


def rng_for(*key):
    return random.Random(repr(key))
