"""
INTENDED FOR KRONECKER REPRESENTATION USE
Named Kronecker representations and the coefficient quiver builder. A
coefficient quiver lists basis vertices of M_1 (top row) and M_2 (bottom
row) and labelled edges top -> bottom; the representation has entry 1 at
every edge and 0 elsewhere. Vertices are numbered left to right.

Names accepted by make():
    X, Y, S1, S2, P1            the fixed modules
    B:i                         bristle with the single arrow i
    V:i,j                       two-dimensional top, arrows i and j
    I:i                         sigma^i S(1), i <= 10
    R:t                         K(2) regular module of dimension (t, t)
    tree:left, tree:right       (2,2) tree modules that are not elementary
    example:M, example:N        regular modules with several filtrations

copyright October 2026
"""

# pylint: disable=C0103
import dataclasses
import logging
from typing import Tuple

import numpy as np

from pyKronecker import exactalg as ea
from pyKronecker.bgp import sigma_power
from pyKronecker.errors import DomainError
from pyKronecker.rep import KronRep, SubmoduleHandle, quotient, zero_rep

logger = logging.getLogger(__name__)

ALPHA, BETA, GAMMA = 0, 1, 2
MAX_I = 10


@dataclasses.dataclass(frozen=True)
class CoeffQuiverSpec(object):
    """ Vertex counts and (top, bottom, arrow) edges of a picture. """

    n_top: int
    n_bottom: int
    edges: Tuple[Tuple[int, int, int], ...] = ()
    n_arrows: int = 3

    def validate(self):
        if self.n_top < 0 or self.n_bottom < 0:
            raise DomainError('negative vertex count')
        if self.n_arrows not in (2, 3):
            raise DomainError('quiver needs 2 or 3 arrows')
        seen = set()
        for edge in self.edges:
            top, bottom, arrow = edge
            if not (0 <= top < self.n_top and 0 <= bottom < self.n_bottom
                    and 0 <= arrow < self.n_arrows):
                raise DomainError('edge %s out of range' % (edge, ),
                                  edge=list(edge))
            if tuple(edge) in seen:
                raise DomainError('duplicate edge %s' % (edge, ),
                                  edge=list(edge))
            seen.add(tuple(edge))


def from_coeff_quiver(spec, field):
    """ Representation with entry 1 at each edge of the picture. """
    spec.validate()
    mats = np.zeros((spec.n_arrows, spec.n_bottom, spec.n_top),
                    dtype=np.int64)
    for top, bottom, arrow in spec.edges:
        mats[arrow, bottom, top] = 1
    return KronRep(field, spec.n_top, spec.n_bottom,
                   [field.GF(mats[i]) for i in range(spec.n_arrows)])


X_SPEC = CoeffQuiverSpec(2, 2, ((0, 0, ALPHA), (1, 1, ALPHA),
                                (1, 0, BETA), (0, 1, GAMMA)))

# top vertices a, u, v, b; u and v carry a copy of X
Y_SPEC = CoeffQuiverSpec(4, 2, ((1, 0, ALPHA), (2, 1, ALPHA),
                                (2, 0, BETA), (1, 1, GAMMA),
                                (0, 0, GAMMA), (3, 1, BETA)))

P1_SPEC = CoeffQuiverSpec(1, 3, ((0, 0, ALPHA), (0, 1, BETA),
                                 (0, 2, GAMMA)))

TREE_LEFT_SPEC = CoeffQuiverSpec(2, 2, ((0, 0, ALPHA), (1, 0, BETA),
                                        (1, 1, GAMMA)))

TREE_RIGHT_SPEC = CoeffQuiverSpec(2, 2, ((0, 0, ALPHA), (1, 1, ALPHA),
                                         (1, 0, BETA)))

EXAMPLE_M_SPEC = CoeffQuiverSpec(3, 3, ((0, 0, GAMMA), (1, 0, BETA),
                                        (1, 1, ALPHA), (1, 2, GAMMA),
                                        (2, 1, BETA), (2, 2, ALPHA)))

EXAMPLE_N_SPEC = CoeffQuiverSpec(4, 3, ((0, 0, BETA), (1, 0, ALPHA),
                                        (1, 1, BETA), (2, 1, ALPHA),
                                        (2, 2, GAMMA), (3, 1, BETA),
                                        (3, 2, ALPHA)))


def build_X(field):
    """ alpha(a,b) = (a,b), beta(a,b) = (b,0), gamma(a,b) = (0,a). """
    return from_coeff_quiver(X_SPEC, field)


def build_Y(field):
    """ The shift of X, dimension vector (4, 2). """
    return from_coeff_quiver(Y_SPEC, field)


def build_B(field, arrow):
    """ Bristle: the unique indecomposable of length 2 supported on one
    arrow. """
    return from_coeff_quiver(CoeffQuiverSpec(1, 1, ((0, 0, arrow), )),
                             field)


def build_V(field, first, second):
    """ Dimension (2,1), simple socle, annihilated by the third arrow. """
    if first == second:
        raise DomainError('V needs two different arrows')
    return from_coeff_quiver(CoeffQuiverSpec(2, 1, ((0, 0, first),
                                                    (1, 0, second))), field)


def build_S1(field, n=3):
    return zero_rep(field, 1, 0, n)


def build_S2(field, n=3):
    return zero_rep(field, 0, 1, n)


def build_P1(field):
    """ Indecomposable projective at the source, dimension (1, 3). """
    return from_coeff_quiver(P1_SPEC, field)


def build_I(i, field):
    """ sigma^i S(1), the i-th preinjective. """
    if not 0 <= i <= MAX_I:
        raise DomainError('preinjective index %d outside 0..%d' % (i, MAX_I))
    return sigma_power(build_S1(field), i)


def build_bristle_quotient(field, plane):
    """ P(1) / U for a plane U of the arrow space, given by two column
    vectors; every bristle arises this way. """
    plane = field.array(plane)
    if plane.shape != (3, 2) or ea.rank(plane) != 2:
        raise DomainError('expected two independent arrow-space vectors')
    p1 = build_P1(field)
    return quotient(p1, SubmoduleHandle(field.zeros(1, 0), plane))


def build_nonelem_tree(field, variant):
    """ The two (2,2) tree modules that are indecomposable but not
    elementary: 'left' is faithful, 'right' is annihilated by gamma. """
    if variant == 'left':
        return from_coeff_quiver(TREE_LEFT_SPEC, field)
    if variant == 'right':
        return from_coeff_quiver(TREE_RIGHT_SPEC, field)
    raise DomainError('variant must be left or right, got %r' % (variant, ))


def build_example_M(field):
    """ (3,3): factor X over the kernel B(gamma), and factor V(beta,gamma)
    over a (1,2) kernel. """
    return from_coeff_quiver(EXAMPLE_M_SPEC, field)


def build_example_N(field):
    """ (4,3): submodule X with factor V(alpha,beta), and a chain
    B(beta), B(beta), V(alpha,gamma). """
    return from_coeff_quiver(EXAMPLE_N_SPEC, field)


def build_k2_regular_R(t, field):
    """ K(2) module (t, t) with alpha the identity and beta a nilpotent
    Jordan block; its coefficient quiver is a path with 2t vertices. """
    if t < 1:
        raise DomainError('R[t] needs t >= 1')
    edges = [(j, j, 0) for j in range(t)] + \
        [(j + 1, j, 1) for j in range(t - 1)]
    return from_coeff_quiver(CoeffQuiverSpec(t, t, tuple(edges), n_arrows=2),
                             field)


def _ints(text):
    try:
        return [int(v) for v in text.split(',')]
    except ValueError:
        raise DomainError('bad parameters %r' % (text, ))


def _one(args, name):
    if len(args) != 1:
        raise DomainError('%s takes one parameter' % name)
    return args[0]


def _two(args, name):
    if len(args) != 2:
        raise DomainError('%s takes two parameters' % name)
    return args


_FIXED = {
    'X': build_X,
    'Y': build_Y,
    'S1': build_S1,
    'S2': build_S2,
    'P1': build_P1,
    'example:M': build_example_M,
    'example:N': build_example_N,
    'tree:left': lambda field: build_nonelem_tree(field, 'left'),
    'tree:right': lambda field: build_nonelem_tree(field, 'right'),
}

_PARAMETRIC = {
    'B': lambda field, args: build_B(field, _one(args, 'B')),
    'V': lambda field, args: build_V(field, *_two(args, 'V')),
    'I': lambda field, args: build_I(_one(args, 'I'), field),
    'R': lambda field, args: build_k2_regular_R(_one(args, 'R'), field),
}


def zoo_names():
    """ Names understood by make(), parameterised ones in NAME:idx form. """
    return sorted(_FIXED) + ['B:i', 'I:i', 'R:t', 'V:i,j']


def make(name, field):
    """ Build a zoo module by name. """
    if name in _FIXED:
        return _FIXED[name](field)
    head, sep, tail = name.partition(':')
    if sep and head in _PARAMETRIC:
        args = _ints(tail)
        for arg in args:
            if head in ('B', 'V') and not 0 <= arg < 3:
                raise DomainError('arrow index %d outside 0..2' % arg)
        return _PARAMETRIC[head](field, args)
    raise DomainError('unknown zoo name %r' % (name, ), name=name)
