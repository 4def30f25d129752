"""
INTENDED FOR KRONECKER REPRESENTATION USE
Arithmetic on the Grothendieck group K_0 = Z^2 of the Kronecker algebra:
the shift induced by the BGP functors, the duality swap, the Tits form and
its bilinear form, and the reduction of regular dimension vectors into the
fundamental domain {(x, y) : 2x <= 3y, y <= x} of the group generated by the
shift and the duality.

Every function takes the number of arrows n (default 3) where it matters, so
the same code covers K(2) and K(3).

copyright October 2026
"""

# pylint: disable=C0103
import collections
import enum
import logging
from typing import NamedTuple

from pyKronecker.config import resolve
from pyKronecker.errors import DomainError, VerificationError

logger = logging.getLogger(__name__)

SIGMA = 'sigma'
SIGMA_INV = 'sigma_inv'
DELTA = 'delta'

# breadth first search tries the generators in this order
GENERATORS = (SIGMA_INV, DELTA, SIGMA)


class K0Vec(NamedTuple):
    """ Element of K_0 = Z^2; entries may be negative. """
    x: int
    y: int


class DimVec(NamedTuple):
    """ Dimension vector (dim M_1, dim M_2) of a representation. """
    x: int
    y: int


class SigmaType(enum.Enum):
    """ Shift orbit of a regular dimension vector carrying elementary
    modules. """
    BRISTLE = 'bristle'
    X = 'X'


def dim_vec(v):
    """ Validate a pair as a dimension vector. """
    x, y = int(v[0]), int(v[1])
    if x < 0 or y < 0:
        raise DomainError('dimension vector (%d, %d) has a negative entry'
                          % (x, y), dims=[x, y])
    return DimVec(x, y)


def sigma_dim(v, n=3):
    """ Shift (x, y) -> (n x - y, x). """
    return K0Vec(n * v[0] - v[1], v[0])


def sigma_inv_dim(v, n=3):
    """ Inverse shift (x, y) -> (y, n y - x). """
    return K0Vec(v[1], n * v[1] - v[0])


def delta(v):
    return K0Vec(v[1], v[0])


def tits_q(v, n=3):
    """ q(x, y) = x^2 + y^2 - n x y. """
    x, y = v
    return x * x + y * y - n * x * y


def bilinear(d, e, n=3):
    """ <d, e> = d1 e1 + d2 e2 - n d1 e2; equals dim Hom - dim Ext. """
    return d[0] * e[0] + d[1] * e[1] - n * d[0] * e[1]


def hom_lower_bound(d, e, n=3):
    """ dim Hom(N, M) >= <dim N, dim M> for modules of these dims. """
    return max(0, bilinear(d, e, n))


def is_regular_dim(v, n=3):
    """ Regular dimension vectors: q < 0 for K(3); x = y > 0 for K(2). """
    if n == 2:
        return v[0] == v[1] and v[0] > 0
    return tits_q(v, n) < 0


def in_fundamental_domain(v):
    x, y = v
    return 2 * x <= 3 * y and y <= x


def apply_move(v, move, n=3):
    if move == SIGMA:
        return sigma_dim(v, n)
    if move == SIGMA_INV:
        return sigma_inv_dim(v, n)
    if move == DELTA:
        return delta(v)
    raise DomainError('unknown move %r' % (move, ))


def apply_word(v, word, n=3):
    """ Apply the moves of `word` left to right. """
    out = K0Vec(*v)
    for move in word:
        out = apply_move(out, move, n)
    return out


def reduce_to_F(v, config=None):
    """ Breadth first search for a shortest word moving a regular dimension
    vector into the fundamental domain. Returns (vector, word). """

    config = resolve(config)
    v = dim_vec(v)
    if not is_regular_dim(v):
        raise DomainError('(%d, %d) is not a regular dimension vector' % v,
                          dims=list(v))
    if in_fundamental_domain(v):
        return v, []

    seen = set([v])
    queue = collections.deque([(v, [])])
    while queue:
        cur, word = queue.popleft()
        if len(word) >= config.reduce_depth:
            continue
        for move in GENERATORS:
            nxt = apply_move(cur, move)
            if nxt in seen or nxt[0] < 0 or nxt[1] < 0:
                continue
            seen.add(nxt)
            if in_fundamental_domain(nxt):
                logger.debug('reduced %s to %s by %s', v, nxt, word + [move])
                return DimVec(*nxt), word + [move]
            queue.append((nxt, word + [move]))

    raise VerificationError('no reduction of (%d, %d) within depth %d'
                            % (v[0], v[1], config.reduce_depth),
                            dims=list(v), depth=config.reduce_depth)


def sigma_type(v, config=None):
    """ BRISTLE for the orbit of (1,1), X for the orbit of (2,2), else
    None. """
    reduced, _ = reduce_to_F(v, config)
    if reduced == (1, 1):
        return SigmaType.BRISTLE
    if reduced == (2, 2):
        return SigmaType.X
    return None


def exists_elementary_dim(v, n=3):
    """ Elementary modules exist exactly for q(v) in {-1, -4}. """
    return is_regular_dim(v, n) and tits_q(v, n) in (-1, -4)


def preprojective_dims(n=3, max_total=50):
    """ Dimension vectors of the indecomposable preprojectives, starting
    with the simple projective (0, 1). """
    out = []
    v = K0Vec(0, 1)
    while v[0] + v[1] <= max_total:
        out.append(DimVec(*v))
        v = sigma_inv_dim(v, n)
    return out


def preinjective_dims(n=3, max_total=50):
    """ Dimension vectors of the indecomposable preinjectives, starting
    with the simple injective (1, 0). """
    out = []
    v = K0Vec(1, 0)
    while v[0] + v[1] <= max_total:
        out.append(DimVec(*v))
        v = sigma_dim(v, n)
    return out


def k2_dim_class(v):
    """ Class of an indecomposable K(2) dimension vector: 'preprojective'
    for (x, x+1), 'preinjective' for (x+1, x), 'regular' for (x, x), else
    None. """
    x, y = v
    if y == x + 1:
        return 'preprojective'
    if x == y + 1:
        return 'preinjective'
    if x == y and x > 0:
        return 'regular'
    return None
