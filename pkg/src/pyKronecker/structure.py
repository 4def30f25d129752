"""
INTENDED FOR KRONECKER REPRESENTATION USE
Submodule structure of Kronecker representations: exhaustive submodule
enumeration, the submodule criterion for elementary modules, witnesses of
non-elementarity, elementary filtrations, the search for a (1,2)
submodule, the constructive normal forms of the (2,2) modules, the K(2)
restriction profile and the check of the exact sequence
0 -> X -> sigma^t X -> sum_{i<t} (sigma^i S(1))^2 -> 0.

copyright October 2026
"""

# pylint: disable=C0103
import dataclasses
import logging
from typing import List, Optional

import numpy as np

from pyKronecker import exactalg as ea
from pyKronecker.bgp import is_preinjective, is_preprojective, \
     is_regular_rep, preinjective_multiplicities, sigma_power
from pyKronecker.config import resolve
from pyKronecker.errors import DomainError, RefusalError, refuse
from pyKronecker.k0 import DimVec, sigma_dim
from pyKronecker.rep import KronRep, SubmoduleHandle, arrow_change, \
     arrow_image, base_change, direct_sum, faithful_annihilator, \
     find_isomorphism, hom_space, is_indecomposable, is_submodule, \
     lift_sub, quotient, quotient_maps, restrict_k2, end_dim, sub_generated, \
     sub_rep, subquotient, whole, zero_sub
from pyKronecker.zoo import build_I, build_X

logger = logging.getLogger(__name__)


# ---------------------------------
# Submodules
# ---------------------------------

def enumerate_submodules(M, config=None):
    """ Every arrow-closed pair (U_1, U_2) exactly once: for each U_1, every
    U_2 containing the arrow image W of U_1, built as W plus a subspace of
    an echelon complement of W. """
    config = resolve(config)
    field = M.field
    for space in (M.d1, M.d2):
        if field.q**space > config.subspace_bound:
            refuse('submodule enumeration over F_%d^%d' % (field.q, space),
                   field.q**space, config.subspace_bound)

    for u1 in ea.enumerate_subspaces(M.d1, field, config):
        image = arrow_image(M, u1)
        comp = ea.complement_basis(image, M.d2)
        for extra in ea.enumerate_subspaces(comp.shape[1], field, config):
            u2 = ea.hstack(field, [image, ea.matmul(comp, extra)])
            yield SubmoduleHandle(u1, u2)


def _proper_nonzero(M, U):
    dims = U.dims
    return 0 < dims[0] + dims[1] < M.total


def _check_elementary_domain(M):
    if M.is_zero():
        raise DomainError('elementarity is defined for non-zero modules')
    if not is_regular_rep(M):
        raise DomainError('elementarity is defined for regular modules',
                          dims=list(M.dims))


def is_elementary(M, config=None):
    """ Every submodule U is preprojective or has preinjective factor
    M / U. """
    config = resolve(config)
    _check_elementary_domain(M)
    for U in enumerate_submodules(M, config):
        if not _proper_nonzero(M, U):
            continue
        if is_preprojective(sub_rep(M, U)):
            continue
        if is_preinjective(quotient(M, U)):
            continue
        logger.debug('submodule %s breaks elementarity of %r', U, M)
        return False
    return True


def nonelementarity_witness(M, config=None):
    """ A submodule U with U and M / U both non-zero and regular, as
    (U, M / U), or None. """
    config = resolve(config)
    _check_elementary_domain(M)
    for U in enumerate_submodules(M, config):
        if not _proper_nonzero(M, U):
            continue
        if not is_regular_rep(sub_rep(M, U)):
            continue
        factor = quotient(M, U)
        if is_regular_rep(factor):
            return U, factor
    return None


# ---------------------------------
# Filtrations
# ---------------------------------

@dataclasses.dataclass
class FiltrationChain(object):
    """ 0 = U_0 < U_1 < ... < U_r = M with the factors U_k / U_{k-1}. """

    subs: List[SubmoduleHandle]
    factors: List[KronRep]

    def factor_dims(self):
        return [tuple(f.dims) for f in self.factors]

    def to_dict(self):
        return {'subs': [list(s.dims) for s in self.subs],
                'factors': [f.to_dict() for f in self.factors]}


def _elementary_candidates(Q, config):
    """ Proper non-zero elementary submodules of Q with regular factor,
    ordered by (dim U_1, dim U_2, canonical key). """
    found = []
    for V in enumerate_submodules(Q, config):
        if not _proper_nonzero(Q, V):
            continue
        sub = sub_rep(Q, V)
        if not is_regular_rep(sub) or not is_regular_rep(quotient(Q, V)):
            continue
        found.append((V.sort_key(), V, sub))
    found.sort(key=lambda item: item[0])
    return found


STRATEGIES = ('min_sub', 'max_sub')


def elementary_filtration(M, strategy='min_sub', config=None):
    """ Filtration of a regular module with elementary factors. min_sub
    takes the smallest elementary regular submodule with regular factor at
    each step, max_sub the largest proper one. """
    config = resolve(config)
    if strategy not in STRATEGIES:
        raise DomainError('unknown strategy %r' % (strategy, ))
    _check_elementary_domain(M)

    current = zero_sub(M)
    subs = [current]
    factors = []
    while True:
        Q, (c1, c2) = quotient_maps(M, current)
        if is_elementary(Q, config):
            factors.append(Q)
            subs.append(whole(M))
            break
        candidates = _elementary_candidates(Q, config)
        if strategy == 'max_sub':
            candidates.reverse()
        chosen = None
        for _, V, sub in candidates:
            if is_elementary(sub, config):
                chosen = V, sub
                break
        if chosen is None:
            raise DomainError('regular module without elementary submodule '
                              'of regular factor', dims=list(Q.dims))
        V, sub = chosen
        factors.append(sub)
        current = lift_sub(current, c1, c2, V)
        subs.append(current)
        logger.debug('filtration step %s', tuple(current.dims))
    return FiltrationChain(subs, factors)


def filtration_from_generators(M, steps):
    """ Chain generated step by step: step k adds the (top, bottom)
    generator vectors of steps[k]. A final step reaching M is appended when
    the generators do not already span it. """
    subs = [zero_sub(M)]
    tops, bottoms = [], []
    for top, bottom in steps:
        tops.extend(top)
        bottoms.extend(bottom)
        subs.append(sub_generated(M, tops, bottoms))
    if subs[-1].dims != M.dims:
        subs.append(whole(M))
    factors = [subquotient(M, lower, upper)
               for lower, upper in zip(subs[:-1], subs[1:])]
    return FiltrationChain(subs, factors)


def validate_filtration(M, chain, config=None):
    """ Strict chain from 0 to M whose factors are elementary and add up to
    dim M. """
    config = resolve(config)
    if not chain.subs or chain.subs[0].dims != (0, 0):
        return False
    if chain.subs[-1].dims != M.dims:
        return False
    for lower, upper in zip(chain.subs[:-1], chain.subs[1:]):
        if sum(upper.dims) <= sum(lower.dims):
            return False
        for small, big in ((lower.u1, upper.u1), (lower.u2, upper.u2)):
            if small.shape[1] and ea.solve(big, small) is None:
                return False
        if not is_submodule(M, upper.u1, upper.u2):
            return False
    total = [0, 0]
    for factor in chain.factors:
        if factor.is_zero() or not is_regular_rep(factor):
            return False
        if not is_elementary(factor, config):
            return False
        total[0] += factor.d1
        total[1] += factor.d2
    return tuple(total) == tuple(M.dims)


# ---------------------------------
# Annihilators of elements
# ---------------------------------

def element_annihilator(M, m):
    """ Columns span {c : sum_i c_i M_i m = 0} for m in M_1. """
    m = m.reshape(-1, 1)
    images = ea.hstack(M.field, [ea.matmul(mat, m) for mat in M.mats])
    return ea.canonical_basis(ea.kernel_basis(images))


def find_u12(M, config=None):
    """ A submodule of dimension vector (1, 2): the submodule generated by a
    non-zero m in M_1 killed by some arrow, padded inside M_2. None when no
    such pair (m, arrow) exists over the field. """
    config = resolve(config)
    if M.n_arrows != 3:
        raise DomainError('find_u12 needs a K(3) representation')
    x, y = M.dims
    if not 2 <= y <= x + 1:
        raise DomainError('find_u12 needs 2 <= y <= x + 1, got (%d, %d)'
                          % (x, y))
    field = M.field
    points = ea.projective_points(M.d1, field)
    for i in range(points.shape[0]):
        m = points[i].reshape(-1, 1)
        if element_annihilator(M, m).shape[1] == 0:
            continue
        gen = sub_generated(M, top=m)
        image = gen.u2
        pad = ea.complement_basis(image, M.d2)[:, :2 - image.shape[1]]
        handle = SubmoduleHandle(gen.u1, ea.hstack(field, [image, pad]))
        logger.debug('(1,2) submodule from %s', ea.to_ints(m).ravel())
        return handle
    logger.info('no element of M_1 is killed by an arrow over %s', field)
    return None


# ---------------------------------
# Normal forms of (2,2) modules
# ---------------------------------

@dataclasses.dataclass
class NormalFormWitness(object):
    """ Arrow change g and bases b1, b2 carrying M onto a fixed picture:
    base_change(arrow_change(M, g), b1, b2) is the picture exactly. """

    variant: str
    g: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    scalars: dict = dataclasses.field(default_factory=dict)

    def reconstruct(self, M):
        return base_change(arrow_change(M, self.g), self.b1, self.b2)

    def to_dict(self):
        return {'variant': self.variant,
                'g': ea.to_ints(self.g).tolist(),
                'b1': ea.to_ints(self.b1).tolist(),
                'b2': ea.to_ints(self.b2).tolist(),
                'scalars': dict((k, int(v)) for k, v in self.scalars.items())}


def _check_22(M, config):
    if M.n_arrows != 3 or M.dims != (2, 2):
        raise DomainError('normal forms are defined for (2,2) K(3) modules')
    if not is_indecomposable(M, config):
        raise DomainError('normal forms need an indecomposable module')


def _rows(field, vectors):
    return field.GF(np.stack([ea.to_ints(v).reshape(-1) for v in vectors]))


def x_normal_form(M, config=None):
    """ Bring an elementary (2,2) module to the X picture: pick u, v in M_1
    with different annihilating arrows b, c, write a(u), a(v) in the basis
    b(v), c(u) of M_2, and correct a by multiples of b and c. None when a
    step has no solution over the field. """
    config = resolve(config)
    _check_22(M, config)
    if not is_elementary(M, config):
        raise DomainError('x_normal_form needs an elementary module')
    field = M.field
    points = ea.projective_points(2, field)

    u = points[0].reshape(-1, 1)
    ann_u = element_annihilator(M, u)
    if ann_u.shape[1] != 1:
        return None
    v = ann_v = None
    for i in range(1, points.shape[0]):
        cand = points[i].reshape(-1, 1)
        ann = element_annihilator(M, cand)
        if ann.shape[1] == 1 and \
           ea.rank(ea.hstack(field, [ann_u, ann])) == 2:
            v, ann_v = cand, ann
            break
    if v is None:
        return None

    b = ann_u[:, 0]
    c = ann_v[:, 0]
    bv = ea.matmul(M.combo(b), v)
    cu = ea.matmul(M.combo(c), u)
    basis2 = ea.hstack(field, [bv, cu])
    if not ea.is_invertible(basis2):
        return None
    a = ea.complement_basis(ea.canonical_basis(ea.hstack(
        field, [ann_u, ann_v])), 3)[:, 0]
    kappa, lam = ea.solve(basis2, ea.matmul(M.combo(a), u)).reshape(-1)
    mu, nu = ea.solve(basis2, ea.matmul(M.combo(a), v)).reshape(-1)
    if int(kappa) == 0 or int(nu) == 0:
        return None

    g = _rows(field, [a - mu * b - lam * c, kappa * b, nu * c])
    b1 = ea.hstack(field, [u, v])
    b2 = ea.hstack(field, [kappa * bv, nu * cu])
    return NormalFormWitness('X', g, b1, b2,
                             {'kappa': kappa, 'nu': nu, 'lambda': lam,
                              'mu': mu})


def _right_form(M, ann):
    field = M.field
    others = ea.complement_basis(ann.reshape(-1, 1), 3)
    s1, s2 = others[:, 0], others[:, 1]
    pts = ea.projective_points(2, field)
    a_vec = None
    for i in range(pts.shape[0]):
        cand = pts[i][0] * s1 + pts[i][1] * s2
        if ea.is_invertible(M.combo(cand)):
            a_vec = cand
            break
    if a_vec is None:
        return None
    b_vec = s2 if ea.rank(_rows(field, [a_vec, s2])) == 2 else s1
    amat = M.combo(a_vec)
    shift = ea.matmul(ea.inverse(amat), M.combo(b_vec))
    ident = field.identity(2)
    for lam in field.elements():
        nil = shift - lam * ident
        if not np.any(ea.to_ints(nil)) or \
           np.any(ea.to_ints(ea.matmul(nil, nil))):
            continue
        col = int(np.flatnonzero(np.any(ea.to_ints(nil) != 0, axis=0))[0])
        v = ident[:, col:col + 1]
        u = ea.matmul(nil, v)
        g = _rows(field, [a_vec, b_vec - lam * a_vec, ann])
        b1 = ea.hstack(field, [u, v])
        b2 = ea.hstack(field, [ea.matmul(amat, u), ea.matmul(amat, v)])
        return NormalFormWitness('right', g, b1, b2, {'lambda': lam})
    return None


def _left_form(M):
    field = M.field
    points = ea.projective_points(2, field)
    u = ann_u = None
    for i in range(points.shape[0]):
        cand = points[i].reshape(-1, 1)
        ann = element_annihilator(M, cand)
        if ann.shape[1] == 2:
            u, ann_u = cand, ann
            break
    if u is None:
        return None

    for i in range(points.shape[0]):
        v = points[i].reshape(-1, 1)
        if ea.rank(ea.hstack(field, [u, v])) != 2:
            continue
        ann_v = element_annihilator(M, v)
        alpha = None
        for j in range(ann_v.shape[1]):
            if not ea.in_span(ann_u, ann_v[:, j]):
                alpha = ann_v[:, j]
                break
        if alpha is None:
            continue
        w1 = ea.matmul(M.combo(alpha), u)
        images = ea.hstack(field, [ea.matmul(M.combo(ann_u[:, j]), v)
                                   for j in range(2)])
        x = ea.solve(images, w1)
        if x is None:
            continue
        beta = x[0] * ann_u[:, 0] + x[1] * ann_u[:, 1]
        for j in range(2):
            gamma = ann_u[:, j]
            if ea.rank(_rows(field, [beta, gamma])) != 2:
                continue
            w2 = ea.matmul(M.combo(gamma), v)
            b2 = ea.hstack(field, [w1, w2])
            if not ea.is_invertible(b2):
                continue
            g = _rows(field, [alpha, beta, gamma])
            b1 = ea.hstack(field, [u, v])
            return NormalFormWitness('left', g, b1, b2)
    return None


def nonelem_normal_form(M, config=None):
    """ (variant, witness) for an indecomposable non-elementary (2,2)
    module: 'right' when some arrow acts as zero, else 'left'. The witness
    is None when the construction needs scalars outside the field. """
    config = resolve(config)
    _check_22(M, config)
    if is_elementary(M, config):
        raise DomainError('nonelem_normal_form needs a non-elementary module')
    ann = faithful_annihilator(M)
    if ann is not None:
        return 'right', _right_form(M, ann)
    return 'left', _left_form(M)


# ---------------------------------
# K(2) restrictions
# ---------------------------------

def k2_restriction_profile(M, config=None):
    """ End dimension of the restriction to every 2-dimensional subspace
    of the arrow space, as ((b1, b2), dim) in subspace enumeration order. """
    config = resolve(config)
    if M.n_arrows != 3:
        raise DomainError('restriction profile needs a K(3) representation')
    profile = []
    for plane in ea.enumerate_subspaces(3, M.field, config):
        if plane.shape[1] != 2:
            continue
        b1, b2 = plane[:, 0], plane[:, 1]
        dim = end_dim(restrict_k2(M, b1, b2))
        profile.append(((tuple(ea.to_ints(b1).tolist()),
                         tuple(ea.to_ints(b2).tolist())), dim))
    return profile


# ---------------------------------
# The exact sequence for sigma^t X
# ---------------------------------

STATED_LABEL = 'sigma^i S(2)'
USED_LABEL = 'sigma^i S(1)'


@dataclasses.dataclass
class SequenceReport(object):
    """ Outcome of the check of 0 -> X -> sigma^t X -> Q -> 0. """

    t: int
    q: int
    hom_dim: int = 0
    injective_found: bool = False
    quotient_dims: Optional[DimVec] = None
    expected_dims: Optional[DimVec] = None
    dimension_identity: bool = False
    preinjective: bool = False
    multiplicities: List[int] = dataclasses.field(default_factory=list)
    isomorphism: str = 'skipped'
    labeling: dict = dataclasses.field(default_factory=lambda: {
        'stated': STATED_LABEL, 'used': USED_LABEL})

    @property
    def status(self):
        """ 'pass', 'fail', or 'inconclusive' when every structural check
        holds but the isomorphism scan was refused. """
        structural = (self.injective_found and self.dimension_identity and
                      self.preinjective and
                      self.multiplicities == [2] * self.t)
        if not structural or self.isomorphism == 'fail':
            return 'fail'
        if self.isomorphism == 'skipped':
            return 'inconclusive'
        return 'pass'

    @property
    def passed(self):
        return self.status == 'pass'

    def to_dict(self):
        out = dataclasses.asdict(self)
        for key in ('quotient_dims', 'expected_dims'):
            if out[key] is not None:
                out[key] = list(out[key])
        out['status'] = self.status
        out['passed'] = self.passed
        return out


def _injective_morphism(hom, config):
    field = hom.source.field
    h = hom.dim
    rng = ea.make_rng(config.seed)

    def injective(pair):
        f1, f2 = pair
        return ea.rank(f1) == f1.shape[1] and ea.rank(f2) == f2.shape[1]

    for _ in range(64):
        pair = hom.combine(rng.integers(0, field.q, size=h))
        if injective(pair):
            return pair
    if field.q**h > config.hom_scan_bound:
        refuse('injective morphism scan of a %d-dimensional Hom space' % h,
               field.q**h, config.hom_scan_bound)
    powers = field.q**np.arange(h - 1, -1, -1, dtype=np.int64)
    for code in range(1, field.q**h):
        pair = hom.combine((code // powers) % field.q)
        if injective(pair):
            return pair
    return None


def verify_prop5(t, field, config=None):
    """ Embed X into sigma^t X, check that the factor is preinjective with
    each sigma^i S(1), i < t, occurring twice, and compare it with the
    direct sum when the isomorphism scan fits the bounds. """
    config = resolve(config)
    if not 1 <= t <= 3:
        raise DomainError('t must lie in 1..3, got %d' % t)
    X = build_X(field)
    shifted = sigma_power(X, t)
    report = SequenceReport(t=t, q=field.q)

    # sigma^t (2,2) against (2,2) + sum_{i<t} 2 sigma^i (1,0)
    target = (2, 2)
    expected = (2, 2)
    v = (1, 0)
    for _ in range(t):
        target = sigma_dim(target)
        expected = (expected[0] + 2 * v[0], expected[1] + 2 * v[1])
        v = sigma_dim(v)
    report.expected_dims = DimVec(*expected)
    report.dimension_identity = tuple(target) == expected and \
        tuple(shifted.dims) == expected

    hom = hom_space(X, shifted)
    report.hom_dim = hom.dim
    pair = _injective_morphism(hom, config)
    if pair is None:
        logger.warning('no injective morphism X -> sigma^%d X over %s', t,
                       field)
        return report
    report.injective_found = True

    image = SubmoduleHandle(ea.image_basis(pair[0]), ea.image_basis(pair[1]))
    factor = quotient(shifted, image)
    report.quotient_dims = DimVec(*factor.dims)
    report.dimension_identity = report.dimension_identity and \
        tuple(factor.dims) == (expected[0] - 2, expected[1] - 2)
    report.preinjective = is_preinjective(factor)
    report.multiplicities = preinjective_multiplicities(factor, t)

    summands = [build_I(i, field) for i in range(t) for _ in range(2)]
    try:
        iso = find_isomorphism(factor, direct_sum(*summands), config)
        report.isomorphism = 'pass' if iso is not None else 'fail'
    except RefusalError:
        report.isomorphism = 'skipped'
    logger.info('sequence check t=%d over %s: %s', t, field, report.status)
    return report
