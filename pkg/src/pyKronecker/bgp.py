"""
INTENDED FOR KRONECKER REPRESENTATION USE
The BGP shift functors on Kronecker representations. sigma replaces M by
the kernel of [M_1 ... M_n] : M_1^n -> M_2 over M_1; sigma_inv replaces M by
M_2 over the cokernel of [M_1; ...; M_n] : M_1 -> M_2^n. Their squares are
the Auslander-Reiten translates, which give the preprojective, preinjective
and regular predicates.

The functors depend on the arrow basis: the order of the matrices of a
representation is the basis used.

copyright October 2026
"""

# pylint: disable=C0103
import logging

from pyKronecker import exactalg as ea
from pyKronecker.config import resolve
from pyKronecker.errors import DomainError
from pyKronecker.k0 import preinjective_dims, preprojective_dims
from pyKronecker.rep import KronRep, decompose

logger = logging.getLogger(__name__)


def sigma_rep(M):
    """ (sigma M)_1 = ker [M_1 ... M_n], (sigma M)_2 = M_1, arrows the
    coordinate projections. Kills S(2) summands. """
    n = M.n_arrows
    kernel = ea.kernel_basis(M.stacked_row()) if M.d1 else \
        M.field.zeros(0, 0)
    k = kernel.shape[1]
    mats = [kernel[i * M.d1:(i + 1) * M.d1, :].copy() for i in range(n)] \
        if M.d1 else [M.field.zeros(0, k) for _ in range(n)]
    return KronRep(M.field, k, M.d1, mats)


def sigma_inv_rep(M):
    """ (sigma_inv M)_1 = M_2, (sigma_inv M)_2 = coker [M_1; ...; M_n],
    arrows the inclusions followed by the projection. Kills S(1)
    summands. """
    n = M.n_arrows
    proj, c = ea.cokernel_projection(M.stacked_col()) if M.d2 else \
        (M.field.zeros(0, 0), 0)
    mats = [proj[:, i * M.d2:(i + 1) * M.d2].copy() for i in range(n)] \
        if M.d2 else [M.field.zeros(c, 0) for _ in range(n)]
    return KronRep(M.field, M.d2, c, mats)


def sigma_power(M, t):
    for _ in range(t):
        M = sigma_rep(M)
    return M


def sigma_inv_power(M, t):
    for _ in range(t):
        M = sigma_inv_rep(M)
    return M


def tau(M):
    """ Auslander-Reiten translate. """
    return sigma_rep(sigma_rep(M))


def tau_inv(M):
    return sigma_inv_rep(sigma_inv_rep(M))


def _reaches_zero(M, step):
    cur = M
    for _ in range(M.total + 2):
        if cur.is_zero():
            return True
        nxt = step(cur)
        if nxt.total >= cur.total:
            return False
        cur = nxt
    return cur.is_zero()


def is_preprojective(M):
    """ tau^t M = 0 for some t. Every summand of a preprojective module
    loses dimension under tau, so the loop stops as soon as it does not. """
    return _reaches_zero(M, tau)


def is_preinjective(M):
    """ tau_inv^t M = 0 for some t. """
    return _reaches_zero(M, tau_inv)


def has_s2_summand(M):
    return ea.rank(M.stacked_row()) < M.d2


def has_s1_summand(M):
    return M.d1 > 0 and ea.rank(M.stacked_col()) < M.d1


def has_preprojective_summand(M):
    """ M has a summand sigma_inv^t S(2) iff sigma^t M has a summand S(2);
    only t with dim sigma_inv^t S(2) <= dim M need checking. """
    cur = M
    for _ in preprojective_dims(M.n_arrows, M.total):
        if cur.is_zero():
            return False
        if has_s2_summand(cur):
            return True
        cur = sigma_rep(cur)
    return False


def has_preinjective_summand(M):
    """ Dual of has_preprojective_summand with sigma_inv and S(1). """
    cur = M
    for _ in preinjective_dims(M.n_arrows, M.total):
        if cur.is_zero():
            return False
        if has_s1_summand(cur):
            return True
        cur = sigma_inv_rep(cur)
    return False


def is_regular_rep(M):
    """ No indecomposable summand is preprojective or preinjective. """
    return not (has_preprojective_summand(M) or has_preinjective_summand(M))


def is_regular_by_decomposition(M, config=None):
    """ is_regular_rep computed from an explicit decomposition. """
    config = resolve(config)
    for part in decompose(M, config):
        if is_preprojective(part) or is_preinjective(part):
            return False
    return True


def preinjective_multiplicities(M, t):
    """ Multiplicity of sigma^i S(1) as a summand of M for i < t: the
    number of S(1) summands of sigma_inv^i M. """
    if t < 0:
        raise DomainError('negative count %d' % t)
    out = []
    cur = M
    for _ in range(t):
        out.append(cur.d1 - ea.rank(cur.stacked_col()) if cur.d1 else 0)
        cur = sigma_inv_rep(cur)
    return out


def classify_indecomposable(M):
    """ 'preprojective', 'preinjective' or 'regular' for an indecomposable
    M. """
    if is_preprojective(M):
        return 'preprojective'
    if is_preinjective(M):
        return 'preinjective'
    return 'regular'
