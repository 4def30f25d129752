"""
INTENDED FOR KRONECKER REPRESENTATION USE
Representations of the n-Kronecker quiver (n = 2 or 3) over a small finite
field: two vector spaces M_1, M_2 and n matrices of shape d2 x d1 acting on
column vectors of M_1. This file holds the representation type with its
JSON form, morphism spaces, endomorphism rings, direct sums, submodules and
quotients, indecomposability and decomposition, isomorphism, base changes in
the arrow space and duality.

copyright October 2026
"""

# pylint: disable=C0103
import json
import logging

import numpy as np

from pyKronecker import exactalg as ea
from pyKronecker.config import resolve
from pyKronecker.errors import ContractError, DomainError, FormatError, \
     refuse
from pyKronecker.k0 import DimVec

logger = logging.getLogger(__name__)

ARROW_COUNTS = (2, 3)
CHUNK = 4096


class KronRep(object):
    """ Representation (M_1, M_2; mats) of K(n). Treat as immutable. """

    def __init__(self, field, d1, d2, mats):
        if len(mats) not in ARROW_COUNTS:
            raise DomainError('a Kronecker representation needs 2 or 3 '
                              'arrows, got %d' % len(mats))
        if d1 < 0 or d2 < 0:
            raise DomainError('negative dimension (%d, %d)' % (d1, d2))
        GF = field.GF
        checked = []
        for mat in mats:
            if not isinstance(mat, GF):
                mat = field.array(mat) if np.size(mat) else \
                    field.zeros(d2, d1)
            if mat.shape != (d2, d1):
                raise ContractError('arrow matrix of shape %s, expected %s'
                                    % (mat.shape, (d2, d1)))
            checked.append(mat)
        self.field = field
        self.d1 = d1
        self.d2 = d2
        self.mats = tuple(checked)

    @property
    def n_arrows(self):
        return len(self.mats)

    @property
    def dims(self):
        return DimVec(self.d1, self.d2)

    @property
    def total(self):
        return self.d1 + self.d2

    def is_zero(self):
        return self.total == 0

    def key(self):
        """ Bytes identifying the exact matrices, used for dedup and
        deterministic ordering. """
        head = bytes('%d,%d,%d,%d,%d;' % (self.field.p, self.field.k,
                                         self.n_arrows, self.d1, self.d2),
                     'ascii')
        return head + b''.join(ea.to_ints(m).tobytes() for m in self.mats)

    def __eq__(self, other):
        if not isinstance(other, KronRep):
            return NotImplemented
        return self.key() == other.key()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return 'KronRep(%s, n=%d, dims=(%d, %d))' % (self.field,
                                                     self.n_arrows,
                                                     self.d1, self.d2)

    def stacked_row(self):
        """ [M_1 | ... | M_n] : M_1^n -> M_2. """
        return ea.hstack(self.field, list(self.mats), rows=self.d2)

    def stacked_col(self):
        """ [M_1; ...; M_n] : M_1 -> M_2^n. """
        return ea.vstack(self.field, list(self.mats), cols=self.d1)

    def combo(self, coeffs):
        """ The matrix of the arrow-space element sum_i c_i a_i. """
        coeffs = self.field.array(coeffs)
        if coeffs.shape != (self.n_arrows, ):
            raise ContractError('arrow-space vector of length %d expected'
                                % self.n_arrows)
        acc = self.field.zeros(self.d2, self.d1)
        for c, mat in zip(coeffs, self.mats):
            if int(c):
                acc = acc + c * mat
        return acc

    def to_dict(self):
        return {'p': self.field.p,
                'k': self.field.k,
                'n': self.n_arrows,
                'd': [self.d1, self.d2],
                'mats': [ea.to_ints(m).tolist() for m in self.mats]}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        """ Parse the JSON representation format. """
        try:
            field = ea.FieldDesc(int(data['p']), int(data.get('k', 1)))
            n = int(data['n'])
            d1, d2 = [int(v) for v in data['d']]
            raw = data['mats']
        except (KeyError, TypeError, ValueError) as err:
            raise FormatError('malformed representation: %s' % err)
        except DomainError as err:
            raise FormatError('malformed representation: %s' % err.msg)

        if not isinstance(raw, list) or len(raw) != n:
            raise FormatError('expected %d arrow matrices' % n)
        mats = []
        for mat in raw:
            if not isinstance(mat, list) or len(mat) != d2 or \
               any(not isinstance(row, list) or len(row) != d1
                   for row in mat):
                raise FormatError('arrow matrix is not %d x %d' % (d2, d1))
            values = np.array(mat, dtype=np.int64).reshape(d2, d1)
            if values.size and (values.min() < 0 or
                                values.max() >= field.q):
                raise FormatError('matrix entries must lie in 0..%d'
                                  % (field.q - 1))
            mats.append(field.GF(values))
        try:
            return cls(field, d1, d2, mats)
        except DomainError as err:
            raise FormatError(err.msg)

    @classmethod
    def from_json(cls, text):
        try:
            data = json.loads(text)
        except ValueError as err:
            raise FormatError('invalid JSON: %s' % err)
        if not isinstance(data, dict):
            raise FormatError('a representation is a JSON object')
        return cls.from_dict(data)


class SubmoduleHandle(object):
    """ Pair of canonical subspace bases (U_1 in M_1, U_2 in M_2). """

    def __init__(self, u1, u2):
        self.u1 = ea.canonical_basis(u1)
        self.u2 = ea.canonical_basis(u2)

    @property
    def dims(self):
        return DimVec(self.u1.shape[1], self.u2.shape[1])

    def key(self):
        return ea.key_bytes(self.u1) + b'|' + ea.key_bytes(self.u2)

    def sort_key(self):
        return (self.dims[0], self.dims[1], self.key())

    def __eq__(self, other):
        if not isinstance(other, SubmoduleHandle):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return 'SubmoduleHandle(dims=%s)' % (tuple(self.dims), )


class HomBasis(object):
    """ Basis of Hom(M, N) as pairs (f1, f2). `flat` holds the basis as the
    columns of a matrix over the unknowns (row-major f1, then f2). """

    def __init__(self, source, target, flat):
        self.source = source
        self.target = target
        self.flat = flat
        self.pairs = [self._split(flat[:, j]) for j in range(flat.shape[1])]

    def _split(self, column):
        s, t = self.source, self.target
        n1 = t.d1 * s.d1
        f1 = column[:n1].reshape(t.d1, s.d1)
        f2 = column[n1:].reshape(t.d2, s.d2)
        return f1, f2

    @property
    def dim(self):
        return self.flat.shape[1]

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.pairs)

    def combine(self, coeffs):
        """ The morphism sum_j c_j (basis pair j). """
        GF = self.source.field.GF
        coeffs = GF(np.asarray(coeffs, dtype=np.int64)).reshape(-1, 1)
        return self._split(ea.matmul(self.flat, coeffs).reshape(-1))


# ---------------------------------
# Constructors
# ---------------------------------

def zero_rep(field, d1, d2, n=3):
    return KronRep(field, d1, d2, [field.zeros(d2, d1) for _ in range(n)])


def _check_same(M, N):
    if M.field != N.field:
        raise DomainError('representations over %s and %s' % (M.field,
                                                               N.field))
    if M.n_arrows != N.n_arrows:
        raise DomainError('representations of K(%d) and K(%d)'
                          % (M.n_arrows, N.n_arrows))


def direct_sum(*reps):
    """ Block diagonal direct sum. """
    if not reps:
        raise DomainError('direct_sum needs at least one summand')
    first = reps[0]
    for other in reps[1:]:
        _check_same(first, other)
    mats = [ea.block_diag(first.field, [r.mats[i] for r in reps])
            for i in range(first.n_arrows)]
    return KronRep(first.field, sum(r.d1 for r in reps),
                   sum(r.d2 for r in reps), mats)


def base_change(M, b1, b2):
    """ Matrices of M with respect to the bases given by the columns of b1
    (of M_1) and b2 (of M_2): b2^-1 M_i b1. """
    if not ea.is_invertible(b1) or not ea.is_invertible(b2):
        raise DomainError('base change matrices must be invertible')
    b2inv = ea.inverse(b2)
    mats = [ea.matmul(ea.matmul(b2inv, m), b1) for m in M.mats]
    return KronRep(M.field, M.d1, M.d2, mats)


def arrow_change(M, g):
    """ New arrow basis a'_i = sum_j g_ij a_j, so mats'_i = sum_j g_ij
    mats_j. """
    g = M.field.array(g)
    if g.shape != (M.n_arrows, M.n_arrows) or not ea.is_invertible(g):
        raise DomainError('arrow change must be an invertible %dx%d matrix'
                          % (M.n_arrows, M.n_arrows))
    return KronRep(M.field, M.d1, M.d2, [M.combo(g[i])
                                         for i in range(M.n_arrows)])


def dual(M):
    """ Dual representation: transpose each matrix, swap the vertices. """
    return KronRep(M.field, M.d2, M.d1, [m.T.copy() for m in M.mats])


def restrict_k2(M, b1, b2):
    """ Restriction to the 2-Kronecker subalgebra with arrows b1, b2. """
    if M.n_arrows != 3:
        raise DomainError('restriction needs a K(3) representation')
    pair = M.field.array(np.stack([ea.to_ints(M.field.array(b1)),
                                   ea.to_ints(M.field.array(b2))]))
    if ea.rank(pair) != 2:
        raise DomainError('arrow vectors %s and %s are dependent'
                          % (list(b1), list(b2)))
    return KronRep(M.field, M.d1, M.d2, [M.combo(pair[0]),
                                         M.combo(pair[1])])


def annihilator_space(M):
    """ Columns span {c : sum_i c_i mats_i = 0} in the arrow space. """
    field = M.field
    if M.d1 * M.d2 == 0:
        return field.identity(M.n_arrows)
    evaluation = field.GF(np.stack([ea.to_ints(m).reshape(-1)
                                    for m in M.mats], axis=1))
    return ea.canonical_basis(ea.kernel_basis(evaluation))


def faithful_annihilator(M):
    """ A non-zero arrow-space element acting as zero on M, or None. """
    if M.n_arrows != 3:
        raise DomainError('faithful_annihilator needs a K(3) representation')
    ann = annihilator_space(M)
    if ann.shape[1] == 0:
        return None
    return ann[:, 0].copy()


# ---------------------------------
# Submodules and quotients
# ---------------------------------

def is_submodule(M, u1, u2):
    """ Arrow closure: M_i U_1 lies in U_2 for every arrow. """
    if u1.shape[1] == 0:
        return True
    r2 = ea.rank(u2)
    for mat in M.mats:
        image = ea.matmul(mat, u1)
        if ea.rank(ea.hstack(M.field, [u2, image])) != r2:
            return False
    return True


def arrow_image(M, u1):
    """ Canonical basis of sum_i M_i U_1. """
    if u1.shape[1] == 0:
        return M.field.zeros(M.d2, 0)
    return ea.canonical_basis(ea.hstack(M.field,
                                        [ea.matmul(m, u1) for m in M.mats]))


def sub_generated(M, top=(), bottom=()):
    """ Smallest submodule containing the given vectors of M_1 and M_2. """
    field = M.field
    u1 = _columns(field, top, M.d1)
    u2 = _columns(field, bottom, M.d2)
    u1 = ea.canonical_basis(u1)
    u2 = ea.canonical_basis(ea.hstack(field, [u2, arrow_image(M, u1)]))
    return SubmoduleHandle(u1, u2)


def _columns(field, vectors, dim):
    if isinstance(vectors, field.GF) and vectors.ndim == 2:
        return vectors
    vectors = list(vectors)
    if not vectors:
        return field.zeros(dim, 0)
    cols = np.stack([np.asarray(ea.to_ints(v) if isinstance(v, field.GF)
                                else v, dtype=np.int64).reshape(-1)
                     for v in vectors], axis=1)
    if cols.shape[0] != dim:
        raise ContractError('generator of length %d in a space of dimension %d'
                            % (cols.shape[0], dim))
    return field.array(cols)


def whole(M):
    return SubmoduleHandle(M.field.identity(M.d1), M.field.identity(M.d2))


def zero_sub(M):
    return SubmoduleHandle(M.field.zeros(M.d1, 0), M.field.zeros(M.d2, 0))


def sub_rep(M, U):
    """ The submodule U as a representation in the basis of U. """
    mats = []
    for mat in M.mats:
        image = ea.matmul(mat, U.u1)
        coords = ea.solve(U.u2, image) if U.u2.shape[1] else \
            (None if np.any(ea.to_ints(image)) else
             M.field.zeros(0, U.u1.shape[1]))
        if coords is None:
            raise DomainError('subspace pair is not closed under the arrows')
        mats.append(coords)
    return KronRep(M.field, U.u1.shape[1], U.u2.shape[1], mats)


def quotient_maps(M, U):
    """ M / U together with the complements (C_1, C_2) whose images form
    the quotient bases. """
    if not is_submodule(M, U.u1, U.u2):
        raise DomainError('subspace pair is not closed under the arrows')
    field = M.field
    c1 = ea.complement_basis(U.u1, M.d1)
    c2 = ea.complement_basis(U.u2, M.d2)
    basis2 = ea.hstack(field, [U.u2, c2])
    u = U.u2.shape[1]
    mats = []
    for mat in M.mats:
        coords = ea.solve(basis2, ea.matmul(mat, c1))
        mats.append(coords[u:, :].copy())
    return KronRep(field, c1.shape[1], c2.shape[1], mats), (c1, c2)


def quotient(M, U):
    """ Factor module M / U on the echelon complement of U. """
    return quotient_maps(M, U)[0]


def lift_sub(U, c1, c2, V):
    """ Preimage in M of the submodule V of M / U. """
    GF = type(U.u1)
    u1 = np.concatenate([ea.to_ints(U.u1),
                         ea.to_ints(ea.matmul(c1, V.u1))], axis=1)
    u2 = np.concatenate([ea.to_ints(U.u2),
                         ea.to_ints(ea.matmul(c2, V.u2))], axis=1)
    return SubmoduleHandle(GF(u1), GF(u2))


def subquotient(M, lower, upper):
    """ upper / lower for submodules lower <= upper of M. """
    top = sub_rep(M, upper)
    v1 = ea.solve(upper.u1, lower.u1) if lower.u1.shape[1] else \
        M.field.zeros(upper.u1.shape[1], 0)
    v2 = ea.solve(upper.u2, lower.u2) if lower.u2.shape[1] else \
        M.field.zeros(upper.u2.shape[1], 0)
    if v1 is None or v2 is None:
        raise DomainError('submodules are not nested')
    return quotient(top, SubmoduleHandle(v1, v2))


# ---------------------------------
# Morphisms
# ---------------------------------

def hom_space(M, N):
    """ Basis of Hom(M, N): pairs (f1, f2) with f2 M_i = N_i f1. """
    _check_same(M, N)
    field = M.field
    n1 = N.d1 * M.d1
    n2 = N.d2 * M.d2
    if n1 + n2 == 0:
        return HomBasis(M, N, field.zeros(0, 0))

    blocks = []
    for m_mat, n_mat in zip(M.mats, N.mats):
        left = -ea.kron(n_mat, field.identity(M.d1)) if n1 else \
            field.zeros(N.d2 * M.d1, 0)
        right = ea.kron(field.identity(N.d2), m_mat.T.copy()) if n2 else \
            field.zeros(N.d2 * M.d1, 0)
        blocks.append(ea.hstack(field, [left, right]))
    system = ea.vstack(field, blocks, cols=n1 + n2)
    return HomBasis(M, N, ea.kernel_basis(system))


def end_dim(M):
    return hom_space(M, M).dim


def is_morphism(M, N, f1, f2):
    for m_mat, n_mat in zip(M.mats, N.mats):
        if not np.array_equal(ea.to_ints(ea.matmul(f2, m_mat)),
                              ea.to_ints(ea.matmul(n_mat, f1))):
            return False
    return True


def _power_pair(f1, f2, exponent):
    return ea.matrix_power(f1, exponent), ea.matrix_power(f2, exponent)


def _is_nilpotent_pair(f1, f2, total):
    p1, p2 = _power_pair(f1, f2, total)
    return not np.any(ea.to_ints(p1)) and not np.any(ea.to_ints(p2))


def _fitting_split(M, f1, f2):
    """ Fitting decomposition M = ker f^N + im f^N; None if trivial. """
    p1, p2 = _power_pair(f1, f2, max(M.total, 1))
    rk = ea.rank(p1) + ea.rank(p2)
    if rk == 0 or rk == M.total:
        return None
    kernel = SubmoduleHandle(ea.kernel_basis(p1), ea.kernel_basis(p2))
    image = SubmoduleHandle(ea.image_basis(p1), ea.image_basis(p2))
    return sub_rep(M, kernel), sub_rep(M, image)


def _idempotent_split(M, e1, e2):
    kernel = SubmoduleHandle(ea.kernel_basis(e1), ea.kernel_basis(e2))
    image = SubmoduleHandle(ea.image_basis(e1), ea.image_basis(e2))
    return sub_rep(M, kernel), sub_rep(M, image)


def _structure_constants(M, hom):
    """ Integer array P of shape (h*h, h): row i*h+j holds the coordinates
    of e_i e_j in the basis e. """
    field = M.field
    h = hom.dim
    rows = []
    for a1, a2 in hom.pairs:
        for b1, b2 in hom.pairs:
            prod = np.concatenate([ea.to_ints(ea.matmul(a1, b1)).reshape(-1),
                                   ea.to_ints(ea.matmul(a2, b2)).reshape(-1)])
            coords = ea.solve(hom.flat, field.GF(prod))
            rows.append(ea.to_ints(coords))
    return np.array(rows, dtype=np.int64).reshape(h * h, h)


def _outer_products(field, coeffs):
    """ Row-wise c (x) c for an integer batch of coefficient vectors. """
    if field.is_prime:
        prod = coeffs[:, :, None] * coeffs[:, None, :] % field.p
    else:
        GF = field.GF
        prod = ea.to_ints(GF(coeffs)[:, :, None] * GF(coeffs)[:, None, :])
    return prod.reshape(coeffs.shape[0], -1)


def _scan_idempotents(M, hom, config):
    """ Exhaustive scan of End(M) for an idempotent other than 0 and 1. """
    field = M.field
    h = hom.dim
    q = field.q
    limit = config.idempotent_bound
    if q**h > limit:
        refuse('idempotent scan of a %d-dimensional endomorphism ring' % h,
               q**h, limit)

    consts = _structure_constants(M, hom)
    ident = np.concatenate([ea.to_ints(field.identity(M.d1)).reshape(-1),
                            ea.to_ints(field.identity(M.d2)).reshape(-1)])
    ident = ea.to_ints(ea.solve(hom.flat, field.GF(ident)))
    powers = q**np.arange(h - 1, -1, -1, dtype=np.int64)

    for start in range(0, q**h, CHUNK):
        idx = np.arange(start, min(start + CHUNK, q**h), dtype=np.int64)
        coeffs = (idx[:, None] // powers[None, :]) % q
        squares = ea.batched_matmul_ints(field, _outer_products(field,
                                                                coeffs),
                                         consts)
        hits = np.flatnonzero(np.all(squares == coeffs, axis=1))
        for hit in hits:
            c = coeffs[hit]
            if not np.any(c) or np.array_equal(c, ident):
                continue
            logger.debug('non-trivial idempotent %s', c.tolist())
            return hom.combine(c)
    return None


def _scalar_shift(field, f1, f2, lam):
    lam = field.scalar(lam)
    return (f1 - lam * field.identity(f1.shape[0]),
            f2 - lam * field.identity(f2.shape[0]))


def _nilpotent_shift(M, f1, f2):
    """ The scalar lam with f - lam id nilpotent, or None. """
    field = M.field
    for lam in range(field.q):
        g1, g2 = _scalar_shift(field, f1, f2, lam)
        if _is_nilpotent_pair(g1, g2, M.total):
            return lam
    return None


def is_scalar_local(M):
    """ End(M) is local with residue field the ground field: End(M) =
    F id + J with J a nilpotent ideal. """
    if M.is_zero():
        return False
    field = M.field
    hom = hom_space(M, M)
    nil = []
    for f1, f2 in hom.pairs:
        lam = _nilpotent_shift(M, f1, f2)
        if lam is None:
            return False
        g1, g2 = _scalar_shift(field, f1, f2, lam)
        nil.append(np.concatenate([ea.to_ints(g1).reshape(-1),
                                   ea.to_ints(g2).reshape(-1)]))
    if not nil:
        return False

    def as_pairs(basis):
        out = []
        for j in range(basis.shape[1]):
            col = basis[:, j]
            out.append((col[:M.d1 * M.d1].reshape(M.d1, M.d1),
                        col[M.d1 * M.d1:].reshape(M.d2, M.d2)))
        return out

    ideal = ea.canonical_basis(field.GF(np.stack(nil, axis=1)))
    ideal_pairs = as_pairs(ideal)
    power = ideal
    for _ in range(M.total + 1):
        if power.shape[1] == 0:
            return True
        prods = []
        for a1, a2 in as_pairs(power):
            for b1, b2 in ideal_pairs:
                prods.append(np.concatenate(
                    [ea.to_ints(ea.matmul(a1, b1)).reshape(-1),
                     ea.to_ints(ea.matmul(a2, b2)).reshape(-1)]))
        nxt = ea.canonical_basis(field.GF(np.stack(prods, axis=1)))
        if ea.rank(ea.hstack(field, [ideal, nxt])) != ideal.shape[1]:
            # J is not closed under products
            return False
        if nxt.shape[1] >= power.shape[1]:
            return False
        power = nxt
    return False


def simple_summand_counts(M):
    """ Multiplicities of S(1) and S(2) as direct summands. """
    s1 = M.d1 - ea.rank(M.stacked_col())
    s2 = M.d2 - ea.rank(M.stacked_row())
    return s1, s2


def _split_once(M, config, rng):
    """ A non-trivial splitting (A, B) of M, or None if M is
    indecomposable. """
    if M.total <= 1:
        return None
    s1, s2 = simple_summand_counts(M)
    field = M.field
    if s1 or s2:
        if s1:
            kernel = ea.canonical_basis(ea.kernel_basis(M.stacked_col()))
            vec = kernel[:, :1]
            return (sub_rep(M, SubmoduleHandle(vec, field.zeros(M.d2, 0))),
                    sub_rep(M, SubmoduleHandle(
                        ea.complement_basis(vec, M.d1),
                        field.identity(M.d2))))
        image = arrow_image(M, field.identity(M.d1))
        comp = ea.complement_basis(image, M.d2)[:, :1]
        rest = ea.canonical_basis(ea.hstack(field, [
            image, ea.complement_basis(image, M.d2)[:, 1:]]))
        return (sub_rep(M, SubmoduleHandle(field.zeros(M.d1, 0), comp)),
                sub_rep(M, SubmoduleHandle(field.identity(M.d1), rest)))

    hom = hom_space(M, M)
    if hom.dim <= 1:
        return None

    for f1, f2 in hom.pairs:
        for lam in range(min(field.q, 16)):
            g1, g2 = _scalar_shift(field, f1, f2, lam)
            parts = _fitting_split(M, g1, g2)
            if parts is not None:
                return parts
    for _ in range(2 * hom.dim):
        f1, f2 = hom.combine(rng.integers(0, field.q, size=hom.dim))
        parts = _fitting_split(M, f1, f2)
        if parts is not None:
            return parts

    if is_scalar_local(M):
        return None
    found = _scan_idempotents(M, hom, config)
    if found is None:
        return None
    return _idempotent_split(M, *found)


def is_indecomposable(M, config=None):
    """ True iff M is non-zero and End(M) has no idempotents besides 0 and
    1. Cheap certificates are tried before the exhaustive idempotent scan. """
    config = resolve(config)
    if M.is_zero():
        return False
    return _split_once(M, config, ea.make_rng(config.seed)) is None


def decompose(M, config=None):
    """ Indecomposable summands of M, sorted by dimension vector, then by
    matrices. """
    config = resolve(config)
    rng = ea.make_rng(config.seed)
    parts = []
    stack = [M]
    while stack:
        cur = stack.pop()
        if cur.is_zero():
            continue
        pieces = _split_once(cur, config, rng)
        if pieces is None:
            parts.append(cur)
        else:
            stack.extend(pieces)
    parts.sort(key=lambda r: (tuple(r.dims), r.key()))
    logger.debug('decomposed %r into %s', M, [tuple(p.dims) for p in parts])
    return parts


# ---------------------------------
# Isomorphism
# ---------------------------------

def rank_profile(M):
    """ Ranks of sum_i c_i M_i over the projective points c of the arrow
    space, in the order of exactalg.projective_points. """
    points = ea.projective_points(M.n_arrows, M.field)
    return tuple(ea.fast_rank(M.combo(points[i]), M.field)
                 for i in range(points.shape[0]))


def cyclic_profile(M):
    """ Sorted dimensions of the cyclic submodules generated by the
    projective points of M_1. """
    if M.d1 == 0:
        return ()
    points = ea.projective_points(M.d1, M.field)
    dims = []
    for i in range(points.shape[0]):
        m = points[i].reshape(-1, 1)
        cols = ea.hstack(M.field, [ea.matmul(mat, m) for mat in M.mats])
        dims.append(1 + ea.fast_rank(cols, M.field))
    return tuple(sorted(dims))


def _invertible_pair(f1, f2):
    return ea.is_invertible(f1) and ea.is_invertible(f2)


def find_isomorphism(M, N, config=None, filters=True):
    """ A pair (f1, f2) of invertible matrices forming a morphism M -> N,
    or None. """
    config = resolve(config)
    _check_same(M, N)
    if M.dims != N.dims:
        return None
    if M.is_zero():
        return M.field.zeros(0, 0), M.field.zeros(0, 0)
    if filters:
        if rank_profile(M) != rank_profile(N):
            return None
        if end_dim(M) != end_dim(N):
            return None

    hom = hom_space(M, N)
    h = hom.dim
    if h == 0:
        return None
    field = M.field
    rng = ea.make_rng(config.seed)
    for _ in range(32):
        f1, f2 = hom.combine(rng.integers(0, field.q, size=h))
        if _invertible_pair(f1, f2):
            return f1, f2

    if field.q**h > config.hom_scan_bound:
        refuse('isomorphism scan of a %d-dimensional Hom space' % h,
               field.q**h, config.hom_scan_bound)
    powers = field.q**np.arange(h - 1, -1, -1, dtype=np.int64)
    for start in range(1, field.q**h, CHUNK):
        idx = np.arange(start, min(start + CHUNK, field.q**h),
                        dtype=np.int64)
        coeffs = (idx[:, None] // powers[None, :]) % field.q
        for c in coeffs:
            f1, f2 = hom.combine(c)
            if _invertible_pair(f1, f2):
                return f1, f2
    return None


def is_isomorphic(M, N, config=None):
    """ True iff some morphism M -> N has both components invertible. """
    return find_isomorphism(M, N, config) is not None


def a_equivalent(M, N, config=None):
    """ An invertible g with arrow_change(N, g) isomorphic to M, or None.
    Scans PGL_3 after the cyclic-profile and rank-profile prefilters. """
    config = resolve(config)
    _check_same(M, N)
    if M.n_arrows != 3:
        raise DomainError('A-equivalence is defined for K(3) '
                          'representations')
    field = M.field
    if field.q > config.gl_scan_max_q:
        refuse('GL_3(F_%d) scan' % field.q, ea.gl_order(3, field.q),
               ea.gl_order(3, config.gl_scan_max_q))
    if M.dims != N.dims:
        return None
    if M.is_zero():
        return field.identity(3)
    if end_dim(M) != end_dim(N):
        return None
    # cyclic submodules are carried onto each other by any arrow change
    if cyclic_profile(M) != cyclic_profile(N):
        return None

    points = ea.to_ints(ea.projective_points(3, field))
    target = np.array(rank_profile(M))
    vectors = ea.all_vectors_ints(3, field.q)
    ranks_n = np.zeros(vectors.shape[0], dtype=np.int64)
    for code in range(1, vectors.shape[0]):
        ranks_n[code] = ea.fast_rank(N.combo(vectors[code]), field)
    powers = field.q**np.arange(2, -1, -1, dtype=np.int64)

    groups = ea.enumerate_gl_ints(3, field, projective=True)
    moved = ea.batched_matmul_ints(field, points[None, :, :], groups)
    codes = moved @ powers
    candidates = np.flatnonzero(np.all(ranks_n[codes] == target[None, :],
                                       axis=1))
    logger.debug('a_equivalent: %d of %d arrow changes pass the rank filter',
                 candidates.size, groups.shape[0])
    for idx in candidates:
        g = field.GF(groups[idx])
        if find_isomorphism(M, arrow_change(N, g), config,
                            filters=False) is not None:
            return g
    return None
