"""
INTENDED FOR KRONECKER REPRESENTATION USE
This file contains the exact linear algebra over the small finite fields
F_q, q = p^k with p in {2, 3, 5, 7} and k <= 3. Matrices are galois
FieldArrays; every routine here accepts zero-row and zero-column matrices.
Subspaces are stored as matrices whose columns form a basis, kept in the
canonical form obtained from the reduced echelon form of the transpose.

copyright October 2026
"""

import dataclasses
import functools
import itertools
import logging

import galois
import numpy as np

from pyKronecker.config import resolve
from pyKronecker.errors import ContractError, DomainError, refuse

logger = logging.getLogger(__name__)

FIELD_PRIMES = (2, 3, 5, 7)
MAX_DEGREE = 3
WORD_BITS = 64


@functools.lru_cache(maxsize=None)
def _galois_field(order):
    return galois.GF(order)


@dataclasses.dataclass(frozen=True, order=True)
class FieldDesc(object):
    """ The finite field F_{p^k}. Only (p, k) is stored, so descriptions
    pickle cheaply into census workers. """

    p: int
    k: int = 1

    def __post_init__(self):
        if self.p not in FIELD_PRIMES:
            raise DomainError('characteristic %r is not one of %s'
                              % (self.p, FIELD_PRIMES), p=self.p)
        if not 1 <= self.k <= MAX_DEGREE:
            raise DomainError('extension degree %r outside 1..%d'
                              % (self.k, MAX_DEGREE), k=self.k)

    def __str__(self):
        return 'F_%d' % self.q

    @property
    def q(self):
        return self.p ** self.k

    @property
    def GF(self):
        return _galois_field(self.q)

    @property
    def is_prime(self):
        return self.k == 1

    def zeros(self, rows, cols):
        return self.GF.Zeros((rows, cols))

    def identity(self, n):
        return self.GF.Identity(n) if n else self.GF.Zeros((0, 0))

    def array(self, values):
        """ Field array from integers in the monomial encoding 0..q-1. """
        if isinstance(values, np.ndarray):
            values = np.array(values.view(np.ndarray), dtype=np.int64)
        else:
            values = np.asarray(values, dtype=np.int64)
        if values.size and (values.min() < 0 or values.max() >= self.q):
            raise DomainError('entries must lie in 0..%d' % (self.q - 1))
        return self.GF(values)

    def matrix(self, rows, nrows, ncols):
        """ Field matrix of a fixed shape from nested lists. """
        if nrows == 0 or ncols == 0:
            return self.zeros(nrows, ncols)
        out = self.array(rows)
        if out.shape != (nrows, ncols):
            raise ContractError('expected a %dx%d matrix, got shape %s'
                                % (nrows, ncols, out.shape))
        return out

    def scalar(self, value):
        return self.GF(int(value))

    def elements(self):
        return self.GF.elements

    @property
    def mul_table(self):
        return _tables(self.q)[0]

    @property
    def inv_table(self):
        return _tables(self.q)[1]


@functools.lru_cache(maxsize=None)
def _tables(order):
    GF = _galois_field(order)
    elems = GF.elements
    mul = to_ints(elems[:, None] * elems[None, :])
    inv = np.zeros(order, dtype=np.int64)
    inv[1:] = to_ints(GF(1) / elems[1:])
    return mul, inv


def field_from_q(q):
    """ FieldDesc for the prime power q. """
    for p in FIELD_PRIMES:
        k, rest = 0, q
        while rest % p == 0:
            rest //= p
            k += 1
        if rest == 1 and k >= 1:
            return FieldDesc(p, k)
    raise DomainError('%r is not a supported field order' % (q, ), q=q)


def check_arithmetic(field):
    """ Exhaustive field axiom check on the multiplication and addition
    tables. Meant for q <= 9. """

    GF = field.GF
    elems = GF.elements
    add = to_ints(elems[:, None] + elems[None, :])
    mul = field.mul_table
    inv = field.inv_table
    q = field.q

    a, b, c = np.meshgrid(np.arange(q), np.arange(q), np.arange(q),
                          indexing='ij')
    assoc_mul = np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]])
    assoc_add = np.array_equal(add[add[a, b], c], add[a, add[b, c]])
    distrib = np.array_equal(mul[a, add[b, c]], add[mul[a, b], mul[a, c]])
    commute = np.array_equal(mul, mul.T) and np.array_equal(add, add.T)
    inverses = np.all(mul[np.arange(1, q), inv[1:]] == 1)
    return bool(assoc_mul and assoc_add and distrib and commute and inverses)


def to_ints(m):
    """ Plain int64 copy of a field array. """
    return np.array(m.view(np.ndarray), dtype=np.int64)


def key_bytes(m):
    return to_ints(m).tobytes() + bytes(str(m.shape), 'ascii')


# ---------------------------------
# Shape helpers
# ---------------------------------

def matmul(a, b):
    """ Field matrix product that tolerates empty inner dimensions. """
    if a.shape[1] != b.shape[0]:
        raise ContractError('cannot multiply %s by %s' % (a.shape, b.shape))
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return type(a).Zeros((a.shape[0], b.shape[1]))
    return a @ b


def hstack(field, blocks, rows=None):
    if not blocks:
        return field.zeros(rows or 0, 0)
    nrows = blocks[0].shape[0]
    for block in blocks:
        if block.shape[0] != nrows:
            raise ContractError('row counts differ in hstack')
    return field.GF(np.concatenate([to_ints(b) for b in blocks], axis=1))


def vstack(field, blocks, cols=None):
    if not blocks:
        return field.zeros(0, cols or 0)
    ncols = blocks[0].shape[1]
    for block in blocks:
        if block.shape[1] != ncols:
            raise ContractError('column counts differ in vstack')
    return field.GF(np.concatenate([to_ints(b) for b in blocks], axis=0))


def block_diag(field, blocks):
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for block in blocks:
        out[r:r + block.shape[0], c:c + block.shape[1]] = to_ints(block)
        r += block.shape[0]
        c += block.shape[1]
    return field.GF(out)


def kron(a, b):
    """ Kronecker product of two field matrices. """
    GF = type(a)
    if a.size == 0 or b.size == 0:
        return GF.Zeros((a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]))
    prod = a[:, None, :, None] * b[None, :, None, :]
    return prod.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


# ---------------------------------
# Row reduction and its consumers
# ---------------------------------

def rref(m):
    """ Reduced row echelon form and the pivot columns. """
    if m.shape[0] == 0 or m.shape[1] == 0:
        return m.copy(), []
    reduced = m.row_reduce()
    nonzero = to_ints(reduced) != 0
    pivots = []
    for row in nonzero:
        cols = np.flatnonzero(row)
        if cols.size == 0:
            break
        pivots.append(int(cols[0]))
    return reduced, pivots


def rank(m):
    """ Rank by exact row reduction. """
    return len(rref(m)[1])


def kernel_basis(m):
    """ Columns form a basis of {x : m x = 0}. """
    GF = type(m)
    rows, cols = m.shape
    if cols == 0:
        return GF.Zeros((0, 0))
    reduced, pivots = rref(m)
    free = [j for j in range(cols) if j not in set(pivots)]
    basis = GF.Zeros((cols, len(free)))
    if not free:
        return basis
    basis[free, np.arange(len(free))] = 1
    if pivots:
        basis[pivots, :] = -reduced[:len(pivots)][:, free]
    return basis


def canonical_basis(m):
    """ Canonical basis (as columns) of the column space of m. """
    GF = type(m)
    if m.shape[1] == 0 or m.shape[0] == 0:
        return GF.Zeros((m.shape[0], 0))
    reduced, pivots = rref(m.T)
    return reduced[:len(pivots)].T.copy()


def image_basis(m):
    """ Canonical basis of the column space. """
    return canonical_basis(m)


def complement_basis(basis, dim):
    """ Standard basis vectors completing `basis` to the whole space, chosen
    off the pivot columns of its echelon form. """
    GF = type(basis)
    if basis.shape[1] == 0:
        return GF.Identity(dim) if dim else GF.Zeros((0, 0))
    _, pivots = rref(basis.T)
    free = [j for j in range(dim) if j not in set(pivots)]
    out = GF.Zeros((dim, len(free)))
    if free:
        out[free, np.arange(len(free))] = 1
    return out


def solve(m, rhs):
    """ Some x with m x = rhs, or None when the system is inconsistent. """
    GF = type(m)
    vector = rhs.ndim == 1
    if vector:
        rhs = rhs.reshape(-1, 1)
    if m.shape[0] != rhs.shape[0]:
        raise ContractError('solve: %s against right hand side %s'
                            % (m.shape, rhs.shape))
    rows, cols = m.shape
    width = rhs.shape[1]
    x = GF.Zeros((cols, width))
    if rows and width:
        aug = GF(np.concatenate([to_ints(m), to_ints(rhs)], axis=1))
        reduced, pivots = rref(aug)
        if pivots and pivots[-1] >= cols:
            return None
        for i, col in enumerate(pivots):
            x[col, :] = reduced[i, cols:]
    return x.reshape(-1) if vector else x


def cokernel_projection(m):
    """ A surjection from the codomain of m whose kernel is image(m), and
    the cokernel dimension. """
    GF = type(m)
    rows = m.shape[0]
    if rows == 0:
        return GF.Zeros((0, 0)), 0
    left = kernel_basis(m.T)
    return left.T.copy(), left.shape[1]


def in_span(basis, v):
    v = v.reshape(-1, 1)
    if basis.shape[1] == 0:
        return not np.any(to_ints(v))
    return solve(basis, v) is not None


def is_invertible(m):
    return m.shape[0] == m.shape[1] and rank(m) == m.shape[0]


def inverse(m):
    if m.shape[0] != m.shape[1]:
        raise ContractError('cannot invert a %dx%d matrix' % m.shape)
    if m.shape[0] == 0:
        return m.copy()
    if not is_invertible(m):
        raise DomainError('matrix is singular')
    return np.linalg.inv(m)


def matrix_power(m, exponent):
    result = type(m).Identity(m.shape[0]) if m.shape[0] else m.copy()
    base = m
    while exponent:
        if exponent & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        exponent >>= 1
    return result


# ---------------------------------
# Enumeration
# ---------------------------------

def gaussian_binomial(n, k, q):
    """ Number of k-dimensional subspaces of F_q^n. """
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q**(n - i) - 1
        den *= q**(i + 1) - 1
    return num // den


def count_subspaces(n, q):
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def all_vectors_ints(dim, q):
    """ Every vector of F_q^dim as integer rows, in lexicographic order, so
    that row i is the base-q expansion of i. """
    idx = np.arange(q**dim, dtype=np.int64)
    powers = q**np.arange(dim - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % q


def all_vectors(dim, field):
    return field.GF(all_vectors_ints(dim, field.q))


def projective_points(dim, field):
    """ One representative (first non-zero entry 1) of every line in
    F_q^dim, ordered by pivot position, then lexicographically. """
    rows = []
    for pivot in range(dim):
        rest = all_vectors_ints(dim - pivot - 1, field.q)
        block = np.zeros((rest.shape[0], dim), dtype=np.int64)
        block[:, pivot] = 1
        block[:, pivot + 1:] = rest
        rows.append(block)
    if not rows:
        return field.zeros(0, 0)
    return field.GF(np.concatenate(rows, axis=0))


def enumerate_subspaces(dim, field, config=None, bound=None):
    """ Yield every subspace of F_q^dim exactly once, as a canonical column
    basis, ordered by dimension, then pivot set, then free entries. """

    limit = bound if bound is not None else resolve(config).subspace_bound
    if field.q**dim > limit:
        refuse('subspace enumeration of F_%d^%d' % (field.q, dim),
               field.q**dim, limit)

    GF = field.GF
    q = field.q
    for r in range(dim + 1):
        for pivots in itertools.combinations(range(dim), r):
            pivot_set = set(pivots)
            free = [(i, j) for i, piv in enumerate(pivots)
                    for j in range(piv + 1, dim) if j not in pivot_set]
            base = np.zeros((r, dim), dtype=np.int64)
            for i, piv in enumerate(pivots):
                base[i, piv] = 1
            for values in itertools.product(range(q), repeat=len(free)):
                rows = base.copy()
                for (i, j), val in zip(free, values):
                    rows[i, j] = val
                yield GF(np.ascontiguousarray(rows.T))


@functools.lru_cache(maxsize=None)
def _gl_ints(n, p, k, projective):
    field = FieldDesc(p, k)
    q = field.q
    vecs = all_vectors_ints(n, q)
    powers = q**np.arange(n - 1, -1, -1, dtype=np.int64)
    found = []

    def span_codes(cols):
        coeffs = all_vectors(len(cols), field)
        combos = to_ints(matmul(coeffs, field.GF(np.array(cols))))
        return set((combos @ powers).tolist())

    def extend(cols):
        if len(cols) == n:
            found.append(np.array(cols).T)
            return
        span = span_codes(cols) if cols else {0}
        for code in range(1, q**n):
            if code in span:
                continue
            if projective and not cols:
                # first non-zero entry of the first column is 1
                nz = vecs[code][np.flatnonzero(vecs[code])[0]]
                if nz != 1:
                    continue
            extend(cols + [vecs[code]])

    if n == 0:
        return np.zeros((1, 0, 0), dtype=np.int64)
    extend([])
    return np.array(found, dtype=np.int64)


def gl_order(n, q):
    order = 1
    for i in range(n):
        order *= q**n - q**i
    return order


def enumerate_gl_ints(n, field, projective=False):
    """ All invertible n x n matrices (columns chosen in lexicographic
    order) as an int array of shape (count, n, n). With projective=True,
    one matrix per scalar class. """
    return _gl_ints(n, field.p, field.k, bool(projective))


def enumerate_gl(n, field, projective=False):
    return field.GF(enumerate_gl_ints(n, field, projective))


def batched_matmul_ints(field, a, b):
    """ Broadcasting matrix product of integer-encoded field arrays. Prime
    fields reduce an integer product mod p; extension fields go through
    galois elementwise products. """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[-1] == 0:
        shape = np.broadcast_shapes(a.shape[:-2], b.shape[:-2])
        return np.zeros(shape + (a.shape[-2], b.shape[-1]), dtype=np.int64)
    if field.is_prime:
        return np.matmul(a, b) % field.p
    GF = field.GF
    prod = GF(a)[..., :, :, None] * GF(b)[..., None, :, :]
    return to_ints(np.add.reduce(prod, axis=-2))


# ---------------------------------
# Bit-packed F_2 layout
# ---------------------------------

def pack_f2(m):
    """ Pack an F_2 matrix into uint64 row words, 64 entries per word,
    column j living in bit j % 64 of word j // 64. """
    bits = to_ints(m).astype(np.uint8)
    if np.any(bits > 1):
        raise DomainError('pack_f2 needs an F_2 matrix')
    rows, cols = bits.shape
    words = max(1, -(-cols // WORD_BITS))
    padded = np.zeros((rows, words * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = bits
    packed = np.packbits(padded, axis=1, bitorder='little')
    return np.ascontiguousarray(packed).view('<u8').reshape(rows, words)


def rank_f2_packed(words):
    """ Rank of a bit-packed F_2 matrix by xor elimination. """
    rows = np.array(words, dtype=np.uint64)
    nrows = rows.shape[0]
    rk = 0
    for w in range(rows.shape[1] if nrows else 0):
        for bit in range(WORD_BITS):
            mask = np.uint64(1) << np.uint64(bit)
            hits = np.flatnonzero(rows[rk:, w] & mask)
            if hits.size == 0:
                continue
            pivot = rk + hits[0]
            if pivot != rk:
                rows[[rk, pivot]] = rows[[pivot, rk]]
            others = np.flatnonzero(rows[:, w] & mask)
            others = others[others != rk]
            if others.size:
                rows[others] ^= rows[rk]
            rk += 1
            if rk == nrows:
                return rk
    return rk


def fast_rank(m, field):
    """ Rank through the packed layout over F_2, row reduction otherwise. """
    if field.q == 2 and m.size:
        return rank_f2_packed(pack_f2(m))
    return rank(m)


# ---------------------------------
# Seeded randomness
# ---------------------------------

def make_rng(seed=None):
    """ Deterministic generator for every random-trials contract. """
    return np.random.default_rng(seed)


def random_matrix(field, rows, cols, rng):
    return field.GF(rng.integers(0, field.q, size=(rows, cols)))


def random_invertible(field, n, rng):
    while True:
        m = random_matrix(field, n, n, rng)
        if is_invertible(m):
            return m
