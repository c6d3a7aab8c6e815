# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact elimination kernels.

Same interface as ``_kernels_py``.  ``Echelon`` keeps its rows in a C buffer
of 64-bit integers and checks every multiply and subtract for overflow; on
overflow it raises ``OverflowError`` and the caller switches to the
arbitrary-precision implementation.  ``adjugate`` works on Python integers
(its entries are large minors) and only saves interpreter overhead.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcpy

cdef extern from *:
    """
    static inline int rh_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int rh_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int rh_mul_ovf(long long a, long long b, long long *r) nogil
    int rh_sub_ovf(long long a, long long b, long long *r) nogil

BACKEND = "cython"


cdef inline long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef class Echelon:
    cdef public int ncols
    cdef long long *data
    cdef int *piv
    cdef int nrows
    cdef int cap
    cdef long long *work

    def __cinit__(self, int ncols):
        self.ncols = ncols
        self.nrows = 0
        self.cap = 8
        self.data = <long long *> malloc(sizeof(long long) * self.cap * max(ncols, 1))
        self.piv = <int *> malloc(sizeof(int) * self.cap)
        self.work = <long long *> malloc(sizeof(long long) * max(ncols, 1))
        if self.data == NULL or self.piv == NULL or self.work == NULL:
            raise MemoryError()

    def __dealloc__(self):
        free(self.data)
        free(self.piv)
        free(self.work)

    @property
    def rank(self):
        return self.nrows

    @property
    def pivots(self):
        return [self.piv[i] for i in range(self.nrows)]

    @property
    def rows(self):
        cdef int i, j
        return [[self.data[i * self.ncols + j] for j in range(self.ncols)] for i in range(self.nrows)]

    cdef int _load(self, vector) except -1:
        cdef int j = 0
        if len(vector) != self.ncols:
            raise ValueError(f"expected {self.ncols} entries, got {len(vector)}")
        for x in vector:
            self.work[j] = x  # raises OverflowError when x does not fit
            j += 1
        return 0

    cdef int _reduce(self) except -1:
        cdef int i, j, c
        cdef int n = self.ncols
        cdef long long a, p, g, t1, t2
        cdef long long *row
        cdef long long *v = self.work
        for i in range(self.nrows):
            c = self.piv[i]
            a = v[c]
            if a == 0:
                continue
            row = self.data + i * n
            p = row[c]
            g = _gcd(p, a)
            p //= g
            a //= g
            for j in range(n):
                if rh_mul_ovf(p, v[j], &t1) or rh_mul_ovf(a, row[j], &t2) or rh_sub_ovf(t1, t2, &v[j]):
                    raise OverflowError("entry exceeds 64 bits")
        return 0

    def reduce(self, vector):
        self._load(vector)
        self._reduce()
        return [self.work[j] for j in range(self.ncols)]

    def contains(self, vector):
        cdef int j
        self._load(vector)
        self._reduce()
        for j in range(self.ncols):
            if self.work[j] != 0:
                return False
        return True

    def insert(self, vector):
        cdef int j, c = -1, n = self.ncols
        cdef long long g = 0
        cdef long long *v = self.work
        self._load(vector)
        self._reduce()
        for j in range(n):
            if v[j] != 0:
                c = j
                break
        if c < 0:
            return False
        for j in range(n):
            if v[j] != 0:
                g = _gcd(g, v[j])
        if v[c] < 0:
            g = -g
        if g != 1:
            for j in range(n):
                v[j] //= g
        if self.nrows == self.cap:
            self.cap *= 2
            self.data = <long long *> realloc(self.data, sizeof(long long) * self.cap * max(n, 1))
            self.piv = <int *> realloc(self.piv, sizeof(int) * self.cap)
            if self.data == NULL or self.piv == NULL:
                raise MemoryError()
        memcpy(self.data + self.nrows * n, v, sizeof(long long) * n)
        self.piv[self.nrows] = c
        self.nrows += 1
        return True


def adjugate(matrix):
    cdef Py_ssize_t k = len(matrix)
    cdef Py_ssize_t i, j, col, piv
    cdef list aug = []
    cdef list prow, row
    cdef object p, a, prev = 1
    for i in range(k):
        r = [int(x) for x in matrix[i]]
        if len(r) != k:
            raise ValueError("matrix must be square")
        aug.append(r + [1 if i == j else 0 for j in range(k)])
    for col in range(k):
        piv = -1
        for i in range(col, k):
            if (<list> aug[i])[col]:
                piv = i
                break
        if piv < 0:
            raise ZeroDivisionError("matrix is singular")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        prow = <list> aug[col]
        p = prow[col]
        for i in range(k):
            if i == col:
                continue
            row = <list> aug[i]
            a = row[col]
            if a:
                for j in range(2 * k):
                    row[j] = (p * row[j] - a * prow[j]) // prev
            elif p != prev:
                for j in range(2 * k):
                    row[j] = (p * row[j]) // prev
        prev = p
    D = (<list> aug[0])[0]
    return [(<list> aug[i])[k:] for i in range(k)], D
