# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled arithmetic kernel; same interface as ``qcff._kernels.pure``."""

from libc.stdlib cimport free, malloc


cdef int* _copy_table(object seq) except NULL:
    cdef Py_ssize_t n = len(seq)
    cdef int* buf = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = seq[i]
    return buf


cdef class FieldKernel:
    cdef public int p, e, q, w
    cdef int* _exp
    cdef int* _log
    cdef int* _neg
    cdef int* _add
    cdef bint _has_add

    def __cinit__(self, p, e, q, w, exp, log, neg, add_table=None):
        self.p = p
        self.e = e
        self.q = q
        self.w = w
        self._exp = NULL
        self._log = NULL
        self._neg = NULL
        self._add = NULL
        self._exp = _copy_table(exp)
        self._log = _copy_table(log)
        self._neg = _copy_table(neg)
        self._has_add = add_table is not None
        if self._has_add:
            self._add = _copy_table(add_table)

    def __dealloc__(self):
        if self._exp != NULL:
            free(self._exp)
        if self._log != NULL:
            free(self._log)
        if self._neg != NULL:
            free(self._neg)
        if self._add != NULL:
            free(self._add)

    # -- scalar ops ---------------------------------------------------------

    cdef inline int c_add(self, int a, int b):
        cdef int out, scale, pp
        if self._has_add:
            return self._add[<Py_ssize_t> a * self.q + b]
        pp = self.p
        if self.e == 1:
            return (a + b) % pp
        out = 0
        scale = 1
        while a or b:
            out += ((a % pp + b % pp) % pp) * scale
            a //= pp
            b //= pp
            scale *= pp
        return out

    cdef inline int c_mul(self, int a, int b):
        if a == 0 or b == 0:
            return 0
        return self._exp[(<long long> self._log[a] + self._log[b]) % self.w]

    cdef inline int c_sub(self, int a, int b):
        return self.c_add(a, self._neg[b])

    cdef inline int c_inv(self, int a):
        return self._exp[(self.w - self._log[a]) % self.w]

    def fadd(self, int a, int b):
        return self.c_add(a, b)

    def fneg(self, int a):
        return self._neg[a]

    def fsub(self, int a, int b):
        return self.c_sub(a, b)

    def fmul(self, int a, int b):
        return self.c_mul(a, b)

    def finv(self, int a):
        return self.c_inv(a)

    # -- C-level polynomial helpers ------------------------------------------
    # Dense coefficient buffers, ascending degree; lengths track the stripped
    # representation (length 0 = zero polynomial).

    cdef Py_ssize_t c_mul_into(self, int* a, Py_ssize_t la, int* b,
                               Py_ssize_t lb, int* out):
        cdef Py_ssize_t i, j, lo
        cdef int ca, cb
        cdef long long idx
        if la == 0 or lb == 0:
            return 0
        lo = la + lb - 1
        for i in range(lo):
            out[i] = 0
        for i in range(la):
            ca = a[i]
            if ca == 0:
                continue
            idx = self._log[ca]
            for j in range(lb):
                cb = b[j]
                if cb:
                    out[i + j] = self.c_add(
                        out[i + j], self._exp[(idx + self._log[cb]) % self.w])
        while lo > 0 and out[lo - 1] == 0:
            lo -= 1
        return lo

    cdef Py_ssize_t c_rem_inplace(self, int* f, Py_ssize_t lf, int* g,
                                  Py_ssize_t lg, int* quot):
        # Reduces f modulo g in place; writes the quotient when quot != NULL.
        # Returns the remainder length.
        cdef Py_ssize_t dg = lg - 1
        cdef Py_ssize_t i, j
        cdef int c, inv_lc
        if lf - 1 < dg:
            return lf
        inv_lc = self.c_inv(g[lg - 1])
        for i in range(lf - dg - 1, -1, -1):
            c = self.c_mul(f[i + dg], inv_lc)
            if quot != NULL:
                quot[i] = c
            if c:
                for j in range(dg + 1):
                    f[i + j] = self.c_sub(f[i + j], self.c_mul(c, g[j]))
        lf = dg
        while lf > 0 and f[lf - 1] == 0:
            lf -= 1
        return lf

    cdef int* _buf(self, object seq, Py_ssize_t extra) except NULL:
        cdef Py_ssize_t n = len(seq)
        cdef int* buf = <int*> malloc((n + extra + 1) * sizeof(int))
        cdef Py_ssize_t i
        if buf == NULL:
            raise MemoryError()
        for i in range(n):
            buf[i] = seq[i]
        return buf

    cdef list _to_list(self, int* buf, Py_ssize_t n):
        cdef Py_ssize_t i
        return [buf[i] for i in range(n)]

    # -- polynomial ops -------------------------------------------------------

    def padd(self, f, g):
        cdef Py_ssize_t lf = len(f), lg = len(g), i, lo
        if lf < lg:
            f, g = g, f
            lf, lg = lg, lf
        out = list(f)
        for i in range(lg):
            out[i] = self.c_add(out[i], g[i])
        lo = lf
        while lo > 0 and out[lo - 1] == 0:
            lo -= 1
        del out[lo:]
        return out

    def psub(self, f, g):
        return self.padd(f, [self._neg[<int> c] for c in g])

    def pscale(self, f, int c):
        if c == 0:
            return []
        return [self.c_mul(x, c) for x in f]

    def pmul(self, f, g):
        cdef Py_ssize_t lf = len(f), lg = len(g), lo
        if lf == 0 or lg == 0:
            return []
        cdef int* fa = self._buf(f, 0)
        cdef int* ga = NULL
        cdef int* out = NULL
        try:
            ga = self._buf(g, 0)
            out = <int*> malloc((lf + lg) * sizeof(int))
            if out == NULL:
                raise MemoryError()
            lo = self.c_mul_into(fa, lf, ga, lg, out)
            return self._to_list(out, lo)
        finally:
            free(fa)
            if ga != NULL:
                free(ga)
            if out != NULL:
                free(out)

    def pdivrem(self, f, g):
        cdef Py_ssize_t lf = len(f), lg = len(g), lq, lr
        if lg == 0:
            raise ZeroDivisionError("polynomial division by zero")
        if lf < lg:
            return [], list(f)
        cdef int* fa = self._buf(f, 0)
        cdef int* ga = NULL
        cdef int* qa = NULL
        try:
            ga = self._buf(g, 0)
            lq = lf - lg + 1
            qa = <int*> malloc(lq * sizeof(int))
            if qa == NULL:
                raise MemoryError()
            lr = self.c_rem_inplace(fa, lf, ga, lg, qa)
            while lq > 0 and qa[lq - 1] == 0:
                lq -= 1
            return self._to_list(qa, lq), self._to_list(fa, lr)
        finally:
            free(fa)
            if ga != NULL:
                free(ga)
            if qa != NULL:
                free(qa)

    def prem(self, f, g):
        cdef Py_ssize_t lf = len(f), lg = len(g), lr
        if lg == 0:
            raise ZeroDivisionError("polynomial division by zero")
        if lf < lg:
            return list(f)
        cdef int* fa = self._buf(f, 0)
        cdef int* ga = NULL
        try:
            ga = self._buf(g, 0)
            lr = self.c_rem_inplace(fa, lf, ga, lg, NULL)
            return self._to_list(fa, lr)
        finally:
            free(fa)
            if ga != NULL:
                free(ga)

    def pmonic(self, f):
        cdef Py_ssize_t lf = len(f)
        if lf == 0 or f[lf - 1] == 1:
            return list(f)
        return self.pscale(f, self.c_inv(f[lf - 1]))

    def pgcd(self, f, g):
        cdef Py_ssize_t la = len(f), lb = len(g), lr
        cdef Py_ssize_t cap = (la if la > lb else lb) + 1
        cdef int* a = self._buf(f, cap)
        cdef int* b = NULL
        cdef int* t = NULL
        try:
            b = self._buf(g, cap)
            while lb > 0:
                lr = self.c_rem_inplace(a, la, b, lb, NULL)
                t = a
                a = b
                b = t
                la = lb
                lb = lr
            out = self._to_list(a, la)
        finally:
            free(a)
            if b != NULL:
                free(b)
        return self.pmonic(out)

    def ppowmod(self, f, n, m):
        cdef Py_ssize_t lm = len(m)
        if lm < 2:
            raise ZeroDivisionError("powmod modulus must be nonconstant")
        cdef Py_ssize_t dm = lm - 1
        cdef Py_ssize_t cap = 2 * dm + 2
        cdef int* ma = self._buf(m, 0)
        cdef int* base = NULL
        cdef int* acc = NULL
        cdef int* prod = NULL
        cdef int* t = NULL
        cdef Py_ssize_t lbase, lacc, lp
        try:
            base = self._buf(f, cap)
            acc = <int*> malloc(cap * sizeof(int))
            prod = <int*> malloc(cap * sizeof(int))
            if acc == NULL or prod == NULL:
                raise MemoryError()
            lbase = self.c_rem_inplace(base, len(f), ma, lm, NULL)
            acc[0] = 1
            lacc = 1
            while n > 0:
                if n & 1:
                    lp = self.c_mul_into(acc, lacc, base, lbase, prod)
                    lp = self.c_rem_inplace(prod, lp, ma, lm, NULL)
                    t = acc
                    acc = prod
                    prod = t
                    lacc = lp
                n >>= 1
                if n:
                    lp = self.c_mul_into(base, lbase, base, lbase, prod)
                    lp = self.c_rem_inplace(prod, lp, ma, lm, NULL)
                    t = base
                    base = prod
                    prod = t
                    lbase = lp
            return self._to_list(acc, lacc)
        finally:
            free(ma)
            if base != NULL:
                free(base)
            if acc != NULL:
                free(acc)
            if prod != NULL:
                free(prod)
