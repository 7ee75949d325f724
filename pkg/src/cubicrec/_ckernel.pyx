# cython: language_level=3, boundscheck=False, wraparound=False
"""GMP-backed companion-matrix kernel. Same contract as ``_pykernel``."""

cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct *mpz_ptr
    ctypedef const __mpz_struct *mpz_srcptr

    void mpz_init(mpz_ptr)
    void mpz_clear(mpz_ptr)
    void mpz_set(mpz_ptr, mpz_srcptr)
    void mpz_set_ui(mpz_ptr, unsigned long)
    void mpz_mul(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_addmul(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_submul(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_add(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_mod(mpz_ptr, mpz_srcptr, mpz_srcptr)
    void mpz_swap(mpz_ptr, mpz_ptr)
    int mpz_tstbit(mpz_srcptr, unsigned long)
    size_t mpz_sizeinbase(mpz_srcptr, int)
    void mpz_import(mpz_ptr, size_t, int, size_t, int, size_t, const void *)
    void *mpz_export(void *, size_t *, int, size_t, int, size_t, mpz_srcptr)


cdef void _from_py(mpz_ptr z, object x):
    cdef bytes raw = x.to_bytes((x.bit_length() + 7) // 8, "big")
    mpz_import(z, len(raw), 1, 1, 1, 0, <const char *>raw)


cdef object _to_py(mpz_srcptr z):
    cdef size_t nbytes = (mpz_sizeinbase(z, 2) + 7) // 8
    cdef size_t count = 0
    cdef bytearray buf = bytearray(nbytes)
    cdef char *ptr = buf
    mpz_export(ptr, &count, 1, 1, 1, 0, z)
    return int.from_bytes(bytes(buf[:count]), "big")


cdef class _Power:
    # owns the GMP state for one exponentiation
    cdef __mpz_struct r[9]
    cdef __mpz_struct t[9]
    cdef __mpz_struct a, b, m, e, tmp

    def __cinit__(self):
        cdef int i
        for i in range(9):
            mpz_init(&self.r[i])
            mpz_init(&self.t[i])
        mpz_init(&self.a)
        mpz_init(&self.b)
        mpz_init(&self.m)
        mpz_init(&self.e)
        mpz_init(&self.tmp)

    def __dealloc__(self):
        cdef int i
        for i in range(9):
            mpz_clear(&self.r[i])
            mpz_clear(&self.t[i])
        mpz_clear(&self.a)
        mpz_clear(&self.b)
        mpz_clear(&self.m)
        mpz_clear(&self.e)
        mpz_clear(&self.tmp)

    cdef void square(self):
        cdef int i, j
        for i in range(3):
            for j in range(3):
                mpz_mul(&self.t[3 * i + j], &self.r[3 * i], &self.r[j])
                mpz_addmul(&self.t[3 * i + j], &self.r[3 * i + 1], &self.r[3 + j])
                mpz_addmul(&self.t[3 * i + j], &self.r[3 * i + 2], &self.r[6 + j])
                mpz_mod(&self.t[3 * i + j], &self.t[3 * i + j], &self.m)
        for i in range(9):
            mpz_swap(&self.r[i], &self.t[i])

    cdef void times_companion(self):
        cdef int i
        for i in range(3):
            # (x, y, z) -> (a x + y, z - b x, x)
            mpz_set(&self.tmp, &self.r[3 * i])
            mpz_addmul(&self.r[3 * i + 1], &self.tmp, &self.a)
            mpz_mod(&self.r[3 * i + 1], &self.r[3 * i + 1], &self.m)
            mpz_submul(&self.r[3 * i + 2], &self.tmp, &self.b)
            mpz_mod(&self.r[3 * i + 2], &self.r[3 * i + 2], &self.m)
            mpz_swap(&self.r[3 * i], &self.r[3 * i + 1])
            mpz_swap(&self.r[3 * i + 1], &self.r[3 * i + 2])

    cdef void run(self, object a, object b, object k, object m):
        cdef int i
        cdef long bit
        _from_py(&self.m, m)
        _from_py(&self.e, k)
        _from_py(&self.a, a % m)
        _from_py(&self.b, b % m)
        for i in range(9):
            mpz_set_ui(&self.r[i], 0)
        if m != 1:
            mpz_set_ui(&self.r[0], 1)
            mpz_set_ui(&self.r[4], 1)
            mpz_set_ui(&self.r[8], 1)
        for bit in range(<long>mpz_sizeinbase(&self.e, 2) - 1, -1, -1):
            self.square()
            if mpz_tstbit(&self.e, bit):
                self.times_companion()


def companion_power(a, b, k, m):
    """C**k mod m for k >= 0, left-to-right square-and-multiply."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    cdef _Power pw = _Power()
    cdef int i
    pw.run(a, b, k, m)
    out = []
    for i in range(9):
        out.append(_to_py(&pw.r[i]))
    return tuple(out)


def seq_forward(a, b, k, m):
    """s_k(a, b) mod m for k >= 0, seeded by s_1 = a, s_0 = 3, s_-1 = b."""
    if k < 0:
        raise ValueError("exponent must be non-negative")
    cdef _Power pw = _Power()
    pw.run(a, b, k, m)
    mpz_mul(&pw.tmp, &pw.r[3], &pw.a)
    mpz_set_ui(&pw.t[0], 3)
    mpz_addmul(&pw.tmp, &pw.r[4], &pw.t[0])
    mpz_addmul(&pw.tmp, &pw.r[5], &pw.b)
    mpz_mod(&pw.tmp, &pw.tmp, &pw.m)
    return _to_py(&pw.tmp)
