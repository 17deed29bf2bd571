# cython: boundscheck=False, wraparound=False, cdivision=True
# Compiled scalar kernels: the coprime lattice sum (OpenMP across m-rows)
# and the K-Bessel trapezoid rule.  Conventions match _pure.py exactly; see
# the docstrings there.  The x-batched lattice helper lives only in _pure:
# numpy's SIMD-vectorized exp/log measures faster than these scalar loops
# for that access pattern (see benchmarks/bench_kernels.py).

from cython.parallel cimport prange

from libc.math cimport cos, cosh, exp, log, pow, sin


cdef inline long _gcd(long a, long b) nogil:
    cdef long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def lattice_sum(double x, double y, double s_re, double s_im, long radius):
    cdef double acc_re = 0.0, acc_im = 0.0
    cdef double my2, u, w, logw, amp
    cdef long m, n
    if s_im == 0.0:
        for m in prange(1, radius + 1, nogil=True, schedule='static'):
            my2 = (m * y) * (m * y)
            for n in range(-radius, radius + 1):
                if _gcd(m, n if n >= 0 else -n) != 1:
                    continue
                u = m * x + n
                acc_re += pow(u * u + my2, -s_re)
    else:
        for m in prange(1, radius + 1, nogil=True, schedule='static'):
            my2 = (m * y) * (m * y)
            for n in range(-radius, radius + 1):
                if _gcd(m, n if n >= 0 else -n) != 1:
                    continue
                u = m * x + n
                logw = log(u * u + my2)
                amp = exp(-s_re * logw)
                acc_re += amp * cos(s_im * logw)
                acc_im -= amp * sin(s_im * logw)
    return complex(1.0 + acc_re, acc_im)


def bessel_k_trapezoid(double a, double b, double y, double h, long nsteps):
    cdef double acc_re = 0.5 * exp(-y)  # f(0)/2
    cdef double acc_im = 0.0
    cdef double t, c, e_plus, e_minus
    cdef long k
    with nogil:
        for k in range(1, nsteps + 1):
            t = k * h
            c = -y * cosh(t)
            e_plus = exp(c + a * t)
            e_minus = exp(c - a * t)
            acc_re += 0.5 * (e_plus + e_minus) * cos(b * t)
            acc_im += 0.5 * (e_plus - e_minus) * sin(b * t)
    return complex(h * acc_re, h * acc_im)
