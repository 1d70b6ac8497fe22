# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled eigensolver kernels.

Same call signatures and results as :mod:`nadosc._kernels_py`; the
selector in :mod:`nadosc.kernels` picks whichever is importable.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport fabs, sqrt, hypot, copysign

cnp.import_array()

ctypedef double complex cplx

cdef double EPS = 2.220446049250313e-16
# Jacobi: off-diagonal entries below SKIP * (|a_pp| + |a_qq|) are zeroed
cdef double SKIP = 1e-18
cdef double TINY = 1e-290


cdef inline double cabs2(cplx z) nogil:
    return z.real * z.real + z.imag * z.imag


def tridiagonalize(a):
    """Reduce a Hermitian matrix to real symmetric tridiagonal form.

    Returns ``(d, e, q)`` with ``q^H a q = tridiag(e, d, e)``. Only the
    lower triangle of ``a`` is read.
    """
    cdef cnp.ndarray[cplx, ndim=2] A = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = A.shape[0]
    cdef cnp.ndarray[double, ndim=1] d = np.zeros(n)
    cdef cnp.ndarray[double, ndim=1] e = np.zeros(max(n - 1, 0))
    cdef cnp.ndarray[cplx, ndim=2] V = np.zeros((n, n), dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] taus = np.zeros(n, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] w = np.zeros(n, dtype=np.complex128)
    cdef cplx[:, ::1] Am = A
    cdef cplx[:, ::1] Vm = V
    cdef cplx[::1] wm = w
    cdef Py_ssize_t k, i, j, m, s0
    cdef cplx alpha, tau, vi, wi, yi, acc, aij, ys
    cdef double xnorm2, beta, alphr, alphi, s, t2
    cdef cplx inv

    with nogil:
        for k in range(n - 1):
            s0 = k + 1
            m = n - s0
            alpha = Am[s0, k]
            alphr = alpha.real
            alphi = alpha.imag
            xnorm2 = 0.0
            for i in range(s0 + 1, n):
                xnorm2 += cabs2(Am[i, k])
            if xnorm2 == 0.0 and alphi == 0.0:
                taus[k] = 0.0
                e[k] = alphr
                continue
            beta = -copysign(sqrt(alphr * alphr + alphi * alphi + xnorm2), alphr)
            tau = (beta - alphr) / beta - 1j * (alphi / beta)
            taus[k] = tau
            inv = 1.0 / (alpha - beta)
            Vm[k, s0] = 1.0
            for i in range(s0 + 1, n):
                Vm[k, i] = Am[i, k] * inv
            e[k] = beta

            # w = A22 v, using the lower triangle only
            for i in range(s0, n):
                wm[i] = 0.0
            for i in range(s0, n):
                vi = Vm[k, i]
                acc = 0.0
                for j in range(s0, i):
                    aij = Am[i, j]
                    acc = acc + aij * Vm[k, j]
                    wm[j] = wm[j] + aij.conjugate() * vi
                wm[i] = wm[i] + acc + Am[i, i].real * vi
            s = 0.0
            for i in range(s0, n):
                s += (Vm[k, i].conjugate() * wm[i]).real
            t2 = cabs2(tau)
            # y = tau w - |tau|^2 s v / 2, stored back into w
            for i in range(s0, n):
                wm[i] = tau * wm[i] - 0.5 * t2 * s * Vm[k, i]
            for i in range(s0, n):
                vi = Vm[k, i]
                yi = wm[i]
                for j in range(s0, i + 1):
                    Am[i, j] = Am[i, j] - yi * Vm[k, j].conjugate() - vi * wm[j].conjugate()
                Am[i, i] = Am[i, i].real

        for k in range(n):
            d[k] = Am[k, k].real

    q = _accumulate(V, taus, n)
    return d, e, q


cdef object _accumulate(cnp.ndarray[cplx, ndim=2] V, cnp.ndarray[cplx, ndim=1] taus, Py_ssize_t n):
    # backward accumulation of Q = H_0 H_1 ... H_{n-2}
    cdef cnp.ndarray[cplx, ndim=2] Q = np.eye(n, dtype=np.complex128)
    cdef cnp.ndarray[cplx, ndim=1] z = np.zeros(n, dtype=np.complex128)
    cdef cplx[:, ::1] Qm = Q
    cdef cplx[:, ::1] Vm = V
    cdef cplx[::1] zm = z
    cdef Py_ssize_t k, i, j, s0
    cdef cplx tau, cv, tv
    with nogil:
        for k in range(n - 2, -1, -1):
            tau = taus[k]
            if tau == 0.0:
                continue
            s0 = k + 1
            for j in range(s0, n):
                zm[j] = 0.0
            for i in range(s0, n):
                cv = Vm[k, i].conjugate()
                for j in range(s0, n):
                    zm[j] = zm[j] + cv * Qm[i, j]
            for i in range(s0, n):
                tv = tau * Vm[k, i]
                for j in range(s0, n):
                    Qm[i, j] = Qm[i, j] - tv * zm[j]
    return Q


def tridiag_eigen(d, e, int max_iter=60):
    """Implicit QL with Wilkinson-type shifts on a real symmetric tridiagonal.

    Returns ``(w, z)``: unsorted eigenvalues and the orthogonal matrix whose
    columns are the matching eigenvectors. Raises ``ArithmeticError`` when an
    eigenvalue needs more than ``max_iter`` sweeps.
    """
    cdef cnp.ndarray[double, ndim=1] D = np.array(d, dtype=np.float64, copy=True)
    cdef Py_ssize_t n = D.shape[0]
    cdef cnp.ndarray[double, ndim=1] E = np.zeros(n)
    if n > 1:
        E[: n - 1] = e
    cdef cnp.ndarray[double, ndim=2] Zt = np.eye(n)
    cdef double[::1] dm = D
    cdef double[::1] em = E
    cdef double[:, ::1] zt = Zt
    cdef Py_ssize_t l, m, i, k
    cdef int it
    cdef double dd, g, r, s, c, p, f, b, zi
    cdef bint failed = False, underflow
    with nogil:
        for l in range(n):
            it = 0
            while True:
                m = l
                while m < n - 1:
                    dd = fabs(dm[m]) + fabs(dm[m + 1])
                    if fabs(em[m]) <= EPS * dd:
                        break
                    m += 1
                if m == l:
                    break
                if it == max_iter:
                    failed = True
                    break
                it += 1
                g = (dm[l + 1] - dm[l]) / (2.0 * em[l])
                r = hypot(g, 1.0)
                g = dm[m] - dm[l] + em[l] / (g + copysign(r, g))
                s = 1.0
                c = 1.0
                p = 0.0
                underflow = False
                i = m - 1
                while i >= l:
                    f = s * em[i]
                    b = c * em[i]
                    r = hypot(f, g)
                    em[i + 1] = r
                    if r == 0.0:
                        dm[i + 1] -= p
                        em[m] = 0.0
                        underflow = True
                        break
                    s = f / r
                    c = g / r
                    g = dm[i + 1] - p
                    r = (dm[i] - g) * s + 2.0 * c * b
                    p = s * r
                    dm[i + 1] = g + p
                    g = c * r - b
                    for k in range(n):
                        f = zt[i + 1, k]
                        zi = zt[i, k]
                        zt[i + 1, k] = s * zi + c * f
                        zt[i, k] = c * zi - s * f
                    i -= 1
                if underflow:
                    continue
                dm[l] -= p
                em[l] = g
                em[m] = 0.0
            if failed:
                break
    if failed:
        raise ArithmeticError("tridiagonal QL did not converge")
    return D, Zt.T.copy()


def jacobi_eigen(a, double rel_tol=1e-12, int max_sweeps=100):
    """Cyclic Jacobi diagonalization of a Hermitian matrix.

    Returns ``(w, v, sweeps)``. Convergence: off-diagonal Frobenius mass at
    most ``rel_tol`` times the diagonal mass. Raises ``ArithmeticError``
    after ``max_sweeps`` sweeps.
    """
    cdef cnp.ndarray[cplx, ndim=2] A = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = A.shape[0]
    cdef cnp.ndarray[cplx, ndim=2] Vt = np.eye(n, dtype=np.complex128)
    cdef cplx[:, ::1] am = A
    cdef cplx[:, ::1] vt = Vt
    cdef Py_ssize_t p, q, k
    cdef int sweep = 0
    cdef double off, diag, g, theta, t, c, s, app, aqq
    cdef cplx ph, x, y
    for k in range(n):
        am[k, k] = am[k, k].real
    with nogil:
        while True:
            off = 0.0
            diag = 0.0
            for p in range(n):
                diag += am[p, p].real * am[p, p].real
                for q in range(p + 1, n):
                    off += 2.0 * cabs2(am[p, q])
            if sqrt(off) <= rel_tol * sqrt(diag):
                break
            if sweep == max_sweeps:
                break
            sweep += 1
            for p in range(n - 1):
                for q in range(p + 1, n):
                    g = sqrt(cabs2(am[p, q]))
                    app = am[p, p].real
                    aqq = am[q, q].real
                    if g <= SKIP * (fabs(app) + fabs(aqq)) or g < TINY:
                        am[p, q] = 0.0
                        am[q, p] = 0.0
                        continue
                    ph = am[p, q] / g
                    theta = (aqq - app) / (2.0 * g)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    # columns: A <- A U, U = diag(1, conj(ph)) R
                    for k in range(n):
                        x = am[k, p]
                        y = am[k, q] * ph.conjugate()
                        am[k, p] = c * x - s * y
                        am[k, q] = s * x + c * y
                    # rows: A <- U^H A
                    for k in range(n):
                        x = am[p, k]
                        y = am[q, k] * ph
                        am[p, k] = c * x - s * y
                        am[q, k] = s * x + c * y
                    am[p, q] = 0.0
                    am[q, p] = 0.0
                    am[p, p] = app - t * g
                    am[q, q] = aqq + t * g
                    for k in range(n):
                        x = vt[p, k]
                        y = vt[q, k] * ph
                        vt[p, k] = c * x - s * y
                        vt[q, k] = s * x + c * y
    if sqrt(off) > rel_tol * sqrt(diag):
        raise ArithmeticError("Jacobi iteration hit the sweep cap")
    w = np.array([A[k, k].real for k in range(n)])
    return w, Vt.conj().T.copy(), sweep
