"""Pure-Python/NumPy versions of the eigensolver kernels.

Used when the compiled ``_kernels`` extension is unavailable or when
``NADOSC_PURE_PYTHON=1`` is set. Same signatures, same algorithms, same
operation order per step; results agree with the compiled path to rounding.
"""

import math

import numpy as np

EPS = np.finfo(float).eps
# Jacobi: off-diagonal entries below SKIP * (|a_pp| + |a_qq|) are zeroed
SKIP = 1e-18
TINY = 1e-290


def tridiagonalize(a):
    """Reduce a Hermitian matrix to real symmetric tridiagonal form.

    Returns ``(d, e, q)`` with ``q^H a q = tridiag(e, d, e)``.
    """
    A = np.array(a, dtype=np.complex128, copy=True)
    n = A.shape[0]
    d = np.zeros(n)
    e = np.zeros(max(n - 1, 0))
    vs = []
    for k in range(n - 1):
        s0 = k + 1
        alpha = A[s0, k]
        x = A[s0 + 1:, k]
        xnorm2 = float(np.vdot(x, x).real)
        if xnorm2 == 0.0 and alpha.imag == 0.0:
            e[k] = alpha.real
            continue
        beta = -math.copysign(math.sqrt(abs(alpha) ** 2 + xnorm2), alpha.real)
        tau = (beta - alpha.real) / beta - 1j * (alpha.imag / beta)
        v = np.empty(n - s0, dtype=np.complex128)
        v[0] = 1.0
        v[1:] = x / (alpha - beta)
        e[k] = beta
        sub = A[s0:, s0:]
        w = sub @ v
        s = float(np.vdot(v, w).real)
        y = tau * w - 0.5 * abs(tau) ** 2 * s * v
        sub -= np.outer(y, v.conj()) + np.outer(v, y.conj())
        vs.append((k, tau, v))
    d[:] = A.diagonal().real

    q = np.eye(n, dtype=np.complex128)
    for k, tau, v in reversed(vs):
        sub = q[k + 1:, k + 1:]
        sub -= np.outer(tau * v, v.conj() @ sub)
    return d, e, q


def tridiag_eigen(d, e, max_iter=60):
    """Implicit QL on a real symmetric tridiagonal; see the compiled twin."""
    d = np.array(d, dtype=np.float64, copy=True)
    n = d.shape[0]
    e_full = np.zeros(n)
    e_full[: n - 1] = e
    zt = np.eye(n)
    dl = d.tolist()
    el = e_full.tolist()
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(dl[m]) + abs(dl[m + 1])
                if abs(el[m]) <= EPS * dd:
                    break
                m += 1
            if m == l:
                break
            if it == max_iter:
                raise ArithmeticError("tridiagonal QL did not converge")
            it += 1
            g = (dl[l + 1] - dl[l]) / (2.0 * el[l])
            r = math.hypot(g, 1.0)
            g = dl[m] - dl[l] + el[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * el[i]
                b = c * el[i]
                r = math.hypot(f, g)
                el[i + 1] = r
                if r == 0.0:
                    dl[i + 1] -= p
                    el[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = dl[i + 1] - p
                r = (dl[i] - g) * s + 2.0 * c * b
                p = s * r
                dl[i + 1] = g + p
                g = c * r - b
                zi = zt[i].copy()
                zt[i] *= c
                zt[i] -= s * zt[i + 1]
                zt[i + 1] *= c
                zt[i + 1] += s * zi
            if underflow:
                continue
            dl[l] -= p
            el[l] = g
            el[m] = 0.0
    return np.array(dl), zt.T.copy()


def jacobi_eigen(a, rel_tol=1e-12, max_sweeps=100):
    """Cyclic Jacobi diagonalization of a Hermitian matrix; see the compiled twin."""
    A = np.array(a, dtype=np.complex128, copy=True)
    n = A.shape[0]
    A[np.diag_indices(n)] = A.diagonal().real
    vt = np.eye(n, dtype=np.complex128)
    sweep = 0
    while True:
        diag = float(np.sum(A.diagonal().real ** 2))
        upper = A[np.triu_indices(n, 1)]
        off = 2.0 * float(np.vdot(upper, upper).real)
        if math.sqrt(off) <= rel_tol * math.sqrt(diag):
            break
        if sweep == max_sweeps:
            raise ArithmeticError("Jacobi iteration hit the sweep cap")
        sweep += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = abs(A[p, q])
                app = A[p, p].real
                aqq = A[q, q].real
                if g <= SKIP * (abs(app) + abs(aqq)) or g < TINY:
                    A[p, q] = A[q, p] = 0.0
                    continue
                ph = A[p, q] / g
                theta = (aqq - app) / (2.0 * g)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                x = A[:, p].copy()
                y = A[:, q] * ph.conjugate()
                A[:, p] = c * x - s * y
                A[:, q] = s * x + c * y
                x = A[p, :].copy()
                y = A[q, :] * ph
                A[p, :] = c * x - s * y
                A[q, :] = s * x + c * y
                A[p, q] = A[q, p] = 0.0
                A[p, p] = app - t * g
                A[q, q] = aqq + t * g
                x = vt[p, :].copy()
                y = vt[q, :] * ph
                vt[p, :] = c * x - s * y
                vt[q, :] = s * x + c * y
    return A.diagonal().real.copy(), vt.conj().T.copy(), sweep
