# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled twin of ``pure.py``: LSTM step loops and the CTC
forward/backward recursion, written as explicit C loops. Semantics
match the pure backend; only summation order (and so the last few
ulps) may differ."""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, tanh, log1p, INFINITY

cnp.import_array()

NAME = "compiled"


cdef inline double _sigmoid(double x) nogil:
    if x >= 0.0:
        return 1.0 / (1.0 + exp(-x))
    cdef double e = exp(x)
    return e / (1.0 + e)


cdef inline double _logaddexp(double a, double b) nogil:
    if a == -INFINITY:
        return b
    if b == -INFINITY:
        return a
    if a >= b:
        return a + log1p(exp(b - a))
    return b + log1p(exp(a - b))


def lstm_forward(double[:, ::1] wi, double[:, ::1] wf,
                 double[:, ::1] wg, double[:, ::1] wo,
                 double[:, ::1] x):
    cdef Py_ssize_t T = x.shape[0]
    cdef Py_ssize_t D = x.shape[1]
    cdef Py_ssize_t H = wi.shape[0]
    cdef Py_ssize_t A = D + H + 1
    ii_a = np.empty((T, H))
    ff_a = np.empty((T, H))
    gg_a = np.empty((T, H))
    oo_a = np.empty((T, H))
    c_a = np.empty((T, H))
    h_a = np.empty((T, H))
    cdef double[:, ::1] ii = ii_a, ff = ff_a, gg = gg_a, oo = oo_a
    cdef double[:, ::1] c = c_a, h = h_a
    s_a = np.empty(A)
    cdef double[::1] s = s_a
    cdef Py_ssize_t t, j, k
    cdef double ai, af, ag, ao, cp
    s[A - 1] = 1.0
    with nogil:
        for t in range(T):
            for j in range(D):
                s[j] = x[t, j]
            for j in range(H):
                s[D + j] = h[t - 1, j] if t > 0 else 0.0
            for j in range(H):
                ai = 0.0
                af = 0.0
                ag = 0.0
                ao = 0.0
                for k in range(A):
                    ai += wi[j, k] * s[k]
                    af += wf[j, k] * s[k]
                    ag += wg[j, k] * s[k]
                    ao += wo[j, k] * s[k]
                ii[t, j] = _sigmoid(ai)
                ff[t, j] = _sigmoid(af)
                gg[t, j] = tanh(ag)
                oo[t, j] = _sigmoid(ao)
                cp = c[t - 1, j] if t > 0 else 0.0
                c[t, j] = ff[t, j] * cp + ii[t, j] * gg[t, j]
                h[t, j] = oo[t, j] * tanh(c[t, j])
    return ii_a, ff_a, gg_a, oo_a, c_a, h_a


def lstm_backward(double[:, ::1] wi, double[:, ::1] wf,
                  double[:, ::1] wg, double[:, ::1] wo,
                  double[:, ::1] x,
                  double[:, ::1] ii, double[:, ::1] ff,
                  double[:, ::1] gg, double[:, ::1] oo,
                  double[:, ::1] c, double[:, ::1] h,
                  double[:, ::1] dh_ext):
    cdef Py_ssize_t T = x.shape[0]
    cdef Py_ssize_t D = x.shape[1]
    cdef Py_ssize_t H = wi.shape[0]
    cdef Py_ssize_t A = D + H + 1
    dwi_a = np.zeros((H, A))
    dwf_a = np.zeros((H, A))
    dwg_a = np.zeros((H, A))
    dwo_a = np.zeros((H, A))
    dx_a = np.empty((T, D))
    cdef double[:, ::1] dwi = dwi_a, dwf = dwf_a, dwg = dwg_a, dwo = dwo_a
    cdef double[:, ::1] dx = dx_a
    s_a = np.empty(A)
    dh_rec_a = np.zeros(H)
    dc_rec_a = np.zeros(H)
    di_a = np.empty(H)
    df_a = np.empty(H)
    dg_a = np.empty(H)
    do_a = np.empty(H)
    ds_a = np.empty(A)
    cdef double[::1] s = s_a, dh_rec = dh_rec_a, dc_rec = dc_rec_a
    cdef double[::1] di = di_a, df = df_a, dg = dg_a, do = do_a, ds = ds_a
    cdef Py_ssize_t t, j, k
    cdef double tc, dh, dc, c_prev, acc
    s[A - 1] = 1.0
    with nogil:
        for t in range(T - 1, -1, -1):
            for j in range(D):
                s[j] = x[t, j]
            for j in range(H):
                s[D + j] = h[t - 1, j] if t > 0 else 0.0
            for j in range(H):
                tc = tanh(c[t, j])
                dh = dh_ext[t, j] + dh_rec[j]
                do[j] = dh * tc * oo[t, j] * (1.0 - oo[t, j])
                dc = dh * oo[t, j] * (1.0 - tc * tc) + dc_rec[j]
                di[j] = dc * gg[t, j] * ii[t, j] * (1.0 - ii[t, j])
                c_prev = c[t - 1, j] if t > 0 else 0.0
                df[j] = dc * c_prev * ff[t, j] * (1.0 - ff[t, j])
                dg[j] = dc * ii[t, j] * (1.0 - gg[t, j] * gg[t, j])
                dc_rec[j] = dc * ff[t, j]
            for j in range(H):
                for k in range(A):
                    dwi[j, k] += di[j] * s[k]
                    dwf[j, k] += df[j] * s[k]
                    dwg[j, k] += dg[j] * s[k]
                    dwo[j, k] += do[j] * s[k]
            for k in range(A):
                acc = 0.0
                for j in range(H):
                    acc += di[j] * wi[j, k] + df[j] * wf[j, k]
                    acc += dg[j] * wg[j, k] + do[j] * wo[j, k]
                ds[k] = acc
            for k in range(D):
                dx[t, k] = ds[k]
            for j in range(H):
                dh_rec[j] = ds[D + j]
    return dwi_a, dwf_a, dwg_a, dwo_a, dx_a


def ctc_alpha_beta(double[:, ::1] log_probs, long[::1] augmented):
    cdef Py_ssize_t T = log_probs.shape[0]
    cdef Py_ssize_t S = augmented.shape[0]
    la_a = np.full((T, S), -np.inf)
    lb_a = np.full((T, S), -np.inf)
    cdef double[:, ::1] la = la_a, lb = lb_a
    cdef long blank = augmented[0]
    cdef Py_ssize_t t, s
    cdef double acc, ll
    with nogil:
        la[0, 0] = log_probs[0, augmented[0]]
        if S > 1:
            la[0, 1] = log_probs[0, augmented[1]]
        for t in range(1, T):
            for s in range(S):
                acc = la[t - 1, s]
                if s >= 1:
                    acc = _logaddexp(acc, la[t - 1, s - 1])
                if s >= 2 and augmented[s] != blank and augmented[s] != augmented[s - 2]:
                    acc = _logaddexp(acc, la[t - 1, s - 2])
                la[t, s] = acc + log_probs[t, augmented[s]]
        lb[T - 1, S - 1] = log_probs[T - 1, augmented[S - 1]]
        if S > 1:
            lb[T - 1, S - 2] = log_probs[T - 1, augmented[S - 2]]
        for t in range(T - 2, -1, -1):
            for s in range(S):
                acc = lb[t + 1, s]
                if s + 1 < S:
                    acc = _logaddexp(acc, lb[t + 1, s + 1])
                if s + 2 < S and augmented[s + 2] != blank and augmented[s + 2] != augmented[s]:
                    acc = _logaddexp(acc, lb[t + 1, s + 2])
                lb[t, s] = acc + log_probs[t, augmented[s]]
        if S > 1:
            ll = _logaddexp(la[T - 1, S - 1], la[T - 1, S - 2])
        else:
            ll = la[T - 1, 0]
    return la_a, lb_a, float(ll)
