"""Pure-numpy implementations of the hot kernels.

This is the fallback backend: same signatures and semantics as the
compiled extension in ``_core.pyx``, selected at import time by
``scribe._kernels``. Everything runs in double precision. Arrays are
expected C-contiguous float64 (int64 for label sequences).
"""

import numpy as np

NAME = "pure"

NEG_INF = -np.inf


def _sigmoid(x):
    # exp never overflows here: argument is clipped from above at 0.
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def lstm_forward(wi, wf, wg, wo, x):
    """Run one LSTM layer over a T x D input.

    Weight matrices are H x (D+H+1), acting on [x_t, h_{t-1}, 1].
    Returns the gate/state trajectories (ii, ff, gg, oo, c, h),
    each T x H; hidden and cell state start at zero.
    """
    T, D = x.shape
    H = wi.shape[0]
    ii = np.empty((T, H))
    ff = np.empty((T, H))
    gg = np.empty((T, H))
    oo = np.empty((T, H))
    c = np.empty((T, H))
    h = np.empty((T, H))
    s = np.empty(D + H + 1)
    s[-1] = 1.0
    s[D:D + H] = 0.0
    c_prev = np.zeros(H)
    for t in range(T):
        s[:D] = x[t]
        if t > 0:
            s[D:D + H] = h[t - 1]
        ii[t] = _sigmoid(wi @ s)
        ff[t] = _sigmoid(wf @ s)
        gg[t] = np.tanh(wg @ s)
        oo[t] = _sigmoid(wo @ s)
        c[t] = ff[t] * c_prev + ii[t] * gg[t]
        h[t] = oo[t] * np.tanh(c[t])
        c_prev = c[t]
    return ii, ff, gg, oo, c, h


def lstm_backward(wi, wf, wg, wo, x, ii, ff, gg, oo, c, h, dh_ext):
    """Backprop through time for one LSTM layer.

    ``dh_ext`` holds the loss partials w.r.t. each h_t (T x H).
    Returns (dwi, dwf, dwg, dwo, dx) with exact gradients.
    """
    T, D = x.shape
    H = wi.shape[0]
    A = D + H + 1
    dwi = np.zeros((H, A))
    dwf = np.zeros((H, A))
    dwg = np.zeros((H, A))
    dwo = np.zeros((H, A))
    dx = np.empty((T, D))
    s = np.empty(A)
    s[-1] = 1.0
    dh_rec = np.zeros(H)
    dc_rec = np.zeros(H)
    for t in range(T - 1, -1, -1):
        s[:D] = x[t]
        s[D:D + H] = h[t - 1] if t > 0 else 0.0
        tc = np.tanh(c[t])
        dh = dh_ext[t] + dh_rec
        do_pre = dh * tc * oo[t] * (1.0 - oo[t])
        dc = dh * oo[t] * (1.0 - tc * tc) + dc_rec
        di_pre = dc * gg[t] * ii[t] * (1.0 - ii[t])
        c_prev = c[t - 1] if t > 0 else 0.0
        df_pre = dc * c_prev * ff[t] * (1.0 - ff[t])
        dg_pre = dc * ii[t] * (1.0 - gg[t] * gg[t])
        dwi += np.outer(di_pre, s)
        dwf += np.outer(df_pre, s)
        dwg += np.outer(dg_pre, s)
        dwo += np.outer(do_pre, s)
        ds = di_pre @ wi + df_pre @ wf + dg_pre @ wg + do_pre @ wo
        dx[t] = ds[:D]
        dh_rec = ds[D:D + H]
        dc_rec = dc * ff[t]
    return dwi, dwf, dwg, dwo, dx


def ctc_alpha_beta(log_probs, augmented):
    """Log-space forward/backward tables over a blank-augmented target.

    ``log_probs`` is T x (N+1) row-normalized log probabilities;
    ``augmented`` is the int64 label sequence (blank, l1, blank, ...)
    of length S = 2L+1. Both alpha and beta include the emission at
    their own time step, so alpha_t(s) * beta_t(s) / p_t(z_s) summed
    over s reconstructs the total likelihood at every t. Returns
    (log_alpha, log_beta, log_likelihood); infeasible targets give
    -inf likelihood, never an exception.
    """
    T = log_probs.shape[0]
    S = augmented.shape[0]
    la = np.full((T, S), NEG_INF)
    lb = np.full((T, S), NEG_INF)
    blank = augmented[0]
    if S > 2:
        skip_ok = (augmented[2:] != blank) & (augmented[2:] != augmented[:-2])
    la[0, 0] = log_probs[0, augmented[0]]
    if S > 1:
        la[0, 1] = log_probs[0, augmented[1]]
    for t in range(1, T):
        prev = la[t - 1]
        cur = prev.copy()
        np.logaddexp(cur[1:], prev[:-1], out=cur[1:])
        if S > 2:
            cur[2:][skip_ok] = np.logaddexp(cur[2:][skip_ok], prev[:-2][skip_ok])
        la[t] = cur + log_probs[t, augmented]
    lb[T - 1, S - 1] = log_probs[T - 1, augmented[S - 1]]
    if S > 1:
        lb[T - 1, S - 2] = log_probs[T - 1, augmented[S - 2]]
    for t in range(T - 2, -1, -1):
        nxt = lb[t + 1]
        cur = nxt.copy()
        np.logaddexp(cur[:-1], nxt[1:], out=cur[:-1])
        if S > 2:
            cur[:-2][skip_ok] = np.logaddexp(cur[:-2][skip_ok], nxt[2:][skip_ok])
        lb[t] = cur + log_probs[t, augmented]
    if S > 1:
        ll = np.logaddexp(la[T - 1, S - 1], la[T - 1, S - 2])
    else:
        ll = la[T - 1, 0]
    return la, lb, float(ll)
