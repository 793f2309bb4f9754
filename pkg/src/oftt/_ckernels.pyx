# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled line sweep: per-interface loops over the same formulas as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport log, sqrt, fabs

cnp.import_array()

cdef double LOG_MEAN_SWITCH = 1.0e-2


cdef inline double log_mean(double al, double ar) noexcept nogil:
    cdef double z = al / ar
    cdef double f = (z - 1.0) / (z + 1.0)
    cdef double u = f * f
    cdef double F
    if fabs(z - 1.0) < LOG_MEAN_SWITCH:
        F = 1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u * (1.0 / 7.0 + u / 9.0)))
    else:
        F = log(z) / (2.0 * f)
    return 0.5 * (al + ar) / F


cdef inline void prim(const double* U, double ge, double gi, double* W) noexcept nogil:
    cdef double rho = U[0]
    cdef double vx = U[1] / rho
    cdef double vy = U[2] / rho
    W[0] = rho
    W[1] = vx
    W[2] = vy
    W[3] = (ge - 1.0) * (U[3] - 0.5 * rho * (vx * vx + vy * vy) - U[4] / (gi - 1.0))
    W[4] = U[4]


cdef inline void entvars(const double* W, double ge, double gi, double* V) noexcept nogil:
    cdef double rho = W[0]
    cdef double be = rho / W[3]
    cdef double bi = rho / W[4]
    cdef double s = log(W[3] / rho ** ge) / (ge - 1.0) + log(W[4] / rho ** gi) / (gi - 1.0)
    V[0] = ge / (ge - 1.0) + gi / (gi - 1.0) - s - 0.5 * be * (W[1] * W[1] + W[2] * W[2])
    V[1] = be * W[1]
    V[2] = be * W[2]
    V[3] = -be
    V[4] = (be - bi) / (gi - 1.0)


cdef inline void ec_pair(const double* Wl, const double* Wr, const double* Vl, const double* Vr,
                         double Fl, double Fr, double ge, double gi, double* f, double* q) noexcept nogil:
    cdef double rl = Wl[0], rr = Wr[0]
    cdef double bel = rl / Wl[3], ber = rr / Wr[3]
    cdef double bil = rl / Wl[4], bir = rr / Wr[4]
    cdef double vx = 0.5 * (Wl[1] + Wr[1])
    cdef double vy = 0.5 * (Wl[2] + Wr[2])
    cdef double v2 = 0.5 * (Wl[1] * Wl[1] + Wl[2] * Wl[2] + Wr[1] * Wr[1] + Wr[2] * Wr[2])
    cdef double rho_ln = log_mean(rl, rr)
    cdef double be_ln = log_mean(bel, ber)
    cdef double bi_ln = log_mean(bil, bir)
    cdef double p_hat = 2.0 * 0.5 * (rl + rr) / (0.5 * (bel + ber))
    cdef double f1 = rho_ln * vx
    cdef int j
    f[0] = f1
    f[1] = vx * f1 + p_hat
    f[2] = vy * f1
    f[4] = f1 / bi_ln
    f[3] = (1.0 / ((ge - 1.0) * be_ln) - 0.5 * v2) * f1 + vx * f[1] + vy * f[2] + f[4] / (gi - 1.0)
    q[0] = 0.0
    for j in range(5):
        q[0] += 0.5 * (Vl[j] + Vr[j]) * f[j]
    q[0] -= 0.5 * (Fl + Fr)


cdef inline double cons_speed(const double* W, double ge) noexcept nogil:
    return fabs(W[1]) + sqrt(2.0 * W[3] * (2.0 * ge - 1.0) / W[0])


cdef inline int scaled_R(const double* W, double ge, double gi, double* R) noexcept nogil:
    """R = dU/dW @ R_W at state W (x direction), row-major 5x5. Returns -1 on a bad radicand."""
    cdef double rho = W[0], vx = W[1], vy = W[2], pe = W[3], pi = W[4]
    cdef double g2 = 2.0 * ge - 1.0
    cdef double th1 = sqrt((ge - 1.0) * (gi - 1.0) * g2)
    cdef double arg = (2.0 * pi * rho * th1 - pi * pi * (ge + gi - 2.0 * ge * gi) + rho * rho * (ge - 1.0)) / (rho * g2)
    if not (arg > 0.0):
        return -1
    cdef double th = sqrt(arg)
    cdef double a = sqrt(rho / (4.0 * g2))
    cdef double b = sqrt(0.5 * pe) / rho
    cdef double t22 = (pi * th1 + rho * (ge - 1.0)) / (g2 * th)
    cdef double t24 = pi * (ge - 1.0) / (g2 * th)
    cdef double t44 = (pi * pi * (ge * (2.0 * gi - 1.0) - gi) + pi * rho * th1) / (rho * g2 * th)
    cdef double r4 = 0.5 * pe * sqrt(g2 / rho)
    cdef double r5 = 0.5 * pi / sqrt(g2 * rho)
    cdef double Rw[25]
    cdef double J[25]
    cdef int i, j, k
    for i in range(25):
        Rw[i] = 0.0
        J[i] = 0.0
    Rw[0 * 5 + 0] = a
    Rw[0 * 5 + 1] = t22
    Rw[0 * 5 + 3] = t24
    Rw[0 * 5 + 4] = a
    Rw[1 * 5 + 0] = -b
    Rw[1 * 5 + 4] = b
    Rw[2 * 5 + 2] = sqrt(pe) / rho
    Rw[3 * 5 + 0] = r4
    Rw[3 * 5 + 4] = r4
    Rw[4 * 5 + 0] = r5
    Rw[4 * 5 + 1] = t24
    Rw[4 * 5 + 3] = t44
    Rw[4 * 5 + 4] = r5
    J[0] = 1.0
    J[5 + 0] = vx
    J[5 + 1] = rho
    J[10 + 0] = vy
    J[10 + 2] = rho
    J[15 + 0] = 0.5 * (vx * vx + vy * vy)
    J[15 + 1] = rho * vx
    J[15 + 2] = rho * vy
    J[15 + 3] = 1.0 / (ge - 1.0)
    J[15 + 4] = 1.0 / (gi - 1.0)
    J[20 + 4] = 1.0
    for i in range(5):
        for j in range(5):
            R[i * 5 + j] = 0.0
            for k in range(5):
                R[i * 5 + j] += J[i * 5 + k] * Rw[k * 5 + j]
    return 0


cdef inline double minmod(double a, double b) noexcept nogil:
    if a * b > 0.0:
        if a > 0.0:
            return a if a < b else b
        return a if a > b else b
    return 0.0


cdef inline double _eno_edge(const double* a, const double* D, int p, int m, const double* coeff,
                             bint right) noexcept nogil:
    cdef int r = 0, l, s
    for l in range(1, m + 1):
        # undivided differences of order l starting at p - r - 1 and p - r
        if fabs(D[l * 8 + p - r - 1]) <= fabs(D[l * 8 + p - r]):
            r += 1
    cdef double v = 0.0
    cdef int row = r + 1 if right else r
    for s in range(m + 1):
        v += coeff[row * (m + 1) + s] * a[p - r + s]
    return v


cdef inline double eno_jump(const double* a, int S, int m, const double* coeff) noexcept nogil:
    """ENO left edge of cell ``S/2`` minus right edge of cell ``S/2 - 1`` (degree ``m``, ``S <= 8``)."""
    cdef double D[32]
    cdef int l, s
    for s in range(S):
        D[s] = a[s]
    for l in range(1, m + 1):
        for s in range(S - l):
            D[l * 8 + s] = D[(l - 1) * 8 + s + 1] - D[(l - 1) * 8 + s]
    return _eno_edge(a, D, S // 2, m, coeff, False) - _eno_edge(a, D, S // 2 - 1, m, coeff, True)


def sweep(double[:, :, ::1] U, double ge, double gi, int k, double h, int ghost,
          double dissipation, int recon):
    cdef Py_ssize_t L = U.shape[0], N = U.shape[1]
    cdef int G = ghost
    cdef int n = N - 2 * G
    if n < 1:
        raise ValueError("line has no interior cells")
    cdef int S = {1: 2, 2: 4, 3: 6, 4: 8}[recon]
    cdef int hw = S // 2
    if G < hw or G < 2:
        raise ValueError("not enough ghost layers for the requested stencil")
    cdef int m = recon - 1
    cdef double[:, ::1] coeff_v
    cdef double dummy[1]
    cdef const double* coeff = dummy
    if recon >= 3:
        from oftt.reconstruction import eno_coefficients
        coeff_arr = np.ascontiguousarray(eno_coefficients(m), dtype=np.float64)
        coeff_v = coeff_arr
        coeff = &coeff_v[0, 0]

    fhat_a = np.zeros((L, n + 1, 5))
    qhat_a = np.zeros((L, n + 1))
    nc_a = np.zeros((L, n, 5))
    cdef double[:, :, ::1] fhat = fhat_a
    cdef double[:, ::1] qhat = qhat_a
    cdef double[:, :, ::1] nc = nc_a
    Wb_a = np.empty((N, 5))
    Vb_a = np.empty((N, 5))
    Fb_a = np.empty(N)
    cdef double[:, ::1] Wb = Wb_a
    cdef double[:, ::1] Vb = Vb_a
    cdef double[::1] Fb = Fb_a

    cdef double f[5]
    cdef double fa[5]
    cdef double fb[5]
    cdef double q, qa, qb
    cdef double Wm[5]
    cdef double R[25]
    cdef double w[5][8]
    cdef double jump[5]
    cdef double Rs[5]
    cdef double dU[5]
    cdef double lam, lam2, vbr
    cdef double ge1 = ge - 1.0, gi1 = gi - 1.0, kk = ge1 / gi1 + 1.0
    cdef double rho, vx, vy, pe, pi, qv, dp
    cdef double cw2[3]
    cdef double cw4[5]
    cw2[0] = -0.5 / h; cw2[1] = 0.0; cw2[2] = 0.5 / h
    cw4[0] = 1.0 / 12.0 / h; cw4[1] = -8.0 / 12.0 / h; cw4[2] = 0.0
    cw4[3] = 8.0 / 12.0 / h; cw4[4] = -1.0 / 12.0 / h
    cdef int rr = 1 if k == 2 else 2
    cdef const double* cw = &cw4[0]
    if k == 2:
        cw = &cw2[0]
    cdef Py_ssize_t ln, i, c, j, a, s
    cdef int bad = 0
    cdef double d0, up, um

    with nogil:
        for ln in range(L):
            for i in range(N):
                prim(&U[ln, i, 0], ge, gi, &Wb[i, 0])
                entvars(&Wb[i, 0], ge, gi, &Vb[i, 0])
                Fb[i] = 2.0 * Wb[i, 0] * Wb[i, 1]
            for i in range(n + 1):
                c = G - 1 + i  # left cell of the interface
                ec_pair(&Wb[c, 0], &Wb[c + 1, 0], &Vb[c, 0], &Vb[c + 1, 0], Fb[c], Fb[c + 1], ge, gi, f, &q)
                if k >= 3:
                    # the (c-1, c+1) pair is the previous interface's (c, c+2) pair
                    if i == 0:
                        ec_pair(&Wb[c - 1, 0], &Wb[c + 1, 0], &Vb[c - 1, 0], &Vb[c + 1, 0], Fb[c - 1], Fb[c + 1], ge, gi, fb, &qb)
                    for j in range(5):
                        fa[j] = fb[j]
                    qa = qb
                    ec_pair(&Wb[c, 0], &Wb[c + 2, 0], &Vb[c, 0], &Vb[c + 2, 0], Fb[c], Fb[c + 2], ge, gi, fb, &qb)
                    for j in range(5):
                        f[j] = (4.0 / 3.0) * f[j] - (1.0 / 6.0) * (fa[j] + fb[j])
                    q = (4.0 / 3.0) * q - (1.0 / 6.0) * (qa + qb)
                if dissipation != 0.0:
                    for j in range(5):
                        Wm[j] = 0.5 * (Wb[c, j] + Wb[c + 1, j])
                    if scaled_R(Wm, ge, gi, R) != 0:
                        bad = 1
                        break
                    lam = cons_speed(Wm, ge)
                    lam2 = cons_speed(&Wb[c, 0], ge)
                    if lam2 > lam:
                        lam = lam2
                    lam2 = cons_speed(&Wb[c + 1, 0], ge)
                    if lam2 > lam:
                        lam = lam2
                    # scaled stencil values w[b][s] = (R^T V_{c - hw + 1 + s})_b
                    for s in range(S):
                        for a in range(5):
                            w[a][s] = 0.0
                            for j in range(5):
                                w[a][s] += R[j * 5 + a] * Vb[c - hw + 1 + s, j]
                    for a in range(5):
                        if recon == 1:
                            jump[a] = w[a][1] - w[a][0]
                        elif recon == 2:
                            d0 = w[a][2] - w[a][1]
                            up = w[a][1] + 0.5 * minmod(w[a][1] - w[a][0], d0)
                            um = w[a][2] - 0.5 * minmod(d0, w[a][3] - w[a][2])
                            jump[a] = um - up
                        else:
                            jump[a] = eno_jump(w[a], S, m, coeff)
                    vbr = 0.0
                    for j in range(5):
                        Rs[j] = 0.0
                        for a in range(5):
                            Rs[j] += R[j * 5 + a] * jump[a]
                        f[j] -= 0.5 * dissipation * lam * Rs[j]
                        vbr += 0.5 * (Vb[c, j] + Vb[c + 1, j]) * Rs[j]
                    q -= 0.5 * dissipation * lam * vbr
                for j in range(5):
                    fhat[ln, i, j] = f[j]
                qhat[ln, i] = q
            if bad:
                break
            for i in range(n):
                c = G + i
                for j in range(5):
                    dU[j] = 0.0
                    for s in range(2 * rr + 1):
                        dU[j] += cw[s] * U[ln, c - rr + s, j]
                rho = Wb[c, 0]; vx = Wb[c, 1]; vy = Wb[c, 2]; pe = Wb[c, 3]; pi = Wb[c, 4]
                qv = vx * vx + vy * vy
                dp = (pi - pe) / rho
                nc[ln, i, 0] = 0.0
                nc[ln, i, 2] = 0.0
                nc[ln, i, 1] = (-0.5 * ge1 * qv * dU[0] + ge1 * vx * dU[1] + ge1 * vy * dU[2]
                                - ge1 * dU[3] + kk * dU[4])
                nc[ln, i, 3] = (-(0.5 * ge1 * qv + dp) * vx * dU[0] + (ge1 * vx * vx + dp) * dU[1]
                                + ge1 * vy * vx * dU[2] - ge1 * vx * dU[3] + kk * vx * dU[4])
                nc[ln, i, 4] = -gi1 * pi * vx / rho * dU[0] + gi1 * pi / rho * dU[1]
    if bad:
        raise FloatingPointError("eigenvector scaling: radicand of Theta is not positive")
    return fhat_a, qhat_a, nc_a


def max_speed_sum(double[:, ::1] U, double ge, double gi, double inv_dx, double inv_dy):
    cdef Py_ssize_t n = U.shape[0], i
    cdef double W[5]
    cdef double c, c2, s, best = 0.0
    with nogil:
        for i in range(n):
            prim(&U[i, 0], ge, gi, W)
            c = sqrt((ge * W[3] + gi * W[4]) / W[0])
            c2 = sqrt(2.0 * W[3] * (2.0 * ge - 1.0) / W[0])
            if c2 > c:
                c = c2
            s = (fabs(W[1]) + c) * inv_dx
            if inv_dy != 0.0:
                s += (fabs(W[2]) + c) * inv_dy
            if s > best or s != s:
                best = s
                if s != s:
                    break
    return best
