"""Hot numeric kernels, JIT-compiled with numba when available.

Set ``QDISCORD_DISABLE_NUMBA=1`` to force the pure-numpy path (used by the
benchmark and as a safety hatch on platforms without numba).  The two kernels
are the measurement-direction entropy scan behind the entropic-discord
optimizer and the multi-start Nelder-Mead search behind the geometric-discord
oracle; both dominate runtime on realistic workloads.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False

_DISABLED = os.environ.get("QDISCORD_DISABLE_NUMBA", "").strip() not in ("", "0")
USE_NUMBA = _HAVE_NUMBA and not _DISABLED

ENTROPY_FLOOR = 1e-12
OUTCOME_FLOOR = 1e-12


def _weighted_entropy(m):
    """p * H(m / p) in bits for an unnormalized PSD block m with p = tr m."""
    w = np.linalg.eigvalsh(m)
    p = 0.0
    for k in range(w.shape[0]):
        p += w[k]
    if p < OUTCOME_FLOOR:
        return 0.0
    acc = 0.0
    for k in range(w.shape[0]):
        wn = w[k] / p
        if wn > ENTROPY_FLOOR:
            acc -= wn * math.log2(wn)
    return p * acc


def _weighted_entropy_2x2(a, b, cre, cim):
    """Closed-form variant of _weighted_entropy for [[a, c], [c*, b]]."""
    p = a + b
    if p < OUTCOME_FLOOR:
        return 0.0
    half_gap = 0.5 * math.sqrt((a - b) * (a - b) + 4.0 * (cre * cre + cim * cim))
    acc = 0.0
    w = (0.5 * p + half_gap) / p
    if w > ENTROPY_FLOOR:
        acc -= w * math.log2(w)
    w = (0.5 * p - half_gap) / p
    if w > ENTROPY_FLOOR:
        acc -= w * math.log2(w)
    return p * acc


def conditional_entropy_scan_loop(g0, gx, gy, gz, dirs):
    """Average conditional entropy of B after measuring A along each direction.

    g0, gx, gy, gz are the Pauli components of the state's B-side blocks;
    dirs is an (n, 3) array of unit vectors.  Returns an (n,) array of
    sum_k p_k H(rho_B|k) values in bits.
    """
    n = dirs.shape[0]
    out = np.empty(n)
    if g0.shape[0] == 2:
        # scalar fast path: 2x2 blocks never touch LAPACK
        a0 = g0[0, 0].real
        b0 = g0[1, 1].real
        c0 = g0[0, 1]
        for i in range(n):
            e0 = dirs[i, 0]
            e1 = dirs[i, 1]
            e2 = dirs[i, 2]
            ga = e0 * gx[0, 0].real + e1 * gy[0, 0].real + e2 * gz[0, 0].real
            gb = e0 * gx[1, 1].real + e1 * gy[1, 1].real + e2 * gz[1, 1].real
            gc = e0 * gx[0, 1] + e1 * gy[0, 1] + e2 * gz[0, 1]
            cp = 0.5 * (c0 + gc)
            cm = 0.5 * (c0 - gc)
            out[i] = _weighted_entropy_2x2(
                0.5 * (a0 + ga), 0.5 * (b0 + gb), cp.real, cp.imag
            ) + _weighted_entropy_2x2(
                0.5 * (a0 - ga), 0.5 * (b0 - gb), cm.real, cm.imag
            )
        return out
    for i in range(n):
        g = dirs[i, 0] * gx + dirs[i, 1] * gy + dirs[i, 2] * gz
        out[i] = _weighted_entropy(0.5 * (g0 + g)) + _weighted_entropy(0.5 * (g0 - g))
    return out


def chi_distance_sq(z, xv, yv, tmat):
    """Squared Hilbert-Schmidt distance from the target Bloch triple
    (xv, yv, tmat) to the zero-discord state encoded by the 9 parameters z.

    z[0:2] are sphere angles of the measured direction e, tanh(z[2]) is the
    outcome bias p1 - p2, and z[3:6], z[6:9] map into the unit ball as the
    Bloch vectors of the two conditional states, so every z is physical.
    """
    st = math.sin(z[0])
    e0 = st * math.cos(z[1])
    e1 = st * math.sin(z[1])
    e2 = math.cos(z[0])
    t = math.tanh(z[2])
    p1 = 0.5 * (1.0 + t)
    p2 = 1.0 - p1

    r1 = math.sqrt(z[3] * z[3] + z[4] * z[4] + z[5] * z[5])
    f1 = math.tanh(r1) / r1 if r1 > 1e-12 else 1.0
    b10 = z[3] * f1
    b11 = z[4] * f1
    b12 = z[5] * f1
    r2 = math.sqrt(z[6] * z[6] + z[7] * z[7] + z[8] * z[8])
    f2 = math.tanh(r2) / r2 if r2 > 1e-12 else 1.0
    b20 = z[6] * f2
    b21 = z[7] * f2
    b22 = z[8] * f2

    sp0 = p1 * b10 + p2 * b20
    sp1 = p1 * b11 + p2 * b21
    sp2 = p1 * b12 + p2 * b22
    sm0 = p1 * b10 - p2 * b20
    sm1 = p1 * b11 - p2 * b21
    sm2 = p1 * b12 - p2 * b22

    dx0 = xv[0] - t * e0
    dx1 = xv[1] - t * e1
    dx2 = xv[2] - t * e2
    dy0 = yv[0] - sp0
    dy1 = yv[1] - sp1
    dy2 = yv[2] - sp2
    acc = dx0 * dx0 + dx1 * dx1 + dx2 * dx2
    acc += dy0 * dy0 + dy1 * dy1 + dy2 * dy2

    d = tmat[0, 0] - e0 * sm0
    acc += d * d
    d = tmat[0, 1] - e0 * sm1
    acc += d * d
    d = tmat[0, 2] - e0 * sm2
    acc += d * d
    d = tmat[1, 0] - e1 * sm0
    acc += d * d
    d = tmat[1, 1] - e1 * sm1
    acc += d * d
    d = tmat[1, 2] - e1 * sm2
    acc += d * d
    d = tmat[2, 0] - e2 * sm0
    acc += d * d
    d = tmat[2, 1] - e2 * sm1
    acc += d * d
    d = tmat[2, 2] - e2 * sm2
    acc += d * d
    return 0.25 * acc


def _nelder_mead_chi(x0, xv, yv, tmat, maxiter, fatol, xatol):
    """Nelder-Mead on chi_distance_sq starting from x0; returns (f, z)."""
    n = x0.shape[0]
    sim = np.empty((n + 1, n))
    fvals = np.empty(n + 1)
    sim[0] = x0
    fvals[0] = chi_distance_sq(x0, xv, yv, tmat)
    for i in range(n):
        pt = x0.copy()
        pt[i] += 0.5
        sim[i + 1] = pt
        fvals[i + 1] = chi_distance_sq(pt, xv, yv, tmat)

    for _ in range(maxiter):
        order = np.argsort(fvals)
        sim = sim[order]
        fvals = fvals[order]

        if fvals[n] - fvals[0] <= fatol:
            spread = 0.0
            for i in range(1, n + 1):
                for j in range(n):
                    dd = abs(sim[i, j] - sim[0, j])
                    if dd > spread:
                        spread = dd
            if spread <= xatol:
                break

        cen = np.zeros(n)
        for i in range(n):
            cen += sim[i]
        cen /= n

        xr = 2.0 * cen - sim[n]
        fr = chi_distance_sq(xr, xv, yv, tmat)
        if fr < fvals[0]:
            xe = cen + 2.0 * (cen - sim[n])
            fe = chi_distance_sq(xe, xv, yv, tmat)
            if fe < fr:
                sim[n] = xe
                fvals[n] = fe
            else:
                sim[n] = xr
                fvals[n] = fr
        elif fr < fvals[n - 1]:
            sim[n] = xr
            fvals[n] = fr
        else:
            shrink = False
            if fr < fvals[n]:
                xc = cen + 0.5 * (xr - cen)
                fc = chi_distance_sq(xc, xv, yv, tmat)
                if fc <= fr:
                    sim[n] = xc
                    fvals[n] = fc
                else:
                    shrink = True
            else:
                xc = cen + 0.5 * (sim[n] - cen)
                fc = chi_distance_sq(xc, xv, yv, tmat)
                if fc < fvals[n]:
                    sim[n] = xc
                    fvals[n] = fc
                else:
                    shrink = True
            if shrink:
                for i in range(1, n + 1):
                    sim[i] = sim[0] + 0.5 * (sim[i] - sim[0])
                    fvals[i] = chi_distance_sq(sim[i], xv, yv, tmat)

    order = np.argsort(fvals)
    return fvals[order[0]], sim[order[0]].copy()


def oracle_search(xv, yv, tmat, starts, maxiter, fatol, xatol):
    """Best (value, parameters) of chi_distance_sq over multi-start Nelder-Mead."""
    best_f = np.inf
    best_z = starts[0].copy()
    for s in range(starts.shape[0]):
        f, z = _nelder_mead_chi(starts[s], xv, yv, tmat, maxiter, fatol, xatol)
        if f < best_f:
            best_f = f
            best_z = z
    return best_f, best_z


if USE_NUMBA:
    _weighted_entropy = numba.njit(cache=True)(_weighted_entropy)
    _weighted_entropy_2x2 = numba.njit(cache=True)(_weighted_entropy_2x2)
    conditional_entropy_scan_loop = numba.njit(cache=True)(conditional_entropy_scan_loop)
    chi_distance_sq = numba.njit(cache=True)(chi_distance_sq)
    _nelder_mead_chi = numba.njit(cache=True)(_nelder_mead_chi)
    oracle_search = numba.njit(cache=True)(oracle_search)


def conditional_entropy_scan_numpy(g0, gx, gy, gz, dirs):
    """Vectorized numpy implementation of :func:`conditional_entropy_scan_loop`."""
    g = np.tensordot(dirs, np.stack([gx, gy, gz]), axes=(1, 0))

    def term(blocks):
        w = np.linalg.eigvalsh(blocks)
        p = w.sum(axis=1)
        wn = w / np.maximum(p, OUTCOME_FLOOR)[:, None]
        ent = -np.where(wn > ENTROPY_FLOOR, wn * np.log2(np.maximum(wn, ENTROPY_FLOOR)), 0.0)
        return np.where(p > OUTCOME_FLOOR, p * ent.sum(axis=1), 0.0)

    return term(0.5 * (g0 + g)) + term(0.5 * (g0 - g))


def conditional_entropy_scan(g0, gx, gy, gz, dirs):
    """Dispatch to the jitted loop or the vectorized numpy fallback.

    The jitted loop wins for qubit blocks (closed-form eigenvalues) and for
    the short batches issued by simplex refinement; batched LAPACK is faster
    for large grids over wider B sides.
    """
    if USE_NUMBA and (g0.shape[0] == 2 or dirs.shape[0] <= 256):
        return conditional_entropy_scan_loop(g0, gx, gy, gz, dirs)
    return conditional_entropy_scan_numpy(g0, gx, gy, gz, dirs)
