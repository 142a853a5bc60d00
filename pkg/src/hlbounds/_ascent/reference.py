"""Pure-Python ascent kernel: projected gradient ascent of |P(z)|^2.

This is the fallback backend; ``hlbounds._ascent._kernel`` is the compiled
twin with the same contract and the same branch structure, so the two stay
numerically interchangeable.  Points are parametrized as z_j = r_j * e^(i*t_j)
with the magnitude vector kept feasible after every trial step: rescaled onto
the l_p unit sphere for finite p, clamped to [-1, 1] for the polydisc.
A negative r_j is the magnitude |r_j| with the phase shifted by pi, so the
parametrization stays smooth through zero.

All accept/reject decisions are comparisons of objective values and all steps
use unit-normalized directions, which makes the iterate path invariant under
scaling of the polynomial (up to roundoff).
"""

from __future__ import annotations

import math

BACKEND_NAME = "python"

STEP_START = 0.25
STEP_MAX = 1.0
STEP_MIN = 1e-14
SWEEP_DELTAS = (1e-3, 1e-5, 1e-7)


def _ipow(z: complex, k: int) -> complex:
    result = complex(1.0)
    base = z
    while k:
        if k & 1:
            result *= base
        base *= base
        k >>= 1
    return result


def _point(r, theta, n):
    return [r[j] * complex(math.cos(theta[j]), math.sin(theta[j])) for j in range(n)]


def _value(powers, coeffs, z, tcount, n):
    total = 0j
    for t in range(tcount):
        row = powers[t]
        w = coeffs[t]
        for j in range(n):
            a = row[j]
            if a:
                w *= _ipow(z[j], a)
        total += w
    return total


def _gradient(powers, coeffs, z, tcount, n):
    grad = [0j] * n
    for t in range(tcount):
        row = powers[t]
        for j in range(n):
            a = row[j]
            if a == 0:
                continue
            partial = coeffs[t] * a * _ipow(z[j], a - 1)
            for k in range(n):
                if k != j and row[k]:
                    partial *= _ipow(z[k], row[k])
            grad[j] += partial
    return grad


def _project(r, p, n) -> bool:
    """Move the magnitude vector back onto the feasible set, in place."""
    if math.isinf(p):
        for j in range(n):
            if r[j] > 1.0:
                r[j] = 1.0
            elif r[j] < -1.0:
                r[j] = -1.0
        return True
    total = 0.0
    for j in range(n):
        total += abs(r[j]) ** p
    if total <= 0.0:
        return False
    scale = total ** (-1.0 / p)
    for j in range(n):
        r[j] *= scale
    return True


def _objective_gradient(v, gz, r, theta, n):
    """Real gradient of |P|^2 with respect to (r, theta)."""
    gr = [0.0] * n
    gt = [0.0] * n
    cv = v.conjugate()
    for j in range(n):
        g = cv * gz[j] * complex(math.cos(theta[j]), math.sin(theta[j]))
        gr[j] = 2.0 * g.real
        gt[j] = -2.0 * r[j] * g.imag
    return gr, gt


def _tangent_part(gr, r, p, n):
    """Component of the r-gradient that respects the feasible set."""
    pg = list(gr)
    if math.isinf(p):
        for j in range(n):
            if (r[j] >= 1.0 and gr[j] > 0.0) or (r[j] <= -1.0 and gr[j] < 0.0):
                pg[j] = 0.0
        return pg
    dot_gu = 0.0
    dot_uu = 0.0
    u = [0.0] * n
    for j in range(n):
        if r[j] != 0.0:
            u[j] = math.copysign(abs(r[j]) ** (p - 1.0), r[j])
        dot_gu += gr[j] * u[j]
        dot_uu += u[j] * u[j]
    if dot_uu > 0.0:
        lam = dot_gu / dot_uu
        for j in range(n):
            pg[j] -= lam * u[j]
    return pg


def ascend(powers, coeffs, r, theta, p, max_iterations, gradient_tolerance,
           step_shrink):
    """Run one ascent from (r, theta); both arrays are updated in place.

    Returns (objective, iterations, converged) where objective is |P(z)|^2 at
    the final feasible point.  ``converged`` is False only when the iteration
    budget ran out; a stall at numerical precision counts as converged.
    """
    tcount = len(coeffs)
    n = len(r)
    pw = [[int(powers[t][j]) for j in range(n)] for t in range(tcount)]
    cf = [complex(coeffs[t]) for t in range(tcount)]
    rr = [float(r[j]) for j in range(n)]
    tt = [float(theta[j]) for j in range(n)]
    p = float(p)

    if not _project(rr, p, n):
        fill = 1.0 if math.isinf(p) else n ** (-1.0 / p)
        for j in range(n):
            rr[j] = fill

    z = _point(rr, tt, n)
    v = _value(pw, cf, z, tcount, n)
    f = v.real * v.real + v.imag * v.imag

    step = STEP_START
    iterations = 0
    converged = False

    while iterations < max_iterations:
        iterations += 1
        gz = _gradient(pw, cf, z, tcount, n)
        gr, gt = _objective_gradient(v, gz, rr, tt, n)
        pg = _tangent_part(gr, rr, p, n)
        gnorm = math.sqrt(
            sum(x * x for x in pg) + sum(x * x for x in gt)
        )
        if gnorm <= gradient_tolerance * f:
            converged = True
            break

        inv = 1.0 / gnorm
        accepted = False
        s = step
        while s >= STEP_MIN:
            r_try = [rr[j] + s * inv * pg[j] for j in range(n)]
            if _project(r_try, p, n):
                t_try = [tt[j] + s * inv * gt[j] for j in range(n)]
                z_try = _point(r_try, t_try, n)
                v_try = _value(pw, cf, z_try, tcount, n)
                f_try = v_try.real * v_try.real + v_try.imag * v_try.imag
                if f_try > f:
                    accepted = True
                    break
            s *= step_shrink
        if accepted:
            rr, tt, z, v, f = r_try, t_try, z_try, v_try, f_try
            step = min(s / step_shrink, STEP_MAX)
            continue

        # Line search exhausted with the gradient still above tolerance:
        # coordinate probes catch curved-constraint and saddle stalls.
        improved = False
        for delta in SWEEP_DELTAS:
            for j in range(n):
                for dr, dt in ((delta, 0.0), (-delta, 0.0),
                               (0.0, delta), (0.0, -delta)):
                    r_try = list(rr)
                    t_try = list(tt)
                    if dr:
                        r_try[j] += dr
                        if not _project(r_try, p, n):
                            continue
                    else:
                        t_try[j] += dt
                    z_try = _point(r_try, t_try, n)
                    v_try = _value(pw, cf, z_try, tcount, n)
                    f_try = v_try.real * v_try.real + v_try.imag * v_try.imag
                    if f_try > f:
                        rr, tt, z, v, f = r_try, t_try, z_try, v_try, f_try
                        improved = True
            if improved:
                break
        if improved:
            step = STEP_START
            continue
        converged = True
        break

    for j in range(n):
        r[j] = rr[j]
        theta[j] = tt[j]
    return f, iterations, converged
