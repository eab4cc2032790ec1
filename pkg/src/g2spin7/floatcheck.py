"""Float-backend verification lane, for timing comparisons only.

Runs a representative subset of the identity sweep with float
coefficients and a small absolute tolerance.  Results are advisory: the
authoritative suite is the exact rational one.
"""

from __future__ import annotations

import random
import time

from .exterior import (
    contract,
    eval_form,
    gram,
    hodge,
    inner,
    mu,
    wedge,
)
from .frames import rand_vector
from .g2 import chi_of, phi0
from .report import CheckResult
from .spin7 import psi0

TOL = 1e-9


def _close_form(a, b, tol=TOL):
    keys = set(a.c) | set(b.c)
    return all(abs(float(a.c.get(m, 0)) - float(b.c.get(m, 0))) <= tol for m in keys)


def verify_float(samples: int = 200, seed: int = 7) -> list[CheckResult]:
    rng = random.Random(seed)
    g = phi0()
    phi = g.phi.to_float()
    star_phi = g.star_phi.to_float()
    mu7 = mu(7).to_float()
    chi = chi_of(g)
    chi_f = [c.to_float() for c in chi.comps]
    results = []

    def run(name, statement, fn):
        t0 = time.perf_counter()
        ok = all(fn() for _ in range(samples))
        dt = (time.perf_counter() - t0) * 1000.0
        results.append(
            CheckResult(
                name=name, statement=statement, samples=samples,
                passed=ok, elapsed_ms=dt,
            )
        )

    def f_metric():
        u = rand_vector(rng, 7).to_float()
        v = rand_vector(rng, 7).to_float()
        lhs = wedge(wedge(contract(u, phi), contract(v, phi)), phi)
        want = 6.0 * sum(x * y for x, y in zip(u.a, v.a))
        return _close_form(lhs, mu7.scale(want), tol=1e-6 * (1 + abs(want)))

    run("float-metric-recovery", "metric recovery, float backend", f_metric)

    def f_assoc():
        u = rand_vector(rng, 7).to_float()
        v = rand_vector(rng, 7).to_float()
        w = rand_vector(rng, 7).to_float()
        phi_v = float(eval_form(phi, [u, v, w]))
        chi2 = sum(float(eval_form(c, [u, v, w])) ** 2 for c in chi_f)
        return abs(phi_v**2 + chi2 - float(gram([u, v, w]))) <= 1e-5

    run("float-associator", "associator equality, float backend", f_assoc)

    def f_selfdual():
        psi = psi0().psi4.to_float()
        return _close_form(hodge(psi), psi)

    run("float-self-duality", "*Psi = Psi, float backend", f_selfdual)

    def f_norm():
        return abs(float(inner(phi, phi)) - 7.0) <= TOL and abs(
            float(inner(star_phi, star_phi)) - 7.0
        ) <= TOL

    run("float-norms", "|phi|^2 = |*phi|^2 = 7, float backend", f_norm)

    return results
