#!/usr/bin/env python3
# Copyright 2026 The ahmclass Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent reference values for the C++ test suite.

Computes Eisenstein series by direct q-series summation in mpmath, j and
chi* from them, class polynomials from brute-force form enumeration, and
rational reconstructions with fractions.Fraction. The printed values are
frozen into tests/*.cpp; rerun this script to regenerate them.
"""

from fractions import Fraction
from math import gcd, isqrt

import mpmath as mp
from sympy import divisor_sigma

mp.mp.dps = 160


def eisenstein(k, tau, terms=None):
    c = {2: -24, 4: 240, 6: -504}[k]
    q = mp.exp(2j * mp.pi * tau)
    if terms is None:
        terms = int(mp.ceil(170 * mp.log(10) / (2 * mp.pi * mp.im(tau)))) + 20
    s = mp.mpc(0)
    qn = mp.mpc(1)
    for n in range(1, terms + 1):
        qn *= q
        s += int(divisor_sigma(n, k - 1)) * qn
    return 1 + c * s


def j_chi(tau):
    e2, e4, e6 = (eisenstein(k, tau) for k in (2, 4, 6))
    e2s = e2 - 3 / (mp.pi * mp.im(tau))
    den = e4**3 - e6**2
    return 1728 * e4**3 / den, 1728 * e2s * e4 * e6 / den


def reduced_forms(d):
    """Box enumeration: |b| <= a <= c, b^2 - 4ac = d, primitive."""
    D = -d
    out = []
    for a in range(1, isqrt(D // 3) + 2):
        for b in range(-a, a + 1):
            num = b * b - d
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if (b < 0) and (abs(b) == a or a == c):
                continue
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            out.append((a, b, c))
    return sorted(out)


def heegner(f):
    a, b, c = f
    return (-b + mp.sqrt(mp.mpf(4 * a * c - b * b)) * 1j) / (2 * a)


def poly_from_roots(roots):
    coeffs = [mp.mpc(1)]
    for r in roots:
        nxt = [mp.mpc(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i + 1] += c
            nxt[i] -= r * c
        coeffs = nxt
    return coeffs  # ascending


def rationalize(x, max_den=10**40, tol=mp.mpf(10) ** -90):
    assert abs(mp.im(x)) < tol, x
    fr = Fraction(mp.nstr(mp.re(x), 150, min_fixed=-mp.inf, max_fixed=mp.inf)).limit_denominator(max_den)
    assert abs(mp.re(x) - mp.mpf(fr.numerator) / fr.denominator) < tol
    return fr


def class_poly(d, which):
    roots = [j_chi(heegner(f))[which] for f in reduced_forms(d)]
    return [rationalize(c) for c in poly_from_roots(roots)]


def interpolant(d):
    pts = [j_chi(heegner(f)) for f in reduced_forms(d)]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    n = len(xs)
    coeffs = [mp.mpc(0)] * n
    for i in range(n):
        basis = [mp.mpc(1)]
        den = mp.mpc(1)
        for k in range(n):
            if k == i:
                continue
            nxt = [mp.mpc(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                nxt[t + 1] += c
                nxt[t] -= xs[k] * c
            basis = nxt
            den *= xs[i] - xs[k]
        for t in range(n):
            coeffs[t] += ys[i] * basis[t] / den
    return [rationalize(c) for c in coeffs]


def dirichlet_class_number(d):
    """h(d) = -(w/|d|) sum_{a<|d|} (d/a) a, for fundamental d < -4 (w=2)."""
    from sympy.functions.combinatorial.numbers import jacobi_symbol

    def kron(dd, a):
        if a == 0:
            return 0
        res = 1
        while a % 2 == 0:
            a //= 2
            if dd % 2 == 0:
                return 0
            res *= 1 if dd % 8 in (1, 7) else -1
        return res * jacobi_symbol(dd % a, a) if a > 1 else res

    D = -d
    s = sum(kron(d, a) * a for a in range(1, D))
    return -s // D


def show(label, z, digits=60):
    print(f"{label}: re={mp.nstr(mp.re(z), digits)} im={mp.nstr(mp.im(z), digits)}")


if __name__ == "__main__":
    for tau in (1j, mp.mpc(0.25, 1.1), mp.mpc("-0.125", "0.9")):
        for k in (2, 4, 6):
            show(f"E{k}({tau})", eisenstein(k, mp.mpc(tau)))
        j, chi = j_chi(mp.mpc(tau))
        show(f"j({tau})", j)
        show(f"chi({tau})", chi)
    rho = mp.mpc(-0.5, mp.sqrt(3) / 2)
    show("chi(rho)", j_chi(rho)[1])
    show("j(0.5i)", j_chi(mp.mpc(0, 0.5))[0])
    show("chi(0.5i)", j_chi(mp.mpc(0, 0.5))[1])
    y = mp.mpf(10)
    chi = j_chi(mp.mpc(0, y))[1]
    q = mp.exp(-2 * mp.pi * y)
    print("chi(10i)*q/(1-3/(pi y)) - 1 =", mp.nstr(mp.re(chi) * q / (1 - 3 / (mp.pi * y)) - 1, 30))
    for d in (-3, -4, -7, -8, -11, -15, -20, -23, -47, -84, -96, -399, -1999):
        forms = reduced_forms(d)
        print(f"h({d}) = {len(forms)} forms={forms if len(forms) <= 6 else '...'}")
    for d in (-23, -47, -71, -84, -103, -191):
        print(f"dirichlet h({d}) = {dirichlet_class_number(d)}")
    for d in (-15, -23, -31, -47, -84):
        print(f"H_j({d}) =", [str(c) for c in class_poly(d, 0)])
    for d in (-4, -3, -7, -15, -23, -31, -47, -84):
        print(f"H_chi({d}) =", [str(c) for c in class_poly(d, 1)])
    for d in (-23, -31):
        print(f"r({d}) =", [str(c) for c in interpolant(d)])
