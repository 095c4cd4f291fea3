"""Independent reference values, computed with sympy/mpmath by brute force.

Run: python3 tools/oracle/oracle.py
The printed numbers are frozen into tests/unit/*.cpp.
"""
from fractions import Fraction
from math import gcd

import mpmath as mp
from sympy import factorint, isprime, primerange, totient, n_order

mp.mp.dps = 30


def mangoldt(n):
    f = factorint(n)
    return mp.log(next(iter(f))) if len(f) == 1 else mp.mpf(0)


def e(t):
    return mp.expjpi(2 * t)


def characters(q):
    """All characters mod q as dicts n -> value, built from a brute-force generator search."""
    units = [n for n in range(1, q + 1) if gcd(n, q) == 1]
    # Build the group by brute force: characters are homomorphisms, found from a basis of cyclic factors.
    f = factorint(q)
    comps = []
    for p, k in sorted(f.items()):
        pk = p ** k
        if p == 2:
            if k == 1:
                continue
            comps.append((pk, [(pk - 1, 2)] + ([(5, 2 ** (k - 2))] if k >= 3 else [])))
        else:
            g = next(a for a in range(2, pk) if gcd(a, p) == 1 and n_order(a, pk) == pk // p * (p - 1))
            comps.append((pk, [(g, pk // p * (p - 1))]))
    # discrete logs by table
    gens = []
    for pk, basis in comps:
        for g, order in basis:
            gens.append((pk, g, order))
    logs = {}
    for n in units:
        vec = []
        for pk, basis in comps:
            r = n % pk
            if len(basis) == 1:
                g, order = basis[0]
                vec.append(next(j for j in range(order) if pow(g, j, pk) == r))
            else:
                (g1, o1), (g2, o2) = basis
                hit = next((i, j) for i in range(o1) for j in range(o2) if pow(g1, i, pk) * pow(g2, j, pk) % pk == r)
                vec.extend(hit)
        logs[n % q] = vec
    orders = [o for _, _, o in gens]
    import itertools
    chars = []
    for ex in itertools.product(*[range(o) for o in orders]):
        chi = {}
        for n in range(q):
            if gcd(n, q) != 1:
                chi[n] = mp.mpc(0)
            else:
                v = logs[n]
                chi[n] = e(sum(Fraction(a * b, o) for a, b, o in zip(ex, v, orders)))
        chars.append(chi)
    return chars


def psi_chi(x, chi, q):
    return mp.fsum(mangoldt(n) * chi[n % q] for n in range(2, x + 1))


def running_max(x, chi, q):
    s, m = mp.mpc(0), mp.mpf(0)
    for n in range(2, x + 1):
        s += mangoldt(n) * chi[n % q]
        m = max(m, abs(s))
    return m


def tau_growth(x, r):
    def tau(n):
        out = 1
        for _, a in factorint(n).items():
            out *= mp.binomial(a + r - 1, r - 1)
        return out
    return mp.fsum(tau(n) ** 2 for n in range(1, x + 1)) / (x * mp.log(x) ** (r * r - 1))


def hl_count(x, P, l):
    import math
    return mp.fsum(mangoldt(n) for n in range(2, x + 1) for m in range(1, math.isqrt(x) + 1) if (n + m * m - l) % P == 0)


def main():
    L = mp.log
    print("psi(10) =", mp.nstr(psi_chi(10, {n: 1 for n in range(1)}, 1), 15))
    c3 = characters(3)
    print("psi(10, nontrivial mod 3) =", mp.nstr(psi_chi(10, c3[1], 3), 15))
    print("t(10;3) =", mp.nstr(sum(running_max(10, c, 3) for c in c3), 15))
    c2 = characters(2)
    print("t(3;2) =", mp.nstr(sum(running_max(3, c, 2) for c in c2), 15))
    print("tau_growth(100,2) =", mp.nstr(tau_growth(100, 2), 15))
    print("tau_growth(1000,2) =", mp.nstr(tau_growth(1000, 2), 15))
    print("S(1/2,10) =", mp.nstr(mp.fsum(mangoldt(n) * e(Fraction(n, 2)) for n in range(2, 11)), 15))
    E = mp.e
    print("erh x=e^2 q=1 =", mp.nstr(E**2 + E * 4, 12))
    print("theorem1 x=e q=1 =", mp.nstr(E + E**0.8 + E**0.5, 12))
    s = mp.sqrt(E)
    print("montgomery x=q=e^1/2 =", mp.nstr(s + (s * s) ** (mp.mpf(5) / 7) + s ** 0.5 * s, 12))
    print("vinogradov5 x=4 q=4 eps=.01 =", mp.nstr((4 * 4 ** -0.5 + 4 ** 0.8 + 2 * 2) * 4 ** 0.01, 12))
    print("corollary2 x=e eta=1 =", mp.nstr(E, 12))
    print("H2 count x=10 P=3 l=1 =", mp.nstr(hl_count(10, 3, 1), 15))
    print("H2 count x=100 P=3 l=1 =", mp.nstr(hl_count(100, 3, 1), 15))
    print("H2 count x=100 P=9 l=1 =", mp.nstr(hl_count(100, 9, 1), 15))
    print("H2 count x=1000 P=7 l=1 =", mp.nstr(hl_count(1000, 7, 1), 15))
    c9 = characters(9)
    for i, chi in enumerate(c9):
        cond = min(d for d in (1, 3, 9) if all(abs(chi[n] - 1) < 1e-20 for n in range(1, 10) if gcd(n, 9) == 1 and n % d == 1 % d))
        tau = mp.fsum(chi[h % 9] * e(Fraction(h, 9)) for h in range(1, 10))
        print(f"mod 9 char {i}: conductor {cond} |tau|^2 = {mp.nstr(abs(tau)**2, 12)}")
    # Mixed sum p=3 beta=2 l=1 h=1 over primitive chars mod 9
    for i, chi in enumerate(c9):
        S = mp.fsum(chi[(1 - m * m) % 9] * e(Fraction(m, 9)) for m in range(1, 10))
        print(f"mixed p=3 b=2 l=1 h=1 char {i}: |S| = {mp.nstr(abs(S), 12)}")
    # quadratic Gauss sums
    for p in (3, 5, 7):
        G = mp.fsum(e(Fraction(m * m, p)) for m in range(1, p + 1))
        print(f"G_{p} =", mp.nstr(G, 12))
    # decomposition correction q=3 a=1 x=10
    corr = mp.fsum(mangoldt(n) * e(Fraction(n, 3)) for n in range(2, 11) if gcd(n, 3) > 1)
    print("correction q=3 a=1 x=10 =", mp.nstr(corr, 12))
    # chi_0 mod 9 count with h=9, l=1
    print("chi0 mod 9 l=1 h=9 count =", sum(1 for m in range(1, 10) if (1 - m * m) % 3 != 0))
    print("main_asymptotic x=1e4 p=3 =", mp.nstr(mp.mpf(10) ** 6 / 3 / 2, 12))


if __name__ == "__main__":
    main()
