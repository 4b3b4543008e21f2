#!/usr/bin/env python3
"""Random search for two matrix generators of the triple covers 3.A6 and 3.A7.

3.A6 is sought in SL(3,4) and 3.A7 in SU(3,5) <= SL(3,25). Pairs of random
elements are drawn until they generate a group of the target order, which is
counted by breadth-first closure. The result is written in the group text
format read by the library (entry k+1 stands for g^k, 0 for zero).

The field polynomials below must match the library's fixed primitive
polynomials: x^2 + x + 1 over GF(2) and x^2 + 4x + 2 over GF(5).

    tools/find_cover_generators.py 3A6 --seed 1 > data/groups/3A6.grp
"""

import argparse
import random
import sys


class GF:
    """GF(p^e) with elements coded as base-p digit integers."""

    def __init__(self, p, poly):  # poly: coefficients low to high, monic
        self.p = p
        e = len(poly) - 1
        self.e = e
        self.q = p**e

        def mulx(v):
            c = list(v)
            top = c[-1]
            c = [0] + c[:-1]
            return [(c[i] - top * poly[i]) % p for i in range(e)]

        self.exp = []
        v = [1] + [0] * (e - 1)
        for _ in range(self.q - 1):
            self.exp.append(sum(c * p**i for i, c in enumerate(v)))
            v = mulx(v) if e > 1 else [(v[0] * (-poly[0])) % p]
        assert len(set(self.exp)) == self.q - 1, "polynomial is not primitive"
        self.log = {x: k for k, x in enumerate(self.exp)}
        self.add = [[0] * self.q for _ in range(self.q)]
        for a in range(self.q):
            for b in range(self.q):
                r, aa, bb = 0, a, b
                for i in range(e):
                    r += ((aa % p + bb % p) % p) * p**i
                    aa //= p
                    bb //= p
                self.add[a][b] = r
        self.neg = [next(b for b in range(self.q) if self.add[a][b] == 0) for a in range(self.q)]

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def pw(self, a, k):
        if a == 0:
            return 0
        return self.exp[(self.log[a] * k) % (self.q - 1)]


def mmul(F, A, B, n):
    C = [0] * (n * n)
    for i in range(n):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc = F.add[acc][F.mul(A[i * n + k], B[k * n + j])]
            C[i * n + j] = acc
    return tuple(C)


def identity(n):
    return tuple(1 if k % (n + 1) == 0 else 0 for k in range(n * n))


def group_order(F, gens, n, cap):
    """Order of the generated group, or None once it exceeds cap."""
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mmul(F, x, g, n)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return len(seen)


def encode(F, A):
    return " ".join("0" if a == 0 else str(F.log[a] + 1) for a in A)


def random_sl3_4(F):
    def det(A):
        a, b, c, d, e, f, g, h, i = A
        m, ad = F.mul, F.add
        t1 = m(a, ad[m(e, i)][m(f, h)])
        t2 = m(b, ad[m(d, i)][m(f, g)])
        t3 = m(c, ad[m(d, h)][m(e, g)])
        return ad[ad[t1][t2]][t3]

    while True:
        A = tuple(random.randrange(F.q) for _ in range(9))
        if det(A) == 1:
            return A


def random_su3_5(F):
    # Products of random unitary 2x2 blocks embedded in the 3x3 identity.
    norm = lambda x: F.pw(x, 6)
    bar = lambda x: F.pw(x, 5)
    pairs = [(a, b) for a in range(F.q) for b in range(F.q) if F.add[norm(a)][norm(b)] == 1]
    A = identity(3)
    for _ in range(12):
        i, j = random.choice([(0, 1), (1, 2), (0, 2)])
        a, b = random.choice(pairs)
        B = list(identity(3))
        B[i * 3 + i] = a
        B[i * 3 + j] = b
        B[j * 3 + i] = F.neg[bar(b)]
        B[j * 3 + j] = bar(a)
        A = mmul(F, A, tuple(B), 3)
    return A


TARGETS = {
    "3A6": dict(p=2, poly=[1, 1, 1], order=1080, draw=random_sl3_4, where="SL(3,4)"),
    "3A7": dict(p=5, poly=[2, 4, 1], order=7560, draw=random_su3_5, where="SU(3,5) <= SL(3,25)"),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("group", choices=sorted(TARGETS))
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    t = TARGETS[args.group]
    random.seed(args.seed)
    F = GF(t["p"], t["poly"])
    tries = 0
    while True:
        tries += 1
        a, b = t["draw"](F), t["draw"](F)
        if group_order(F, [a, b], 3, t["order"] + 1) == t["order"]:
            break
    print(f"found after {tries} pairs", file=sys.stderr)
    name = "Triple cover 3.A6" if args.group == "3A6" else "Triple cover 3.A7"
    e = len(t["poly"]) - 1
    print(f"# {name} as a subgroup of {t['where']}.")
    print(f"# GF({F.q}) uses the fixed primitive polynomial {poly_text(t['poly'])}; entry k+1 denotes g^k, 0 is zero.")
    print(f"# Found by tools/find_cover_generators.py; validated on load: |G| = {t['order']}, |Z(G)| = 3, perfect.")
    print(f"mat {t['p']} {e} 3")
    print(encode(F, a))
    print(encode(F, b))


def poly_text(poly):
    terms = []
    for k in range(len(poly) - 1, -1, -1):
        c = poly[k]
        if c == 0:
            continue
        mono = "1" if k == 0 else ("x" if k == 1 else f"x^{k}")
        terms.append(mono if c == 1 or k == 0 and c == 1 else (f"{c}{mono}" if k else str(c)))
    return " + ".join(terms)


if __name__ == "__main__":
    main()
