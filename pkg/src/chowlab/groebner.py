"""Groebner bases: Buchberger with Gebauer-Moeller pair management.

S-polynomial arithmetic runs fraction-free: integer coefficients over Q,
integer coordinate tuples over an integral extension field, with periodic
content stripping.  Public results are reduced Groebner bases (monic,
interreduced, sorted descending by leading monomial), which makes every
basis canonical for a given ideal and order.  On top of that: normal forms,
ideal membership, elimination, pairwise intersection, and Krull dimension.
"""

import threading
from fractions import Fraction
from heapq import heappop, heappush
from math import gcd

from .coeff import ExtElement, ExtField, field_arith
from .poly import Polynomial, RingContext


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class _ZKernel:
    """Integer coefficient arithmetic for rational-field inputs."""

    def __init__(self, field):
        self.field = field

    def poly_in(self, p, key):
        den = 1
        for _, c in p.terms:
            den = den * c.denominator // gcd(den, c.denominator)
        return self.strip([(key(e), e, int(c * den)) for e, c in p.terms])

    def strip(self, terms):
        if not terms:
            return terms
        g = 0
        for _, _, c in terms:
            g = gcd(g, c)
            if g == 1:
                break
        if terms[0][2] < 0:
            g = -g
        if g != 1:
            terms = [(k, e, c // g) for k, e, c in terms]
        return terms

    def cross(self, a, b):
        d = gcd(a, b)
        return b // d, a // d

    @staticmethod
    def mulc(c, s):
        return c * s

    @staticmethod
    def subc(a, b):
        return a - b

    @staticmethod
    def negc(c):
        return -c

    @staticmethod
    def is_zero(c):
        return c == 0

    @staticmethod
    def is_one(c):
        return c == 1

    def poly_out(self, terms, ctx):
        lc = terms[0][2]
        return Polynomial(ctx, tuple((e, Fraction(c, lc)) for _, e, c in terms))


class _ExtKernel:
    """Integer-tuple arithmetic in Z[a] for an integral monic minimal poly."""

    def __init__(self, field):
        self.field = field
        d = field.degree
        self.d = d
        self.one_c = (1,) + (0,) * (d - 1)
        # integral rewrite rows for a^d .. a^(2d-2)
        self.rows = [
            tuple(int(x) for x in field._pow[k]) for k in range(d, 2 * d - 1)
        ]

    def poly_in(self, p, key):
        den = 1
        for _, c in p.terms:
            for comp in c.coeffs:
                den = den * comp.denominator // gcd(den, comp.denominator)
        return self.strip(
            [(key(e), e, tuple(int(x * den) for x in c.coeffs)) for e, c in p.terms]
        )

    def _content(self, c):
        g = 0
        for x in c:
            g = gcd(g, x)
        return g

    def strip(self, terms):
        if not terms:
            return terms
        g = 0
        for _, _, c in terms:
            for x in c:
                g = gcd(g, x)
            if g == 1:
                break
        lead = next(x for x in terms[0][2] if x)
        if lead < 0:
            g = -g
        if g != 1:
            terms = [(k, e, tuple(x // g for x in c)) for k, e, c in terms]
        return terms

    def cross(self, a, b):
        c = gcd(self._content(a), self._content(b))
        if c == 1:
            return b, a
        return tuple(x // c for x in b), tuple(x // c for x in a)

    def mulc(self, a, b):
        d = self.d
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        for k in range(d, 2 * d - 1):
            ck = conv[k]
            if ck:
                row = self.rows[k - d]
                for i in range(d):
                    out[i] += ck * row[i]
        return tuple(out)

    @staticmethod
    def subc(a, b):
        return tuple(x - y for x, y in zip(a, b))

    @staticmethod
    def negc(c):
        return tuple(-x for x in c)

    @staticmethod
    def is_zero(c):
        return not any(c)

    def is_one(self, c):
        return c == self.one_c

    def poly_out(self, terms, ctx):
        field = self.field
        lc = field.element([Fraction(x) for x in terms[0][2]])
        inv = lc.inverse()
        out = []
        for _, e, c in terms:
            el = field.element([Fraction(x) for x in c])
            out.append((e, el * inv))
        return Polynomial(ctx, tuple(out))


class _FieldKernel:
    """Direct field arithmetic; used when no integral form is available."""

    def __init__(self, field):
        self.field = field

    def poly_in(self, p, key):
        return self.strip([(key(e), e, c) for e, c in p.terms])

    def strip(self, terms):
        if not terms:
            return terms
        if self.is_one(terms[0][2]):
            return terms
        inv = field_arith("inv", terms[0][2])
        return [(k, e, c * inv) for k, e, c in terms]

    def cross(self, a, b):
        return self.field.one, a * field_arith("inv", b)

    @staticmethod
    def mulc(c, s):
        return c * s

    @staticmethod
    def subc(a, b):
        return a - b

    @staticmethod
    def negc(c):
        return -c

    @staticmethod
    def is_zero(c):
        return not c

    def is_one(self, c):
        return c == self.field.one

    def poly_out(self, terms, ctx):
        inv = field_arith("inv", terms[0][2])
        return Polynomial(ctx, tuple((e, c * inv) for _, e, c in terms))


class _Engine:
    """One Buchberger run over a fixed ring context."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.key = ctx.key
        field = ctx.field
        if isinstance(field, ExtField):
            self.kern = _ExtKernel(field) if field.is_integral() else _FieldKernel(field)
        else:
            self.kern = _ZKernel(field)

    def _scaled(self, terms, c, shift):
        kern = self.kern
        one = kern.is_one(c)
        if shift is None:
            if one:
                return terms
            mul = kern.mulc
            return [(k, e, mul(cc, c)) for k, e, cc in terms]
        key = self.key
        mul = kern.mulc
        out = []
        for _, e, cc in terms:
            e2 = tuple(x + y for x, y in zip(e, shift))
            out.append((key(e2), e2, cc if one else mul(cc, c)))
        return out

    def linear_comb(self, fa, ca, sa, fb, cb, sb):
        """ca * x^sa * fa - cb * x^sb * fb as a merged descending term list."""
        A = self._scaled(fa, ca, sa)
        B = self._scaled(fb, cb, sb)
        kern = self.kern
        sub, neg, isz = kern.subc, kern.negc, kern.is_zero
        out = []
        i = j = 0
        n, m = len(A), len(B)
        while i < n and j < m:
            ka, kb = A[i][0], B[j][0]
            if ka > kb:
                out.append(A[i])
                i += 1
            elif kb > ka:
                t = B[j]
                out.append((t[0], t[1], neg(t[2])))
                j += 1
            else:
                c = sub(A[i][2], B[j][2])
                if not isz(c):
                    out.append((ka, A[i][1], c))
                i += 1
                j += 1
        out.extend(A[i:])
        for t in B[j:]:
            out.append((t[0], t[1], neg(t[2])))
        return out

    @staticmethod
    def _pick(G, lm):
        # smallest reducer (fewest terms) limits fill-in and coefficient growth
        red = None
        for ent in G:
            if _divides(ent[0], lm) and (red is None or len(ent[2]) < len(red[2])):
                red = ent
        return red

    def top_reduce(self, f, G):
        kern = self.kern
        steps = 0
        while f:
            lm, lc = f[0][1], f[0][2]
            red = self._pick(G, lm)
            if red is None:
                return kern.strip(f)
            shift = tuple(a - b for a, b in zip(lm, red[0]))
            cf, cg = kern.cross(lc, red[1])
            f = self.linear_comb(f, cf, None, red[2], cg, shift if any(shift) else None)
            steps += 1
            if steps & 3 == 0:
                f = kern.strip(f)
        return f

    def full_reduce(self, f, G):
        kern = self.kern
        out = []
        rest = f
        steps = 0
        while rest:
            lm, lc = rest[0][1], rest[0][2]
            red = self._pick(G, lm)
            if red is None:
                out.append(rest[0])
                rest = rest[1:]
                continue
            shift = tuple(a - b for a, b in zip(lm, red[0]))
            cf, cg = kern.cross(lc, red[1])
            rest = self.linear_comb(rest, cf, None, red[2], cg, shift if any(shift) else None)
            if not kern.is_one(cf):
                mul = kern.mulc
                out = [(k, e, mul(c, cf)) for k, e, c in out]
            steps += 1
            if steps & 7 == 0:
                n0 = len(out)
                both = kern.strip(out + rest)
                out, rest = both[:n0], both[n0:]
        return kern.strip(out)

    def spoly(self, ei, ej):
        lmi, lci, ti = ei
        lmj, lcj, tj = ej
        big = tuple(max(a, b) for a, b in zip(lmi, lmj))
        si = tuple(a - b for a, b in zip(big, lmi))
        sj = tuple(a - b for a, b in zip(big, lmj))
        cf, cg = self.kern.cross(lci, lcj)
        s = self.linear_comb(
            ti, cf, si if any(si) else None, tj, cg, sj if any(sj) else None
        )
        return self.kern.strip(s)

    def _add(self, terms):
        """Gebauer-Moeller update: install a new basis element and its pairs."""
        G, live = self.G, self.live
        idx = len(G)
        lmh = terms[0][1]
        cand = []
        for g_idx in range(idx):
            lmg = G[g_idx][0]
            big = tuple(max(a, b) for a, b in zip(lmg, lmh))
            coprime = all(min(a, b) == 0 for a, b in zip(lmg, lmh))
            cand.append((g_idx, big, coprime))
        kept = []
        for t in range(len(cand)):
            g_idx, big, coprime = cand[t]
            if not coprime:
                dominated = False
                for t2 in range(t + 1, len(cand)):
                    if _divides(cand[t2][1], big):
                        dominated = True
                        break
                if not dominated:
                    for _, big2, _ in kept:
                        if _divides(big2, big):
                            dominated = True
                            break
                if dominated:
                    continue
            kept.append(cand[t])
        for (i, j), big in list(live.items()):
            if _divides(lmh, big):
                li = tuple(max(a, b) for a, b in zip(G[i][0], lmh))
                lj = tuple(max(a, b) for a, b in zip(G[j][0], lmh))
                if li != big and lj != big:
                    del live[(i, j)]
        G.append((lmh, terms[0][2], terms))
        for g_idx, big, coprime in kept:
            if coprime:
                continue
            live[(g_idx, idx)] = big
            self._seq += 1
            # degree-first selection, order key as tie-break
            heappush(
                self.heap, (sum(big), self.key(big), self._seq, g_idx, idx)
            )

    def run(self, polys, degree_cap=None):
        kern = self.kern
        self.G = []
        self.live = {}
        self.heap = []
        self._seq = 0
        for p in polys:
            t = self.top_reduce(kern.poly_in(p, self.key), self.G)
            if t:
                # tail-reduce before installing: keeps coefficients primitive
                self._add(self.full_reduce(t, self.G))
        while self.heap:
            item = heappop(self.heap)
            if degree_cap is not None and item[0] > degree_cap:
                # degree-first selection pops pairs in increasing degree, so
                # nothing below the cap remains
                break
            ij = (item[3], item[4])
            if ij not in self.live:
                continue
            del self.live[ij]
            s = self.spoly(self.G[ij[0]], self.G[ij[1]])
            if not s:
                continue
            h = self.top_reduce(s, self.G)
            if h:
                self._add(self.full_reduce(h, self.G))
        return self._finalize()

    def _finalize(self):
        G = self.G
        order = sorted(range(len(G)), key=lambda k: self.key(G[k][0]))
        minimal = []
        for idx in order:
            lm = G[idx][0]
            if not any(_divides(G[k][0], lm) for k in minimal):
                minimal.append(idx)
        kept = [G[k] for k in minimal]
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            red = self.full_reduce(kept[i][2], others)
            kept[i] = (red[0][1], red[0][2], red)
        kept.sort(key=lambda ent: self.key(ent[0]), reverse=True)
        return [self.kern.poly_out(ent[2], self.ctx) for ent in kept]


def buchberger(gens, degree_cap=None):
    """Reduced Groebner basis of the given generators (shared context).

    With degree_cap no S-pair above that total degree is processed.  For
    homogeneous input the result then has correct leading terms and normal
    forms through the cap, because pair degrees never decrease.
    """
    gens = [g for g in gens if isinstance(g, Polynomial) and not g.is_zero()]
    if not gens:
        return []
    ctx = gens[0].ctx
    for g in gens:
        if g.ctx != ctx:
            raise ValueError("mixed ring contexts")
    return _Engine(ctx).run(gens, degree_cap)


def normal_form(f, basis):
    """Fully reduce f modulo the basis; f - result lies in (basis)."""
    ctx = f.ctx
    ents = []
    for g in basis:
        if g.is_zero():
            continue
        if g.ctx != ctx:
            raise ValueError("mixed ring contexts")
        ents.append((g.leading_monomial(), g.leading_coeff(), g.terms))
    key = ctx.key
    rest = list(f.terms)
    out = []
    while rest:
        e, c = rest[0]
        red = None
        for lm, lc, terms in ents:
            if _divides(lm, e):
                red = (lm, lc, terms)
                break
        if red is None:
            out.append((e, c))
            rest.pop(0)
            continue
        lm, lc, terms = red
        factor = c * field_arith("inv", lc)
        bterms = []
        for te, tc in terms:
            e2 = tuple(a + (x - y) for a, x, y in zip(te, e, lm))
            bterms.append((key(e2), e2, tc * factor))
        arest = [(key(te), te, tc) for te, tc in rest]
        merged = []
        i = j = 0
        while i < len(arest) and j < len(bterms):
            ka, kb = arest[i][0], bterms[j][0]
            if ka > kb:
                merged.append(arest[i])
                i += 1
            elif kb > ka:
                t = bterms[j]
                merged.append((t[0], t[1], -t[2]))
                j += 1
            else:
                cc = arest[i][2] - bterms[j][2]
                if cc:
                    merged.append((ka, arest[i][1], cc))
                i += 1
                j += 1
        merged.extend(arest[i:])
        for t in bterms[j:]:
            merged.append((t[0], t[1], -t[2]))
        rest = [(te, tc) for _, te, tc in merged]
    return Polynomial(ctx, tuple(out))


def s_polynomial(f, g):
    """Classic S-polynomial with monic scaling (field coefficients)."""
    ctx = f.ctx
    lmf, lmg = f.leading_monomial(), g.leading_monomial()
    big = tuple(max(a, b) for a, b in zip(lmf, lmg))
    mf = ctx.monomial(tuple(a - b for a, b in zip(big, lmf)))
    mg = ctx.monomial(tuple(a - b for a, b in zip(big, lmg)))
    return mf * f * field_arith("inv", f.leading_coeff()) - mg * g * field_arith(
        "inv", g.leading_coeff()
    )


class Ideal:
    """Generators plus a lazily computed, cached reduced Groebner basis."""

    def __init__(self, ctx, generators):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                g = ctx.const(g)
            if g.ctx != ctx:
                raise ValueError("generator from a different ring context")
            if not g.is_zero():
                gens.append(g)
        self.context = ctx
        self.generators = tuple(gens)
        self._gb = None
        self._lock = threading.Lock()

    def groebner_basis(self):
        # single-flight: the cache is computed at most once
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = tuple(buchberger(list(self.generators)))
        return self._gb

    def _set_gb(self, gb):
        with self._lock:
            self._gb = tuple(gb)

    def __repr__(self):
        return f"Ideal({len(self.generators)} gens over {self.context!r})"


def ideal_member(f, ideal):
    """True iff f reduces to zero modulo the ideal's Groebner basis."""
    if isinstance(ideal, Ideal):
        basis = ideal.groebner_basis()
    else:
        basis = buchberger(list(ideal))
    return normal_form(f, basis).is_zero()


def _port(g, ctx2, pad=0, drop=0):
    d = {}
    for e, c in g.terms:
        e2 = (0,) * pad + tuple(e[drop:])
        d[e2] = c
    return ctx2.from_dict(d)


def eliminate(ideal, k):
    """Intersect with the subring omitting the first k variables."""
    ctx = ideal.context
    if k == 0:
        out = Ideal(ctx, list(ideal.groebner_basis()))
        out._set_gb(ideal.groebner_basis())
        return out
    if not 0 < k < ctx.nvars:
        raise ValueError("elimination count out of range")
    ctx_blk = RingContext(ctx.variables, ("block", k), ctx.field)
    gb = buchberger([_port(g, ctx_blk) for g in ideal.generators])
    ctx_rest = RingContext(ctx.variables[k:], "dp", ctx.field)
    res = []
    for g in gb:
        if all(all(x == 0 for x in e[:k]) for e, _ in g.terms):
            res.append(_port(g, ctx_rest, drop=k))
    out = Ideal(ctx_rest, res)
    # t-free slice of a reduced elimination basis is itself a reduced basis
    out._set_gb(res)
    return out


_AUX = "@t"


def intersect(i_ideal, j_ideal):
    """I cap J via a fresh auxiliary variable and one elimination."""
    ctx = i_ideal.context
    if j_ideal.context != ctx:
        raise ValueError("mixed ring contexts")
    if _AUX in ctx.variables:
        raise ValueError("auxiliary variable name collision")
    ctxa = RingContext((_AUX,) + ctx.variables, ("block", 1), ctx.field)
    t = ctxa.var(_AUX)
    gens = [t * _port(f, ctxa, pad=1) for f in i_ideal.generators]
    gens += [(ctxa.one - t) * _port(g, ctxa, pad=1) for g in j_ideal.generators]
    gb = buchberger(gens)
    res = []
    for g in gb:
        if all(e[0] == 0 for e, _ in g.terms):
            res.append(_port(g, ctx, drop=1))
    out = Ideal(ctx, res)
    if ctx.order == "dp":
        out._set_gb(res)
    for g in res:
        if not (ideal_member(g, i_ideal) and ideal_member(g, j_ideal)):
            raise AssertionError("intersection generator failed containment check")
    return out


def krull_dim(ideal):
    """Affine Krull dimension of the quotient by the ideal (unit ideal: -1)."""
    gb = ideal.groebner_basis()
    n = ideal.context.nvars
    if not gb:
        return n
    supports = [
        frozenset(i for i, x in enumerate(g.leading_monomial()) if x) for g in gb
    ]
    best = -1
    for mask in range(1 << n):
        subset = frozenset(i for i in range(n) if mask >> i & 1)
        if len(subset) <= best:
            continue
        if any(s <= subset for s in supports):
            continue
        best = len(subset)
    return best
