"""Graded quotient-ring computations for homogeneous ideals.

Jacobian-type ideals of a homogeneous form, Hilbert-function tables via
standard monomials, minimal-generator degree counts via exact ranks, basis
checks for graded quotient spaces, and a dense rank oracle that never touches
Groebner bases (used to cross-validate the ones that do).  Also exact
Gaussian elimination for the residue linear systems.
"""

from math import gcd

from .coeff import QQ, ExtElement, field_arith, field_of
from .groebner import Ideal, buchberger, normal_form
from .poly import diff, graded_piece_basis, is_homogeneous


def _require_homogeneous(ideal):
    for g in ideal.generators:
        if is_homogeneous(g) is None:
            raise ValueError("ideal has a non-homogeneous generator")


def jacob(F, kind="full"):
    """Jacobian-type ideal of a homogeneous form.

    full: all partial derivatives.  modified: the first and last partials
    are multiplied by their own variables (4-variable rings only), which
    computes the cohomology of the complement of the first/last coordinate
    divisor rather than of the hypersurface itself.
    """
    if is_homogeneous(F) is None:
        raise ValueError("form must be homogeneous")
    ctx = F.ctx
    names = ctx.variables
    if kind == "full":
        gens = [diff(F, v) for v in names]
    elif kind == "modified":
        if ctx.nvars != 4:
            raise ValueError("modified kind needs exactly 4 variables")
        gens = [
            ctx.var(names[0]) * diff(F, names[0]),
            diff(F, names[1]),
            diff(F, names[2]),
            ctx.var(names[3]) * diff(F, names[3]),
        ]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return Ideal(ctx, gens)


class JacobianRing:
    """A homogeneous form together with its (full or modified) Jacobian ideal."""

    def __init__(self, F, kind="full"):
        self.kind = kind
        self.F = F
        self.ideal = jacob(F, kind)

    def graded_dim(self, d):
        return graded_dim(self.ideal, d)

    def __repr__(self):
        return f"JacobianRing(kind={self.kind}, F={self.F})"


class GradedReport:
    """Degree-d data of a graded quotient: dimension and standard monomials."""

    def __init__(self, degree, dim_quotient, standard_monomials):
        self.degree = degree
        self.dim_quotient = dim_quotient
        self.standard_monomials = tuple(standard_monomials)

    def __eq__(self, other):
        return (
            isinstance(other, GradedReport)
            and self.degree == other.degree
            and self.dim_quotient == other.dim_quotient
            and self.standard_monomials == other.standard_monomials
        )

    def __repr__(self):
        return f"GradedReport(d={self.degree}, dim={self.dim_quotient})"


def graded_dim(ideal, d):
    """Dimension of (B/I)_d by counting standard monomials of degree d."""
    _require_homogeneous(ideal)
    ctx = ideal.context
    lms = [g.leading_monomial() for g in ideal.groebner_basis()]
    std = []
    for m in graded_piece_basis(ctx, d):
        if not any(all(a >= b for a, b in zip(m, lm)) for lm in lms):
            std.append(m)
    return GradedReport(d, len(std), std)


class _RowSpace:
    """Incremental sparse row reduction with largest-monomial pivoting.

    Over the rationals, rows are cleared to content-free integers and
    reduced fraction-free (periodic content strips bound coefficient
    growth); other fields reduce by direct division.
    """

    def __init__(self, ctx):
        self.key = ctx.key
        self.pivots = {}
        self._keys = {}
        self._ints = ctx.field is QQ

    def _key_of(self, e):
        k = self._keys.get(e)
        if k is None:
            k = self._keys[e] = self.key(e)
        return k

    @staticmethod
    def _strip(row):
        g = 0
        for v in row.values():
            g = gcd(g, v)
            if g == 1:
                return row
        return {e: v // g for e, v in row.items()}

    @staticmethod
    def _to_ints(row):
        den = 1
        for v in row.values():
            den = den // gcd(den, v.denominator) * v.denominator
        out = {e: v.numerator * (den // v.denominator) for e, v in row.items()}
        return _RowSpace._strip(out) if out else out

    def _reduce_int(self, row):
        steps = 0
        while row:
            p = max(row, key=self._key_of)
            prow = self.pivots.get(p)
            if prow is None:
                return row, p
            c = row.pop(p)
            d = prow[p]
            g = gcd(c, d)
            a = d // g
            b = c // g
            if a != 1:
                for e in row:
                    row[e] *= a
            for e, pv in prow.items():
                if e == p:
                    continue
                nv = row.get(e, 0) - b * pv
                if nv:
                    row[e] = nv
                else:
                    row.pop(e, None)
            steps += 1
            if steps % 8 == 0 and row:
                row = self._strip(row)
        return row, None

    def _reduce(self, row):
        while row:
            p = max(row, key=self._key_of)
            prow = self.pivots.get(p)
            if prow is None:
                return row, p
            c = row[p]
            for e, v in prow.items():
                nv = row.get(e, 0) - c * v
                if nv == 0:
                    row.pop(e, None)
                else:
                    row[e] = nv
        return row, None

    def add(self, row):
        """Insert a row (dict monomial->coeff); True if the rank grew."""
        if self._ints:
            reduced, p = self._reduce_int(self._to_ints(row))
            if p is None:
                return False
            reduced = self._strip(reduced)
            if reduced[p] < 0:
                reduced = {e: -v for e, v in reduced.items()}
            self.pivots[p] = reduced
            return True
        reduced, p = self._reduce(dict(row))
        if p is None:
            return False
        inv = field_arith("inv", reduced[p])
        self.pivots[p] = {e: v * inv for e, v in reduced.items()}
        return True

    @property
    def rank(self):
        return len(self.pivots)


def _generator_rows(ideal, d, skip_unit_monomial=False):
    """Rows m*g over the degree-d monomial basis, largest product lm first.

    The ordering makes most insertions install a fresh pivot without any
    elimination work; the rank is order-independent either way.
    """
    ctx = ideal.context
    out = []
    for g in ideal.generators:
        dg = is_homogeneous(g)
        if dg is None:
            raise ValueError("ideal has a non-homogeneous generator")
        if dg < 0 or dg > d:
            continue
        lead = g.leading_monomial()
        for m in graded_piece_basis(ctx, d - dg):
            if skip_unit_monomial and not any(m):
                continue
            row = {tuple(a + b for a, b in zip(e, m)): c for e, c in g.terms}
            out.append((ctx.key(tuple(a + b for a, b in zip(lead, m))), row, g, m))
    out.sort(key=lambda t: t[0], reverse=True)
    return [(row, g, m) for _, row, g, m in out]


def linalg_oracle(ideal, d):
    """dim (B/I)_d by brute-force rank of generator multiples; no GB involved."""
    ctx = ideal.context
    space = _RowSpace(ctx)
    for row, _, _ in _generator_rows(ideal, d):
        space.add(row)
    total = len(graded_piece_basis(ctx, d))
    return total - space.rank


def mingens_degrees(ideal, up_to):
    """Minimal-generator counts per degree with representative generators.

    In degree d the count is dim I_d - dim (I_{<d})_d, where I_{<d} is the
    subideal generated below degree d: every product m*g with deg m >= 1
    lands in (I_{<d})_d, so only degree-d generators contribute fresh rank.
    That rank is the span of the normal forms of the degree-d generators
    against a degree-d-truncated basis of I_{<d}, which avoids eliminating
    the full product space.
    """
    _require_homogeneous(ideal)
    ctx = ideal.context
    by_degree = {}
    for g in ideal.generators:
        dg = is_homogeneous(g)
        if dg >= 0:
            by_degree.setdefault(dg, []).append(g)
    out = []
    lower = []
    for d in range(up_to + 1):
        gens_d = by_degree.get(d, [])
        if not gens_d:
            out.append((d, 0, []))
        else:
            lower_gb = buchberger(lower, degree_cap=d)
            space = _RowSpace(ctx)
            reps = []
            for g in gens_d:
                nf = normal_form(g, lower_gb)
                if not nf.is_zero() and space.add(dict(nf.terms)):
                    reps.append(g)
            out.append((d, len(reps), reps))
        lower.extend(gens_d)
    return out


def _poly_row(p, d):
    if is_homogeneous(p) != d:
        raise ValueError(f"candidate is not homogeneous of degree {d}")
    return {e: c for e, c in p.terms}


def quotient_basis_check(ideal, d, candidates, within=None):
    """True iff candidates are a basis of the degree-d quotient space.

    The quotient is (B/I)_d, or (W/(I_d cap W)) when `within` spans a
    subspace W of the degree-d piece.  Candidates must lie in W.
    """
    _require_homogeneous(ideal)
    ctx = ideal.context
    cand_rows = [_poly_row(p, d) for p in candidates]
    if within is None:
        ambient_rows = [{m: ctx.field.one} for m in graded_piece_basis(ctx, d)]
    else:
        ambient_rows = [_poly_row(p, d) for p in within]
        cspace = _RowSpace(ctx)
        for row in ambient_rows:
            cspace.add(row)
        for row in cand_rows:
            if cspace.add(row):
                raise ValueError("candidate lies outside the ambient subspace")

    base = _RowSpace(ctx)
    for row, _, _ in _generator_rows(ideal, d):
        base.add(row)
    rank_i = base.rank
    # independence: every candidate must grow the rank over I_d
    for r in cand_rows:
        if not base.add(r):
            return False
    rank_ic = base.rank
    # spanning: I_d + candidates must reach I_d + W
    full = _RowSpace(ctx)
    for row, _, _ in _generator_rows(ideal, d):
        full.add(row)
    for r in ambient_rows:
        full.add(r)
    return rank_ic == rank_i + len(cand_rows) == full.rank


def graded_intersection_dim(i_ideal, j_ideal, d):
    """dim (I_d cap J_d) = dim I_d + dim J_d - dim (I+J)_d; no GB involved."""
    if i_ideal.context != j_ideal.context:
        raise ValueError("mixed ring contexts")
    ctx = i_ideal.context

    def rank_of(ideal):
        s = _RowSpace(ctx)
        for row, _, _ in _generator_rows(ideal, d):
            s.add(row)
        return s.rank

    both = Ideal(ctx, list(i_ideal.generators) + list(j_ideal.generators))
    return rank_of(i_ideal) + rank_of(j_ideal) - rank_of(both)


def hilbert_table(ideal, cap=40):
    """[(d, dim (B/I)_d)] until the first zero dimension; capped length.

    Returns (rows, truncated): truncated is True when the cap was hit before
    a zero dimension appeared (positive-dimensional quotients).
    """
    rows = []
    for d in range(cap + 1):
        dim_d = graded_dim(ideal, d).dim_quotient
        rows.append((d, dim_d))
        if dim_d == 0:
            return rows, False
    return rows, True


def solve_linear(matrix, rhs):
    """Exact Gauss-Jordan.

    Returns {"status": "no-solution"} or {"status": "unique", "solution": [...]}
    or {"status": "parametric", "solution": [...], "nullspace": [[...], ...]}.
    """
    nrows = len(matrix)
    if nrows != len(rhs):
        raise ValueError("matrix/rhs shape mismatch")
    ncols = len(matrix[0]) if nrows else 0
    field = QQ
    for row in matrix:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
        for x in row:
            if isinstance(x, ExtElement):
                field = field_of(x)
    for x in rhs:
        if isinstance(x, ExtElement):
            field = field_of(x)

    rows = [
        [field.coerce(x) for x in row] + [field.coerce(b)]
        for row, b in zip(matrix, rhs)
    ]
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field_arith("inv", rows[r][c])
        rows[r] = [v * inv for v in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if rows[i][ncols] != 0:
            return {"status": "no-solution"}
    particular = [field.zero] * ncols
    for i, c in enumerate(pivot_cols):
        particular[c] = rows[i][ncols]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    if not free_cols:
        return {"status": "unique", "solution": particular}
    nullspace = []
    for fc in free_cols:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for i, c in enumerate(pivot_cols):
            vec[c] = -rows[i][fc]
        nullspace.append(vec)
    return {"status": "parametric", "solution": particular, "nullspace": nullspace}
