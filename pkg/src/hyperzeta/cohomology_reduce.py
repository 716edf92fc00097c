"""Reduction of odd differentials  sum_k F_k(x) dx / y^(2k+1)  to the basis
x^i dx/y (i < 2g) of the minus part of H^1, and the matrix of Frobenius.

Two relations drive everything:

* poles:  for T = A Q + B Q',
  T dx/y^(2k+1) == (A + 2B'/(2k-1)) dx/y^(2k-1)
* degree: (x^(j-1) Q' + 2(j-1) x^(j-2) Q) dx/y == 0, whose leading
  coefficient is 2j + 2g - 1.

Both divide by odd integers that may be divisible by p.  Values are held
scaled by a caller-chosen power p^D so that every intermediate is integral;
``RingCtx.div_int`` refuses a division whose low digits are nonzero, which
is the integrality audit.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import dagger_series as ds
from . import poly_ring as pr


@dataclass(frozen=True)
class FrobMatrix:
    """Matrix of sigma on x^i dx/y; column i is the image of x^i dx/y.

    ``entries`` hold p^scale times the true matrix.
    """

    entries: tuple
    scale: int

    @property
    def size(self):
        return len(self.entries)

    def column(self, i):
        return [row[i] for row in self.entries]


def frobenius_forms(ctx, fs, Q, scale=0):
    """Series for p^scale * (x^i dx/y)^sigma, i = 0..2g-1, in units of dx/y.

    (x^i dx/y)^sigma = p x^(pi+p-1) t^((p-1)/2) z dx/y; each image is x^p
    times the previous one.
    """
    p = ctx.p
    g = (len(Q) - 2) // 2
    base = ds.scale_int(ctx, ds.shift(fs.z, fs.half_shift), p ** (scale + 1))
    form = ds.normalize(ctx, ds.mul_poly(ctx, base, pr.monomial(ctx, p - 1)), Q)
    out = [form]
    xp = pr.monomial(ctx, p)
    for _ in range(2 * g - 1):
        form = ds.normalize(ctx, ds.mul_poly(ctx, form, xp), Q)
        out.append(form)
    return out


def frobenius_of_basis_form(ctx, i, fs, Q, scale=0):
    p = ctx.p
    base = ds.scale_int(ctx, ds.shift(fs.z, fs.half_shift), p ** (scale + 1))
    return ds.normalize(ctx, ds.mul_poly(ctx, base, pr.monomial(ctx, p * i + p - 1)), Q)


def reduce_poles(ctx, form, pair):
    """Eliminate every level k >= 1 of ``form``.

    Returns (S, G): S of degree <= 2g collects the reduced pole part and
    G = sum_{k<=0} c_k Q^(-k) is the untouched polynomial part, so that the
    form is cohomologous to (S + G) dx/y.
    """
    G = ds.polynomial_part(ctx, form, pair.Q)
    K = form.kmax
    if form.is_zero() or K < 1:
        return [], G
    S = list(form.level(K))
    for k in range(K, 0, -1):
        A, B = pr.split_by_bezout(ctx, S, pair)
        dB = pr.derivative(ctx, B)
        carry = pr.trim([ctx.div_int(c, 2 * k - 1) for c in pr.scale_int(ctx, dB, 2)])
        S = pr.add(ctx, A, carry)
        if k > 1:
            S = pr.add(ctx, S, form.level(k - 1))
    return S, G


def reduce_degree(ctx, H, Q, target=None):
    """Reduce H dx/y to degree <= target (default 2g-1) using exact forms d(x^j y)."""
    g = (len(Q) - 2) // 2
    target = 2 * g - 1 if target is None else target
    dQ = pr.derivative(ctx, Q)
    H = pr.trim(H)
    for d in range(len(H) - 1, target, -1):
        lead = H[d]
        if not any(lead):
            continue
        j = d - 2 * g + 1
        c = ctx.div_int(lead, 2 * d - 2 * g + 1)
        for i, qi in enumerate(dQ):
            H[j - 1 + i] = ctx.sub(H[j - 1 + i], ctx.mul(c, qi))
        if j > 1:
            c2 = ctx.scale(c, 2 * (j - 1))
            for i, qi in enumerate(Q):
                H[j - 2 + i] = ctx.sub(H[j - 2 + i], ctx.mul(c2, qi))
        H[d] = ctx.zero
    return pr.trim(H[: target + 1])


def reduce_form(ctx, form, pair):
    """Canonical representative of ``form`` * dx/y: coordinates on x^i dx/y."""
    S, G = reduce_poles(ctx, form, pair)
    return reduce_degree(ctx, pr.add(ctx, S, G), pair.Q)


def frobenius_matrix(ctx, fs, pair, scale=0, threads=1):
    """The 2g x 2g matrix of sigma, scaled by p^scale."""
    Q = pair.Q
    g = (len(Q) - 2) // 2
    forms = frobenius_forms(ctx, fs, Q, scale)

    def column(form):
        col = reduce_form(ctx, form, pair)
        return col + [ctx.zero] * (2 * g - len(col))

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            cols = list(pool.map(column, forms))
    else:
        cols = [column(f) for f in forms]
    entries = tuple(tuple(cols[j][i] for j in range(2 * g)) for i in range(2 * g))
    return FrobMatrix(entries, scale)


def exact_form(ctx, Bs, Q):
    """The differential d(sum_j B_j / y^(2j+1)) as a normalized series in dx/y.

    d(B/y^(2j+1)) = B' dx/y^(2j+1) - (2j+1) B Q' dx / (2 y^(2j+3)).
    """
    dQ = pr.derivative(ctx, Q)
    levels = {}
    for j, B in Bs.items():
        B = pr.trim(B)
        if not B:
            continue
        levels[j] = pr.add(ctx, levels.get(j, []), pr.derivative(ctx, B))
        term = pr.scale_int(ctx, pr.mul(ctx, B, dQ), -(2 * j + 1) * ctx.inv2)
        levels[j + 1] = pr.add(ctx, levels.get(j + 1, []), term)
    return ds.normalize(ctx, ds.make(levels), Q)
