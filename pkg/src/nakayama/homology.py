"""Hom spaces, syzygies, and homological dimensions for uniserial modules.

A nonzero map M(i,k_u) -> M(j,l_v) factors as quotient-of-source onto
submodule-of-target; its isomorphism class is pinned by the image length k,
which must satisfy k = top(u) - top(v) + len(v) modulo n (exactly, in the
linear case) and 1 <= k <= min(len u, len v).  These canonical maps form a
basis of the Hom space, and compositions of canonical maps are canonical with
structure constant 1 (or zero), so all Hom/Ext arithmetic is integral.

Projective dimension walks the syzygy recursion M(i,l) -> M(i-l, c_i-l) until
a projective is reached; a revisited module means an infinite resolution.
Injective dimension and dominant dimension walk injective envelopes the same
way.
"""

from dataclasses import dataclass

from .core import (
    INF,
    ModuleSum,
    Uniserial,
    indecomposables,
    injective,
    is_injective,
    is_projective,
    opposite,
    projective,
    socle_vertex,
)


# --- hom spaces --------------------------------------------------------------

@dataclass(frozen=True, order=True)
class HomMap:
    """Canonical map between uniserials, recorded by its image length k."""

    source: Uniserial
    target: Uniserial
    k: int

    def __repr__(self):
        return "Hom[%r -> %r, k=%d]" % (self.source, self.target, self.k)


def _first_image_length(alg, u, v):
    """Smallest admissible image length, or 0 if there is none."""
    if alg.kind == "linear":
        k = u.top - v.top + v.length
        return k if 1 <= k <= min(u.length, v.length) else 0
    k = (u.top - v.top + v.length) % alg.n
    if k == 0:
        k = alg.n
    return k if k <= min(u.length, v.length) else 0


def hom_dim(alg, u, v):
    """dim Hom(u, v); zero modules give 0."""
    if u is None or v is None:
        return 0
    k = _first_image_length(alg, u, v)
    if k == 0:
        return 0
    if alg.kind == "linear":
        return 1
    return (min(u.length, v.length) - k) // alg.n + 1


def hom_basis(alg, u, v):
    """The canonical maps u -> v, ordered by ascending image length."""
    if u is None or v is None:
        return []
    k = _first_image_length(alg, u, v)
    if k == 0:
        return []
    step = alg.n if alg.kind == "cyclic" else min(u.length, v.length) + 1
    out = []
    while k <= min(u.length, v.length):
        out.append(HomMap(u, v, k))
        k += step
    return out


def identity_hom(alg, u):
    return HomMap(u, u, u.length)


def is_valid_hom(alg, f):
    if not 1 <= f.k <= min(f.source.length, f.target.length):
        return False
    residue = f.source.top - f.target.top + f.target.length - f.k
    return residue % alg.n == 0 if alg.kind == "cyclic" else residue == 0


def compose(alg, f, g):
    """g after f, for f: u -> v and g: v -> w; None encodes the zero map."""
    if f is None or g is None:
        return None
    assert f.target == g.source, "compose needs target(f) == source(g)"
    k = f.k + g.k - f.target.length
    if k <= 0:
        return None
    out = HomMap(f.source, g.target, k)
    assert is_valid_hom(alg, out)
    return out


# --- syzygies ----------------------------------------------------------------

def syzygy(alg, u):
    """Kernel of the projective cover P(top u) -> u; None iff u is projective."""
    if u is None or is_projective(alg, u):
        return None
    c = alg.c[u.top - 1]
    return Uniserial(alg.normalize(u.top - u.length), c - u.length)


def cosyzygy(alg, u):
    """Cokernel of u -> I(soc u); None iff u is injective."""
    if u is None:
        return None
    env = injective(alg, socle_vertex(alg, u))
    if env.length == u.length:
        return None
    return Uniserial(env.top, env.length - u.length)


def _summands(m):
    if m is None:
        return []
    if isinstance(m, Uniserial):
        return [m]
    return list(m)


def pdim(alg, m):
    """Projective dimension of a module or direct sum (0 for the zero module)."""
    best = 0
    for u in _summands(m):
        seen = set()
        k = 0
        w = u
        while not is_projective(alg, w):
            if w in seen:
                k = INF
                break
            seen.add(w)
            w = syzygy(alg, w)
            k += 1
        best = max(best, k)
    return best


def idim(alg, m):
    """Injective dimension, by the dual walk through injective envelopes."""
    best = 0
    for u in _summands(m):
        seen = set()
        k = 0
        w = u
        while not is_injective(alg, w):
            if w in seen:
                k = INF
                break
            seen.add(w)
            w = cosyzygy(alg, w)
            k += 1
        best = max(best, k)
    return best


def pdim_table(alg):
    """pdim of every indecomposable at once, sharing the syzygy walks."""
    memo = {}
    for u0 in indecomposables(alg):
        if u0 in memo:
            continue
        path = []
        on_path = set()
        w = u0
        while True:
            if w in memo:
                base = memo[w]
                break
            if is_projective(alg, w):
                memo[w] = 0
                base = 0
                break
            if w in on_path:
                base = INF
                break
            on_path.add(w)
            path.append(w)
            w = syzygy(alg, w)
        m = len(path)
        for j, wj in enumerate(path):
            memo[wj] = INF if base == INF else base + (m - j)
    return memo


def idim_table(alg):
    memo = {}
    for u0 in indecomposables(alg):
        if u0 in memo:
            continue
        path = []
        on_path = set()
        w = u0
        while True:
            if w in memo:
                base = memo[w]
                break
            if is_injective(alg, w):
                memo[w] = 0
                base = 0
                break
            if w in on_path:
                base = INF
                break
            on_path.add(w)
            path.append(w)
            w = cosyzygy(alg, w)
        m = len(path)
        for j, wj in enumerate(path):
            memo[wj] = INF if base == INF else base + (m - j)
    return memo


def simples(alg):
    return [Uniserial(i, 1) for i in range(1, alg.n + 1)]


def gldim(alg):
    """Global dimension: the maximum of pdim over the simple modules."""
    table = pdim_table(alg)
    return max(table[s] for s in simples(alg))


# --- dominant dimension ------------------------------------------------------

def domdim_module(alg, u):
    """Number of leading projective-injective terms of the minimal injective
    coresolution of u; INF when the coresolution stays projective-injective."""
    count = 0
    seen = set()
    w = u
    while True:
        if w is None:
            return INF
        env = injective(alg, socle_vertex(alg, w))
        if not is_projective(alg, env):
            return count
        count += 1
        if w in seen:
            return INF
        seen.add(w)
        w = None if env.length == w.length else Uniserial(env.top, env.length - w.length)


def domdim(alg):
    """min over the indecomposable projectives; INF iff selfinjective."""
    vals = [domdim_module(alg, projective(alg, i)) for i in range(1, alg.n + 1)]
    finite = [v for v in vals if v != INF]
    return min(finite) if finite else INF


def gorenstein_dim(alg):
    """(injective dimension of the left regular module, same on the right,
    their common value when both are finite else None)."""
    table = idim_table(alg)
    id_left = max(table[projective(alg, i)] for i in range(1, alg.n + 1))
    op = opposite(alg)
    op_table = idim_table(op)
    id_right = max(op_table[projective(op, i)] for i in range(1, op.n + 1))
    if id_left != INF and id_right != INF:
        assert id_left == id_right, "finite one-sided selfinjective dimensions must agree"
        return id_left, id_right, id_left
    return id_left, id_right, None


# --- ext groups --------------------------------------------------------------

def ext_dim(alg, u, v, k):
    """dim Ext^k(u, v) by dimension shifting along syzygies."""
    assert k >= 0
    if u is None or v is None:
        return 0
    if k == 0:
        return hom_dim(alg, u, v)
    w = u
    for _ in range(k - 1):
        if is_projective(alg, w):
            return 0
        w = syzygy(alg, w)
    if is_projective(alg, w):
        return 0
    e = hom_dim(alg, syzygy(alg, w), v) - hom_dim(alg, projective(alg, w.top), v) \
        + hom_dim(alg, w, v)
    assert e >= 0
    return e


def ext_sum(alg, m1, m2, k):
    """dim Ext^k between direct sums."""
    return sum(ext_dim(alg, a, b, k) for a in _summands(m1) for b in _summands(m2))
