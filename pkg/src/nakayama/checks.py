"""Bulk property suites over algebra grids and random samples.

Each suite runs a deterministic family of checks and reports per-property
counts plus the first counterexample, so a failure pinpoints the algebra and
module that broke the claim.  The same suites back `nakayama check` and the
acceptance tests.
"""

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .core import (
    INF,
    AdmissibleSequence,
    ModuleSum,
    Uniserial,
    format_algebra,
    format_module,
    indecomposables,
    injective,
    is_injective,
    is_projective,
    opposite,
    projective,
    socle_vertex,
)
from .endo import (
    drop_check,
    end_algebra,
    gldim_over,
    hom_module,
    module_endomorphisms,
    mueller_domdim,
    pd_over,
    projdim_key_check,
)
from .homology import (
    cosyzygy,
    domdim,
    ext_dim,
    gldim,
    hom_dim,
    idim,
    pdim,
    simples,
    syzygy,
)
from .oracle import oracle_ext1_dim, oracle_hom_dim
from .sweeps import generate_sequences, random_algebra
from .tilting import (
    basic_gen_cogen,
    canonical_cotilting,
    canonical_tilting,
    classify,
    igusa_todorov,
    in_tilting_subcat,
    projective_injectives,
    split_projective_vertices,
    syzygy_correspondence,
    tilting_criterion,
    verify_cotilting,
    verify_tilting,
)


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    failed: int = 0
    first_counterexample: str = ""

    def record(self, ok, witness):
        self.checked += 1
        if not ok:
            self.failed += 1
            if not self.first_counterexample:
                self.first_counterexample = witness

    @property
    def ok(self):
        return self.failed == 0

    def line(self):
        if self.ok:
            return "%s: ok (%d checked)" % (self.name, self.checked)
        return "%s: FAIL (%d of %d) first counterexample: %s" % (
            self.name, self.failed, self.checked, self.first_counterexample)


@dataclass
class SuiteReport:
    suite: str
    properties: list = field(default_factory=list)

    @property
    def ok(self):
        return all(p.ok for p in self.properties)

    def lines(self):
        return [p.line() for p in self.properties]


def grid_algebras(n_max, c_max):
    out = []
    for kind in ("cyclic", "linear"):
        for n in range(1, n_max + 1):
            for c in generate_sequences(kind, n, c_max):
                out.append(AdmissibleSequence(kind, c))
    return out


def random_algebras(count, n_max, c_max, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        kind = rng.choice(("cyclic", "linear"))
        n = rng.randint(1, n_max)
        out.append(random_algebra(rng, kind, n, c_max))
    return out


def _tilting_flags(alg):
    crit = tilting_criterion(alg)
    dd2 = domdim(alg) >= 2
    _, _, bij = syzygy_correspondence(alg)
    t = canonical_tilting(alg)
    verified = t is not None and verify_tilting(alg, t)
    return crit, dd2, bij, verified, t


def _map_algebras(algebras, job, workers):
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(job, algebras))
    return [job(alg) for alg in algebras]


def suite_tilting(samples=10000, seed=42, n_max=8, c_max=12,
                  grid_n_max=5, grid_c_max=7, workers=1, **_):
    props = {
        "criterion equals domdim >= 2": PropertyResult("criterion equals domdim >= 2"),
        "criterion equals syzygy bijection": PropertyResult("criterion equals syzygy bijection"),
        "criterion equals verified tilting": PropertyResult("criterion equals verified tilting"),
        "tilting summands lie in the subcategory": PropertyResult("tilting summands lie in the subcategory"),
        "cotilting verifies when tilting exists": PropertyResult("cotilting verifies when tilting exists"),
        "no small tilting module when criterion fails": PropertyResult("no small tilting module when criterion fails"),
    }
    algebras = grid_algebras(grid_n_max, grid_c_max)
    algebras += random_algebras(samples, n_max, c_max, seed)
    flags = _map_algebras(algebras, _tilting_flags, workers)
    for alg, (crit, dd2, bij, verified, t) in zip(algebras, flags):
        w = format_algebra(alg)
        props["criterion equals domdim >= 2"].record(crit == dd2, w)
        props["criterion equals syzygy bijection"].record(crit == bij, w)
        props["criterion equals verified tilting"].record(crit == verified, w)
        if t is not None:
            props["tilting summands lie in the subcategory"].record(
                all(in_tilting_subcat(alg, u) for u in t), w)
            c = canonical_cotilting(alg)
            props["cotilting verifies when tilting exists"].record(
                verify_cotilting(alg, c), w)
    # exhaustive non-existence on a small slice: when the criterion fails,
    # no n-subset of pd<=1 subcategory members is a tilting module
    for alg in grid_algebras(3, 5):
        if tilting_criterion(alg):
            continue
        cands = [u for u in indecomposables(alg)
                 if in_tilting_subcat(alg, u) and pdim(alg, u) <= 1]
        found = any(
            verify_tilting(alg, ModuleSum.of(combo))
            for combo in combinations(cands, alg.n))
        props["no small tilting module when criterion fails"].record(
            not found, format_algebra(alg))
    return SuiteReport("tilting", list(props.values()))


def _oracle_counts(alg):
    mods = indecomposables(alg)
    hom_bad = ext_bad = 0
    witness = ""
    for u in mods:
        for v in mods:
            if hom_dim(alg, u, v) != oracle_hom_dim(alg, u, v):
                hom_bad += 1
                witness = witness or "%s hom %s -> %s" % (
                    format_algebra(alg), format_module(u), format_module(v))
            if ext_dim(alg, u, v, 1) != oracle_ext1_dim(alg, u, v):
                ext_bad += 1
                witness = witness or "%s ext1 %s -> %s" % (
                    format_algebra(alg), format_module(u), format_module(v))
    return len(mods) ** 2, hom_bad, ext_bad, witness


def suite_oracle(n_max=4, c_max=6, workers=1, **_):
    hom_prop = PropertyResult("hom dimension matches matrix oracle")
    ext_prop = PropertyResult("ext^1 dimension matches matrix oracle")
    algebras = grid_algebras(n_max, c_max)
    for pairs, hom_bad, ext_bad, witness in _map_algebras(
            algebras, _oracle_counts, workers):
        hom_prop.checked += pairs
        hom_prop.failed += hom_bad
        ext_prop.checked += pairs
        ext_prop.failed += ext_bad
        if witness and not hom_prop.first_counterexample:
            hom_prop.first_counterexample = witness
        if witness and not ext_prop.first_counterexample:
            ext_prop.first_counterexample = witness
    return SuiteReport("oracle", [hom_prop, ext_prop])


def _in_gen_cogen_of_projective_injectives(alg, u):
    """Membership in Gen intersect Cogen of the projective-injectives,
    tested by exhibiting an explicit quotient and submodule witness."""
    qs = projective_injectives(alg)
    gen = any(q.top == u.top and q.length >= u.length for q in qs)
    cogen = any(socle_vertex(alg, q) == socle_vertex(alg, u)
                and q.length >= u.length for q in qs)
    return gen and cogen


def suite_structural(n_max=5, c_max=7, workers=1, **_):
    names = [
        "pd and id at most gldim minus one inside the subcategory",
        "ext^1 from pd-one modules into the subcategory vanishes",
        "subcategory membership matches quotient/submodule witnesses",
        "projectives in the subcategory are injective and dually",
        "cover and envelope of subcategory members stay in it",
        "dominant dimension is opposite-symmetric",
        "finite gldim forces Gorenstein dim equal and attained",
        "projective-injective count plus pd-one members is at most n",
        "tilting-cotilting equals 1-Auslander-Gorenstein",
        "syzygy and cosyzygy are uniserial or zero",
        "ext vanishes beyond the projective dimension",
    ]
    props = {n: PropertyResult(n) for n in names}

    def run(alg):
        out = []
        w = format_algebra(alg)
        gl = gldim(alg)
        mods = indecomposables(alg)
        members = [u for u in mods if in_tilting_subcat(alg, u)]
        if gl != INF and gl >= 1:
            # the bound is empty for semisimple algebras, where every module
            # has pd 0 and the subcategory is everything
            ok = all(pdim(alg, u) <= gl - 1 and idim(alg, u) <= gl - 1
                     for u in members)
            out.append((names[0], ok, w))
        pd_one = [y for y in mods if pdim(alg, y) == 1]
        ok = all(ext_dim(alg, y, x, 1) == 0 for y in pd_one for x in members)
        out.append((names[1], ok, w))
        ok = all(in_tilting_subcat(alg, u)
                 == _in_gen_cogen_of_projective_injectives(alg, u)
                 for u in mods)
        out.append((names[2], ok, w))
        ok = all(is_injective(alg, u) for u in members if is_projective(alg, u))
        ok = ok and all(
            is_projective(alg, u) for u in members if is_injective(alg, u))
        out.append((names[3], ok, w))
        ok = all(
            in_tilting_subcat(alg, projective(alg, u.top))
            and in_tilting_subcat(alg, injective(alg, socle_vertex(alg, u)))
            for u in members)
        out.append((names[4], ok, w))
        out.append((names[5], domdim(alg) == domdim(opposite(alg)), w))
        if gl != INF:
            rep = classify(alg)
            ids = [idim(alg, projective(alg, i)) for i in range(1, alg.n + 1)]
            out.append((names[6], rep.gdim == gl and max(ids) == gl, w))
        q, _ = split_projective_vertices(alg)
        x, _, _ = syzygy_correspondence(alg)
        out.append((names[7], len(q) + len(x) <= alg.n, w))
        rep = classify(alg)
        out.append((names[8], rep.tilting_cotilting == rep.one_aus_gorenstein, w))
        ok = all(
            (syzygy(alg, u) is None or isinstance(syzygy(alg, u), Uniserial))
            and (cosyzygy(alg, u) is None
                 or isinstance(cosyzygy(alg, u), Uniserial))
            for u in mods)
        out.append((names[9], ok, w))
        ok = True
        for u in mods:
            p = pdim(alg, u)
            if p == INF:
                continue
            ok = ok and all(
                ext_dim(alg, u, v, p + d) == 0 for v in simples(alg)
                for d in (1, 2))
        out.append((names[10], ok, w))
        return out

    algebras = [a for a in grid_algebras(n_max, c_max) if tilting_criterion(a)]
    for rows in _map_algebras(algebras, run, workers):
        for name, ok, w in rows:
            props[name].record(ok, w)
    return SuiteReport("structural", list(props.values()))


def suite_drop(samples=200, seed=42, cap=30, n_max=6, c_max=8, workers=1, **_):
    holds = PropertyResult("gldim drop equivalence")
    bounds = PropertyResult("endo gldim within one of gldim")
    algebras = [a for a in grid_algebras(4, 5)
                if gldim(a) != INF and tilting_criterion(a)]
    rng = random.Random(seed)
    seen = {(a.kind, a.c) for a in algebras}
    target = len(algebras) + samples
    tries = 0
    while len(algebras) < target and tries < samples * 200:
        tries += 1
        kind = rng.choice(("cyclic", "linear"))
        alg = random_algebra(rng, kind, rng.randint(1, n_max), c_max)
        if (alg.kind, alg.c) in seen:
            continue
        if gldim(alg) == INF or not tilting_criterion(alg):
            continue
        seen.add((alg.kind, alg.c))
        algebras.append(alg)

    def run(alg):
        rec = drop_check(alg, cap)
        return format_algebra(alg), rec

    for w, rec in _map_algebras(algebras, run, workers):
        holds.record(rec["holds"] is True, w)
        if rec["holds"] is not None:
            bounds.record(
                rec["gldim"] - 1 <= rec["gldim_endo"] <= rec["gldim"], w)
    return SuiteReport("drop", [holds, bounds])


def suite_endo(seed=42, cap=30, workers=1, **_):
    dims = PropertyResult("small endomorphism algebra dimensions")
    hered = PropertyResult("hereditary generator-cogenerators give value 2")
    antitone = PropertyResult("mueller value antitone in the summand set")
    br = PropertyResult("column endomorphisms match base-side dimensions")
    key = PropertyResult("hom transport drops projective dimension by one")

    a2 = AdmissibleSequence("linear", (1, 2))
    x = basic_gen_cogen(a2)
    a = end_algebra(a2, x)
    dims.record(a.dim == 5, "linear:1,2")
    dims.record(gldim_over(a, cap) == 2, "linear:1,2")
    dims.record(mueller_domdim(a2, x) == 2, "linear:1,2")

    rng = random.Random(seed)
    for n in (2, 3, 4):
        alg = AdmissibleSequence("linear", tuple(range(1, n + 1)))
        base = basic_gen_cogen(alg)
        others = sorted(set(indecomposables(alg)) - set(base.summands))
        picks = [[]]
        picks += [rng.sample(others, rng.randint(1, len(others)))
                  for _ in range(7) if others]
        for extra in picks:
            xs = ModuleSum.of(sorted(set(base.summands) | set(extra)))
            hered.record(mueller_domdim(alg, xs) == 2,
                         "%s + %d extras" % (format_algebra(alg), len(extra)))

    for alg in (AdmissibleSequence("cyclic", (3, 2, 3, 4, 3)),
                AdmissibleSequence("cyclic", (2, 2, 3)),
                AdmissibleSequence("cyclic", (3, 3, 3))):
        base = basic_gen_cogen(alg)
        others = sorted(set(indecomposables(alg)) - set(base.summands))
        small = base
        for _ in range(6):
            extra = rng.sample(others, rng.randint(0, len(others))) if others else []
            big = ModuleSum.of(sorted(set(small.summands) | set(extra)))
            antitone.record(
                mueller_domdim(alg, small) >= mueller_domdim(alg, big),
                format_algebra(alg))

    checked_pairs = 0
    for alg in grid_algebras(4, 6):
        if not tilting_criterion(alg) or gldim(alg) == INF:
            continue
        t = canonical_tilting(alg)
        b = end_algebra(alg, t)
        q = projective_injectives(alg)
        want = sum(hom_dim(alg, u, v) for u in q for v in q)
        br.record(module_endomorphisms(b, hom_module(b, q)) == want,
                  format_algebra(alg))
        for i in range(1, alg.n + 1):
            if not is_injective(alg, projective(alg, i)):
                continue
            for l in range(1, alg.c[i - 1] + 1):
                m = Uniserial(i, l)
                p = pdim(alg, m)
                if p == INF or p < 1 or checked_pairs >= 120:
                    continue
                key.record(projdim_key_check(alg, m, cap) is True,
                           "%s %s" % (format_algebra(alg), format_module(m)))
                checked_pairs += 1
    return SuiteReport("endo", [dims, hered, antitone, br, key])


def suite_it(samples=1000, seed=42, n_max=6, c_max=8, workers=1, **_):
    match = PropertyResult("both functions equal pd on finite-pd sums")
    base = PropertyResult("selfinjective simples give (0, 0)")
    c22 = AdmissibleSequence("cyclic", (2, 2))
    base.record(
        igusa_todorov(c22, ModuleSum.of(simples(c22))) == (0, 0), "cyclic:2,2")
    rng = random.Random(seed)
    done = 0
    while done < samples:
        kind = rng.choice(("cyclic", "linear"))
        alg = random_algebra(rng, kind, rng.randint(1, n_max), c_max)
        finite = [u for u in indecomposables(alg) if pdim(alg, u) != INF]
        if not finite:
            continue
        picks = rng.sample(finite, rng.randint(1, min(len(finite), alg.n + 2)))
        m = ModuleSum.of(sorted(set(picks)))
        p = max(pdim(alg, u) for u in m)
        match.record(igusa_todorov(alg, m) == (p, p),
                     "%s %s" % (format_algebra(alg), m))
        done += 1
    return SuiteReport("it", [match, base])


SUITES = {
    "tilting": suite_tilting,
    "oracle": suite_oracle,
    "structural": suite_structural,
    "drop": suite_drop,
    "endo": suite_endo,
    "it": suite_it,
}


def run_suite(name, **params):
    if name not in SUITES:
        raise ValueError("unknown suite %r; available: %s" % (
            name, ", ".join(sorted(SUITES))))
    return SUITES[name](**params)
