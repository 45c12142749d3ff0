"""Enumeration of admissible sequences and batch classification sweeps."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .core import dim_str, validate
from .tilting import classify

REPORT_KEYS = (
    "kind", "c", "gldim", "domdim", "id_left", "id_right", "gdim",
    "selfinjective", "auslander", "m_auslander", "one_aus_gorenstein",
    "dtr_selfinjective", "tilting_exists", "t_c", "c_c", "tilting_cotilting",
)

CSV_COLUMNS = ("kind", "n", "c", "gldim", "domdim", "gdim",
               "selfinjective", "auslander", "one_AG", "tilting_exists")


@dataclass(frozen=True)
class SweepSpec:
    kind: str
    n: int
    max_c: int
    filters: tuple = ()
    up_to_rotation: bool = False
    up_to_difference_class: bool = False
    elementary: bool = False
    absolutely_elementary: bool = False
    row_cap: int = 0          # 0 = unlimited
    workers: int = 1

    def __post_init__(self):
        if self.kind not in ("cyclic", "linear"):
            raise ValueError("kind must be cyclic or linear")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.max_c < (2 if self.kind == "cyclic" else 1):
            raise ValueError("max_c too small for any admissible sequence")
        for f in self.filters:
            if f not in REPORT_KEYS:
                raise ValueError("unknown filter %r; choose from report keys" % f)


def generate_sequences(kind, n, max_c):
    """All admissible sequences with entries bounded by max_c, depth-first."""
    out = []

    def extend(prefix):
        if len(prefix) == n:
            if kind == "linear" or prefix[0] <= prefix[-1] + 1:
                out.append(tuple(prefix))
            return
        hi = min(max_c, prefix[-1] + 1)
        for nxt in range(2, hi + 1):
            prefix.append(nxt)
            extend(prefix)
            prefix.pop()

    if kind == "linear":
        if n == 1:
            return [(1,)]
        extend([1])
    else:
        for first in range(2, max_c + 1):
            extend([first])
    return out


def min_rotation(c):
    return min(tuple(c[i:]) + tuple(c[:i]) for i in range(len(c)))


def difference_class_rep(kind, c):
    """Subtract n from every entry as often as admissibility allows."""
    if kind != "cyclic":
        return tuple(c)
    n = len(c)
    t = (min(c) - 2) // n
    return tuple(x - t * n for x in c)


def is_elementary(c):
    return min(c) <= len(c) + 1


def is_absolutely_elementary(c):
    return min(c) == 2


def random_algebra(rng, kind, n, c_max):
    """Seeded admissible sequence; wraps violating the cyclic closing
    inequality are rejected and redrawn."""
    while True:
        if kind == "linear":
            c = [1]
        else:
            c = [rng.randint(2, c_max)]
        for _ in range(n - 1):
            c.append(rng.randint(2, min(c_max, c[-1] + 1)))
        if kind == "linear" and n == 1:
            c = [1]
        if kind == "linear" or n == 1 or c[0] <= c[-1] + 1:
            return validate(kind, c)


def sweep(spec):
    """Classify every sequence selected by the spec.

    Returns (rows, truncated); rows are ClassificationReports in sorted
    sequence order, truncated marks a hit row_cap.
    """
    seqs = generate_sequences(spec.kind, spec.n, spec.max_c)
    if spec.elementary:
        seqs = [c for c in seqs if is_elementary(c)]
    if spec.absolutely_elementary:
        seqs = [c for c in seqs if is_absolutely_elementary(c)]
    if spec.up_to_difference_class:
        seqs = sorted({difference_class_rep(spec.kind, c) for c in seqs})
    if spec.up_to_rotation and spec.kind == "cyclic":
        seqs = sorted({min_rotation(c) for c in seqs})
    seqs = sorted(set(seqs))

    def job(c):
        return classify(validate(spec.kind, list(c)))

    if spec.workers > 1:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            reports = list(pool.map(job, seqs))
    else:
        reports = [job(c) for c in seqs]

    rows = []
    truncated = False
    for rep in reports:
        if all(getattr(rep, f) for f in spec.filters):
            rows.append(rep)
            if spec.row_cap and len(rows) >= spec.row_cap:
                truncated = True
                break
    return rows, truncated


def csv_row(rep):
    def b(x):
        return "true" if x else "false"

    gdim = dim_str(rep.gdim) if rep.gdim is not None else "na"
    return (rep.kind, str(len(rep.c)), ",".join(map(str, rep.c)),
            dim_str(rep.gldim), dim_str(rep.domdim), gdim,
            b(rep.selfinjective), b(rep.auslander),
            b(rep.one_aus_gorenstein), b(rep.tilting_exists))
