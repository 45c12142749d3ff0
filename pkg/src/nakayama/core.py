"""Nakayama algebras presented by admissible sequences, and their uniserial modules.

Conventions used everywhere in this package:

* Vertices are 1..n.  Arrows go (i+1 -> i) for 1 <= i <= n-1, plus (1 -> n) in
  the cyclic case, so radical layers of projectives walk downward through the
  vertex labels.
* An admissible sequence c = (c_1, .., c_n) records c_i = dim P_i, the length
  of the indecomposable projective with top S_i.  Admissibility:
    cyclic: c_{i+1} <= c_i + 1 for all i mod n, and c_i >= 2 for all i;
    linear: c_1 = 1, c_i >= 2 for i >= 2, c_{i+1} <= c_i + 1 (hence c_i <= i).
* Every indecomposable module is uniserial, written M(i, l): top S_i,
  composition factors S_i, S_{i-1}, ..., S_{i-l+1} from top to socle.
  In the cyclic case indices wrap and l may exceed n; in the linear case
  l <= i always.  M(i, c_i) is the projective P_i.
* The zero module is represented by None; its textual form is "0".

Textual forms: algebras serialize as "cyclic:3,2,3,4,3" / "linear:1,2,2",
modules as "M(i,l)".  These round-trip through parse_algebra / parse_module.
"""

from dataclasses import dataclass
from itertools import groupby


# --- extended natural numbers ------------------------------------------------

class _Infinity:
    """Positive infinity for homological dimensions; larger than every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("nakayama-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __gt__(self, other):
        if isinstance(other, _Infinity):
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, _Infinity)):
            return True
        return NotImplemented

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "inf"


INF = _Infinity()


def is_finite(d):
    return isinstance(d, int)


def dim_str(d):
    """Render a dimension: decimal integer or 'inf'."""
    return str(d)


def dim_json(d):
    """JSON value for a dimension: int, or the string 'inf'."""
    return d if isinstance(d, int) else "inf"


def parse_dim(s):
    s = s.strip()
    return INF if s == "inf" else int(s)


# --- admissible sequences ----------------------------------------------------

KINDS = ("cyclic", "linear")


@dataclass(frozen=True)
class AdmissibleSequence:
    """A Nakayama algebra, given by its kind and admissible sequence."""

    kind: str
    c: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError("kind must be 'cyclic' or 'linear', got %r" % (self.kind,))
        c = tuple(int(x) for x in self.c)
        object.__setattr__(self, "c", c)
        n = len(c)
        if n == 0:
            raise ValueError("empty sequence")
        if self.kind == "cyclic":
            for i, ci in enumerate(c):
                if ci < 2:
                    raise ValueError("cyclic sequence needs c_i >= 2, got c_%d = %d" % (i + 1, ci))
                if c[(i + 1) % n] > ci + 1:
                    raise ValueError("c_%d = %d exceeds c_%d + 1 = %d"
                                     % ((i + 1) % n + 1, c[(i + 1) % n], i + 1, ci + 1))
        else:
            if c[0] != 1:
                raise ValueError("linear sequence needs c_1 = 1, got %d" % c[0])
            for i in range(1, n):
                if c[i] < 2:
                    raise ValueError("linear sequence needs c_i >= 2 for i >= 2, got c_%d = %d"
                                     % (i + 1, c[i]))
                if c[i] > c[i - 1] + 1:
                    raise ValueError("c_%d = %d exceeds c_%d + 1 = %d"
                                     % (i + 1, c[i], i, c[i - 1] + 1))

    @property
    def n(self):
        return len(self.c)

    def normalize(self, i):
        """Bring a vertex index into 1..n (mod n in the cyclic case)."""
        if self.kind == "cyclic":
            return (i - 1) % self.n + 1
        assert 1 <= i <= self.n, "vertex %d out of range" % i
        return i

    def c_at(self, i):
        """c_i with cyclic wrapping; linear uses the c_{n+1} := 0 convention."""
        if self.kind == "cyclic":
            return self.c[(i - 1) % self.n]
        if i == self.n + 1:
            return 0
        return self.c[i - 1]

    def __repr__(self):
        return "AdmissibleSequence(%r, %r)" % (self.kind, list(self.c))


def validate(kind, c):
    """Check admissibility and build the algebra; raises ValueError if invalid."""
    return AdmissibleSequence(kind, tuple(c))


def format_algebra(alg):
    return "%s:%s" % (alg.kind, ",".join(str(x) for x in alg.c))


def parse_algebra(text):
    kind, _, rest = text.strip().partition(":")
    if not rest:
        raise ValueError("expected 'kind:c1,c2,...', got %r" % text)
    return validate(kind, [int(x) for x in rest.split(",")])


# --- uniserial modules -------------------------------------------------------

@dataclass(frozen=True, order=True)
class Uniserial:
    """The uniserial module M(top, length)."""

    top: int
    length: int

    def __repr__(self):
        return "M(%d,%d)" % (self.top, self.length)


def valid_uniserial(alg, top, length):
    if length < 1:
        return False
    if alg.kind == "linear" and not (1 <= top <= alg.n and top - length + 1 >= 1):
        return False
    return length <= alg.c_at(top)


def make_module(alg, top, length):
    """Normalized constructor for M(top, length); rejects invalid shapes."""
    top = alg.normalize(top)
    if not valid_uniserial(alg, top, length):
        raise ValueError("no uniserial M(%d,%d) over %s" % (top, length, format_algebra(alg)))
    return Uniserial(top, length)


def socle_vertex(alg, u):
    return alg.normalize(u.top - u.length + 1)


def format_module(u):
    return "0" if u is None else "M(%d,%d)" % (u.top, u.length)


def parse_module(alg, text):
    text = text.strip()
    if text == "0":
        return None
    if not (text.startswith("M(") and text.endswith(")")):
        raise ValueError("expected 'M(i,l)' or '0', got %r" % text)
    i, l = (int(x) for x in text[2:-1].split(","))
    return make_module(alg, i, l)


def indecomposables(alg):
    """All indecomposable modules: M(i, l) for 1 <= l <= c_i.  Count = sum(c)."""
    out = []
    for i in range(1, alg.n + 1):
        for l in range(1, alg.c[i - 1] + 1):
            out.append(Uniserial(i, l))
    return out


def projective(alg, i):
    i = alg.normalize(i)
    return Uniserial(i, alg.c[i - 1])


def is_projective(alg, u):
    return u.length == alg.c[u.top - 1]


def injective(alg, j):
    """Injective envelope of S_j: the longest uniserial with socle S_j."""
    j = alg.normalize(j)
    top = max(alg.c)
    if alg.kind == "linear":
        top = min(top, alg.n - j + 1)
    # valid lengths form an interval, so the first hit from above is maximal
    for l in range(top, 0, -1):
        if l <= alg.c_at(alg.normalize(j + l - 1)):
            return Uniserial(alg.normalize(j + l - 1), l)
    raise AssertionError("no injective envelope for S_%d" % j)


def is_injective(alg, u):
    return injective(alg, socle_vertex(alg, u)).length == u.length


def tau(alg, u):
    """Auslander-Reiten translate: M(i,l) -> M(i-1,l); zero for projectives."""
    if is_projective(alg, u):
        return None
    return Uniserial(alg.normalize(u.top - 1), u.length)


def tau_inv(alg, u):
    """Inverse translate: M(i,l) -> M(i+1,l); zero for injectives."""
    if is_injective(alg, u):
        return None
    return Uniserial(alg.normalize(u.top + 1), u.length)


def opposite(alg, _check=True):
    """The opposite algebra, relabeled so arrows again run (i+1 -> i).

    The projective of the opposite at the new label i* has the length of the
    injective envelope I(S_i) here, where i* = n+1-i (linear) or i* = 1-i mod n
    (cyclic).  Applying the map twice returns the original sequence.
    """
    n = alg.n
    cop = [0] * n
    for i in range(1, n + 1):
        istar = (n + 1 - i) if alg.kind == "linear" else alg.normalize(1 - i)
        cop[istar - 1] = injective(alg, i).length
    out = validate(alg.kind, cop)
    if _check:
        assert opposite(out, _check=False) == alg
        assert sum(out.c) == sum(alg.c)
    return out


# --- direct sums -------------------------------------------------------------

@dataclass(frozen=True)
class ModuleSum:
    """A finite multiset of uniserials, kept sorted for deterministic output."""

    summands: tuple

    def __post_init__(self):
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    @classmethod
    def of(cls, items):
        return cls(tuple(items))

    def union(self, other):
        return ModuleSum(self.summands + other.summands)

    def is_basic(self):
        return len(set(self.summands)) == len(self.summands)

    def distinct(self):
        return [u for u, _ in groupby(self.summands)]

    def __iter__(self):
        return iter(self.summands)

    def __len__(self):
        return len(self.summands)

    def __repr__(self):
        return " + ".join(format_module(u) for u in self.summands) or "0"


def format_module_sum(m):
    return repr(m)


def parse_module_sum(alg, text):
    text = text.strip()
    if text == "0":
        return ModuleSum(())
    return ModuleSum.of(parse_module(alg, part) for part in text.split("+"))
