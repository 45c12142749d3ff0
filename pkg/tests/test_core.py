import pytest

from nakayama.core import (
    INF,
    AdmissibleSequence,
    ModuleSum,
    Uniserial,
    dim_json,
    format_algebra,
    format_module,
    indecomposables,
    injective,
    is_injective,
    is_projective,
    make_module,
    opposite,
    parse_algebra,
    parse_dim,
    parse_module,
    parse_module_sum,
    projective,
    socle_vertex,
    tau,
    tau_inv,
    validate,
)

SHARP = validate("cyclic", [3, 2, 3, 4, 3])
RAD2 = validate("linear", [1, 2, 2, 2, 2])


# --- independent oracles -----------------------------------------------------

def path_count_dimension(alg):
    """Count nonzero paths in the quiver with relations, never reading sum(c).

    A path of length k starting at vertex i is zero iff some tail of it is a
    defining relation, i.e. iff k - j >= c_{i-j} for some 0 <= j <= k.
    """
    total = 0
    for i in range(1, alg.n + 1):
        k = 0
        while True:
            if alg.kind == "linear" and i - k < 1:
                break
            if any(k - j >= alg.c[alg.normalize(i - j) - 1] for j in range(k + 1)):
                break
            total += 1
            k += 1
    return total


def longest_socle_search(alg, j):
    """Injective envelope by brute force over every uniserial with socle j."""
    best = None
    for u in indecomposables(alg):
        if socle_vertex(alg, u) == j:
            if best is None or u.length > best.length:
                best = u
    return best


# --- validate ----------------------------------------------------------------

def test_validate_accepts_and_dimension_matches_path_count():
    for alg in (SHARP, RAD2, validate("cyclic", [2, 2]), validate("linear", [1]),
                validate("cyclic", [4]), validate("linear", [1, 2, 3, 3])):
        assert path_count_dimension(alg) == sum(alg.c)
    assert path_count_dimension(SHARP) == 15


def test_validate_rejects():
    with pytest.raises(ValueError):
        validate("cyclic", [1, 2])
    with pytest.raises(ValueError):
        validate("linear", [1, 3])
    with pytest.raises(ValueError):
        validate("linear", [2, 2])
    with pytest.raises(ValueError):
        validate("cyclic", [2, 4])
    with pytest.raises(ValueError):
        validate("cyclic", [])
    with pytest.raises(ValueError):
        validate("circular", [2, 2])
    # wrap condition c_1 <= c_n + 1
    with pytest.raises(ValueError):
        validate("cyclic", [5, 4, 3])
    # linear forces c_i <= i
    with pytest.raises(ValueError):
        validate("linear", [1, 2, 4])


def test_n_equals_one():
    k = validate("linear", [1])
    assert indecomposables(k) == [Uniserial(1, 1)]
    truncated = validate("cyclic", [4])
    assert len(indecomposables(truncated)) == 4
    assert is_injective(truncated, Uniserial(1, 4))


# --- indecomposables, projectives, injectives --------------------------------

def test_indecomposables_count_and_distinct():
    for alg in (SHARP, RAD2, validate("cyclic", [2, 3, 3])):
        mods = indecomposables(alg)
        assert len(mods) == sum(alg.c)
        assert len(set(mods)) == len(mods)
        for u in mods:
            assert 1 <= u.length <= alg.c[u.top - 1]


def test_projective_and_socle():
    assert projective(SHARP, 2) == Uniserial(2, 2)
    assert projective(SHARP, 0) == Uniserial(5, 3)  # index wraps
    # soc P_i = S_{i-c_i+1}
    for alg in (SHARP, RAD2):
        for i in range(1, alg.n + 1):
            assert socle_vertex(alg, projective(alg, i)) == alg.normalize(i - alg.c[i - 1] + 1)


def test_injective_matches_exhaustive_search():
    for alg in (SHARP, RAD2, validate("cyclic", [2, 2]), validate("cyclic", [3, 4, 4]),
                validate("linear", [1, 2, 3, 4]), validate("cyclic", [5])):
        for j in range(1, alg.n + 1):
            env = injective(alg, j)
            assert env == longest_socle_search(alg, j)
            assert socle_vertex(alg, env) == j


def test_injective_frozen_values():
    assert injective(SHARP, 1) == Uniserial(4, 4)  # = P_4
    assert injective(SHARP, 5) == Uniserial(1, 2)
    assert injective(RAD2, 5) == Uniserial(5, 1)
    assert injective(RAD2, 1) == Uniserial(2, 2)


def test_projective_injective_flags():
    assert is_projective(SHARP, Uniserial(4, 4))
    assert not is_projective(SHARP, Uniserial(4, 2))
    assert is_injective(SHARP, Uniserial(4, 4))
    assert is_injective(SHARP, Uniserial(1, 3))  # P_1 is injective here
    assert not is_injective(SHARP, Uniserial(2, 2))


def test_lengths_beyond_n_in_cyclic():
    alg = validate("cyclic", [7, 7, 7])  # selfinjective with c > n
    p = projective(alg, 1)
    assert p.length == 7
    assert socle_vertex(alg, p) == alg.normalize(1 - 7 + 1)
    assert is_injective(alg, p)


# --- tau and tau_inv ---------------------------------------------------------

def test_tau_basic():
    assert tau(SHARP, Uniserial(4, 2)) == Uniserial(3, 2)
    assert tau(SHARP, Uniserial(1, 1)) == Uniserial(5, 1)
    for i in range(1, 6):
        assert tau(SHARP, projective(SHARP, i)) is None
        assert tau_inv(SHARP, injective(SHARP, i)) is None


def test_tau_round_trip():
    for alg in (SHARP, RAD2):
        for u in indecomposables(alg):
            t = tau(alg, u)
            if t is not None:
                assert tau_inv(alg, t) == u
            t = tau_inv(alg, u)
            if t is not None:
                assert tau(alg, t) == u


# --- opposite ----------------------------------------------------------------

def test_opposite_values_and_involution():
    assert opposite(SHARP).c == (2, 3, 3, 3, 4)
    assert opposite(RAD2).c == (1, 2, 2, 2, 2)
    grid = [validate("cyclic", c) for c in ([2, 2], [2, 2, 3], [3, 4, 4], [3, 2, 2, 3, 3])]
    grid += [validate("linear", c) for c in ([1], [1, 2], [1, 2, 3], [1, 2, 2, 3])]
    for alg in grid:
        op = opposite(alg)
        assert opposite(op) == alg
        assert sum(op.c) == sum(alg.c)
        assert sorted(op.c) == sorted(injective(alg, i).length for i in range(1, alg.n + 1))


# --- textual forms -----------------------------------------------------------

def test_algebra_round_trip():
    for text in ("cyclic:3,2,3,4,3", "linear:1,2,2,2,2", "cyclic:2,2", "linear:1"):
        assert format_algebra(parse_algebra(text)) == text
    with pytest.raises(ValueError):
        parse_algebra("3,2,3")
    with pytest.raises(ValueError):
        parse_algebra("cyclic:1,2")


def test_module_round_trip():
    assert format_module(parse_module(SHARP, "M(4,2)")) == "M(4,2)"
    assert parse_module(SHARP, "0") is None
    assert format_module(None) == "0"
    with pytest.raises(ValueError):
        parse_module(SHARP, "M(2,3)")  # longer than P_2
    with pytest.raises(ValueError):
        parse_module(RAD2, "M(1,2)")
    s = parse_module_sum(SHARP, "M(4,2) + M(1,3) + M(4,2)")
    assert format_module(make_module(SHARP, 6, 2)) == "M(1,2)"  # top wraps
    assert repr(s) == "M(1,3) + M(4,2) + M(4,2)"
    assert not s.is_basic()


def test_module_sum_ops():
    a = ModuleSum.of([Uniserial(4, 2), Uniserial(1, 3)])
    b = ModuleSum.of([Uniserial(4, 1)])
    assert len(a.union(b)) == 3
    assert a.is_basic()
    assert a.union(a).distinct() == [Uniserial(1, 3), Uniserial(4, 2)]
    assert parse_module_sum(SHARP, "0") == ModuleSum(())


# --- extended naturals -------------------------------------------------------

def test_infinity_ordering():
    assert INF > 10 ** 9
    assert not (INF > INF)
    assert INF >= INF and INF == INF
    assert 5 < INF and 5 <= INF and not (INF < 5) and INF != 5
    assert max(3, INF) == INF
    assert INF + 1 == INF and 1 + INF == INF
    assert dim_json(INF) == "inf" and dim_json(4) == 4
    assert parse_dim("inf") == INF and parse_dim("7") == 7
