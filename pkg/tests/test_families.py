import pytest
from hypothesis import given
from hypothesis import strategies as st

from leglab import front as fr
from leglab.errors import (
    OddHorizontalEntry,
    SpecSyntaxError,
    ZeroParameter,
    ZeroPolynomial,
)
from leglab.families import (
    FlypedRational,
    Orderedness,
    Rational,
    Twist,
    build_front,
    build_front_labeled,
    canonical_potential,
    default_grid,
    gamma_minus,
    gamma_plus,
    ljk_equivalence_classes,
    orderedness,
    parse_spec,
    rational_specs,
    render_spec,
    twist_specs,
)
from leglab.laurent import is_palindromic_up_to_shift, mul_monomial, parse, to_vector


def test_parse_spec():
    assert parse_spec("rat(4)") == Rational((2,), ())
    assert parse_spec("rat(2,1,4,2,2)") == Rational((1, 2, 1), (1, 2))
    assert parse_spec("rat(2, 1, 4^1)") == FlypedRational((1, 2), (1,), (1,))
    assert parse_spec("rat(2,1,2^1,1,2)") == FlypedRational((1, 1, 1), (1, 1), (1, 0))
    assert parse_spec("twist(2,3)") == Twist(2, 3)
    assert parse_spec(" twist( 10 , 1 ) ") == Twist(10, 1)


@pytest.mark.parametrize(
    "text,err",
    [
        ("rat(3,1,2)", OddHorizontalEntry),
        ("rat(2,1,6,3,3)", OddHorizontalEntry),
        ("rat(0)", ZeroParameter),
        ("rat(2,0,2)", ZeroParameter),
        ("twist(0,1)", ZeroParameter),
        ("twist(2,-1)", SpecSyntaxError),
        ("rat(2,1)", SpecSyntaxError),  # even entry count
        ("rat()", SpecSyntaxError),
        ("rat(4^1)", SpecSyntaxError),  # leading entry cannot be flyped
        ("rat(2,1^1,2)", SpecSyntaxError),  # vertical entries take no exponent
        ("twist(1)", SpecSyntaxError),
        ("twist(1,2,3)", SpecSyntaxError),
        ("blargh(1,2)", SpecSyntaxError),
        ("rat(2,1,2) extra", SpecSyntaxError),
    ],
)
def test_parse_spec_rejects(text, err):
    with pytest.raises(err):
        parse_spec(text)


def test_render_spec_round_trip():
    for text in ["rat(4)", "rat(2,1,4,2,2)", "rat(2,1,4^1)", "twist(3,2)"]:
        spec = parse_spec(text)
        assert parse_spec(render_spec(spec)) == spec
    assert render_spec(Rational((1, 2, 1), (1, 2))) == "rat(2,1,4,2,2)"
    assert render_spec(FlypedRational((1, 2), (1,), (1,))) == "rat(2,1,4^1)"


def test_rational_census():
    # Two clasped eyes with 2w_0 crossings between them; the recursion
    # adds k_i vertical crossings (one right cusp each) and 2w_i
    # horizontal crossings per level, so #RC = sum(k) + 2.
    d = build_front(parse_spec("rat(4)"))
    assert fr.validate(d) == []
    assert fr.components(d).num_components == 2
    assert len(d.crossing_events()) == 4
    assert len(d.right_cusp_events()) == 2

    d, labels = build_front_labeled(parse_spec("rat(2,1,4,2,2)"))
    assert fr.validate(d) == []
    assert fr.components(d).num_components == 2
    assert len(d.crossing_events()) == 8 + 3
    assert len(d.right_cusp_events()) == 3 + 2
    names = sorted(labels.values())
    assert names == sorted(
        [f"h_{m}" for m in range(1, 9)]
        + [f"v_{m}" for m in range(1, 4)]
        + [f"c_{m}" for m in range(1, 6)]
    )
    # h_1 is the rightmost horizontal crossing, h_8 the leftmost
    h_events = sorted(t for t, name in labels.items() if name.startswith("h"))
    assert labels[h_events[0]] == "h_8"
    assert labels[h_events[-1]] == "h_1"


def test_twist_census():
    for j, k in [(1, 1), (2, 3), (3, 2), (4, 1)]:
        d, labels = build_front_labeled(Twist(j, k))
        assert fr.validate(d) == []
        lab = fr.components(d)
        assert lab.num_components == 2
        intra = inter = 0
        for t in d.crossing_events():
            ev = d.events[t]
            a = lab.branch_component[d.branch_at(t, ev.slot)]
            b = lab.branch_component[d.branch_at(t, ev.slot + 1)]
            if a == b:
                intra += 1
            else:
                inter += 1
        assert intra == j + k
        assert inter == 4
        assert len(d.left_cusp_events()) == j + k + 2
        assert len(d.right_cusp_events()) == j + k + 2
        # each component has as many branches as cusps
        for c, selfs in [(1, j), (0, k)]:
            members, edges = fr.branches(d, c)
            assert len(members) == len(edges)
        x_names = sorted(name for name in labels.values() if name.startswith("x"))
        assert x_names == ["x_1", "x_2", "x_3", "x_4"]
        s_names = {name for name in labels.values() if name.startswith("s")}
        assert s_names == {f"s_{m}" for m in range(1, j + k + 1)}


def test_twist_label_components():
    # s_1..s_k sit on the right (lower) component, the rest on the left;
    # x labels run top to bottom through the clasps.
    j, k = 3, 2
    d, labels = build_front_labeled(Twist(j, k))
    lab = fr.components(d)
    for t, name in labels.items():
        if not name.startswith("s"):
            continue
        ev = d.events[t]
        comp = lab.branch_component[d.branch_at(t, ev.slot)]
        assert comp == (0 if int(name[2:]) <= k else 1)
    x_events = {name: t for t, name in labels.items() if name.startswith("x")}
    assert x_events["x_1"] < x_events["x_2"] < x_events["x_3"] < x_events["x_4"]
    c_names = {name for name in labels.values() if name.startswith("c")}
    assert c_names == {f"c_{m}" for m in range(1, j + k + 3)}


def test_gamma_minus_closed_forms():
    assert gamma_minus(parse_spec("rat(4)")) == parse("2*l^0")
    assert gamma_minus(parse_spec("rat(2,1,4)")) == parse("2*l^0 + 1*l^-1")
    assert gamma_minus(parse_spec("rat(2,1,2)")) == parse("1*l^0 + 1*l^-1")
    assert gamma_minus(parse_spec("rat(2,1,4,2,2)")) == parse("1*l^0 + 2*l^-2 + 1*l^-3")
    # flyping reverses the walk direction at the flyped level
    assert gamma_minus(parse_spec("rat(2,1,4^1)")) == parse("1*l^0 + 2*l^-1")
    # direction flips can make levels collide; coefficients then add
    assert gamma_minus(parse_spec("rat(2,1,2^1,1,2)")) == parse("2*l^0 + 1*l^-1")
    for spec in twist_specs(5):
        expected = parse(f"1*l^0 + 1*l^-{abs(spec.j - spec.k)}") if spec.j != spec.k else parse("2*l^0")
        assert gamma_minus(spec) == expected


def test_gamma_plus_is_shift():
    for spec in default_grid():
        gm = gamma_minus(spec)
        assert gamma_plus(gm) == mul_monomial(gm, 1)
    with pytest.raises(ZeroPolynomial):
        gamma_plus(parse("0*l^0"))


def test_palindromic_iff_vector_palindromic():
    # The negative polynomial is palindromic (up to shift) exactly when
    # the defining vector reads the same in both directions.
    for n in range(0, 3):
        for spec in rational_specs(n, 3, min_n=n):
            vector = []
            for i, wi in enumerate(spec.w):
                vector.append(2 * wi)
                if i < len(spec.k):
                    vector.append(spec.k[i])
            assert is_palindromic_up_to_shift(gamma_minus(spec)) == (
                vector == vector[::-1]
            ), spec


def test_orderedness():
    assert orderedness(parse_spec("rat(2,1,4)")) is Orderedness.ORDERED
    assert orderedness(parse_spec("rat(2,1,2)")) is Orderedness.INCONCLUSIVE
    assert orderedness(Twist(2, 2)) is Orderedness.INCONCLUSIVE
    assert orderedness(Twist(1, 4)) is Orderedness.INCONCLUSIVE


def test_canonical_degrees_rational():
    # Right-to-left horizontal degrees for rat(2,1,4,2,2); the exponents
    # walk 0, -2, -3 and each level's crossings alternate in sign
    # starting positive from the right.
    spec = parse_spec("rat(2,1,4,2,2)")
    d, labels = build_front_labeled(spec)
    pot = canonical_potential(spec)
    degrees = fr.grading(d, pot)
    by_name = {name: degrees[t] for t, name in labels.items() if name.startswith("h")}
    assert [by_name[f"h_{m}"] for m in range(1, 9)] == [3, -3, 2, -2, 2, -2, 0, 0]
    # every vertical crossing is a degree-0 self-crossing
    for t, name in labels.items():
        if name.startswith("v"):
            assert degrees[t] == 0


def test_canonical_degrees_twist():
    for j, k in [(3, 2), (2, 3), (4, 4), (1, 3)]:
        spec = Twist(j, k)
        d, labels = build_front_labeled(spec)
        degrees = fr.grading(d, canonical_potential(spec))
        by_name = {name: degrees[t] for t, name in labels.items() if name.startswith("x")}
        assert by_name["x_1"] == 0
        assert by_name["x_2"] == 0
        assert by_name["x_3"] == k - j
        assert by_name["x_4"] == j - k
        for t, name in labels.items():
            if name.startswith("s"):
                assert degrees[t] == 0


def test_classical_invariants_grid():
    extras = [parse_spec("rat(2,1,4^1)"), parse_spec("rat(2,1,2^1,1,2)"),
              parse_spec("rat(2,1,4^1,2,2)")]
    for spec in default_grid() + extras:
        d = build_front(spec)
        for c in (0, 1):
            assert fr.classical_invariants(d, c) == (-1, 0), spec


def test_flype_with_even_exponents_is_plain():
    assert gamma_minus(FlypedRational((1, 2), (1,), (2,))) == gamma_minus(
        Rational((1, 2), (1,))
    )
    assert gamma_minus(FlypedRational((1, 1, 2), (2, 1), (0, 2))) == gamma_minus(
        Rational((1, 1, 2), (2, 1))
    )


def test_gamma_coefficients_sum_to_half_crossings():
    for spec in rational_specs(2, 2):
        vec = to_vector(gamma_minus(spec))
        assert sum(vec.entries) == sum(spec.w)


def test_ljk_equivalence_classes():
    assert ljk_equivalence_classes(2) == [[Twist(1, 1)]]
    assert ljk_equivalence_classes(3) == [[Twist(1, 2)]]
    for m in (4, 5, 6):
        classes = ljk_equivalence_classes(m)
        assert len(classes) == m // 2
        assert all(len(cls) == 1 for cls in classes)
    with pytest.raises(ZeroParameter):
        ljk_equivalence_classes(1)


def test_canonical_potential_anchors():
    for spec in [parse_spec("rat(2,1,4)"), Twist(2, 3)]:
        d, labels = build_front_labeled(spec)
        pot = canonical_potential(spec)
        assert pot.base_offsets[1] == 0
        degrees = fr.grading(d, pot)
        anchor = (
            min(d.crossing_events())
            if isinstance(spec, Rational)
            else next(t for t, n in labels.items() if n == "x_1")
        )
        assert degrees[anchor] == 0


specs_strategy = st.one_of(
    st.builds(
        Twist, st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=6)
    ),
    st.integers(min_value=0, max_value=3).flatmap(
        lambda n: st.builds(
            Rational,
            st.tuples(*[st.integers(1, 3)] * (n + 1)),
            st.tuples(*[st.integers(1, 3)] * n),
        )
    ),
)


@given(specs_strategy)
def test_spec_round_trip_and_front_validates(spec):
    assert parse_spec(render_spec(spec)) == spec
    d = build_front(spec)
    assert fr.validate(d) == []
    assert fr.components(d).num_components == 2
