import pytest
from hypothesis import given, strategies as st

from gdep import FAtom, FormatError, GAtom, ParseError, gatom, load_atoms, normalize, normalize_set, parse_atom
from gdep.team import binary_pair_team, check_gdep
from gdep.sampling import random_gatom, random_team
from oracles import subsets

F = frozenset


@pytest.mark.parametrize("text, atom", [
    ("gdep(x0 x1 ; y0)", GAtom(F({"x0", "x1"}), F({"y0"}))),
    ("gdep( ; y)", GAtom(F(), F({"y"}))),
    ("dep(Title ; Salary)", FAtom(F({"Title"}), F({"Salary"}))),
    ("  gdep(;)  ", GAtom(F(), F())),
    ("gdep(b a b ; a)", GAtom(F({"a", "b"}), F({"a"}))),
    ("dep(x;y0   y1)", FAtom(F({"x"}), F({"y0", "y1"}))),
])
def test_parse(text, atom):
    assert parse_atom(text) == atom


def test_kinds_differ():
    assert parse_atom("gdep(a ; b)") != parse_atom("dep(a ; b)")


@pytest.mark.parametrize("text", [
    "gdep(a b)", "gdep(a ; b", "fdep(a ; b)", "gdep(a ; b) x", "gdep(a ; b ; c)", "",
])
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as info:
        parse_atom(text)
    assert info.value.position is not None


def test_canonical_printing():
    assert str(parse_atom("gdep(x1 x0 ; y0)")) == "gdep(x0 x1 ; y0)"
    assert str(gatom("", "y")) == "gdep( ; y)"
    assert str(gatom("a", "")) == "gdep(a ; )"
    assert str(parse_atom("dep( Title;Salary )")) == "dep(Title ; Salary)"


names = st.sampled_from(["a", "b", "c", "x0", "Salary", "v_1"])
atom_st = st.builds(lambda k, l, r: (GAtom if k else FAtom)(l, r),
                    st.booleans(), st.frozensets(names), st.frozensets(names))


@given(atom_st)
def test_print_parse_identity(atom):
    assert parse_atom(str(atom)) == atom
    assert str(parse_atom(str(atom))) == str(atom)


def test_load_atoms():
    atoms = load_atoms(b"# premises\n\ngdep(a ; b)\n  dep(b ; c)  \n")
    assert atoms == [gatom("a", "b"), FAtom(F("b"), F("c"))]
    with pytest.raises(FormatError, match="line 2"):
        load_atoms("gdep(a ; b)\ngdep(a b)\n")


def test_normalize_examples():
    assert normalize(gatom("x0 x1", "y")) == {gatom("x0", "x1 y"), gatom("x1", "x0 y")}
    assert normalize(gatom("x0", "y")) == {gatom("x0", "y")}
    assert normalize(gatom("", "y")) == frozenset()


def test_normalize_set_examples():
    assert normalize_set([gatom("a b", "c")]) == {gatom("a", "b c"), gatom("b", "a c")}
    assert normalize_set([]) == frozenset()
    assert normalize_set([gatom("a", "")]) == {gatom("a", "")}


def test_normalize_idempotent_on_singles():
    for a in normalize(gatom("a b c", "d")):
        assert normalize(a) == {a}
    once = normalize_set([gatom("a b c", "d"), gatom("d e", "")])
    assert normalize_set(once) == once


def test_normalize_faithful_on_all_pair_teams():
    names = ["a", "b", "c", "d", "e"]
    teams = [binary_pair_team(names, d) for d in subsets(names)]
    for x in subsets(names):
        for y in subsets(names):
            parts = normalize(GAtom(x, y))
            for t in teams:
                assert check_gdep(t, x, y) == all(check_gdep(t, p.lhs, p.rhs) for p in parts)


def test_normalize_faithful_on_random_teams():
    import random
    rng = random.Random(11)
    cols = [f"c{i}" for i in range(6)]
    for _ in range(500):
        t = random_team(rng, cols, max_rows=8, n_values=3)
        a = random_gatom(rng, cols, max_lhs=4)
        assert check_gdep(t, a.lhs, a.rhs) == all(check_gdep(t, p.lhs, p.rhs) for p in normalize(a))
