import json
from fractions import Fraction

import pytest

import whitforge


def test_parse_and_jordan():
    m = whitforge.parse_matrix("E21+1/2*E32", 3)
    assert m[1][0] == 1 and m[2][1] == Fraction(1, 2)
    assert whitforge.jordan_partition("E21+E32", 3) == [3]
    assert whitforge.jordan_partition([[0, 0], [1, 0]]) == [2]
    with pytest.raises(whitforge.ParseError):
        whitforge.parse_matrix("E31", 2)


def test_partitions():
    assert whitforge.dominance_leq([2, 2], [3, 1])
    assert not whitforge.dominance_leq("3,1", "2,2")
    assert whitforge.sl_class("E21+E43", 4)["a_class"] == 1


def test_chain_of_two_step_pair():
    c = whitforge.chain("diag(3,1,-1,-3)", "E21+E43", n=4)
    assert c["criticals"] == [0, Fraction(1, 4), Fraction(3, 4)]
    assert c["h"] == [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]
    d = whitforge.find_z("diag(3,1,-1,-3)", "E21+E43", n=4)
    assert d["Z"] == [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, -2, 0], [0, 0, 0, -2]]


def test_quasi_criticals_rules():
    pair = dict(S="diag(1,-1,4,2,7/2,3/2)", f="E21+E43+E65", n=6)
    assert whitforge.quasi_criticals(**pair)["values"][0] == Fraction(4, 3)
    assert whitforge.quasi_criticals(**pair, rule="weight-one-or-two")["values"][0] == Fraction(6, 5)


def test_deformations():
    cert = whitforge.deform_gl([2, 2], [3, 1])
    assert all(cert["checks"].values())
    assert whitforge.deform_sl("2,2", "4", a=2) == {"condition_not_met": {"d": 2, "a_class": Fraction(2)}}
    assert all(whitforge.deform_sl("2,2", "4", a=4)["checks"].values())
    assert all(whitforge.compar("2,2", "3,1")["checks"].values())
    with pytest.raises(whitforge.MathError) as info:
        whitforge.deform_gl([3, 1], [2, 2])
    assert info.value.kind == "NotDominated"


def test_cli_in_process():
    status, out, _ = whitforge.run(["orbit-closure", "--eta", "2,2", "--gamma", "4"])
    assert status == 0 and json.loads(out) == {"leq": True}
    status, _, err = whitforge.run(["deform-gl", "--mu", "3,1", "--lambda", "2,2"])
    assert status == 2 and "rejected" in err
