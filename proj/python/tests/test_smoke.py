from fractions import Fraction

import pytest

import qsc


def test_operators():
    assert qsc.t_op(1, "x2") == "-1"
    assert qsc.r_op(1, "x1") == "0"
    assert qsc.r_op(1, "x2") == "x1"
    assert qsc.divided_difference(1, "x1") == "1"
    assert qsc.apply_word("r1 t1 t2 t1 r2", "x1*x2^2*x3") == qsc.apply_word("r1 t1 t1 r2 t4", "x1*x2^2*x3")


def test_schubert():
    f = qsc.normalize(qsc.schubert("2341"))
    assert f == "x1*x2*x3"
    e = qsc.lr_coeff("2341", "15243", "263415")
    assert e == 1
    assert qsc.ins(3, "143652") == "2514763"


def test_expansions():
    assert qsc.schubert_expand("x1^2 + x1*x2") == {"231": 1, "312": 1}
    assert qsc.forest_expand("x1 + x2") == {"c=(0,1)": 1}
    assert qsc.gessel_coeffs("x1*x2 + x1*x3 + x2*x3", 3) == {"(1,1)": 1}
    assert qsc.forest_poly([0, 0, 1]) == "x1 + x2 + x3"


def test_ds():
    assert qsc.ds("x1*x2", 3, "direct") == "1"
    assert qsc.ds("x1*x2", 3) == "1"
    assert qsc.qds("x1*x2", 3) == qsc.qds("x1*x2", 3, "direct")


def test_words_and_geometry():
    assert qsc.uv_of("r1 t1 t2 t1 r2") == ("21435", "51243")
    assert qsc.star_matrix("r1 t1 t1 r2") == ["0100", "*010", "*001", "1000"]
    assert qsc.trim_set(qsc.nested_forest_of("r1 t1 t2 t1 r2"), 5) == [
        "r1 t1 t1 r2 t4",
        "r1 t1 t1 t3 r2",
        "r1 t1 t2 t1 r2",
    ]
    assert qsc.hhmp_locate([3, 2, 1], [3, 2, 1]) == "r1 r1 r1"
    assert qsc.hhmp_locate([3, 2, 1], [2, 2, 2]) == "r1 t1 r2"
    assert qsc.hhmp_locate([3, 2, 1], [Fraction(5, 2), 2, Fraction(3, 2)]) == "r1 t1 t1"


def test_errors():
    with pytest.raises(qsc.ParseError):
        qsc.normalize("x1 +")
    with pytest.raises(qsc.PreconditionError):
        qsc.uv_of("r1 t3")
    with pytest.raises(ValueError):
        qsc.hhmp_locate([3, 2, 1], [4, 1, 1])


def test_verify():
    r = qsc.verify("gessel")
    assert r["passed"] and r["checks"] > 0
