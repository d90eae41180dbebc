import pathlib

import pytest

import monomial_lab as ml

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def test_ideal_basics():
    i = ml.Ideal(4, ["x1*x2", "x3*x4", "x1*x2*x3"])
    assert i.generators == ["x1*x2", "x3*x4"]
    assert len(i) == 2
    assert i.pure_degree == 2
    assert i.contains("x1*x2*x4")
    assert not i.contains("x1*x3")
    assert i == ml.Ideal.parse("ambient 4\nx3*x4\nx1*x2\n")
    assert repr(i) == "Ideal(4, (x1*x2, x3*x4))"
    with pytest.raises(ml.InputError):
        ml.Ideal(3, ["x7"])
    with pytest.raises(ValueError):
        ml.Ideal.parse("x1*x2")


def test_betti_and_regularity():
    ci = ml.Ideal(4, ["x1*x2", "x3*x4"])
    assert ml.betti_numbers(ci) == {(0, 2): 2, (1, 4): 1}
    table = ml.betti_table(ci, fine=True)
    assert table["subject"] == "ideal"
    assert len(table["fine"]) == 3
    assert ml.regularity(ci) == 3
    assert ml.projective_dimension(ci) == 2


def test_characteristic():
    rp2 = ml.Ideal.read(str(DATA / "rp2.txt"))
    assert ml.regularity(rp2, "QQ") == 3
    assert ml.regularity(rp2, "p:2") == 4
    faces = [0b000111, 0b001101, 0b011001, 0b110001, 0b100011,
             0b010110, 0b101100, 0b011010, 0b110100, 0b101010]
    assert ml.reduced_homology(6, faces)[2] == 0
    assert ml.reduced_homology(6, faces, "GF(2)")[2] == 1


def test_linearity():
    assert ml.is_n2(ml.Ideal(4, ["x1*x2", "x3*x4"])) == (False, ("x1*x2", "x3*x4"))
    ideal, f, g = ml.remark_example()
    assert ml.is_n2(ideal) == (True, None)
    assert ml.is_nk(ideal, 8)
    t = ml.truncation(ml.add_generator(ideal, g), 4)
    assert not ml.is_n2(t)[0]
    assert not ml.is_nk(t, 2, "GF(32003)")
    f1, w = ml.gcd_witness(ideal, f)
    assert len(w.split("*")) == 3


def test_duality():
    i = ml.Ideal(4, ["x1*x2", "x2*x3", "x3*x4"])
    d = ml.alexander_dual(i)
    assert ml.alexander_dual(d) == i
    assert ml.projective_dimension(i) == ml.regularity(d)
    assert ml.height_profile(i)["height"] == 2
    assert ml.is_s2(ml.Ideal(4, ["x1*x2", "x3*x4"])) == (True, 2)
    assert ml.cohomological_dimension(i) == ml.projective_dimension(i)


def test_bounds():
    assert [ml.f_bound(n, 5) for n in range(5, 16)] == [5, 5, 5, 6, 7, 7, 8, 9, 9, 10, 11]
    assert [ml.g_bound(n, 5) for n in range(5, 16)] == [5, 5, 5, 6, 7, 8, 9, 9, 9, 10, 11]
    assert ml.faltings_bound(10, 2) == 7
    sharp = ml.sharp_example(6, 3)
    assert len(sharp) == 12
    report = ml.check_regularity_bound(sharp)
    assert report["reg"] == 4 and report["tight"]
    assert ml.check_cd_bound(ml.alexander_dual(sharp))["cd"] == 4
    with pytest.raises(ml.PreconditionError):
        ml.check_regularity_bound(ml.Ideal(4, ["x1*x2", "x3*x4"]))
    with pytest.raises(ml.InputError):
        ml.sharp_example(6, 4)


def test_harness():
    s = ml.verify_range(4, 2)
    assert s["max_reg"] == 2 and s["violations"] == []
    c5 = ml.verify_range(5, 2, jobs=2)
    assert c5["max_reg"] == 3
    assert len(c5["violations"]) == 12
    assert ml.verify_range(4, 2, symmetry="dedup")["n2_classes"] == 9
    with pytest.raises(ml.CapacityError):
        ml.verify_range(9, 4)
    assert ml.gcd_lemma_sweep(4, 2)["violations"] == []
    assert all(c["passed"] for c in ml.golden_suite())
