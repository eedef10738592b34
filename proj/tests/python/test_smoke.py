import json
from fractions import Fraction

import pytest

import ogglab


def test_linear_algebra():
    a = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    assert ogglab.snf(a) == [2, 6, 12]
    assert ogglab.det(a) == -144
    assert ogglab.charpoly([[0, 1], [-1, 0]]) == [1, 0, 1]
    assert ogglab.hnf([[2, 0], [3, 1]]) == [[1, 1], [0, 2]]


def test_big_integers_round_trip():
    big = 10**40 + 7
    assert ogglab.det([[big]]) == big
    assert ogglab.det([[big, 0], [0, big]]) == big * big


@pytest.fixture(scope="module")
def level65():
    return ogglab.BrandtModule.build(5, 13)


def test_brandt_module(level65):
    assert level65.class_count == 6
    assert level65.cuspidal_rank == 5
    mass = Fraction(*level65.mass)
    assert mass == Fraction(*ogglab.eichler_mass(5, 13)) == Fraction(4 * 14, 24)
    assert mass == sum(Fraction(1, 2 * w) for w in level65.weights)
    b2 = level65.brandt_matrix(2)
    assert all(sum(row) == 3 for row in b2)
    t2, t3 = level65.cuspidal_hecke(2), level65.cuspidal_hecke(3)
    mul = lambda x, y: [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))]
                        for i in range(len(x))]
    assert mul(t2, t3) == mul(t3, t2) == level65.cuspidal_hecke(6)


def test_eisenstein_quotient(level65):
    assert ogglab.sturm_bound(5, 13) == 14
    assert ogglab.eisenstein_quotient(level65) == [84]
    assert ogglab.eisenstein_quotient(level65, "m-+", 7) == [7]
    assert ogglab.eisenstein_quotient(level65, "m-+", 11) == []


def test_prediction():
    assert ogglab.predicted_kernel(13, 83) == [7, 7]
    assert ogglab.predicted_kernel(7, 701) == [234]
    with pytest.raises(ogglab.NotApplicable):
        ogglab.predicted_kernel(11, 13)
    assert ogglab.classify_eisenstein_prime(13, 83, 7)["condition"] == "neither"
    r = ogglab.classify_eisenstein_prime(5, 13, 7)
    assert r["condition"] == "q+1"
    assert r["theorem_applies"]


def test_detect_bundled_curve():
    curve = ogglab.bundled_curve("701a1")
    assert curve is not None
    r = ogglab.detect(curve["coeffs"], 11, 3)
    assert r["newness_congruence"]
    assert not r["candidate"]


def test_conjugacy():
    ok = ogglab.conjugacy_check([[1, 1], [0, 1]], [[1, 0], [1, 1]])
    assert ok["kind"] == "certificate"
    assert abs(ok["determinant"]) == 1
    bad = ogglab.conjugacy_check([[2]], [[3]])
    assert bad["kind"] != "certificate"


def test_run_cli(tmp_path):
    code, out, err = ogglab.run_cli(["--cache", str(tmp_path), "brandt", "5", "13"])
    assert code == 0, err
    assert json.loads(out)["classCount"] == 6
    code, _, _ = ogglab.run_cli(["brandt", "5"])
    assert code == 1
