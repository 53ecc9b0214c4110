import json
import random

import mpmath
import pytest

from colorsig.ccomplex import (CComplexData, HermitianForm, hermitian_form, sign_vectors,
                               symbolic_form, validate)
from colorsig.errors import DomainError, ValidationError
from colorsig.laurent import LaurentPoly
from colorsig.scalar import CyclotomicScalar, RootOfUnity, TorusPoint, evaluate_exact

from conftest import random_cc


def _ints(H):
    """Rational-integer entries of an exact form, as Python ints."""
    out = []
    for row in H.entries:
        r = []
        for x in row:
            assert all(c == 0 for c in x.coeffs[1:]) and x.den == 1
            r.append(x.coeffs[0])
        out.append(r)
    return out


def test_validate_examples():
    assert validate(CComplexData(mu=1, g=1, half_matrices={(1,): [[1]]})) == []
    bad = CComplexData(mu=2, g=1, half_matrices={(1, 1): [[1]], (1, -1): [[1, 0]]})
    assert any("not 1x1" in v for v in validate(bad))
    lk = CComplexData(mu=2, g=0, half_matrices={(1, 1): [], (1, -1): []},
                      linking=[[1, 0], [0, 0]])
    assert any("zero diagonal" in v for v in validate(lk))


def test_validate_missing_and_metadata():
    cc = CComplexData(mu=2, g=0, half_matrices={(1, 1): []}, beta0=0,
                      components_per_color=(1,), linking=[[0, 1], [2, 0]])
    problems = validate(cc)
    assert any("missing matrix" in p for p in problems)
    assert any("beta0" in p for p in problems)
    assert any("components_per_color" in p for p in problems)
    assert any("symmetric" in p for p in problems)


def test_transpose_relation_holds_by_construction(rng):
    cc = random_cc(rng, 3, 3)
    fam = cc.full_family()
    assert len(fam) == 8
    for eps, A in fam.items():
        neg = tuple(-e for e in eps)
        assert [list(r) for r in fam[neg]] == [list(r) for r in zip(*A)]


def test_json_round_trip_and_schema(rng, tmp_path):
    cc = random_cc(rng, 2, 2)
    data = cc.to_json()
    assert set(data["matrices"]) == {"++", "+-"}
    assert CComplexData.from_json(json.loads(json.dumps(data))) == cc
    path = tmp_path / "cc.json"
    path.write_text(json.dumps(data))
    assert CComplexData.load(path) == cc
    data["matrices"]["-+"] = [[0, 0], [0, 0]]
    with pytest.raises(ValidationError):
        CComplexData.from_json(data)
    with pytest.raises(ValidationError):
        CComplexData.from_json({"mu": 1})
    path.write_text("{not json")
    with pytest.raises(ValidationError):
        CComplexData.load(path)


def test_symbolic_form_examples():
    x = LaurentPoly.variable(0, 1)
    H = symbolic_form(CComplexData(mu=1, g=1, half_matrices={(1,): [[1]]}))
    assert H[0, 0] == 2 - x - x ** -1
    empty = symbolic_form(CComplexData.unlink(3))
    assert empty.rows == 0 and empty.cols == 0
    zero = symbolic_form(CComplexData(mu=2, g=1, half_matrices={(1, 1): [[0]], (1, -1): [[0]]}))
    assert zero[0, 0].is_zero()


def test_symbolic_form_is_hermitian(rng):
    for _ in range(10):
        cc = random_cc(rng, rng.randint(1, 3), rng.randint(1, 4))
        H = symbolic_form(cc)
        assert H.transpose().conjugate() == H


def test_hermitian_form_examples(trefoil):
    w = TorusPoint.roots((1, 2))
    assert _ints(hermitian_form(CComplexData(mu=1, g=1, half_matrices={(1,): [[1]]}), w)) == [[4]]
    assert hermitian_form(CComplexData.unlink(2), w).size == 0
    assert _ints(hermitian_form(trefoil, w)) == [[-4, 2], [2, -4]]


def test_levine_tristram_convention():
    # from_seifert realizes (1 - w) A + (1 - conj w) A^T
    A = [[-1, 1], [0, -1]]
    cc = CComplexData.from_seifert(A)
    w = TorusPoint.roots((1, 5))
    H = hermitian_form(cc, w, backend="approx")
    z = mpmath.expjpi(mpmath.mpf(2) / 5)
    for i in range(2):
        for j in range(2):
            expected = (1 - z) * A[i][j] + (1 - mpmath.conj(z)) * A[j][i]
            assert abs(H[i, j] - expected) < 1e-12


def test_clasped_disks_by_hand():
    # 4-term sum for a single loop through two clasps, evaluated independently
    cc = CComplexData(mu=2, g=1, half_matrices={(1, 1): [[-1]], (1, -1): [[0]]},
                      linking=[[0, 2], [2, 0]])
    for k1, n1, k2, n2 in [(1, 2, 1, 2), (1, 3, 1, 4), (2, 5, 3, 7)]:
        w1 = mpmath.expjpi(mpmath.mpf(2 * k1) / n1)
        w2 = mpmath.expjpi(mpmath.mpf(2 * k2) / n2)
        c1, c2 = mpmath.conj(w1), mpmath.conj(w2)
        value = -(1 - c1) * (1 - c2) - (1 - w1) * (1 - w2)
        H = hermitian_form(cc, TorusPoint.roots((k1, n1), (k2, n2)), backend="approx")
        assert abs(H[0, 0] - value) < 1e-12


def test_specialization_coherence(rng):
    for _ in range(25):
        mu = rng.randint(1, 3)
        cc = random_cc(rng, mu, rng.randint(0, 4))
        w = TorusPoint(tuple(RootOfUnity(rng.randint(1, 6), 7) for _ in range(mu)))
        S = symbolic_form(cc)
        H = hermitian_form(cc, w)
        for i in range(cc.g):
            for j in range(cc.g):
                assert evaluate_exact(S[i, j], w) == H[i, j]


def test_backend_consistency(rng):
    prec = 128
    for _ in range(15):
        mu = rng.randint(1, 3)
        cc = random_cc(rng, mu, rng.randint(1, 4))
        w = TorusPoint(tuple(RootOfUnity(rng.randint(1, 10), 11) for _ in range(mu)))
        E = hermitian_form(cc, w, backend="exact")
        A = hermitian_form(cc, w, backend="approx", precision=prec)
        for i in range(cc.g):
            for j in range(cc.g):
                assert abs(E[i, j].to_complex(prec) - A[i, j]) < 2 ** -(prec - 8) * 2 ** (4 * mu)


def test_conjugate_point_gives_conjugate_form(rng):
    for _ in range(10):
        mu = rng.randint(1, 3)
        cc = random_cc(rng, mu, rng.randint(1, 4))
        w = TorusPoint(tuple(RootOfUnity(rng.randint(1, 8), 9) for _ in range(mu)))
        H = hermitian_form(cc, w)
        Hbar = hermitian_form(cc, w.conjugate())
        assert Hbar.entries == H.conjugate().entries


def test_hermitian_check():
    with pytest.raises(DomainError):
        HermitianForm.from_rows([[1, 2], [3, 1]])
    z = CyclotomicScalar.zeta_power(1, 4)
    HermitianForm.from_rows([[1, z], [z.conjugate(), 0]])


def test_sign_vectors():
    assert list(sign_vectors(2, half=True)) == [(1, 1), (1, -1)]
    assert len(list(sign_vectors(3))) == 8
