import itertools

import pytest

import wrank


def test_binomial_is_exact():
    assert wrank.binomial(100, 50) == 100891344545564193334812497256
    assert wrank.binomial(5, 7) == 0


def test_colex_round_trip():
    subsets = sorted(itertools.combinations(range(1, 7), 3), key=lambda s: tuple(reversed(s)))
    for r, s in enumerate(subsets):
        assert wrank.subset_rank(list(s), 6) == r
        assert wrank.subset_unrank(r, 3, 6) == list(s)


@pytest.mark.parametrize(
    "m, n, char, rank",
    [(7, 2, 0, 21), (6, 3, 0, 10), (8, 4, 2, 6), (8, 3, 2, 7), (9, 3, 3, 27), (10, 2, 3, 36), (7, 2, 5, 20)],
)
def test_rank_table(m, n, char, rank):
    assert wrank.predicted_rank(m, n, char) == rank
    assert wrank.incidence_rank(m, n, char=char) == rank


def test_rank_report():
    report = wrank.rank_report(9, 3, char=3, layers=True)
    assert report["verdict"] == "match"
    assert report["layers"] == (0, 0, 27)
    flipped = wrank.rank_report(7, 5)
    assert flipped["normalized"]["n"] == 2
    assert flipped["computed_rank"] == 21


def test_matrix_and_smith_form():
    w = wrank.incidence_matrix(4, 2)
    assert len(w) == 6 and len(w[0]) == 6
    assert all(sum(col) == 4 for col in zip(*w))
    diagonal = wrank.incidence_snf(5, 2)
    assert sum(d % 2 for d in diagonal) == 4
    assert wrank.smith_normal_form([[0, 6], [4, 0]]) == [2, 12]


def test_specht_helpers():
    assert wrank.specht_dim(6, 2) == 9
    assert wrank.lemma_coefficient(10, 3, 2, 1, 2) == -2
    assert wrank.lemma_coefficient(12, 4, 3, 3, 2) == 2
    assert wrank.verify_lemma_image(2, 1, 2, [2, 4, 6, 7, 8], [1, 3, 5])
    assert wrank.james_multiplicity(9, 3, 1, 0) == 1
    assert wrank.layer_dims(10, 5) == (1, 0, 35)


def test_diagonal_compare():
    report = wrank.diagonal_form_compare(5, 2)
    assert report["equivalent"]
    assert len(report["candidate"]) == 10


def test_errors():
    with pytest.raises(ValueError):
        wrank.predicted_rank(7, 5)
    with pytest.raises(wrank.SizeCapError):
        wrank.layer_dims(13, 3)
    with pytest.raises(ValueError):
        wrank.incidence_rank(5, 2, char=4)
