import random

import pytest

from docpair.align.gini import best_split, gini_measure, split_document
from helpers import brute_best_split, gini_fraction, noisy_staircase


class TestGiniMeasure:
    def test_spot_value(self):
        assert gini_measure([1, 1, 1, 2, 2], 0, 5, 1) == 2.4

    def test_pure_interval_is_zero(self):
        assert gini_measure([4, 4, 4, 4], 0, 4, 4) == 0.0
        assert gini_measure([2, 2], 0, 2, 1) == 0.0  # pure in page+1

    def test_interval_of_foreign_labels(self):
        assert gini_measure([3, 3], 0, 2, 1) == 2.0

    def test_empty_interval_raises(self):
        with pytest.raises(ValueError):
            gini_measure([1, 2, 3], 2, 2, 1)
        with pytest.raises(ValueError):
            gini_measure([1, 2, 3], 3, 2, 1)

    def test_range_bound(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(1, 20)
            preds = [rng.randint(1, 4) for _ in range(n)]
            a = rng.randrange(0, n)
            b = rng.randrange(a + 1, n + 1)
            g = gini_measure(preds, a, b, rng.randint(1, 4))
            assert 0.0 <= g <= (b - a) + 1e-12

    def test_scale_consistency(self):
        base = [1, 1, 2]
        doubled = base * 2
        g1 = gini_measure(base, 0, 3, 1)
        g2 = gini_measure(doubled, 0, 6, 1)
        assert g2 == pytest.approx(2 * g1)

    def test_matches_fraction_oracle(self):
        rng = random.Random(11)
        for _ in range(200):
            n = rng.randint(1, 30)
            preds = [rng.randint(1, 5) for _ in range(n)]
            a = rng.randrange(0, n)
            b = rng.randrange(a + 1, n + 1)
            page = rng.randint(1, 5)
            assert gini_measure(preds, a, b, page) == pytest.approx(
                float(gini_fraction(preds, a, b, page)), abs=1e-12
            )


class TestBestSplit:
    def test_pure_staircase(self):
        assert best_split([1, 1, 1, 2, 2], 0, 5, 1) == 3

    def test_only_candidate(self):
        assert best_split([1, 1], 0, 2, 1) == 1

    def test_mixed_sequence_matches_brute_force(self):
        preds = [1, 2, 1, 1, 2, 2, 2]
        assert best_split(preds, 0, 7, 1) == brute_best_split(preds, 0, 7, 1) == 4

    def test_too_small_interval_raises(self):
        with pytest.raises(ValueError):
            best_split([1, 2], 1, 2, 1)

    def test_brute_force_equivalence_random(self):
        rng = random.Random(314)
        for _ in range(500):
            n = rng.randint(2, 50)
            pages = rng.randint(1, 5)
            preds = [rng.randint(1, pages) for _ in range(n)]
            page = rng.randint(1, pages)
            a = rng.randrange(0, n - 1)
            b = rng.randrange(a + 2, n + 1)
            assert best_split(preds, a, b, page) == brute_best_split(preds, a, b, page)


class TestSplitDocument:
    def test_noiseless_staircase_recovhttps_exact_breaks(self):
        preds = [1] * 4 + [2] * 6 + [3] * 5
        assert split_document(preds, 3) == [4, 10]

    def test_single_page(self):
        assert split_document([1, 1, 1], 1) == []

    def test_more_pages_than_paragraphs(self):
        with pytest.raises(ValueError):
            split_document([1, 2], 3)

    def test_breaks_strictly_increasing_even_under_noise(self):
        rng = random.Random(77)
        for _ in range(50):
            labels, _ = noisy_staircase(rng, 60, 6, 0.3)
            breaks = split_document(labels, 6)
            assert all(x < y for x, y in zip(breaks, breaks[1:]))
            assert breaks[0] >= 1 and breaks[-1] <= 59

    def test_noiseless_random_staircases_exact(self):
        rng = random.Random(8)
        for _ in range(50):
            pages = rng.randint(1, 8)
            labels, true_breaks = noisy_staircase(rng, rng.randint(pages * 2, 80), pages, 0.0)
            assert split_document(labels, pages) == true_breaks

    def test_noisy_staircase_accuracy_smoke(self):
        rng = random.Random(42)
        total = 0
        close = 0
        for _ in range(10):
            labels, true_breaks = noisy_staircase(rng, 200, 10, 0.1)
            breaks = split_document(labels, 10)
            for found, truth in zip(breaks, true_breaks):
                total += 1
                close += abs(found - truth) <= 1
        assert close / total >= 0.95
