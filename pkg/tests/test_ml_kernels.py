"""Numeric kernels against independent oracles."""

import numpy as np
import pytest

import oracles
from dataprep.errors import KTooLarge, SingleClass
from dataprep.ml import (
    Dbscan,
    GradientBoostedRegressor,
    IsolationForest,
    KMeans,
    LinearSvmClassifier,
    LocalOutlierFactor,
    RandomForest,
    kmeans,
)


class TestDbscan:
    def test_far_point_is_noise(self):
        rng = np.random.default_rng(0)
        ball = rng.normal(size=(10, 2)) * 0.01
        far = np.array([[100.0, 100.0]])
        X = np.vstack([ball, far])
        labels = Dbscan(eps=1.0, min_pts=3).fit_predict(X)
        assert labels[-1] == -1
        assert set(labels[:-1]) == {0}

    def test_identical_points_one_cluster(self):
        X = np.zeros((8, 2))
        labels = Dbscan(eps=0.5, min_pts=5).fit_predict(X)
        assert set(labels) == {0}

    def test_matches_naive_reference(self):
        rng = np.random.default_rng(42)
        X = rng.uniform(size=(200, 2))
        for eps, min_pts in [(0.05, 3), (0.1, 5), (0.2, 4)]:
            mine = Dbscan(eps=eps, min_pts=min_pts).fit_predict(X)
            ref = oracles.naive_dbscan(X, eps, min_pts)
            assert oracles.partitions_equal(mine, ref)

    def test_permutation_invariant_partition(self):
        rng = np.random.default_rng(7)
        X = rng.normal(size=(60, 2))
        perm = rng.permutation(60)
        base = Dbscan(eps=0.4, min_pts=4).fit_predict(X)
        shuffled = Dbscan(eps=0.4, min_pts=4).fit_predict(X[perm])
        unshuffled = np.empty(60, dtype=int)
        unshuffled[perm] = shuffled
        assert oracles.partitions_equal(base, unshuffled)


class TestLof:
    def test_grid_interior_near_one(self):
        xs, ys = np.meshgrid(np.arange(10.0), np.arange(10.0))
        X = np.column_stack([xs.ravel(), ys.ravel()])
        scores = LocalOutlierFactor(k=8).fit_score(X)
        interior = [i for i, (x, y) in enumerate(X) if 2 <= x <= 7 and 2 <= y <= 7]
        assert np.all(scores[interior] >= 0.8)
        assert np.all(scores[interior] <= 1.2)

    def test_isolated_point_has_max_score(self):
        xs, ys = np.meshgrid(np.arange(8.0), np.arange(8.0))
        X = np.vstack([np.column_stack([xs.ravel(), ys.ravel()]), [[40.0, 40.0]]])
        scores = LocalOutlierFactor(k=5).fit_score(X)
        assert int(np.argmax(scores)) == len(X) - 1
        assert scores[-1] > 1.5

    def test_duplicates_lof_exactly_one(self):
        k = 4
        rng = np.random.default_rng(3)
        X = np.vstack([np.tile([[5.0, 5.0]], (k + 1, 1)), rng.uniform(10, 20, size=(30, 2))])
        scores = LocalOutlierFactor(k=k).fit_score(X)
        assert np.all(scores[: k + 1] == 1.0)

    def test_matches_brute_force(self):
        rng = np.random.default_rng(11)
        X = rng.normal(size=(120, 3))
        for k in (3, 10, 20):
            mine = LocalOutlierFactor(k=k).fit_score(X)
            ref = oracles.brute_lof(X, k)
            np.testing.assert_allclose(mine, ref, atol=1e-9, rtol=0)

    def test_k_too_large(self):
        with pytest.raises(KTooLarge):
            LocalOutlierFactor(k=5).fit_score(np.zeros((5, 2)))


class TestIsolationForest:
    def test_scores_in_unit_interval(self):
        rng = np.random.default_rng(0)
        scores = IsolationForest(n_trees=25, random_state=0).fit_score(
            rng.normal(size=(100, 2))
        )
        assert np.all(scores > 0.0)
        assert np.all(scores <= 1.0)

    def test_identical_points_equal_scores(self):
        scores = IsolationForest(n_trees=10, random_state=1).fit_score(np.ones((2, 3)))
        assert scores[0] == scores[1]

    def test_planted_outlier_top1(self):
        rng = np.random.default_rng(123)
        X = np.vstack([rng.normal(size=(500, 2)), [[10.0, 10.0]]])
        scores = IsolationForest(random_state=5).fit_score(X)
        assert int(np.argmax(scores)) == 500

    def test_deterministic(self):
        rng = np.random.default_rng(9)
        X = rng.normal(size=(80, 2))
        a = IsolationForest(random_state=7).fit_score(X)
        b = IsolationForest(random_state=7).fit_score(X)
        np.testing.assert_array_equal(a, b)


class TestKMeans:
    def test_two_separated_pairs(self):
        X = np.array([[0.0, 0.0], [0.1, 0.0], [10.0, 10.0], [10.1, 10.0]])
        res = kmeans(X, k=2, seed=0)
        assert res.assignments[0] == res.assignments[1]
        assert res.assignments[2] == res.assignments[3]
        assert res.assignments[0] != res.assignments[2]
        _, best = oracles.best_two_partition_wcss(X)
        assert res.wcss == pytest.approx(best, abs=1e-9)

    def test_k_equals_n(self):
        rng = np.random.default_rng(2)
        X = rng.normal(size=(6, 2))
        res = kmeans(X, k=6, seed=0)
        assert res.wcss == pytest.approx(0.0, abs=1e-18)
        assert len(set(res.assignments)) == 6

    def test_k_one_centroid_is_mean(self):
        rng = np.random.default_rng(5)
        X = rng.normal(size=(20, 3))
        res = kmeans(X, k=1, seed=0)
        np.testing.assert_allclose(res.centroids[0], X.mean(axis=0), atol=1e-12)

    def test_wcss_monotone(self):
        rng = np.random.default_rng(8)
        X = rng.normal(size=(100, 2))
        res = kmeans(X, k=4, seed=3)
        diffs = np.diff(res.wcss_history)
        assert np.all(diffs <= 1e-9)

    def test_k_too_large(self):
        with pytest.raises(KTooLarge):
            KMeans(k=5).fit(np.zeros((3, 2)))


class TestLinearSvm:
    def test_separable_two_class(self):
        rng = np.random.default_rng(0)
        X = np.vstack([rng.normal(size=(20, 2)) + 4, rng.normal(size=(20, 2)) - 4])
        y = np.array([0] * 20 + [1] * 20)
        clf = LinearSvmClassifier().fit(X, y)
        assert np.all(clf.predict(X) == y)

    def test_single_class_rejected(self):
        with pytest.raises(SingleClass):
            LinearSvmClassifier().fit(np.zeros((3, 2)), np.array([1, 1, 1]))

    def test_deterministic(self):
        rng = np.random.default_rng(1)
        X = rng.normal(size=(30, 4))
        y = (X[:, 0] > 0).astype(int)
        a = LinearSvmClassifier().fit(X, y)
        b = LinearSvmClassifier().fit(X, y)
        np.testing.assert_array_equal(a.weights_, b.weights_)


class TestForestAndBoosting:
    def test_importances_sum_to_one(self):
        rng = np.random.default_rng(0)
        X = rng.normal(size=(150, 4))
        y = 3.0 * X[:, 1] + rng.normal(size=150) * 0.1
        forest = RandomForest(n_trees=20, random_state=0).fit(X, y)
        assert forest.feature_importances_.sum() == pytest.approx(1.0, abs=1e-9)
        assert np.all(forest.feature_importances_ >= 0)
        assert int(np.argmax(forest.feature_importances_)) == 1

    def test_forest_deterministic(self):
        rng = np.random.default_rng(4)
        X = rng.normal(size=(60, 3))
        y = X[:, 0] + rng.normal(size=60)
        a = RandomForest(n_trees=10, random_state=2).fit(X, y)
        b = RandomForest(n_trees=10, random_state=2).fit(X, y)
        np.testing.assert_array_equal(a.feature_importances_, b.feature_importances_)

    def test_boosting_loss_monotone_and_memorizes(self):
        X = np.eye(8)
        y = np.arange(8.0)
        gbm = GradientBoostedRegressor(n_rounds=60).fit(X, y)
        losses = np.array(gbm.loss_history_)
        assert np.all(np.diff(losses) <= 1e-12)
        np.testing.assert_allclose(gbm.predict(X), y, atol=0.05)
