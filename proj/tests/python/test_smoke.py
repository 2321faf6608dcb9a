# Copyright 2026 The Eloplus Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import eloplus


def test_closed_forms():
    assert eloplus.predict_outcome(0.0, 0.0, 0.0) == 0.5
    assert eloplus.predict_outcome(0.0, 0.0, 0.2) == pytest.approx(
        1 / (1 + math.exp(-0.2)), abs=1e-15)
    assert eloplus.time_weight(1, 1, 100) == pytest.approx(1e-4)
    assert eloplus.learning_rate(1, 50) == 1.0
    assert eloplus.learning_rate(50, 50) == pytest.approx(
        (6 / 55) ** 0.602, abs=1e-12)
    assert eloplus.ELO_SCALE == pytest.approx(400 * math.log10(math.e))


def test_errors_are_typed():
    with pytest.raises(eloplus.InvalidArgumentError):
        eloplus.predict_outcome(float("inf"), 0.0, 0.0)
    with pytest.raises(eloplus.RangeError):
        eloplus.time_weight(0, 1, 10)
    with pytest.raises(eloplus.Error):
        eloplus.train([(1, 3, 3, 1.0)])


def test_generate_train_predict_evaluate():
    games, latent = eloplus.generate(players=80, games=4000, months=24, seed=2)
    assert len(games) == 4000 and len(latent) == 80
    train, holdout = eloplus.time_split(games, 4)
    assert len(train) + len(holdout) == len(games)
    assert min(g[0] for g in holdout) > max(g[0] for g in train)

    report = eloplus.train(train, seed=3)
    assert report.epochs_run == 50
    assert len(report.loss) == 51
    assert report.loss[5] < report.loss[0]
    assert eloplus.spearman(report.ratings, latent) > 0.85

    expected = eloplus.predict(holdout, report.ratings)
    assert len(expected) == len(holdout)
    assert 0.0 <= eloplus.rmse(holdout, expected) <= 1.0
    assert 0.0 <= eloplus.pm_rmse(holdout, expected) <= 1.0

    again = eloplus.train(train, seed=3)
    assert again.ratings == report.ratings


def test_early_out_and_tuning():
    games, _ = eloplus.generate(players=40, games=1500, months=20)
    report = eloplus.train(games, iterations=20, validation_fraction=0.2,
                           patience=1)
    assert len(report.validation_loss) == report.epochs_run
    result = eloplus.grid_tune(games, gammas=[0.0, 0.2], lambdas=[0.77],
                               iterations=10, jobs=2)
    assert len(result.grid) == 2
    assert result.best_metric == min(p.metric for p in result.grid)


def test_normalize_and_export():
    elo = eloplus.to_elo_scale({1: 0.0, 2: 1.0})
    assert elo[1] == 2338.0
    assert elo[2] == pytest.approx(2338 + eloplus.ELO_SCALE)
    matched = eloplus.to_elo_scale({1: -1.0, 2: 1.0}, match_mean=1500.0)
    assert sum(matched.values()) / 2 == pytest.approx(1500.0)
    assert eloplus.export_histogram({1: 2300.0, 2: 2301.0, 3: 2399.0},
                                    100.0) == [(2300.0, 3)]
    assert eloplus.export_scatter({1: 1.0, 2: 2.0}, {2: 5.0}) == [(2, 2.0, 5.0)]


def test_files_round_trip(tmp_path):
    games, latent = eloplus.generate(players=10, games=50, months=3)
    eloplus.save_games(tmp_path / "games.csv", games)
    assert eloplus.load_games(tmp_path / "games.csv") == games
    eloplus.save_ratings(tmp_path / "r.csv", latent)
    assert eloplus.load_ratings(tmp_path / "r.csv") == latent
    assert eloplus.elo_baseline([(1, 1, 2, 1.0)], 32.0) == {1: 1516.0,
                                                           2: 1484.0}
