"""Elo++ chess rating engine.

Games are ``(month, white, black, score)`` tuples with ``score`` in
``{0, 0.5, 1}`` (white's result) or ``None`` for games still to be
predicted. Rating tables are ``dict``s from integer player id to rating on
the natural-log logistic scale.
"""

from ._eloplus import (
    DEFAULT_ELO_OFFSET,
    ELO_SCALE,
    ConsistencyError,
    DivergenceError,
    Error,
    GridPoint,
    InvalidArgumentError,
    IoError,
    ParseError,
    RangeError,
    TrainReport,
    TuneResult,
    ValidationError,
    elo_baseline,
    export_histogram,
    export_scatter,
    generate,
    grid_tune,
    learning_rate,
    load_games,
    load_ratings,
    pm_rmse,
    predict,
    predict_outcome,
    rmse,
    save_games,
    save_ratings,
    spearman,
    time_split,
    time_weight,
    to_elo_scale,
    train,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
