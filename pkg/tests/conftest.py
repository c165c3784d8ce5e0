"""Shared builders: quick records, hand-built trees, stub ensembles."""

import numpy as np
import pytest

from swingdecision.bart import EnsembleConfig, ForestBuilder, PosteriorEnsemble, Tree
from swingdecision.bart.trees import CategoricalRule, Node, NumericRule
from swingdecision.data.types import GameState, Location, Personnel, PitchRecord, derive_gstate
from swingdecision.features import event_metadata, runs_metadata


def make_state(balls=0, strikes=0, outs=0, on_first=False, on_second=False,
               on_third=False, score_diff=0, inning=1, top_inning=True) -> GameState:
    return GameState(balls, strikes, outs, on_first, on_second, on_third,
                     score_diff, inning, top_inning)


def make_record(game_pk="g1", at_bat=1, pitch=1, year=2019, state=None,
                batter="b1", pitcher="p1", catcher="c1", umpire="u1",
                batter_hand="R", pitcher_hand="R", x=0.0, z=2.5,
                swing=False, contact=None, called_strike=False,
                bat_score=0, post_bat_score=None, runs=None, event=None,
                sz_top=3.5, sz_bot=1.5) -> PitchRecord:
    if swing and contact is None:
        contact = True
    if swing:
        called_strike = None
    return PitchRecord(
        game_pk=game_pk, at_bat_number=at_bat, pitch_number=pitch, year=year,
        game_state=state or make_state(),
        personnel=Personnel(batter, pitcher, catcher, umpire, batter_hand,
                            pitcher_hand, 0.32, 0.32),
        location=Location(x, z),
        swing=swing, contact=contact, called_strike=called_strike,
        gstate=derive_gstate(swing, contact, called_strike),
        bat_score=bat_score, post_bat_score=post_bat_score,
        runs_rest_of_inning=runs, event=event, sz_top=sz_top, sz_bot=sz_bot,
    )


def tree_from_nested(spec) -> Tree:
    """Build a tree from nested tuples:

    ("leaf", mu) | ("num", feature, threshold, left, right)
    | ("cat", feature, left_level_codes, left, right)
    """
    tree = Tree(n_rows=1)

    def build(node: Node, s):
        if s[0] == "leaf":
            node.mu = float(s[1])
            return
        node.left = Node(parent=node, is_left=True, depth=node.depth + 1)
        node.right = Node(parent=node, is_left=False, depth=node.depth + 1)
        if s[0] == "num":
            node.rule = NumericRule(s[1], float(s[2]))
            build(node.left, s[3])
            build(node.right, s[4])
        else:
            node.rule = CategoricalRule(s[1], frozenset(s[2]))
            build(node.left, s[3])
            build(node.right, s[4])

    build(tree.root, spec)
    return tree


def ensemble_from_trees(meta, mode, draws, y_mean=0.0, y_sd=1.0, offset=0.0,
                        sigma=None, extras=None) -> PosteriorEnsemble:
    """draws: list over kept draws, each a list of nested tree specs."""
    m = len(draws[0])
    n_cat = [meta.n_levels(j) for j in range(len(meta.categorical_names))]
    builder = ForestBuilder(m, n_cat)
    for trees in draws:
        builder.add_draw([tree_from_nested(t) for t in trees])
    return PosteriorEnsemble(
        mode=mode,
        config=EnsembleConfig(n_trees=m, burn_in=0, n_draws=len(draws)),
        meta=meta,
        forest=builder.build(),
        y_mean=y_mean, y_sd=y_sd, offset=offset,
        sigma=None if sigma is None else np.asarray(sigma),
        extras=extras or {},
    )


@pytest.fixture
def event_meta():
    contexts = [
        make_record(batter=b, pitcher=p, catcher=c, umpire=u)
        for b in ("b1", "b2") for p in ("p1", "p2") for c in ("c1",) for u in ("u1", "u2")
    ]
    return event_metadata(contexts)


@pytest.fixture
def runs_meta():
    rows = [(make_state(), 1.0, "contact"), (make_state(), 0.0, "ball"),
            (make_state(), 0.0, "strike")]
    return runs_metadata(rows)


def constant_event_model(meta, mode="probit", value=0.0, n_draws=3, **kw):
    """Root-only single-tree ensemble predicting a constant per draw."""
    draws = [[("leaf", value)] for _ in range(n_draws)]
    return ensemble_from_trees(meta, mode, draws, **kw)
