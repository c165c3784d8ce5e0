"""Command-line pipeline: simulate -> ingest -> fit -> cv / score -> report -> serve."""

import argparse
import csv
import sys
from types import SimpleNamespace

import numpy as np

from .. import bart
from ..data import (
    WobaConfig,
    attach_quality,
    label_runs,
    load_schema_file,
    load_umpire_table,
    parse_statcast_csv,
    partition,
    read_pitch_cache,
    write_pitch_cache,
)
from ..decision.output import read_evdiff_draws, read_scored, write_evdiff_draws, write_scored
from ..decision.score import score_pitches
from ..evaluation import (
    ModelSpec,
    SyntheticConfig,
    kfold_split,
    run_cv,
    synthesize,
    write_cv_report,
    write_statcast_csv,
    write_umpire_csv,
)
from ..features import event_design, event_metadata, runs_design, runs_metadata
from ..metrics.batter import batter_report
from ..metrics.traditional import traditional_metrics
from ..rex import BinSpec, RexPriorConfig
from ..store import ModelStore
from ..util import spawn_seeds
from .manifest import ManifestTimer, file_fingerprint, write_manifest


def _parse_years(text: str) -> tuple:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return int(lo), int(hi)
    year = int(text)
    return year, year


def _chain_config(args, mode: str) -> bart.EnsembleConfig:
    overrides = {"burn_in": args.burn_in, "n_draws": args.draws,
                 "thin": args.thin, "seed": args.seed}
    if args.trees is not None:
        overrides["n_trees"] = args.trees
    return bart.default_config(mode, **overrides)


def _add_chain_flags(p) -> None:
    p.add_argument("--trees", type=int, default=None, help="tree count (mode default otherwise)")
    p.add_argument("--burn-in", type=int, default=1000)
    p.add_argument("--draws", type=int, default=1000)
    p.add_argument("--thin", type=int, default=1)


def cmd_simulate(args) -> int:
    timer = ManifestTimer()
    lo, hi = _parse_years(args.years)
    seeds = spawn_seeds(args.seed, hi - lo + 1)
    all_records = []
    for year, seed in zip(range(lo, hi + 1), seeds):
        config = SyntheticConfig(n_pitches=args.n, seed=seed, year=year)
        records, _truth = synthesize(config)
        all_records.extend(records)
    write_statcast_csv(all_records, args.out)
    if args.umpires_out:
        write_umpire_csv(all_records, args.umpires_out)
    write_manifest(
        args.out, "simulate", vars(args), {"root": args.seed, "per_year": seeds},
        inputs={}, outputs={"csv": file_fingerprint(args.out)}, timer=timer,
        extra={"n_records": len(all_records)},
    )
    print(f"simulate: {len(all_records)} pitches over {lo}..{hi} -> {args.out}")
    return 0


def cmd_ingest(args) -> int:
    timer = ManifestTimer()
    schema = load_schema_file(args.schema) if args.schema else None
    umpires = load_umpire_table(args.umpires) if args.umpires else None
    records, diag = parse_statcast_csv(args.csv, schema=schema, umpire_join=umpires)
    label_runs(records)
    attach_quality(records, WobaConfig())
    for record in records:
        record.validate()
    write_pitch_cache(records, args.out)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(diag.report())
    parts = partition(records, args.event_year, _parse_years(args.rex_years))
    write_manifest(
        args.out, "ingest", vars(args), {"seed": args.seed},
        inputs={"csv": file_fingerprint(args.csv)},
        outputs={"cache": file_fingerprint(args.out)},
        timer=timer,
        extra={"diagnostics": vars(diag) | {"messages": diag.messages},
               "partition": parts.summary()},
    )
    print(f"ingest: {diag.parsed} records ({diag.dropped()} dropped) -> {args.out}")
    return 0


def _median_qualities(records) -> dict:
    return {
        "median_batter_quality": float(np.median([r.personnel.batter_quality for r in records])),
        "median_pitcher_quality": float(np.median([r.personnel.pitcher_quality for r in records])),
    }


def cmd_fit(args) -> int:
    timer = ManifestTimer()
    records = read_pitch_cache(args.cache)
    parts = partition(records, args.event_year, _parse_years(args.rex_years))
    fingerprint = file_fingerprint(args.cache)
    store = ModelStore(args.store)

    if args.model in ("strike", "contact"):
        subset = parts.takes if args.model == "strike" else parts.swings
        if not subset:
            print(f"fit: no {args.model} training rows in {args.cache}", file=sys.stderr)
            return 1
        y = np.array(
            [1.0 if (r.called_strike if args.model == "strike" else r.contact) else 0.0
             for r in subset]
        )
        meta = event_metadata(subset)
        ensemble = bart.fit(event_design(meta, subset), y, _chain_config(args, "probit"), "probit")
        ensemble.extras.update(_median_qualities(subset))
    else:
        subset = parts.rex_train
        if not subset:
            print("fit: no run-expectancy training rows", file=sys.stderr)
            return 1
        rows = [(r.game_state, float(r.swing), r.gstate) for r in subset]
        y = np.array([float(r.runs_rest_of_inning) for r in subset])
        meta = runs_metadata(rows)
        ensemble = bart.fit(runs_design(meta, rows), y, _chain_config(args, "regression"),
                            "regression")
    key = store.put(ensemble, fingerprint, role=args.model)
    write_manifest(
        str(store.root / key), "fit", vars(args),
        {"seed": args.seed}, inputs={"cache": fingerprint},
        outputs={"key": key}, timer=timer,
        extra={"n_train": len(subset), "counters": ensemble.extras.get("counters")},
    )
    print(f"fit: {args.model} on {len(subset)} rows -> {key}")
    return 0


def _event_cv_specs(args, target: str) -> list:
    config = _chain_config(args, "probit")
    subsets = [(True, True, True), (True, False, True), (False, True, True),
               (False, False, True)]
    if not args.quick:
        subsets += [(True, True, False), (True, False, False), (False, True, False)]
    specs = [
        ModelSpec("tree", target, include_g=g, include_p=p, include_l=l, tree_config=config)
        for g, p, l in subsets
    ]
    specs.append(ModelSpec("constant", target))
    specs.append(ModelSpec("location_grid", target))
    return specs


def _runs_cv_specs(args) -> list:
    config = _chain_config(args, "regression")
    specs = [ModelSpec("tree", "runs", tree_config=config)]
    combos = [
        BinSpec(count=False, outs=True, baserunners=True),
    ]
    if not args.quick:
        combos += [
            BinSpec(count=True, outs=True, baserunners=True),
            BinSpec(count=True, outs=True, baserunners=False),
            BinSpec(count=True, outs=False, baserunners=True),
            BinSpec(count=True, outs=False, baserunners=False),
            BinSpec(count=False, outs=True, baserunners=False),
            BinSpec(count=False, outs=False, baserunners=True),
        ]
    prior = RexPriorConfig(burn_in=min(args.burn_in, 500), n_draws=min(args.draws, 500),
                           seed=args.seed)
    for spec in combos:
        specs.append(ModelSpec("rex", "runs", bin_spec=spec))
        specs.append(ModelSpec("bayes_rex", "runs", bin_spec=spec, rex_prior=prior))
    specs.append(ModelSpec("constant", "runs"))
    return specs


def cmd_cv(args) -> int:
    timer = ManifestTimer()
    records = read_pitch_cache(args.cache)
    parts = partition(records, args.event_year, _parse_years(args.rex_years))
    if args.target == "strike":
        dataset = parts.takes
        specs = _event_cv_specs(args, "strike")
        reference = "tree(G,P,L)"
    elif args.target == "contact":
        dataset = parts.swings
        specs = _event_cv_specs(args, "contact")
        reference = "tree(G,P,L)"
    else:
        dataset = parts.rex_train
        specs = _runs_cv_specs(args)
        reference = "tree(G,decision,outcome)"
    if len(dataset) < args.folds:
        print(f"cv: only {len(dataset)} rows for {args.folds} folds", file=sys.stderr)
        return 1
    plan = kfold_split(len(dataset), args.folds, args.seed)
    results = [run_cv(spec, dataset, plan) for spec in specs]
    write_cv_report(results, reference, args.out)
    write_manifest(
        args.out, "cv", vars(args), {"seed": args.seed},
        inputs={"cache": file_fingerprint(args.cache)},
        outputs={"report": file_fingerprint(args.out)}, timer=timer,
        extra={"models": [r.spec_label for r in results]},
    )
    print(f"cv: {args.target}, {len(specs)} models x {args.folds} folds -> {args.out}")
    return 0


def cmd_score(args) -> int:
    timer = ManifestTimer()
    records = read_pitch_cache(args.cache)
    parts = partition(records, args.event_year, _parse_years(args.rex_years))
    pitches = parts.takes + parts.swings
    if not pitches:
        print("score: no pitches for the event season", file=sys.stderr)
        return 1
    store = ModelStore(args.store)
    strike_model = store.get_role("strike")
    contact_model = store.get_role("contact")
    runs_model = store.get_role("runs")
    summaries = score_pitches(strike_model, contact_model, runs_model, pitches,
                              n_draws=args.n_draws)
    write_scored(pitches, summaries, args.out)
    if args.draws_out:
        write_evdiff_draws(pitches, summaries, args.draws_out)
    write_manifest(
        args.out, "score", vars(args), {"seed": args.seed},
        inputs={"cache": file_fingerprint(args.cache)},
        outputs={"scored": file_fingerprint(args.out)}, timer=timer,
        extra={"n_pitches": len(pitches)},
    )
    print(f"score: {len(pitches)} pitches -> {args.out}")
    return 0


def cmd_report(args) -> int:
    timer = ManifestTimer()
    rows = read_scored(args.scored)
    _keys, draws = read_evdiff_draws(args.draws)
    if len(rows) != draws.shape[0]:
        print("report: scored rows and draw matrix are misaligned", file=sys.stderr)
        return 1
    by_batter: dict = {}
    for i, row in enumerate(rows):
        by_batter.setdefault(row["batter_id"], []).append(i)

    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([
            "batter_id", "n_pitches", "qualified",
            "prop_optimal_mean", "prop_optimal_lo", "prop_optimal_hi",
            "runs_added_mean", "runs_added_lo", "runs_added_hi",
            "runs_added_per_pitch", "runs_lost_mean", "runs_lost_lo",
            "runs_lost_hi", "runs_lost_per_pitch",
            "traditional_correct_pct", "o_swing_pct", "z_swing_pct",
        ])
        for batter_id in sorted(by_batter):
            idx = by_batter[batter_id]
            sub = [rows[i] for i in idx]
            actual = np.array([r["actual"] == "swing" for r in sub])
            rep = batter_report(batter_id, draws[idx], actual)
            pitch_like = [
                SimpleNamespace(
                    swing=r["actual"] == "swing",
                    location=SimpleNamespace(plate_x=r["plate_x"], plate_z=r["plate_z"]),
                    sz_top=r["sz_top"], sz_bot=r["sz_bot"],
                )
                for r in sub
            ]
            trad = traditional_metrics(pitch_like)
            writer.writerow([
                batter_id, rep.n_pitches, int(rep.n_pitches >= args.min_pitches),
                repr(rep.proportion_optimal.mean), repr(rep.proportion_optimal.lo),
                repr(rep.proportion_optimal.hi),
                repr(rep.runs_added.mean), repr(rep.runs_added.lo), repr(rep.runs_added.hi),
                repr(rep.runs_added_per_pitch()),
                repr(rep.runs_lost.mean), repr(rep.runs_lost.lo), repr(rep.runs_lost.hi),
                repr(rep.runs_lost_per_pitch()),
                repr(trad.correct_decision_pct),
                "" if trad.o_swing_pct is None else repr(trad.o_swing_pct),
                "" if trad.z_swing_pct is None else repr(trad.z_swing_pct),
            ])
    write_manifest(
        args.out, "report", vars(args), {"seed": args.seed},
        inputs={"scored": file_fingerprint(args.scored)},
        outputs={"report": file_fingerprint(args.out)}, timer=timer,
        extra={"n_batters": len(by_batter)},
    )
    print(f"report: {len(by_batter)} batters -> {args.out}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .app import build_app, load_scored_dir

    store = ModelStore(args.store)
    seasons = load_scored_dir(args.scored_dir) if args.scored_dir else {}
    app = build_app(
        store.get_role("strike"), store.get_role("contact"), store.get_role("runs"),
        seasons=seasons, frontend_dist=args.frontend,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swingdecision",
        description="Bayesian swing/take decision engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="generate synthetic seasons as a Statcast-style CSV")
    p.add_argument("--out", required=True)
    p.add_argument("--n", type=int, default=20000, help="pitches per season (minimum)")
    p.add_argument("--years", default="2019", help="season or inclusive range lo:hi")
    p.add_argument("--umpires-out", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("ingest", help="parse a pitch CSV into the labeled cache")
    p.add_argument("--csv", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--report", default=None, help="diagnostics text file")
    p.add_argument("--schema", default=None, help="key=value column remapping")
    p.add_argument("--umpires", default=None, help="game_pk,umpire_id join CSV")
    p.add_argument("--event-year", type=int, default=2019)
    p.add_argument("--rex-years", default="2015:2018")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("fit", help="fit one component model and store it")
    p.add_argument("--cache", required=True)
    p.add_argument("--model", choices=("strike", "contact", "runs"), required=True)
    p.add_argument("--store", required=True)
    p.add_argument("--event-year", type=int, default=2019)
    p.add_argument("--rex-years", default="2015:2018")
    _add_chain_flags(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("cv", help="cross-validate the candidate model families")
    p.add_argument("--cache", required=True)
    p.add_argument("--target", choices=("strike", "contact", "runs"), required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--quick", action="store_true", help="small model menu")
    p.add_argument("--event-year", type=int, default=2019)
    p.add_argument("--rex-years", default="2015:2018")
    _add_chain_flags(p)
    p.set_defaults(func=cmd_cv)

    p = sub.add_parser("score", help="score the event season against stored models")
    p.add_argument("--cache", required=True)
    p.add_argument("--store", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--draws-out", default=None, help="per-draw matrix .npz")
    p.add_argument("--n-draws", type=int, default=None)
    p.add_argument("--event-year", type=int, default=2019)
    p.add_argument("--rex-years", default="2015:2018")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("report", help="season aggregates per batter")
    p.add_argument("--scored", required=True)
    p.add_argument("--draws", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--min-pitches", type=int, default=1000)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("serve", help="serve the what-if API")
    p.add_argument("--store", required=True)
    p.add_argument("--scored-dir", default=None)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--frontend", default=None, help="static bundle to mount at /ui")
    p.set_defaults(func=cmd_serve)

    for sp in sub.choices.values():
        sp.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError) as exc:
        print(f"swingdecision {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
