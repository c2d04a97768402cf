"""Command-line surface: detect, synth, mix, verify."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import io as aio
from .analysis import (
    MixingReport,
    membership_table,
    mixing_count,
    segregation_summary,
)
from .build import build_graph
from .errors import AffilcommError, EmptyGraphError
from .graph import VertexKind
from .modularity import modularity
from .optimize import OptimizerConfig, brute_force, detect, greedy
from .synth import SurveyDataset, SynthBlock, SynthConfig, generate_synthetic


def run_pipeline(
    datasets: Sequence[SurveyDataset],
    cfg: OptimizerConfig,
    out_format: str = "json",
    stream: Optional[TextIO] = None,
) -> None:
    """Build, detect, and report each dataset, then the combined summary."""
    stream = stream if stream is not None else sys.stdout
    columns = []
    mixing: dict[str, MixingReport] = {}
    rows: list[str] = []
    kinds: dict[str, VertexKind] = {}
    dropped: dict[str, list[str]] = {}
    for ds in datasets:
        built = build_graph(ds.records, ds.catalog)
        if built.graph.m == 0:
            raise EmptyGraphError(f"dataset {ds.name!r} built an edgeless graph")
        result = detect(built.graph, cfg)
        raw = {
            label: result.partition.community_of(v)
            for label, v in built.attribute_index.items()
        }
        for label in ds.catalog.labels():
            if label not in rows:
                rows.append(label)
                kinds[label] = ds.catalog.kind_of(label)
        dropped[ds.name] = built.dropped_attributes
        columns.append((ds.name, raw, result.score.q))
        mixing[ds.name] = mixing_count(raw, {k: ds.catalog.kind_of(k) for k in raw})
    table = membership_table(rows, kinds, columns, dropped=dropped)
    summary = segregation_summary([(name, mixing[name]) for name, _, _ in columns])
    if out_format == "json":
        stream.write(aio.report_json(table, mixing, summary))
    else:
        stream.write(aio.format_table(table, mixing))
        stream.write("summary: " + ", ".join(f"{n}={c}" for n, c in summary.classification.items()) + "\n")


def _cmd_detect(args: argparse.Namespace) -> int:
    catalog = aio.parse_catalog(args.catalog) if args.catalog else None
    datasets = [aio.parse_incidence_csv(p, catalog=catalog) for p in args.input]
    cfg = OptimizerConfig(
        algorithm={"brute": "brute", "greedy": "greedy", "anneal": "anneal"}[args.algorithm],
        seed=args.seed,
        restarts=args.restarts,
        brute_max_n=args.brute_max_n,
    )
    run_pipeline(datasets, cfg, out_format=args.out)
    return 0


def _parse_block(raw: str) -> SynthBlock:
    parts = raw.split("|")
    if len(parts) != 3:
        raise AffilcommError(
            f"block must be 'affil1,affil2|att1,att2|share', got {raw!r}"
        )
    affs = [x for x in parts[0].split(",") if x]
    atts = [x for x in parts[1].split(",") if x]
    return SynthBlock(affiliations=affs, attitudes=atts, share=float(parts[2]))


def _cmd_synth(args: argparse.Namespace) -> int:
    cfg = SynthConfig(
        seed=args.seed,
        n_actors=args.n_actors,
        blocks=[_parse_block(b) for b in args.block],
        p_in=args.p_in,
        p_out=args.p_out,
    )
    dataset, planted = generate_synthetic(cfg, name=args.name)
    aio.write_incidence_csv(dataset, args.out_records)
    if args.out_catalog:
        aio.write_catalog(dataset.catalog, args.out_catalog)
    if args.out_planted:
        import json

        Path(args.out_planted).write_text(
            json.dumps(planted, indent=2) + "\n", encoding="utf-8"
        )
    print(
        f"wrote {len(dataset.records)} records for {cfg.n_actors} actors "
        f"to {args.out_records}"
    )
    return 0


def _cmd_mix(args: argparse.Namespace) -> int:
    if args.memberships == "table1":
        rows, kinds, columns = aio.load_table1()
    else:
        rows, kinds, columns = aio.parse_membership_csv(args.memberships)
    names = list(columns)
    mixing = {n: mixing_count(columns[n], kinds) for n in names}
    table = membership_table(rows, kinds, [(n, columns[n], None) for n in names])
    summary = segregation_summary([(n, mixing[n]) for n in names])
    sys.stdout.write(aio.report_json(table, mixing, summary))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    catalog = aio.parse_catalog(args.catalog) if args.catalog else None
    dataset = aio.parse_incidence_csv(args.input, catalog=catalog)
    built = build_graph(dataset.records, dataset.catalog)
    exact = brute_force(built.graph, brute_max_n=args.brute_max_n)
    approx = greedy(built.graph)
    gap = exact.score.q - approx.score.q
    print(f"brute-force Q = {exact.score.q:.12f}")
    print(f"greedy      Q = {approx.score.q:.12f}")
    print(f"gap           = {gap:.12f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affilcomm",
        description="Affiliation-network community detection and mixing analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="detect communities in incidence data")
    p.add_argument("--input", action="append", required=True, help="incidence CSV (repeatable)")
    p.add_argument("--catalog", help="catalog sidecar file")
    p.add_argument("--algorithm", choices=["brute", "greedy", "anneal"], default="greedy")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--restarts", type=int, default=5)
    p.add_argument("--brute-max-n", type=int, default=12)
    p.add_argument("--out", choices=["json", "table"], default="json")
    p.set_defaults(func=_cmd_detect)

    p = sub.add_parser("synth", help="generate a planted-block dataset")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-actors", type=int, default=100)
    p.add_argument("--block", action="append", required=True,
                   help="'affil1,affil2|att1,att2|share' (repeatable)")
    p.add_argument("--p-in", type=float, default=0.9)
    p.add_argument("--p-out", type=float, default=0.05)
    p.add_argument("--name", default=None)
    p.add_argument("--out-records", required=True)
    p.add_argument("--out-catalog", default=None)
    p.add_argument("--out-planted", default=None)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("mix", help="mixing analysis of a membership matrix")
    p.add_argument("--memberships", required=True,
                   help="membership CSV, or 'table1' for the bundled fixture")
    p.set_defaults(func=_cmd_mix)

    p = sub.add_parser("verify", help="compare greedy against brute force")
    p.add_argument("--input", required=True)
    p.add_argument("--catalog", default=None)
    p.add_argument("--brute-max-n", type=int, default=12)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AffilcommError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
