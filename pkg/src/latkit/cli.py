"""Command line surface for the toolkit.

Subcommands: info, plus-table, op-table, verify, deductive-systems,
export-dot. Lattices come from builtin names (--lattice) or text files
(--file); verify can also sweep a corpus. Exit codes: 0 success, 1 an
asserted check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .complementation import satisfies_dblplus_identity
from .connectives import is_mn_shaped
from .core import (Lattice, is_complemented, is_distributive, is_modular,
                   load_lattice_file)
from .corpus import (ENUM_CAP, default_corpus, entry_for, enumerate_lattices,
                     named_lattice)
from .deduction import (PARTITION_CAP, SUBSET_CAP, all_deductive_systems,
                        ds_lattice_is_boolean_2n, is_compatible_ds)
from .errors import InvalidParameter, LatticeError
from .render import render_op_table, render_plus_table, to_dot
from .report import PropertyReport
from .suite import GALOIS_SAMPLE_PAIRS, corpus_suite, lattice_suite


@dataclass
class RunConfig:
    command: str
    lattice: str | None = None
    file: str | None = None
    corpus: int | None = None
    op: str = "implies"
    fmt: str = "text"
    output: str | None = None
    max_subsets: int = SUBSET_CAP
    max_partitions: int = PARTITION_CAP
    max_elements: int = 64
    seed: int = 0
    lattice_of: bool = False

    def sources(self) -> int:
        return sum(x is not None for x in (self.lattice, self.file, self.corpus))


def _add_source(sub, required: bool = True):
    grp = sub.add_mutually_exclusive_group(required=required)
    grp.add_argument("--lattice", metavar="NAME",
                     help="builtin name: N5, M3, fig2, M:n, B:k, chain:k")
    grp.add_argument("--file", metavar="PATH", help="lattice text file")
    return grp


def _add_output(sub):
    sub.add_argument("--format", dest="fmt", choices=("text", "json"),
                     default="text")
    sub.add_argument("-o", "--output", metavar="PATH", help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latkit",
        description="Finite-lattice toolkit: set-valued complements, unsharp "
                    "connectives, closure structure, deductive systems.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("info", help="size, bounds, predicate tags")
    _add_source(p)
    _add_output(p)

    p = subs.add_parser("plus-table", help="x / x+ / x++ table")
    _add_source(p)
    _add_output(p)

    p = subs.add_parser("op-table", help="implication or conjunction table")
    _add_source(p)
    p.add_argument("--op", choices=("implies", "odot"), required=True)
    _add_output(p)

    p = subs.add_parser("verify", help="run every applicable law check")
    grp = _add_source(p, required=False)
    grp.add_argument("--corpus", type=int, metavar="N",
                     help="all complemented lattices with at most N elements")
    p.add_argument("--max-subsets", type=int, default=SUBSET_CAP,
                   help="largest lattice for deductive-system enumeration")
    p.add_argument("--max-partitions", type=int, default=PARTITION_CAP,
                   help="largest lattice for congruence enumeration")
    p.add_argument("--max-elements", type=int, default=64,
                   help="reject lattices larger than this")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    _add_output(p)

    p = subs.add_parser("deductive-systems", help="enumerate deductive systems")
    _add_source(p)
    p.add_argument("--lattice-of", action="store_true",
                   help="print the inclusion order of the systems")
    _add_output(p)

    p = subs.add_parser("export-dot", help="Hasse diagram as DOT")
    _add_source(p)
    p.add_argument("-o", "--output", metavar="PATH")

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for field in ("lattice", "file", "corpus", "op", "fmt", "output",
                  "max_subsets", "max_partitions", "max_elements", "seed",
                  "lattice_of"):
        if hasattr(args, field):
            setattr(cfg, field, getattr(args, field))
    return cfg


def load_source(cfg: RunConfig) -> Lattice:
    if cfg.lattice is not None:
        lat = named_lattice(cfg.lattice)
    elif cfg.file is not None:
        lat = load_lattice_file(cfg.file)
    else:
        raise InvalidParameter("no lattice source given")
    if lat.n > cfg.max_elements:
        raise InvalidParameter(
            f"lattice has {lat.n} elements, over the cap {cfg.max_elements}")
    return lat


def _emit(cfg: RunConfig, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _set_labels(lat: Lattice, s: frozenset) -> list[str]:
    return [lat.label(x) for x in sorted(s)]


def _braced(lat: Lattice, s: frozenset) -> str:
    return "{" + ",".join(_set_labels(lat, s)) + "}"


# -- subcommands -------------------------------------------------------

def cmd_info(cfg: RunConfig) -> int:
    lat = load_source(cfg)
    tags = []
    tags.append("complemented" if is_complemented(lat) else "not complemented")
    tags.append("modular" if is_modular(lat) else "non-modular")
    tags.append("distributive" if is_distributive(lat) else "non-distributive")
    identity = satisfies_dblplus_identity(lat)
    if identity:
        tags.append("x⁺⁺≈x")
    name = lat.name or (cfg.file or "lattice")
    if cfg.fmt == "json":
        _emit(cfg, json.dumps({
            "name": name, "elements": lat.n,
            "bottom": lat.label(lat.bottom), "top": lat.label(lat.top),
            "covers": len(lat.covers()),
            "complemented": is_complemented(lat), "modular": is_modular(lat),
            "distributive": is_distributive(lat), "dblplus_identity": identity,
        }, ensure_ascii=False, indent=2))
    else:
        lines = [f"lattice {name}: {lat.n} elements, {len(lat.covers())} cover pairs",
                 f"bottom {lat.label(lat.bottom)}, top {lat.label(lat.top)}",
                 "tags: " + ", ".join(tags)]
        _emit(cfg, "\n".join(lines))
    return 0


def cmd_plus_table(cfg: RunConfig) -> int:
    from .complementation import double_plus, plus
    lat = load_source(cfg)
    if cfg.fmt == "json":
        _emit(cfg, json.dumps({
            "elements": [lat.label(x) for x in lat.elements],
            "plus": [_set_labels(lat, plus(lat, frozenset((x,)))) for x in lat.elements],
            "dblplus": [_set_labels(lat, double_plus(lat, frozenset((x,))))
                        for x in lat.elements],
        }, ensure_ascii=False, indent=2))
    else:
        _emit(cfg, render_plus_table(lat))
    return 0


def cmd_op_table(cfg: RunConfig) -> int:
    lat = load_source(cfg)
    if cfg.fmt == "json":
        from .connectives import op_table
        table = op_table(lat, cfg.op)
        _emit(cfg, json.dumps({
            "op": cfg.op,
            "elements": [lat.label(x) for x in lat.elements],
            "cells": [[_set_labels(lat, cell) for cell in row]
                      for row in table.entries],
        }, ensure_ascii=False, indent=2))
    else:
        _emit(cfg, render_op_table(lat, cfg.op))
    return 0


def _verify_results(cfg: RunConfig):
    if cfg.corpus is not None:
        if cfg.corpus > ENUM_CAP:
            raise InvalidParameter(
                f"corpus sweep capped at {ENUM_CAP} elements, got {cfg.corpus}")
        entries = []
        for n in range(2, cfg.corpus + 1):
            for i, lat in enumerate(enumerate_lattices(n, frozenset(("complemented",)))):
                entries.append(entry_for(f"enum{n}.{i}", lat))
        return corpus_suite(entries, cfg.max_subsets, cfg.max_partitions, cfg.seed)
    if cfg.lattice is None and cfg.file is None:
        return corpus_suite(default_corpus(), cfg.max_subsets,
                            cfg.max_partitions, cfg.seed)
    lat = load_source(cfg)
    name = lat.name or (cfg.file or "lattice")
    return [(name, lattice_suite(lat, cfg.max_subsets, cfg.max_partitions,
                                 cfg.seed, GALOIS_SAMPLE_PAIRS))]


def _verify_text(results) -> tuple[str, bool]:
    lines = []
    all_ok = True
    for name, reports in results:
        checks = sum(len(r.results) for r in reports)
        fails = [(r.title, c) for r in reports
                 for c in r.results if c.asserted and not c.passed]
        info = sum(1 for r in reports for c in r.results if not c.asserted)
        if fails:
            all_ok = False
        status = "ok  " if not fails else "FAIL"
        lines.append(f"{status} {name}: {checks} checks, "
                     f"{len(fails)} failures, {info} informational")
        for title, c in fails:
            where = f" [{c.witness}]" if c.witness else ""
            lines.append(f"     {title}: {c.name}{where}")
    lines.append("result: " + ("all asserted checks passed" if all_ok
                               else "asserted checks FAILED"))
    return "\n".join(lines), all_ok


def _report_json(reports: list[PropertyReport]):
    return [{
        "title": r.title,
        "checks": [{"name": c.name, "passed": c.passed, "asserted": c.asserted,
                    "witness": c.witness} for c in r.results],
    } for r in reports]


def cmd_verify(cfg: RunConfig) -> int:
    results = _verify_results(cfg)
    ok = all(r.ok for _, reports in results for r in reports)
    if cfg.fmt == "json":
        _emit(cfg, json.dumps({
            "ok": ok,
            "lattices": [{"name": name, "reports": _report_json(reports)}
                         for name, reports in results],
        }, ensure_ascii=False, indent=2))
    else:
        text, _ = _verify_text(results)
        _emit(cfg, text)
    return 0 if ok else 1


def cmd_deductive_systems(cfg: RunConfig) -> int:
    lat = load_source(cfg)
    dsl = all_deductive_systems(lat, cfg.max_subsets)
    compat = [is_compatible_ds(lat, d) for d in dsl.systems]
    boolean = ds_lattice_is_boolean_2n(lat) if is_mn_shaped(lat) else None

    if cfg.fmt == "json":
        _emit(cfg, json.dumps({
            "lattice": lat.name or (cfg.file or "lattice"),
            "systems": [{"elements": _set_labels(lat, d), "compatible": c}
                        for d, c in zip(dsl.systems, compat)],
            "boolean_2n": boolean,
        }, ensure_ascii=False, indent=2))
        return 0

    lines = [f"{len(dsl.systems)} deductive systems of "
             f"{lat.name or 'the lattice'}:"]
    for i, (d, c) in enumerate(zip(dsl.systems, compat)):
        mark = "  (compatible)" if c else ""
        lines.append(f"  S{i} = {_braced(lat, d)}{mark}")
    if cfg.lattice_of:
        edges = []
        for i, a in enumerate(dsl.systems):
            for j, b in enumerate(dsl.systems):
                if i != j and a < b and not any(
                        a < dsl.systems[k] < b for k in range(len(dsl.systems))):
                    edges.append(f"S{i} < S{j}")
        lines.append("inclusion covers: " + ("; ".join(edges) if edges else "none"))
    if boolean is not None:
        atoms = lat.n - 2
        lines.append(f"boolean with {atoms} atoms: {'yes' if boolean else 'NO'}")
    _emit(cfg, "\n".join(lines))
    return 0


def cmd_export_dot(cfg: RunConfig) -> int:
    lat = load_source(cfg)
    _emit(cfg, to_dot(lat))
    return 0


COMMANDS = {
    "info": cmd_info,
    "plus-table": cmd_plus_table,
    "op-table": cmd_op_table,
    "verify": cmd_verify,
    "deductive-systems": cmd_deductive_systems,
    "export-dot": cmd_export_dot,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    if cfg.command != "verify" and cfg.sources() != 1:
        parser.error("exactly one lattice source required")
    try:
        return COMMANDS[cfg.command](cfg)
    except (LatticeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
