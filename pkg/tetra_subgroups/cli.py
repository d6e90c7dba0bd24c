import argparse
import json
import logging
import textwrap

import pandas as pd

from tetra_subgroups import coloring, config, enumerator, oracle, presentations, stabilizer, table7

logger = logging.getLogger(__name__)

GENERATORS_DISPLAY_WIDTH = 60


def abbreviate_text(text: str, width: int) -> str:
    wrapped_chunks = textwrap.wrap(
        text,
        width=width,
        expand_tabs=False,
        replace_whitespace=False,
        drop_whitespace=False,
    )
    if not wrapped_chunks:
        return ""
    abbreviated = wrapped_chunks[0]
    if len(wrapped_chunks) > 1:
        abbreviated += "..."
    return abbreviated


def _add_target_arguments(parser: argparse.ArgumentParser, index_required: bool = True) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--id", help="catalog id, e.g. t10")
    source.add_argument("--symbol", help="Coxeter symbol p,q,r,s,t,u")
    parser.add_argument(
        "--group", choices=[group.value for group in presentations.Group], default=presentations.Group.full.value
    )
    parser.add_argument("--index", type=int, required=index_required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tetra-subgroups",
        description="Subgroups of small index of tetrahedron groups, up to conjugacy",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--config", help="path to a config.yaml overriding the packaged one")
    commands = parser.add_subparsers(dest="command", required=True)

    list_parser = commands.add_parser("list", help="list the catalog of Coxeter tetrahedra")
    list_parser.add_argument("--geometry", choices=[geometry.value for geometry in presentations.Geometry])
    list_parser.add_argument("--format", choices=config.OUTPUT_FORMATS)

    enumerate_parser = commands.add_parser("enumerate", help="subgroup classes of one index")
    _add_target_arguments(enumerate_parser)
    enumerate_parser.add_argument("--format", choices=config.OUTPUT_FORMATS)
    enumerate_parser.add_argument("--jobs", type=int)

    table_parser = commands.add_parser("table7", help="index 2, 3, 4 counts for t1-t32")
    table_parser.add_argument("--diff", action="store_true", help="compare with the published counts")
    table_parser.add_argument("--id", action="append", help="restrict to these catalog ids")
    table_parser.add_argument("--jobs", type=int)

    verify_parser = commands.add_parser("verify", help="coset-enumerate every class's stabilizer")
    _add_target_arguments(verify_parser)
    verify_parser.add_argument("--max-cosets", type=int)

    coloring_parser = commands.add_parser("coloring", help="export the coloring of one class")
    _add_target_arguments(coloring_parser)
    coloring_parser.add_argument("--class", dest="class_ordinal", type=int, default=1, help="1-based class number")
    coloring_parser.add_argument("--format", choices=("json", "csv"), default="json")

    diff_parser = commands.add_parser("oracle-diff", help="enumerator against brute force, n <= 4")
    _add_target_arguments(diff_parser, index_required=False)
    diff_parser.add_argument("--jobs", type=int)

    return parser


def _presentation(args: argparse.Namespace) -> presentations.Presentation:
    if args.id:
        symbol = presentations.lookup(args.id).symbol
    else:
        symbol = presentations.parse_symbol(args.symbol)
    return presentations.presentation_for(symbol, presentations.Group(args.group))


def _print_json(data: object) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def cmd_list(args: argparse.Namespace, settings: config.Settings) -> int:
    geometry = presentations.Geometry(args.geometry) if args.geometry else None
    entries = [entry.to_json() for entry in presentations.entries_with_geometry(geometry)]
    if (args.format or settings.output_format) == "json":
        _print_json(entries)
    else:
        df = pd.DataFrame.from_records(entries, columns=["id", "symbol", "geometry", "ideal_vertices"])
        print(df.to_string(index=False))
    return 0


def class_report(cls: enumerator.SubgroupClass) -> dict:
    gens = stabilizer.stabilizer_words(cls)
    return {
        "assignment": cls.rep.assignment.to_cycles(),
        "image_type": cls.image_type,
        "labeled_orbit_size": cls.labeled_orbit_size,
        "subgroup_count": cls.subgroup_count,
        "stabilizer_generators": gens.format(),
        "raw_stabilizer_generators": gens.format(simplified=False),
    }


def cmd_enumerate(args: argparse.Namespace, settings: config.Settings) -> int:
    pres = _presentation(args)
    classes = enumerator.enumerate_classes(pres, args.index, jobs=args.jobs or settings.jobs)
    reports = [class_report(cls) for cls in classes]
    if (args.format or settings.output_format) == "json":
        _print_json(
            {
                "symbol": str(pres.symbol),
                "group": str(pres.group),
                "index": args.index,
                "classes": reports,
            }
        )
        return 0

    print(f"{pres.describe()}, index {args.index}: {len(classes)} classes")
    if reports:
        rows = [
            {
                "class": ordinal,
                "assignment": str(cls.rep.assignment),
                "image": report["image_type"],
                "orbit": report["labeled_orbit_size"],
                "subgroups": report["subgroup_count"],
                "generators": abbreviate_text(", ".join(report["stabilizer_generators"]), GENERATORS_DISPLAY_WIDTH),
            }
            for ordinal, (cls, report) in enumerate(zip(classes, reports, strict=True), start=1)
        ]
        print(pd.DataFrame.from_records(rows).to_string(index=False))
    return 0


def cmd_table7(args: argparse.Namespace, settings: config.Settings) -> int:
    if args.id:
        entries = [presentations.lookup(entry_id) for entry_id in args.id]
    else:
        entries = presentations.hyperbolic_entries()
    computed = table7.compute_table(entries, jobs=args.jobs or settings.jobs)
    if not args.diff:
        print(computed.to_string())
        return 0

    report = table7.diff_table(computed, table7.load_expectation())
    print(report.to_frame().to_string(index=False))
    print(report.summary())
    return 0 if report.ok else 1


def cmd_verify(args: argparse.Namespace, settings: config.Settings) -> int:
    pres = _presentation(args)
    max_cosets = args.max_cosets or oracle.default_max_cosets(
        pres, args.index, settings.cosets_per_index_and_generator
    )
    all_verified = True
    for ordinal, cls in enumerate(enumerator.enumerate_classes(pres, args.index), start=1):
        verification = oracle.verify_class(cls.rep, max_cosets=max_cosets)
        if verification.status == oracle.VerificationStatus.inconclusive:
            outcome = "inconclusive"
        elif verification.ok:
            outcome = str(verification.result)
        else:
            outcome = f"{verification.result}, expected closed({args.index})"
        print(f"class {ordinal} [{cls.image_type}] {cls.rep.assignment}: {outcome}")
        all_verified = all_verified and verification.ok
    return 0 if all_verified else 1


def cmd_coloring(args: argparse.Namespace, settings: config.Settings) -> int:
    pres = _presentation(args)
    classes = enumerator.enumerate_classes(pres, args.index)
    if not 1 <= args.class_ordinal <= len(classes):
        raise ValueError(f"class {args.class_ordinal} out of range, index {args.index} has {len(classes)} classes")
    result = coloring.coloring_of(classes[args.class_ordinal - 1])
    if args.format == "csv":
        print(result.to_csv(), end="")
    else:
        _print_json(result.to_json())
    return 0


def cmd_oracle_diff(args: argparse.Namespace, settings: config.Settings) -> int:
    pres = _presentation(args)
    indices = [args.index] if args.index else list(range(1, oracle.MAX_ORACLE_INDEX + 1))
    rows = []
    for n in indices:
        diff = oracle.oracle_diff(pres, n, jobs=args.jobs or settings.jobs)
        rows.append(
            {
                "index": n,
                **{f"enumerated_{key}": value for key, value in diff.enumerated._asdict().items()},
                **{f"brute_force_{key}": value for key, value in diff.brute_force._asdict().items()},
                "agrees": diff.agrees,
            }
        )
    print(pd.DataFrame.from_records(rows).to_string(index=False))
    return 0 if all(row["agrees"] for row in rows) else 1


COMMANDS = {
    "list": cmd_list,
    "enumerate": cmd_enumerate,
    "table7": cmd_table7,
    "verify": cmd_verify,
    "coloring": cmd_coloring,
    "oracle-diff": cmd_oracle_diff,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        settings = config.load_settings(args.config)
    except ValueError as e:
        parser.error(str(e))
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level.upper(), format=settings.log_format
    )
    try:
        return COMMANDS[args.command](args, settings)
    except ValueError as e:
        parser.error(str(e))
