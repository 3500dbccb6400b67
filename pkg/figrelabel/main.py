"""
figrelabel command line

    figrelabel extract <eps> [--format tsv|json]
    figrelabel check <eps> --spec <file>
    figrelabel apply <eps> --spec <file> -o <out.eps>

stdout carries only the requested artifact; diagnostics go to stderr.
"""

from pathlib import Path
from typing import List, Optional
import argparse
import sys

from pydantic import ValidationError

from figrelabel import __version__
from figrelabel.config.settings import AppConfig, SaveRestoreMode, UnknownOperatorMode, VmConfig
from figrelabel.core.constants import EXIT_IO_ERROR, EXIT_OK, EXIT_PARSE_ERROR, EXIT_UNMATCHED
from figrelabel.core.error_codes import get_error_message
from figrelabel.core.exceptions import FigRelabelError
from figrelabel.core.logging import get_logger, setup_logging
from figrelabel.schemas.cli import CliOptions
from figrelabel.schemas.listing import CheckStatus
from figrelabel.services.check_service import check_spec, render_check_report
from figrelabel.services.emit import emit_label_listing, emit_relabeled_eps, emit_tex_overlay, resolve
from figrelabel.services.figure_service import analyze_figure, load_spec, read_bytes, write_bytes

logger = get_logger(__name__)


# ----------------------------------------------------------------- parser

def _add_common_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input_path", metavar="eps", help="EPS or PostScript figure")
    parser.add_argument("-o", "--output", dest="output_path", default=None, help="Output file (default: stdout)")
    parser.add_argument(
        "--compat-save-restore",
        action="store_true",
        help="Neutered save/restore: save pushes false, restore pops one operand",
    )
    parser.add_argument("--permissive", action="store_true", help="Skip undefined names with a warning")
    parser.add_argument("--max-steps", type=int, default=None, help="Interpreter step budget")
    parser.add_argument("--config", dest="config_path", default=None, help="YAML config file")
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR or CRITICAL")


def _add_spec_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--spec", dest="spec_path", default=None, help="Relabel spec file")
    parser.add_argument("--lenient", action="store_true", help="Unmatched labels do not fail the run")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figrelabel",
        description="Extract and replace text labels in EPS figures",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    extract = commands.add_parser("extract", help="List label strings and their anchors")
    _add_common_args(extract)
    extract.add_argument("--format", choices=("tsv", "json"), default=None, help="Listing format")
    extract.set_defaults(func=run_extract)

    check = commands.add_parser("check", help="Report which spec labels the figure contains")
    _add_common_args(check)
    _add_spec_args(check)
    check.set_defaults(func=run_check)

    apply = commands.add_parser("apply", help="Write the relabeled figure")
    _add_common_args(apply)
    _add_spec_args(apply)
    apply.add_argument(
        "--keep-unmatched-labels",
        action="store_true",
        help="Only hide labels that are replaced; other figure text still paints",
    )
    apply.add_argument("--emit-overlay", default=None, help="Also write placement coordinates to this file")
    apply.set_defaults(func=run_apply)
    return parser


def options_from_args(args: argparse.Namespace) -> CliOptions:
    fields = {
        key: value
        for key, value in vars(args).items()
        if key in CliOptions.model_fields and value is not None
    }
    return CliOptions(**fields)


# ------------------------------------------------------------------ setup

def vm_config_for(opts: CliOptions, config: AppConfig) -> VmConfig:
    """CLI flags layered over the configured interpreter settings."""
    update = {}
    if opts.compat_save_restore:
        update["save_restore_mode"] = SaveRestoreMode.NEUTERED
    if opts.permissive:
        update["unknown_operator_mode"] = UnknownOperatorMode.PERMISSIVE_NOOP
    if opts.max_steps is not None:
        update["max_steps"] = opts.max_steps
    return config.vm.model_copy(update=update)


def _write_output(opts: CliOptions, data: bytes) -> None:
    if opts.output_path:
        write_bytes(opts.output_path, data)
        logger.info(f"wrote {opts.output_path}")
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _unmatched_status(opts: CliOptions, unmatched: List[str]) -> int:
    if not unmatched:
        return EXIT_OK
    for old in unmatched:
        logger.warning(f"relabel target '{old}' not found in {opts.input_path}")
    return EXIT_OK if opts.lenient else EXIT_UNMATCHED


# --------------------------------------------------------------- commands

def run_extract(opts: CliOptions, config: AppConfig) -> int:
    analysis = analyze_figure(read_bytes(opts.input_path), vm_config_for(opts, config))
    listing = emit_label_listing(analysis.table, opts.format or config.listing_format)
    _write_output(opts, listing.encode("utf-8"))
    return EXIT_OK


def _load_spec_for(opts: CliOptions):
    spec = load_spec(opts.spec_path)
    if Path(spec.figure).name != Path(opts.input_path).name:
        logger.warning(f"spec names figure '{spec.figure}' but input is '{opts.input_path}'")
    return spec


def run_check(opts: CliOptions, config: AppConfig) -> int:
    spec = _load_spec_for(opts)
    analysis = analyze_figure(read_bytes(opts.input_path), vm_config_for(opts, config))
    rows = check_spec(spec, analysis.table)
    _write_output(opts, render_check_report(rows).encode("utf-8"))
    missing = [row.old for row in rows if row.status is CheckStatus.NOT_FOUND]
    return _unmatched_status(opts, missing)


def run_apply(opts: CliOptions, config: AppConfig) -> int:
    spec = _load_spec_for(opts)
    analysis = analyze_figure(read_bytes(opts.input_path), vm_config_for(opts, config))
    plan = resolve(spec, analysis.table, analysis.meta, opts.keep_unmatched_labels)
    _write_output(opts, emit_relabeled_eps(analysis.source, plan, spec))
    if opts.emit_overlay:
        write_bytes(opts.emit_overlay, emit_tex_overlay(plan).encode("utf-8"))
    missing = [old.decode("latin-1") for old in plan.unmatched]
    return _unmatched_status(opts, missing)


# ------------------------------------------------------------------- main

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        opts = options_from_args(args)
    except ValidationError as exc:
        parser.error("; ".join(error["msg"] for error in exc.errors()))

    try:
        config = AppConfig.load(opts.config_path)
    except FileNotFoundError as exc:
        setup_logging("WARNING")
        logger.error(str(exc))
        return EXIT_IO_ERROR
    except ValidationError as exc:
        setup_logging("WARNING")
        logger.error(f"invalid configuration: {exc}")
        return EXIT_PARSE_ERROR

    setup_logging(opts.log_level or config.log_level, config.log_file, config.colored_log)

    with logger.contextualize(figure=opts.input_path):
        try:
            return args.func(opts, config)
        except FigRelabelError as exc:
            logger.error(str(exc))
            action = get_error_message(exc.code).get("action")
            if action:
                logger.error(f"hint: {action}")
            return exc.exit_status
        except Exception as exc:
            logger.exception(f"unhandled error: {exc}")
            return EXIT_PARSE_ERROR


if __name__ == "__main__":
    sys.exit(main())
