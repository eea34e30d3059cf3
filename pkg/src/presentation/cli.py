"""
Command-line entry point for proxylight.

Subcommands:
    translate   one well-lit image + one exemplar -> one proxy
    generate    a directory of well-lit images + an exemplar pool -> proxy dataset
    sweep       one image pair under several parameter settings -> contact sheet
    eval        prediction maps vs ground truth -> metric report

Exit status: 0 on success (generate and eval may still report
per-entry failures), 1 on I/O or decode errors, 2 on usage or
parameter errors.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from ..application.services import (
    DatasetApplicationService,
    EvaluationApplicationService,
    TranslationApplicationService,
    summary_path
)
from ..core.entities import (
    ABLATION_GAMMA,
    DEFAULT_GAMMA,
    DEFAULT_LAMBDA_L,
    DEFAULT_LAMBDA_U,
    LowLightPool,
    TranslationMode,
    TranslationParams
)
from ..domain.fusion import ablation_grid
from ..domain.imaging import normalize_format
from ..infrastructure.config import EnvironmentConfig, load_config
from ..infrastructure.io import ImageRepository
from ..shared.exceptions import ArgumentError, ImageDecodeError, ImageIOError
from ..shared.logging import LogLevel, StructuredLogger, configure_logging

EXIT_OK = 0
EXIT_RUNTIME = 1
EXIT_USAGE = 2

MODE_CHOICES = ["ours", "fda", "rect", "lowpass"]
FORMAT_CHOICES = ["png", "jpeg"]
SWEEP_PRESETS = ["ablation"]


def _add_common_arguments(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("configuration")
    group.add_argument('--config', type=str,
                       help='Path to YAML config file (env PROXYLIGHT_CONFIG)')
    group.add_argument('--profile', type=str,
                       help='Configuration profile to use (env PROXYLIGHT_PROFILE; default: default)')


def _add_translation_arguments(parser: argparse.ArgumentParser, gamma_default: float = DEFAULT_GAMMA,
                               band: bool = True, suffix_format: bool = False) -> None:
    group = parser.add_argument_group("translation")
    if band:
        _add_band_arguments(group)
    group.add_argument('--gamma', type=float,
                       help=f'Darkening exponent >= 1; 6 for extreme low light (default: {gamma_default})')
    group.add_argument('--format', choices=FORMAT_CHOICES, dest='image_format',
                       help=('Output image format (default: the --out suffix, else png)' if suffix_format
                             else 'Output image format (default: png)'))


def _add_band_arguments(group) -> None:
    group.add_argument('--lambda-l', type=float, dest='lambda_l',
                       help=f'Lower band fraction, 0 <= lambda_l < lambda_u (default: {DEFAULT_LAMBDA_L})')
    group.add_argument('--lambda-u', type=float, dest='lambda_u',
                       help=f'Upper band fraction, lambda_u < 1 (default: {DEFAULT_LAMBDA_U})')
    group.add_argument('--mode', choices=MODE_CHOICES,
                       help='Fusion mode (default: ours)')


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    parser = argparse.ArgumentParser(
        prog='proxylight',
        description='Generate proxy low-light images by band-pass Fourier amplitude fusion'
    )
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    translate = subparsers.add_parser('translate', help='Translate one well-lit image')
    translate.add_argument('--well', required=True, help='Well-lit input image')
    translate.add_argument('--low', required=True, help='Real low-light exemplar image')
    translate.add_argument('--out', required=True, help='Output proxy image')
    translate.add_argument('--dump-spectrum', dest='dump_spectrum',
                           help='Also write the log-scaled fused amplitude (channel 0) as PNG')
    _add_translation_arguments(translate, suffix_format=True)
    _add_common_arguments(translate)

    generate = subparsers.add_parser('generate', help='Generate a proxy dataset')
    generate.add_argument('--well-dir', required=True, dest='well_dir',
                          help='Directory of well-lit images (png/jpg/jpeg)')
    pool = generate.add_mutually_exclusive_group(required=True)
    pool.add_argument('--pool-dir', dest='pool_dir', help='Directory of low-light exemplars')
    pool.add_argument('--pool', nargs='+', help='Explicit low-light exemplar files')
    generate.add_argument('--out-dir', required=True, dest='out_dir',
                          help='Output directory for proxies and manifest.jsonl')
    generate.add_argument('--seed', type=int, help='Base seed of the exemplar draws (default: 0)')
    generate.add_argument('--workers', type=int,
                          help='Worker processes; 1 runs serially (default: all cores)')
    generate.add_argument('--no-progress', action='store_true', dest='no_progress',
                          help='Do not draw a progress bar')
    _add_translation_arguments(generate)
    _add_common_arguments(generate)

    sweep = subparsers.add_parser('sweep', help='Tile translations over a parameter grid')
    sweep.add_argument('--well', required=True, help='Well-lit input image')
    sweep.add_argument('--low', required=True, help='Real low-light exemplar image')
    sweep.add_argument('--out', required=True,
                       help='Contact sheet image; the cell map goes to <stem>.cells.jsonl')
    sweep.add_argument('--preset', choices=SWEEP_PRESETS,
                       help='Named grid (default: ablation when no --cell is given)')
    sweep.add_argument('--cell', action='append', default=[], metavar='LAMBDA_L:LAMBDA_U[:MODE]',
                       help='One grid cell; repeat for more cells')
    sweep.add_argument('--columns', type=int, help='Cells per row (default: ceil(sqrt(cells)))')
    _add_translation_arguments(sweep, gamma_default=ABLATION_GAMMA, band=False, suffix_format=True)
    _add_common_arguments(sweep)

    evaluate = subparsers.add_parser('eval', help='Score prediction maps against ground truth')
    evaluate.add_argument('--pred-dir', required=True, dest='pred_dir', help='Prediction maps')
    evaluate.add_argument('--gt-dir', required=True, dest='gt_dir', help='Ground-truth maps')
    evaluate.add_argument('--out', required=True, help='Report file (JSON lines)')
    evaluate.add_argument('--task', choices=['saliency', 'depth'],
                          help='Metric family (default: saliency)')
    evaluate.add_argument('--beta-sq', type=float, dest='beta_sq',
                          help='F-measure precision weight (default: 0.3)')
    _add_common_arguments(evaluate)

    return parser


def resolve_params(args: argparse.Namespace, config: EnvironmentConfig,
                   gamma: Optional[float] = None) -> TranslationParams:
    """Profile parameters with explicit flags laid over them."""
    params = config.get_translation_params()
    if gamma is not None:
        params = params.replace(gamma=gamma)
    overrides = {
        name: getattr(args, name) for name in ('lambda_l', 'lambda_u', 'gamma', 'mode')
        if getattr(args, name, None) is not None
    }
    if 'mode' in overrides:
        overrides['mode'] = TranslationMode.parse(overrides['mode'])
    return params.replace(**overrides).ensure_valid()


def parse_cell(text: str, gamma: float) -> TranslationParams:
    """``lambda_l:lambda_u[:mode]`` to parameters."""
    parts = text.split(':')
    if len(parts) not in (2, 3):
        raise ArgumentError(f"--cell expects LAMBDA_L:LAMBDA_U[:MODE], got '{text}'")
    try:
        lambda_l, lambda_u = float(parts[0]), float(parts[1])
    except ValueError:
        raise ArgumentError(f"--cell band fractions must be numbers, got '{text}'") from None
    mode = parts[2] if len(parts) == 3 else 'ours'
    return TranslationParams(lambda_l=lambda_l, lambda_u=lambda_u, gamma=gamma, mode=mode).ensure_valid()


_SUFFIX_FORMATS = {".png": "png", ".jpg": "jpeg", ".jpeg": "jpeg"}


def output_format(requested: Optional[str], out_path: str, config: EnvironmentConfig) -> str:
    """
    Format for a single output file: --format, else the file suffix, else the profile.

    Raises:
        ArgumentError: If --format contradicts a png/jpg/jpeg suffix
    """
    inferred = _SUFFIX_FORMATS.get(Path(out_path).suffix.lower())
    if requested and inferred and normalize_format(requested) != normalize_format(inferred):
        raise ArgumentError(f"--format {requested} does not match output file '{out_path}'")
    return requested or inferred or config.get_image_format()


def _format_params(params: TranslationParams) -> str:
    return (f"lambda_l={params.lambda_l:g} lambda_u={params.lambda_u:g} "
            f"gamma={params.gamma:g} mode={params.mode.short_name}")


def run_translate(args: argparse.Namespace, config: EnvironmentConfig) -> int:
    """Translate one image and write the proxy."""
    params = resolve_params(args, config)
    image_format = output_format(args.image_format, args.out, config)
    service = TranslationApplicationService()
    result = service.translate_file(args.well, args.low, args.out, params, image_format)
    if args.dump_spectrum:
        service.dump_spectrum(result, args.dump_spectrum)

    print(_format_params(params))
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    print(f"wrote {args.out}")
    return EXIT_OK


def run_generate(args: argparse.Namespace, config: EnvironmentConfig) -> int:
    """Generate a proxy dataset and write its manifest."""
    params = resolve_params(args, config)
    repository = ImageRepository()
    d_well = repository.list_images(args.well_dir)
    exemplars = repository.list_images(args.pool_dir) if args.pool_dir else list(args.pool)
    pool = LowLightPool(exemplars)

    workers = args.workers if args.workers is not None else config.get_workers()
    if workers < 1:
        raise ArgumentError(f"--workers must be >= 1, got {workers}")
    seed = args.seed if args.seed is not None else config.get_seed()

    service = DatasetApplicationService(
        workers=workers,
        image_format=args.image_format or config.get_image_format(),
        show_progress=not args.no_progress and sys.stderr.isatty()
    )
    manifest = service.generate(d_well, pool, params, seed, args.out_dir)
    print(manifest.summary_line())
    return EXIT_OK


def run_sweep(args: argparse.Namespace, config: EnvironmentConfig) -> int:
    """Write a contact sheet over a parameter grid."""
    if args.preset and args.cell:
        raise ArgumentError("--preset and --cell are mutually exclusive")
    image_format = output_format(args.image_format, args.out, config)
    base = resolve_params(args, config, gamma=ABLATION_GAMMA)
    if args.cell:
        grid = [parse_cell(cell, base.gamma) for cell in args.cell]
    else:
        grid = ablation_grid(gamma=base.gamma)

    service = TranslationApplicationService()
    result = service.sweep(args.well, args.low, grid, columns=args.columns)
    cells_path = service.save_sweep(result, args.out, image_format)
    for cell in result.cells:
        flag = " (degenerate band)" if cell.degenerate_band else ""
        print(f"cell {cell.index}: {_format_params(cell.params)}{flag}")
    print(f"wrote {args.out} and {cells_path}")
    return EXIT_OK


def run_eval(args: argparse.Namespace, config: EnvironmentConfig) -> int:
    """Score prediction maps and write the report."""
    task = args.task or config.get_metrics_task()
    beta_sq = args.beta_sq if args.beta_sq is not None else config.get_beta_sq()
    if beta_sq < 0:
        raise ArgumentError(f"--beta-sq must be >= 0, got {beta_sq}")

    repository = ImageRepository()
    service = EvaluationApplicationService(repository, beta_sq=beta_sq)
    report = service.evaluate(repository.list_images(args.pred_dir),
                              repository.list_images(args.gt_dir), task=task)
    service.write_report(report, args.out)

    for metric, value in sorted(report.summary.items()):
        print(f"{metric}: {value:.6f}")
    print(f"{len(report.pair_ids)} pairs scored, {len(report.skipped)} skipped")
    print(f"wrote {args.out} and {summary_path(args.out)}")
    return EXIT_OK


COMMANDS = {
    'translate': run_translate,
    'generate': run_generate,
    'sweep': run_sweep,
    'eval': run_eval,
}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI.

    Args:
        argv: Arguments without the program name (``sys.argv[1:]`` when omitted)

    Returns:
        int: Process exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK

    log: Optional[StructuredLogger] = None
    try:
        config = load_config(args.config, args.profile)
        log = configure_logging(level=LogLevel.parse(config.get_log_level(), LogLevel.WARNING))
        log.add_context(command=args.command)
        return COMMANDS[args.command](args, config)
    except ArgumentError as e:
        print(f"proxylight {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ImageDecodeError, ImageIOError, OSError) as e:
        if log is not None:
            log.exception("Command failed", exc_info=e)
        print(f"proxylight {args.command}: error: {e}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
