"""
Command-line interface.

    nssp.py enhance IN OUT [--method nssp|subtraction|psc]
    nssp.py mix CLEAN NOISE SNR_DB OUT [--seed-offset N]
    nssp.py eval CLEAN NOISY ENHANCED [CSV_OUT]
    nssp.py spectrogram IN CSV_OUT
    nssp.py batch MANIFEST CSV_OUT [--method ...] [--workers N]

Every command accepts --config PATH, --psi-mode snr|constant:<value>,
--verbose and --quiet. Exit codes: 0 success, 2 usage or configuration,
3 file format or I/O, 4 numeric or degenerate input.
"""
import argparse
import logging
import sys
from typing import List, Optional

from ..audio.wav import read_wav, write_wav
from ..dsp.pipeline import EnhanceMethod, enhance
from ..errors import NsspError
from ..evaluation.metrics import improvement_report
from ..evaluation.mixing import mix_at_snr
from ..evaluation.spectrogram import spectrogram
from ..models.config import EnhancerConfig
from ..orchestrator.batch import run_batch
from ..reporting.csv_export import write_batch_csv, write_metrics_csv, write_spectrogram_csv
from ..reporting.summary import format_batch_summary, format_metrics_report
from ..utils.config_loader import load_config


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 3

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def cmd_enhance(args: argparse.Namespace, config: EnhancerConfig) -> int:
    noisy = read_wav(args.input)
    enhanced = enhance(noisy, config, EnhanceMethod.parse(args.method))
    write_wav(args.output, enhanced)
    logger.info(f"Enhanced {args.input} -> {args.output} ({len(enhanced)} samples, {args.method})")
    return EXIT_OK


def cmd_mix(args: argparse.Namespace, config: EnhancerConfig) -> int:
    clean = read_wav(args.clean)
    noise = read_wav(args.noise)
    noisy = mix_at_snr(clean, noise, args.snr_db, seed_offset=args.seed_offset)
    write_wav(args.output, noisy)
    logger.info(f"Mixed {args.clean} + {args.noise} at {args.snr_db:g} dB -> {args.output}")
    return EXIT_OK


def cmd_eval(args: argparse.Namespace, config: EnhancerConfig) -> int:
    report = improvement_report(
        read_wav(args.clean), read_wav(args.noisy), read_wav(args.enhanced), config.metrics
    )
    print(format_metrics_report(report))
    if args.csv_out:
        write_metrics_csv(args.csv_out, report)
    return EXIT_OK


def cmd_spectrogram(args: argparse.Namespace, config: EnhancerConfig) -> int:
    signal = read_wav(args.input)
    matrix = spectrogram(signal, config.step1.layout1, config.metrics.spectrogram_db_floor)
    write_spectrogram_csv(args.csv_out, matrix)
    return EXIT_OK


def cmd_batch(args: argparse.Namespace, config: EnhancerConfig) -> int:
    rows = run_batch(args.manifest, config, EnhanceMethod.parse(args.method), workers=args.workers)
    write_batch_csv(args.csv_out, rows)
    print(format_batch_summary(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="configuration file (YAML or key = value)")
    common.add_argument("--psi-mode", metavar="MODE",
                        help="phase compensation constant: 'snr' or 'constant:<value>'")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")

    methods = [method.value for method in EnhanceMethod]

    parser = argparse.ArgumentParser(
        prog="nssp",
        description="Two-step speech enhancement: noise-tracking spectral subtraction "
                    "followed by SNR-dependent phase spectrum compensation.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)

    enhance_cmd = commands.add_parser("enhance", parents=[common], help="enhance a noisy WAV file")
    enhance_cmd.add_argument("input")
    enhance_cmd.add_argument("output")
    enhance_cmd.add_argument("--method", choices=methods, default=EnhanceMethod.NSSP.value)
    enhance_cmd.set_defaults(handler=cmd_enhance)

    mix_cmd = commands.add_parser("mix", parents=[common], help="add noise to clean speech at an SNR")
    mix_cmd.add_argument("clean")
    mix_cmd.add_argument("noise")
    mix_cmd.add_argument("snr_db", type=float)
    mix_cmd.add_argument("output")
    mix_cmd.add_argument("--seed-offset", type=int, default=0,
                         help="selects the noise start sample (default: 0)")
    mix_cmd.set_defaults(handler=cmd_mix)

    eval_cmd = commands.add_parser("eval", parents=[common], help="SegSNR and overall SNR improvement")
    eval_cmd.add_argument("clean")
    eval_cmd.add_argument("noisy")
    eval_cmd.add_argument("enhanced")
    eval_cmd.add_argument("csv_out", nargs="?")
    eval_cmd.set_defaults(handler=cmd_eval)

    spec_cmd = commands.add_parser("spectrogram", parents=[common], help="export a dB spectrogram as CSV")
    spec_cmd.add_argument("input")
    spec_cmd.add_argument("csv_out")
    spec_cmd.set_defaults(handler=cmd_spectrogram)

    batch_cmd = commands.add_parser("batch", parents=[common], help="run a manifest of experiments")
    batch_cmd.add_argument("manifest")
    batch_cmd.add_argument("csv_out")
    batch_cmd.add_argument("--method", choices=methods, default=EnhanceMethod.NSSP.value)
    batch_cmd.add_argument("--workers", type=int, default=1, help="parallel cells (default: 1)")
    batch_cmd.set_defaults(handler=cmd_batch)

    return parser


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)


def main(argv: Optional[List[str]] = None) -> int:
    """Run the CLI; returns the process exit code."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose, args.quiet)

    try:
        overrides = {"psi_mode": args.psi_mode} if args.psi_mode else None
        config = load_config(args.config, overrides)
        return args.handler(args, config)
    except NsspError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except OSError as e:
        logger.error(f"I/O error: {e}")
        return EXIT_IO
