import os
import sys
import logging
import logging.handlers
import argparse
from app.config import LOG_FILE, LOG_LEVEL, get_default_nmax, get_default_jobs
from app.scalars import field_preset
from app.harness import (
    CHECK_NAMES,
    CheckConfig,
    dims_report,
    dump_json,
    emit_report,
    homdim_report,
    mackey_report,
    parse_builtin,
    report_path,
    report_text,
    resolve_symmetries,
    run_suite,
)

# Настройка логирования
log_dir = os.path.dirname(LOG_FILE) or "logs"
if not os.path.exists(log_dir):
    os.makedirs(log_dir)

log_handler = logging.handlers.RotatingFileHandler(
    LOG_FILE,
    maxBytes=10*1024*1024,
    backupCount=5
)
logging.basicConfig(
    level=getattr(logging, LOG_LEVEL, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[log_handler, logging.StreamHandler()]
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hecke",
        description="Exact checks for Hecke symmetries, induced Hecke modules and their quadratic algebras",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--field", default="Q",
                        help="Q, gauss, cyclo3, zero or a constant-first min_poly coefficient list")
    shared.add_argument("--q", default=None, help="Hecke parameter as a constant-first coefficient list, e.g. 2 or 0,1")
    shared.add_argument("--nmax", type=int, default=get_default_nmax(), help="degree bound")
    shared.add_argument("--out", default=None, help="report path; bare names go to REPORT_DIR")
    shared.add_argument("--jobs", type=int, default=get_default_jobs(), help="worker processes")

    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", parents=[shared], help="run the check suite")
    verify.add_argument("--symmetry", default=None, help="name[:params] or path to a .json symmetry")
    verify.add_argument("--symmetry2", default=None, help="R' for pair checks")
    verify.add_argument("--symmetry3", default=None, help="R'' for cotensor and restriction checks")
    verify.add_argument("--checks", default="relations,koszul,hilbert-duality,frobenius",
                        help=f"comma list out of {', '.join(CHECK_NAMES)}")

    homdim = commands.add_parser("homdim", parents=[shared], help="dim Hom(Ind_mu zeta, Ind_lam chi)")
    homdim.add_argument("--lam", required=True)
    homdim.add_argument("--mu", required=True)
    homdim.add_argument("--chi", default="")
    homdim.add_argument("--zeta", default="")

    mackey = commands.add_parser("mackey", parents=[shared], help="Mackey decomposition of Res_mu Ind_lam chi")
    mackey.add_argument("--lam", required=True)
    mackey.add_argument("--mu", required=True)
    mackey.add_argument("--chi", default="")

    dims = commands.add_parser("dims", parents=[shared], help="graded dimensions of S, L, A, E or their duals")
    dims.add_argument("--symmetry", required=True)
    dims.add_argument("--symmetry2", default=None)
    dims.add_argument("--algebra", default="S", help="S, L, A or E with an optional trailing !")
    return parser


def _write(doc: dict, out: str = None) -> None:
    if out:
        path = report_path(out)
        directory = os.path.dirname(path)
        if directory and not os.path.exists(directory):
            os.makedirs(directory)
        with open(path, "w", encoding="utf-8") as f:
            f.write(dump_json(doc))
        logger.info(f"Result written to {path}")
    else:
        sys.stdout.write(dump_json(doc))


def run_verify(args, field_spec) -> int:
    symmetries = tuple(s for s in (args.symmetry, args.symmetry2, args.symmetry3) if s)
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    cfg = CheckConfig(symmetries, field_spec, args.nmax, checks, args.out, args.jobs)
    cfg.validate()
    # симметрии разбираются до запуска, чтобы ошибки ввода давали код 2
    resolve_symmetries(cfg)
    report = run_suite(cfg)
    if args.out:
        emit_report(report, report_path(args.out))
    else:
        sys.stdout.write(report_text(report))
    return EXIT_FAILED if report.exit_code else EXIT_OK


def main() -> int:
    args = build_parser().parse_args()
    logger.info(f"Command {args.command} started")
    try:
        field_spec = field_preset(args.field, args.q)
        if args.command == "verify":
            return run_verify(args, field_spec)
        if args.command == "homdim":
            _write(homdim_report(args.lam, args.mu, args.chi, args.zeta, field_spec), args.out)
        elif args.command == "mackey":
            _write(mackey_report(args.lam, args.mu, args.chi, field_spec), args.out)
        elif args.command == "dims":
            sym = parse_builtin(args.symmetry, field_spec)
            sym_prime = parse_builtin(args.symmetry2, field_spec) if args.symmetry2 else None
            _write(dims_report(sym, args.algebra, args.nmax, sym_prime), args.out)
        return EXIT_OK
    except (ValueError, ZeroDivisionError, OSError) as e:
        logger.error(f"Input error: {e}")
        return EXIT_INPUT
    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        return EXIT_FAILED


if __name__ == '__main__':
    sys.exit(main())
