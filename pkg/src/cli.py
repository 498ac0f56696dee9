"""
cli.py - Command-line entry point for the Weyl filtration engine

Subcommands:
    roots     root-system facts
    weylchar  ch Delta(lambda) and its dimension
    klpoly    P_{y,x} for two wall-index words
    lcf       chi_KL(lambda), optionally the LCF-assumed ch L(lambda)
    pfilt     filtration report per lambda
    batch     filtration reports for every lambda up to a bound
    g1        baby Verma / Q^1 / Q# / socle-bound / reciprocity checks

Reports go to standard output (json, csv or text). Errors go to standard
error as one JSON object; the exit code is 1 (domain), 2 (resource) or
3 (consistency).
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, TextIO, Tuple

# Add src to path so imports work
sys.path.insert(0, os.path.dirname(__file__))

import pandas as pd
from dotenv import load_dotenv

from alcove import bruhat_leq, from_word, length, locate, reduced_word, set_interval_cap
from cache_store import KLCacheHandler
from characters import weyl_character, weyl_dimension
from console import print_header, set_verbose, status
from errors import DomainError, EngineError
from g1 import (
    baby_verma_char, check_socle_bound, decompose_g1t, q1_hat_char, q1_hat_terms, q_sharp_char,
    hypothesis_flags, q_sharp_top_weight, reciprocity_mass, set_scan_cap,
)
from klpoly import evaluate_at_one, get_table, kl_polynomial, mu_coefficient
from lcf import LCF_MODE, LCF_READING_NOTE, ch_irreducible, chi_kl, lcf_weights
from pfilt import BASIS_LABELS, batch_verify, decompose_weyl, relabel, report_to_frame, summary_to_frame
from rootdata import (
    CartanType, RootSystem, Weight, build_root_system, check_prime, check_weight, parse_cartan_type,
    root_system_facts, weight_text,
)


# =============================================================================
# CONFIGURATION - Default settings
# =============================================================================

DEFAULT_CONFIG = {
    'format': 'json',
    'interval_cap': 20_000,
    'scan_cap': 200_000,
    'workers': 1,
    'rank_cap': 4,
    'label': 'Delta^red',
    'g1_mode': 'socle',
}

COMMANDS = ('roots', 'weylchar', 'klpoly', 'lcf', 'pfilt', 'batch', 'g1')
KL_COMMANDS = ('klpoly', 'lcf', 'pfilt', 'batch', 'g1')
LCF_COMMANDS = ('lcf', 'pfilt', 'batch', 'g1')
FORMATS = ('json', 'csv', 'text')
G1_MODES = ('verma', 'q1', 'qsharp', 'socle', 'reciprocity')


@dataclass(frozen=True)
class RunConfig:
    command: str
    cartan_type: CartanType
    p: Optional[int] = None
    lambdas: Tuple[Weight, ...] = ()
    bound: Optional[int] = None
    y_word: Tuple[int, ...] = ()
    x_word: Tuple[int, ...] = ()
    descent: Optional[int] = None
    output_format: str = DEFAULT_CONFIG['format']
    cache_dir: Optional[str] = None
    interval_cap: int = DEFAULT_CONFIG['interval_cap']
    scan_cap: int = DEFAULT_CONFIG['scan_cap']
    workers: int = DEFAULT_CONFIG['workers']
    strict: bool = False
    label: str = DEFAULT_CONFIG['label']
    g1_mode: str = DEFAULT_CONFIG['g1_mode']
    db_path: Optional[str] = None
    irreducible: bool = False
    per_weight: bool = False
    include_reports: bool = False
    verbose: bool = False

    @property
    def root_system(self) -> RootSystem:
        return build_root_system(self.cartan_type)


def parse_weight(text: str) -> Weight:
    """'1,0,2' -> (1, 0, 2)."""
    try:
        return tuple(int(c) for c in text.replace(' ', '').split(','))
    except ValueError:
        raise DomainError(f"Cannot read weight {text!r}; use comma-separated integers", text=text)


def parse_word(text: Optional[str]) -> Tuple[int, ...]:
    """'0,1,2' -> (0, 1, 2); empty text is the identity."""
    text = (text or '').replace(' ', '')
    if not text:
        return ()
    try:
        return tuple(int(c) for c in text.split(','))
    except ValueError:
        raise DomainError(f"Cannot read word {text!r}; use comma-separated wall indices", text=text)


def _env_flag(name: str) -> bool:
    return os.getenv(name, '').strip().lower() in ('1', 'true', 'yes', 'on')


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        raise DomainError(f"Environment variable {name} must be an integer, got {value!r}", name=name)


def build_config(args: argparse.Namespace) -> RunConfig:
    """Validate parsed arguments; flags override the environment, which overrides DEFAULT_CONFIG."""
    t = parse_cartan_type(args.type)
    allow_large = getattr(args, 'allow_large', False)
    if not allow_large and (t.rank > DEFAULT_CONFIG['rank_cap'] or t.family in ('E', 'F')):
        raise DomainError(
            f"Type {t} is outside the default range (rank <= {DEFAULT_CONFIG['rank_cap']}, no E/F); "
            f"pass --allow-large to run it anyway",
            cartan_type=str(t),
        )
    rs = build_root_system(t)
    h = rs.coxeter_number

    p = getattr(args, 'p', None)
    command = args.command
    if command in KL_COMMANDS and command != 'klpoly' and p is None:
        raise DomainError(f"The {command} command needs --p", command=command)
    if p is not None:
        check_prime(p)
        if command in LCF_COMMANDS and p < h:
            raise DomainError(f"p = {p} is below the Coxeter number h = {h} of {t}", p=p, h=h)
        if getattr(args, 'strict', False) and p < 2 * h - 2:
            raise DomainError(f"--strict needs p >= 2h-2 = {2 * h - 2}, got p = {p}", p=p, h=h)

    lambdas = tuple(check_weight(rs, parse_weight(text)) for text in (getattr(args, 'lam', None) or []))
    if command in ('weylchar', 'lcf', 'pfilt') and not lambdas:
        raise DomainError(f"The {command} command needs at least one --lambda", command=command)
    if command == 'g1' and args.mode != 'reciprocity' and not lambdas:
        raise DomainError(f"g1 --mode {args.mode} needs at least one --lambda", mode=args.mode)

    interval_cap = args.interval_cap if args.interval_cap is not None else _env_int(
        'WEYLFILT_INTERVAL_CAP', DEFAULT_CONFIG['interval_cap'])
    cache_dir = args.cache_dir if args.cache_dir is not None else (os.getenv('WEYLFILT_CACHE_DIR') or None)

    return RunConfig(
        command=command,
        cartan_type=t,
        p=p,
        lambdas=lambdas,
        bound=getattr(args, 'bound', None),
        y_word=parse_word(getattr(args, 'y', None)),
        x_word=parse_word(getattr(args, 'x', None)),
        descent=getattr(args, 'descent', None),
        output_format=args.format or DEFAULT_CONFIG['format'],
        cache_dir=cache_dir,
        interval_cap=interval_cap,
        scan_cap=args.scan_cap if args.scan_cap is not None else DEFAULT_CONFIG['scan_cap'],
        workers=getattr(args, 'workers', None) or DEFAULT_CONFIG['workers'],
        strict=getattr(args, 'strict', False),
        label=getattr(args, 'label', None) or DEFAULT_CONFIG['label'],
        g1_mode=getattr(args, 'mode', None) or DEFAULT_CONFIG['g1_mode'],
        db_path=getattr(args, 'db', None),
        irreducible=getattr(args, 'irreducible', False),
        per_weight=getattr(args, 'per_weight', False),
        include_reports=getattr(args, 'include_reports', False),
        verbose=args.verbose or _env_flag('WEYLFILT_VERBOSE'),
    )


# =============================================================================
# COMMANDS
# =============================================================================

@dataclass
class CommandResult:
    payload: object
    frame: pd.DataFrame
    lines: List[str]


def _character_rows(label: str, character) -> List[Dict]:
    return [{'lambda': label, 'weight': weight_text(w), 'multiplicity': m} for w, m in character.terms]


def cmd_roots(config: RunConfig) -> CommandResult:
    rs = config.root_system
    facts = root_system_facts(rs)
    facts['weyl_group_order'] = rs.weyl_group_order()
    rows = [
        {
            'index': i,
            'root': weight_text(root),
            'coroot': weight_text(rs.coroot_pairing[i]),
            'height': sum(root),
            'rho_pairing': rs.pairing(rs.rho, i),
        }
        for i, root in enumerate(rs.positive_roots)
    ]
    lines = [
        f"type {rs.cartan_type}: rank {rs.rank}, {rs.num_positive_roots} positive roots, "
        f"h = {rs.coxeter_number}, |W| = {facts['weyl_group_order']}",
        f"highest short root: {weight_text(rs.highest_short_root)}",
    ] + [f"  alpha[{r['index']}] = {r['root']}  coroot {r['coroot']}" for r in rows]
    return CommandResult(facts, pd.DataFrame(rows), lines)


def cmd_weylchar(config: RunConfig) -> CommandResult:
    rs = config.root_system
    payload, rows, lines = [], [], []
    for lam in config.lambdas:
        character = weyl_character(rs, lam)
        payload.append({
            'lambda': list(lam),
            'dimension': weyl_dimension(rs, lam),
            'character': character.to_text(),
        })
        rows.extend(_character_rows(weight_text(lam), character))
        lines.append(f"ch Delta({weight_text(lam)}): dimension {character.dimension}, "
                     f"{len(character.terms)} weights")
    return CommandResult(payload, pd.DataFrame(rows, columns=['lambda', 'weight', 'multiplicity']), lines)


def cmd_klpoly(config: RunConfig) -> CommandResult:
    t = config.cartan_type
    y = from_word(t, config.y_word)
    x = from_word(t, config.x_word)
    poly = kl_polynomial(y, x, descent=config.descent)
    payload = {
        'coxeter_type': t.affine_name,
        'y': list(reduced_word(y)),
        'x': list(reduced_word(x)),
        'length_y': length(y),
        'length_x': length(x),
        'bruhat_leq': bruhat_leq(y, x),
        'coeffs': list(poly.coefficients),
        'polynomial': str(poly),
        'value_at_one': evaluate_at_one(poly),
        'mu': mu_coefficient(y, x),
    }
    frame = pd.DataFrame([{k: (weight_text(v) if isinstance(v, list) else v) for k, v in payload.items()}])
    lines = [f"P_{{{{{weight_text(payload['y'])}}},{{{weight_text(payload['x'])}}}}} = {poly}"]
    return CommandResult(payload, frame, lines)


def cmd_lcf(config: RunConfig) -> CommandResult:
    rs = config.root_system
    p = config.p
    payload, rows, lines = [], [], []
    for lam in config.lambdas:
        x, antidominant = locate(rs, lam, p)
        combination = chi_kl(rs, lam, p)
        entry = {
            'lambda': list(lam),
            'p': p,
            'alcove_word': list(reduced_word(x)),
            'antidominant': list(antidominant),
            'singular': combination.singular,
            'chi_kl': combination.to_json(),
            'mode': LCF_MODE,
            'notes': [LCF_READING_NOTE],
        }
        if config.irreducible:
            irreducible = ch_irreducible(rs, lam, p)
            entry['dimension_L'] = irreducible.dimension
            entry['ch_L'] = irreducible.to_text()
            entry['lcf_weights'] = [list(w) for w in lcf_weights(rs, lam, p)]
        payload.append(entry)
        for mu, c in combination.terms:
            rows.append({'lambda': weight_text(lam), 'mu': weight_text(mu), 'coeff': c})
        terms = ' '.join(f"{c:+d}*chi({weight_text(mu)})" for mu, c in combination.terms)
        lines.append(f"chi_KL({weight_text(lam)}) = {terms}")
    return CommandResult(payload, pd.DataFrame(rows, columns=['lambda', 'mu', 'coeff']), lines)


def _report_lines(report) -> List[str]:
    sections = ', '.join(f"{m}x{report.basis}({weight_text(mu)})" for mu, m in report.sections)
    flags = ' '.join(
        f"{name}={'yes' if getattr(report, name) else 'no'}"
        for name in ('nonnegative', 'residual_zero', 'dimension_identity', 'regular', 'linked')
    )
    return [f"Delta({weight_text(report.lam)}) = {sections}", f"  {flags}"]


def cmd_pfilt(config: RunConfig) -> CommandResult:
    rs = config.root_system
    reports = [relabel(decompose_weyl(rs, lam, config.p, per_weight=config.per_weight), config.label)
               for lam in config.lambdas]
    payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
    frame = pd.concat([report_to_frame(r) for r in reports], ignore_index=True)
    lines = [line for r in reports for line in _report_lines(r)]
    return CommandResult(payload, frame, lines)


def cmd_batch(config: RunConfig) -> CommandResult:
    rs = config.root_system
    bound = config.bound if config.bound is not None else config.p * (config.p - rs.coxeter_number + 2)
    summary = batch_verify(rs, config.p, bound, workers=config.workers)
    if config.label != 'Delta^red':
        summary.reports = [relabel(r, config.label) for r in summary.reports]
    if config.db_path:
        from report_store import ReportStore
        store = ReportStore(config.db_path)
        try:
            store.save_batch(summary)
            status(f"  💾 Saved {len(summary.reports)} reports to: {config.db_path}")
        finally:
            store.close()
    counts = summary.counts()
    lines = [f"{rs.cartan_type}, p = {config.p}, bound = {bound}: "
             + ', '.join(f"{k} {v}" for k, v in counts.items())]
    return CommandResult(summary.to_dict(include_reports=config.include_reports),
                         summary_to_frame(summary), lines)


def cmd_g1(config: RunConfig) -> CommandResult:
    rs = config.root_system
    p = config.p
    mode = config.g1_mode
    flags = hypothesis_flags(rs, p)
    payload, rows, lines = [], [], []

    if mode == 'reciprocity':
        total, expected = reciprocity_mass(rs, p)
        payload = {'cartan_type': str(rs.cartan_type), 'p': p, 'mass': total, 'expected': expected,
                   'holds': total == expected, **flags}
        lines = [f"sum dim L * mass Q^1 = {total}, p^dim g = {expected}"] + flags['notes']
        return CommandResult(payload, pd.DataFrame([payload]), lines)

    for lam in config.lambdas:
        label = weight_text(lam)
        if mode == 'verma':
            character = baby_verma_char(rs, lam, p)
            labels = decompose_g1t(character, p)
            payload.append({'mu': list(lam), 'mass': character.dimension, 'character': character.to_text(),
                            'g1t_labels': [{'weight': list(s), 'multiplicity': m} for s, m in labels], **flags})
            rows.extend(_character_rows(label, character))
            lines.append(f"Z^1({label}): mass {character.dimension}, {len(labels)} composition labels")
        elif mode == 'q1':
            character = q1_hat_char(rs, lam, p)
            terms = q1_hat_terms(rs, lam, p)
            payload.append({'lambda0': list(lam), 'mass': character.dimension,
                            'verma_terms': [{'weight': list(mu), 'multiplicity': m} for mu, m in terms],
                            'character': character.to_text(), **flags})
            rows.extend(_character_rows(label, character))
            lines.append(f"Q^1({label}) = " + ' + '.join(f"{m}xZ^1({weight_text(mu)})" for mu, m in terms))
        elif mode == 'qsharp':
            character = q_sharp_char(rs, lam, p)
            top = q_sharp_top_weight(rs, lam, p)
            payload.append({'lambda': list(lam), 'mass': character.dimension, 'top_weight': list(top),
                            'character': character.to_text(), **flags})
            rows.extend(_character_rows(label, character))
            lines.append(f"Q#({label}): mass {character.dimension}, top weight {weight_text(top)}")
        else:
            holds = check_socle_bound(rs, lam, p)
            payload.append({'mu': list(lam), 'p': p, 'socle_bound': holds, **flags})
            rows.append({'lambda': label, 'socle_bound': holds})
            lines.append(f"nabla_p({label}) <= nabla_red <= Q#: {'yes' if holds else 'no'}")
    return CommandResult(payload, pd.DataFrame(rows), lines + flags['notes'])


HANDLERS: Dict[str, Callable[[RunConfig], CommandResult]] = {
    'roots': cmd_roots,
    'weylchar': cmd_weylchar,
    'klpoly': cmd_klpoly,
    'lcf': cmd_lcf,
    'pfilt': cmd_pfilt,
    'batch': cmd_batch,
    'g1': cmd_g1,
}


# =============================================================================
# RUN
# =============================================================================

def emit(result: CommandResult, output_format: str, out: TextIO) -> None:
    if output_format == 'json':
        out.write(json.dumps(result.payload, indent=2) + "\n")
    elif output_format == 'csv':
        result.frame.to_csv(out, index=False, lineterminator="\n")
    else:
        out.write("\n".join(result.lines) + "\n")


def run(config: RunConfig, out: TextIO = None, err: TextIO = None) -> int:
    """Run one command; returns the exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    set_verbose(config.verbose, err)
    print_header(f"{config.command.upper()} - {config.cartan_type}" + (f", p = {config.p}" if config.p else ''))
    try:
        set_interval_cap(config.interval_cap)
        set_scan_cap(config.scan_cap)
        handler = None
        table = None
        if config.cache_dir and config.command in KL_COMMANDS:
            handler = KLCacheHandler(config.cache_dir)
            table = get_table(config.cartan_type)
            handler.load_table(table)
        result = HANDLERS[config.command](config)
        if handler is not None:
            handler.save_table(table)
        emit(result, config.output_format, out)
    except EngineError as e:
        err.write(json.dumps(e.to_dict(), sort_keys=True) + "\n")
        status(f"  ❌ {type(e).__name__}: {e.message}")
        return e.exit_code
    status("  ✅ Done")
    return 0


# =============================================================================
# COMMAND LINE INTERFACE
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Weyl filtration engine: characters, KL polynomials and p-filtration checks'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    def common(sub, needs_p=True):
        sub.add_argument('--type', required=True, help='Cartan type, e.g. A2, B2, G2')
        if needs_p:
            sub.add_argument('--p', type=int, help='The prime p')
        sub.add_argument('--format', choices=FORMATS, default=None, help='Output format (default json)')
        sub.add_argument('--cache-dir', default=None, help='KL cache directory (env WEYLFILT_CACHE_DIR)')
        sub.add_argument('--interval-cap', type=int, default=None,
                         help='Largest Bruhat interval to enumerate (env WEYLFILT_INTERVAL_CAP)')
        sub.add_argument('--scan-cap', type=int, default=None, help='Largest reciprocity scan box')
        sub.add_argument('--strict', action='store_true', help='Require p >= 2h-2')
        sub.add_argument('--allow-large', action='store_true', help='Allow rank > 4 and types E, F')
        sub.add_argument('--verbose', action='store_true', help='Status lines on standard error')

    def weights(sub, required=False):
        sub.add_argument('--lambda', dest='lam', action='append', required=required,
                         help='Weight as comma-separated fundamental coordinates (repeatable); '
                              'write --lambda=-1,2 for a leading minus sign')

    common(subparsers.add_parser('roots', help='Root-system facts'), needs_p=False)

    sub = subparsers.add_parser('weylchar', help='Weyl character and dimension')
    common(sub, needs_p=False)
    weights(sub)

    sub = subparsers.add_parser('klpoly', help='Kazhdan-Lusztig polynomial P_{y,x}')
    common(sub)
    sub.add_argument('--y', default='', help='Word of y (wall indices, comma-separated)')
    sub.add_argument('--x', default='', help='Word of x (wall indices, comma-separated)')
    sub.add_argument('--descent', type=int, default=None, help='Left descent of x for the top step')

    sub = subparsers.add_parser('lcf', help='Lusztig character formula')
    common(sub)
    weights(sub)
    sub.add_argument('--irreducible', action='store_true', help='Also give the LCF-assumed ch L(lambda)')

    sub = subparsers.add_parser('pfilt', help='Delta^red decomposition report')
    common(sub)
    weights(sub)
    sub.add_argument('--label', choices=BASIS_LABELS, default=None, help='Basis label for the sections')
    sub.add_argument('--per-weight', action='store_true',
                     help='Also list the regular weights below lambda the LCF is needed on')

    sub = subparsers.add_parser('batch', help='Reports for all lambda up to a bound')
    common(sub)
    sub.add_argument('--bound', type=int, default=None,
                     help='Largest <lambda+rho, alpha0^v> (default: the Jantzen bound p(p-h+2))')
    sub.add_argument('--workers', type=int, default=None, help='Worker threads')
    sub.add_argument('--db', default=None, help='SQLite file to store the reports in')
    sub.add_argument('--label', choices=BASIS_LABELS, default=None, help='Basis label for the sections')
    sub.add_argument('--include-reports', action='store_true', help='Put every report in the JSON output')

    sub = subparsers.add_parser('g1', help='G1T characters and checks')
    common(sub)
    weights(sub)
    sub.add_argument('--mode', choices=G1_MODES, default=DEFAULT_CONFIG['g1_mode'], help='What to compute')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point with command-line arguments."""
    load_dotenv()
    args = build_parser().parse_args(argv)
    try:
        config = build_config(args)
    except EngineError as e:
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True) + "\n")
        return e.exit_code
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
