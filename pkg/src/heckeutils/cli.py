"""コマンドラインの入口。

    heckeutils validate A2
    heckeutils localize diagram.json --realization I2_5
    heckeutils jw 3 --color s --generic
    heckeutils jw 5 --at I2_3_signed --rotatable
    heckeutils verify --suite all --realization A2 --threads 4
    heckeutils qnum 5 --color t --binom 2

終了コードは 0 (成功)、1 (検証の失敗か不正な実現)、2 (使い方か入力の誤り)。
"""

import argparse
import dataclasses
import json
import logging
import math
import sys
import typing
from pathlib import Path

import pandas as pd

from . import heckediag, quantum, relations, tl2
from .realization import Realization, RealizationError
from .realizations import builtin, load_realization


__all__ = ['RunConfig', 'build_parser', 'main', 'cmd_validate', 'cmd_localize', 'cmd_jw', 'cmd_verify', 'cmd_qnum']

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FORMATS = ('pretty', 'json')


class UsageError(ValueError):
    """コマンドの引数や入力ファイルの誤り (終了コード 2)。"""


@dataclasses.dataclass
class RunConfig:
    """1 回の実行の設定。

    Parameters
    ----------
    command: str

    realization: Optional[str]
        組み込みの名前か TOML のパス。

    output: Optional[Path]
        省略時は標準出力。

    format: str
        'pretty' か 'json'。

    threads: int

    verbosity: int
        -v の数から -q の数を引いたもの。
    """

    command: str
    realization: typing.Optional[str] = None
    output: typing.Optional[Path] = None
    format: str = 'pretty'
    threads: int = 1
    verbosity: int = 0

    def __post_init__(self):
        if self.format not in FORMATS:
            raise UsageError(f'format must be one of {", ".join(FORMATS)}. format={self.format!r}')
        if self.threads < 1:
            raise UsageError(f'threads must be positive. threads={self.threads}')
        if self.realization is not None and self.realization not in builtin.CATALOG \
                and not Path(self.realization).exists():
            raise UsageError(f'{self.realization!r} is neither a built-in realization nor an existing file')

    @property
    def log_level(self) -> int:
        if self.verbosity >= 2:
            return logging.DEBUG
        if self.verbosity == 1:
            return logging.INFO
        if self.verbosity == 0:
            return logging.WARNING
        return logging.ERROR

    def load_realization(self) -> Realization:
        assert self.realization is not None, 'command {} needs a realization'.format(self.command)
        return load_realization(self.realization)


def _emit(cfg: RunConfig, payload: dict, pretty: str):
    text = json.dumps(payload, sort_keys=True, ensure_ascii=False, indent=2) if cfg.format == 'json' else pretty
    if cfg.output is None:
        print(text)
    else:
        cfg.output.write_text(text + '\n', encoding='utf-8')
        logger.info('wrote %s', cfg.output)


def _fmt(r: typing.Optional[Realization], value) -> str:
    if r is not None and not isinstance(value, (int, bool)):
        try:
            return r.field.format(value)
        except (TypeError, ValueError, AttributeError):
            pass
    return str(value)


def _frame_text(frame: pd.DataFrame) -> str:
    if frame.empty:
        return '(empty)'
    return frame.to_string(index=False)


def _parse_pair(r: Realization, text: typing.Optional[str]) -> typing.Tuple[str, str]:
    if text is None:
        pairs = relations.finite_pairs(r)
        if not pairs:
            raise UsageError(f'realization {r.name} has no pair with finite m')
        return pairs[0][0], pairs[0][1]
    parts = [x.strip() for x in text.split(',')]
    if len(parts) != 2:
        raise UsageError(f'--pair must look like "s,t". pair={text!r}')
    for x in parts:
        r.cox.index(x)
    return parts[0], parts[1]


# ---------------------------------------------------------------------------
# コマンド
# ---------------------------------------------------------------------------

def cmd_validate(cfg: RunConfig) -> int:
    """実現を読み込み、有限の m_{st} ごとに平衡性と span 上の位数を表示する。"""
    try:
        r = cfg.load_realization()
    except RealizationError as e:
        _emit(cfg, {'realization': cfg.realization, 'valid': False, 'error': str(e)},
              f'{cfg.realization}: invalid\n  {e}')
        return EXIT_FAILED
    rows = []
    for s, t, m in relations.finite_pairs(r):
        ms, mt = r.balance_scalar(s, t)
        order = r.order_on_span(s, t)
        xs, xt = quantum.specialization_values(r, s, t)
        rows.append({
            's': s, 't': t, 'm': m,
            '[m-1]_s': _fmt(r, ms), '[m-1]_t': _fmt(r, mt),
            'balanced': bool(r.is_balanced_pair(s, t)),
            'order_on_span': 'inf' if math.isinf(order) else int(order),
            'faithful': bool(order == m),
            'binomials_invertible': quantum.binomials_invertible(r.field, xs, xt, m - 1),
        })
    payload = {
        'realization': r.name,
        'valid': True,
        'rank': r.rank,
        'field': str(r.field),
        'balanced': r.is_balanced(),
        'even_balanced': r.is_even_balanced(),
        'pairs': rows,
    }
    frame = pd.DataFrame(rows, columns=['s', 't', 'm', '[m-1]_s', '[m-1]_t', 'balanced', 'order_on_span', 'faithful',
                                        'binomials_invertible'])
    pretty = '\n'.join([
        f'{r.name}: valid (rank {r.rank}, {r.field})',
        f'balanced: {payload["balanced"]}, even-balanced: {payload["even_balanced"]}',
        _frame_text(frame),
    ])
    _emit(cfg, payload, pretty)
    return EXIT_OK


def cmd_localize(cfg: RunConfig, diagram: Path) -> int:
    """図式の JSON を読み、Λ の行列を出力する。"""
    r = cfg.load_realization()
    d = heckediag.load_diagram(diagram, r)
    mat = heckediag.localize(d, r)
    payload = mat.to_json()
    deg = heckediag.degree(d)
    payload['degree'] = deg
    _emit(cfg, payload, f'{mat}\ndegree: {deg}')
    return EXIT_OK


def cmd_jw(cfg: RunConfig, n: int, color: str, pair: typing.Optional[str] = None,
           rotatable: bool = False, method: str = 'single_clasp') -> int:
    """JW_{n_color} の係数。実現を与えればその対で特殊化する。"""
    if n < 0:
        raise UsageError(f'n must be non-negative. n={n}')
    r = None
    payload = {'n': n, 'color': color, 'method': method}
    if cfg.realization is None:
        f = tl2.jw_generic(n, color, method=method)
        payload['at'] = 'generic'
    else:
        r = cfg.load_realization()
        s, t = _parse_pair(r, pair)
        point = tl2.SpecializationPoint.from_realization(r, s, t)
        payload['at'] = {'realization': r.name, 'pair': [s, t], 'x_s': _fmt(r, point.xs), 'x_t': _fmt(r, point.xt)}
        try:
            f = tl2.jw_specialize(point, n, color, method=method)
        except tl2.JonesWenzlNotFound as e:
            payload.update({'exists': False, 'error': str(e)})
            _emit(cfg, payload, f'JW_{n} ({color}) does not exist: {e}')
            return EXIT_FAILED
        if rotatable:
            payload['rotatable'] = tl2.is_rotatable(point, n)
            if payload['rotatable']:
                payload['rotation_eigenvalue'] = _fmt(r, tl2.rotation_eigenvalue(point, n, color))
    payload['exists'] = True
    payload['terms'] = [{'matching': M.render(), 'coeff': _fmt(r, c)} for M, c in f.items()]
    payload['ptr1'] = _fmt(r, tl2.ptr1(f)) if n >= 1 else None
    frame = pd.DataFrame(payload['terms'], columns=['matching', 'coeff'])
    lines = [f'JW_{n} ({color}, {len(payload["terms"])} terms, catalan={tl2.catalan(n)})', _frame_text(frame)]
    if payload['ptr1'] is not None:
        lines.append(f'ptr1: {payload["ptr1"]}')
    if 'rotatable' in payload:
        lines.append(f'rotatable: {payload["rotatable"]}')
        if 'rotation_eigenvalue' in payload:
            lines.append(f'rotation eigenvalue: {payload["rotation_eigenvalue"]}')
    _emit(cfg, payload, '\n'.join(lines))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, suite: str, zamo_b3: typing.Optional[Path] = None, timing: bool = False) -> int:
    """スイートを検証する。すべて通れば 0、1 つでも失敗すれば 1。"""
    r = cfg.load_realization()
    cases = relations.build_suite(suite, r)
    if zamo_b3 is not None:
        cases.append(relations.load_zamolodchikov_pair(zamo_b3, r))
    if not cases:
        raise UsageError(f'suite {suite!r} has no case for realization {r.name}')
    report = relations.verify(cases, threads=cfg.threads)
    payload = report.to_json(include_timing=timing)
    payload['realization'] = r.name
    payload['suite'] = suite
    frame = report.to_frame()
    if not timing:
        frame = frame.drop(columns=['seconds'])
    lines = [f'{r.name} / {suite}: {report}', _frame_text(frame)]
    for res in report.failures:
        lines.append(f'{res.name}: {res.error or ""}')
        for d in res.diffs:
            lines.append(f'  [{d["row"]}, {d["col"]}] lhs={d["lhs"]} rhs={d["rhs"]}')
    _emit(cfg, payload, '\n'.join(lines))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_qnum(cfg: RunConfig, n: int, color: str, binom: typing.Optional[int] = None,
             pair: typing.Optional[str] = None) -> int:
    """[n]_color か [n k]_color。実現を与えればその対で評価する。"""
    label = f'[{n}]_{color}' if binom is None else f'[{n} {binom}]_{color}'
    value = quantum.qnum(n, color) if binom is None else quantum.qbinom(n, binom, color)
    payload = {'n': n, 'color': color, 'binom': binom, 'generic': str(value)}
    lines = [f'{label} = {value}']
    if cfg.realization is not None:
        r = cfg.load_realization()
        s, t = _parse_pair(r, pair)
        if binom is None:
            special = quantum.qnum_specialized(r, (s, t), n, color)
        else:
            special = quantum.qbinom_specialized(r, (s, t), n, binom, color)
        special = _fmt(r, special)
        payload['at'] = {'realization': r.name, 'pair': [s, t], 'value': special}
        lines.append(f'at {r.name} ({s}, {t}): {special}')
    _emit(cfg, payload, '\n'.join(lines))
    return EXIT_OK


# ---------------------------------------------------------------------------
# 引数
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    epilog = 'built-in realizations: ' + ', '.join(builtin.builtin_names())
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0, help='more logging (repeatable)')
    common.add_argument('-q', '--quiet', action='count', default=0, help='less logging (repeatable)')
    common.add_argument('--format', choices=FORMATS, default='pretty', help='output format (default: pretty)')
    common.add_argument('-o', '--output', type=Path, default=None, help='write the result to a file')

    parser = argparse.ArgumentParser(
        prog='heckeutils',
        description='localization of the diagrammatic Hecke category and relation checks',
        epilog=epilog,
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('validate', parents=[common], help='check a realization', epilog=epilog)
    p.add_argument('realization', help='built-in name or TOML path')

    p = sub.add_parser('localize', parents=[common], help='evaluate a diagram', epilog=epilog)
    p.add_argument('diagram', type=Path, help='diagram JSON')
    p.add_argument('-r', '--realization', required=True, help='built-in name or TOML path')

    p = sub.add_parser('jw', parents=[common], help='Jones-Wenzl projector', epilog=epilog)
    p.add_argument('n', type=int)
    p.add_argument('--color', choices=quantum.COLORS, default='s', help='rightmost region color (default: s)')
    where = p.add_mutually_exclusive_group()
    where.add_argument('--at', dest='realization', default=None, help='specialize at a realization')
    where.add_argument('--generic', action='store_true', help='generic coefficients (default)')
    p.add_argument('--pair', default=None, help='"s,t" (default: first pair with finite m)')
    p.add_argument('--rotatable', action='store_true', help='check rotatability')
    p.add_argument('--method', choices=('single_clasp', 'two_sided'), default='single_clasp')

    p = sub.add_parser('verify', parents=[common], help='run relation suites', epilog=epilog)
    p.add_argument('--suite', default='all', choices=['all'] + list(relations.SUITES))
    p.add_argument('-r', '--realization', required=True, help='built-in name or TOML path')
    p.add_argument('--zamo-b3', type=Path, default=None, help='JSON with a user supplied Zamolodchikov pair')
    p.add_argument('-j', '--threads', type=int, default=1)
    p.add_argument('--timing', action='store_true', help='include timings (output is then not reproducible)')

    p = sub.add_parser('qnum', parents=[common], help='two-colored quantum numbers', epilog=epilog)
    p.add_argument('n', type=int)
    p.add_argument('--color', choices=quantum.COLORS, default='s')
    p.add_argument('--binom', type=int, default=None, metavar='K')
    p.add_argument('--at', dest='realization', default=None, help='evaluate at a realization')
    p.add_argument('--pair', default=None, help='"s,t" (default: first pair with finite m)')
    return parser


def _run(args) -> int:
    cfg = RunConfig(
        command=args.command,
        realization=getattr(args, 'realization', None),
        output=args.output,
        format=args.format,
        threads=getattr(args, 'threads', 1),
        verbosity=args.verbose - args.quiet,
    )
    logging.basicConfig(level=cfg.log_level, format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    if cfg.command == 'validate':
        return cmd_validate(cfg)
    if cfg.command == 'localize':
        return cmd_localize(cfg, args.diagram)
    if cfg.command == 'jw':
        return cmd_jw(cfg, args.n, args.color, pair=args.pair, rotatable=args.rotatable, method=args.method)
    if cfg.command == 'verify':
        return cmd_verify(cfg, args.suite, zamo_b3=args.zamo_b3, timing=args.timing)
    if cfg.command == 'qnum':
        return cmd_qnum(cfg, args.n, args.color, binom=args.binom, pair=args.pair)
    raise UsageError(f'unknown command {cfg.command!r}')


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except RealizationError as e:
        print(f'error: invalid realization: {e}', file=sys.stderr)
        return EXIT_FAILED
    except (tl2.JonesWenzlNotFound, tl2.NotRotatable) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_FAILED
    except (UsageError, ValueError, quantum.IntegralityError, OSError) as e:
        print(f'error: {e}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
