import logging
import os
import sys

import click
from dotenv import load_dotenv

from fastrs.engine.bench import (bench_tables, emit_report, exhaustive_sweep, random_round_trips,
                                 table_check)
from fastrs.engine.codec import RSCode, corrupt, encode_systematic
from fastrs.engine.decoder import decode_first, decode_second
from fastrs.errors import FastRSError, Undecodable
from fastrs.fake import fake_pattern, make_rng
from fastrs.function import dump_symbols, load_pattern, load_symbols, symbol_width
from fastrs.models import CodeParams, CountRow

load_dotenv()


def _flag(value):
    return str(value).lower() not in ('0', 'false', 'no', 'off')


class BaseConfig:
    FASTRS_M = int(os.getenv('FASTRS_M', 8))
    FASTRS_MU = int(os.getenv('FASTRS_MU', 5))
    FASTRS_T0 = os.getenv('FASTRS_T0')
    FASTRS_REDUCTION_POLY = os.getenv('FASTRS_REDUCTION_POLY')
    FASTRS_LOG_LEVEL = os.getenv('FASTRS_LOG_LEVEL', 'INFO')
    FASTRS_BENCH_TRIALS = int(os.getenv('FASTRS_BENCH_TRIALS', 20))
    FASTRS_SEED = int(os.getenv('FASTRS_SEED', 7))
    FASTRS_SECOND_FALLBACK = _flag(os.getenv('FASTRS_SECOND_FALLBACK', 'true'))


class DevelopmentConfig(BaseConfig):
    FASTRS_LOG_LEVEL = os.getenv('FASTRS_LOG_LEVEL', 'DEBUG')


class TestingConfig(BaseConfig):
    TESTING = True
    FASTRS_M = 4  # the (16, 8) toy code
    FASTRS_MU = 3
    FASTRS_T0 = None
    FASTRS_REDUCTION_POLY = None
    FASTRS_LOG_LEVEL = 'WARNING'
    FASTRS_BENCH_TRIALS = 3


class ProductionConfig(BaseConfig):
    FASTRS_LOG_LEVEL = os.getenv('FASTRS_LOG_LEVEL', 'WARNING')


config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
}


def _parse_int(value):
    if value is None or isinstance(value, int):
        return value
    return int(value, 0)


def create_codec(config_name=None, m=None, mu=None, t0=None, reduction_poly=None):
    if config_name is None:
        config_name = os.getenv('FASTRS_CONFIG', 'development')

    cfg = config[config_name]
    settings = {key: getattr(cfg, key) for key in dir(cfg) if key.isupper()}
    if m is not None and m != settings['FASTRS_M']:
        settings['FASTRS_REDUCTION_POLY'] = None
        settings['FASTRS_M'] = m
    if mu is not None:
        settings['FASTRS_MU'] = mu
    if t0 is not None:
        settings['FASTRS_T0'] = t0
    if reduction_poly is not None:
        settings['FASTRS_REDUCTION_POLY'] = reduction_poly
    settings['CONFIG_NAME'] = config_name

    register_logging(settings)

    params = CodeParams(settings['FASTRS_M'], settings['FASTRS_MU'], _parse_int(settings['FASTRS_T0']))
    return RSCode(params, reduction_poly=_parse_int(settings['FASTRS_REDUCTION_POLY']), config=settings)


def register_logging(settings):
    level = getattr(logging, str(settings['FASTRS_LOG_LEVEL']).upper(), logging.INFO)
    logging.basicConfig(format='%(asctime)s %(name)s %(levelname)s: %(message)s')
    logging.getLogger('fastrs').setLevel(level)


class FastRSGroup(click.Group):
    """Click group whose exit codes come from registered error handlers."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.error_handlers = []

    def errorhandler(self, exc_type):
        def decorator(f):
            self.error_handlers.append((exc_type, f))
            return f
        return decorator

    def main(self, args=None, prog_name=None, complete_var=None, standalone_mode=True, **extra):
        try:
            rv = super().main(args=args, prog_name=prog_name, complete_var=complete_var,
                              standalone_mode=False, **extra)
        except click.exceptions.Abort:
            click.echo('Aborted!', err=True)
            sys.exit(1)
        except click.ClickException as exc:
            exc.show()
            sys.exit(1)
        except Exception as exc:
            for exc_type, handler in self.error_handlers:
                if isinstance(exc, exc_type):
                    sys.exit(handler(exc))
            raise
        sys.exit(rv if isinstance(rv, int) else 0)


@click.group(cls=FastRSGroup)
@click.option('--config', 'config_name', default=None, help='Configuration profile (development, testing, production).')
@click.pass_context
def cli(ctx, config_name):
    """Reed-Solomon encode/corrupt/decode over GF(2^m) with counted field arithmetic."""
    ctx.obj = {'config_name': config_name}


def register_errorhandlers(group):
    @group.errorhandler(Undecodable)
    def undecodable(exc):
        click.echo('Undecodable at %s: %s' % (exc.stage, exc), err=True)
        return 2

    @group.errorhandler(FastRSError)
    def library_error(exc):
        click.echo('Error: %s' % exc, err=True)
        return 1

    @group.errorhandler(OSError)
    def io_error(exc):
        click.echo('I/O error: %s' % exc, err=True)
        return 1


def register_commands(group):
    @group.command()
    @click.option('--m', type=int, default=None, help='Field degree (default from config).')
    @click.option('--mu', type=int, default=None, help='Redundancy exponent, n - k = 2^mu.')
    @click.option('--in', 'source', type=click.File('rb'), default='-', help='Raw data symbols.')
    @click.option('--out', 'target', type=click.File('wb'), default='-', help='Codeword SymbolFile.')
    @click.pass_obj
    def encode(obj, m, mu, source, target):
        """Encode raw data symbols into one systematic codeword."""
        code = create_codec(obj['config_name'], m=m, mu=mu)
        params = code.params
        raw = source.read()
        width = symbol_width(params.m)
        if len(raw) % width:
            raise click.UsageError('data length must be a multiple of %d bytes' % width)
        data = [int.from_bytes(raw[i:i + width], 'little') for i in range(0, len(raw), width)]
        if len(data) > params.k:
            raise click.UsageError('at most %d data symbols fit one codeword, got %d' % (params.k, len(data)))
        if any(value >> params.m for value in data):
            raise click.UsageError('data symbol does not fit in %d bits' % params.m)
        data += [0] * (params.k - len(data))
        target.write(dump_symbols(params.m, params.mu, encode_systematic(code, data)))

    @group.command(name='corrupt')
    @click.option('--errors', type=int, default=None, help='Number of random errors to inject.')
    @click.option('--pattern', type=click.File('r'), default=None, help='PatternFile of explicit errors.')
    @click.option('--seed', type=int, default=None, help='Seed for error positions and values.')
    @click.option('--in', 'source', type=click.File('rb'), default='-', help='Codeword SymbolFile.')
    @click.option('--out', 'target', type=click.File('wb'), default='-', help='Received SymbolFile.')
    @click.option('--unsafe-positions', is_flag=True, help='Allow error positions below 2t.')
    @click.pass_obj
    def corrupt_command(obj, errors, pattern, seed, source, target, unsafe_positions):
        """Inject errors into a codeword."""
        if (errors is None) == (pattern is None):
            raise click.UsageError('give exactly one of --errors or --pattern')
        m, mu, codeword = load_symbols(source.read())
        code = create_codec(obj['config_name'], m=m, mu=mu)
        params = code.params
        if pattern is not None:
            chosen = load_pattern(pattern.read())
        else:
            room = params.n - (0 if unsafe_positions else 2 * params.t)
            if not 0 <= errors <= room:
                raise click.UsageError('--errors must lie in [0, %d]' % room)
            if seed is None:
                seed = code.config['FASTRS_SEED']
            chosen = fake_pattern(code, errors, make_rng(seed), unsafe=unsafe_positions)
        received = corrupt(code, codeword, chosen, unsafe=unsafe_positions)
        target.write(dump_symbols(m, mu, received))

    @group.command()
    @click.option('--algo', type=click.Choice(['first', 'second']), default='first', show_default=True,
                  help='Decoding pipeline.')
    @click.option('--t0', type=int, default=None, help='Even truncation for the error-count estimate (default t).')
    @click.option('--in', 'source', type=click.File('rb'), default='-', help='Received SymbolFile.')
    @click.option('--out', 'target', type=click.File('wb'), default='-', help='Repaired SymbolFile.')
    @click.option('--emit-counts', is_flag=True, help='Write the operation counts as CSV to stderr.')
    @click.pass_obj
    def decode(obj, algo, t0, source, target, emit_counts):
        """Repair a received word."""
        m, mu, received = load_symbols(source.read())
        code = create_codec(obj['config_name'], m=m, mu=mu, t0=t0)
        decoder = decode_first if algo == 'first' else decode_second
        result = decoder(code, received)
        target.write(dump_symbols(m, mu, result.codeword))
        if emit_counts:
            params, ctr = code.params, result.counters
            row = CountRow(e=result.error_pattern.e, t=params.t, n=params.n, k=params.k,
                           label='decode_%s_measured' % algo, mul=ctr.mul, add=ctr.add, inv=ctr.inv,
                           source=result.algorithm_tag)
            click.echo(emit_report([row], 'csv'), err=True, nl=False)

    @group.command(name='bench-tables')
    @click.option('--m', type=int, default=8, show_default=True, help='Field degree.')
    @click.option('--mu', type=int, default=5, show_default=True, help='Redundancy exponent.')
    @click.option('--e-max', type=int, default=10, show_default=True, help='Largest error count.')
    @click.option('--format', 'fmt', type=click.Choice(['csv', 'markdown']), default='csv', show_default=True)
    @click.option('--trials', type=int, default=None, help='Random instances per error count.')
    @click.option('--seed', type=int, default=None, help='Seed for the random instances.')
    @click.pass_obj
    def bench_tables_command(obj, m, mu, e_max, fmt, trials, seed):
        """Reproduce the operation-count tables."""
        code = create_codec(obj['config_name'], m=m, mu=mu)
        if trials is None:
            trials = code.config['FASTRS_BENCH_TRIALS']
        if seed is None:
            seed = code.config['FASTRS_SEED']
        if e_max < 1 or trials < 1:
            raise click.UsageError('--e-max and --trials must be positive')
        click.echo(emit_report(bench_tables(code, e_max, trials, seed), fmt), nl=False)

    @group.command()
    @click.option('--seed', type=int, default=None, help='Seed for the random values.')
    @click.pass_obj
    def selftest(obj, seed):
        """Run the exhaustive (16,8) sweep, random (256,224) round trips and the count check."""
        small = create_codec(obj['config_name'], m=4, mu=3)
        if seed is None:
            seed = small.config['FASTRS_SEED']
        click.echo('Sweeping every error pattern of the (16,8) code...')
        total, failures = exhaustive_sweep(small, make_rng(seed))
        click.echo('%d decodes, %d failures' % (total, failures))

        full = create_codec(obj['config_name'], m=8, mu=5)
        click.echo('Random round trips at (256,224)...')
        total, broken = random_round_trips(full, 20, make_rng(seed))
        click.echo('%d decodes, %d failures' % (total, broken))
        failures += broken

        click.echo('Checking I-FDMA counts at (256,224)...')
        mismatches = table_check(full, make_rng(seed))
        for e, measured, expected in mismatches:
            click.echo('e=%d: measured %d, expected %d' % (e, measured, expected), err=True)
        if failures or mismatches:
            raise click.ClickException('selftest failed')
        click.echo('Done.')


register_errorhandlers(cli)
register_commands(cli)


def main():
    cli(prog_name='fastrs')
