"""
PyGraded: Graded Noncommutative Algebra Toolkit
MAIN ROUTINE

Exit codes: 0 when every check passes, 1 for a verified mathematical
failure, 2 for usage, parse or resource errors.
"""

import logging
import sys

import click

from pygraded.utilities import logo, PyGradedError

from ..version import __version__

from .pygraded_cli import PyGradedApplication

logger = logging.getLogger(__name__)

#: Exit code of usage, parse and resource errors
ERROR_EXIT_CODE = 2

_COMMON_OPTIONS = [
    click.option(
        '--cap', default=8, show_default=True,
        help='Degree cap of the quotient caches'),
    click.option(
        '--budget', default=200000, show_default=True,
        help='Largest number of words handled in a single degree'),
    click.option(
        '--samples', default=100, show_default=True,
        help='Number of random samples or seeds'),
    click.option(
        '--seed', default=0, show_default=True,
        help='Seed of every random choice'),
    click.option(
        '--generic/--no-generic', default=True, show_default=True,
        help='Toggles the generic seed over Q(t)'),
    click.option(
        '--timing', is_flag=True, default=False,
        help='Include elapsed times in the report'),
    click.option(
        '--output', default='',
        help='CSV file receiving the verdict table'),
    click.option(
        '--debug', is_flag=True, default=False,
        help="Prints extra debug information in the log file"),
    click.option(
        '--profile', is_flag=True, default=False,
        help="Run under cProfile, creating .prof and .pstats "
             "files in the current directory."),
    click.option(
        '--log_name', help='PyGraded log filename',
        default='pygraded'),
]


def common_options(func):
    for option in reversed(_COMMON_OPTIONS):
        func = option(func)
    return func


def _g_option(func):
    return click.option(
        '--g', default=None,
        help="Homogeneous element, e.g. 'x*y - 2*y*x'")(func)


def _display_options(func):
    for name, text in reversed([
            ('--x', 'Degree one element of the display g = xy - uyx'),
            ('--y', 'Element y of the display g = xy - uyx'),
            ('--u', 'Nonzero scalar u of the display g = xy - uyx')]):
        func = click.option(name, default=None, help=text)(func)
    return func


_FILE = click.Path(exists=True, dir_okay=False)


@click.group()
@click.version_option(version=__version__)
def pygraded():
    """Verify statements about graded noncommutative algebras"""


@pygraded.command('hilbert')
@click.argument('file_path', type=_FILE)
@click.option('--max-degree', default=6, show_default=True)
@click.option(
    '--expect', default=None,
    help='Comma separated expected dimensions')
@common_options
def hilbert(file_path, max_degree, expect, **common):
    """Hilbert function of an algebra or of U(L)"""
    sys.exit(run('hilbert', [file_path],
                 dict(max_degree=max_degree, expect=expect), **common))


@pygraded.command('minrel')
@click.argument('file_path', type=_FILE)
@click.option('--max-degree', default=6, show_default=True)
@common_options
def minrel(file_path, max_degree, **common):
    """Minimal relation counts per degree"""
    sys.exit(run('minrel', [file_path],
                 dict(max_degree=max_degree), **common))


@pygraded.command('heisenberg')
@click.argument('file_path', type=_FILE)
@_g_option
@_display_options
@common_options
def heisenberg(file_path, g, x, y, u, **common):
    """Check or search for a q'-Heisenberg display of g"""
    sys.exit(run('heisenberg', [file_path],
                 dict(g=g, x=x, y=y, u=u), **common))


@pygraded.command('power-ids')
@click.argument('file_path', type=_FILE)
@_g_option
@click.option('--r', default=3, show_default=True,
              help='Largest power of x checked')
@_display_options
@common_options
def power_ids(file_path, g, r, x, y, u, **common):
    """Commutation identities of x^r and y"""
    sys.exit(run('power-ids', [file_path],
                 dict(g=g, r=r, x=x, y=y, u=u), **common))


@pygraded.command('qv-check')
@click.argument('file_path', type=_FILE)
@_g_option
@common_options
def qv_check(file_path, g, **common):
    """Normality of bold g in the quasi-Veronese algebra"""
    sys.exit(run('qv-check', [file_path], dict(g=g), **common))


@pygraded.command('weyl-witness')
@click.argument('file_path', type=_FILE)
@_g_option
@_display_options
@common_options
def weyl_witness(file_path, g, x, y, u, **common):
    """Weyl algebra relation in the twisted quasi-Veronese algebra"""
    sys.exit(run('weyl-witness', [file_path],
                 dict(g=g, x=x, y=y, u=u), **common))


@pygraded.command('point-extend')
@click.argument('file_path', type=_FILE)
@click.option('--points', required=True,
              help="Point sequence, e.g. '(1:0),(0:1)'")
@common_options
def point_extend(file_path, points, **common):
    """Fiber of next points extending a truncated point module"""
    sys.exit(run('point-extend', [file_path],
                 dict(points=points), **common))


@pygraded.command('torsionfree')
@click.argument('file_path', type=_FILE)
@_g_option
@click.option('--length', default=4, show_default=True,
              help='Module length, i.e. number of points plus one')
@click.option('--tree', default=None,
              help='Write the search tree to this JSON file')
@common_options
def torsionfree(file_path, g, length, tree, **common):
    """Search for a truncated g-torsionfree point module"""
    sys.exit(run('torsionfree', [file_path],
                 dict(g=g, length=length, tree=tree), **common))


@pygraded.command('skew-variety')
@click.argument('file_path', type=_FILE)
@common_options
def skew_variety(file_path, **common):
    """Point variety of a skew polynomial ring"""
    sys.exit(run('skew-variety', [file_path], {}, **common))


@pygraded.command('compare')
@click.argument('first_path', type=_FILE)
@click.argument('second_path', type=_FILE)
@click.option('--length', default=4, show_default=True,
              help='Number of points')
@common_options
def compare(first_path, second_path, length, **common):
    """Compare sampled truncated point modules of two algebras"""
    sys.exit(run('compare', [first_path, second_path],
                 dict(length=length), **common))


@pygraded.command('stabilize')
@click.argument('file_path', type=_FILE)
@click.option('--start', default=3, show_default=True)
@click.option('--stop', default=6, show_default=True)
@common_options
def stabilize(file_path, start, stop, **common):
    """Extension fibers and shifts over a range of point counts"""
    sys.exit(run('stabilize', [file_path],
                 dict(start=start, stop=stop), **common))


@pygraded.command('color-check')
@click.argument('file_path', type=_FILE)
@common_options
def color_check(file_path, **common):
    """Color Lie algebra axioms"""
    sys.exit(run('color-check', [file_path], {}, **common))


@pygraded.command('upresent')
@click.argument('file_path', type=_FILE)
@click.option('--against', type=_FILE, default=None,
              help='Algebra file expected to present U(L)')
@click.option('--save', default=None,
              help='Write the presentation to this algebra file')
@common_options
def upresent(file_path, against, save, **common):
    """Presentation of U(L) on its degree one generators"""
    sys.exit(run('upresent', [file_path],
                 dict(against=against, save=save), **common))


@pygraded.command('nl')
@click.argument('file_path', type=_FILE)
@common_options
def nl(file_path, **common):
    """Bracket length n_L of a color Lie algebra"""
    sys.exit(run('nl', [file_path], {}, **common))


@pygraded.command('koszul')
@click.argument('file_path', type=_FILE)
@click.option('--r', default=None, type=int,
              help='Largest exterior degree, dim L by default')
@click.option('--max-degree', default=6, show_default=True)
@common_options
def koszul(file_path, r, max_degree, **common):
    """Color Koszul complex of U(L)"""
    sys.exit(run('koszul', [file_path],
                 dict(r=r, max_degree=max_degree), **common))


@pygraded.command('heisenberg-extract')
@click.argument('file_path', type=_FILE)
@click.option('--save', default=None,
              help='Write the witness to this JSON file')
@common_options
def heisenberg_extract(file_path, save, **common):
    """q'-Heisenberg element of U(L) from a bracket"""
    sys.exit(run('heisenberg-extract', [file_path],
                 dict(save=save), **common))


@pygraded.command('gaction')
@click.argument('file_path', type=_FILE)
@_g_option
@click.option('--length', default=4, show_default=True,
              help='Number of points')
@common_options
def gaction(file_path, g, length, **common):
    """All-or-nothing action of g on sampled point modules"""
    sys.exit(run('gaction', [file_path],
                 dict(g=g, length=length), **common))


def run(command, file_paths, options, cap=8, budget=200000, samples=100,
        seed=0, generic=True, timing=False, output='', debug=False,
        profile=False, log_name='pygraded'):
    """Run a single command, print its report and return the exit
    code"""

    if profile:
        import cProfile
        import pstats
        profiler = cProfile.Profile()
        profiler.enable()

    if debug:
        level = logging.DEBUG
    else:
        level = logging.INFO

    logging.basicConfig(filename=f"{log_name}.log",
                        filemode="w",
                        level=level)

    logging.info(logo(__version__))

    pygraded_app = PyGradedApplication(
        cap=cap, budget=budget, samples=samples, seed=seed,
        generic=generic, timing=timing, output=output)

    try:
        report = pygraded_app.run(command, file_paths, **options)
        click.echo(report.to_text(), nl=False)
        exit_code = report.exit_code
    except (PyGradedError, IOError) as e:
        logger.exception(f'Error in {command}')
        click.echo(f"error: {e}", err=True)
        exit_code = ERROR_EXIT_CODE

    if profile:
        profiler.disable()
        from sys import version_info
        fname = 'pygraded-{}-{}.{}.{}'.format(__version__,
                                              version_info.major,
                                              version_info.minor,
                                              version_info.micro)

        profiler.dump_stats(fname + '.prof')
        with open(fname + '.pstats', 'w') as fp:
            stats = pstats.Stats(
                profiler, stream=fp).sort_stats('cumulative')
            stats.print_stats()

    return exit_code
