"""Developer commands: install, flake8, test, coverage and docs, each
run with the current interpreter."""
import subprocess
import sys

import click

DOCS_DIR = 'docs'
DOCS_REQUIREMENTS = 'docs/requirements.txt'


def python_run(*args, cwd=None):
    return subprocess.call([sys.executable, '-m'] + list(args), cwd=cwd)


def check(returncode, message):
    if returncode:
        raise click.ClickException(
            f"{message} (exit status {returncode})")


@click.group()
def cli():
    pass


@cli.command(help="Installs PyGraded with its test dependencies")
@click.option('--docs/--no-docs', default=False,
              help='Also install the documentation requirements')
def install(docs):
    check(python_run('pip', 'install', '-e', '.[test]'),
          "Installing PyGraded failed")
    if docs:
        check(python_run('pip', 'install', '-r', DOCS_REQUIREMENTS),
              "Installing the documentation requirements failed")


@cli.command(help="Run flake8 over the package and ci")
def flake8():
    check(python_run('flake8', 'pygraded', 'ci', 'setup.py'),
          "Flake8 found problems")


@cli.command(help="Run the unit tests")
@click.option('--verbose/--quiet', default=True, show_default=True)
def test(verbose):
    args = ['unittest', 'discover', '-s', 'pygraded', '-t', '.']
    if verbose:
        args.append('--verbose')
    check(python_run(*args), "There were test failures")


@cli.command(help="Run the unit tests under coverage")
def coverage():
    check(python_run('coverage', 'run', '--source', 'pygraded', '-m',
                     'unittest', 'discover', '-s', 'pygraded', '-t', '.'),
          "There were test failures")
    python_run('coverage', 'report', '-m')


@cli.command(help="Build the HTML documentation")
def docs():
    check(python_run('sphinx', '-b', 'html', 'source', 'build/html',
                     cwd=DOCS_DIR),
          "There were errors while building HTML documentation")


if __name__ == "__main__":
    cli()
