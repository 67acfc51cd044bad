import sys
import os
from tempfile import NamedTemporaryFile
from unittest import mock, TestCase

from click.testing import CliRunner

import pygraded.cli.__main__
from pygraded.model.objects.run_report import RunReport
from pygraded.tests.fixtures import downup_4_4_path
from pygraded.tests.utils import delete_log
from pygraded.utilities import PreconditionError
from pygraded.version import __version__


RUN_APPLICATION_PATH = (
    'pygraded.cli.pygraded_cli.PyGradedApplication.run')


def mock_run_application(*args, **kwargs):
    report = RunReport(command='hilbert')
    report.add_verdict('mock', True)
    return report


def mock_failing_application(*args, **kwargs):
    raise PreconditionError('mock precondition')


class TestClickRun(TestCase):

    def test_click_cli_version(self):
        clirunner = CliRunner()
        result = clirunner.invoke(
            pygraded.cli.__main__.pygraded, args="--version")
        self.assertEqual(0, result.exit_code)
        self.assertIn(__version__, result.output)

    def test_unknown_subcommand(self):
        clirunner = CliRunner()
        result = clirunner.invoke(
            pygraded.cli.__main__.pygraded, args=["unknown"])
        self.assertEqual(2, result.exit_code)

    def test_missing_file(self):
        clirunner = CliRunner()
        with clirunner.isolated_filesystem():
            result = clirunner.invoke(
                pygraded.cli.__main__.pygraded,
                args=["hilbert", "missing.alg"])
        self.assertEqual(2, result.exit_code)

    def test_run(self):

        with NamedTemporaryFile() as tmp_file:
            with mock.patch(RUN_APPLICATION_PATH) as mock_app:
                mock_app.side_effect = mock_run_application
                exit_code = pygraded.cli.__main__.run(
                    'hilbert', [downup_4_4_path], {'max_degree': 3},
                    log_name=tmp_file.name)
                self.assertTrue(mock_app.called)
            delete_log(tmp_file.name)

        self.assertEqual(0, exit_code)

    def test_run_error(self):

        with NamedTemporaryFile() as tmp_file:
            with mock.patch(RUN_APPLICATION_PATH) as mock_app:
                mock_app.side_effect = mock_failing_application
                exit_code = pygraded.cli.__main__.run(
                    'hilbert', [downup_4_4_path], {},
                    log_name=tmp_file.name)
            delete_log(tmp_file.name)

        self.assertEqual(2, exit_code)

    def test_run_with_profile(self):

        with NamedTemporaryFile() as tmp_file:
            with mock.patch(RUN_APPLICATION_PATH) as mock_app:
                mock_app.side_effect = mock_run_application
                pygraded.cli.__main__.run(
                    'hilbert', [downup_4_4_path], {},
                    log_name=tmp_file.name, profile=True)
            delete_log(tmp_file.name)

        root = ('pygraded-{}-{}.{}.{}'
                .format(__version__,
                        sys.version_info.major,
                        sys.version_info.minor,
                        sys.version_info.micro))

        exts = ['.pstats', '.prof']
        files_exist = [False] * len(exts)
        for ind, ext in enumerate(exts):
            files_exist[ind] = os.path.isfile(root + ext)
            os.remove(root + ext)
        self.assertTrue(all(files_exist))
