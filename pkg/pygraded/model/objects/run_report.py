import logging

import pandas as pd
from traits.api import (
    HasStrictTraits, Bool, Dict, Float, Instance, Int, List, Str, Tuple)

logger = logging.getLogger(__name__)


class Verdict(HasStrictTraits):
    """Outcome of a single named check"""

    #: Name of the check
    check = Str

    #: Whether the check passed
    passed = Bool

    #: Optional detail, e.g. the first violated window
    detail = Str

    def __repr__(self):
        status = 'PASS' if self.passed else 'FAIL'
        return f"{self.__class__.__name__}({status} {self.check})"

    def to_text(self):
        status = 'PASS' if self.passed else 'FAIL'
        text = f"{status}  {self.check}"
        if self.detail:
            text += f": {self.detail}"
        return text


class RunReport(HasStrictTraits):
    """Structured key: value report produced by every command.
    The text form only depends on the input, the seed and the flags
    unless timing output is requested"""

    #: Echo of the command line
    command = Str

    #: SHA-256 digest of the input files
    digest = Str

    #: Seed used for every random choice
    seed = Int(0)

    #: Named blocks of result lines, in insertion order
    sections = List(Tuple(Str, List(Str)))

    #: Per check verdicts
    verdicts = List(Instance(Verdict))

    #: Elapsed seconds per timed stage
    timing = Dict(Str, Float)

    #: Include timing in the text output
    show_timing = Bool(False)

    def add_section(self, title, lines):
        self.sections.append((title, [str(line) for line in lines]))

    def add_verdict(self, check, passed, detail=''):
        verdict = Verdict(check=check, passed=bool(passed), detail=detail)
        self.verdicts.append(verdict)
        logger.debug(verdict.to_text())
        return verdict

    def extend(self, verdicts):
        for verdict in verdicts:
            self.verdicts.append(verdict)

    @property
    def passed(self):
        return all(verdict.passed for verdict in self.verdicts)

    @property
    def failures(self):
        return [verdict for verdict in self.verdicts if not verdict.passed]

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def to_dataframe(self):
        """Verdict table as a pandas DataFrame"""
        return pd.DataFrame(
            [[verdict.check, verdict.passed, verdict.detail]
             for verdict in self.verdicts],
            columns=['check', 'passed', 'detail'])

    def to_text(self):
        lines = [
            f"command: {self.command}",
            f"input: {self.digest}",
            f"seed: {self.seed}",
        ]
        for title, body in self.sections:
            lines.append(f"{title}:")
            lines += [f"  {line}" for line in body]

        lines.append("verdicts:")
        lines += [f"  {verdict.to_text()}" for verdict in self.verdicts]

        if self.show_timing and self.timing:
            lines.append("timing:")
            lines += [
                f"  {stage}: {round(seconds, 3)} s"
                for stage, seconds in self.timing.items()]

        lines.append(f"status: {'PASS' if self.passed else 'FAIL'}")
        return '\n'.join(lines) + '\n'
