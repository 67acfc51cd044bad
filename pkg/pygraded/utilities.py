"""
PyGraded: Graded Noncommutative Algebra Toolkit
UTILITIES ROUTINE

Logging helpers and the exception classes shared by every module.
"""
from functools import wraps
import logging
import time

logger = logging.getLogger(__name__)


class PyGradedError(Exception):

    message = "PyGraded error"

    def __init__(self, message=None):
        if message is not None:
            self.message = message
        super(PyGradedError, self).__init__(self.message)


class NotSupportedError(PyGradedError):

    message = "Method not supported by class"


class DegreeCapError(PyGradedError):

    def __init__(self, degree, cap):
        self.degree = degree
        self.cap = cap
        super(DegreeCapError, self).__init__(
            f"Degree {degree} exceeds the degree cap {cap}")


class BudgetExceededError(PyGradedError):

    def __init__(self, required, budget, unit='words'):
        self.required = required
        self.budget = budget
        super(BudgetExceededError, self).__init__(
            f"Resource budget exceeded: {required} {unit} "
            f"required, budget is {budget}")


class PreconditionError(PyGradedError):

    message = "Precondition failed"


class SamplingError(PyGradedError):

    message = "No valid truncated point module could be sampled"


class ParseError(PyGradedError):

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super(ParseError, self).__init__(
            f"line {line}, column {column}: {message}")


def logo(version):

    logo_text = "\n"
    logo_text += "     ___       ___                    _        _  " + '\n'
    logo_text += "    |  _\\    / __|  _ _   __ _   __| |  ___  __| | " + '\n'
    logo_text += "    |  __/\\/| (_ | | '_| / _` | / _` | / -_)/ _` | " + '\n'
    logo_text += ("    |_|  \\/  \\___| "
                  "|_|   \\__,_| \\__,_| \\___|\\__,_| \n")
    logo_text += "        __/                                      " + '\n'
    logo_text += (
        f"\n    Graded Noncommutative Algebra Toolkit  v{version}\n")

    return logo_text


def log_time(message):
    """Use as a decorator around a callable to automatically record
    elapsed time to the log. Can be personalised with an extra string
    message argument

    Example
    -------

    >>> @log_time(message='TEST')
    >>> def function(x, y):
    >>>     return x * y
    >>> ...
    >>>
    >>> function(2, 3)
    6

    Will produce a log message:

    >>>
    INFO: TOTAL TEST TIME .. s

    """
    def log_time_decorator(func):
        """Decorator around function to be called"""
        @wraps(func)
        def function_wrapper(*args, **kwargs):
            """Actual wrapper around callable, including log
            instructions"""
            start = time.time()

            result = func(*args, **kwargs)

            logger.info(
                f"TOTAL {message.upper()} TIME = "
                f"{round(time.time() - start, 3)} s")

            return result
        return function_wrapper
    return log_time_decorator
