"""
PyGraded: Graded Noncommutative Algebra Toolkit
COMMAND RUNNERS

Every subcommand is a method of PyGradedApplication returning a
RunReport; dispatch maps subcommand names onto these methods.
"""
import logging
import os

from traits.api import HasStrictTraits, Instance, Str

from pygraded.io.algebra_io import save_algebra
from pygraded.io.color_lie_io import load_color_lie
from pygraded.io.object_io import save_witness
from pygraded.io.report_io import save_search_tree, save_verdict_table
from pygraded.io.utilities import file_digest
from pygraded.model.core.scalars import format_scalar, parse_scalar
from pygraded.model.objects.color_lie_algebra import check_color_axioms
from pygraded.model.objects.heisenberg_witness import HeisenbergWitness
from pygraded.model.objects.quotient_cache import (
    hilbert, minimal_relation_degrees, presentations_equal)
from pygraded.model.objects.run_report import RunReport
from pygraded.model.objects.truncated_point_module import (
    format_point, parse_points)
from pygraded.model.tools.color_presentations import (
    heisenberg_from_color, n_l, u_presentation)
from pygraded.model.tools.koszul import koszul_complex, koszul_verify
from pygraded.model.tools.normal_elements import (
    check_power_identities, find_heisenberg_witness, is_q_heisenberg)
from pygraded.model.tools.pbw import EnvelopingAlgebra
from pygraded.model.tools.point_geometry import (
    extension_fiber, is_truncated_point_module)
from pygraded.model.tools.point_sampling import (
    compare_point_sets, g_action_check, stabilization_check)
from pygraded.model.tools.skew_variety import (
    skew_omega, skew_point_variety)
from pygraded.model.tools.torsionfree_search import TorsionfreeSearch
from pygraded.model.tools.twisting import verify_bold_normal, weyl_witness
from pygraded.pygraded_runner import GradedRunner
from pygraded.utilities import (
    NotSupportedError, ParseError, PreconditionError)

logger = logging.getLogger(__name__)

#: Subcommand name to PyGradedApplication method
COMMANDS = {
    'hilbert': 'run_hilbert',
    'minrel': 'run_minrel',
    'heisenberg': 'run_heisenberg',
    'power-ids': 'run_power_ids',
    'qv-check': 'run_qv_check',
    'weyl-witness': 'run_weyl_witness',
    'point-extend': 'run_point_extend',
    'torsionfree': 'run_torsionfree',
    'skew-variety': 'run_skew_variety',
    'compare': 'run_compare',
    'stabilize': 'run_stabilize',
    'color-check': 'run_color_check',
    'upresent': 'run_upresent',
    'nl': 'run_nl',
    'koszul': 'run_koszul',
    'heisenberg-extract': 'run_heisenberg_extract',
    'gaction': 'run_gaction',
}


def parse_dimensions(text):
    """Comma separated dimensions such as '1,2,4'"""
    dimensions, column = [], 1
    for value in text.split(','):
        if not value.strip().isdigit():
            raise ParseError(
                f"Expected a dimension, got '{value.strip()}'", 1, column)
        dimensions.append(int(value))
        column += len(value) + 1
    return dimensions


def command_echo(command, file_paths, options):
    """Deterministic echo of a command line: file base names followed
    by the options that were set, sorted by name"""
    words = [command]
    words += [os.path.basename(file_path) for file_path in file_paths]
    for key, value in sorted(options.items()):
        if value is None or value is False:
            continue
        flag = '--' + key.replace('_', '-')
        words.append(flag if value is True else f"{flag} {value}")
    return ' '.join(words)


class PyGradedApplication(HasStrictTraits):
    """Command line application running a single PyGraded command"""

    #: Shared parameters, caches and seeded generators
    runner = Instance(GradedRunner)

    #: Optional CSV file receiving the verdict table
    output = Str

    def __init__(self, cap=8, budget=200000, samples=100, seed=0,
                 generic=True, timing=False, **traits):

        runner = GradedRunner(
            cap=cap, budget=budget, samples=samples, seed=seed,
            generic=generic, timing=timing)

        super(PyGradedApplication, self).__init__(
            runner=runner, **traits)

    def _parse_g(self, presentation, g):
        if not g:
            raise PreconditionError("An element g is required (--g)")
        return presentation.parse(g)

    def _witness(self, cache, g, x=None, y=None, u=None):
        """Witness given explicitly by x, y and u, or searched for"""
        presentation = cache.presentation
        if x is not None or y is not None or u is not None:
            if None in (x, y, u):
                raise PreconditionError(
                    "--x, --y and --u must be given together")
            try:
                return HeisenbergWitness(
                    g, presentation.parse(x), presentation.parse(y),
                    parse_scalar(u, presentation.domain),
                    presentation.domain)
            except ValueError as e:
                raise PreconditionError(str(e)) from e

        witness = self.runner.timed(
            'witness search', find_heisenberg_witness, cache, g,
            rng=self.runner.rng())
        if witness is not None:
            logger.info(
                f"Witness {witness.format(presentation.generators)}")
        return witness

    def _required_witness(self, cache, g, **display):
        witness = self._witness(cache, g, **display)
        if witness is None:
            raise PreconditionError(
                "No q'-Heisenberg display g = xy - uyx was found")
        return witness

    def run_hilbert(self, report, file_paths, max_degree=6, expect=None):
        presentation = self.runner.load_presentation(file_paths[0])
        dims = self.runner.timed(
            'hilbert', hilbert, presentation, max_degree,
            budget=self.runner.budget)
        report.add_section('hilbert', [', '.join(map(str, dims))])

        if expect:
            expected = parse_dimensions(expect)
            report.add_verdict(
                'hilbert function', dims[:len(expected)] == expected,
                f"expected {', '.join(map(str, expected))}")

    def run_minrel(self, report, file_paths, max_degree=6):
        file_name = file_paths[0]
        presentation = self.runner.load_presentation(file_name)
        counts = self.runner.timed(
            'minimal relations', minimal_relation_degrees, presentation,
            max_degree, budget=self.runner.budget)
        report.add_section('minimal relations', [
            f"degree {degree}: {count}"
            for degree, count in sorted(counts.items())] or ['none'])

        if file_name.endswith('.cl'):
            bound = 2 * n_l(load_color_lie(file_name)) - 1
            top = max(counts, default=0)
            report.add_verdict(
                'relation degree bound', top <= bound,
                f"max degree {top}, 2 n_L - 1 = {bound}")

    def run_heisenberg(self, report, file_paths, g=None, x=None, y=None,
                       u=None):
        presentation = self.runner.load_presentation(file_paths[0])
        g = self._parse_g(presentation, g)
        cache = self.runner.build_cache(presentation)

        witness = self._witness(cache, g, x=x, y=y, u=u)
        if witness is None:
            report.add_verdict(
                "q'-Heisenberg witness", False,
                'no display g = xy - uyx found')
            return

        report.add_section(
            'witness', [witness.format(presentation.generators)])
        _, verdicts = is_q_heisenberg(cache, witness)
        report.extend(verdicts)

    def run_power_ids(self, report, file_paths, g=None, r=3, x=None,
                      y=None, u=None):
        presentation = self.runner.load_presentation(file_paths[0])
        g = self._parse_g(presentation, g)
        cache = self.runner.build_cache(
            presentation, max(self.runner.cap, r + g.degree))
        witness = self._required_witness(cache, g, x=x, y=y, u=u)
        report.add_section(
            'witness', [witness.format(presentation.generators)])
        _, verdicts = check_power_identities(cache, witness, r)
        report.extend(verdicts)

    def run_qv_check(self, report, file_paths, g=None):
        presentation = self.runner.load_presentation(file_paths[0])
        g = self._parse_g(presentation, g)
        cache = self.runner.build_cache(presentation)
        _, verdict = self.runner.timed(
            'quasi-Veronese', verify_bold_normal, cache, g)
        report.extend([verdict])

    def run_weyl_witness(self, report, file_paths, g=None, x=None,
                         y=None, u=None):
        presentation = self.runner.load_presentation(file_paths[0])
        g = self._parse_g(presentation, g)
        cache = self.runner.build_cache(
            presentation, max(self.runner.cap, 2 * g.degree))
        witness = self._required_witness(cache, g, x=x, y=y, u=u)
        report.add_section(
            'witness', [witness.format(presentation.generators)])
        _, verdicts = self.runner.timed(
            'weyl witness', weyl_witness, cache, witness)
        report.extend(verdicts)

    def run_point_extend(self, report, file_paths, points=None):
        presentation = self.runner.load_presentation(file_paths[0])
        if not points:
            raise PreconditionError("A point sequence is required")
        points = parse_points(
            points, presentation.domain, presentation.ngens)

        valid, violation = is_truncated_point_module(presentation, points)
        if not valid:
            index, start = violation
            report.add_verdict(
                'truncated point module', False,
                f"relation {index + 1} fails on the window at {start}")
            return
        report.add_verdict(
            'truncated point module', True, f"{len(points)} points")

        fiber = extension_fiber(presentation, points)
        lines = [f"projective dimension: {fiber.projective_dimension}"]
        if fiber.empty:
            lines.append('fiber: empty')
        else:
            lines.append('basis: ' + ', '.join(
                format_point(point, fiber.domain)
                for point in fiber.points()))
        report.add_section('extension fiber', lines)

    def run_torsionfree(self, report, file_paths, g=None, length=4,
                        tree=None):
        presentation = self.runner.load_presentation(file_paths[0])
        g = self._parse_g(presentation, g)
        cache = self.runner.build_cache(presentation)
        search = TorsionfreeSearch(
            cache=cache, g=g, length=length,
            samples=self.runner.samples, seed=self.runner.seed,
            **self.runner.sampler_traits)
        result = self.runner.timed('torsionfree search', search.run)
        report.add_section('witness', [
            search.witness.format(presentation.generators)])
        report.add_section('torsionfree', result.summary_lines())
        verdict = result.x_propagation_verdict()
        if verdict is not None:
            report.extend([verdict])

        if tree:
            save_search_tree(result.tree, tree)

    def run_skew_variety(self, report, file_paths):
        presentation = self.runner.load_presentation(file_paths[0])
        domain = presentation.domain
        omega = skew_omega(presentation)
        family = skew_point_variety(omega, domain)
        report.add_section('omega', [
            ' '.join(format_scalar(value, domain) for value in row)
            for row in omega])
        report.add_section('supports', [
            family.format(presentation.generators)])

    def run_compare(self, report, file_paths, length=4):
        first, second = [
            self.runner.load_presentation(file_path)
            for file_path in file_paths]
        verdicts = self.runner.timed(
            'compare', compare_point_sets, first, second, length,
            self.runner.samples, self.runner.rng(),
            **self.runner.sampler_traits)
        report.extend(verdicts)

    def run_stabilize(self, report, file_paths, start=3, stop=6):
        presentation = self.runner.load_presentation(file_paths[0])
        verdicts, counts = self.runner.timed(
            'stabilize', stabilization_check, presentation, start,
            stop + 1, self.runner.samples, self.runner.rng(),
            **self.runner.sampler_traits)
        report.add_section('fibers', [
            f"{npoints} points: {count['singleton']} singleton, "
            f"{count['empty']} empty, {count['positive']} positive"
            for npoints, count in sorted(counts.items())])
        report.extend(verdicts)

    def run_color_check(self, report, file_paths):
        algebra = load_color_lie(file_paths[0])
        passed, violations = check_color_axioms(algebra)
        report.add_section('algebra', [
            f"basis: {', '.join(algebra.names)}",
            f"rank: {algebra.rank}",
            f"dimension: {algebra.dim}"])
        if passed:
            report.add_verdict('color Lie axioms', True)
        for violation in violations:
            report.add_verdict(violation, False)

    def run_upresent(self, report, file_paths, against=None, save=None):
        algebra = load_color_lie(file_paths[0])
        cap = self.runner.cap
        presentation = self.runner.timed(
            'enveloping presentation', u_presentation, algebra, cap,
            budget=self.runner.budget)
        report.add_section('relations', [
            presentation.format(relation)
            for relation in presentation.relations] or ['none'])

        dims = hilbert(presentation, cap, budget=self.runner.budget)
        pbw = EnvelopingAlgebra(algebra).dims(cap)
        report.add_verdict(
            'hilbert function equals PBW count', dims == pbw,
            ', '.join(map(str, dims)))

        if against:
            other = self.runner.load_presentation(against)
            report.add_verdict(
                f"equal to {os.path.basename(against)}",
                presentations_equal(
                    presentation, other, cap, budget=self.runner.budget),
                f"up to degree {cap}")

        if save:
            save_algebra(presentation, save)

    def run_nl(self, report, file_paths):
        nl = n_l(load_color_lie(file_paths[0]))
        report.add_section('n_L', [
            f"n_L: {nl}",
            f"stabilization length: {2 * nl - 1}"])

    def run_koszul(self, report, file_paths, r=None, max_degree=6):
        algebra = load_color_lie(file_paths[0])
        complex_ = self.runner.timed(
            'koszul complex', koszul_complex, algebra, r_max=r,
            max_degree=max_degree)
        report.add_section('koszul', complex_.summary_lines())
        _, verdicts = koszul_verify(complex_)
        report.extend(verdicts)

    def run_heisenberg_extract(self, report, file_paths, save=None):
        algebra = load_color_lie(file_paths[0])
        presentation, witness = self.runner.timed(
            'heisenberg extract', heisenberg_from_color, algebra,
            budget=self.runner.budget)
        names = presentation.generators
        report.add_section('relations', [
            presentation.format(relation)
            for relation in presentation.relations])
        report.add_section('witness', [witness.format(names)])

        cache = self.runner.build_cache(presentation)
        _, verdicts = is_q_heisenberg(cache, witness)
        report.extend(verdicts)

        if save:
            save_witness(witness, save, names=names)

    def run_gaction(self, report, file_paths, g=None, length=4):
        presentation = self.runner.load_presentation(file_paths[0])
        g = self._parse_g(presentation, g)
        verdicts, torsionfree = self.runner.timed(
            'g action', g_action_check, presentation, g, length,
            self.runner.samples, self.runner.rng(),
            **self.runner.sampler_traits)
        report.add_section('g action', [
            f"torsionfree samples: {torsionfree}"])
        report.extend(verdicts)

    def run(self, command, file_paths, **options):
        """Run a subcommand and return its RunReport

        Raises
        ------
        NotSupportedError
            For an unknown subcommand
        """
        if command not in COMMANDS:
            raise NotSupportedError(f"Unknown command '{command}'")

        settings = dict(
            options, cap=self.runner.cap, budget=self.runner.budget,
            samples=self.runner.samples,
            no_generic=not self.runner.generic)
        report = RunReport(
            command=command_echo(command, file_paths, settings),
            digest=','.join(
                file_digest(file_path) for file_path in file_paths),
            seed=self.runner.seed,
            show_timing=self.runner.timing)

        logger.info(f"Running {report.command}")
        method = getattr(self, COMMANDS[command])
        method(report, list(file_paths), **options)

        report.timing = dict(self.runner.stage_times)
        logger.info(
            f"{command}: {'PASS' if report.passed else 'FAIL'}")

        if self.output:
            save_verdict_table(report, self.output)

        return report
