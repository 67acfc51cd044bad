from pygraded.model.core.base_graded_object import BaseGradedObject

from pygraded.model.objects.nc_poly import NCPoly
from pygraded.model.objects.presentation import Presentation
from pygraded.model.objects.quotient_cache import (
    QuotientCache, build_quotient_cache, hilbert, minimal_relation_degrees,
    presentations_equal)
from pygraded.model.objects.heisenberg_witness import (
    HeisenbergWitness, NuAutomorphism)
from pygraded.model.objects.qv_element import QVElement
from pygraded.model.objects.truncated_point_module import (
    TruncatedPointModule)
from pygraded.model.objects.bicharacter import Bicharacter
from pygraded.model.objects.color_lie_algebra import (
    ColorLieAlgebra, check_color_axioms)
from pygraded.model.objects.koszul_complex import KoszulComplex
from pygraded.model.objects.run_report import RunReport, Verdict

from pygraded.model.tools.normal_elements import (
    is_normal, nu_automorphism, is_q_heisenberg, find_heisenberg_witness,
    check_power_identities)
from pygraded.model.tools.twisting import (
    TwistSystem, verify_bold_normal, weyl_witness)
from pygraded.model.tools.point_geometry import (
    is_truncated_point_module, extension_fiber, g_action_scalars,
    check_all_or_nothing)
from pygraded.model.tools.torsionfree_search import (
    TorsionfreeSearch, torsionfree_search)
from pygraded.model.tools.point_sampling import (
    PointSampler, compare_point_sets, stabilization_check)
from pygraded.model.tools.skew_variety import skew_point_variety
from pygraded.model.tools.pbw import EnvelopingAlgebra
from pygraded.model.tools.color_presentations import (
    n_l, u_presentation, epsilon_symmetric, heisenberg_from_color)
from pygraded.model.tools.koszul import koszul_complex, koszul_verify

from pygraded.io.algebra_io import load_algebra, save_algebra
from pygraded.io.color_lie_io import load_color_lie, save_color_lie

from pygraded.pygraded_runner import GradedRunner
