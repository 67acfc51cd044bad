from functools import partial

from pygraded.model.core.base_graded_object import BaseGradedObject
from pygraded.model.objects.color_lie_algebra import ColorLieAlgebra
from pygraded.model.objects.heisenberg_witness import HeisenbergWitness
from pygraded.model.objects.presentation import Presentation
from pygraded.utilities import NotSupportedError

from .utilities import (
    save_json, load_json, save_text, load_text, replace_ext)

SUPPORTED_MODES = ['json', 'text']


def create_file_name(file_name, file_type):
    if file_type is not None:
        return '_'.join([file_name, file_type])
    return file_name


def _check_mode(mode):
    if mode not in SUPPORTED_MODES:
        raise NotSupportedError(f'Save mode {mode} not supported')


def save_graded_object(graded_object, file_name, mode,
                       file_type=None, **kwargs):
    """Save a BaseGradedObject subclass, in JSON or in its plain text
    format"""

    _check_mode(mode)
    file_name = create_file_name(file_name, file_type)

    if mode == 'json':
        save_json(graded_object.to_json(**kwargs), file_name)
    else:
        file_name = replace_ext(file_name, graded_object.text_extension)
        save_text(graded_object.to_text(**kwargs), file_name)


def load_graded_object(file_name, klass, mode,
                       file_type=None, **kwargs):
    """Load a BaseGradedObject subclass. Extra keyword arguments are
    passed on to the deserialisation routine"""

    if not issubclass(klass, BaseGradedObject):
        raise TypeError(
            'klass argument must be of type BaseGradedObject')

    _check_mode(mode)
    file_name = create_file_name(file_name, file_type)

    if mode == 'json':
        return klass.from_json(load_json(file_name), **kwargs)

    file_name = replace_ext(file_name, klass.text_extension)
    return klass.from_text(load_text(file_name), **kwargs)


save_presentation = partial(save_graded_object, mode='text')

load_presentation = partial(
    load_graded_object, klass=Presentation, mode='text')

save_color_lie_algebra = partial(save_graded_object, mode='text')

load_color_lie_algebra = partial(
    load_graded_object, klass=ColorLieAlgebra, mode='text')

save_witness = partial(
    save_graded_object, mode='json', file_type='witness')

load_witness = partial(
    load_graded_object, klass=HeisenbergWitness, mode='json',
    file_type='witness')
