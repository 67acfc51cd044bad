import logging

from pygraded.model.core.base_graded_object import BaseGradedObject
from pygraded.model.core.scalars import (
    RATIONAL, domain_name, get_domain, unify_domains)

from .nc_poly import NCPoly

logger = logging.getLogger(__name__)


class Presentation(BaseGradedObject):
    """Connected graded algebra k<x_0, ..., x_m> / I generated in
    degree 1, where I is generated by a finite list of homogeneous
    relations of degree at least 2"""

    text_extension = 'alg'

    def __init__(self, generators, relations=None, domain=RATIONAL,
                 name=None):

        generators = [str(generator) for generator in generators]
        if len(set(generators)) != len(generators):
            raise ValueError(
                f"Generator names must be distinct: {generators}")
        if not generators:
            raise ValueError("A presentation needs at least one generator")

        self.generators = generators
        self.name = name

        relations = list(relations or [])
        self.domain = unify_domains(
            domain, *(relation.domain for relation in relations))
        self.relations = [
            relation.convert(self.domain) for relation in relations]

        for relation in self.relations:
            self._check_relation(relation)

    def _check_relation(self, relation):
        if not relation:
            raise ValueError("Relations must be nonzero")
        if not relation.is_homogeneous:
            raise ValueError(
                f"Relation {self.format(relation)} is not homogeneous")
        if relation.degree < 2:
            raise ValueError(
                f"Relation {self.format(relation)} has degree "
                f"{relation.degree} < 2")
        if relation.max_index >= self.ngens:
            raise ValueError(
                "Relation uses a generator index outside the "
                "presentation")

    @property
    def ngens(self):
        return len(self.generators)

    @property
    def relation_degrees(self):
        return sorted(relation.degree for relation in self.relations)

    @property
    def max_relation_degree(self):
        return max(self.relation_degrees, default=0)

    def relations_of_degree(self, degree):
        return [
            relation for relation in self.relations
            if relation.degree == degree]

    def generator(self, index):
        return NCPoly.generator(index, self.domain)

    def parse(self, text):
        """Parse an element of the free algebra written in relation
        syntax over this presentation's generators"""
        from pygraded.io.algebra_io import parse_poly
        return parse_poly(text, self.generators, self.domain)

    def format(self, poly):
        return poly.format(self.generators)

    def __eq__(self, other):
        if not isinstance(other, Presentation):
            return NotImplemented
        return (
            self.generators == other.generators
            and self.domain == other.domain
            and self.relations == other.relations)

    def __repr__(self):
        relations = ', '.join(
            self.format(relation) for relation in self.relations)
        return (
            f"Presentation(<{', '.join(self.generators)} | "
            f"{relations}>)")

    @classmethod
    def from_json(cls, data):
        domain = get_domain(data.get('field', 'rational'))
        generators = data['generators']
        presentation = cls(
            generators, domain=domain, name=data.get('name'))
        presentation.relations = [
            presentation.parse(text) for text in data['relations']]
        for relation in presentation.relations:
            presentation._check_relation(relation)
        return presentation

    def to_json(self):
        return {
            'name': self.name,
            'generators': list(self.generators),
            'field': domain_name(self.domain),
            'relations': [
                self.format(relation) for relation in self.relations]
        }

    @classmethod
    def from_text(cls, text):
        from pygraded.io.algebra_io import parse_algebra_text
        return parse_algebra_text(text)

    def to_text(self):
        from pygraded.io.algebra_io import format_algebra_text
        return format_algebra_text(self)


def free_algebra(generators, domain=RATIONAL):
    """Presentation without relations"""
    return Presentation(generators, [], domain, name='free')
