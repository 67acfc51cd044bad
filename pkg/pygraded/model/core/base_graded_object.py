from abc import ABC, abstractmethod


class BaseGradedObject(ABC):
    """Abstract base class for an algebraic object that can be stored
    on disk. Serialization and de-serialization routines must be
    implemented for both the JSON and the plain text formats."""

    #: File extension of the plain text format
    text_extension = 'txt'

    @classmethod
    @abstractmethod
    def from_json(cls, data):
        """Deserialises JSON data dictionary to return an instance
        of the class"""

    @abstractmethod
    def to_json(self):
        """Serialises instance into a dictionary able to be dumped as a
        JSON file"""

    @classmethod
    @abstractmethod
    def from_text(cls, text):
        """Deserialises the human readable file format to return an
        instance of the class"""

    @abstractmethod
    def to_text(self):
        """Serialises instance into the human readable file format"""
