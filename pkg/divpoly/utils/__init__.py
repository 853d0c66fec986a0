from .file import GenericFile
from .hash import CalculatedHash, canonical_json

__all__ = ['GenericFile', 'CalculatedHash', 'canonical_json']
