import json
from typing import Any
from ..errors import ArtifactError


class GenericFile:
    """
    Text file handler for JSON artifacts: algebra specs, ideals,
    certificates and point lists.

    Every OS or decoding failure surfaces as ArtifactError so the command
    line reports it like any other domain error.

    Attributes:
        filepath (str): The path to the file to be managed.
        encoding (str): The encoding used for file operations. Defaults to 'utf-8'.
    """

    def __init__(self, filepath) -> None:
        self.filepath: str = str(filepath)
        self.encoding: str = 'utf-8'

    def read_file(self) -> str:
        """
        Reads the content of the file.

        Raises:
            ArtifactError: If the file is missing or unreadable.
        """
        try:
            with open(file=self.filepath, mode='r', encoding=self.encoding) as file:
                return file.read()
        except FileNotFoundError:
            raise ArtifactError(f"File '{self.filepath}' does not exist")
        except OSError as e:
            raise ArtifactError(f"Unexpected error reading '{self.filepath}': {e}")

    def write_file(self, data: str) -> bool:
        """
        Writes data to the file.

        Raises:
            ArtifactError: On permission issues or other OS errors.
        """
        try:
            with open(file=self.filepath, mode='w', encoding=self.encoding) as file:
                file.write(data)

            return True
        except PermissionError:
            raise ArtifactError(f"You do not have permissions to write to '{self.filepath}'")
        except OSError as e:
            raise ArtifactError(f"Unexpected error writing to '{self.filepath}': {e}")

    def read_json(self) -> Any:
        try:
            return json.loads(self.read_file())
        except json.JSONDecodeError as e:
            raise ArtifactError(f"'{self.filepath}' is not valid JSON: {e}")

    def write_json(self, document: Any) -> bool:
        """Indented, key-sorted JSON so equal documents give equal files."""
        return self.write_file(json.dumps(document, indent=2, sort_keys=True) + '\n')


__all__ = ['GenericFile']
