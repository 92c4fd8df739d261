"""Layered catalog of named Leibniz algebras.

Algebra documents (``*.json``) are discovered in the project catalog first,
then the user catalog, then the packaged catalog. A name found in a
higher-priority directory shadows the same name further down.
"""

from __future__ import annotations

import difflib
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional

from .algebra import LeibnizAlgebra
from .config import Config
from .documents import DocumentError, algebra_from_data, read_document
from .linalg import InputError
from .logger import logger


class CatalogLookupError(InputError, KeyError):
    """Raised when a name is not in the catalog."""

    def __init__(self, name: str, suggestions: Optional[List[str]] = None):
        self.name = name
        self.suggestions = suggestions or []
        message = f"Unknown algebra {name!r}"
        if self.suggestions:
            message += f"; did you mean {', '.join(self.suggestions)}?"
        super().__init__(message)

    def __str__(self) -> str:
        return self.args[0]


@dataclass
class CatalogEntry:
    name: str
    description: str
    dim: int
    file_path: Path
    data: dict


class AlgebraCatalog:
    """Discovers algebra documents and builds validated algebras on request."""

    def __init__(
        self,
        algebras_dir: Optional[str] = None,
        algebras_dirs: Optional[Iterable[str]] = None,
    ):
        self.algebras_dirs = self._resolve_dirs(algebras_dir, algebras_dirs, Config.get_algebras_dirs)
        self.entries: Dict[str, CatalogEntry] = {}
        self._cache: Dict[str, LeibnizAlgebra] = {}
        self._load_all()

    @staticmethod
    def _resolve_dirs(single_dir, multiple_dirs, default_dirs) -> List[Path]:
        """Return normalized catalog directories in priority order."""
        if multiple_dirs is not None:
            dirs = multiple_dirs
        elif single_dir is not None:
            dirs = [single_dir]
        else:
            dirs = default_dirs()
        return [Path(directory) for directory in dirs]

    def _load_all(self) -> None:
        for directory in self.algebras_dirs:
            self._load_from_dir(directory)

    def _load_from_dir(self, directory: Path) -> None:
        if not directory.exists():
            return
        for json_file in sorted(directory.glob("*.json")):
            data = read_document(json_file)
            if not isinstance(data, dict):
                raise DocumentError("Catalog entry must be a JSON object", str(json_file))
            name = data.get("name", json_file.stem)
            if name in self.entries:
                logger.debug(f"Catalog entry {name!r} in {json_file} is shadowed by {self.entries[name].file_path}")
                continue
            self.entries[name] = CatalogEntry(
                name=name,
                description=data.get("description", ""),
                dim=data.get("dim", 0),
                file_path=json_file,
                data=data,
            )

    def names(self) -> List[str]:
        return sorted(self.entries)

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def suggestions(self, name: str) -> List[str]:
        return difflib.get_close_matches(name, self.names(), n=3, cutoff=0.5)

    def get_entry(self, name: str) -> CatalogEntry:
        if name not in self.entries:
            raise CatalogLookupError(name, self.suggestions(name))
        return self.entries[name]

    def get(self, name: str) -> LeibnizAlgebra:
        """The validated algebra registered under ``name``."""
        if name not in self._cache:
            entry = self.get_entry(name)
            try:
                alg = algebra_from_data(entry.data)
            except DocumentError as e:
                raise DocumentError(str(e), str(entry.file_path)) from None
            self._cache[name] = LeibnizAlgebra(alg.dim, alg.constants, name)
        return self._cache[name]

    def algebras(self) -> Dict[str, LeibnizAlgebra]:
        return {name: self.get(name) for name in self.names()}


def default_catalog() -> AlgebraCatalog:
    return AlgebraCatalog()


def catalog() -> Dict[str, LeibnizAlgebra]:
    """All catalog algebras by name, in sorted order."""
    return default_catalog().algebras()


def get_algebra(name: str) -> LeibnizAlgebra:
    return default_catalog().get(name)
