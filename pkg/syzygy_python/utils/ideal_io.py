"""
Plain-text ideal files.

Layout::

    # spec: M(3,2,1,0)
    # seed: 0
    # field: Fp:32003
    # tool: syzygy-python 0.1.0
    ring r=4 field=Fp:32003
    x0*x2 - x1^2
    ...

``r`` is the number of variables. Lines starting with ``#`` are provenance
metadata; blank lines are ignored. Generators print with symmetric
representatives over F_p, so reading a written file gives back an equal ideal.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Union

from ..algebra.fields import FieldSpec
from ..algebra.groebner import Ideal
from ..algebra.polynomial import PolynomialParseError, Ring, parse_polynomial

logger = logging.getLogger(__name__)

_RING_LINE = re.compile(r"^ring\s+r=(\d+)\s+field=(\S+)\s*$")
_META_LINE = re.compile(r"^#\s*([A-Za-z_]+)\s*:\s*(.*)$")


class IdealFileError(ValueError):
    """Raised for unreadable or malformed ideal files."""
    pass


@dataclass
class IdealFile:
    """An ideal together with the provenance lines of its file."""
    ideal: Ideal
    metadata: Dict[str, str] = field(default_factory=dict)

    @property
    def field_spec(self) -> FieldSpec:
        return self.ideal.ring.field


def format_ideal(ideal: Ideal, metadata: Optional[Dict[str, str]] = None) -> str:
    from .. import __version__

    meta = dict(metadata or {})
    meta.setdefault("field", str(ideal.ring.field))
    meta["tool"] = f"syzygy-python {__version__}"
    lines = [f"# {key}: {value}" for key, value in meta.items()]
    lines.append(f"ring r={ideal.ring.nvars} field={ideal.ring.field}")
    lines += [str(g) for g in ideal.generators]
    return "\n".join(lines) + "\n"


def parse_ideal(text: str, field_override: Optional[FieldSpec] = None) -> IdealFile:
    """
    Parse ideal file text.

    ``field_override`` reinterprets the integer coefficients over another
    field, which is how the same file is resolved over QQ and over F_p.

    Raises:
        IdealFileError: missing ring line, bad field, or a bad generator
    """
    metadata: Dict[str, str] = {}
    ring: Optional[Ring] = None
    generators = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            meta = _META_LINE.match(line)
            if meta:
                metadata[meta.group(1).lower()] = meta.group(2).strip()
            continue
        if ring is None:
            header = _RING_LINE.match(line)
            if not header:
                raise IdealFileError(f"Line {number}: expected 'ring r=<n> field=<QQ|Fp:p>', got '{line}'")
            try:
                fld = field_override or FieldSpec.parse(header.group(2))
                ring = Ring(int(header.group(1)), fld)
            except ValueError as e:
                raise IdealFileError(f"Line {number}: {e}")
            continue
        try:
            generators.append(parse_polynomial(line, ring))
        except (PolynomialParseError, ZeroDivisionError) as e:
            raise IdealFileError(f"Line {number}: {e}")
    if ring is None:
        raise IdealFileError("Ideal file has no ring line")
    try:
        ideal = Ideal(ring, generators)
    except ValueError as e:
        raise IdealFileError(str(e))
    return IdealFile(ideal, metadata)


def read_ideal_file(path: Union[str, Path], field_override: Optional[FieldSpec] = None) -> IdealFile:
    """
    Raises:
        IdealFileError: unreadable or malformed file
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise IdealFileError(f"Cannot read ideal file {path}: {e}")
    result = parse_ideal(text, field_override)
    logger.debug(f"Read {len(result.ideal)} generators from {path}")
    return result


def write_ideal_file(
    path: Union[str, Path],
    ideal: Ideal,
    metadata: Optional[Dict[str, str]] = None
) -> None:
    Path(path).write_text(format_ideal(ideal, metadata), encoding="utf-8")
    logger.info(f"Wrote {len(ideal)} generators to {path}")
