"""
Output formatting for the syzygy engine.

This module renders Betti tables, invariants and reports in the three CLI
output formats and parses tables back from them.
"""

from typing import Any, Dict, List, Optional

from ..core.models import BettiTable, NumericInvariants

FORMATS = ("grid", "csv", "kv")


class FormatUtils:
    """Rendering helpers shared by the CLI and the engine."""

    @staticmethod
    def render_table(table: BettiTable, fmt: str = "grid") -> str:
        """
        Render a Betti table.

        Args:
            table: Table to render
            fmt: One of grid, csv, kv

        Returns:
            Table text without a trailing newline
        """
        if fmt == "grid":
            return table.to_grid()
        if fmt == "csv":
            return table.to_csv()
        if fmt == "kv":
            return table.to_kv()
        raise ValueError(f"Unknown format '{fmt}', expected one of {', '.join(FORMATS)}")

    @staticmethod
    def parse_table(text: str, fmt: str = "grid") -> BettiTable:
        """Inverse of render_table."""
        if fmt == "grid":
            return BettiTable.from_grid(text)
        if fmt == "csv":
            return BettiTable.from_csv(text)
        if fmt == "kv":
            entries = {}
            for line in text.splitlines():
                key, _, value = line.strip().partition("=")
                parts = key.split(".")
                if len(parts) == 3 and parts[0] == "betti":
                    entries[(int(parts[1]), int(parts[2]))] = int(value)
            return BettiTable(entries)
        raise ValueError(f"Unknown format '{fmt}', expected one of {', '.join(FORMATS)}")

    @staticmethod
    def render_kv(values: Dict[str, Any]) -> str:
        """``key=value`` lines; lists join with commas, booleans print lowercase."""
        lines = []
        for key, value in values.items():
            if isinstance(value, bool):
                value = str(value).lower()
            elif isinstance(value, (list, tuple)):
                value = ",".join(str(v) for v in value)
            elif value is None:
                value = "none"
            lines.append(f"{key}={value}")
        return "\n".join(lines)

    @staticmethod
    def render_resolution(
        table: BettiTable,
        invariants: Optional[NumericInvariants],
        fmt: str = "grid",
        checks: Optional[Dict[str, bool]] = None
    ) -> str:
        """Table followed by invariants and self-checks, in one format."""
        sections: List[str] = [FormatUtils.render_table(table, fmt)]
        if fmt == "kv":
            if invariants is not None:
                sections.append(invariants.to_kv())
            if checks:
                sections.append(FormatUtils.render_kv({f"check.{k}": v for k, v in checks.items()}))
        elif fmt == "grid":
            if invariants is not None:
                sections.append(
                    f"dim={invariants.dimension} deg={invariants.degree} "
                    f"codim={invariants.codimension} reg={invariants.regularity} "
                    f"pd={invariants.projective_dimension} acm={str(invariants.is_acm).lower()}"
                )
            if checks:
                sections.append(" ".join(f"{k}:{'ok' if v else 'FAIL'}" for k, v in checks.items()))
        return "\n".join(s for s in sections if s)

    @staticmethod
    def render_bound_rows(rows: Dict[str, Dict[int, int]], fmt: str = "grid") -> str:
        """Bound values per named parameter triple, as a small table or kv lines."""
        if fmt == "kv":
            return "\n".join(
                f"bound.{name}.p{p}={v}" for name, row in rows.items() for p, v in row.items()
            )
        if fmt == "csv":
            lines = ["bound,p,value"]
            lines += [f"{name},{p},{v}" for name, row in rows.items() for p, v in row.items()]
            return "\n".join(lines)
        stop = max((max(row, default=0) for row in rows.values()), default=0)
        cells = [str(v) for row in rows.values() for v in row.values()] + [str(stop)]
        width = max(len(c) for c in cells)
        label = max((len(name) for name in rows), default=0)
        header = " " * label + "".join(f" {str(p).rjust(width)}" for p in range(1, stop + 1))
        lines = [header.rstrip()]
        for name, row in rows.items():
            body = "".join(f" {str(row.get(p, 0)).rjust(width)}" for p in range(1, stop + 1))
            lines.append(name.ljust(label) + body)
        return "\n".join(lines)
