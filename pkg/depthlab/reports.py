"""Reports produced by the command line: results plus prediction-versus-oracle comparison rows."""

import typing

from pydantic import BaseModel, Field

PASS = "PASS"
FAIL = "FAIL"


class ComparisonRow(BaseModel):
    """One expected value checked against an observed one."""

    label: str
    """What is compared, e.g. ``depth S/I^2``"""
    expected: typing.Any
    observed: typing.Any
    sources: tuple[str, str] = ("formula", "oracle")
    """Provenance of ``expected`` and ``observed``"""
    status: typing.Literal["PASS", "FAIL"]

    @classmethod
    def compare(cls, label: str, expected, observed, sources: tuple[str, str] = ("formula", "oracle")):
        return cls(
            label=label,
            expected=expected,
            observed=observed,
            sources=sources,
            status=PASS if expected == observed else FAIL,
        )

    @classmethod
    def check(cls, label: str, holds: bool, expected, observed, sources: tuple[str, str] = ("formula", "oracle")):
        """Row for a relation other than equality, ``holds`` is its verdict."""
        return cls(label=label, expected=expected, observed=observed, sources=sources, status=PASS if holds else FAIL)

    def format_text(self) -> str:
        if self.status == PASS:
            return f"{self.status} {self.label}: {self.observed}"
        return (
            f"{self.status} {self.label}: expected {self.expected} ({self.sources[0]}),"
            f" observed {self.observed} ({self.sources[1]})"
        )


class Report(BaseModel):
    """Outcome of one command."""

    command: list[str] = Field(description="Command line as given, program name excluded.")
    inputs_digest: str = Field("", description="Digest of the input file contents.")
    config: dict = Field(default_factory=dict, description="Effective run configuration.")
    results: dict = Field(default_factory=dict, description="Command specific results.")
    rows: list[ComparisonRow] = Field(default_factory=list)
    error: str | None = Field(None, description="Set when the command stopped with an error.")
    log: list[str] = Field(default_factory=list, description="Collected log lines, filled with ``--verbose``.")
    timing: float = Field(0.0, description="Wall time in seconds, left out of the document form.")

    @property
    def passed(self) -> bool:
        return self.error is None and all(row.status == PASS for row in self.rows)

    def add(self, row: ComparisonRow) -> ComparisonRow:
        self.rows.append(row)
        return row

    def to_document(self) -> str:
        """Structured form; identical inputs and configuration give byte-identical documents."""
        return self.model_dump_json(indent=2, exclude={"timing"}) + "\n"

    def format_text(self) -> str:
        lines = [f"command: {' '.join(self.command)}"]
        if self.inputs_digest:
            lines.append(f"inputs: {self.inputs_digest}")
        for key, value in self.results.items():
            if isinstance(value, str) and "\n" in value:
                lines.append(f"{key}:")
                lines.extend(f"  {line}" for line in value.splitlines())
            else:
                lines.append(f"{key}: {_short(value)}")
        lines.extend(row.format_text() for row in self.rows)
        if self.error:
            lines.append(f"error: {self.error}")
        lines.extend(f"log: {line}" for line in self.log)
        lines.append(f"time: {self.timing:.3f}s")
        lines.append(f"status: {PASS if self.passed else FAIL}")
        return "\n".join(lines) + "\n"

    def render(self, output_format: str) -> str:
        return self.to_document() if output_format == "doc" else self.format_text()


def _short(value) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_short(v) for v in value) + ")"
    if isinstance(value, dict):
        return ", ".join(f"{k}={_short(v)}" for k, v in value.items())
    return str(value)
