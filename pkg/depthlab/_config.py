"""Run configuration shared by the facade and the command line."""

import typing

from pydantic import BaseModel, Field, field_validator

from . import options
from .homology import HomologyField


class Caps(BaseModel):
    """Resource caps, every one strictly positive."""

    lattice: int = Field(default_factory=lambda: options.CAP_LATTICE, gt=0)
    buchberger: int = Field(default_factory=lambda: options.CAP_BUCHBERGER, gt=0)
    delta: int = Field(default_factory=lambda: options.CAP_DELTA, gt=0)
    search: int = Field(default_factory=lambda: options.CAP_SEARCH, gt=0)
    poset_ideals: int = Field(default_factory=lambda: options.CAP_POSET_IDEALS, gt=0)


class RunConfig(BaseModel):
    """Settings of one run: homology field, number of powers, caps, output format and seed."""

    field: str = Field(default_factory=lambda: options.FIELD, validate_default=True)
    """``q`` or ``p:<prime>``"""
    kmax: int = Field(default_factory=lambda: options.KMAX, ge=1)
    caps: Caps = Field(default_factory=Caps)
    output_format: typing.Literal["text", "doc"] = "text"
    seed: int = Field(default_factory=lambda: options.SEED)

    @field_validator("field")
    @classmethod
    def _check_field(cls, value: str) -> str:
        return str(HomologyField.parse(value))

    @property
    def homology_field(self) -> HomologyField:
        return HomologyField.parse(self.field)

    @classmethod
    def from_env(cls, **kwargs) -> "RunConfig":
        """Builds a config where explicit ``kwargs`` beat ``DEPTHLAB_*`` environment values.

        ``None`` values are ignored, caps may be given flat as ``cap_<name>=...``.
        """
        kwargs = {k: v for k, v in kwargs.items() if v is not None}
        caps = kwargs.pop("caps", {})
        caps = caps.model_dump() if isinstance(caps, Caps) else dict(caps)
        for name in list(kwargs):
            if name.startswith("cap_"):
                caps[name.removeprefix("cap_")] = kwargs.pop(name)
        return cls(caps=Caps(**caps), **kwargs)
