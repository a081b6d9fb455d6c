"""Result containers shared by all solvers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING

from .graph import VertexPath

if TYPE_CHECKING:
    from .structure import GammaEstimate


@dataclass(frozen=True)
class Guarantee:
    """What the reported eccentricity promises.

    ``kind`` is ``"exact"``, ``"additive"`` (optimum + at most ``bound``;
    ``bound`` is None when the class constant is not quantified), or
    ``"assumed"`` (exact only if a user-asserted class/gamma bound holds).
    """

    kind: str
    bound: int | None = None


@dataclass(frozen=True)
class Certificate:
    source: int | None = None
    gamma: GammaEstimate | None = None
    diametral_pair: tuple[int, int] | None = None
    mutually_furthest: tuple[int, int] | None = None
    guarantee: Guarantee | None = None
    sweep: tuple[tuple[int, int], ...] | None = None
    note: str | None = None


@dataclass(frozen=True)
class SolveResult:
    path: VertexPath
    eccentricity: int
    algorithm: str
    certificate: Certificate = field(default_factory=Certificate)
