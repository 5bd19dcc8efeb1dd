"""Attribute embeddings and semantic step propagation.

The default provider hashes character trigrams of the canonicalized
attribute name plus up to 20 sample values into 256 buckets (BLAKE2b,
fixed across processes) and L2-normalizes the count vector. Attributes of
the same variable type whose embedding distance is at most d_n share
preparation steps.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace

import numpy as np

from ..errors import EmptyName, MixedProviders
from ..pipeline.steps import StepOrigin, StepRecord
from ..tabular import VariableType

EMBEDDING_DIM = 256
DEFAULT_PROVIDER = "char_trigram_v1"
MAX_SAMPLE_VALUES = 20
DEFAULT_DISTANCE_THRESHOLD = 0.25


@dataclass(frozen=True)
class AttributeEmbedding:
    name: str
    vector: np.ndarray
    provider: str = DEFAULT_PROVIDER

    def __post_init__(self):
        v = np.asarray(self.vector, dtype=np.float64)
        v.setflags(write=False)
        object.__setattr__(self, "vector", v)


def _canonical(text: str) -> str:
    return "".join(ch for ch in text.lower() if ch.isalnum())


def _bucket(trigram: str) -> int:
    digest = hashlib.blake2b(trigram.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") % EMBEDDING_DIM


def _trigrams(token: str):
    padded = f"#{token}#"
    for i in range(len(padded) - 2):
        yield padded[i : i + 3]


def embed_attribute(
    name: str, samples: list | tuple = (), provider: str = DEFAULT_PROVIDER
) -> AttributeEmbedding:
    """L2-normalized hashed-trigram vector over the name and sample values."""
    if not name:
        raise EmptyName("attribute name must be non-empty")
    if provider != DEFAULT_PROVIDER:
        raise ValueError(f"unknown embedding provider {provider!r}")
    counts = np.zeros(EMBEDDING_DIM)
    tokens = [_canonical(name)]
    tokens.extend(_canonical(str(v)) for v in list(samples)[:MAX_SAMPLE_VALUES])
    for token in tokens:
        if not token:
            continue
        for tri in _trigrams(token):
            counts[_bucket(tri)] += 1.0
    norm = float(np.linalg.norm(counts))
    if norm == 0.0:  # name canonicalized to nothing; hash the raw name
        counts[_bucket(name)] = 1.0
        norm = 1.0
    return AttributeEmbedding(name=name, vector=counts / norm, provider=provider)


def cosine_distance(a: AttributeEmbedding, b: AttributeEmbedding) -> float:
    return float(1.0 - a.vector @ b.vector)


def euclidean_distance(a: AttributeEmbedding, b: AttributeEmbedding) -> float:
    return float(np.linalg.norm(a.vector - b.vector))


@dataclass(frozen=True)
class PropagationConfig:
    metric: str = "cosine"  # "cosine" | "euclidean"
    threshold: float = DEFAULT_DISTANCE_THRESHOLD

    def distance(self, a: AttributeEmbedding, b: AttributeEmbedding) -> float:
        if self.metric == "euclidean":
            return euclidean_distance(a, b)
        return cosine_distance(a, b)


def propagate_steps(
    steps_by_attribute: dict[str, list[StepRecord]],
    embeddings: dict[str, AttributeEmbedding],
    vtypes: dict[str, VariableType],
    config: PropagationConfig | None = None,
) -> dict[str, list[StepRecord]]:
    """Attributes without steps inherit from the nearest same-type attribute
    within the threshold; attributes that already have steps are never
    overwritten. Inherited records carry provenance and PROPAGATED origin."""
    config = config or PropagationConfig()
    providers = {e.provider for e in embeddings.values()}
    if len(providers) > 1:
        raise MixedProviders(f"embeddings mix providers: {sorted(providers)}")

    out = {name: list(steps) for name, steps in steps_by_attribute.items()}
    donors = sorted(name for name, steps in steps_by_attribute.items() if steps)
    receivers = sorted(
        name
        for name in embeddings
        if not steps_by_attribute.get(name)
    )
    for receiver in receivers:
        best: tuple[float, str] | None = None
        for donor in donors:
            if donor == receiver or donor not in embeddings:
                continue
            if vtypes.get(donor) is not vtypes.get(receiver):
                continue
            dist = config.distance(embeddings[receiver], embeddings[donor])
            if dist <= config.threshold and (best is None or (dist, donor) < best):
                best = (dist, donor)
        if best is None:
            continue
        dist, donor = best
        inherited = []
        for i, step in enumerate(steps_by_attribute[donor]):
            inherited.append(
                replace(
                    step,
                    id=f"{step.id}-p-{receiver}",
                    columns=(receiver,),
                    origin=StepOrigin.PROPAGATED,
                    result=None,
                    provenance={"from": donor, "distance": dist, "metric": config.metric},
                )
            )
        out[receiver] = inherited
    return out
