"""Flat feature bundles shared by lexicon entries, analyses, and transfer.

A feature map is a small attribute-value set such as ``tns=pst,+def``:
string atoms for valued features, ``True`` for bare flags. Maps combine
by unification, which fails exactly when a shared name carries two
different values.
"""

from __future__ import annotations

import re
from typing import Iterator, Mapping, Optional, Union

FeatureValue = Union[str, bool]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_VALUE_RE = re.compile(r"[^\s,=+\-\[\]():;#]+")


class FeatureSyntaxError(ValueError):
    """Malformed feature list text."""


class FeatureMap:
    """Immutable map from feature names to atomic values.

    Values are strings (``tns=pst``) or ``True`` for flags written
    ``+def``. Negative flags are not representable and ``-f`` syntax is
    rejected at parse time. Instances hash and compare by content.
    """

    __slots__ = ("_pairs",)

    def __init__(self, entries: Union[Mapping[str, FeatureValue], "FeatureMap", None] = None):
        if entries is None:
            items: dict[str, FeatureValue] = {}
        elif isinstance(entries, FeatureMap):
            items = dict(entries._pairs)
        else:
            items = dict(entries)
        for name, value in items.items():
            if not isinstance(name, str) or not _NAME_RE.fullmatch(name):
                raise ValueError(f"bad feature name {name!r}")
            if value is True:
                continue
            if not isinstance(value, str) or not _VALUE_RE.fullmatch(value):
                raise ValueError(f"bad value {value!r} for feature {name}")
        self._pairs: tuple[tuple[str, FeatureValue], ...] = tuple(sorted(items.items()))

    @classmethod
    def parse(cls, text: str) -> "FeatureMap":
        """Parse ``f=v,+g,...`` notation. The atom ``true`` means the flag value."""
        items: dict[str, FeatureValue] = {}
        for chunk in text.split(","):
            chunk = chunk.strip()
            if not chunk:
                continue
            if chunk.startswith("-"):
                raise FeatureSyntaxError(f"negative feature flags are unsupported: {chunk!r}")
            if chunk.startswith("+"):
                name, value = chunk[1:].strip(), True
            elif "=" in chunk:
                name, _, raw = chunk.partition("=")
                name, raw = name.strip(), raw.strip()
                value = True if raw == "true" else raw
            else:
                raise FeatureSyntaxError(f"expected f=v or +f, got {chunk!r}")
            if not _NAME_RE.fullmatch(name):
                raise FeatureSyntaxError(f"bad feature name {name!r}")
            if value is not True and not _VALUE_RE.fullmatch(value):
                raise FeatureSyntaxError(f"bad feature value {value!r}")
            if name in items and items[name] != value:
                raise FeatureSyntaxError(f"duplicate feature {name!r} with conflicting values")
            items[name] = value
        return cls(items)

    def unify(self, other: "FeatureMap") -> Optional["FeatureMap"]:
        """Union of the two maps, or None if a shared name conflicts."""
        merged = dict(self._pairs)
        for name, value in other._pairs:
            if name in merged and merged[name] != value:
                return None
            merged[name] = value
        out = FeatureMap.__new__(FeatureMap)
        out._pairs = tuple(sorted(merged.items()))
        return out

    def get(self, name: str, default: Optional[FeatureValue] = None) -> Optional[FeatureValue]:
        for key, value in self._pairs:
            if key == name:
                return value
        return default

    def as_dict(self) -> dict[str, FeatureValue]:
        return dict(self._pairs)

    def format(self) -> str:
        """Canonical ``+f,g=v`` text, names sorted."""
        return ",".join(f"+{k}" if v is True else f"{k}={v}" for k, v in self._pairs)

    def __contains__(self, name: str) -> bool:
        return any(k == name for k, _ in self._pairs)

    def __iter__(self) -> Iterator[str]:
        return (k for k, _ in self._pairs)

    def items(self) -> tuple[tuple[str, FeatureValue], ...]:
        return self._pairs

    def __len__(self) -> int:
        return len(self._pairs)

    def __bool__(self) -> bool:
        return bool(self._pairs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FeatureMap) and self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __repr__(self) -> str:
        return f"FeatureMap({self.format()!r})"

    def __str__(self) -> str:
        return self.format()


EMPTY = FeatureMap()


def unify(a: FeatureMap, b: FeatureMap) -> Optional[FeatureMap]:
    """Unify two feature maps; None signals conflict."""
    return a.unify(b)


def parse_features(text: str) -> FeatureMap:
    return FeatureMap.parse(text)
