"""Location of the bundled English -> Amharic demo lexicon."""

from importlib import resources
from pathlib import Path


def demo_lexicon_dir() -> Path:
    return Path(str(resources.files("mdt") / "data" / "demo"))
