import json
from pathlib import Path

from pydantic import Field

from maxdens import __version__
from maxdens.core.exceptions import MaxDensError
from maxdens.core.labels import MANIFEST_FILE_NAME
from maxdens.schema import Schema

__all__ = ["RunManifest", "MANIFEST_EXCLUDED"]

# arguments that describe where and how verbosely a run happens, not what it computes
MANIFEST_EXCLUDED = ("func", "command", "out", "log_level", "manifest")


class RunManifest(Schema):
    """Everything needed to reproduce a subcommand's outputs."""

    subcommand: str
    parameters: dict
    seed: int | None = None
    version: str
    outputs: list[str] = Field(default_factory=list)

    @classmethod
    def from_args(cls, subcommand: str, args, outputs: list[str]) -> "RunManifest":
        parameters = {key: value for key, value in sorted(vars(args).items()) if key not in MANIFEST_EXCLUDED}
        return cls(subcommand=subcommand, parameters=parameters, seed=parameters.get("seed"), version=__version__,
                   outputs=sorted(outputs))

    def write(self, out_dir: Path) -> Path:
        path = Path(out_dir) / MANIFEST_FILE_NAME
        path.write_text(json.dumps(self.model_dump(), indent=2, sort_keys=True) + "\n")
        return path

    @classmethod
    def load(cls, path) -> "RunManifest":
        try:
            return cls.model_validate_json(Path(path).read_text())
        except OSError as e:
            raise MaxDensError(f"could not read manifest {path}: {e}", path=str(path)) from e
