import json
import os
import pathlib
import shutil

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("TORICDEG_CLI") or shutil.which("toricdeg") or str(ROOT / "build" / "toricdeg")
    if not pathlib.Path(path).exists():
        pytest.skip("toricdeg executable not built")
    return path


@pytest.fixture(scope="session")
def validate():
    jsonschema = pytest.importorskip("jsonschema")
    from referencing import Registry, Resource

    schemas = {p.name: json.loads(p.read_text()) for p in (ROOT / "docs" / "schemas").glob("*.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

    def check(instance, schema):
        jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(instance)

    return check
