import json
import os
import subprocess
from pathlib import Path

import pytest

BIN = os.environ.get("QCORR_BIN", "qcorr")
FIXTURES = Path(os.environ.get("QCORR_FIXTURE_DIR", Path(__file__).resolve().parents[1] / "fixtures"))


class Result:
    def __init__(self, proc):
        self.code = proc.returncode
        self.out = proc.stdout
        self.err = proc.stderr

    def json(self):
        return json.loads(self.out)

    def rows(self):
        lines = self.out.strip().splitlines()
        header = lines[0].split(",")
        return [dict(zip(header, line.split(","))) for line in lines[1:]]


@pytest.fixture
def qcorr():
    def run(*args, env=None):
        full_env = dict(os.environ)
        full_env.pop("QCORR_SEED", None)
        if env:
            full_env.update(env)
        proc = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, env=full_env, timeout=600)
        return Result(proc)

    return run


@pytest.fixture
def fixture_path():
    return lambda name: str(FIXTURES / name)
