import subprocess
import sys

import pytest


@pytest.fixture
def run_cli():
    def run(args, timeout=120, env=None):
        return subprocess.run(
            [sys.executable, "-m", "tilegate", *args],
            capture_output=True,
            text=True,
            check=False,
            timeout=timeout,
            env=env,
        )

    return run
