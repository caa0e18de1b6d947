import os
import shutil

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("UQPA_CLI") or shutil.which("uqpa")
    if not path or not os.path.exists(path):
        pytest.skip("uqpa executable not available")
    return path
