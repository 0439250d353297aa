import subprocess
import sys

SCRIPT = """
import sys
sys.modules["datashare._kernels"] = None  # simulate a build without the extension
import datashare
from datashare import GameInstance, oracle_spe
assert datashare.BACKEND == "numpy", datashare.BACKEND
eq = oracle_spe(GameInstance(1, 1, 0.32, -0.1))
assert abs(eq.alpha - 0.68) < 1e-12
print("ok")
"""


def test_numpy_fallback_selected_without_extension():
    res = subprocess.run([sys.executable, "-c", SCRIPT], capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    assert res.stdout.strip() == "ok"
