import pytest

from cubicrec import _pykernel
from cubicrec.scheme import PublicKey
from cubicrec.sequence import Generator

try:
    from cubicrec import _ckernel
except ImportError:
    _ckernel = None

KERNELS = [pytest.param(_pykernel, id="python")]
KERNELS.append(pytest.param(_ckernel, id="gmp", marks=pytest.mark.skipif(_ckernel is None, reason="compiled kernel not built")))


@pytest.fixture(params=KERNELS)
def kern(request):
    return request.param


@pytest.fixture
def pk35():
    # n = 5 * 7 with the first generator whose cubic is irreducible mod 5 and mod 7
    return PublicKey(35, 0, 1)


@pytest.fixture
def g01():
    return Generator(0, 1, 1225)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda l: int(l.split("]")[1].split(".")[0])):
            terminalreporter.write_line(line)
