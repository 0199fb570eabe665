# package imports
from brpiclab.backend.group.builders import abelian, alternating, cyclic, dihedral, quaternion, symmetric

# third party imports
import pytest

# standard imports
from pathlib import Path
from shutil import rmtree
from tempfile import mkdtemp


@pytest.fixture(scope="session")
def JSON_DIR():
    return Path(__file__).parent / "data" / "json"


@pytest.fixture(scope="session")
def C2():
    return cyclic(2)


@pytest.fixture(scope="session")
def C3():
    return cyclic(3)


@pytest.fixture(scope="session")
def V4():
    return abelian((2, 2))


@pytest.fixture(scope="session")
def S3():
    return symmetric(3)


@pytest.fixture(scope="session")
def D8():
    return dihedral(8)


@pytest.fixture(scope="session")
def Q8():
    return quaternion()


@pytest.fixture(scope="session")
def A4():
    return alternating(4)


@pytest.fixture(scope="session")
def S4():
    return symmetric(4)


# NOTE: pytest fixtures tmp_path and tmp_path_factory are NOT deleting the temporary directory, hence this fixture
@pytest.fixture(scope="function")
def tmpdir():
    r"""Create directory, then delete the directory and its contents upon test exit"""
    try:
        temporary_dir = Path(mkdtemp())
        yield temporary_dir
    finally:
        rmtree(temporary_dir)
