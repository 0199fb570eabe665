# package imports
from brpiclab.backend.util.functions import calculate_chunksize, clamp_max_workers, parallel_map, process_limit

# third party imports
import pytest

# standard imports
import resource
from unittest.mock import patch

UNLIMITED = (resource.RLIM_INFINITY, resource.RLIM_INFINITY)


def test_clamp_max_workers():
    assert clamp_max_workers(10) == 10
    assert clamp_max_workers(-10) >= 1
    assert clamp_max_workers(None) >= 1


@patch("resource.getrlimit", return_value=UNLIMITED)
def test_process_limit_unlimited(mock_getrlimit):
    assert process_limit() is None


@patch("resource.getrlimit", return_value=(3, 10))
@patch("multiprocessing.cpu_count", return_value=16)
def test_clamp_respects_process_limit(mock_cpu_count, mock_getrlimit):
    assert process_limit() == 3
    assert clamp_max_workers(0) == 3
    # an explicit request is taken as is
    assert clamp_max_workers(5) == 5


@patch("resource.getrlimit", return_value=UNLIMITED)
@patch("multiprocessing.cpu_count", return_value=8)
def test_chunksize_with_small_number_of_elements(mock_cpu_count, mock_getrlimit):
    assert calculate_chunksize(10, None) == 1


@patch("resource.getrlimit", return_value=UNLIMITED)
@patch("multiprocessing.cpu_count", return_value=8)
def test_chunksize_with_large_number_of_elements(mock_cpu_count, mock_getrlimit):
    # 6 workers, scale factor 4
    assert calculate_chunksize(10000, None) == 10000 // (6 * 4)


@patch("resource.getrlimit", return_value=UNLIMITED)
@patch("multiprocessing.cpu_count", return_value=4)
def test_chunksize_with_different_cpu_count(mock_cpu_count, mock_getrlimit):
    assert calculate_chunksize(10000, 0) == 10000 // (2 * 4)


def test_chunksize_with_max_workers():
    assert calculate_chunksize(10000, 4) == 10000 // (4 * 4)
    assert calculate_chunksize(10000, 4, scale_factor=2) == 10000 // (4 * 2)


def test_parallel_map_in_process():
    assert parallel_map(pow, [2, 3, 5], [3, 2, 1]) == [8, 9, 5]
    assert parallel_map(abs, []) == []


@patch("brpiclab.backend.util.functions.process_map", return_value=["a", "b", "c"])
def test_parallel_map_uses_pool(mock_process_map):
    assert parallel_map(str, [1, 2, 3], max_workers=8, desc="demo") == ["a", "b", "c"]
    args, kwargs = mock_process_map.call_args
    assert args == (str, [1, 2, 3])
    # never more workers than items
    assert kwargs["max_workers"] == 3
    assert kwargs["chunksize"] == 1
    assert kwargs["desc"] == "demo"
    assert "tqdm_class" not in kwargs


@patch("brpiclab.backend.util.functions.process_map")
def test_parallel_map_single_item_skips_pool(mock_process_map):
    assert parallel_map(len, ["abc"], max_workers=4) == [3]
    mock_process_map.assert_not_called()


if __name__ == "__main__":
    pytest.main([__file__])
