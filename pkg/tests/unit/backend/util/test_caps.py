# package imports
from brpiclab.backend.errors import BrPicExitCodes, GroupSpecError, OrderCapError
from brpiclab.backend.util.caps import ENV_MAX_ORDER, OrderCaps, check_cap, current_caps

# third party imports
import pytest
from unittest.mock import patch


def test_defaults():
    with patch.dict("os.environ", {}, clear=True):
        caps = current_caps()
    assert caps.analysis_cap == 64
    assert caps.bimodule_cap == 48
    assert caps.catalog_cap == 48
    assert caps.product_cap == 2048
    assert caps.oracle_cap == 8


def test_environment_override():
    with patch.dict("os.environ", {ENV_MAX_ORDER: "100"}):
        caps = current_caps()
    assert caps.analysis_cap == caps.bimodule_cap == caps.catalog_cap == 100
    assert caps.product_cap == 100 * 100
    assert caps.oracle_cap == OrderCaps.param["oracle_cap"].default


@pytest.mark.parametrize("value", ["abc", "0", "-3"])
def test_bad_environment(value):
    with patch.dict("os.environ", {ENV_MAX_ORDER: value}):
        with pytest.raises(GroupSpecError):
            current_caps()


def test_caps_built_once_per_value():
    with patch.dict("os.environ", {ENV_MAX_ORDER: "77"}):
        with patch.object(OrderCaps, "from_value", wraps=OrderCaps.from_value) as mock_from_value:
            first = current_caps()
            for _ in range(5):
                check_cap(70, "analysis_cap")
            assert current_caps() is first
        assert mock_from_value.call_count <= 1
    with patch.dict("os.environ", {ENV_MAX_ORDER: "78"}):
        assert current_caps() is not first
        assert current_caps().analysis_cap == 78


def test_check_cap():
    with patch.dict("os.environ", {ENV_MAX_ORDER: "10"}):
        check_cap(10, "analysis_cap")
        with pytest.raises(OrderCapError) as excinfo:
            check_cap(11, "analysis_cap", what="test group")
    assert excinfo.value.exit_code == BrPicExitCodes.ERROR_CAP.value
    assert ENV_MAX_ORDER in str(excinfo.value)


if __name__ == "__main__":
    pytest.main([__file__])
