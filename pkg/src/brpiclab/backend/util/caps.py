#!/usr/bin/env python3
"""Order caps for every enumeration in the package, overridable through ``BRPIC_MAX_ORDER``."""
# package imports
from brpiclab.backend.errors import GroupSpecError, OrderCapError

# third party imports
import param

# standard imports
from functools import lru_cache
import logging
import os

logger = logging.getLogger(__name__)

ENV_MAX_ORDER = "BRPIC_MAX_ORDER"


class OrderCaps(param.Parameterized):
    """Upper bounds on group orders accepted by the different stages."""

    analysis_cap = param.Integer(default=64, bounds=(1, None), doc="largest group accepted for analysis")
    product_cap = param.Integer(default=2048, bounds=(1, None), doc="largest direct product table built")
    bimodule_cap = param.Integer(default=48, bounds=(1, None), doc="largest G for bimodule enumeration")
    catalog_cap = param.Integer(default=48, bounds=(1, None), doc="largest order searched by identification")
    oracle_cap = param.Integer(default=8, bounds=(1, None), doc="largest abelian group for the orthogonal oracle")

    @classmethod
    def from_environment(cls) -> "OrderCaps":
        """Build caps from the defaults and the ``BRPIC_MAX_ORDER`` environment variable."""
        return cls.from_value(os.environ.get(ENV_MAX_ORDER, ""))

    @classmethod
    def from_value(cls, raw: str) -> "OrderCaps":
        """Build caps for a raw ``BRPIC_MAX_ORDER`` value; empty means the defaults."""
        raw = raw.strip()
        if not raw:
            return cls()
        try:
            value = int(raw)
        except ValueError as e:
            msg = f"{ENV_MAX_ORDER}={raw!r} is not an integer"
            logger.error(msg)
            raise GroupSpecError(msg) from e
        if value < 1:
            msg = f"{ENV_MAX_ORDER} must be positive, got {value}"
            logger.error(msg)
            raise GroupSpecError(msg)
        default_product = cls.param["product_cap"].default
        logger.debug(f"order caps overridden by {ENV_MAX_ORDER}={value}")
        return cls(
            analysis_cap=value,
            bimodule_cap=value,
            catalog_cap=value,
            product_cap=max(default_product, value * value),
        )


@lru_cache(maxsize=8)
def _caps_for(raw: str) -> OrderCaps:
    return OrderCaps.from_value(raw)


def current_caps() -> OrderCaps:
    """Return the caps in force, built once per distinct ``BRPIC_MAX_ORDER`` value.

    The returned object is shared and must not be modified.
    """
    return _caps_for(os.environ.get(ENV_MAX_ORDER, ""))


def check_cap(order: int, cap_name: str, what: str = "group") -> None:
    """Raise ``OrderCapError`` when ``order`` exceeds the named cap.

    Parameters
    ----------
    order:
        order of the group about to be built or analysed
    cap_name:
        attribute of :class:`OrderCaps`, e.g. ``"analysis_cap"``
    what:
        short description used in the error message
    """
    cap = getattr(current_caps(), cap_name)
    if order > cap:
        msg = f"{what} of order {order} exceeds {cap_name}={cap} (set {ENV_MAX_ORDER} to raise it)"
        logger.error(msg)
        raise OrderCapError(msg)
