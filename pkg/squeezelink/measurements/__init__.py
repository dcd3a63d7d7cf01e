from typing import Mapping, Type, Union
import importlib
import logging
import os

logger = logging.getLogger(__name__)

from squeezelink.models import MeasurementModel


def all() -> Mapping[str, Type[MeasurementModel]]:
    return MeasurementModel._registry


def by_name(name: str) -> Type[MeasurementModel]:
    key = name.lower()
    registry = all()
    if key in registry:
        return registry[key]
    for cls in registry.values():
        if key in cls.aliases:
            return cls
    raise KeyError(name)


def resolve(model: Union[str, MeasurementModel]) -> MeasurementModel:
    """Model instance from an instance or a registry name."""
    if isinstance(model, MeasurementModel):
        return model
    load_builtins()
    return by_name(model)()


def load_builtins():
    for name in __all__:
        importlib.import_module(f'squeezelink.measurements.{name}')


def load_from_environ():
    for module in os.environ.get('SQUEEZELINK_MODELS', '').split(':'):
        if not module:
            continue
        try:
            importlib.import_module(module)
        except Exception:
            logger.exception("could not load %s", module)

__all__ = [
    'heterodyne',
    'homodyne',
    'joint',
]
