"""Various utilities."""

import collections
import enum
import functools
import math
import sys

import numpy as np


def merge_dict(dict1, dict2):
  """Merges :obj:`dict2` into :obj:`dict1`, recursively for nested dictionaries.

  Args:
    dict1: The base dictionary.
    dict2: The dictionary to merge.

  Returns:
    The merged dictionary :obj:`dict1`.
  """
  for key, value in dict2.items():
    if isinstance(value, dict):
      dict1[key] = merge_dict(dict1.get(key) or {}, value)
    else:
      dict1[key] = value
  return dict1

def to_builtin(value):
  """Converts :obj:`value` to JSON serializable Python builtins.

  Objects exposing ``to_dict`` are converted with it, NumPy scalars and arrays
  become floats and lists, enumerations become their value and complex
  numbers become ``[real, imag]`` pairs.
  """
  if hasattr(value, "to_dict"):
    return to_builtin(value.to_dict())
  if isinstance(value, enum.Enum):
    return value.value
  if isinstance(value, dict):
    return collections.OrderedDict(
        (to_builtin(key), to_builtin(item)) for key, item in value.items())
  if isinstance(value, (list, tuple)):
    return [to_builtin(item) for item in value]
  if isinstance(value, np.ndarray):
    return to_builtin(value.tolist())
  if isinstance(value, (bool, np.bool_)):
    return bool(value)
  if isinstance(value, (int, np.integer)):
    return int(value)
  if isinstance(value, (float, np.floating)):
    return float(value)
  if isinstance(value, (complex, np.complexfloating)):
    return [float(value.real), float(value.imag)]
  return value

def format_float(value):
  """Formats a float with the shortest representation that parses back to it."""
  value = float(value)
  if math.isnan(value) or math.isinf(value):
    raise ValueError("Cannot serialize non finite value %r" % value)
  return repr(value)

def write_document(text, stream=None):
  """Writes :obj:`text` followed by a newline and flushes.

  Args:
    text: The text to write.
    stream: The stream to write to (``sys.stdout`` if not set).
  """
  if stream is None:
    stream = sys.stdout
  stream.write(text)
  if not text.endswith("\n"):
    stream.write("\n")
  stream.flush()


class ClassRegistry(object):
  """Helper class to create a registry of classes."""

  def __init__(self, base_class=None):
    """Initializes the class registry.

    Args:
      base_class: Ensure that classes added to this registry are a subclass of
        :obj:`base_class`.
    """
    self._base_class = base_class
    self._registry = collections.OrderedDict()
    self._aliases = {}

  @property
  def class_names(self):
    """Class names registered in this registry, aliases excluded, in
    registration order.
    """
    return list(self._registry.keys())

  def register(self, cls=None, name=None, alias=None):
    """Registers a class.

    Args:
      cls: The class to register. If not set, this method returns a decorator for
        registration.
      name: The class name. Defaults to ``cls.__name__``. Names are case
        insensitive.
      alias: An optional alias or list of alias for this class.

    Returns:
      :obj:`cls` if set, else a class decorator.

    Raises:
      TypeError: if :obj:`cls` does not extend the expected base class.
      ValueError: if the class name is already registered.
    """
    if cls is None:
      return functools.partial(self.register, name=name, alias=alias)
    if self._base_class is not None and not issubclass(cls, self._base_class):
      raise TypeError("Class %s does not extend %s" % (cls.__name__, self._base_class.__name__))
    if name is None:
      name = cls.__name__
    name = name.lower()
    self._check_free(name)
    self._registry[name] = cls
    if alias is not None:
      if not isinstance(alias, (list, tuple)):
        alias = (alias,)
      for alias_name in alias:
        alias_name = alias_name.lower()
        self._check_free(alias_name)
        self._aliases[alias_name] = name
    return cls

  def _check_free(self, name):
    if name in self._registry or name in self._aliases:
      raise ValueError("Class name %s is already registered" % name)

  def get(self, name):
    """Returns the class with name or alias :obj:`name` or ``None`` if it does
    not exist in the registry.
    """
    name = name.lower()
    return self._registry.get(self._aliases.get(name, name))
