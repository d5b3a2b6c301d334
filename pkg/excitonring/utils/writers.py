"""Define output writers."""

import abc
import csv
import io
import json

import tensorflow as tf

from excitonring.utils import misc


class Writer(abc.ABC):
  """Base class for output writers.

  Writers receive an output envelope: a dictionary with the ``command``,
  ``spec_echo``, ``payload``, ``tool_version`` and ``seed`` keys. Tabular
  payloads hold a ``columns`` list and a ``rows`` list of dictionaries.
  """

  def write(self, envelope, path=None, stream=None):
    """Serializes :obj:`envelope` to :obj:`path`, or to :obj:`stream`.

    Raises:
      ValueError: if :obj:`envelope` is not supported by this writer.
    """
    text = self.serialize(misc.to_builtin(envelope))
    if path is not None:
      with tf.io.gfile.GFile(path, mode="w") as output_file:
        output_file.write(text)
      tf.get_logger().info("Output written to: %s", path)
    else:
      misc.write_document(text, stream=stream)

  @abc.abstractmethod
  def serialize(self, envelope):
    """Returns the text representation of :obj:`envelope`."""
    raise NotImplementedError()


def _table(envelope):
  payload = envelope.get("payload") or {}
  if "rows" not in payload or "columns" not in payload:
    raise ValueError("The %s command has no tabular output" % envelope.get("command"))
  return payload["columns"], payload["rows"]

def _format_cell(value):
  if value is None:
    return ""
  if isinstance(value, bool):
    return "true" if value else "false"
  if isinstance(value, float):
    return misc.format_float(value)
  if isinstance(value, list):
    return " ".join(_format_cell(item) for item in value)
  return str(value)


_WRITERS_REGISTRY = misc.ClassRegistry(base_class=Writer)
register_writer = _WRITERS_REGISTRY.register  # pylint: disable=invalid-name

def make_writer(name, **kwargs):
  """Creates a new writer.

  Args:
    name: The writer name.
    **kwargs: Additional arguments to pass to the writer constructor.

  Returns:
    A :class:`excitonring.utils.writers.Writer` instance.

  Raises:
    ValueError: if :obj:`name` is invalid.
  """
  writer_class = _WRITERS_REGISTRY.get(name)
  if writer_class is None:
    raise ValueError("Invalid output format: %s" % name)
  return writer_class(**kwargs)

def list_writers():
  """Lists the name of registered writers."""
  return _WRITERS_REGISTRY.class_names


@register_writer(name="json")
class JSONWriter(Writer):
  """Writes the envelope as a single JSON document."""

  def __init__(self, indent=None):
    self._indent = indent

  def serialize(self, envelope):
    return json.dumps(envelope, indent=self._indent, allow_nan=False)


@register_writer(name="csv")
class CSVWriter(Writer):
  """Writes the rows of a tabular payload as CSV with a header line."""

  def serialize(self, envelope):
    columns, rows = _table(envelope)
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
      writer.writerow([_format_cell(row.get(column)) for column in columns])
    return output.getvalue()


@register_writer(name="jsonl", alias="jsonlines")
class JSONLinesWriter(Writer):
  """Writes one JSON object per row of a tabular payload."""

  def serialize(self, envelope):
    _, rows = _table(envelope)
    return "\n".join(json.dumps(row, allow_nan=False) for row in rows)
