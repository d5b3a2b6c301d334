"""Module defining various utilities."""

from excitonring.utils.misc import ClassRegistry
from excitonring.utils.misc import merge_dict

from excitonring.utils.writers import CSVWriter
from excitonring.utils.writers import JSONLinesWriter
from excitonring.utils.writers import JSONWriter
from excitonring.utils.writers import Writer
from excitonring.utils.writers import make_writer
from excitonring.utils.writers import register_writer
