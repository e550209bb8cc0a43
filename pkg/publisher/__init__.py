from .FilePublisher import FilePublisher
from .Publisher import Publisher
from .S3Publisher import S3Publisher
from .targets import publisher_for

__all__ = ["FilePublisher", "Publisher", "S3Publisher", "publisher_for"]
