from __future__ import annotations

import logging
import os
from urllib.parse import urlparse

import boto3

from .Publisher import Publisher

logger = logging.getLogger("publisher.s3")


class S3Publisher(Publisher):
    """Archives run artifacts in an S3 bucket under an optional prefix."""

    def __init__(self, bucket: str | None = None, prefix: str = ""):
        self._bucket = bucket or os.environ["S3_BUCKET_NAME"]
        self._prefix = prefix.strip("/")
        self._s3 = boto3.client(
            "s3",
            region_name=os.environ.get("AWS_REGION", "us-east-1"),
        )

    @classmethod
    def from_uri(cls, uri: str) -> tuple["S3Publisher", str]:
        """Split `s3://bucket/prefix/key` into a publisher on bucket/prefix and the key."""
        parsed = urlparse(uri)
        if parsed.scheme != "s3" or not parsed.netloc:
            raise ValueError(f"Invalid S3 URI {uri!r}")
        prefix, _, key = parsed.path.strip("/").rpartition("/")
        if not key:
            raise ValueError(f"S3 URI names no key: {uri!r}")
        return cls(bucket=parsed.netloc, prefix=prefix), key

    def _full_key(self, key: str) -> str:
        if self._prefix:
            return f"{self._prefix}/{key}"
        return key

    def publish(self, key: str, data: bytes) -> None:
        self._s3.put_object(
            Bucket=self._bucket,
            Key=self._full_key(key),
            Body=data,
        )
        logger.info("Wrote s3://%s/%s bytes=%d", self._bucket, self._full_key(key), len(data))

    def get(self, key: str) -> bytes:
        resp = self._s3.get_object(
            Bucket=self._bucket,
            Key=self._full_key(key),
        )
        return resp["Body"].read()
