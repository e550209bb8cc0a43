import io
import json
from unittest.mock import patch

import pytest

from publisher import FilePublisher, S3Publisher, publisher_for


def test_publish_and_get(tmp_path):
    pub = FilePublisher(tmp_path)
    pub.publish("runs/w6.json", b"{}")
    assert (tmp_path / "runs" / "w6.json").read_bytes() == b"{}"
    assert pub.get("runs/w6.json") == b"{}"


def test_read_text_round_trips_a_trace(tmp_path):
    pub = FilePublisher(tmp_path)
    pub.publish_text("trace/t.txt", "1 NBR_LIST 0 1 nbrs=[1]")
    assert pub.read_text("trace/t.txt") == "1 NBR_LIST 0 1 nbrs=[1]"


def test_get_of_missing_key_raises(tmp_path):
    with pytest.raises(FileNotFoundError):
        FilePublisher(tmp_path).get("absent.json")


def test_stream_publisher_writes_one_document():
    out = io.StringIO()
    pub = FilePublisher(stream=out)
    pub.publish_json("-", {"b": [1], "a": True})
    assert out.getvalue() == '{"a": true, "b": [1]}\n'
    assert json.loads(out.getvalue()) == {"a": True, "b": [1]}


def test_stream_publisher_has_no_keys():
    with pytest.raises(ValueError, match="cannot address"):
        FilePublisher().get("x")


# ---------------------------------------------------------------------------
# Targets
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("target", [None, "-"])
def test_stdout_target(target):
    pub, key = publisher_for(target)
    assert isinstance(pub, FilePublisher)
    assert key == "-"


def test_local_target(tmp_path):
    pub, key = publisher_for(str(tmp_path / "out" / "g.json"))
    pub.publish(key, b"{}")
    assert (tmp_path / "out" / "g.json").exists()


def test_s3_target():
    with patch("boto3.client"):
        pub, key = publisher_for("s3://bucket/runs/r.json")
    assert isinstance(pub, S3Publisher)
    assert key == "r.json"
