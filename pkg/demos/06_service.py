"""Run the HTTP service on an ephemeral port and exercise every endpoint,
including the acceptance log that records what the translator chose."""

import json
import tempfile
import threading
from pathlib import Path
from urllib.request import Request, urlopen

from mdt import create_server, demo_lexicon_dir, parse_lexicon


def call(base, path, payload=None):
    if payload is None:
        with urlopen(base + path) as reply:
            return reply.read().decode("utf-8")
    request = Request(
        base + path,
        data=json.dumps(payload).encode("utf-8"),
        headers={"Content-Type": "application/json"},
    )
    with urlopen(request) as reply:
        return reply.read().decode("utf-8")


log_path = Path(tempfile.mkdtemp()) / "accept.log"
lexicon = parse_lexicon(demo_lexicon_dir())
server = create_server(lexicon, port=0, log_path=log_path)
threading.Thread(target=server.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{server.server_address[1]}"
print(f"service at {base}, log at {log_path}\n")

print("GET /api/health")
print(" ", call(base, "/api/health"), "\n")

print("GET /api/groups?head=make_v")
print(call(base, "/api/groups?head=make_v"), "\n")

print("POST /api/translate {'text': 'you'}")
doc = json.loads(call(base, "/api/translate", {"text": "you"}))
offered = [" ".join(seg["text"] for seg in out) for out in doc["outputs"]]
print("  candidates:", offered, "\n")

print("POST /api/accept: picking the first candidate, then a hand edit")
print(" ", call(base, "/api/accept", {"source": "you", "chosen": offered[0], "offered": offered}))
print(" ", call(base, "/api/accept", {"source": "you", "chosen": "'antammA", "offered": offered}))
print()

print("the acceptance log now holds:")
for line in log_path.read_text("utf-8").splitlines():
    print(" ", line)

server.shutdown()
server.server_close()
