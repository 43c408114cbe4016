"""HTTP service and acceptance logging for computer-assisted translation.

The server exposes translation and lexicon inspection over JSON and
serves the optional workbench UI as static files. The only mutable
resource is the acceptance log, an append-only line-delimited JSON file
guarded by a lock; everything else is a pure function of the loaded
lexicon and the request.
"""

from __future__ import annotations

import json
import mimetypes
import os
import threading
import time
from dataclasses import asdict, dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Optional
from urllib.parse import parse_qs, urlparse

from .lexicon import Lexicon, serialize_entry
from .xfer import translate

DEFAULT_LOG_ENV = "MDT_LOG"


@dataclass
class AcceptanceRecord:
    """One accepted translation, as appended to the log."""

    timestamp: int
    source: str
    chosen: str
    offered: list[str] = field(default_factory=list)
    session: Optional[str] = None
    edited: bool = False


class AcceptanceLog:
    """Append-only record store; ids are 1-based line numbers.

    Appends are serialized by a lock and flushed per record, so a crash
    between appends loses at most the in-flight record.
    """

    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._count = 0
        if self.path.exists():
            with open(self.path, "r", encoding="utf-8") as handle:
                self._count = sum(1 for line in handle if line.strip())

    def append(self, record: AcceptanceRecord) -> int:
        line = json.dumps(asdict(record), ensure_ascii=False)
        with self._lock:
            with open(self.path, "a", encoding="utf-8") as handle:
                handle.write(line + "\n")
                handle.flush()
            self._count += 1
            return self._count

    def __len__(self) -> int:
        with self._lock:
            return self._count


def record_acceptance(
    log: AcceptanceLog,
    source: str,
    chosen: str,
    offered: Optional[list[str]] = None,
    session: Optional[str] = None,
) -> tuple[int, AcceptanceRecord]:
    """Append one acceptance; ``edited`` is true when the chosen text
    differs from every offered output."""
    if not chosen:
        raise ValueError("chosen translation must be non-empty")
    offered = list(offered or [])
    record = AcceptanceRecord(
        timestamp=int(time.time()),
        source=source,
        chosen=chosen,
        offered=offered,
        session=session,
        edited=chosen not in offered,
    )
    return log.append(record), record


class TranslationServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(
        self,
        address: tuple[str, int],
        lexicon: Lexicon,
        log: AcceptanceLog,
        target_lang: Optional[str] = None,
        ui_dir: Optional[str | os.PathLike] = None,
    ):
        super().__init__(address, _Handler)
        self.lexicon = lexicon
        self.log = log
        self.target_lang = target_lang or (lexicon.target_langs[0] if lexicon.target_langs else "")
        self.ui_dir = Path(ui_dir) if ui_dir else None


class _Handler(BaseHTTPRequestHandler):
    server: TranslationServer

    # Keep request logging out of stdout; tests and the CLI own it.
    def log_message(self, format: str, *args) -> None:
        pass

    def _send_json(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_text(self, status: int, text: str, content_type: str = "text/plain") -> None:
        body = text.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", f"{content_type}; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _read_json(self) -> Optional[dict]:
        try:
            length = int(self.headers.get("Content-Length", "0"))
            raw = self.rfile.read(length)
            parsed = json.loads(raw.decode("utf-8"))
        except (ValueError, UnicodeDecodeError):
            return None
        return parsed if isinstance(parsed, dict) else None

    def do_GET(self) -> None:
        url = urlparse(self.path)
        if url.path == "/api/health":
            self._send_json(
                200,
                {
                    "status": "ok",
                    "groups": len(self.server.lexicon.entries),
                    "rules": len(self.server.lexicon.rules),
                },
            )
        elif url.path == "/api/groups":
            params = parse_qs(url.query)
            head = params.get("head", [""])[0]
            if not head:
                self._send_json(400, {"error": "missing head parameter"})
                return
            matches = [entry for _, entry in self.server.lexicon.entries_for_head(head)]
            self._send_text(200, "\n".join(serialize_entry(e) for e in matches))
        elif url.path.startswith("/api/"):
            self._send_json(404, {"error": "unknown endpoint"})
        else:
            self._serve_static(url.path)

    def do_POST(self) -> None:
        url = urlparse(self.path)
        if url.path == "/api/translate":
            body = self._read_json()
            if body is None or not isinstance(body.get("text", ""), str):
                self._send_json(400, {"error": "malformed body"})
                return
            text = body.get("text", "")
            if not text.strip():
                self._send_json(422, {"error": "empty text"})
                return
            max_outputs = body.get("max")
            if max_outputs is not None and not isinstance(max_outputs, int):
                self._send_json(400, {"error": "max must be an integer"})
                return
            result = translate(
                text,
                self.server.lexicon,
                target_lang=self.server.target_lang,
                max_outputs=max_outputs,
            )
            self._send_json(200, result.to_doc())
        elif url.path == "/api/accept":
            body = self._read_json()
            if body is None:
                self._send_json(400, {"error": "malformed body"})
                return
            chosen = body.get("chosen")
            offered = body.get("offered", [])
            if not isinstance(chosen, str) or not chosen or not isinstance(offered, list):
                self._send_json(400, {"error": "accept needs a non-empty chosen string"})
                return
            try:
                record_id, record = record_acceptance(
                    self.server.log,
                    source=str(body.get("source", "")),
                    chosen=chosen,
                    offered=[str(o) for o in offered],
                    session=body.get("session"),
                )
            except OSError as exc:
                self._send_json(500, {"error": f"storage: {exc}"})
                return
            self._send_json(200, {"id": record_id, "edited": record.edited})
        else:
            self._send_json(404, {"error": "unknown endpoint"})

    def _serve_static(self, path: str) -> None:
        root = self.server.ui_dir
        if root is None or not root.is_dir():
            self._send_text(200, _PLACEHOLDER_PAGE, "text/html")
            return
        name = path.lstrip("/") or "index.html"
        target = (root / name).resolve()
        if not str(target).startswith(str(root.resolve())) or not target.is_file():
            self._send_json(404, {"error": "not found"})
            return
        content_type = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        body = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)


_PLACEHOLDER_PAGE = """<!doctype html>
<html><head><meta charset="utf-8"><title>translation service</title></head>
<body><h1>Translation service</h1>
<p>No UI bundle configured. The JSON API lives under <code>/api/</code>:
<code>POST /api/translate</code>, <code>POST /api/accept</code>,
<code>GET /api/health</code>, <code>GET /api/groups?head=...</code >.</p>
</body></html>
"""


def create_server(
    lexicon: Lexicon,
    host: str = "127.0.0.1",
    port: int = 8040,
    log_path: Optional[str | os.PathLike] = None,
    target_lang: Optional[str] = None,
    ui_dir: Optional[str | os.PathLike] = None,
) -> TranslationServer:
    """Build (but do not start) the HTTP server; port 0 picks a free port."""
    path = log_path or os.environ.get(DEFAULT_LOG_ENV) or "mdt-accept.log"
    return TranslationServer((host, port), lexicon, AcceptanceLog(path), target_lang, ui_dir)
