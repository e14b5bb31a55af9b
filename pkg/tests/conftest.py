"""Shared test fixtures: the packaged lexicon, backends, and service factories."""

from __future__ import annotations

import importlib.resources as res
import socket
import threading
import time
import warnings

import pytest

from kateb.ged import RuleBackend, load_lexicon
from kateb.scoring import default_scoring_config
from kateb.service import ServiceConfig, SessionService

warnings.filterwarnings("ignore", category=DeprecationWarning)


def lexicon_path() -> str:
    return str(res.files("kateb").joinpath("data/seed_lexicon.txt"))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def accept():
    """Collector for one pass/fail line per acceptance criterion."""

    def note(line: str) -> None:
        ACCEPTANCE_LINES.append(line)

    return note


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def lexicon() -> frozenset[str]:
    return load_lexicon(lexicon_path())


@pytest.fixture(scope="session")
def rule_backend(lexicon) -> RuleBackend:
    return RuleBackend(lexicon)


@pytest.fixture(scope="session")
def scoring_cfg():
    return default_scoring_config()


@pytest.fixture
def service(tmp_path) -> SessionService:
    return SessionService(ServiceConfig(data_dir=str(tmp_path / "data")))


@pytest.fixture
def client(tmp_path):
    from fastapi.testclient import TestClient

    from kateb.api import create_app

    app = create_app(ServiceConfig(data_dir=str(tmp_path / "api-data")))
    # the app's own service is reachable as client.app.state.service
    return TestClient(app)


def free_port() -> int:
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


class StubHandlerServer:
    """Tiny one-endpoint HTTP server for remote-backend tests.

    ``responder`` receives the parsed request JSON and returns either a
    (status, payload) pair or raw bytes to write; it may sleep to force
    timeouts.
    """

    def __init__(self, responder):
        import json
        from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

        outer = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):  # noqa: N802  (stdlib naming)
                length = int(self.headers.get("Content-Length", 0))
                body = self.rfile.read(length)
                try:
                    payload = json.loads(body) if body else {}
                except ValueError:
                    payload = {}
                result = outer.responder(payload)
                if isinstance(result, bytes):
                    self.send_response(200)
                    self.send_header("Content-Type", "application/json")
                    self.end_headers()
                    self.wfile.write(result)
                    return
                status, reply = result
                data = json.dumps(reply).encode("utf-8")
                self.send_response(status)
                self.send_header("Content-Type", "application/json")
                self.end_headers()
                self.wfile.write(data)

            def log_message(self, *args):
                pass

        self.responder = responder
        self.server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self.thread = threading.Thread(target=self.server.serve_forever, daemon=True)
        self.thread.start()

    @property
    def url(self) -> str:
        host, port = self.server.server_address
        return f"http://{host}:{port}/"

    def close(self) -> None:
        self.server.shutdown()
        self.server.server_close()


@pytest.fixture
def stub_server():
    servers = []

    def make(responder) -> StubHandlerServer:
        srv = StubHandlerServer(responder)
        servers.append(srv)
        return srv

    yield make
    for srv in servers:
        srv.close()


class LiveServer:
    """Run the real ASGI app under uvicorn in a thread, for concurrency tests."""

    def __init__(self, config: ServiceConfig):
        import uvicorn

        from kateb.api import create_app

        self.port = free_port()
        app = create_app(config)
        uv_config = uvicorn.Config(app, host="127.0.0.1", port=self.port, log_level="error")
        self.server = uvicorn.Server(uv_config)
        self.thread = threading.Thread(target=self.server.run, daemon=True)
        self.thread.start()
        deadline = time.time() + 10
        while not self.server.started:
            if time.time() > deadline:
                raise RuntimeError("server did not start")
            time.sleep(0.01)

    @property
    def url(self) -> str:
        return f"http://127.0.0.1:{self.port}"

    def close(self) -> None:
        self.server.should_exit = True
        self.thread.join(timeout=10)


@pytest.fixture
def live_server(tmp_path):
    servers = []

    def make(config: ServiceConfig | None = None) -> LiveServer:
        cfg = config or ServiceConfig(data_dir=str(tmp_path / "live-data"))
        srv = LiveServer(cfg)
        servers.append(srv)
        return srv

    yield make
    for srv in servers:
        srv.close()
