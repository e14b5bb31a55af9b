"""HTTP surface: FastAPI wiring over SessionService, plus the serve CLI."""

from __future__ import annotations

import argparse
from pathlib import Path

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .errors import (
    AlreadySeededError,
    BackendUnavailableError,
    KatebError,
    NotFoundError,
    UnscorableInputError,
    ValidationError,
)
from .prompts import PromptFilter
from .scoring import parse_level
from .service import ServiceConfig, SessionService

_STATUS = {
    NotFoundError: 404,
    ValidationError: 422,
    UnscorableInputError: 422,
    BackendUnavailableError: 503,
    AlreadySeededError: 409,
}


class UserCreate(BaseModel):
    native_language: str | None = None
    dialect: str | None = None
    self_level: str | None = None
    locale: str | None = None


class ProfilePatch(UserCreate):
    pass


class EssayCreate(BaseModel):
    user_id: str
    prompt_id: str


class CheckRequest(BaseModel):
    text: str


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    service = SessionService(config or ServiceConfig.from_env())
    app = FastAPI(title="kateb", version="0.1.0")
    app.state.service = service

    @app.exception_handler(KatebError)
    async def _kateb_error(_request: Request, exc: KatebError):
        status = 500
        for klass, code in _STATUS.items():
            if isinstance(exc, klass):
                status = code
                break
        return JSONResponse(status_code=status, content={"code": exc.code, "message": str(exc)})

    @app.exception_handler(RequestValidationError)
    async def _bad_request(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=422, content={"code": "validation_error", "message": str(exc)})

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/users", status_code=201)
    def create_user(body: UserCreate | None = None) -> dict:
        return service.create_user(body.model_dump() if body else None)

    @app.patch("/users/{user_id}/profile")
    def patch_profile(user_id: str, body: ProfilePatch) -> dict:
        return service.update_profile(user_id, body.model_dump(exclude_none=True))

    @app.get("/prompts")
    def list_prompts(
        level: str | None = None,
        topic: str | None = None,
        genre: str | None = None,
    ) -> dict:
        flt = PromptFilter(
            level=parse_level(level) if level else None,
            topic=topic,
            genre=genre,
        )
        return {"prompts": [p.to_dict() for p in service.store.prompts.list(flt)]}

    @app.get("/prompts/{prompt_id}")
    def get_prompt(prompt_id: str) -> dict:
        return service.store.prompts.get(prompt_id).to_dict()

    @app.post("/essays", status_code=201)
    def create_essay(body: EssayCreate) -> dict:
        return service.create_essay(body.user_id, body.prompt_id)

    @app.get("/essays/{essay_id}")
    def get_essay(essay_id: str) -> dict:
        return service.get_essay(essay_id)

    @app.post("/essays/{essay_id}/check")
    def check(essay_id: str, body: CheckRequest) -> dict:
        return service.check_submission(essay_id, body.text)

    @app.get("/essays/{essay_id}/progress")
    def progress(essay_id: str) -> dict:
        return service.get_progress(essay_id)

    @app.get("/essays/{essay_id}/diff")
    def diff(
        essay_id: str,
        from_rev: int = Query(alias="from"),
        to_rev: int = Query(alias="to"),
    ) -> dict:
        return service.diff_revisions(essay_id, from_rev, to_rev)

    ui_dir = service.config.ui_dir
    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="kateb-serve", description="Run the writing service.")
    parser.add_argument("--port", type=int, default=None)
    parser.add_argument("--data-dir", default=None)
    parser.add_argument("--lexicon", default=None, help="path to a lexicon file (one word per line)")
    parser.add_argument("--scoring-config", default=None, help="path to a scoring config JSON file")
    parser.add_argument("--detector-endpoint", default=None, help="remote detection endpoint URL")
    parser.add_argument("--scorer-endpoint", default=None, help="remote scorer endpoint URL")
    parser.add_argument("--remote-timeout", type=float, default=None)
    parser.add_argument("--ui-dir", default=None, help="directory of built web UI files to serve at /ui")
    args = parser.parse_args(argv)

    env_cfg = ServiceConfig.from_env()
    config = ServiceConfig(
        data_dir=args.data_dir or env_cfg.data_dir,
        lexicon_path=args.lexicon or env_cfg.lexicon_path,
        scoring_config_path=args.scoring_config or env_cfg.scoring_config_path,
        port=args.port or env_cfg.port,
        detector_endpoint=args.detector_endpoint or env_cfg.detector_endpoint,
        scorer_endpoint=args.scorer_endpoint or env_cfg.scorer_endpoint,
        remote_timeout=args.remote_timeout or env_cfg.remote_timeout,
        ui_dir=args.ui_dir or env_cfg.ui_dir,
    )

    import uvicorn

    uvicorn.run(create_app(config), host="0.0.0.0", port=config.port)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
