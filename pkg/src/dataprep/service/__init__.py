"""Stateful session service for the interactive studio."""

from .app import create_app, parse_multipart
from .sessions import Session, SessionStore, StoreConfig

__all__ = ["create_app", "parse_multipart", "Session", "SessionStore", "StoreConfig"]
