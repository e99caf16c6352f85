"""
Pydantic models for the JSON documents the CLI, bench and self-test emit.
"""
