"""Pydantic response models shared by the CLI and the MCP tools."""
