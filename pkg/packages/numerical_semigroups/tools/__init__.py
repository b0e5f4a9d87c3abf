"""MCP tool registrations; each module adds its tools to ``server.mcp`` on import."""
