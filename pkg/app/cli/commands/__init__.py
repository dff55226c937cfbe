# CLI commands, grouped by concern
