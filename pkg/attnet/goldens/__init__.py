"""Golden renderings of the reference tables (exact mode)."""
