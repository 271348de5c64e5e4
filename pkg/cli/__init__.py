"""Command-line surface: instance specs, bounds reports and commands."""
