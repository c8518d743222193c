"""Computation services behind the command-line front end."""
