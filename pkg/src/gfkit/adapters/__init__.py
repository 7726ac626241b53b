"""Adapters – command-line front end and presenters."""
