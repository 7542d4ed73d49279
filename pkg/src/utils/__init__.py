"""Utility package for the Hopf image toolkit."""
