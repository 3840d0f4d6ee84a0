"""Certified lower bounds on the number of powers."""
