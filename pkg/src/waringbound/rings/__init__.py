"""Waring constants of finite cyclic rings."""
