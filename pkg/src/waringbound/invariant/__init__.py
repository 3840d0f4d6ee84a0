"""The mod-2 invariant and its verification suites."""
