"""
Core shared utilities for bibdedup.

Foundational logic used across modules: text primitives,
error hierarchy, defaults and run configuration.
"""
