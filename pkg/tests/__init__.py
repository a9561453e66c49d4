"""Tests for anytime-cs."""
