"""Tests for nfoldkit."""
