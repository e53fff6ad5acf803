"""Tests for helper modules"""
