# vim: set fileencoding=utf-8 :
"""Unit tests for qts"""
