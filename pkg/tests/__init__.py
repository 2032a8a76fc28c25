"""Test suite for rigid flow frames"""
