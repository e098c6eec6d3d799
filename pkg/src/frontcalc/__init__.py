"""Legendrian front calculus."""
