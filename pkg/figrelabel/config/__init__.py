"""
Configuration module
"""

from .settings import AppConfig, SaveRestoreMode, UnknownOperatorMode, VmConfig

__all__ = ['AppConfig', 'SaveRestoreMode', 'UnknownOperatorMode', 'VmConfig']
