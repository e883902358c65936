"""
异常定义
仿真、配置与命令行共用的错误层级
"""

from typing import Any, Optional


class FlexArmError(Exception):
    """所有 flexarm 异常的基类"""


class ConfigurationError(FlexArmError, ValueError):
    """配置非法（参数越界、未知字段、惯性矩阵奇异等）"""


class ContractViolation(FlexArmError, ValueError):
    """调用方违反了函数前置条件（如向量长度不一致）"""


class EmptyLogError(FlexArmError, ValueError):
    """对空序列计算指标或诊断"""


class UsageError(FlexArmError):
    """命令行用法错误"""


class IntegrationBlowupError(FlexArmError, ArithmeticError):
    """积分结果出现 NaN/Inf"""

    def __init__(self, message: str, state: Any = None, previous: Any = None):
        super().__init__(message)
        self.state = state
        self.previous = previous


class EpisodeAbortedError(FlexArmError, RuntimeError):
    """闭环仿真中途终止，携带已完成部分的日志"""

    def __init__(
        self,
        message: str,
        log: Any = None,
        step: int = 0,
        cause: Optional[BaseException] = None,
    ):
        super().__init__(message)
        self.log = log
        self.step = step
        self.cause = cause
