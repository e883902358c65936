"""
柔性机械臂智能滑模控制 - 命令行入口

使用方法：
    python main.py run --config data/configs/default.json --out results/ --seed 7
    python main.py compare --out results/compare
    python main.py sweep --param controller.kappa --values 10,20,40 --jobs 3
    python main.py validate-config --config data/configs/analysis.json
"""

import asyncio
import os
import sys

# 添加项目路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from flexarm.cli import execute


async def main() -> int:
    return await execute(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(asyncio.run(main()))
